import math

import numpy as np
import pytest

from kphoton_jc import fock
from kphoton_jc.fock import FockSpace


def ket(n, dim):
    v = np.zeros(dim, dtype=complex)
    v[n] = 1.0
    return v


def test_annihilation_dim2():
    np.testing.assert_array_equal(fock.annihilation(FockSpace(2)), [[0, 1], [0, 0]])


def test_annihilation_lowers():
    a = fock.annihilation(FockSpace(4))
    np.testing.assert_allclose(a @ ket(3, 4), math.sqrt(3) * ket(2, 4), atol=1e-15)


def test_creation_is_adjoint():
    sp = FockSpace(7)
    np.testing.assert_array_equal(fock.creation(sp), fock.annihilation(sp).conj().T)


def test_number_operator_from_ladders():
    sp = FockSpace(16)
    a = fock.annihilation(sp)
    n_op = a.conj().T @ a
    for n in range(16):
        assert n_op[n, n] == pytest.approx(n, abs=1e-13)


def test_commutator_away_from_edge():
    sp = FockSpace(20)
    a = fock.annihilation(sp)
    c = fock.commutator(a, fock.creation(sp)) - np.eye(20)
    assert np.max(np.abs(c[:-1, :-1])) <= 1e-13
    # truncation breaks it only at the last index: [a, a^dag]_{dim-1} = -(dim-1)
    assert c[-1, -1] == pytest.approx(-20.0)


def test_ladder_power_examples():
    sp = FockSpace(4)
    np.testing.assert_allclose(
        fock.ladder_power(sp, 2, dagger=True) @ ket(0, 4), math.sqrt(2) * ket(2, 4), atol=1e-15
    )
    np.testing.assert_array_equal(fock.ladder_power(sp, 1), fock.annihilation(sp))
    # sqrt(5) sqrt(4) sqrt(3) = sqrt(60)
    a3 = fock.ladder_power(FockSpace(8), 3)
    np.testing.assert_allclose(a3 @ ket(5, 8), math.sqrt(60) * ket(2, 8), atol=1e-13)


@pytest.mark.parametrize("bad", [0, -1, 1.5])
def test_ladder_power_rejects_bad_order(bad):
    with pytest.raises(ValueError):
        fock.ladder_power(FockSpace(4), bad)


def test_antinormal_product_values():
    sp = FockSpace(10)
    assert fock.antinormal_product(sp, 1)[4, 4] == 5
    assert fock.antinormal_product(sp, 2)[0, 0] == 2
    assert fock.antinormal_product(sp, 3)[2, 2] == 60  # 5!/2!


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_antinormal_matches_products_on_safe_window(k):
    sp = FockSpace(24)
    brute = fock.ladder_power(sp, k) @ fock.ladder_power(sp, k, dagger=True)
    closed = fock.antinormal_product(sp, k)
    w = list(sp.safe_window(k))
    np.testing.assert_allclose(closed[np.ix_(w, w)], brute[np.ix_(w, w)], rtol=1e-13)
    flags = fock.truncation_flags(sp, k)
    assert flags.sum() == k and flags[-k:].all()
    # closed form of (n+k)!/n! against an explicit factorial ratio
    for n in w:
        assert closed[n, n] == math.factorial(n + k) // math.factorial(n)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_normal_matches_products_everywhere(k):
    sp = FockSpace(24)
    brute = fock.ladder_power(sp, k, dagger=True) @ fock.ladder_power(sp, k)
    np.testing.assert_allclose(fock.normal_product(sp, k), brute, rtol=1e-13, atol=0)


def test_normal_product_examples():
    sp = FockSpace(8)
    n2 = fock.normal_product(sp, 2)
    assert n2[0, 0] == 0 and n2[1, 1] == 0
    assert n2[2, 2] == 2
    assert fock.normal_product(sp, 1)[5, 5] == 5


def test_pseudo_inverse_examples():
    sp = FockSpace(6)
    ad2 = fock.ladder_power(sp, 2, dagger=True)
    p_norm = fock.pseudo_inverse_creation(sp, 2, "normal")
    p_anti = fock.pseudo_inverse_creation(sp, 2, "antinormal")
    np.testing.assert_allclose(p_norm @ ad2 @ ket(1, 6), 0, atol=1e-15)
    np.testing.assert_allclose(ad2 @ p_anti @ ket(3, 6), ket(3, 6), atol=1e-15)
    p1 = fock.pseudo_inverse_creation(FockSpace(4), 1)
    np.testing.assert_allclose(p1 @ ket(2, 4), ket(1, 4) / math.sqrt(2), atol=1e-15)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pseudo_inverse_identities(k):
    dim = 32
    sp = FockSpace(dim)
    adk = fock.ladder_power(sp, k, dagger=True)
    eye = np.eye(dim)
    p_anti = fock.pseudo_inverse_creation(sp, k, "antinormal")
    p_norm = fock.pseudo_inverse_creation(sp, k, "normal")
    upper = list(range(k, dim))
    window = list(sp.safe_window(k))
    assert np.max(np.abs((adk @ p_anti - eye)[:, upper])) <= 1e-13
    # the anti-normal variant is also a left inverse on the whole safe window
    assert np.max(np.abs((p_anti @ adk - eye)[:, window])) <= 1e-13
    target = eye.copy()
    target[:k, :k] = 0
    assert np.max(np.abs((p_norm @ adk - target)[:, window])) <= 1e-13


@pytest.mark.parametrize("k", [1, 2, 3])
def test_pseudo_inverse_variants_differ_only_on_kernel_image(k):
    # the two identities cannot share one matrix: they disagree on columns k..2k-1
    sp = FockSpace(16)
    diff = fock.pseudo_inverse_creation(sp, k, "antinormal") - fock.pseudo_inverse_creation(
        sp, k, "normal"
    )
    cols = np.flatnonzero(np.any(diff != 0, axis=0))
    np.testing.assert_array_equal(cols, np.arange(k, 2 * k))


def test_pseudo_inverse_requires_room():
    with pytest.raises(ValueError):
        fock.pseudo_inverse_creation(FockSpace(2), 2)
    with pytest.raises(ValueError):
        fock.pseudo_inverse_creation(FockSpace(8), 2, "weyl")


def test_space_validation():
    with pytest.raises(ValueError):
        FockSpace(0)
    with pytest.raises(ValueError):
        FockSpace(3).require(2)
    FockSpace(4).require(2)
