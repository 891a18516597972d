"""su(2) in the Pauli realization, the SU(2) displacement and tilting.

Conventions: ``J0 = sigma_0 / 2``, ``J+ = sigma_+``, ``J- = sigma_-`` with the
first basis vector the upper (excited) level. The displacement operator is
``D(xi) = exp(xi J+ - conj(xi) J-)`` with ``xi = -(theta/2) exp(-i varphi)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class TiltParams:
    """Coherent-state parameters of an SU(2) displacement.

    Only ``theta`` and ``varphi`` are stored; the derived quantities follow
    from them.
    """

    theta: float
    varphi: float = 0.0

    @property
    def xi(self) -> complex:
        return -0.5 * self.theta * cmath.exp(-1j * self.varphi)

    @property
    def zeta(self) -> complex:
        return -math.tan(0.5 * self.theta) * cmath.exp(-1j * self.varphi)

    @property
    def eta(self) -> float:
        return math.log1p(abs(self.zeta) ** 2)

    @property
    def delta(self) -> float:
        return math.sin(2.0 * abs(self.xi))

    @property
    def epsilon(self) -> float:
        return 0.5 * (math.cos(2.0 * abs(self.xi)) - 1.0)

    @property
    def direction(self) -> complex:
        """``xi / |xi|``; undefined at ``xi = 0``."""
        xi = self.xi
        if xi == 0:
            raise ValueError("xi = 0 has no direction; the transformation is the identity")
        return xi / abs(xi)


def pauli_realization() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return ``(J0, J+, J-)`` as 2x2 complex matrices."""
    j0 = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex)
    jp = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
    jm = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
    return j0, jp, jm


def displacement_matrix(tilt: TiltParams) -> np.ndarray:
    """Closed-form 2x2 ``D(xi)``; the identity when ``xi = 0``."""
    r = abs(tilt.xi)
    if r == 0.0:
        return np.eye(2, dtype=complex)
    u = tilt.direction
    c, s = math.cos(r), math.sin(r)
    return np.array([[c, u * s], [-u.conjugate() * s, c]], dtype=complex)


def tilt_generator(which: str, tilt: TiltParams) -> np.ndarray:
    """``D^dagger J D`` for ``which`` in ``{"J0", "J+", "J-"}``, from the closed-form identities.

    The result is expressed as a combination of the untransformed generators
    with coefficients built from ``delta``, ``epsilon`` and ``xi/|xi|``.
    Raises ``ValueError`` for ``xi = 0``.
    """
    u = tilt.direction
    d, e = tilt.delta, tilt.epsilon
    j0, jp, jm = pauli_realization()
    if which == "J+":
        return -u.conjugate() * d * j0 + e * (jp + (u.conjugate() / u) * jm) + jp
    if which == "J-":
        return -u * d * j0 + e * (jm + (u / u.conjugate()) * jp) + jm
    if which == "J0":
        return (2 * e + 1) * j0 + 0.5 * d * u * jp + 0.5 * d * u.conjugate() * jm
    raise ValueError(f"unknown generator {which!r}")


def gauss_decompose(tilt: TiltParams) -> tuple[complex, float]:
    """Normal-form parameters ``(zeta, eta)`` with ``D = e^{zeta J+} e^{eta J0} e^{-zeta* J-}``."""
    if not -math.pi < tilt.theta < math.pi:
        raise ValueError(f"theta={tilt.theta} outside (-pi, pi); tan(theta/2) diverges")
    return tilt.zeta, tilt.eta


def gauss_product(zeta: complex, eta: float) -> np.ndarray:
    """Evaluate ``e^{zeta J+} e^{eta J0} e^{-conj(zeta) J-}`` in the 2x2 realization.

    ``J+`` and ``J-`` are nilpotent and ``J0`` diagonal, so each factor is exact.
    """
    upper = np.array([[1.0, zeta], [0.0, 1.0]], dtype=complex)
    middle = np.diag([math.exp(0.5 * eta), math.exp(-0.5 * eta)]).astype(complex)
    lower = np.array([[1.0, 0.0], [-zeta.conjugate(), 1.0]], dtype=complex)
    return upper @ middle @ lower


def _two_j(j) -> int:
    tj = Fraction(j) * 2
    if tj.denominator != 1 or tj < 0:
        raise ValueError(f"j must be a non-negative half-integer, got {j!r}")
    return int(tj)


def spin_operators(j) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(J0, J+, J-)`` on the ``2j+1`` kets ``|j, m>`` ordered ``m = -j .. j``."""
    tj = _two_j(j)
    jf = tj / 2
    m = -jf + np.arange(tj + 1)
    j0 = np.diag(m).astype(complex)
    jp = np.zeros((tj + 1, tj + 1), dtype=complex)
    for i in range(tj):
        jp[i + 1, i] = math.sqrt((jf - m[i]) * (jf + m[i] + 1))
    return j0, jp, jp.conj().T


@dataclass(frozen=True)
class PerelomovState:
    j: Fraction
    mu: Fraction
    zeta: complex
    coefficients: np.ndarray  # amplitude on |j, m>, m = -j .. j

    @property
    def m_values(self) -> list[Fraction]:
        return [-self.j + i for i in range(len(self.coefficients))]


def perelomov_number_state(j, mu, zeta: complex) -> PerelomovState:
    """Number coherent state ``D(xi)|j, mu>`` in the ``|j, m>`` basis.

    Evaluates the Gaussian-decomposed double sum over lowering steps ``n``
    and raising steps ``s``. Only terms where every factorial argument is a
    non-negative integer contribute, i.e. ``0 <= n <= j + mu`` and
    ``0 <= s <= j - mu + n``. The result is renormalized afterwards.
    """
    tj = _two_j(j)
    jj = Fraction(tj, 2)
    mu = Fraction(mu)
    if (mu - jj).denominator != 1 or abs(mu) > jj:
        raise ValueError(f"mu={mu} is not one of -j..j for j={jj}")
    zeta = complex(zeta)
    eta = math.log1p(abs(zeta) ** 2)
    up = int(jj + mu)  # j + mu
    down = int(jj - mu)  # j - mu
    fact = math.factorial

    coeffs = np.zeros(tj + 1, dtype=complex)
    for n in range(up + 1):
        outer = (-zeta.conjugate()) ** n / fact(n) * math.exp(eta * (float(mu) - n))
        outer *= fact(down + n) / fact(up - n)
        for s in range(down + n + 1):
            weight = math.sqrt(fact(up) * fact(up - n + s) / (fact(down) * fact(down + n - s)))
            coeffs[up - n + s] += zeta**s / fact(s) * outer * weight

    norm = np.linalg.norm(coeffs)
    return PerelomovState(jj, mu, zeta, coeffs / norm)


def perelomov_coherent_coefficients(j, zeta: complex) -> np.ndarray:
    """Closed-form amplitudes of ``D(xi)|j, -j>`` on ``m = -j .. j``."""
    tj = _two_j(j)
    zeta = complex(zeta)
    pref = (1.0 + abs(zeta) ** 2) ** (-tj / 2)
    return np.array(
        [math.sqrt(math.comb(tj, i)) * pref * zeta**i for i in range(tj + 1)], dtype=complex
    )
