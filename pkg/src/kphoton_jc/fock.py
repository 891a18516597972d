"""Truncated single-mode Fock space and its ladder operators.

All operators act on the number states ``|0>, ..., |dim-1>`` and are returned
as dense complex ``numpy`` arrays. Truncation spoils some identities near the
top of the space; for an operator that raises by ``k`` quanta the results are
exact on the *safe window* ``n <= dim - 1 - k``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class FockSpace:
    """Number states ``|0>`` .. ``|dim-1>`` of one bosonic mode."""

    dim: int

    def __post_init__(self):
        if not isinstance(self.dim, (int, np.integer)) or self.dim < 1:
            raise ValueError(f"dim must be a positive integer, got {self.dim!r}")

    def safe_window(self, k: int) -> range:
        """Indices ``n`` for which ``|n+k>`` is still inside the space."""
        return range(0, max(self.dim - k, 0))

    def basis(self, n: int) -> np.ndarray:
        if not 0 <= n < self.dim:
            raise IndexError(f"number state {n} outside dim={self.dim}")
        ket = np.zeros(self.dim, dtype=complex)
        ket[n] = 1.0
        return ket

    def require(self, k: int) -> None:
        """Check the space is large enough for a k-photon model (``dim >= k + 2``)."""
        if self.dim < k + 2:
            raise ValueError(f"dim={self.dim} too small for k={k}; need dim >= {k + 2}")


def _check_order(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError(f"photon order k must be a positive integer, got {k!r}")


def annihilation(space: FockSpace) -> np.ndarray:
    n = np.arange(1, space.dim)
    a = np.zeros((space.dim, space.dim), dtype=complex)
    a[n - 1, n] = np.sqrt(n)
    return a


def creation(space: FockSpace) -> np.ndarray:
    return annihilation(space).conj().T


def number_operator(space: FockSpace) -> np.ndarray:
    return np.diag(np.arange(space.dim)).astype(complex)


def ladder_power(space: FockSpace, k: int, dagger: bool = False) -> np.ndarray:
    """``a**k`` (or ``(a^dagger)**k`` when ``dagger``) by repeated multiplication."""
    _check_order(k)
    base = creation(space) if dagger else annihilation(space)
    return np.linalg.matrix_power(base, k)


def antinormal_product(space: FockSpace, k: int) -> np.ndarray:
    """``a^k (a^dagger)^k`` as a diagonal matrix.

    The entry on ``|n>`` is ``(n+k)!/n!`` inside the safe window. Above it the
    truncated product is zero, and so is this matrix; see
    :func:`truncation_flags` for the affected indices.
    """
    _check_order(k)
    diag = np.zeros(space.dim, dtype=complex)
    for n in space.safe_window(k):
        diag[n] = math.perm(n + k, k)
    return np.diag(diag)


def normal_product(space: FockSpace, k: int) -> np.ndarray:
    """``(a^dagger)^k a^k``: ``n!/(n-k)!`` on ``|n>``, exactly zero for ``n < k``."""
    _check_order(k)
    diag = np.array([math.perm(n, k) if n >= k else 0 for n in range(space.dim)], dtype=complex)
    return np.diag(diag)


def truncation_flags(space: FockSpace, k: int) -> np.ndarray:
    """Boolean mask over number states: True where a k-quantum raise leaves the space."""
    _check_order(k)
    flags = np.ones(space.dim, dtype=bool)
    flags[list(space.safe_window(k))] = False
    return flags


def pseudo_inverse_creation(space: FockSpace, k: int, ordering: str = "antinormal") -> np.ndarray:
    """One-sided inverse of ``(a^dagger)^k``.

    Two variants exist because no single matrix satisfies both identities
    used when the operator is inverted in different orderings:

    ``"antinormal"``
        ``(a^dagger)^k P = 1`` on every ``|m>`` with ``m >= k`` (the kernel
        ``m < k`` is sent to zero), and ``P (a^dagger)^k = 1`` on the safe
        window.
    ``"normal"``
        ``P (a^dagger)^k = 1 - sum_{m<k} |m><m|`` on the safe window; the
        columns ``k <= j < 2k`` are zero.

    Both are supported only on ``<n| <- |n+k>`` transitions with weight
    ``sqrt(n!/(n+k)!)``.
    """
    _check_order(k)
    if space.dim <= k:
        raise ValueError(f"dim={space.dim} must exceed k={k} for a pseudo-inverse")
    if ordering not in ("antinormal", "normal"):
        raise ValueError(f"unknown ordering {ordering!r}")
    start = 0 if ordering == "antinormal" else k
    p = np.zeros((space.dim, space.dim), dtype=complex)
    for n in range(start, space.dim - k):
        p[n, n + k] = 1.0 / math.sqrt(math.perm(n + k, k))
    return p


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x
