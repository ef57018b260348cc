"""Steinberg-style cross-section of the monodromy set.

The section is a product s(t) = (I + t_1 E_{r_1}) sigma_1 ... over the
adapted simple system (head block then tail block, in table order), where
each sigma_k is a signed transposition representing the reflection in r_k.
The signs need calibrating: the product sigma_1 ... sigma_n must equal the
cyclic shift matrix that the monodromy construction uses. Once calibrated,
the coefficient map chi (signed characteristic polynomial coefficients)
restricts to a bijection between section values and coefficient space, with
chi(s(t)) a signed relabeling of t.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    char_poly,
    cyclic_for,
    elementary,
    eigenvalues,
    match_multisets,
    max_abs,
)
from .roots import Root, table_supported_roots
from .stokes import build_m0, monodromy_support, random_stokes_params

__all__ = [
    "CalibrationError",
    "WeylRep",
    "SectionCalibration",
    "CrossSectionReport",
    "UnitaryConjugacyReport",
    "weyl_rep",
    "calibrate",
    "steinberg_section",
    "chi",
    "reconstruct_from_chi",
    "cross_section_check",
    "regular_centralizer_dim",
    "unitary_conjugacy_check",
]


class CalibrationError(RuntimeError):
    """No sign assignment makes the generator product match the shift."""


@dataclass(frozen=True)
class WeylRep:
    """Signed transposition representing the reflection in one root.

    With indices a < b, the default orientation puts +1 at (a, b) and -1 at
    (b, a); flipping swaps the two signs. Either choice represents the same
    Weyl group element.
    """

    n_plus_1: int
    root: Root
    flipped: bool = False

    def matrix(self) -> np.ndarray:
        i, j = self.root
        a, b = min(i, j), max(i, j)
        S = np.eye(self.n_plus_1)
        S[a, a] = S[b, b] = 0.0
        hi = -1.0 if self.flipped else 1.0
        S[a, b] = hi
        S[b, a] = -hi
        return S


def weyl_rep(n_plus_1: int, root: Root, flipped: bool = False) -> WeylRep:
    return WeylRep(n_plus_1, tuple(root), flipped)


@dataclass
class SectionCalibration:
    """Calibrated data of the cross-section for one size.

    ``signs[k]`` is +1 for the default generator orientation and -1 for the
    flipped one. ``chi_sources`` and ``chi_signs`` describe the relabeling
    chi(s(t))_k = chi_signs[k] * t[chi_sources[k]].
    """

    n_plus_1: int
    root_order: tuple[Root, ...]
    signs: tuple[int, ...]
    chi_sources: tuple[int, ...]
    chi_signs: tuple[int, ...]
    sigmas: list[np.ndarray] = field(repr=False)

    @property
    def flips(self) -> tuple[int, ...]:
        return tuple(k for k, s in enumerate(self.signs) if s < 0)

    @property
    def chi_permutation(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.chi_sources, self.chi_signs))

    def chi_of_t(self, t) -> np.ndarray:
        t = np.asarray(t)
        return np.array(
            [self.chi_signs[k] * t[self.chi_sources[k]] for k in range(len(t))]
        )

    def t_of_chi(self, e) -> np.ndarray:
        e = np.asarray(e, dtype=complex)
        t = np.zeros(len(e), dtype=complex)
        for k in range(len(e)):
            t[self.chi_sources[k]] = self.chi_signs[k] * e[k]
        return t


def _flip_candidates(n: int):
    """Deterministic search order: no flips, last-only, other singletons,
    then everything else by size."""
    yield ()
    if n >= 1:
        yield (n - 1,)
        for k in range(n - 1):
            yield (k,)
    for size in range(2, n + 1):
        yield from itertools.combinations(range(n), size)


def calibrate(n_plus_1: int, tol: Tolerance = DEFAULT_TOL) -> SectionCalibration:
    """Choose generator signs and learn the chi relabeling for one size.

    The root order is the head block followed by the tail block, both in
    table order. The flip search is deterministic, so the same size always
    yields the same calibration. The chi relabeling is probed on basis
    vectors and then verified on random ones; failure of either step raises
    CalibrationError.
    """
    head = table_supported_roots(n_plus_1, "head")
    tail = table_supported_roots(n_plus_1, "tail")
    order = tuple(head + tail)
    n = n_plus_1 - 1
    if len(order) != n:
        raise CalibrationError(
            f"simple system has {len(order)} roots, expected {n}"
        )
    target = cyclic_for(n_plus_1)

    chosen = None
    for flips in _flip_candidates(n):
        sigmas = [
            WeylRep(n_plus_1, order[k], k in flips).matrix() for k in range(n)
        ]
        prod = np.eye(n_plus_1)
        for s in sigmas:
            prod = prod @ s
        if np.array_equal(prod, target):
            chosen = (flips, sigmas)
            break
    if chosen is None:
        raise CalibrationError(
            f"no sign assignment matches the shift at size {n_plus_1}"
        )
    flips, sigmas = chosen
    signs = tuple(-1 if k in flips else 1 for k in range(n))

    cal = SectionCalibration(
        n_plus_1, order, signs, tuple(range(n)), tuple([1] * n), sigmas
    )

    # probe the relabeling on basis vectors of t-space
    sources = [-1] * n
    sgn = [0] * n
    for k in range(n):
        t = np.zeros(n)
        t[k] = 1.0
        e = chi(steinberg_section(cal, t))
        hits = [r for r in range(n) if abs(e[r]) > 0.5]
        if len(hits) != 1:
            raise CalibrationError(
                f"coefficient map is not a relabeling at size {n_plus_1}: "
                f"basis vector {k} produced {e}"
            )
        r = hits[0]
        val = complex(e[r])
        if abs(val - round(val.real)) > 1e-9 or round(val.real) not in (-1, 1):
            raise CalibrationError(
                f"coefficient map has non-unit weight {val} at size {n_plus_1}"
            )
        if max(abs(e[s]) for s in range(n) if s != r) > 1e-9:
            raise CalibrationError(
                f"coefficient map mixes coordinates at size {n_plus_1}"
            )
        sources[r] = k
        sgn[r] = int(round(val.real))
    if sorted(sources) != list(range(n)):
        raise CalibrationError(f"relabeling is not a bijection at size {n_plus_1}")

    cal = SectionCalibration(
        n_plus_1, order, signs, tuple(sources), tuple(sgn), sigmas
    )

    # verify on random coefficients
    rng = np.random.default_rng(0)
    for _ in range(3):
        t = rng.normal(size=n) + 1j * rng.normal(size=n)
        e = chi(steinberg_section(cal, t))
        err = max_abs(e - cal.chi_of_t(t))
        if err > tol.bound(max(1.0, max_abs(t))):
            raise CalibrationError(
                f"relabeling verification failed at size {n_plus_1} "
                f"(residual {err:.3e})"
            )
    return cal


def steinberg_section(cal: SectionCalibration, t) -> np.ndarray:
    """Section value s(t) = prod_k (I + t_k E_{root_k}) sigma_k."""
    t = np.asarray(t, dtype=complex)
    n = cal.n_plus_1 - 1
    if t.shape != (n,):
        raise ValueError(f"expected {n} coordinates, got shape {t.shape}")
    M = np.eye(cal.n_plus_1, dtype=complex)
    for k in range(n):
        i, j = cal.root_order[k]
        factor = np.eye(cal.n_plus_1, dtype=complex) + t[k] * elementary(
            cal.n_plus_1, i, j
        )
        M = M @ factor @ cal.sigmas[k]
    return M


def chi(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Signed characteristic coefficients (e_1, ..., e_n).

    With char poly mu^{n+1} - e_1 mu^n + e_2 mu^{n-1} - ..., this returns the
    e_k for k = 1..n, leaving out e_{n+1} which is pinned by det = 1. A
    determinant away from 1 triggers a warning, not an error, since chi is
    still well defined.
    """
    coeffs = char_poly(M)
    n1 = len(coeffs) - 1
    det = (-1) ** n1 * coeffs[0]
    if abs(det - 1.0) > tol.bound(max(1.0, abs(det))):
        warnings.warn(
            f"chi applied to a matrix with determinant {det}, expected 1",
            stacklevel=2,
        )
    return np.array([(-1) ** k * coeffs[n1 - k] for k in range(1, n1)])


def reconstruct_from_chi(cal: SectionCalibration, e) -> np.ndarray:
    """The unique section value with the given signed coefficients."""
    return steinberg_section(cal, cal.t_of_chi(e))


@dataclass
class CrossSectionReport:
    """Outcome of the two-sided section/monodromy comparison."""

    n_plus_1: int
    samples: int
    section_residual: float
    monodromy_residual: float
    passed: bool


def cross_section_check(
    cal: SectionCalibration,
    samples: int = 100,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> CrossSectionReport:
    """Sample both directions of the section/monodromy correspondence.

    Section direction: random t, the value s(t) must sit inside the
    monodromy support pattern and survive the chi roundtrip. Monodromy
    direction: random constrained Stokes coefficients, the fundamental
    monodromy must be reproduced exactly by the section at its own chi.
    """
    rng = np.random.default_rng(seed)
    n1 = cal.n_plus_1
    n = n1 - 1
    mask = monodromy_support(n1)
    worst_section = 0.0
    worst_monodromy = 0.0
    for _ in range(samples):
        t = rng.normal(size=n) + 1j * rng.normal(size=n)
        M = steinberg_section(cal, t)
        scale = max(1.0, max_abs(M))
        off = max_abs(M[~mask]) / scale
        rt = max_abs(reconstruct_from_chi(cal, chi(M)) - M) / scale
        worst_section = max(worst_section, off, rt)

        p = random_stokes_params(n1, rng)
        M0 = build_m0(p).matrix
        scale0 = max(1.0, max_abs(M0))
        back = reconstruct_from_chi(cal, chi(M0))
        worst_monodromy = max(worst_monodromy, max_abs(back - M0) / scale0)
    passed = worst_section <= tol.bound(1.0) * 10 and worst_monodromy <= tol.bound(1.0) * 10
    return CrossSectionReport(n1, samples, worst_section, worst_monodromy, passed)


def regular_centralizer_dim(M, rel_tol: float = 1e-9) -> int:
    """Dimension of the commutant of M, via the Sylvester operator's nullity.

    Regular elements of sl(n+1) in the group sense have commutant dimension
    exactly n+1.
    """
    M = np.asarray(M, dtype=complex)
    n1 = M.shape[0]
    L = np.kron(M, np.eye(n1)) - np.kron(np.eye(n1), M.T)
    s = np.linalg.svd(L, compute_uv=False)
    cutoff = rel_tol * max(1.0, float(s[0]))
    return int(np.sum(s < cutoff))


@dataclass
class UnitaryConjugacyReport:
    n_plus_1: int
    samples: int
    max_residual: float
    passed: bool


def unitary_conjugacy_check(
    n_plus_1: int,
    samples: int = 25,
    seed: int = 0,
    tol: Tolerance = DEFAULT_TOL,
) -> UnitaryConjugacyReport:
    """Conjugating a unitary by a suitably aligned non-unitary stays unitary.

    Construction: k1 = U D U* is unitary with distinct unimodular spectrum;
    g = V U diag(r) U* with V unitary and r positive non-unit moduli shares
    k1's eigenbasis up to V, so g k1 g^{-1} = V k1 V* must again be unitary
    with the same spectrum. Both facts are verified numerically.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        Z = rng.normal(size=(n_plus_1, n_plus_1)) + 1j * rng.normal(
            size=(n_plus_1, n_plus_1)
        )
        U, _ = np.linalg.qr(Z)
        # distinct angles, separated by construction
        base = np.sort(rng.uniform(0, 2 * np.pi, size=n_plus_1))
        angles = base + np.arange(n_plus_1) * 1e-2
        D = np.diag(np.exp(1j * angles))
        k1 = U @ D @ U.conj().T

        Z2 = rng.normal(size=(n_plus_1, n_plus_1)) + 1j * rng.normal(
            size=(n_plus_1, n_plus_1)
        )
        V, _ = np.linalg.qr(Z2)
        r = rng.uniform(0.5, 2.0, size=n_plus_1)
        g = V @ U @ np.diag(r) @ U.conj().T
        k2 = g @ k1 @ np.linalg.inv(g)

        unit_res = max_abs(k2 @ k2.conj().T - np.eye(n_plus_1))
        spec_res = match_multisets(
            eigenvalues(k2, Tolerance(1e-7, 1e-7)),
            np.diag(D),
            Tolerance(1e-7, 1e-7),
        )
        worst = max(worst, unit_res, spec_res)
    return UnitaryConjugacyReport(n_plus_1, samples, worst, worst < 1e-8)
