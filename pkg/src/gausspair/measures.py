"""Fidelity and Bures-distance machinery and the pictorial entanglement degree.

For Gaussian states with at least one pure party the overlap trace is an
inverse square-root determinant of the summed covariances, which is all the
fidelity needed here: references are always pure.  The entanglement degree
compares the Bures distance of a state from the twin-beam squeezed reference
against the distance of the correlation-free (traced-out) reference, scaled
so the reference itself scores 1 and the correlation-free state scores 0.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .classicality import ModeParams
from .covariance import DEFAULT_TOL, GaussianParams, build_covariance, is_physical, is_separable
from .errors import DegenerateStateError, NonPhysicalStateError, NumericDomainError


@dataclass(frozen=True)
class ReferenceStates:
    """Pure reference family at squeezing ``r``.

    ``tmsv`` is the twin-beam (two-mode) squeezed vacuum, ``sep`` the same
    occupations with the correlations removed (one party traced out), and
    ``omss`` the one-mode squeezed state with matching moments.  The ratio
    ``lam = tanh(r)`` is the Fock-series weight of the twin-beam state.
    """

    r: float
    lam: float
    tmsv: GaussianParams
    sep: GaussianParams
    omss: ModeParams

    @classmethod
    def for_squeezing(cls, r: float) -> "ReferenceStates":
        r = float(r)
        if not math.isfinite(r) or r < 0.0:
            raise ValueError("squeezing parameter must be finite and nonnegative")
        n = 0.5 * math.cosh(2.0 * r)
        m = -0.5 * math.sinh(2.0 * r)
        return cls(
            r=r,
            lam=math.tanh(r),
            tmsv=GaussianParams(n1=n, n2=n, m_c=m),
            sep=GaussianParams(n1=n, n2=n),
            omss=ModeParams(n=n, m=m),
        )


@dataclass(frozen=True)
class MeasureReport:
    """Fidelity, Bures distance, entanglement degree and classification flags."""

    fidelity: float
    bures: float
    degree: float
    physical: bool
    separable: bool


def trace_overlap(va: np.ndarray, vb: np.ndarray) -> float:
    """Overlap trace of two Gaussian states from their covariance matrices.

    Returns ``1/sqrt(det(va + vb))`` in this covariance convention.  Equals
    the Uhlmann fidelity only when at least one of the states is pure, which
    is the caller's contract.  Works for one-mode (2x2) and two-mode (4x4)
    matrices of equal size.
    """
    va = np.asarray(va, dtype=complex)
    vb = np.asarray(vb, dtype=complex)
    if va.shape != vb.shape or va.shape not in {(2, 2), (4, 4)}:
        raise ValueError("need two covariance matrices of equal shape (2x2 or 4x4)")
    det = np.linalg.det(va + vb)
    if abs(det.imag) > 1e-9 * max(1.0, abs(det)):
        raise NumericDomainError("overlap determinant is not real")
    if det.real <= 0.0:
        raise NumericDomainError("overlap determinant is not positive")
    return 1.0 / math.sqrt(det.real)


def output_port_fidelity(md: ModeParams, r: float) -> float:
    """Closed-form fidelity of an output-port mode against the squeezed reference.

    Evaluates ``[n^2 - |m|^2 + n cosh(2r) + Re(m) sinh(2r) + 1/4]^(-1/2)``,
    which is the determinant overlap against the reference mode written out;
    with the port moment phase-aligned to real ``|m|`` this is the standard
    scalar form.
    """
    c2 = math.cosh(2.0 * r)
    s2 = math.sinh(2.0 * r)
    bracket = md.n ** 2 - abs(md.m) ** 2 + md.n * c2 + md.m.real * s2 + 0.25
    if bracket <= 0.0:
        raise NumericDomainError("fidelity bracket is not positive")
    return 1.0 / math.sqrt(bracket)


def bures_from_fidelity(f: float) -> float:
    """Bures distance ``2 - 2 sqrt(F)`` for a fidelity in (0, 1]."""
    f = float(f)
    if 1.0 < f <= 1.0 + 1e-12:
        f = 1.0
    if not 0.0 < f <= 1.0:
        raise NumericDomainError("fidelity must lie in (0, 1]")
    return 2.0 - 2.0 * math.sqrt(f)


def compose_bures(d1: float, d2: float) -> float:
    """Combine per-port Bures distances into the joint one.

    ``d1 + d2 - d1*d2/2``, the image of fidelity multiplication under
    ``d = 2 - 2 sqrt(F)``; with one distance zero (an untouched port) the
    other passes through unchanged.
    """
    return d1 + d2 - 0.5 * d1 * d2


def entanglement_degree(
    p: GaussianParams, r: float, tol: float = DEFAULT_TOL
) -> MeasureReport:
    """Entanglement degree of a physical state against the squeezing-``r`` references.

    The reference correlation phase is rotated onto the state's, so the two
    anomalous cross moments add coherently and the result does not depend on
    an arbitrary phase convention.  The degree is 1 minus the ratio of the
    state's Bures distance from the twin-beam reference to the traced-out
    reference's distance; it is reported even when negative.
    """
    if not is_physical(p, tol):
        raise NonPhysicalStateError("entanglement degree requires a physical state")
    if r <= 0.0:
        raise DegenerateStateError("zero squeezing collapses the separable normalizer")
    refs = ReferenceStates.for_squeezing(r)
    phase = cmath.phase(p.m_c) if p.m_c != 0 else 0.0
    sigma = GaussianParams(
        n1=refs.tmsv.n1,
        n2=refs.tmsv.n2,
        m_c=abs(refs.tmsv.m_c) * cmath.exp(1j * phase),
    )
    fid = trace_overlap(build_covariance(p), build_covariance(sigma))
    fid_sep = trace_overlap(build_covariance(refs.sep), build_covariance(refs.tmsv))
    d_state = bures_from_fidelity(fid)
    d_sep = bures_from_fidelity(fid_sep)
    return MeasureReport(
        fidelity=fid,
        bures=d_state,
        degree=1.0 - d_state / d_sep,
        physical=True,
        separable=is_separable(p, tol),
    )
