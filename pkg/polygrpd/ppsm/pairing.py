"""
Weak poly-symplectic pairing on path space and the moment map of the gauge action.
"""
import logging
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import trapezoid

from ..utils import numdiff
from ..utils.helper import Helper, HelperMode, Item
from .gauge import gauge_vector_field
from .path import CotangentPath, GaugeParameter, PathVariation, anchors_along, frames_along

log = logging.getLogger('polygrpd')

HAMILTONIAN_PROBES = 20


class MomentConvention(Helper):
    """
    ``constraint``: H = ∫ β(dX + P_X(η)) dt, zero on the constraint set.
    ``split``: H = ∫ β(dX) dt − ∫ η(P_X(β)) dt.

    The two agree whenever η(P(β)) = −β(P(η)) on S.
    """
    mode = HelperMode.kebab_case

    CONSTRAINT = Item()
    SPLIT = Item()


def covector_variation(path: CotangentPath, variation: PathVariation) -> np.ndarray:
    """
    δη = Σ_a δλ_a σ_a(X) + Σ_a λ_a Dσ_a(X)·δX at every node, shape (N+1, r, n)
    """
    variation.check_grid(path)
    structure = path.structure
    frames = frames_along(structure, path.points)
    jacobians = np.array([structure.frame_jacobian(x) for x in path.points])
    return (np.einsum('ka,kain->kin', variation.coefficients, frames)
            + np.einsum('ka,kainj,kj->kin', path.coefficients, jacobians, variation.points))


def pairing(path: CotangentPath, first: PathVariation, second: PathVariation) -> np.ndarray:
    """
    ∫ (δ₁X·δ₂η − δ₂X·δ₁η) dt by the trapezoidal rule, one value per slot
    """
    first_eta = covector_variation(path, first)
    second_eta = covector_variation(path, second)
    integrand = (np.einsum('kn,kin->ki', first.points, second_eta)
                 - np.einsum('kn,kin->ki', second.points, first_eta))
    return trapezoid(integrand, path.times, axis=0)


def moment_map(path: CotangentPath, gauge: GaugeParameter,
               convention: str = MomentConvention.CONSTRAINT) -> np.ndarray:
    """
    H_β(X, η) in ℝ^r, with β = Σ_a μ_a σ_a(X)
    """
    gauge.check_grid(path)
    structure = path.structure
    frames = frames_along(structure, path.points)
    anchors = anchors_along(structure, path.points)
    beta = np.einsum('ka,kain->kin', gauge.coefficients, frames)
    velocity = numdiff.grid_derivative(path.points, path.times)
    if convention == MomentConvention.CONSTRAINT:
        drift = np.einsum('ka,kan->kn', path.coefficients, anchors)
        integrand = np.einsum('kin,kn->ki', beta, velocity + drift)
    elif convention == MomentConvention.SPLIT:
        eta = np.einsum('ka,kain->kin', path.coefficients, frames)
        beta_sharp = np.einsum('ka,kan->kn', gauge.coefficients, anchors)
        integrand = np.einsum('kin,kn->ki', beta, velocity) - np.einsum('kin,kn->ki', eta, beta_sharp)
    else:
        raise ValueError(f"Unknown moment-map convention {convention!r}, expected one of {MomentConvention.all()}")
    return trapezoid(integrand, path.times, axis=0)


def hamiltonian_identity_check(path: CotangentPath, gauge: GaugeParameter,
                               probes: Optional[Sequence[PathVariation]] = None,
                               rng: Optional[np.random.Generator] = None,
                               step: Optional[float] = None) -> float:
    """
    Compare pairing(ξ_β, v) with the central-difference derivative of H_β along v.

    The relative error of one probe is |lhs − rhs| / max(1, |lhs|, |rhs|)
    per slot.

    :return: worst relative error over the probes
    """
    if probes is None:
        rng = rng if rng is not None else np.random.default_rng(0)
        probes = [PathVariation.random(path, rng) for _ in range(HAMILTONIAN_PROBES)]
    step = step if step is not None else path.structure.fd_step
    field = gauge_vector_field(path, gauge)

    worst = 0.0
    for probe in probes:
        lhs = pairing(path, field, probe)
        rhs = (moment_map(path.displaced(probe, step), gauge)
               - moment_map(path.displaced(probe, -step), gauge)) / (2.0 * step)
        scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
        worst = max(worst, float(np.max(np.abs(lhs - rhs) / scale, initial=0.0)))
    log.debug("Hamiltonian identity on %r: worst relative error %.3e over %d probes",
              path.structure, worst, len(probes))
    return worst
