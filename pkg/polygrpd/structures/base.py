"""
Poly-Poisson structures on one chart.

A structure is given by a frame σ_1..σ_K of S (callable x -> (K, r, n)) and
the anchor vectors v_a = P(σ_a) (callable x -> (K, n)). Derivatives are
central differences unless a constructor installs analytic ones:

    frame_jacobian(x)[a, i, k, j] = ∂_j σ_{a,i,k}
    anchor_jacobian(x)[a, m, j] = ∂_j v_a^m
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..polyspace import CotupleSubspace, Subspace
from ..utils import exceptions, linalg, numdiff, workers
from ..utils.checks import CheckResult
from ..utils.tolerances import DEFAULT, Tolerances
from .chart import Chart

log = logging.getLogger('polygrpd')

ArrayFunction = Callable[[np.ndarray], np.ndarray]

#: structure functions are differenced with this multiple of the chart step
JACOBI_STEP_FACTOR = 10


class PolyPoissonStructure:
    """
    Poly-Poisson structure (S, P) of order r over a chart
    """

    def __init__(self, chart: Chart, order: int, frame: ArrayFunction, anchor: ArrayFunction,
                 name: str = '', *,
                 frame_jacobian: Optional[ArrayFunction] = None,
                 anchor_jacobian: Optional[ArrayFunction] = None,
                 kind: str = '',
                 algebra=None,
                 factors: Sequence['PolyPoissonStructure'] = (),
                 form: Optional[ArrayFunction] = None,
                 tolerances: Tolerances = DEFAULT):
        if order < 1:
            raise ValueError('Order must be at least 1')
        self.chart = chart
        self.order = int(order)
        self.name = name
        self.kind = kind or name
        self.algebra = algebra
        self.factors = tuple(factors)
        #: x -> (r, n, n) components of ω for poly-symplectic structures
        self.form = form
        self.tolerances = tolerances
        self._frame = frame
        self._anchor = anchor
        self._frame_jacobian = frame_jacobian
        self._anchor_jacobian = anchor_jacobian

        sample = self.frame_at(chart.center)
        if sample.ndim != 3 or sample.shape[1:] != (self.order, chart.dim):
            raise ValueError(f"Frame must have shape (K, {self.order}, {chart.dim}), got {sample.shape}")
        self.size = sample.shape[0]
        anchor_sample = self.anchor_at(chart.center)
        if anchor_sample.shape != (self.size, chart.dim):
            raise ValueError(f"Anchor must have shape ({self.size}, {chart.dim}), got {anchor_sample.shape}")

    @property
    def dim(self) -> int:
        return self.chart.dim

    @property
    def fd_step(self) -> float:
        return self.chart.fd_step

    @property
    def has_analytic_derivatives(self) -> bool:
        return self._frame_jacobian is not None and self._anchor_jacobian is not None

    def frame_at(self, x) -> np.ndarray:
        return np.asarray(self._frame(np.asarray(x, dtype=float)), dtype=float)

    def anchor_at(self, x) -> np.ndarray:
        return np.asarray(self._anchor(np.asarray(x, dtype=float)), dtype=float)

    def sections_at(self, x) -> CotupleSubspace:
        return CotupleSubspace(self.frame_at(x), self.order, self.dim, rtol=self.tolerances.rank_rtol)

    def numeric_frame_jacobian(self, x) -> np.ndarray:
        return numdiff.jacobian(self.frame_at, x, self.fd_step, check=self.chart.check)

    def numeric_anchor_jacobian(self, x) -> np.ndarray:
        return numdiff.jacobian(self.anchor_at, x, self.fd_step, check=self.chart.check)

    def frame_jacobian(self, x) -> np.ndarray:
        if self._frame_jacobian is None:
            return self.numeric_frame_jacobian(x)
        return np.asarray(self._frame_jacobian(np.asarray(x, dtype=float)), dtype=float)

    def anchor_jacobian(self, x) -> np.ndarray:
        if self._anchor_jacobian is None:
            return self.numeric_anchor_jacobian(x)
        return np.asarray(self._anchor_jacobian(np.asarray(x, dtype=float)), dtype=float)

    def coefficients(self, eta, x) -> Tuple[np.ndarray, float]:
        """
        Frame coordinates of η ∈ ⊕_r T*_x M and the least-squares residual
        """
        frame = self.frame_at(x)
        return linalg.lstsq(frame.reshape(self.size, -1).T, np.asarray(eta, dtype=float).reshape(-1))

    def sharp(self, eta, x) -> np.ndarray:
        """
        P(η) for η ∈ S_x

        :raise NotAdmissible: if η is not in S_x within the admissibility tolerance
        """
        coefficients, residual = self.coefficients(eta, x)
        tolerance = self.tolerances.adm * max(1.0, float(np.max(np.abs(eta), initial=0.0)))
        if residual > tolerance:
            raise exceptions.NotAdmissible('Covector tuple is not in S').with_residual(residual, tolerance)
        return coefficients @ self.anchor_at(x)

    def distribution_at(self, x, rtol=None) -> np.ndarray:
        """
        Orthonormal basis (columns) of the characteristic distribution P(S_x)
        """
        return linalg.orth(self.anchor_at(x).T, rows=self.dim, rtol=rtol or self.tolerances.rank_rtol)

    def restrict_frame(self, indices: Sequence[int], name: str = '') -> 'PolyPoissonStructure':
        """
        Structure spanned by a subset of the frame
        """
        indices = list(indices)
        frame, anchor = self._frame, self._anchor
        frame_jacobian, anchor_jacobian = self._frame_jacobian, self._anchor_jacobian
        return PolyPoissonStructure(
            self.chart, self.order,
            lambda x: np.asarray(frame(x))[indices],
            lambda x: np.asarray(anchor(x))[indices],
            name or f"{self.name}[{','.join(map(str, indices))}]",
            frame_jacobian=None if frame_jacobian is None else (lambda x: np.asarray(frame_jacobian(x))[indices]),
            anchor_jacobian=None if anchor_jacobian is None else (lambda x: np.asarray(anchor_jacobian(x))[indices]),
            kind=self.kind,
            tolerances=self.tolerances,
        )

    def with_anchor(self, anchor: ArrayFunction, name: str = '',
                    anchor_jacobian: Optional[ArrayFunction] = None) -> 'PolyPoissonStructure':
        return PolyPoissonStructure(
            self.chart, self.order, self._frame, anchor, name or self.name,
            frame_jacobian=self._frame_jacobian,
            anchor_jacobian=anchor_jacobian,
            kind=self.kind,
            algebra=self.algebra,
            tolerances=self.tolerances,
        )

    def with_tolerances(self, tolerances: Tolerances) -> 'PolyPoissonStructure':
        return PolyPoissonStructure(
            self.chart, self.order, self._frame, self._anchor, self.name,
            frame_jacobian=self._frame_jacobian,
            anchor_jacobian=self._anchor_jacobian,
            kind=self.kind,
            algebra=self.algebra,
            factors=self.factors,
            form=self.form,
            tolerances=tolerances,
        )

    def __repr__(self):
        return f"<PolyPoissonStructure {self.name!r} n={self.dim} r={self.order} K={self.size}>"


class Section:
    """
    Section of ⊕_r T*M: x -> (r, n), with an optional analytic Jacobian (r, n, n)
    """

    def __init__(self, value: ArrayFunction, jacobian: Optional[ArrayFunction] = None):
        self._value = value
        self._jacobian = jacobian

    @classmethod
    def frame_element(cls, structure: PolyPoissonStructure, index: int) -> 'Section':
        return cls(lambda x: structure.frame_at(x)[index], lambda x: structure.frame_jacobian(x)[index])

    @classmethod
    def constant(cls, rows) -> 'Section':
        rows = np.asarray(rows, dtype=float)
        return cls(lambda x: rows, lambda x: np.zeros(rows.shape + (rows.shape[1],)))

    def value(self, x) -> np.ndarray:
        return np.asarray(self._value(np.asarray(x, dtype=float)), dtype=float)

    def jacobian(self, x, step: float, check=None) -> np.ndarray:
        if self._jacobian is not None:
            return np.asarray(self._jacobian(np.asarray(x, dtype=float)), dtype=float)
        return numdiff.jacobian(self.value, x, step, check=check)


class AdmissibleFunction:
    """
    Function M -> ℝ^r; admissible for a structure when dh(x) ∈ S_x
    """

    def __init__(self, value: Callable[[np.ndarray], np.ndarray],
                 gradient: Optional[ArrayFunction] = None, name: str = ''):
        self._value = value
        self._gradient = gradient
        self.name = name

    def __call__(self, x) -> np.ndarray:
        return np.atleast_1d(np.asarray(self._value(np.asarray(x, dtype=float)), dtype=float))

    def gradient(self, x, step: float, check=None) -> np.ndarray:
        """
        Rows dh_1, ..., dh_r at x
        """
        if self._gradient is not None:
            return np.asarray(self._gradient(np.asarray(x, dtype=float)), dtype=float)
        return numdiff.jacobian(self, x, step, check=check)

    def residual(self, structure: PolyPoissonStructure, x) -> float:
        gradient = self.gradient(x, structure.fd_step, structure.chart.check)
        return structure.coefficients(gradient, x)[1]

    def is_admissible(self, structure: PolyPoissonStructure, x) -> bool:
        return self.residual(structure, x) <= structure.tolerances.adm

    def __mul__(self, other: 'AdmissibleFunction') -> 'AdmissibleFunction':
        return AdmissibleFunction(lambda x: self(x) * other(x), name=f"({self.name})*({other.name})")

    def __repr__(self):
        return f"<AdmissibleFunction {self.name!r}>"


def _sharp_field(structure: PolyPoissonStructure, section: Section) -> ArrayFunction:
    return lambda y: structure.sharp(section.value(y), y)


def bracket(structure: PolyPoissonStructure, eta: Section, gamma: Section, x) -> np.ndarray:
    """
    ⌊η, γ⌋ = L_{P(η)} γ − i_{P(γ)} dη at x, slot by slot.

    With X = P(η) and Y = P(γ):
    (L_X γ)_k = X^j ∂_j γ_k + γ_m ∂_k X^m and (i_Y dη)_k = Y^j (∂_j η_k − ∂_k η_j).

    :raise OutOfBox: if a difference stencil leaves the chart box
    :return: array (r, n)
    """
    x = np.asarray(x, dtype=float)
    step, check = structure.fd_step, structure.chart.check
    check(x)
    big_x = structure.sharp(eta.value(x), x)
    big_y = structure.sharp(gamma.value(x), x)
    d_big_x = numdiff.jacobian(_sharp_field(structure, eta), x, step, check=check)
    d_eta = eta.jacobian(x, step, check)
    d_gamma = gamma.jacobian(x, step, check)
    gamma_x = gamma.value(x)

    lie = np.einsum('j,ikj->ik', big_x, d_gamma) + np.einsum('im,mk->ik', gamma_x, d_big_x)
    contraction = np.einsum('j,ikj->ik', big_y, d_eta) - np.einsum('j,ijk->ik', big_y, d_eta)
    return lie - contraction


def frame_brackets(structure: PolyPoissonStructure, x) -> np.ndarray:
    """
    All ⌊σ_a, σ_b⌋ at x as an array (K, K, r, n)
    """
    x = np.asarray(x, dtype=float)
    structure.chart.check(x)
    frame = structure.frame_at(x)
    anchor = structure.anchor_at(x)
    d_frame = structure.frame_jacobian(x)
    d_anchor = structure.anchor_jacobian(x)

    lie = np.einsum('aj,bikj->abik', anchor, d_frame) + np.einsum('bim,amk->abik', frame, d_anchor)
    contraction = np.einsum('bj,aikj->abik', anchor, d_frame) - np.einsum('bj,aijk->abik', anchor, d_frame)
    return lie - contraction


def _structure_functions(structure: PolyPoissonStructure, x) -> Tuple[np.ndarray, float]:
    size = structure.size
    brackets = frame_brackets(structure, x).reshape(size * size, -1)
    frame = structure.frame_at(x).reshape(size, -1)
    solution, residual = linalg.lstsq(frame.T, brackets.T)
    return solution.reshape(size, size, size), residual


def structure_functions(structure: PolyPoissonStructure, x) -> Tuple[np.ndarray, float]:
    """
    C[c, a, b] with ⌊σ_a, σ_b⌋(x) = Σ_c C^c_{ab}(x) σ_c(x)

    :raise ClosureFailure: if the brackets leave the span of the frame
    :return: coefficients and the least-squares residual
    """
    constants, residual = _structure_functions(structure, x)
    if residual > structure.tolerances.closure:
        raise exceptions.ClosureFailure().with_residual(residual, structure.tolerances.closure)
    return constants, residual


def jacobiator(structure: PolyPoissonStructure, x) -> np.ndarray:
    """
    ⌊⌊σ_a,σ_b⌋,σ_c⌋ + cyclic, expanded in the frame: J[e, a, b, c].

    Uses ⌊f η, γ⌋ = f ⌊η, γ⌋ − (P(γ) f) η, so only C and its derivative
    along the anchors enter.
    """
    x = np.asarray(x, dtype=float)
    constants = _structure_functions(structure, x)[0]
    d_constants = numdiff.jacobian(
        lambda y: _structure_functions(structure, y)[0],
        x, JACOBI_STEP_FACTOR * structure.fd_step, check=structure.chart.check,
    )
    anchor = structure.anchor_at(x)
    nested = np.einsum('dab,edc->eabc', constants, constants) - np.einsum('cj,eabj->eabc', anchor, d_constants)
    return nested + np.transpose(nested, (0, 2, 3, 1)) + np.transpose(nested, (0, 3, 1, 2))


@dataclass
class AxiomReport:
    structure: str
    samples: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed is not False for check in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


@dataclass
class _PointAxioms:
    cond_i: float
    polar_dim: int
    frame_rank: int
    closure: float
    jacobi: float
    empty_slots: Tuple[int, ...]


def _point_axioms(structure: PolyPoissonStructure, x, rng: np.random.Generator) -> _PointAxioms:
    frame = structure.frame_at(x)
    anchor = structure.anchor_at(x)

    # i_{v_a} σ_b + i_{v_b} σ_a, plus i_{P(η)} η on a random η ∈ S_x
    pairings = np.einsum('bik,ak->abi', frame, anchor)
    polarized = pairings + np.swapaxes(pairings, 0, 1)
    weights = rng.standard_normal(structure.size)
    diagonal = np.einsum('a,b,abi->i', weights, weights, pairings)
    cond_i = float(max(np.max(np.abs(polarized), initial=0.0), np.max(np.abs(diagonal), initial=0.0)))

    frame_rank = linalg.rank_svd(frame.reshape(structure.size, -1), structure.tolerances.rank_rtol)
    polar_dim = Subspace.kernel(frame.reshape(-1, structure.dim), structure.dim).dim

    _, closure = _structure_functions(structure, x)
    residual = np.einsum('eabc,eik->abcik', jacobiator(structure, x), frame)
    jacobi = float(np.max(np.abs(residual), initial=0.0))

    empty = tuple(slot for slot in range(structure.order) if not np.any(np.abs(frame[:, slot]) > 0.0))
    return _PointAxioms(cond_i, polar_dim, frame_rank, closure, jacobi, empty)


def check_axioms(structure: PolyPoissonStructure, num_samples: int = 100,
                 rng: Optional[np.random.Generator] = None) -> AxiomReport:
    """
    Pointwise axiom suite at random points of the sample box.

    Reports cond_i (i_{P(η)} η = 0, polarized over the frame and on random
    sections), cond_ii (trivial polar and independent frame),
    cond_iii_closure and cond_iii_jacobi (on frame triples), and the
    empty_slots diagnostic. Failures are report entries, never exceptions.
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    tolerances = structure.tolerances
    points = structure.chart.sample(rng, num_samples)
    seeds = rng.integers(0, 2 ** 31, size=num_samples)

    log.info("Checking axioms of %r at %d points", structure, num_samples)
    started = time.perf_counter()
    results = workers.map_points(
        lambda item: _point_axioms(structure, item[0], np.random.default_rng(item[1])),
        list(zip(points, seeds)),
    )
    elapsed = time.perf_counter() - started

    cond_i = max((result.cond_i for result in results), default=0.0)
    closure = max((result.closure for result in results), default=0.0)
    jacobi = max((result.jacobi for result in results), default=0.0)
    polar_dim = max((result.polar_dim for result in results), default=0)
    min_rank = min((result.frame_rank for result in results), default=structure.size)
    empty = sorted({slot for result in results for slot in result.empty_slots})

    report = AxiomReport(structure.name, num_samples)
    report.checks.append(CheckResult.from_residual('cond_i', cond_i, tolerances.axiom, num_samples))
    report.checks.append(CheckResult(
        'cond_ii', polar_dim == 0 and min_rank == structure.size, float(polar_dim), 0.0, num_samples,
        {'polar_dim': polar_dim, 'frame_rank': min_rank, 'frame_size': structure.size},
    ))
    report.checks.append(CheckResult.from_residual('cond_iii_closure', closure, tolerances.closure, num_samples))
    report.checks.append(CheckResult.from_residual('cond_iii_jacobi', jacobi, tolerances.axiom, num_samples))
    report.checks.append(CheckResult.from_flag('empty_slots', not empty, num_samples, slots=empty))
    for check in report.checks:
        check.detail.setdefault('wall_time', elapsed)
        log.debug("%s %s: %s residual=%s", structure.name, check.name, check.status, check.worst_residual)
    return report


def admissible_bracket(structure: PolyPoissonStructure, h: AdmissibleFunction, g: AdmissibleFunction,
                       x) -> np.ndarray:
    """
    {h, g} = L_{P(dh)} g, an ℝ^r value

    :raise NotAdmissible: if dh or dg is not in S_x
    """
    x = np.asarray(x, dtype=float)
    step, check = structure.fd_step, structure.chart.check
    dh = h.gradient(x, step, check)
    dg = g.gradient(x, step, check)
    for function, gradient in ((h, dh), (g, dg)):
        residual = structure.coefficients(gradient, x)[1]
        if residual > structure.tolerances.adm:
            raise exceptions.NotAdmissible(f"d{function.name or 'h'} is not in S").with_residual(
                residual, structure.tolerances.adm)
    return dg @ structure.sharp(dh, x)


def projected_bracket(structure: PolyPoissonStructure, h: AdmissibleFunction, k: AdmissibleFunction,
                      x) -> np.ndarray:
    """
    {h, k} = −L_{P(π_S dk)} h for any k, π_S the orthogonal projection onto S_x.
    Agrees with :func:`admissible_bracket` when both are admissible.
    """
    x = np.asarray(x, dtype=float)
    step, check = structure.fd_step, structure.chart.check
    coefficients, _ = structure.coefficients(k.gradient(x, step, check), x)
    vector = coefficients @ structure.anchor_at(x)
    return -(h.gradient(x, step, check) @ vector)


@dataclass
class LeibnizWitness:
    h_admissible: bool
    f_admissible: bool
    g_admissible: bool
    product_admissible: bool
    #: {h, fg} − f{h, g} − g{h, f}
    defect: np.ndarray

    @property
    def exhibited(self) -> bool:
        return (self.h_admissible and self.product_admissible
                and not self.f_admissible and not self.g_admissible)

    def as_dict(self) -> Dict[str, object]:
        return {
            'h_admissible': self.h_admissible,
            'f_admissible': self.f_admissible,
            'g_admissible': self.g_admissible,
            'product_admissible': self.product_admissible,
            'defect': self.defect.tolist(),
        }


def leibniz_defect(structure: PolyPoissonStructure, h: AdmissibleFunction, f: AdmissibleFunction,
                   g: AdmissibleFunction, x) -> LeibnizWitness:
    """
    Derivation defect of {h, ·} on a product fg, non-admissible factors
    entering through the projected bracket.
    """
    product = f * g
    defect = (projected_bracket(structure, h, product, x)
              - f(x) * projected_bracket(structure, h, g, x)
              - g(x) * projected_bracket(structure, h, f, x))
    witness = LeibnizWitness(
        h_admissible=h.is_admissible(structure, x),
        f_admissible=f.is_admissible(structure, x),
        g_admissible=g.is_admissible(structure, x),
        product_admissible=product.is_admissible(structure, x),
        defect=defect,
    )
    log.debug("Leibniz defect of %r at %s: %s", structure, np.asarray(x).tolist(), defect.tolist())
    return witness


def check_derivatives(structure: PolyPoissonStructure, num_samples: int = 20,
                      rng: Optional[np.random.Generator] = None,
                      tolerance: float = 1e-6) -> CheckResult:
    """
    Analytic frame and anchor Jacobians against central differences
    """
    if not structure.has_analytic_derivatives:
        return CheckResult('derivatives', True, 0.0, tolerance, 0, {'analytic': False})
    rng = rng if rng is not None else np.random.default_rng(0)
    worst = 0.0
    for x in structure.chart.sample(rng, num_samples):
        worst = max(
            worst,
            float(np.max(np.abs(structure.frame_jacobian(x) - structure.numeric_frame_jacobian(x)), initial=0.0)),
            float(np.max(np.abs(structure.anchor_jacobian(x) - structure.numeric_anchor_jacobian(x)), initial=0.0)),
        )
    return CheckResult.from_residual('derivatives', worst, tolerance, num_samples, analytic=True)
