"""
Constructors for the standard families of poly-Poisson structures.

Every family with constant or linear coefficients installs analytic
derivatives; ``check_derivatives`` compares them with central differences.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from ..polyspace import PolyForm, Subspace
from ..utils import exceptions, numdiff
from ..utils.helper import HelperMode, Item, OrderedHelper
from ..utils.tolerances import DEFAULT, Tolerances
from .base import AdmissibleFunction, PolyPoissonStructure
from .chart import Chart
from .lie import LieAlgebraData

log = logging.getLogger('polygrpd')

FormData = Union[PolyForm, Callable[[np.ndarray], np.ndarray]]


class TrivialVariant(OrderedHelper):
    mode = HelperMode.SCREAMING_SNAKE_CASE

    S1 = Item()  # T*Q ⊗ ℝ^r
    S2 = Item()  # (c_1 ζ_1, ..., c_r ζ_r)
    S3 = Item()  # diagonal
    S4 = Item()  # first slot only


class FoliationVariant(OrderedHelper):
    mode = HelperMode.SCREAMING_SNAKE_CASE

    S1 = Item()
    S2 = Item()
    S3 = Item()


def _constant(array) -> Callable[[np.ndarray], np.ndarray]:
    array = np.asarray(array, dtype=float)
    return lambda x: array


def _zeros(*shape) -> Callable[[np.ndarray], np.ndarray]:
    return _constant(np.zeros(shape))


def _exterior_derivative(jacobian: np.ndarray) -> np.ndarray:
    """
    dω_i(e_a, e_b, e_c) from J[i, j, k, l] = ∂_l W_i[j, k]
    """
    return (np.einsum('ibca->iabc', jacobian)
            + np.einsum('icab->iabc', jacobian)
            + jacobian)


def make_polysymplectic(form: FormData, chart: Optional[Chart] = None, name: str = 'polysymplectic',
                        form_jacobian: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                        tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    S_ω = image(ω♯) with frame σ_j = i_{e_j} ω and anchor v_j = e_j.

    :param form: constant :class:`PolyForm` or x -> (r, n, n)
    :param form_jacobian: x -> (r, n, n, n), last axis the direction
    :raise DegenerateForm: if ⋂ ker ω_i ≠ 0 at a probe point
    :raise NotClosed: if some dω_i ≠ 0 at a probe point
    """
    if isinstance(form, PolyForm):
        components = form.components
        order, n = form.order, form.dim
        evaluate = _constant(components)
        form_jacobian = _zeros(order, n, n, n)
    else:
        evaluate = form
        if chart is None:
            raise ValueError('Point-dependent forms need a chart')
        order, n = np.asarray(evaluate(chart.center)).shape[:2]
    chart = chart or Chart.cube(n)

    for x in chart.probe_points():
        components = np.asarray(evaluate(x), dtype=float)
        if Subspace.kernel(components.reshape(-1, n), n).dim:
            raise exceptions.DegenerateForm(f"Poly-form is degenerate at {x.tolist()}")
        if form_jacobian is not None:
            jacobian = np.asarray(form_jacobian(x), dtype=float)
        else:
            jacobian = numdiff.jacobian(evaluate, x, chart.fd_step, check=chart.check)
        defect = float(np.max(np.abs(_exterior_derivative(jacobian)), initial=0.0))
        if defect > tolerances.closure:
            raise exceptions.NotClosed(f"Poly-form is not closed at {x.tolist()}").with_residual(
                defect, tolerances.closure)

    frame_jacobian = None
    if form_jacobian is not None:
        frame_jacobian = lambda x: np.transpose(np.asarray(form_jacobian(x), dtype=float), (1, 0, 2, 3))  # noqa: E731
    return PolyPoissonStructure(
        chart, order,
        lambda x: np.transpose(np.asarray(evaluate(x), dtype=float), (1, 0, 2)),
        _constant(np.eye(n)),
        name,
        frame_jacobian=frame_jacobian,
        anchor_jacobian=_zeros(n, n, n),
        kind='polysymplectic',
        form=evaluate,
        tolerances=tolerances,
    )


def covelocity_form(n: int, order: int) -> PolyForm:
    """
    ω_i = Σ_k dq_k ∧ dp^i_k on ⊕_r T*ℝ^n, coordinates (q, p^1, ..., p^r)
    """
    wedges = [[(k, n * (1 + i) + k, 1.0) for k in range(n)] for i in range(order)]
    return PolyForm.from_wedges(n * (1 + order), wedges)


def make_covelocity(n: int = 1, order: int = 2, chart: Optional[Chart] = None,
                    tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    form = covelocity_form(n, order)
    return make_polysymplectic(form, chart or Chart.cube(form.dim), f"covelocity-{n}-{order}",
                               tolerances=tolerances)


def make_symplectic_plane(chart: Optional[Chart] = None, tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    return make_polysymplectic(PolyForm.from_wedges(2, [[(0, 1, 1.0)]]), chart, 'symplectic-plane',
                               tolerances=tolerances)


def r3_bisymplectic_form() -> PolyForm:
    return PolyForm.from_wedges(3, [[(0, 1, 1.0)], [(1, 2, 1.0)]])


def make_r3_bisymplectic(chart: Optional[Chart] = None, tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    (ℝ³, (dx₁∧dx₂, dx₂∧dx₃)); each component is degenerate, their kernels meet in 0
    """
    return make_polysymplectic(r3_bisymplectic_form(), chart, 'r3-bisymplectic', tolerances=tolerances)


def make_corrupted_symplectic(chart: Optional[Chart] = None) -> PolyPoissonStructure:
    """
    Symplectic plane with v_1 replaced by v_1 + e_1, breaking i_{P(η)} η = 0
    """
    plane = make_symplectic_plane(chart)
    anchor = np.eye(2)
    anchor[0, 0] += 1.0
    return plane.with_anchor(_constant(anchor), 'corrupted-symplectic', _zeros(2, 2, 2))


def make_trivial(variant: str, chart: Chart, order: int, forms=None,
                 tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Zero-anchor structures on Q.

    :param variant: S1 (T*Q ⊗ ℝ^r), S2 (c_i ζ_i in slot i), S3 (α ⊕ ... ⊕ α),
        S4 (α ⊕ 0 ⊕ ... ⊕ 0)
    :param forms: for S2, the 1-forms ζ_i as an (r, n) array or x -> (r, n);
        defaults to ζ_i = dx_{i mod n}
    """
    n = chart.dim
    frame_jacobian = None
    if variant == TrivialVariant.S1:
        frame = np.zeros((order * n, order, n))
        for i in range(order):
            frame[i * n:(i + 1) * n, i, :] = np.eye(n)
        evaluate = _constant(frame)
    elif variant == TrivialVariant.S2:
        if forms is None:
            forms = np.eye(n)[[i % n for i in range(order)]]
        if callable(forms):
            rows_at = forms
        else:
            rows_at = _constant(np.asarray(forms, dtype=float).reshape(order, n))
            frame_jacobian = _zeros(order, order, n, n)
        for x in chart.probe_points():
            if np.any(np.max(np.abs(np.asarray(rows_at(x))), axis=1) == 0.0):
                raise ValueError(f"S2 forms vanish at {x.tolist()}")

        def evaluate(x):
            rows = np.asarray(rows_at(x), dtype=float)
            result = np.zeros((order, order, n))
            result[np.arange(order), np.arange(order)] = rows
            return result
    elif variant == TrivialVariant.S3:
        evaluate = _constant(np.repeat(np.eye(n)[:, None, :], order, axis=1))
    elif variant == TrivialVariant.S4:
        frame = np.zeros((n, order, n))
        frame[:, 0, :] = np.eye(n)
        evaluate = _constant(frame)
    else:
        raise ValueError(f"Unknown trivial variant {variant!r}, expected one of {TrivialVariant.all()}")

    size = np.asarray(evaluate(chart.center)).shape[0]
    if variant != TrivialVariant.S2:
        frame_jacobian = _zeros(size, order, n, n)
    return PolyPoissonStructure(
        chart, order, evaluate, _zeros(size, n), f"trivial-{variant.lower()}",
        frame_jacobian=frame_jacobian,
        anchor_jacobian=_zeros(size, n, n),
        kind='trivial',
        tolerances=tolerances,
    )


def make_product(factors: Sequence[PolyPoissonStructure], name: str = '', kind: str = 'product',
                 algebra=None) -> PolyPoissonStructure:
    """
    Product of structures of orders r_1..r_k: an (r_1 + ... + r_k)-structure
    with block-diagonal frame and anchor
    """
    factors = tuple(factors)
    if not factors:
        raise ValueError('Product needs at least one factor')
    chart = Chart.product(*(factor.chart for factor in factors))
    order = sum(factor.order for factor in factors)
    size = sum(factor.size for factor in factors)
    n = chart.dim
    blocks = []
    k0 = r0 = n0 = 0
    for factor in factors:
        blocks.append((factor, slice(k0, k0 + factor.size), slice(r0, r0 + factor.order), slice(n0, n0 + factor.dim)))
        k0, r0, n0 = k0 + factor.size, r0 + factor.order, n0 + factor.dim

    def frame(x):
        result = np.zeros((size, order, n))
        for factor, ks, rs, ns in blocks:
            result[ks, rs, ns] = factor.frame_at(x[ns])
        return result

    def anchor(x):
        result = np.zeros((size, n))
        for factor, ks, _, ns in blocks:
            result[ks, ns] = factor.anchor_at(x[ns])
        return result

    def frame_jacobian(x):
        result = np.zeros((size, order, n, n))
        for factor, ks, rs, ns in blocks:
            result[ks, rs, ns, ns] = factor.frame_jacobian(x[ns])
        return result

    def anchor_jacobian(x):
        result = np.zeros((size, n, n))
        for factor, ks, _, ns in blocks:
            result[ks, ns, ns] = factor.anchor_jacobian(x[ns])
        return result

    analytic = all(factor.has_analytic_derivatives for factor in factors)
    return PolyPoissonStructure(
        chart, order, frame, anchor,
        name or ' x '.join(factor.name for factor in factors),
        frame_jacobian=frame_jacobian if analytic else None,
        anchor_jacobian=anchor_jacobian if analytic else None,
        kind=kind,
        algebra=algebra,
        factors=factors,
        tolerances=factors[0].tolerances,
    )


def standard_symplectic(m: int, order: int) -> PolyForm:
    """
    Σ_l dx_{2l} ∧ dx_{2l+1} in every slot
    """
    if m % 2:
        raise ValueError('Standard symplectic form needs an even dimension')
    return PolyForm.from_wedges(m, [[(2 * l, 2 * l + 1, 1.0) for l in range(m // 2)]] * order)


def make_constant(k: int, form: Optional[PolyForm] = None, order: Optional[int] = None,
                  chart: Optional[Chart] = None, tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Constant structure on ℝ^k × ℝ^m: S = (T*ℝ^k ⊗ ℝ^r) ⊕ S_ω, P = 0 ⊕ P_ω.

    ``form=None`` (m = 0) gives trivial S1 of the given order, ``k=0`` the
    poly-symplectic structure of ``form``.
    """
    if form is None:
        if order is None:
            raise ValueError('Order is required without a form')
        return make_trivial(TrivialVariant.S1, chart or Chart.cube(k), order, tolerances=tolerances)
    if k == 0:
        return make_polysymplectic(form, chart, 'constant', tolerances=tolerances)

    r, m = form.order, form.dim
    n = k + m
    chart = chart or Chart.cube(n)
    size = r * k + m
    frame = np.zeros((size, r, n))
    anchor = np.zeros((size, n))
    for i in range(r):
        frame[i * k:(i + 1) * k, i, :k] = np.eye(k)
    frame[r * k:, :, k:] = np.transpose(form.components, (1, 0, 2))
    anchor[r * k:, k:] = np.eye(m)
    return PolyPoissonStructure(
        chart, r, _constant(frame), _constant(anchor), f"constant-{k}-{m}",
        frame_jacobian=_zeros(size, r, n, n),
        anchor_jacobian=_zeros(size, n, n),
        kind='constant',
        tolerances=tolerances,
    )


def make_linear_direct_sum(algebra: LieAlgebraData, order: int, chart: Optional[Chart] = None,
                           tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Direct-sum structure on (𝔤*)^r: σ_u = (u, ..., u), each u acting on its
    own copy of 𝔤*, with anchor (ad*_u ζ_1, ..., ad*_u ζ_r).
    Structure functions are the structure constants of 𝔤.
    """
    d = algebra.dim
    n = order * d
    chart = chart or Chart.cube(n)
    constants = algebra.constants
    frame = np.zeros((d, order, n))
    for i in range(order):
        frame[:, i, i * d:(i + 1) * d] = np.eye(d)
    # ∂(ad*_{e_a} ζ_i)_m / ∂ζ_{i,k} = c^k_{am}
    anchor_jacobian = np.einsum('kam,ij->aimjk', constants, np.eye(order)).reshape(d, n, n)

    def anchor(x):
        return np.einsum('kam,ik->aim', constants, np.asarray(x).reshape(order, d)).reshape(d, n)

    return PolyPoissonStructure(
        chart, order, _constant(frame), anchor, f"linear-direct-sum-{algebra.name}-{order}",
        frame_jacobian=_zeros(d, order, n, n),
        anchor_jacobian=_constant(anchor_jacobian),
        kind='linear-direct-sum',
        algebra=algebra,
        tolerances=tolerances,
    )


def make_linear_product(algebra: LieAlgebraData, order: int, chart: Optional[Chart] = None,
                        tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Product of r copies of the Lie-Poisson structure on 𝔤*, K = r·d
    """
    d = algebra.dim
    charts = [None] * order
    if chart is not None:
        charts = [Chart(chart.box[i * d:(i + 1) * d], chart.fd_step) for i in range(order)]
    factors = [make_linear_direct_sum(algebra, 1, charts[i], tolerances) for i in range(order)]
    return make_product(factors, f"linear-product-{algebra.name}-{order}", 'linear-product', algebra)


def make_foliation_family(form: FormData, variant: str, chart: Optional[Chart] = None,
                          tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Structures on M × ℝ (last coordinate s) sharing the foliation by the
    slices M × {s}: the frame (ω_s♯ e_j, 0) with anchor (e_j, 0) plus ds
    placed in every slot separately (S1), in all slots at once (S2) or in
    the first slot (S3).

    :param form: constant :class:`PolyForm` or s -> (r, m, m)
    """
    if isinstance(form, PolyForm):
        components = form.components
        form_at = _constant(components)
    else:
        form_at = form
        components = np.asarray(form_at(0.0), dtype=float)
    order, m = components.shape[:2]
    n = m + 1
    chart = chart or Chart.cube(n)
    if variant == FoliationVariant.S1:
        extra = order
    elif variant in (FoliationVariant.S2, FoliationVariant.S3):
        extra = 1
    else:
        raise ValueError(f"Unknown foliation variant {variant!r}, expected one of {FoliationVariant.all()}")
    size = m + extra

    def frame(x):
        result = np.zeros((size, order, n))
        result[:m, :, :m] = np.transpose(np.asarray(form_at(x[m]), dtype=float), (1, 0, 2))
        if variant == FoliationVariant.S1:
            result[m + np.arange(order), np.arange(order), m] = 1.0
        elif variant == FoliationVariant.S2:
            result[m, :, m] = 1.0
        else:
            result[m, 0, m] = 1.0
        return result

    anchor = np.zeros((size, n))
    anchor[:m, :m] = np.eye(m)
    return PolyPoissonStructure(
        chart, order, frame, _constant(anchor), f"foliation-family-{variant.lower()}",
        frame_jacobian=_zeros(size, order, n, n) if isinstance(form, PolyForm) else None,
        anchor_jacobian=_zeros(size, n, n),
        kind='foliation-family',
        tolerances=tolerances,
    )


def make_opposite(structure: PolyPoissonStructure) -> PolyPoissonStructure:
    """
    Same S with anchor −P
    """
    jacobian = None
    if structure.has_analytic_derivatives:
        jacobian = lambda x: -structure.anchor_jacobian(x)  # noqa: E731
    return structure.with_anchor(lambda x: -structure.anchor_at(x), f"{structure.name}-opposite", jacobian)


@dataclass
class LeibnizScenario:
    structure: PolyPoissonStructure
    h: AdmissibleFunction
    f: AdmissibleFunction
    g: AdmissibleFunction
    point: np.ndarray


def make_leibniz_witness() -> LeibnizScenario:
    """
    Symplectic form dx₁∧dx₂ paired with the degenerate closed form dx₂∧dx₃.

    h = (x₂, −x₂) is admissible, f = (1, e^{x₁}) and g = (−x₁, x₃e^{−x₁}) are
    not, while fg = (−x₁, x₃) is. The projected bracket misses the derivation
    rule by ((e^{−x₁} − 1)/2, (1 − e^{x₁})/2).
    """
    structure = make_r3_bisymplectic()
    h = AdmissibleFunction(
        lambda x: np.array([x[1], -x[1]]),
        lambda x: np.array([[0.0, 1.0, 0.0], [0.0, -1.0, 0.0]]),
        'h',
    )
    f = AdmissibleFunction(
        lambda x: np.array([1.0, np.exp(x[0])]),
        lambda x: np.array([[0.0, 0.0, 0.0], [np.exp(x[0]), 0.0, 0.0]]),
        'f',
    )
    g = AdmissibleFunction(
        lambda x: np.array([-x[0], x[2] * np.exp(-x[0])]),
        lambda x: np.array([[-1.0, 0.0, 0.0], [-x[2] * np.exp(-x[0]), 0.0, np.exp(-x[0])]]),
        'g',
    )
    return LeibnizScenario(structure, h, f, g, np.array([0.5, 0.2, 0.3]))
