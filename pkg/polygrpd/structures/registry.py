"""
Structures addressable by name from scenario files.

Example::

    {"constructor": "linear-direct-sum", "params": {"algebra": "so3", "r": 2}}
"""
from typing import Any, Callable, Dict, Mapping, Optional

from ..polyspace import PolyForm
from ..utils import exceptions
from ..utils.helper import HelperMode, Item, OrderedHelper
from ..utils.tolerances import DEFAULT, Tolerances
from . import constructors
from .base import PolyPoissonStructure
from .chart import Chart
from .lie import LieAlgebraData


class Constructor(OrderedHelper):
    mode = HelperMode.kebab_case

    SYMPLECTIC_PLANE = Item()  # symplectic-plane
    COVELOCITY = Item()  # covelocity
    R3_BISYMPLECTIC = Item()  # r3-bisymplectic
    TRIVIAL = Item()  # trivial
    PRODUCT = Item()  # product
    CONSTANT = Item()  # constant
    LINEAR_DIRECT_SUM = Item()  # linear-direct-sum
    LINEAR_PRODUCT = Item()  # linear-product
    FOLIATION_FAMILY = Item()  # foliation-family
    CORRUPTED_SYMPLECTIC = Item()  # corrupted-symplectic


class Algebra(OrderedHelper):
    mode = HelperMode.snake_case

    SO3 = Item()  # so3
    AFF1 = Item()  # aff1
    ABELIAN = Item()  # abelian


def algebra_from_params(params: Mapping[str, Any]) -> LieAlgebraData:
    name = params.get('algebra', Algebra.SO3)
    if name == Algebra.SO3:
        return LieAlgebraData.so3()
    if name == Algebra.AFF1:
        return LieAlgebraData.aff1()
    if name == Algebra.ABELIAN:
        return LieAlgebraData.abelian(int(params.get('d', 2)))
    raise exceptions.ConfigError(f"Unknown Lie algebra {name!r}, expected one of {Algebra.all()}")


def _chart(params: Mapping[str, Any], n: int, fd_step: float) -> Chart:
    if 'box' in params:
        box = params['box']
        if len(box) != n:
            raise exceptions.ConfigError(f"Chart box needs {n} intervals, got {len(box)}")
        return Chart.from_bounds(box, fd_step)
    return Chart.cube(n, float(params.get('low', -1.0)), float(params.get('high', 1.0)), fd_step)


def _form(params: Mapping[str, Any], default: PolyForm) -> PolyForm:
    if 'wedges' not in params:
        return default
    return PolyForm.from_wedges(int(params['m']), params['wedges'])


def _order(params: Mapping[str, Any], default: int = 1) -> int:
    return int(params.get('r', default))


def _symplectic_plane(params, fd_step, tolerances):
    return constructors.make_symplectic_plane(_chart(params, 2, fd_step), tolerances)


def _covelocity(params, fd_step, tolerances):
    n, r = int(params.get('n', 1)), _order(params, 2)
    return constructors.make_covelocity(n, r, _chart(params, n * (1 + r), fd_step), tolerances)


def _r3_bisymplectic(params, fd_step, tolerances):
    return constructors.make_r3_bisymplectic(_chart(params, 3, fd_step), tolerances)


def _trivial(params, fd_step, tolerances):
    n = int(params.get('n', 2))
    return constructors.make_trivial(params.get('variant', constructors.TrivialVariant.S1),
                                     _chart(params, n, fd_step), _order(params), params.get('forms'),
                                     tolerances)


def _product(params, fd_step, tolerances):
    factors = params.get('factors')
    if not factors:
        raise exceptions.ConfigError('Product needs a non-empty "factors" list')
    return constructors.make_product([
        build(factor['constructor'], factor.get('params', {}), fd_step, tolerances) for factor in factors
    ])


def _constant(params, fd_step, tolerances):
    k, m, r = int(params.get('k', 1)), int(params.get('m', 2)), _order(params)
    if m == 0:
        return constructors.make_constant(k, None, r, _chart(params, k, fd_step), tolerances)
    form = _form(params, constructors.standard_symplectic(m, r))
    return constructors.make_constant(k, form, None, _chart(params, k + form.dim, fd_step), tolerances)


def _linear_direct_sum(params, fd_step, tolerances):
    algebra, r = algebra_from_params(params), _order(params, 2)
    return constructors.make_linear_direct_sum(algebra, r, _chart(params, r * algebra.dim, fd_step), tolerances)


def _linear_product(params, fd_step, tolerances):
    algebra, r = algebra_from_params(params), _order(params, 2)
    return constructors.make_linear_product(algebra, r, _chart(params, r * algebra.dim, fd_step), tolerances)


def _foliation_family(params, fd_step, tolerances):
    r = _order(params, 2)
    form = _form(params, constructors.standard_symplectic(2, r))
    return constructors.make_foliation_family(form, params.get('variant', constructors.FoliationVariant.S1),
                                              _chart(params, form.dim + 1, fd_step), tolerances)


def _corrupted_symplectic(params, fd_step, tolerances):
    return constructors.make_corrupted_symplectic(_chart(params, 2, fd_step))


BUILDERS: Dict[str, Callable[[Mapping[str, Any], float, Tolerances], PolyPoissonStructure]] = {
    Constructor.SYMPLECTIC_PLANE: _symplectic_plane,
    Constructor.COVELOCITY: _covelocity,
    Constructor.R3_BISYMPLECTIC: _r3_bisymplectic,
    Constructor.TRIVIAL: _trivial,
    Constructor.PRODUCT: _product,
    Constructor.CONSTANT: _constant,
    Constructor.LINEAR_DIRECT_SUM: _linear_direct_sum,
    Constructor.LINEAR_PRODUCT: _linear_product,
    Constructor.FOLIATION_FAMILY: _foliation_family,
    Constructor.CORRUPTED_SYMPLECTIC: _corrupted_symplectic,
}


def build(name: str, params: Optional[Mapping[str, Any]] = None, fd_step: float = DEFAULT.fd_step,
          tolerances: Tolerances = DEFAULT) -> PolyPoissonStructure:
    """
    Build a structure by constructor name

    :raise ConfigError: for unknown names or unusable parameters
    """
    if not Constructor.check(name):
        raise exceptions.ConfigError(f"Unknown constructor {name!r}, expected one of {Constructor.all()}")
    try:
        return BUILDERS[name](params or {}, fd_step, tolerances)
    except (KeyError, TypeError, ValueError) as e:
        raise exceptions.ConfigError(f"Bad parameters for {name!r}: {e}") from e
