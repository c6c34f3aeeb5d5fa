import dataclasses
from dataclasses import dataclass

# Fields multiplied by :meth:`Tolerances.scaled`
_SCALED = ('skew', 'skew_warn', 'adm', 'closure', 'glue', 'path', 'axiom', 'newton_tol')


@dataclass(frozen=True)
class Tolerances:
    """
    Numeric thresholds shared by every check
    """

    #: relative singular-value threshold for rank decisions
    rank_rtol: float = 1e-9
    skew: float = 1e-12
    skew_warn: float = 1e-10
    #: admissibility residual of dh against S
    adm: float = 1e-8
    #: least-squares residual of frame brackets against the frame
    closure: float = 1e-7
    #: distance between target and source for concatenation
    glue: float = 1e-7
    #: residual of an on-shell cotangent path
    path: float = 1e-6
    #: residual accepted by the pointwise axiom suite
    axiom: float = 1e-6
    newton_tol: float = 1e-10
    newton_maxiter: int = 50
    fd_step: float = 1e-5

    def scaled(self, factor: float) -> 'Tolerances':
        """
        Multiply every acceptance threshold by factor.
        Rank threshold, iteration cap and fd step are kept.
        """
        if factor <= 0:
            raise ValueError(f"Tolerance scale must be positive, got {factor}")
        return dataclasses.replace(self, **{name: getattr(self, name) * factor for name in _SCALED})

    def replace(self, **changes) -> 'Tolerances':
        unknown = set(changes) - {field.name for field in dataclasses.fields(self)}
        if unknown:
            raise KeyError(', '.join(sorted(unknown)))
        return dataclasses.replace(self, **changes)


DEFAULT = Tolerances()
