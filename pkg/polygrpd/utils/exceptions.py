"""
- PolyGrpdError
    - LinearAlgebraError
        - NotIsotropic
        - DegeneratePolyForm
        - SpaceMismatch
    - StructureError
        - OutOfBox
        - ClosureFailure
        - NotAdmissible
        - DegenerateForm
        - NotClosed
    - ReductionError
        - IllPosed
        - NotCleanValue
        - DegenerateReduction
    - PathError
        - LeftBox
        - NonComposable
        - WrongStructure
    - ConfigError
    - CheckFailure

- PolyGrpdWarning
    - SkewCorrectionWarning
"""


class PolyGrpdError(Exception):
    def __init__(self, message=None):
        super(PolyGrpdError, self).__init__(message or self.__class__.__doc__ or '')


class _ToleranceMixin:
    """
    Errors raised because a residual exceeded its tolerance
    carry both numbers for the report.
    """
    residual = None
    tolerance = None

    def with_residual(self, residual, tolerance):
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        return self

    def __str__(self):
        text = super(_ToleranceMixin, self).__str__()
        if self.residual is None:
            return text
        return f"{text} (residual {self.residual:.3e} > tolerance {self.tolerance:.3e})"


class LinearAlgebraError(PolyGrpdError):
    pass


class NotIsotropic(_ToleranceMixin, LinearAlgebraError):
    """Contraction of the poly-form with the subspace leaves Ann(L) ⊗ ℝ^r"""


class DegeneratePolyForm(LinearAlgebraError):
    """Common kernel of the poly-form components is not trivial"""


class SpaceMismatch(LinearAlgebraError):
    """Relations can't be composed: dimensions of the middle spaces differ"""


class StructureError(PolyGrpdError):
    pass


class OutOfBox(StructureError):
    """Finite-difference stencil leaves the sample box of the chart"""


class ClosureFailure(_ToleranceMixin, StructureError):
    """Bracket of frame sections is not a section of S"""


class NotAdmissible(_ToleranceMixin, StructureError):
    """Differential of the function is not a section of S"""


class DegenerateForm(StructureError):
    """Poly-form is degenerate at a probe point"""


class NotClosed(_ToleranceMixin, StructureError):
    """Poly-form is not closed at a probe point"""


class ReductionError(PolyGrpdError):
    pass


class IllPosed(_ToleranceMixin, ReductionError):
    """Leaf form equations are inconsistent"""


class NotCleanValue(ReductionError):
    """Point is not on a clean level set of the moment map"""


class DegenerateReduction(ReductionError):
    """Reduced poly-form has a common kernel"""


class PathError(PolyGrpdError):
    pass


class LeftBox(PathError):
    """Trajectory left the sample box of the chart"""


class NonComposable(_ToleranceMixin, PathError):
    """Target of the first path differs from the source of the second one"""


class WrongStructure(PathError):
    """Operation is not defined for this structure"""


class ConfigError(PolyGrpdError):
    """Scenario configuration is invalid"""


class CheckFailure(PolyGrpdError):
    """At least one check of the report failed"""

    def __init__(self, message=None, report=None):
        super(CheckFailure, self).__init__(message)
        self.report = report


class PolyGrpdWarning(Warning):
    pass


class SkewCorrectionWarning(PolyGrpdWarning):
    pass
