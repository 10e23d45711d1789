"""
Exception hierarchy for the multicompositions library
"""


class MulticompError(Exception):
    """Base class for every error raised by multicomp"""


class DomainError(MulticompError, ValueError):
    """Argument outside the domain of an operation (k = 0, n = 0, q too small, ...)"""


class MixedKError(DomainError):
    """Values built for different k were combined"""


class CompositionSemanticError(MulticompError, ValueError):
    """Well-formed value that violates a composition invariant"""


class CompositionSyntaxError(MulticompError, ValueError):
    """Text that does not match the composition grammar"""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class SeriesError(MulticompError, ArithmeticError):
    """Invalid power series operation or failed series identity"""


class ResidualError(MulticompError):
    """Cluster coefficient decomposition left a nonzero residual"""
