"""Exception hierarchy.

Structural errors are malformed input (exit code 1 on the command line);
domain errors are well-formed input outside an operation's domain of
definition (exit code 2). Every error carries a stable ``code`` string.
"""


class AssocFormError(Exception):
    code = "error"


class StructuralError(AssocFormError, ValueError):
    code = "structural"


class ParseError(StructuralError):
    code = "parse"


class DegreeMismatchError(ParseError):
    code = "inhomogeneous"


class PreconditionError(StructuralError):
    code = "precondition"


class DomainError(AssocFormError):
    code = "domain"


class DegenerateFormError(DomainError):
    code = "degenerate"

    def __init__(self, message: str = "degenerate: discriminant divisor"):
        super().__init__(message)


class NonRegularSequenceError(DomainError):
    code = "non_regular"

    def __init__(self, message: str = "non-regular: resultant divisor"):
        super().__init__(message)


class NotGorensteinError(DomainError):
    code = "not_gorenstein"


class NotInWndError(DomainError):
    code = "not_in_wnd"

    def __init__(self, quotient_dim: int, expected: int, degree: int):
        self.quotient_dim = quotient_dim
        self.expected = expected
        self.degree = degree
        super().__init__(
            f"not in W_(n,d): quotient dimension {quotient_dim} at degree {degree}, expected {expected}"
        )
