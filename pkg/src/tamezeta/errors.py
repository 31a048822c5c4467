"""Exception hierarchy.

``DocumentError`` subclasses describe malformed input (CLI exit code 2);
``DomainError`` subclasses describe well-formed input on which a requested
computation is undefined or a theorem hypothesis fails (CLI exit code 1).
"""

from __future__ import annotations


class TameZetaError(Exception):
    """Base class for every error raised by this package."""


class DocumentError(TameZetaError):
    pass


class ParseError(DocumentError):
    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if path:
            where.append(f"at {path}")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class InvariantError(DocumentError):
    def __init__(self, rule: str, message: str):
        self.rule = rule
        super().__init__(f"{rule}: {message}")


class DomainError(TameZetaError):
    pass


class UnknownComponent(DomainError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return str(self.args[0]) if self.args else "unknown component"


class NonIntegralSelfIntersection(DomainError):
    pass


class InvalidConfiguration(DomainError):
    """The configuration fails validation, or is in the wrong mode for the operation."""


class NotAPolynomial(DomainError):
    pass


class NotRelativelyMinimal(DomainError):
    pass


class JacobianTypeRequired(DomainError):
    pass


class NotTame(DomainError):
    pass


class HypothesisViolated(DomainError):
    pass


class InvalidSite(DomainError):
    pass


class NotContractible(DomainError):
    pass


class InvalidParameter(DomainError):
    pass


class InternalInconsistency(TameZetaError):
    """A proven identity failed; this always indicates a bug."""
