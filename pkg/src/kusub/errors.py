"""Exception hierarchy shared by every module."""


class GroupError(Exception):
    """Base class for all library errors."""


class MixedDegree(GroupError):
    pass


class EmptyGenerators(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class NotContained(GroupError):
    pass


class NotMaximal(GroupError):
    pass


class TrivialGroup(GroupError):
    pass


class PrimeDoesNotDivide(GroupError):
    pass


class BadOrdering(GroupError):
    pass


class PreconditionViolated(GroupError):
    pass


class InputError(GroupError):
    """Malformed group input; carries an optional 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GroupSyntaxError(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class NotABijection(InputError):
    pass


class OrderMismatch(InputError):
    pass


class Malformed(InputError):
    pass


class NotAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    pass
