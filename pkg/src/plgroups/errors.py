"""Exception hierarchy. Every domain error derives from PLGroupError."""


class PLGroupError(ValueError):
    pass


class NonPositive(PLGroupError):
    pass


class BreakpointNotInA(PLGroupError):
    pass


class SlopeNotInLambda(PLGroupError):
    pass


class NotBijective(PLGroupError):
    pass


class OutOfRange(PLGroupError):
    pass


class OutOfDomain(PLGroupError):
    pass


class ParamMismatch(PLGroupError):
    pass


class BadInterval(PLGroupError):
    pass


class NoValidS(PLGroupError):
    pass


class WrongParams(PLGroupError):
    pass


class BadBase(PLGroupError):
    pass


class NotInSubgroup(PLGroupError):
    pass


class NotInF(PLGroupError):
    pass


class NotInB(PLGroupError):
    pass


class IdentityViolated(PLGroupError):
    pass


class BadWindows(PLGroupError):
    pass


class SupportsOverlap(PLGroupError):
    pass


class VerificationFailed(PLGroupError):
    pass


class NotFixed(PLGroupError):
    pass


class TrivialGenerator(PLGroupError):
    pass


class ParseError(PLGroupError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
