"""Exception hierarchy shared by every gkforge module."""


class GKForgeError(Exception):
    """Base class for all library errors."""


class MalformedPermutation(GKForgeError, ValueError):
    pass


class CapExceeded(GKForgeError):
    pass


class BoundExceeded(GKForgeError):
    pass


class NotNormal(GKForgeError):
    pass


class NotSolvable(GKForgeError):
    pass


class NotAnAutomorphism(GKForgeError):
    pass


class InconsistentAction(GKForgeError):
    pass


class UnknownVertex(GKForgeError, KeyError):
    pass


class NotConnected(GKForgeError):
    pass


class NotDisconnected(GKForgeError):
    pass


class NotACutSet(GKForgeError):
    pass


class MoreThanTwoComponents(GKForgeError):
    pass


class NoCutVertex(GKForgeError):
    pass


class InvalidDescriptor(GKForgeError, ValueError):
    pass


class TheoremViolation(GKForgeError):
    """A verifier found a counterexample to a statement it certifies."""


class ParseError(GKForgeError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateName(GKForgeError, ValueError):
    pass
