"""Exception hierarchy shared by every codec."""


class HfsError(ValueError):
    """Base class for domain errors raised by hfskit."""


class CapExceededError(HfsError):
    """A result would exceed the configured bit-length or size cap."""


class UrelementRangeError(HfsError):
    pass


class DuplicateMemberError(HfsError):
    pass


class HfsSyntaxError(HfsError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotAPairError(HfsError):
    pass


class EmptyMemberError(HfsError):
    pass


class CycleError(HfsError):
    pass


class IsolatedVertexError(HfsError):
    pass
