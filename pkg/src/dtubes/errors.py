"""Exception hierarchy.

Every error raised for bad *data* (as opposed to programming mistakes)
derives from :class:`DomainError`, which the command line maps to exit
status 1.
"""


class DomainError(ValueError):
    pass


class ContractibleArcError(DomainError):
    pass


class InvalidLoopTagsError(DomainError):
    """A loop at one puncture whose two ends carry the same tag."""


class NonCanonicalArcError(DomainError):
    pass


class NotationError(DomainError):
    """Peripheral arc data that does not describe a valid arc."""


class TriangulationError(DomainError):
    pass


class ArcSyntaxError(DomainError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
