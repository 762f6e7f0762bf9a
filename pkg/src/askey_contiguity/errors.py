"""Exception types raised by the library."""


class AskeyError(Exception):
    """Base class for every error raised here."""


class SingularSeries(AskeyError):
    pass


class InvalidBase(AskeyError):
    pass


class SingularParameters(AskeyError):
    pass


class UnsupportedFamily(AskeyError):
    pass


class InvalidShift(AskeyError):
    pass


class DenominatorVanishes(AskeyError):
    def __init__(self, message, locus=None):
        super().__init__(message)
        self.locus = locus


class InsufficientRange(AskeyError):
    pass


class IncompatibleShifts(AskeyError):
    pass


class UnknownCorrespondence(AskeyError):
    pass


class InsufficientSamples(AskeyError):
    pass
