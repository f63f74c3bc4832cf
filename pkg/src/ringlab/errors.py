"""Exception types raised by ring construction and classification."""


class RingError(Exception):
    """Base class for every error raised by ringlab."""


class AxiomViolation(RingError):
    def __init__(self, axiom, counterexample=()):
        self.axiom = axiom
        self.counterexample = tuple(int(x) for x in counterexample)
        super().__init__(f"{axiom} fails at {self.counterexample}")


class BimoduleAxiomViolation(AxiomViolation):
    pass


class NoIdentity(RingError):
    pass


class OutOfRangeEntry(RingError):
    pass


class TableFormatError(RingError):
    pass


class OrderCapExceeded(RingError):
    pass


class ZeroModulus(RingError):
    pass


class NotIdempotent(RingError):
    pass


class NotAnIdeal(RingError):
    pass


class NotCentral(RingError):
    pass


class NotAGroupRing(RingError):
    pass


class NotAlmostIdempotent(RingError):
    pass


class FormulaDivergence(RingError):
    """Idempotent lifting did not converge; indicates an engine bug."""


class EngineError(RingError):
    """An internal consistency check failed (e.g. a one-sided inverse)."""


class CacheWriteError(RingError):
    """The survey cache could not be appended to."""


class TableMismatch(RingError):
    """A reproduced table cell differs from the reference value."""
