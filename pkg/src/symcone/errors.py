"""Exception hierarchy."""


class SymConeError(Exception):
    """Base class for every error raised by symcone."""


class NotSymmetric(SymConeError):
    pass


class InvalidDescriptor(SymConeError):
    pass


class NotInvertible(SymConeError):
    pass


class NotInterior(SymConeError):
    pass


class NoConvergence(SymConeError):
    pass


class WitnessError(SymConeError):
    """An error that carries a concrete counterexample."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PositivityViolated(WitnessError):
    pass


class NotAutomorphism(WitnessError):
    pass


class DegenerateUnit(SymConeError):
    pass


class NoInteriorPoint(SymConeError):
    pass


class OracleOnly(SymConeError):
    """Operation needs an algebra-backed cone."""


class Singular(SymConeError):
    pass


class BracketNotClosed(SymConeError):
    pass


class NotInCone(SymConeError):
    pass


class DimensionMismatch(SymConeError):
    pass


class DegenerateFixedPoint(SymConeError):
    pass
