class EngineError(Exception):
    pass


class NotRegular(EngineError):
    """Rational function has a pole at q_s = infinity."""


class UnsupportedType(EngineError):
    pass


class RootNotInSystem(EngineError):
    pass


class RootBeyondCutoff(EngineError):
    """Requested root or chain does not fit the enumeration window."""


class SimpleRootNotExtremal(EngineError):
    pass


class NotConvexChain(EngineError):
    pass


class WeightMismatch(EngineError):
    pass


class ResidueAmbiguity(EngineError):
    """Transition residue is not a single +1 unit vector; indicates an engine bug."""


class TriangularityFailure(EngineError):
    pass


class PathAmbiguity(EngineError):
    pass


class EdgeNotRootParallel(EngineError):
    pass


class NotAccessible(EngineError):
    pass
