"""Exception types shared across the engine.

Every failure mode named in a module contract gets its own class so that
callers (and the CLI) can map them to exit codes without string matching.
"""


class HopfknotError(Exception):
    """Base class for all engine errors."""


# -- scalar / field errors ---------------------------------------------------

class MixedFields(HopfknotError):
    """Two scalars from different field descriptors met in one expression."""


class DivisionByZero(HopfknotError):
    pass


# -- algebra construction / verification ------------------------------------

class AlgebraMismatch(HopfknotError):
    """Elements of two different algebras combined."""


class OrderMismatch(HopfknotError):
    """Tensor order does not match the number of functional slots."""


class AxiomFailure(HopfknotError):
    """A required structural axiom failed; carries a witness description."""


class InvalidGroup(HopfknotError):
    pass


class BadRoot(HopfknotError):
    """q is not a primitive 2r-th root of unity."""


# -- integrals ---------------------------------------------------------------

class NoIntegral(HopfknotError):
    """The defining linear system has trivial kernel (corrupted input)."""


class AmbiguousIntegral(HopfknotError):
    """Kernel dimension > 1 (corrupted input)."""


class DegeneratePairing(HopfknotError):
    """lambda(Lambda) = 0, so the pair cannot be normalized."""


class InconsistentSystem(HopfknotError):
    pass


class MissingPivot(HopfknotError):
    pass


class NotSpherical(HopfknotError):
    pass


class NotQuasitriangular(HopfknotError):
    """One of the three R-matrix identities failed; carries its index."""


class NotNondegenerate(HopfknotError):
    """mu(g theta) mu(g^-1 theta^-1) = 0; HKR evaluation is blocked."""


class UnnormalizedIntegral(HopfknotError):
    """mu(g theta) mu(g^-1 theta^-1) != 1 and no exact rescaling was found."""


# -- diagrams ----------------------------------------------------------------

class MalformedEvents(HopfknotError):
    """Morse event list is not well formed; carries the offending index."""


class BasepointError(HopfknotError):
    pass


class SlotMismatch(HopfknotError):
    pass


class UnbalancedExtrema(HopfknotError):
    pass


class NonAdjacentCrossing(HopfknotError):
    """Internal gamma-crossing ordering inconsistency in a flatten input."""


class NotNormalForm(HopfknotError):
    """to_surgery_link input does not satisfy <gamma|beta> = Id."""


class Unroutable(HopfknotError):
    """The canonical planar layout cannot realize this diagram."""


class InputError(HopfknotError):
    """Malformed JSON input (CLI exit code 2)."""
