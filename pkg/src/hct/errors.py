"""Exception types shared across the package."""


class HctError(Exception):
    """Base class for all domain errors."""


class NotAttainable(HctError):
    """The integer is not a sum a^2 + ab + b^2, so no lattice pair realizes it."""


class NotDecomposable(HctError):
    """The rational prime does not split in the Eisenstein ring."""


class ZeroElement(HctError):
    """Zero has no prime factorization."""


class CoordinateOverflow(HctError):
    """A lattice coordinate exceeds the documented |m|,|n| <= 2**30 bound."""


class OutOfDomain(HctError):
    """A coordinate lies outside the torus fundamental domain."""


class OutOfRegion(HctError):
    """A query needs sites outside the configuration's region."""


class BoundaryTouching(HctError):
    """A bad parallelogram touches the region boundary; the verdict is unreliable."""


class UnknownFamily(HctError):
    """No built-in force family with that name."""


class IncompatibleFamily(HctError):
    """Force family and sublattice have different squared diameters."""


class NoAdmissiblePairs(HctError):
    """The insertable triangle stacks admit no pair at distance >= D."""


class SixTupleFound(HctError):
    """An admissible 6-tuple exists in the punctured disk (geometric bound violated)."""


class InvalidViewport(HctError):
    """The render viewport is empty or malformed."""
