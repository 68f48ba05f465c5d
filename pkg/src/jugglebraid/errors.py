"""Exception hierarchy.

Every domain error carries a stable ``code`` string naming the violated
condition; the CLI serializes it into its JSON error object.
"""


class JuggleError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "JuggleError"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        out = {"error": self.code, "message": self.message}
        if self.details:
            out["details"] = {k: _jsonable(v) for k, v in self.details.items()}
        return out


def _jsonable(value):
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


class ParseError(JuggleError, ValueError):
    code = "ParseError"


class InvalidSiteswap(JuggleError, ValueError):
    """A sequence failed one of the two validity conditions."""

    code = "InvalidSiteswap"


class NonIntegerAverage(InvalidSiteswap):
    code = "NonIntegerAverage"


class LandingClash(InvalidSiteswap):
    code = "LandingClash"


class IndexOrder(JuggleError, ValueError):
    code = "IndexOrder"


class SwapTooFar(JuggleError, ValueError):
    code = "SwapTooFar"


class NoCatch(JuggleError, ValueError):
    code = "NoCatch"


class WindowMisaligned(JuggleError, ValueError):
    code = "WindowMisaligned"


class InadmissibleParams(JuggleError, ValueError):
    code = "InadmissibleParams"


class GeometryDegeneracy(JuggleError):
    """The chosen carry/dwell values produce a non-generic diagram."""

    code = "GeometryDegeneracy"


class HeightTie(GeometryDegeneracy):
    code = "HeightTie"


class NonAdjacent(GeometryDegeneracy):
    code = "NonAdjacent"


class ResolutionFailure(JuggleError):
    code = "ResolutionFailure"


class StrandMismatch(JuggleError, ValueError):
    code = "StrandMismatch"


class GeneratorRange(JuggleError, ValueError):
    code = "GeneratorRange"
