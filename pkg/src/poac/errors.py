"""Exception hierarchy shared across the toolkit."""


class PoacError(Exception):
    """Base class for all toolkit errors."""


# pixel_io
class PgmError(PoacError, ValueError):
    pass


class BadPgmMagic(PgmError):
    pass


class MaxvalUnsupported(PgmError):
    pass


class TruncatedImage(PgmError):
    pass


class ZeroDimension(PgmError):
    pass


class MalformedHeader(PgmError):
    pass


# dwt2d
class OddLength(PoacError, ValueError):
    pass


class OddDimension(PoacError, ValueError):
    pass


class ShapeMismatch(PoacError, ValueError):
    pass


# poac_core
class DegenerateProjection(PoacError, ArithmeticError):
    """LL subband is identically zero, so the projection is undefined."""


# codec
class DecodeError(PoacError, ValueError):
    pass


class BadMagic(DecodeError):
    pass


class BadVersion(DecodeError):
    pass


class TruncatedPayload(DecodeError):
    pass


class SymbolOverrun(DecodeError):
    pass


class UnsupportedKind(DecodeError):
    pass


class InvalidCode(DecodeError):
    """Bitstream or code-length table does not form a valid prefix code."""
