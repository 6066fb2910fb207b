"""Exception types raised by the codec."""


class CodecError(Exception):
    """Base class for all bzp errors."""


class SignalFormatError(CodecError):
    """A signal file could not be parsed (bad cell, bad length, non-finite value)."""


class DegenerateSignalError(CodecError):
    """The input signal cannot be standardized (constant, or too short)."""


class PayloadError(CodecError):
    """An entropy-coded payload is malformed (truncated, overlong, or inconsistent)."""


class ContainerError(CodecError):
    """A serialized container is malformed (bad magic, truncation, invalid fields)."""
