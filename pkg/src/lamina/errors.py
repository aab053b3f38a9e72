"""Exception types shared across the package."""


class LaminaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMaterialError(LaminaError):
    """Material data violates a physical bound or an unsupported symmetry."""


class PoleError(LaminaError):
    """A Poisson's ratio denominator vanished.

    The denominator is proportional to a diagonal compliance component, which
    is strictly positive for every positive definite tensor. A pole therefore
    flags invalid material data, never a valid design.
    """


class DomainError(LaminaError):
    """A lamination point or angle lies outside its admissible region."""


class DataError(LaminaError):
    """A material database file is missing, malformed, or fails validation."""


class UniformSignError(LaminaError):
    """The directional term of the sign numerator vanishes.

    At such a lamination point the Poisson's ratio keeps a single sign for
    every direction, so the auxetic-zone threshold is undefined.
    """
