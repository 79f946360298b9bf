"""Exception hierarchy shared by the library and the CLI."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PrimeInputError(DomainError):
    """A composite was required but a prime was given."""


class HypothesisError(DomainError):
    """A theorem checker was called outside the theorem's hypotheses."""


class SizeError(ValueError):
    """A configured size cap would be exceeded."""


class InvariantViolation(AssertionError):
    """A result contradicts a proven theorem; this is always a bug."""
