"""Exception types shared across the package."""


class GoldbachNetError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidBound(GoldbachNetError):
    """Sieve bound too small to hold any primes."""


class OutOfRange(GoldbachNetError):
    """A query or construction needs primes beyond the sieve bound."""


class InvalidEvenNumber(GoldbachNetError):
    """Decomposition requested for an odd number or an even number below 8."""


class UndecomposableEven(GoldbachNetError):
    """An even number in range has no prime pair p < q.

    This would contradict the empirical two-prime splitting of every even
    number tested here, so it aborts loudly instead of being skipped.
    """


class SieveExhausted(GoldbachNetError):
    """A node-count target was not reached before running out of even numbers."""


class DegenerateGraph(GoldbachNetError):
    """The graph is too small (or too empty) for the requested statistic."""


class UndefinedAssortativity(GoldbachNetError):
    """Degree correlation is 0/0 because all edge endpoints have equal degree."""


class InfeasibleNullModel(GoldbachNetError):
    """Requested G(N, M) has more edges than distinct node pairs."""
