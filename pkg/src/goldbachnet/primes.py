"""Prime sieving and membership queries up to a fixed bound."""

import numpy as np

from .errors import InvalidBound, OutOfRange


class PrimeTable:
    """Primes up to ``limit``, with O(1) membership tests.

    Membership is stored bit-packed (one bit per integer), so a table
    covering 10**6 costs ~125 kB plus the ordered prime array. Instances
    are immutable after construction and safe to share across workers.
    """

    __slots__ = ("limit", "ordered_primes", "_bits")

    def __init__(self, limit, ordered_primes, bits):
        self.limit = int(limit)
        self.ordered_primes = ordered_primes
        self._bits = bits

    def __repr__(self):
        return f"PrimeTable(limit={self.limit}, n_primes={self.n_primes})"

    @property
    def n_primes(self):
        return int(self.ordered_primes.size)

    def is_prime(self, n):
        """True iff ``n`` is prime. ``n`` must lie in [0, limit]."""
        n = int(n)
        if n < 0 or n > self.limit:
            raise OutOfRange(f"{n} is outside the sieve range [0, {self.limit}]")
        return bool((self._bits[n >> 3] >> (7 - (n & 7))) & 1)

    def __contains__(self, n):
        return self.is_prime(n)

    def is_prime_array(self, values):
        """Vectorized membership test; every value must lie in [0, limit]."""
        v = np.asarray(values, dtype=np.int64)
        if v.size and (int(v.min()) < 0 or int(v.max()) > self.limit):
            raise OutOfRange("value outside the sieve range")
        return self._membership(v)

    def _membership(self, v):
        # bounds already guaranteed by the caller
        return (self._bits[v >> 3] >> (7 - (v & 7))) & 1 != 0


def build_table(limit):
    """Sieve of Eratosthenes over [2, limit].

    Parameters
    ----------
    limit : int
        Inclusive upper bound, at least 2.

    Returns
    -------
    PrimeTable
    """
    limit = int(limit)
    if limit < 2:
        raise InvalidBound(f"sieve bound must be >= 2, got {limit}")
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    ordered = np.flatnonzero(flags).astype(np.int64)
    return PrimeTable(limit, ordered, np.packbits(flags))


def is_prime(table, n):
    """Module-level alias for :meth:`PrimeTable.is_prime`."""
    return table.is_prime(n)
