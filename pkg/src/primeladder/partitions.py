"""Canonical partitions of integers into odd primes, and their strengthening.

A canonical partition of n is a sequence of odd primes p_1, ..., p_m summing
to n with p_j >= 2*(p_1 + ... + p_{j-1}) + 3 for every j > 1. A labeling
construction built on such a partition places the values

    sigma_k = 2*(p_1 + ... + p_{k-2}) + p_{k-1}
    tau_k   = 2*(p_1 + ... + p_{k-1}) + p_k + 1

on adjacent vertices for each 3 <= k <= m, so the construction only yields a
prime labeling when every such pair is coprime. Partitions with that extra
property are called strong; (3, 11, 73) for 87 is the classic canonical
partition that is not strong (sigma_3 = 17 divides tau_3 = 102), while
(3, 17, 67) is strong.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterator

import numpy as np

from .conjectures import DEFAULT_CHUNK_SIZE, RangeReport
from .numtheory import CoverageExceededError, PrimeSet, is_prime, sieve_primes

__all__ = [
    "Partition",
    "SigmaTau",
    "is_canonical",
    "sigma_tau",
    "is_strong",
    "find_canonical",
    "enumerate_canonical",
    "verify_strong_range",
]

MAX_TERMS_CAP = 4  # enumeration with unbounded m is never needed


@dataclass(frozen=True)
class Partition:
    """A nonempty sequence of odd primes; n is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("partition needs at least one part")
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        for p in self.parts:
            if p == 2 or not is_prime(p):
                raise ValueError(f"parts must be odd primes, got {p}")

    @property
    def n(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class SigmaTau:
    """The adjacent pair produced at the k-th partition boundary."""

    k: int
    sigma: int
    tau: int


def is_canonical(parts) -> bool:
    """True iff `parts` is a canonical partition.

    A predicate over arbitrary sequences: malformed input (empty, non-integer,
    even, composite, dominance failure) returns False and never raises.
    """
    try:
        items = list(parts)
    except TypeError:
        return False
    if not items:
        return False
    seq = []
    for p in items:
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            return False
        seq.append(int(p))
    running = 0
    for j, p in enumerate(seq):
        if p == 2 or not is_prime(p):
            return False
        if j > 0 and p < 2 * running + 3:
            return False
        running += p
    return True


def sigma_tau(partition: Partition, k: int) -> SigmaTau:
    """The (sigma_k, tau_k) pair for 3 <= k <= m."""
    m = len(partition.parts)
    if not 3 <= k <= m:
        raise ValueError(f"k must satisfy 3 <= k <= {m}, got {k}")
    parts = partition.parts
    sigma = 2 * sum(parts[: k - 2]) + parts[k - 2]
    tau = 2 * sum(parts[: k - 1]) + parts[k - 1] + 1
    return SigmaTau(k=k, sigma=sigma, tau=tau)


def _strong_ok(parts: tuple[int, ...]) -> bool:
    running = parts[0] + (parts[1] if len(parts) > 1 else 0)
    for k in range(3, len(parts) + 1):
        sigma = 2 * (running - parts[k - 2]) + parts[k - 2]
        tau = 2 * running + parts[k - 1] + 1
        if gcd(sigma, tau) != 1:
            return False
        running += parts[k - 1]
    return True


def is_strong(partition: Partition) -> bool:
    """True iff sigma_k and tau_k are coprime for every 3 <= k <= m.

    Partitions with at most two terms are vacuously strong. Raises
    ValueError when the partition is not canonical.
    """
    if not is_canonical(partition.parts):
        raise ValueError(f"{partition.parts} is not a canonical partition")
    return all(
        gcd(st.sigma, st.tau) == 1
        for st in (sigma_tau(partition, k) for k in range(3, len(partition.parts) + 1))
    )


def _min_completion(total: int, terms_left: int) -> int:
    """Lower bound on the sum after adding `terms_left` dominated parts."""
    for _ in range(terms_left):
        total += 2 * total + 3
    return total


def _extensions(n: int, m: int, sieve: PrimeSet, prefix: tuple[int, ...], prefix_sum: int) -> Iterator[tuple[int, ...]]:
    """Canonical partitions of n with exactly m parts extending prefix, lexicographic."""
    lower = 2 * prefix_sum + 3 if prefix else 3
    terms_left = m - len(prefix)
    # a sum of k odd numbers has the parity of k
    if (n - prefix_sum) % 2 != terms_left % 2:
        return
    if terms_left == 1:
        last = n - prefix_sum
        if last >= lower and last % 2 == 1 and sieve.contains(last):
            yield prefix + (last,)
        return
    for p in range(lower if lower % 2 == 1 else lower + 1, n - prefix_sum, 2):
        if _min_completion(prefix_sum + p, terms_left - 1) > n:
            break
        if sieve.contains(p):
            yield from _extensions(n, m, sieve, prefix + (p,), prefix_sum + p)


def _prepare(n: int, max_terms: int, sieve: PrimeSet | None) -> PrimeSet:
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= max_terms <= MAX_TERMS_CAP:
        raise ValueError(f"max_terms must be in 1..{MAX_TERMS_CAP}, got {max_terms}")
    if sieve is None:
        sieve = sieve_primes(n)
    if sieve.limit < n:
        raise CoverageExceededError(f"n={n} exceeds sieve limit {sieve.limit}")
    return sieve


def find_canonical(
    n: int,
    max_terms: int = 3,
    require_strong: bool = False,
    sieve: PrimeSet | None = None,
    exact_terms: bool = False,
) -> Partition | None:
    """First canonical partition of n in the deterministic search order.

    Searches ascending term count (or only exactly max_terms when
    exact_terms is set), lexicographic on parts within each count; with
    require_strong, non-strong candidates are skipped.
    """
    sieve = _prepare(n, max_terms, sieve)
    term_counts = [max_terms] if exact_terms else range(1, max_terms + 1)
    for m in term_counts:
        for parts in _extensions(n, m, sieve, (), 0):
            if not require_strong or _strong_ok(parts):
                return Partition(parts)
    return None


def enumerate_canonical(
    n: int, max_terms: int = 3, sieve: PrimeSet | None = None
) -> Iterator[Partition]:
    """All canonical partitions of n with at most max_terms parts.

    Yields in lexicographic order of the part tuples.
    """
    sieve = _prepare(n, max_terms, sieve)
    collected = []
    for m in range(1, max_terms + 1):
        collected.extend(_extensions(n, m, sieve, (), 0))
    for parts in sorted(collected):
        yield Partition(parts)


# ---------------------------------------------------------------------------
# Range verification
# ---------------------------------------------------------------------------


def _scan_partition_chunk(ns, max_terms, require_strong, exact_terms, sieve):
    bad = []
    for n in ns:
        n = int(n)
        if find_canonical(n, max_terms, require_strong, sieve, exact_terms) is None:
            bad.append(n)
    return bad


_WORKER_ARGS = None


def _init_partition_worker(max_terms, require_strong, exact_terms, sieve):
    global _WORKER_ARGS
    _WORKER_ARGS = (max_terms, require_strong, exact_terms, sieve)


def _scan_partition_chunk_worker(ns):
    max_terms, require_strong, exact_terms, sieve = _WORKER_ARGS
    return _scan_partition_chunk(ns, max_terms, require_strong, exact_terms, sieve)


def verify_strong_range(
    lo: int,
    hi: int,
    max_terms: int = 3,
    parity: str = "all",
    require_strong: bool = False,
    sieve: PrimeSet | None = None,
    exact_terms: bool = False,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    sample_count: int = 5,
) -> RangeReport:
    """Check each eligible n in [lo, hi] for a (strong) canonical partition.

    parity filters the scan to "odd", "even", or "all" n. exact_terms asks
    for partitions with exactly max_terms parts instead of at most. The range
    is chunked, scanned independently, and merged ascending, so the report
    does not depend on the worker count.
    """
    if not (50 <= lo <= hi):
        raise ValueError(f"need 50 <= lo <= hi, got [{lo}, {hi}]")
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"parity must be all|odd|even, got {parity!r}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if sieve is None:
        sieve = sieve_primes(hi)
    if sieve.limit < hi:
        raise CoverageExceededError(f"hi={hi} exceeds sieve limit {sieve.limit}")

    t0 = time.monotonic()
    if parity == "all":
        eligible = np.arange(lo, hi + 1, dtype=np.int64)
    else:
        start = lo if lo % 2 == (1 if parity == "odd" else 0) else lo + 1
        eligible = np.arange(start, hi + 1, 2, dtype=np.int64)

    chunks = [eligible[i : i + chunk_size] for i in range(0, eligible.size, chunk_size)]
    counterexamples: list[int] = []
    if workers == 1 or len(chunks) <= 1:
        for ns in chunks:
            counterexamples.extend(
                _scan_partition_chunk(ns, max_terms, require_strong, exact_terms, sieve)
            )
    else:
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=_init_partition_worker,
            initargs=(max_terms, require_strong, exact_terms, sieve),
        ) as pool:
            futures = [pool.submit(_scan_partition_chunk_worker, ns) for ns in chunks]
            for fut in futures:
                counterexamples.extend(fut.result())

    bad = set(counterexamples)
    samples = {}
    firsts = [int(v) for v in eligible[:sample_count]]
    lasts = [int(v) for v in eligible[-sample_count:]]
    for n_i in firsts + lasts:
        if n_i not in bad and n_i not in samples:
            found = find_canonical(n_i, max_terms, require_strong, sieve, exact_terms)
            if found is not None:
                samples[n_i] = found.parts

    kind = "strong_canonical_partition" if require_strong else "canonical_partition"
    terms = f"{'eq' if exact_terms else 'le'}{max_terms}"
    return RangeReport(
        conjecture=f"{kind}_{terms}",
        lo=lo,
        hi=hi,
        parity=parity,
        verified_count=int(eligible.size),
        counterexamples=tuple(sorted(counterexamples)),
        sample_witnesses=samples,
        elapsed_seconds=time.monotonic() - t0,
        chunk_size=chunk_size,
    )
