"""The Dehornoy left order on braid groups.

A braid is *positive* in the Dehornoy order when it admits a word in
which the lowest-index generator that occurs at all occurs only
positively (a sigma-positive word).  Every nontrivial braid is either
positive or negative, and the order ``u < v  iff  u^-1 v`` is positive
is a left-invariant strict total order.

Deciding the sign is the package's single trusted word-problem kernel:
fully handle-reduce the word; the empty word is the identity, otherwise
the lowest generator of the reduced word occurs with one sign only and
that sign is the answer.

The *floor* of a braid ``b`` counts full twists, using the Garside half
twist ``delta``:

    floor(b) = min { k >= 0 : delta^(-2k-2) < b < delta^(2k+2) }

It bounds the fractional Dehn twist coefficient ``c`` of the braid,
``floor(b) <= |c(b)| <= floor(b) + 1``, which is what makes rigorous
two-sided interval bounds on ``c`` computable from comparisons alone.
(Some authors define the floor as the largest ``t`` with
``delta^(2t) <= b``; the min-k form used here is what the twist bounds
above are stated for, and the two differ on braids between powers of
``delta^2``.)
"""

from __future__ import annotations

from enum import Enum

from braidcert import _kernel
from braidcert.braid import BraidWord, delta
from braidcert.errors import StrandMismatch


class OrderSign(Enum):
    """Position of a braid relative to the identity in the Dehornoy order."""

    NEGATIVE = -1
    TRIVIAL = 0
    POSITIVE = 1


class Comparison(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def sigma_sign(u: BraidWord, budget: int | None = None) -> OrderSign:
    """Dehornoy sign of a braid: POSITIVE, TRIVIAL or NEGATIVE.

    Raises ReductionBudgetExceeded if handle reduction outgrows the
    working-length budget (default from BRAIDCERT_REDUCTION_BUDGET or
    10^6 letters).
    """
    cap = budget if budget is not None else _kernel.default_budget()
    return OrderSign(_kernel.sign_of(u.letters, u.strands, cap))


def compare(u: BraidWord, v: BraidWord, budget: int | None = None) -> Comparison:
    """Compare two braids on the same strand count: u < v iff u^-1 v > 1."""
    if u.strands != v.strands:
        raise StrandMismatch(
            f"cannot compare braids on {u.strands} and {v.strands} strands"
        )
    cap = budget if budget is not None else _kernel.default_budget()
    word = tuple(-x for x in reversed(u.letters)) + v.letters
    # sign(u^-1 v) = +1 places u BELOW v in the order
    return Comparison(-_kernel.sign_of(word, u.strands, cap))


def reduced_word(u: BraidWord, budget: int | None = None) -> BraidWord:
    """A fully handle-reduced word equal to u in the braid group.

    The result is sigma-definite: empty, or its lowest generator occurs
    with a single sign.
    """
    cap = budget if budget is not None else _kernel.default_budget()
    return BraidWord(u.strands, tuple(_kernel.reduce_word(u.letters, u.strands, cap)))


def dehornoy_floor(u: BraidWord, budget: int | None = None) -> int:
    """min { k >= 0 : delta^(-2k-2) < u < delta^(2k+2) }.

    Seeds the answer from the exponent sum (the full twist delta^2 has
    exponent sum m(m-1)), then scans linearly; each candidate needs one
    sign computation because a positive braid is automatically above
    every negative power of delta, and symmetrically.
    """
    cap = budget if budget is not None else _kernel.default_budget()
    sign = sigma_sign(u, cap)
    if sign is OrderSign.TRIVIAL:
        return 0

    m = u.strands
    half = delta(m).letters

    def below_power(k: int) -> bool:
        # u < delta^(2k+2), decided as sign(u^-1 delta^(2k+2)) > 0
        word = tuple(-x for x in reversed(u.letters)) + half * (2 * k + 2)
        return _kernel.sign_of(word, m, cap) > 0

    def above_power(k: int) -> bool:
        # delta^(-2k-2) < u, decided as sign(delta^(2k+2) u) > 0
        word = half * (2 * k + 2) + u.letters
        return _kernel.sign_of(word, m, cap) > 0

    # For positive u the lower bound holds for every k >= 0; only the
    # upper comparison moves, and it is monotone in k.  Symmetrically
    # for negative u.
    holds = below_power if sign is OrderSign.POSITIVE else above_power

    seed = abs(u.exponent_sum) // (m * (m - 1))
    if holds(seed):
        hi = seed  # holds; gallop down for a non-holding lower bound
        step = 1
        lo = hi - step
        while lo >= 0 and holds(lo):
            hi = lo
            step *= 2
            lo = hi - step
        lo = max(lo, -1)
    else:
        lo = seed  # does not hold; gallop up for a holding upper bound
        step = 1
        hi = lo + step
        while not holds(hi):
            lo = hi
            step *= 2
            hi = lo + step
    # invariant: not holds(lo) (or lo == -1), holds(hi); bisect for the
    # least k that holds
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi
