"""Exhaustive backtracking search, independent of every closed-form construction.

The oracle never consults the decision procedures: it answers by explicit
search over matchings, so it can cross-validate both the feasible and the
infeasible verdicts on small orders.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .core import LengthList, Matching
from .feasibility import decide_uniform, even_count_condition


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    solutions_found: int = 0
    wall_time: float = 0.0


def _partner_lengths(rem: list[int], half: int) -> list[int]:
    """Candidate lengths ordered by descending remaining multiplicity, then
    ascending length; fixing the order makes every search deterministic."""
    ms = [m for m in range(1, half + 1) if rem[m] > 0]
    ms.sort(key=lambda m: (-rem[m], m))
    return ms


def oracle_solve(lst: LengthList, v: int, *,
                 use_symmetry: bool = True) -> tuple[Optional[Matching], SearchStats]:
    """Search for one matching of K_v realizing ``lst``; None means none exists.

    Even v asks for a perfect matching; odd v for a near-perfect matching
    leaving exactly one vertex free.  Always expands the smallest unmatched
    vertex.  With ``use_symmetry`` (even v only) the reflection through vertex
    0 is quotiented out: 0's partner is restricted to the vertex at clockwise
    distance m for each candidate length m.

    For even v each node also runs a parity-propagation check: an odd-length
    edge always joins an even vertex to an odd vertex, while an even-length
    edge joins two vertices of the same parity, so with u0/u1 unmatched
    even/odd vertices and `odd_rem` odd lengths left, a completion needs
    odd_rem <= min(u0, u1) and u0 - odd_rem even.  The check only discards
    subtrees with no completion, so the first solution found (and hence
    determinism) is unchanged; soundness is cross-checked against the
    prune-free `count_solutions` in the test suite.
    """
    half = v // 2
    if lst.n != half or lst.total != half:
        raise ValueError(f"{lst} is not a length list for K_{v}")
    start = time.perf_counter()
    stats = SearchStats()
    rem = list(lst.mult)
    matched = [False] * v
    edges: list[tuple[int, int]] = []
    skip_left = v % 2
    even_v = v % 2 == 0
    # unmatched vertices of even/odd index, and odd lengths still to place
    unpar = [v - half, half]
    odd_rem = sum(rem[1::2])

    def search(lo: int) -> bool:
        nonlocal odd_rem
        u = lo
        while u < v and matched[u]:
            u += 1
        if u == v:
            return True
        if even_v and (odd_rem > unpar[0] or odd_rem > unpar[1]
                       or (unpar[0] - odd_rem) % 2):
            return False
        stats.nodes_expanded += 1
        matched[u] = True
        unpar[u & 1] -= 1
        for m in _partner_lengths(rem, half):
            if use_symmetry and u == 0 and even_v:
                partners = (m,)
            else:
                partners = ((u + m) % v, (u - m) % v)
            seen = -1
            for w in partners:
                if w == u or w == seen or matched[w]:
                    continue
                seen = w
                matched[w] = True
                unpar[w & 1] -= 1
                rem[m] -= 1
                odd_rem -= m & 1
                edges.append((u, w))
                if search(u + 1):
                    return True
                edges.pop()
                odd_rem += m & 1
                rem[m] += 1
                unpar[w & 1] += 1
                matched[w] = False
        nonlocal skip_left
        if skip_left:
            skip_left -= 1
            if search(u + 1):
                return True
            skip_left += 1
        unpar[u & 1] += 1
        matched[u] = False
        return False

    found = search(0)
    stats.wall_time = time.perf_counter() - start
    if not found:
        return None, stats
    stats.solutions_found = 1
    return Matching.build(v, edges), stats


def count_solutions(lst: LengthList, v: int) -> tuple[int, SearchStats]:
    """Number of distinct perfect matchings of K_v realizing ``lst``.

    No symmetry reduction, so the count is exact; intended for v <= 12 where
    full enumeration stays cheap.
    """
    if v % 2:
        raise ValueError("count_solutions needs even v")
    half = v // 2
    if lst.n != half or lst.total != half:
        raise ValueError(f"{lst} is not a length list for K_{v}")
    start = time.perf_counter()
    stats = SearchStats()
    rem = list(lst.mult)
    matched = [False] * v

    def search(lo: int) -> None:
        u = lo
        while u < v and matched[u]:
            u += 1
        if u == v:
            stats.solutions_found += 1
            return
        stats.nodes_expanded += 1
        matched[u] = True
        for m in _partner_lengths(rem, half):
            seen = -1
            for w in ((u + m) % v, (u - m) % v):
                if w == u or w == seen or matched[w]:
                    continue
                seen = w
                matched[w] = True
                rem[m] -= 1
                search(u + 1)
                rem[m] += 1
                matched[w] = False
        matched[u] = False

    search(0)
    stats.wall_time = time.perf_counter() - start
    return stats.solutions_found, stats


def enumerate_lists(n: int, max_value: Optional[int] = None,
                    predicate: Optional[Callable[[LengthList], bool]] = None
                    ) -> Iterator[LengthList]:
    """All multisets of n lengths from [1, max_value], as LengthLists."""
    top = n if max_value is None else max_value
    for combo in itertools.combinations_with_replacement(range(1, top + 1), n):
        lst = LengthList.from_lengths(combo, n)
        if predicate is None or predicate(lst):
            yield lst


@dataclass(frozen=True)
class ConjectureReport:
    p: int
    lists_checked: int
    counterexamples: tuple[str, ...]
    agrees: bool

    def to_dict(self) -> dict:
        return {"p": self.p, "lists_checked": self.lists_checked,
                "counterexamples": list(self.counterexamples), "agrees": self.agrees}


def _conjecture_case(args: tuple[int, tuple[int, ...]]) -> Optional[str]:
    """Worker task: one list of K_{2p} with entries below p; returns a
    counterexample certificate or None."""
    p, combo = args
    lst = LengthList.from_lengths(combo, p)
    expected = even_count_condition(lst)
    found, _ = oracle_solve(lst, 2 * p)
    if (found is not None) == expected:
        return None
    if found is not None:
        return f"{lst.format()}: predicted infeasible, realized by {found.to_json()}"
    return f"{lst.format()}: predicted feasible, search exhausted with no matching"


def check_conjecture(p: int, *, workers: int = 1) -> ConjectureReport:
    """Test, for lists of K_{2p} whose entries all lie in [1, p-1], that
    feasibility is equivalent to the even-count parity condition.

    Exhausts every multiset by oracle search; any disagreement is reported
    with a full certificate.
    """
    cases = [(p, combo) for combo in
             itertools.combinations_with_replacement(range(1, p), p)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_conjecture_case, cases, chunksize=16))
    else:
        results = [_conjecture_case(case) for case in cases]
    bad = tuple(r for r in results if r is not None)
    return ConjectureReport(p, len(cases), bad, not bad)


def check_coprime_theorem(n: int) -> bool:
    """Cross-validate the single-length classification against the oracle."""
    for x in range(1, n + 1):
        lst = LengthList.from_counts({x: n}, n)
        found, _ = oracle_solve(lst, 2 * n)
        if (found is not None) != decide_uniform(n, x).is_feasible:
            return False
    return True
