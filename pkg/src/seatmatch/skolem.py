"""Skolem sequences and the perfect matchings they induce.

A Skolem sequence of order n positions each k in [1, n] at two slots exactly
k apart, all slots distinct, covering [0, 2n-1].  Reading the slot pairs as
edges gives a perfect matching of K_{2n} whose (reduced) length list is
{1, 2, ..., n}.  Such sequences exist iff n = 0 or 1 (mod 4).

The direct construction below assembles three explicit families of pairs:
a double fan producing every even difference, one long bridging pair, and a
closed-form partition of the leftover interval into the odd differences.
Coverage is easy to check family by family; the test suite additionally
cross-validates small orders against an exact backtracking generator.
"""

from __future__ import annotations

from .core import Matching


class SkolemError(ValueError):
    pass


def skolem_order_exists(n: int) -> bool:
    return n % 4 in (0, 1)


def _pairs_mod0(m: int) -> list[tuple[int, int]]:
    # n = 4m, slots 1..8m
    pairs = [(4 * m + i, 8 * m - i) for i in range(2 * m)]        # diffs 2,4,...,4m
    pairs.append((2 * m + 1, 6 * m))                              # diff 4m-1
    if m == 1:
        pairs.append((1, 2))                                      # diff 1
        return pairs
    # odd diffs 1,3,...,4m-3 on [1,4m-1] minus {2m+1}
    pairs += [(j, 4 * m - 1 - j) for j in range(1, m)]            # 2m+1,...,4m-3
    pairs.append((2 * m, 4 * m - 1))                              # 2m-1
    pairs += [(2 * m - 1 - j, 2 * m + 2 + j) for j in range(m - 2)]  # 3,...,2m-3
    pairs.append((m, m + 1))                                      # 1
    return pairs


def _pairs_mod1(m: int) -> list[tuple[int, int]]:
    # n = 4m+1, slots 1..8m+2, m >= 2 (orders 1 and 5 are special-cased)
    pairs = [(4 * m + 2 + i, 8 * m + 2 - i) for i in range(2 * m)]   # diffs 2,...,4m
    pairs.append((2 * m + 1, 6 * m + 2))                             # diff 4m+1
    # odd diffs 1,3,...,4m-1 on [1,4m+1] minus {2m+1}
    pairs += [(j, 4 * m + 1 - j) for j in range(1, m)]               # 2m+3,...,4m-1
    pairs.append((m, 3 * m + 1))                                     # 2m+1
    pairs.append((2 * m + 2, 4 * m + 1))                             # 2m-1
    pairs += [(2 * m - j, 2 * m + 3 + j) for j in range(m - 2)]      # 3,...,2m-3
    pairs.append((m + 1, m + 2))                                     # 1
    return pairs


def skolem_pairs(n: int) -> list[tuple[int, int]]:
    """Slot pairs (a_k, b_k) with b_k - a_k = k, on slots 0..2n-1.

    Deterministic closed-form construction; raises SkolemError for orders
    n = 2, 3 (mod 4), which admit no Skolem sequence.
    """
    if n < 1 or not skolem_order_exists(n):
        raise SkolemError(f"no Skolem sequence of order {n} (need n = 0,1 mod 4)")
    if n == 1:
        one_based = [(1, 2)]
    elif n == 5:
        one_based = [(1, 2), (7, 9), (3, 6), (4, 8), (5, 10)]
    elif n % 4 == 0:
        one_based = _pairs_mod0(n // 4)
    else:
        one_based = _pairs_mod1(n // 4)
    return [(a - 1, b - 1) for a, b in one_based]


def skolem_sequence(n: int) -> list[int]:
    """The sequence form: seq[i] = k iff slot i holds value k."""
    seq = [0] * (2 * n)
    for a, b in skolem_pairs(n):
        seq[a] = seq[b] = b - a
    return seq


def is_skolem_sequence(seq: list[int]) -> bool:
    """Invariant check: every k in [1, n] occurs exactly twice, k slots apart."""
    if len(seq) % 2:
        return False
    n = len(seq) // 2
    first: dict[int, int] = {}
    count: dict[int, int] = {}
    for i, k in enumerate(seq):
        if not 1 <= k <= n:
            return False
        count[k] = count.get(k, 0) + 1
        if k in first:
            if i - first[k] != k or count[k] > 2:
                return False
        else:
            first[k] = i
    return all(count.get(k) == 2 for k in range(1, n + 1))


def skolem_matching_edges(n: int) -> Matching:
    """Perfect matching of K_{2n} with reduced lengths exactly {1, ..., n}."""
    return Matching.build(2 * n, skolem_pairs(n))


def skolem_pairs_backtracking(n: int) -> list[tuple[int, int]] | None:
    """Exact search for a Skolem slot pairing; test-support cross-check only.

    Places values largest first into the lexicographically least free slots.
    Practical for n up to roughly 30.
    """
    if n < 1 or not skolem_order_exists(n):
        return None
    occupied = [False] * (2 * n)
    placed: list[tuple[int, int]] = []

    def place(k: int) -> bool:
        if k == 0:
            return True
        for i in range(2 * n - k):
            if not occupied[i] and not occupied[i + k]:
                occupied[i] = occupied[i + k] = True
                placed.append((i, i + k))
                if place(k - 1):
                    return True
                placed.pop()
                occupied[i] = occupied[i + k] = False
        return False

    return placed[::-1] if place(n) else None
