"""Decision procedures for length lists.

Necessary conditions valid for every list (parity of the even-length count,
the divisor bound, the signed-sum test for all-odd lists, parity after
projection by a common factor), plus complete characterizations for the
settled families: single length, two distinct lengths, {x, y, n^(n-2)}, and
the equal-multiplicity families.  Lists outside every settled family get an
honest Unknown.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import LengthList, Verdict


def _divisors(v: int) -> list[int]:
    out = [d for d in range(1, int(math.isqrt(v)) + 1) if v % d == 0]
    out += [v // d for d in reversed(out) if d * d != v]
    return out


def divisor_condition(lst: LengthList, v: int) -> tuple[bool, int | None]:
    """Counting bound: for each divisor d of v with d not dividing n=v/2, the
    multiples of d in the list may not exceed (v - d) / 2.

    Returns (True, None) or (False, violating d).
    """
    n = v // 2
    for d in _divisors(v):
        if d == 1 or n % d == 0:
            continue
        multiples = sum(lst.mult[m] for m in range(d, lst.n + 1, d))
        if 2 * multiples > v - d:
            return False, d
    return True, None


def even_count_condition(lst: LengthList) -> bool:
    """The total multiplicity of even lengths must be even."""
    return sum(lst.mult[m] for m in range(2, lst.n + 1, 2)) % 2 == 0


def signed_sum_condition(lst: LengthList, n: int) -> bool:
    """For an all-odd list: some signing of the entries sums to n mod 2n.

    Computed as a subset-sum reachability pass over residues mod 2n, kept in
    a single bitmask.
    """
    values = list(lst.lengths())
    if any(x % 2 == 0 for x in values):
        raise ValueError("signed_sum_condition requires an all-odd list")
    mod = 2 * n
    full = (1 << mod) - 1
    reach = 1  # residue 0 reachable with no terms
    for x in values:
        x %= mod
        up = ((reach << x) | (reach >> (mod - x))) & full
        down = ((reach >> x) | (reach << (mod - x))) & full
        reach = up | down
    return bool(reach >> (n % mod) & 1)


def projection_parity_condition(lst: LengthList, v: int) -> tuple[bool, int | None]:
    """Parity check after collapsing by a common factor of all lengths.

    If every length is divisible by c and c divides n, a realizing matching
    would split into c matchings of K_{2n/c}; each projected part needs an
    even count of even lengths, so the total count of lengths divisible by 2c
    must be even.  Returns (True, None) or (False, violating c).
    """
    n = v // 2
    g = 0
    for m in lst.support:
        g = math.gcd(g, m)
    for c in _divisors(math.gcd(g, n)):
        if c == 1:
            continue
        doubly = sum(lst.mult[m] for m in range(2 * c, lst.n + 1, 2 * c))
        if doubly % 2:
            return False, c
    return True, None


def decide_uniform(n: int, x: int) -> Verdict:
    """Single-length list {x^n}: feasible iff gcd(x, 2n) divides n."""
    if not 1 <= x <= n:
        raise ValueError(f"x={x} outside [1, {n}]")
    d = math.gcd(x, 2 * n)
    if n % d == 0:
        return Verdict.feasible("uniform", n=n, x=x, d=d)
    return Verdict.infeasible(f"uniform: gcd(x,2n)={d} does not divide n", n=n, x=x, d=d)


@dataclass(frozen=True)
class TwoLengthInstance:
    """The list {x^(n-a), y^a} with 1 <= x,y <= n, x != y, 1 <= a < n."""

    n: int
    x: int
    y: int
    a: int

    def __post_init__(self) -> None:
        if not (1 <= self.x <= self.n and 1 <= self.y <= self.n):
            raise ValueError("lengths outside [1, n]")
        if self.x == self.y:
            raise ValueError("x == y is a uniform list; use decide_uniform")
        if not 1 <= self.a < self.n:
            raise ValueError("a must lie in [1, n-1]")

    @property
    def d_x(self) -> int:
        return math.gcd(self.x, 2 * self.n)

    @property
    def d_y(self) -> int:
        return math.gcd(self.y, 2 * self.n)

    @property
    def d(self) -> int:
        return math.gcd(self.d_x, self.y)

    def length_list(self) -> LengthList:
        return LengthList.from_counts({self.x: self.n - self.a, self.y: self.a}, self.n)

    def swapped(self) -> "TwoLengthInstance":
        return TwoLengthInstance(self.n, self.y, self.x, self.n - self.a)


def decide_two_lengths(inst: TwoLengthInstance) -> Verdict:
    """Full classification of the two-length case.

    With d = gcd(x, y, 2n), d_x = gcd(x, 2n), d_y = gcd(y, 2n): feasible iff
    d | n and one of
      (1) x/d even, y/d odd:  n-a even and (d_x | n  or  2a >= d_x);
      (2) x/d odd, y/d even:  a even   and (d_y | n  or  2(n-a) >= d_y);
      (3) x/d, y/d both odd:  (a even or d*a >= d_x) and
                              (n-a even or d*(n-a) >= d_y).
    """
    n, x, y, a = inst.n, inst.x, inst.y, inst.a
    d, d_x, d_y = inst.d, inst.d_x, inst.d_y
    if n % d != 0:
        return Verdict.infeasible(f"two-length: d={d} does not divide n", d=d)
    x_even = (x // d) % 2 == 0
    y_even = (y // d) % 2 == 0
    if x_even:
        if (n - a) % 2:
            return Verdict.infeasible("two-length clause (1): n-a odd", d=d)
        if n % d_x == 0:
            return Verdict.feasible("two-length:1a", d=d)
        if 2 * a >= d_x:
            return Verdict.feasible("two-length:1b", d=d)
        return Verdict.infeasible("two-length clause (1b): 2a < d_x", d=d, d_x=d_x)
    if y_even:
        if a % 2:
            return Verdict.infeasible("two-length clause (2): a odd", d=d)
        if n % d_y == 0:
            return Verdict.feasible("two-length:2a", d=d)
        if 2 * (n - a) >= d_y:
            return Verdict.feasible("two-length:2b", d=d)
        return Verdict.infeasible("two-length clause (2b): 2(n-a) < d_y", d=d, d_y=d_y)
    if a % 2 and d * a < d_x:
        return Verdict.infeasible("two-length clause (3a): a odd and d*a < d_x", d=d, d_x=d_x)
    if (n - a) % 2 and d * (n - a) < d_y:
        return Verdict.infeasible(
            "two-length clause (3b): n-a odd and d*(n-a) < d_y", d=d, d_y=d_y)
    return Verdict.feasible("two-length:3", d=d)


def decide_x_y_n(n: int, x: int, y: int) -> Verdict:
    """The family {x, y, n^(n-2)} with 1 <= x < y < n never has a solution."""
    if not 1 <= x < y < n:
        raise ValueError("need 1 <= x < y < n")
    return Verdict.infeasible("x-y-n family", n=n, x=x, y=y)


# ---------------------------------------------------------------------------
# family detection for the composite decision procedure


def _equal_multiplicity(lst: LengthList) -> int | None:
    """Common multiplicity t if all present lengths share it, else None."""
    mults = {lst.mult[m] for m in lst.support}
    return mults.pop() if len(mults) == 1 else None


def match_consecutive(lst: LengthList) -> int | None:
    """t for lists {1^t, 2^t, ..., (n/t)^t}."""
    t = _equal_multiplicity(lst)
    if t is None:
        return None
    top = lst.support[-1]
    if lst.support == tuple(range(1, top + 1)) and t * top == lst.total:
        return t
    return None


def match_uniform_odd(lst: LengthList) -> int | None:
    """t for lists {1^t, 3^t, ..., (2n/t - 1)^t}."""
    t = _equal_multiplicity(lst)
    if t is None or t < 2:
        return None
    top = lst.support[-1]
    if lst.support == tuple(range(1, top + 1, 2)) and lst.n == t * (top + 1) // 2:
        return t
    return None


def match_uniform_even(lst: LengthList) -> int | None:
    """t for lists {2^t, 4^t, ..., (2n/t)^t}."""
    t = _equal_multiplicity(lst)
    if t is None or t < 2:
        return None
    top = lst.support[-1]
    if lst.support == tuple(range(2, top + 1, 2)) and 2 * lst.n == t * top:
        return t
    return None


def match_skolem_stack(lst: LengthList) -> bool:
    """Staircase lists: support {1..t}, non-increasing multiplicities with
    a_{4k+2} = a_{4k+3} = a_{4k+4} for every block."""
    top = lst.support[-1]
    if lst.support != tuple(range(1, top + 1)):
        return False
    a = [lst.mult[i] if i <= lst.n else 0 for i in range(1, top + 5)]
    if any(a[i] < a[i + 1] for i in range(top - 1)):
        return False
    for start in range(1, top, 4):
        # a is 0-based on value-1: entries start..start+2 are values 4k+2..4k+4
        if not (a[start] == a[start + 1] == a[start + 2]):
            return False
    return True


def match_chain(lst: LengthList, v: int) -> str | None:
    """'odd' for {1^2, 3^2, ..., (n-2)^2, n}; 'even' for {2^2, ..., (n-1)^2, n}."""
    n = v // 2
    if n < 3 or n % 2 == 0 or lst.n != n or lst.mult[n] != 1:
        return None
    odd = all(lst.mult[m] == (2 if m % 2 == 1 else 0) for m in range(1, n))
    if odd:
        return "odd"
    even = all(lst.mult[m] == (2 if m % 2 == 0 else 0) for m in range(1, n))
    return "even" if even else None


def sparse_parameters(lst: LengthList) -> tuple[int, int] | None:
    """(R, S) of the sparse packing condition, or None when it fails.

    R = number of even entries, S = total length-1 filler the packing blocks
    consume; the construction applies whenever R is even and a_1 >= S.
    """
    ones = lst.mult[1]
    r = sum(lst.mult[m] for m in range(2, lst.n + 1, 2))
    s = sum((m - 1) // 2 * lst.mult[m] for m in range(2, lst.n + 1))
    if r % 2 == 0 and ones >= s:
        return r, s
    return None


def match_x_y_n(lst: LengthList) -> tuple[int, int] | None:
    n = lst.n
    if n < 3 or lst.mult[n] != n - 2:
        return None
    rest = [m for m in lst.support if m != n]
    if len(rest) == 2 and lst.mult[rest[0]] == lst.mult[rest[1]] == 1:
        return rest[0], rest[1]
    return None


def decide(lst: LengthList, v: int) -> Verdict:
    """Composite decision procedure, cheap conditions first.

    Applies the universal necessary conditions, then the exact clauses for
    the settled families, then the sparse packing criterion; everything else
    is Unknown (the oracle can still settle small instances).
    """
    n = v // 2
    if v % 2 or not lst.is_instance_of(v):
        raise ValueError(f"list {lst} is not an instance for K_{v}")

    if not even_count_condition(lst):
        return Verdict.infeasible("even-count: odd number of even lengths")
    ok, d = divisor_condition(lst, v)
    if not ok:
        return Verdict.infeasible(f"divisor condition at d={d}", d=d)
    if all(m % 2 for m in lst.support) and not signed_sum_condition(lst, n):
        return Verdict.infeasible("signed-sum: no signing reaches n mod 2n")
    ok, c = projection_parity_condition(lst, v)
    if not ok:
        return Verdict.infeasible(
            f"projection c={c}: projected parts cannot all have even even-counts", c=c)

    support = lst.support
    if len(support) == 1:
        return decide_uniform(n, support[0])
    if len(support) == 2:
        x, y = support
        return decide_two_lengths(TwoLengthInstance(n, x, y, lst.mult[y]))
    xy = match_x_y_n(lst)
    if xy is not None:
        return decide_x_y_n(n, *xy)

    t = match_consecutive(lst)
    if t is not None:
        top = lst.total // t
        if t % 2 == 0 or top % 4 in (0, 1):
            if t == 1:
                return Verdict.feasible("skolem", n=n)
            return Verdict.feasible("consecutive", t=t)
        return Verdict.infeasible("consecutive: t odd and n/t = 2,3 mod 4", t=t)
    if match_skolem_stack(lst):
        return Verdict.feasible("skolem-stack")
    t = match_uniform_odd(lst)
    if t is not None:
        return Verdict.feasible("uniform-odd", t=t)
    t = match_uniform_even(lst)
    if t is not None:
        s = t if t % 2 == 0 else 4 * t
        if n % s == 0:
            return Verdict.feasible("uniform-even", t=t)
        return Verdict.infeasible(f"uniform-even: n not divisible by s={s}", t=t, s=s)
    chain = match_chain(lst, v)
    if chain is not None:
        return Verdict.feasible(f"chain-{chain}")
    if sparse_parameters(lst) is not None:
        return Verdict.feasible("sparse")
    return Verdict.unknown()
