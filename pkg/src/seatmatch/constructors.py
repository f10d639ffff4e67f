"""Explicit constructions, one per settled family, plus the dispatcher.

Every constructor returns a canonical perfect matching and self-checks it
against its target list before returning (fail-closed): the constructions
have many case splits, and a silent mistake in any block formula must become
a hard error, never a wrong matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .core import LengthList, Matching, Verdict, verify_realizes
from .feasibility import (
    TwoLengthInstance,
    decide,
    decide_two_lengths,
    match_consecutive,
    match_skolem_stack,
    match_uniform_even,
    match_uniform_odd,
    sparse_parameters,
)
from .skolem import SkolemError, skolem_pairs
from .transforms import concat_all, lift, scale_by_unit


class InfeasibleListError(ValueError):
    """The requested list provably has no realization; carries the witness."""

    def __init__(self, witness: str):
        super().__init__(witness)
        self.witness = witness


class NotApplicableError(ValueError):
    """The construction's sufficient conditions fail; says nothing about
    existence."""


class ConstructionError(RuntimeError):
    """A constructor produced a matching that fails self-verification.

    Indicates a bug, never a property of the input.
    """


@dataclass(frozen=True)
class SolveReport:
    matching: Matching
    route: str
    verified: bool


def _finish(v: int, edges: list[tuple[int, int]], target: LengthList) -> Matching:
    matching = Matching.build(v, [(u % v, w % v) for u, w in edges])
    ok, why = verify_realizes(matching, target)
    if not ok:
        raise ConstructionError(f"self-check failed for {target}: {why}")
    return matching


def _interval_pairs(lo: int, hi: int) -> list[tuple[int, int]]:
    """Length-1 edges covering the interval [lo, hi] (must have even size)."""
    if (hi - lo + 1) % 2:
        raise ConstructionError(f"interval [{lo},{hi}] has odd size")
    return [(p, p + 1) for p in range(lo, hi, 2)]


# ---------------------------------------------------------------------------
# single length


def construct_uniform(n: int, x: int) -> Matching:
    """All n edges of length x; exists iff gcd(x, 2n) divides n."""
    if not 1 <= x <= n:
        raise ValueError(f"x={x} outside [1, {n}]")
    v = 2 * n
    d = math.gcd(x, v)
    if n % d != 0:
        raise InfeasibleListError(f"uniform: gcd(x,2n)={d} does not divide n")
    edges = [(2 * i * x + j, (2 * i + 1) * x + j)
             for i in range(n // d) for j in range(d)]
    return _finish(v, edges, LengthList.from_counts({x: n}, n))


# ---------------------------------------------------------------------------
# two lengths, x even (coprime-to-y gcd)


def construct_even_x_pair(n: int, a: int, x: int, y: int) -> Matching:
    """{x^(n-a), y^a} with x even and gcd(gcd(x, 2n), y) = 1.

    Tiles the cyclic group with translated runs of x-steps and y-steps:
    block A mixes the two lengths to absorb the remainder, B is all-x, C is
    all-y, and when gcd(x, 2n) does not divide n an extra all-y block D
    closes the last orbit.
    """
    v = 2 * n
    d = math.gcd(x, v)
    if x % 2 or x == y or not (1 <= x <= n and 1 <= y <= n) or not 1 <= a < n:
        raise ValueError("need even x != y in [1,n] and a in [1,n-1]")
    if math.gcd(d, y) != 1:
        raise ValueError(f"gcd(gcd(x,2n), y) = {math.gcd(d, y)} != 1")
    if (n - a) % 2:
        raise InfeasibleListError("even-x pair: n-a must be even")
    if n % d == 0:
        nbar = n // d
        extra_d = False
    else:
        if 2 * a < d:
            raise InfeasibleListError("even-x pair: 2a < gcd(x,2n)")
        nbar = (v - d) // (2 * d)
        extra_d = True
    q, r = divmod((n - a) // 2, nbar)

    block_a = ([(2 * i * x, (2 * i + 1) * x) for i in range(r)]
               + [(2 * i * x + y, (2 * i + 1) * x + y) for i in range(r)]
               + [(i * x, i * x + y) for i in range(2 * r, 2 * nbar)])
    block_b = ([(2 * i * x, (2 * i + 1) * x) for i in range(nbar)]
               + [(2 * i * x + y, (2 * i + 1) * x + y) for i in range(nbar)])
    block_c = [(i * x, i * x + y) for i in range(2 * nbar)]

    def shifted(block: list[tuple[int, int]], k: int) -> list[tuple[int, int]]:
        return [(u + 2 * k * y, w + 2 * k * y) for u, w in block]

    edges: list[tuple[int, int]] = []
    if not extra_d:
        edges += block_a
        for k in range(1, q + 1):
            edges += shifted(block_b, k)
        for k in range(q + 1, (d - 2) // 2 + 1):
            edges += shifted(block_c, k)
    else:
        base = (v // d - 1) * x
        block_d = [(base + 2 * j * y, base + (2 * j + 1) * y) for j in range(d // 2)]
        if r == 0:
            for k in range(q):
                edges += shifted(block_b, k)
            for k in range(q, (d - 2) // 2 + 1):
                edges += shifted(block_c, k)
        else:
            edges += block_a
            for k in range(1, q + 1):
                edges += shifted(block_b, k)
            for k in range(q + 1, (d - 2) // 2 + 1):
                edges += shifted(block_c, k)
        edges += block_d
    return _finish(v, edges, LengthList.from_counts({x: n - a, y: a}, n))


# ---------------------------------------------------------------------------
# {1^a, x^(n-a)} families


def construct_one_x_large_a(n: int, x: int, a: int) -> Matching:
    """{1^a, x^(n-a)} for odd x with 1 < x < n and a >= n/2.

    Packs the few length-x edges into translated runs and fills the leftover
    intervals with length-1 edges; the run shape splits on b = n - a mod x.
    """
    if x % 2 == 0 or not 1 < x < n:
        raise ValueError("need odd x with 1 < x < n")
    if not (2 * a >= n and a < n):
        raise ValueError("need n/2 <= a < n")
    v = 2 * n
    b = n - a
    s, t = divmod(b, x)
    edges: list[tuple[int, int]] = []
    if t == 0:
        edges += [(2 * i * x + j, (2 * i + 1) * x + j)
                  for i in range(s) for j in range(x)]
        edges += _interval_pairs(2 * s * x, v - 1)
    elif t % 2 == 1:
        edges += [(2 * i * x + j, (2 * i + 1) * x + j)
                  for i in range(s) for j in range(x)]
        edges += [(2 * s * x + j, (2 * s + 1) * x + j) for j in range(t)]
        edges += _interval_pairs(2 * s * x + t, 2 * s * x + x - 1)
        edges += _interval_pairs(2 * s * x + x + t, v - 1)
    else:
        z = n - x
        k = x // (2 * z)
        if s > 0 or k == 0:
            edges += [(2 * i * x + j, (2 * i + 1) * x + j)
                      for i in range(s) for j in range(x)]
            edges.append((2 * s * x, (2 * s + 1) * x))
            edges += [((2 * s + 1) * x + j, (2 * s + 2) * x + j) for j in range(1, t)]
            edges += _interval_pairs(2 * s * x + 1, 2 * s * x + x - 1)
            edges += _interval_pairs(2 * s * x + x + t, 2 * s * x + 2 * x)
            edges += _interval_pairs(2 * s * x + 2 * x + t, v - 1)
        else:
            p, r = divmod(b, 2 * z)
            edges += [(2 * i * z, 2 * (i + 1) * z + x) for i in range(p)]
            edges += [(2 * i * z + j, 2 * i * z + x + j)
                      for i in range(p) for j in range(1, 2 * z)]
            edges += [(2 * p * z + j, 2 * p * z + x + j) for j in range(1, r)]
            h = 0
            if r > 0:
                edges.append((2 * p * z, 2 * (p + 1) * z + x))
                h = 1
            edges += _interval_pairs(b, x)
            edges += _interval_pairs(x + b - h + 1, 2 * (p + 1) * z + x - h)
            if 2 * (p + 1) * z + x + 1 <= v - 1:
                edges += _interval_pairs(2 * (p + 1) * z + x + 1, v - 1)
    return _finish(v, edges, LengthList.from_counts({1: a, x: b}, n))


def construct_one_n(n: int, a: int) -> Matching:
    """{1^a, n^(n-a)} for odd n and even a: a bundle of diameters plus two
    symmetric runs of length-1 edges."""
    if n % 2 == 0 or a % 2 or not 2 <= a < n:
        raise ValueError("need odd n and even a in [2, n-1]")
    v = 2 * n
    edges = [(j, n + j) for j in range(n - a)]
    edges += _interval_pairs(n - a, n - 1)
    edges += _interval_pairs(v - a, v - 1)
    return _finish(v, edges, LengthList.from_counts({1: a, n: n - a}, n))


def construct_one_x(n: int, x: int, a: int) -> Matching:
    """{1^a, x^(n-a)} for x a unit mod 2n, any a in [1, n-1].

    When a is small, builds the companion list with the folded inverse of x
    in place of 1 and relabels by multiplication with x.
    """
    v = 2 * n
    if math.gcd(x, v) != 1:
        raise ValueError(f"x={x} is not a unit modulo {v}")
    if not 1 < x < n:
        raise ValueError("need 1 < x < n")
    if 2 * a >= n:
        return construct_one_x_large_a(n, x, a)
    y = pow(x, -1, v)
    ybar = y if y <= n else v - y
    base = construct_one_x_large_a(n, ybar, n - a)
    matching = scale_by_unit(base, x)
    ok, why = verify_realizes(matching, LengthList.from_counts({1: a, x: n - a}, n))
    if not ok:
        raise ConstructionError(f"inverse relabeling failed: {why}")
    return matching


# ---------------------------------------------------------------------------
# two lengths, both odd


def construct_odd_pair(n: int, a: int, x: int, y: int) -> Matching:
    """{x^(n-a), y^a} with x, y odd and gcd(gcd(x,2n), gcd(y,2n)) = 1.

    Reduces to a {1, r} list via the inverse unit when gcd(x, 2n) = 1;
    otherwise builds a template matching in the quotient K_{2n/d} and blows
    each template edge up into a block of d edges mixing the two lengths.
    """
    v = 2 * n
    if x % 2 == 0 or y % 2 == 0 or x == y:
        raise ValueError("need distinct odd x, y")
    if not (1 <= x <= n and 1 <= y <= n and 1 <= a < n):
        raise ValueError("lengths in [1,n], a in [1,n-1]")
    d_x, d_y = math.gcd(x, v), math.gcd(y, v)
    if math.gcd(d_x, d_y) != 1:
        raise ValueError(f"gcd(d_x, d_y) = {math.gcd(d_x, d_y)} != 1")
    if a % 2 and a < d_x:
        raise InfeasibleListError("odd pair: a odd and a < gcd(x,2n)")
    if (n - a) % 2 and n - a < d_y:
        raise InfeasibleListError("odd pair: n-a odd and n-a < gcd(y,2n)")
    target = LengthList.from_counts({x: n - a, y: a}, n)

    if a > n - a:
        x, y, a = y, x, n - a
    d = math.gcd(x, v)

    if x == n:
        # forces gcd(y, 2n) = 1 and a even; fold the {1, n} list through y
        matching = scale_by_unit(construct_one_n(n, a), y)
    elif d == 1:
        p = pow(x, -1, v)
        q = (y * p) % v
        r = min(q, v - q)
        if r == n:
            base = construct_one_n(n, n - a)
        else:
            base = construct_one_x_large_a(n, r, n - a)
        matching = scale_by_unit(base, x)
    else:
        matching = Matching.build(v, _odd_pair_composite(n, a, x, y, d))
    ok, why = verify_realizes(matching, target)
    if not ok:
        raise ConstructionError(f"odd pair self-check failed: {why}")
    return matching


def _odd_pair_composite(n: int, a: int, x: int, y: int,
                        d: int) -> list[tuple[int, int]]:
    """Blow-up path of the odd/odd construction for d = gcd(x, 2n) > 1.

    Returns raw edges mod 2n; a <= n - a is assumed.
    """
    v = 2 * n
    m = n // d
    z = x // d
    mu = pow(z, -1, 2 * m)
    ybar = min(y % (2 * m), 2 * m - y % (2 * m))
    theta = (ybar * mu) % (2 * m)

    if a % 2 == 0:
        template = [((2 * i * z) % (2 * m), ((2 * i + 1) * z) % (2 * m))
                    for i in range(m)]
    else:
        template = [(((2 * i - 1) * z) % (2 * m), (2 * i * z) % (2 * m))
                    for i in range(1, (theta - 1) // 2 + 1)]
        template += [((2 * i * z) % (2 * m), ((2 * i + 1) * z) % (2 * m))
                     for i in range((theta + 1) // 2, m)]

    def block(u: int, w: int, k: int) -> list[tuple[int, int]]:
        # d edges on the residue classes of du and dw: 2k of length y, rest x
        out = [(d * u + 2 * i * y, d * u + (2 * i + 1) * y) for i in range(k)]
        out += [(d * w + 2 * i * y, d * w + (2 * i + 1) * y) for i in range(k)]
        out += [(d * u + i * y, d * w + i * y) for i in range(2 * k, d)]
        return out

    b, c = divmod(a, d - 1)
    edges: list[tuple[int, int]] = []
    if a % 2 == 0:
        ks = [(d - 1) // 2] * b + [c // 2] + [0] * (m - b - 1)
    else:
        # the block replacing the ybar-edge must cover the classes of 0 and
        # ybar = min(xi, 2m - xi); multiples j*y with j in [0, 2d-1] cover
        # class(xi), those with j in [-d, d-1] cover class(2m - xi)
        offset = 0 if y % (2 * m) <= m else -d
        edges += [(j * y, (j + 1) * y) for j in range(offset, offset + 2 * d - 1, 2)]
        ks = [(d - 1) // 2] * (b - 1)
        if c > 1:
            ks.append((c - 1) // 2)
        ks += [0] * (len(template) - len(ks))
    for (u, w), k in zip(template, ks):
        edges += block(u, w, k)
    return [(e0 % v, e1 % v) for e0, e1 in edges]


# ---------------------------------------------------------------------------
# two lengths, general gcd (the main classification)


def _normalize_composite(inst: TwoLengthInstance) -> TwoLengthInstance:
    """Relabel so that y/d is odd; among two odd quotients prefer as y the
    length with larger gcd with 2n, then the smaller value."""
    d = inst.d
    xb_odd = (inst.x // d) % 2 == 1
    yb_odd = (inst.y // d) % 2 == 1
    if xb_odd and not yb_odd:
        return inst.swapped()
    if xb_odd and yb_odd:
        kx = (inst.d_x, -inst.x)
        ky = (inst.d_y, -inst.y)
        if kx > ky:
            return inst.swapped()
    return inst


def two_lengths_plan(inst: TwoLengthInstance) -> tuple[str, Optional[list[int]]]:
    """Route tag and, for the lifted path, the per-residue y-multiplicities.

    Tags: ``direct-even-x``, ``direct-odd``, ``composite-even/I``,
    ``composite-odd/I|II|III``.
    """
    verdict = decide_two_lengths(inst)
    if not verdict.is_feasible:
        raise InfeasibleListError(verdict.witness or "two-length infeasible")
    d = inst.d
    if d == 1:
        if inst.x % 2 == 0 or inst.y % 2 == 0:
            return "direct-even-x", None
        return "direct-odd", None
    inst = _normalize_composite(inst)
    n, a = inst.n, inst.a
    nb = n // d
    xb, yb = inst.x // d, inst.y // d
    e_x = math.gcd(xb, 2 * nb)
    e_y = math.gcd(yb, 2 * nb)
    if xb % 2 == 0:
        q, r = divmod((n - a) // 2, d)
        return "composite-even/I", [nb - (2 * q + 2)] * r + [nb - 2 * q] * (d - r)
    if yb == nb:
        # degenerate quotient (y/d equals n/d, so e_y = nb): a mixed part
        # needs an odd y-count, and e_x is forced to 1, so plan directly with
        # k odd part-counts; the three-case split below assumes e_y <= nb/2
        if e_x != 1:
            raise ConstructionError("degenerate quotient with e_x > 1")
        k = -(-a // nb)
        if k % 2 != a % 2:
            k += 1
        if k > d:
            raise ConstructionError("degenerate quotient plan needs too many parts")
        full, rem = divmod(a - k, nb - 1)
        a_list = [nb] * full
        if full < k:
            a_list += [1 + rem] + [1] * (k - full - 1)
        return "composite-odd/degenerate", a_list + [0] * (d - k)
    q, r = divmod(a, nb)
    s = e_x - r if (r % 2 == 1 and r < e_x) else 0
    t = e_y - (nb - r) if ((nb - r) % 2 == 1 and (nb - r) < e_y) else 0
    if s == 0 and t == 0:
        return "composite-odd/I", [nb] * q + [r] + [0] * (d - q - 1)
    if s > 0:
        return "composite-odd/II", [nb] * (q - 1) + [nb - s, r + s] + [0] * (d - q - 1)
    return "composite-odd/III", [nb] * q + [r - t, t] + [0] * (d - q - 2)


def _pair_part(n: int, a: int, x: int, y: int) -> Matching:
    """A {x^(n-a), y^a} matching for a in [0, n], dispatching on degeneracy."""
    if a == 0:
        return construct_uniform(n, x)
    if a == n:
        return construct_uniform(n, y)
    if x % 2 == 0:
        return construct_even_x_pair(n, a, x, y)
    if y % 2 == 0:
        return construct_even_x_pair(n, n - a, y, x)
    return construct_odd_pair(n, a, x, y)


def construct_two_lengths(inst: TwoLengthInstance) -> Matching:
    """{x^(n-a), y^a} for any feasible instance of the full classification.

    d = 1 instances route to the direct constructions; otherwise the list is
    realized as the lift of d quotient matchings of K_{2n/d} whose per-part
    y-multiplicities come from two_lengths_plan.
    """
    plan, a_list = two_lengths_plan(inst)
    if a_list is None:
        matching = _pair_part(inst.n, inst.a, inst.x, inst.y)
    else:
        norm = _normalize_composite(inst)
        d = norm.d
        nb = norm.n // d
        xb, yb = norm.x // d, norm.y // d
        parts = [_pair_part(nb, ai, xb, yb) for ai in a_list]
        matching = lift(parts)
    ok, why = verify_realizes(matching, inst.length_list())
    if not ok:
        raise ConstructionError(f"two-length ({plan}) self-check failed: {why}")
    return matching


# ---------------------------------------------------------------------------
# equal-multiplicity families


def skolem_matching(n: int) -> Matching:
    """{1, 2, ..., n}: the matching read off a Skolem sequence of order n."""
    try:
        pairs = skolem_pairs(n)
    except SkolemError as exc:
        raise InfeasibleListError(str(exc)) from exc
    target = LengthList.from_counts({i: 1 for i in range(1, n + 1)}, n)
    return _finish(2 * n, pairs, target)


def construct_uniform_odd(n: int, t: int) -> Matching:
    """{1^t, 3^t, ..., (2n/t - 1)^t}: t nested fans of span 2n/t."""
    if t < 2:
        raise ValueError("need t >= 2")
    if n % t:
        raise InfeasibleListError(f"odd-uniform: t={t} does not divide n={n}")
    span = 2 * n // t
    edges = [(span * i + j, span * (i + 1) - j - 1)
             for i in range(t) for j in range(n // t)]
    target = LengthList.from_counts({m: t for m in range(1, span, 2)}, n)
    return _finish(2 * n, edges, target)


_EVEN_SEED_K24 = [(0, 8), (1, 7), (2, 6), (3, 5), (4, 12), (9, 15),
                  (10, 16), (11, 13), (14, 22), (17, 21), (18, 20), (19, 23)]


def _even_uniform_block(n: int, t: int) -> list[tuple[int, int]]:
    """F_{n,t} for even t: fans around odd multiples of n/t plus chords."""
    w = n // t
    edges = [((2 * i + 1) * w - j, (2 * i + 1) * w + j)
             for i in range(t) for j in range(1, w)]
    edges += [(4 * i * w, (4 * i + 2) * w) for i in range(t // 2)]
    edges += [((4 * i + 1) * w, (4 * i + 3) * w) for i in range(t // 2)]
    return edges


def construct_uniform_even(n: int, t: int) -> Matching:
    """{2^t, 4^t, ..., (2n/t)^t}; needs n = 0 mod t (t even) or mod 4t (t odd).

    Odd t composes a fixed K_24 seed with an even-t block, dilates the union
    onto the multiples of n/(4t), and fills the complement with fans.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    s = t if t % 2 == 0 else 4 * t
    if n % s:
        raise InfeasibleListError(f"even-uniform: n={n} not divisible by s={s}")
    target = LengthList.from_counts({m: t for m in range(2, 2 * n // t + 1, 2)}, n)
    if t % 2 == 0:
        return _finish(2 * n, _even_uniform_block(n, t), target)
    seed = list(_EVEN_SEED_K24)
    if t >= 5:
        seed += [(u + 24, w + 24) for u, w in _even_uniform_block(4 * (t - 3), t - 3)]
    if n == 4 * t:
        return _finish(2 * n, seed, target)
    f = n // (4 * t)
    dilated = [(u * f, w * f) for u, w in seed]
    w_ = n // t
    skip = {w_ // 4, w_ // 2, 3 * w_ // 4, w_}
    fans = [((2 * i + 1) * w_ - j, (2 * i + 1) * w_ + j)
            for i in range(t) for j in range(1, w_ + 1) if j not in skip]
    return _finish(2 * n, fans + dilated, target)


def construct_consecutive(n: int, t: int) -> Matching:
    """{1^t, 2^t, ..., (n/t)^t}: Skolem stack when n/t = 0,1 mod 4, else the
    odd-uniform and even-uniform halves glued end to end (t even)."""
    if t < 1 or n % t:
        raise InfeasibleListError(f"consecutive: t={t} does not divide n={n}")
    top = n // t
    target = LengthList.from_counts({m: t for m in range(1, top + 1)}, n)
    if top % 4 in (0, 1):
        parts = [skolem_matching(top) for _ in range(t)]
        matching = concat_all(parts)
    elif t % 2 == 0:
        odd_part = construct_uniform_odd(t * ((top + 1) // 2), t)
        even_part = construct_uniform_even(t * (top // 2), t)
        matching = concat_all([odd_part, even_part])
    else:
        raise InfeasibleListError(
            f"consecutive: t={t} odd and n/t={top} = 2,3 mod 4")
    ok, why = verify_realizes(matching, target)
    if not ok:
        raise ConstructionError(f"consecutive self-check failed: {why}")
    return matching


def construct_skolem_stack(lst: LengthList) -> Matching:
    """Staircase lists {i^(a_i)}: one Skolem matching per staircase column."""
    if not match_skolem_stack(lst):
        raise NotApplicableError(f"{lst} is not a Skolem staircase list")
    top = lst.support[-1]
    columns = []
    for j in range(1, lst.mult[1] + 1):
        columns.append(max(i for i in range(1, top + 1) if lst.mult[i] >= j))
    matching = concat_all([skolem_matching(c) for c in columns])
    ok, why = verify_realizes(matching, lst)
    if not ok:
        raise ConstructionError(f"skolem stack self-check failed: {why}")
    return matching


def construct_chain(n: int, variant: str) -> Matching:
    """Folded matchings for odd n: all odd lengths twice plus n, or all even
    lengths twice plus n."""
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    v = 2 * n
    if variant == "odd":
        edges = [(i, v - 1 - i) for i in range(n)]
        counts = {m: 2 for m in range(1, n - 1, 2)}
    elif variant == "even":
        edges = [(i, (n - 1 - i) % v)
                 for i in list(range((n - 1) // 2)) + list(range(n, (3 * n - 1) // 2))]
        edges.append(((n - 1) // 2, (3 * n - 1) // 2))
        counts = {m: 2 for m in range(2, n, 2)}
    else:
        raise ValueError(f"unknown chain variant {variant!r}")
    counts[n] = 1
    return _finish(v, edges, LengthList.from_counts(counts, n))


# ---------------------------------------------------------------------------
# sparse lists


def _sparse_odd_block(x: int) -> Matching:
    # reduced lengths {1^x, 2x+1}
    edges = [(0, 2 * x + 1)] + [(2 * i + 1, 2 * i + 2) for i in range(x)]
    return Matching.build(2 * (x + 1), edges)


def _sparse_even_block(x: int, y: int) -> Matching:
    # reduced lengths {1^(x+y), 2x+2, 2y+2}
    edges = [(0, 2 * x + 2), (2 * x + 1, 2 * x + 2 * y + 3)]
    edges += [(2 * i + 1, 2 * i + 2)
              for i in list(range(x)) + list(range(x + 1, x + y + 1))]
    return Matching.build(2 * (x + y + 2), edges)


def construct_sparse(lst: LengthList) -> Matching:
    """Greedy block packing for lists with enough 1s and an even count of
    even entries; sufficient, never a proof of non-existence."""
    params = sparse_parameters(lst)
    if params is None:
        raise NotApplicableError(
            "sparse packing needs an even count of even entries and a_1 >= S")
    evens = [m for m in range(lst.n, 1, -1) for _ in range(lst.mult[m]) if m % 2 == 0]
    odds = [m for m in range(lst.n, 2, -1) for _ in range(lst.mult[m]) if m % 2 == 1]
    blocks: list[tuple[int, Matching]] = []
    for e1, e2 in zip(evens[::2], evens[1::2]):
        blocks.append((e1, _sparse_even_block((e2 - 2) // 2, (e1 - 2) // 2)))
    for o in odds:
        blocks.append((o, _sparse_odd_block((o - 1) // 2)))
    _, s = params
    blocks += [(1, _sparse_odd_block(0))] * (lst.mult[1] - s)
    blocks.sort(key=lambda item: -item[0])
    matching = concat_all([b for _, b in blocks])
    ok, why = verify_realizes(matching, lst)
    if not ok:
        raise ConstructionError(f"sparse self-check failed: {why}")
    return matching


# ---------------------------------------------------------------------------
# dispatcher


@dataclass(frozen=True)
class SolveOutcome:
    verdict: Verdict
    report: Optional[SolveReport] = None


def construct_for_verdict(lst: LengthList, v: int, verdict: Verdict) -> SolveReport:
    """Run the constructor named by a feasible verdict."""
    n = v // 2
    route = verdict.route or ""
    if route == "uniform":
        matching = construct_uniform(n, lst.support[0])
    elif route.startswith("two-length"):
        x, y = lst.support
        inst = TwoLengthInstance(n, x, y, lst.mult[y])
        plan, _ = two_lengths_plan(inst)
        matching = construct_two_lengths(inst)
        route = f"{route}/{plan}"
    elif route == "skolem":
        matching = skolem_matching(n)
    elif route == "consecutive":
        matching = construct_consecutive(n, match_consecutive(lst) or 0)
    elif route == "skolem-stack":
        matching = construct_skolem_stack(lst)
    elif route == "uniform-odd":
        matching = construct_uniform_odd(n, match_uniform_odd(lst) or 0)
    elif route == "uniform-even":
        matching = construct_uniform_even(n, match_uniform_even(lst) or 0)
    elif route in ("chain-odd", "chain-even"):
        matching = construct_chain(n, route.split("-")[1])
    elif route == "sparse":
        matching = construct_sparse(lst)
    else:
        raise ConstructionError(f"no constructor for route {route!r}")
    ok, why = verify_realizes(matching, lst)
    if not ok:
        raise ConstructionError(f"route {route} self-check failed: {why}")
    return SolveReport(matching, route, True)


def solve(lst: LengthList, v: int, *, allow_oracle: bool = True,
          oracle_threshold: int = 28) -> SolveOutcome:
    """Decide the list, then construct; falls back to the exhaustive search
    for small undecided instances when allowed."""
    verdict = decide(lst, v)
    if verdict.is_feasible:
        try:
            return SolveOutcome(verdict, construct_for_verdict(lst, v, verdict))
        except (InfeasibleListError, NotApplicableError) as exc:
            raise ConstructionError(
                f"decision/construction disagreement on {lst}: {exc}") from exc
    if verdict.is_infeasible:
        return SolveOutcome(verdict)
    if allow_oracle and v <= oracle_threshold:
        from .oracle import oracle_solve

        found, _ = oracle_solve(lst, v)
        if found is None:
            return SolveOutcome(Verdict.infeasible("oracle exhaustion"))
        ok, why = verify_realizes(found, lst)
        if not ok:
            raise ConstructionError(f"oracle result failed verification: {why}")
        return SolveOutcome(Verdict.feasible("oracle"),
                            SolveReport(found, "oracle", True))
    return SolveOutcome(verdict)
