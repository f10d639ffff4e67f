"""Matching-rewriting toolbox: translation, unit scaling, lift/project, concat.

These are the building blocks every composite construction is assembled from.
All functions are pure and return fresh canonical matchings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Matching, edge_length


class TransformError(ValueError):
    pass


def translate(matching: Matching, k: int, *, modular: bool = True,
              target_v: int | None = None) -> Matching:
    """Shift every vertex by k.

    Modular translation reduces vertices mod v and preserves the circular
    length list.  Non-modular translation embeds the shifted matching into
    K_{target_v} and preserves reduced lengths exactly; it raises if any
    shifted vertex falls outside [0, target_v - 1].
    """
    if modular:
        v = matching.v
        return Matching.build(v, [((u + k) % v, (w + k) % v) for u, w in matching.edges])
    v = matching.v if target_v is None else target_v
    shifted = [(u + k, w + k) for u, w in matching.edges]
    for u, w in shifted:
        if not (0 <= u < v and 0 <= w < v):
            raise TransformError(
                f"translate by {k} leaves K_{v}: edge {{{u},{w}}} out of range")
    return Matching.build(v, shifted)


def concat(first: Matching, second: Matching) -> Matching:
    """Glue a matching of K_{v1} and one of K_{v2} into one of K_{v1+v2}.

    The second matching is shifted past the first, so the reduced-length
    multiset of the result is the union of the operands' reduced lengths.
    Circular lengths may change: a long edge of K_{v2} can wrap differently
    inside K_{v1+v2}.
    """
    v = first.v + second.v
    edges = list(first.edges) + [(u + first.v, w + first.v) for u, w in second.edges]
    return Matching.build(v, edges)


def concat_all(parts: list[Matching]) -> Matching:
    if not parts:
        raise TransformError("concat_all needs at least one part")
    out = parts[0]
    for part in parts[1:]:
        out = concat(out, part)
    return out


def scale_by_unit(matching: Matching, x: int) -> Matching:
    """Relabel u -> x*u mod v for a unit x; a bijection on vertices.

    An edge of length m maps to one of length min(x*m mod v, v - x*m mod v).
    """
    v = matching.v
    if math.gcd(x, v) != 1:
        raise TransformError(f"{x} is not a unit modulo {v}")
    return Matching.build(v, [((x * u) % v, (x * w) % v) for u, w in matching.edges])


@dataclass(frozen=True)
class ResidueDecomposition:
    """c perfect matchings of K_{2n}, one per residue class mod c of a host K_{2nc}."""

    c: int
    parts: tuple[Matching, ...]

    @property
    def part_order(self) -> int:
        return self.parts[0].v


def lift(parts: list[Matching]) -> Matching:
    """Interleave c matchings of K_{2n} into one matching of K_{2nc}.

    Part i is relabeled u -> c*u + i, so its vertices land in residue class i
    and an edge of length m becomes one of length c*m.
    """
    if not parts:
        raise TransformError("lift needs at least one part")
    c = len(parts)
    v = parts[0].v
    if any(p.v != v for p in parts):
        raise TransformError("lift parts must share one order")
    edges = []
    for i, part in enumerate(parts):
        edges.extend((c * u + i, c * w + i) for u, w in part.edges)
    return Matching.build(v * c, edges)


def project(matching: Matching, c: int) -> ResidueDecomposition:
    """Split a matching of K_{2nc} whose lengths are all multiples of c.

    Every edge with length divisible by c joins two vertices of the same
    residue class mod c; collapsing class i by u -> (u - i) / c yields a
    perfect matching of K_{2n}.  lift(project(F, c).parts) realizes the same
    length list as F.
    """
    v = matching.v
    if c < 1 or v % (2 * c) != 0:
        raise TransformError(f"cannot project K_{v} by c={c}")
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(c)]
    for u, w in matching.edges:
        if edge_length(v, u, w) % c != 0:
            raise TransformError(
                f"edge {{{u},{w}}} has length {edge_length(v, u, w)} not divisible by {c}")
        i = u % c
        buckets[i].append(((u - i) // c, (w - i) // c))
    small_v = v // c
    return ResidueDecomposition(c, tuple(Matching.build(small_v, b) for b in buckets))
