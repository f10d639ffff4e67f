"""Domain types for seating-couple matchings.

Vertices of the complete graph K_v are 0..v-1 arranged on a circle.  The
length of an edge {u, w} is the circular distance min(|u-w|, v-|u-w|); the
reduced length is the plain difference |u-w|.  A problem instance asks for a
perfect matching of K_{2n} whose multiset of edge lengths equals a prescribed
list of n values from [1, n].
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional


class InvalidEdgeError(ValueError):
    """Raised for degenerate edges (u == w) or out-of-range vertices."""


class InvalidListError(ValueError):
    """Raised when a length list violates its invariants."""


def edge_length(v: int, u: int, w: int) -> int:
    """Circular distance between vertices u and w of K_v; always in [1, v//2]."""
    if u == w:
        raise InvalidEdgeError(f"degenerate edge {{{u},{w}}}")
    if not (0 <= u < v and 0 <= w < v):
        raise InvalidEdgeError(f"vertices {{{u},{w}}} out of range for K_{v}")
    diff = abs(u - w)
    return min(diff, v - diff)


def reduced_length(u: int, w: int) -> int:
    """Plain difference |u - w|, without circular wraparound."""
    if u == w:
        raise InvalidEdgeError(f"degenerate edge {{{u},{w}}}")
    return abs(u - w)


@dataclass(frozen=True)
class LengthList:
    """Multiset of edge lengths stored as a dense multiplicity vector.

    ``mult[i]`` is the multiplicity of length ``i`` for ``i`` in ``1..n``
    (index 0 is unused and always 0).  A list describing a perfect-matching
    instance of K_{2n} has total multiplicity n.
    """

    n: int
    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidListError(f"n must be positive, got {self.n}")
        if len(self.mult) != self.n + 1 or self.mult[0] != 0:
            raise InvalidListError("multiplicity vector must have shape (0, m_1..m_n)")
        if any(m < 0 for m in self.mult):
            raise InvalidListError("negative multiplicity")

    @classmethod
    def from_lengths(cls, lengths: Iterable[int], n: Optional[int] = None) -> "LengthList":
        vals = list(lengths)
        if not vals and n is None:
            raise InvalidListError("empty list needs an explicit n")
        if n is None:
            n = len(vals)
        mult = [0] * (n + 1)
        for x in vals:
            if not 1 <= x <= n:
                raise InvalidListError(f"length {x} outside [1, {n}]")
            mult[x] += 1
        return cls(n, tuple(mult))

    @classmethod
    def from_counts(cls, counts: dict[int, int], n: int) -> "LengthList":
        mult = [0] * (n + 1)
        for x, m in counts.items():
            if not 1 <= x <= n:
                raise InvalidListError(f"length {x} outside [1, {n}]")
            if m < 0:
                raise InvalidListError(f"negative multiplicity for length {x}")
            mult[x] = m
        return cls(n, tuple(mult))

    _TERM = re.compile(r"^(\d+)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str, n: Optional[int] = None) -> "LengthList":
        """Parse the ``len^mult`` syntax, e.g. ``"1^5,7^4"`` (mult defaults to 1)."""
        counts: dict[int, int] = {}
        total = 0
        top = 0
        for raw in text.split(","):
            term = raw.strip()
            if not term:
                continue
            m = cls._TERM.match(term)
            if m is None:
                raise InvalidListError(f"cannot parse list term {term!r}")
            length = int(m.group(1))
            mult = int(m.group(2)) if m.group(2) else 1
            if length < 1 or mult < 1:
                raise InvalidListError(f"bad list term {term!r}")
            counts[length] = counts.get(length, 0) + mult
            total += mult
            top = max(top, length)
        if n is None:
            n = total
        if top > n:
            raise InvalidListError(f"length {top} exceeds n={n}")
        if total == 0:
            raise InvalidListError("empty length list")
        return cls.from_counts(counts, n)

    @property
    def total(self) -> int:
        return sum(self.mult)

    @property
    def support(self) -> tuple[int, ...]:
        """Distinct lengths present, ascending (the underlying set)."""
        return tuple(i for i in range(1, self.n + 1) if self.mult[i])

    def count(self, length: int) -> int:
        return self.mult[length] if 1 <= length <= self.n else 0

    def lengths(self) -> Iterator[int]:
        for i in range(1, self.n + 1):
            for _ in range(self.mult[i]):
                yield i

    def is_instance_of(self, v: int) -> bool:
        """True when this list prescribes a perfect matching of K_v."""
        return v == 2 * self.n and self.total == self.n

    def format(self) -> str:
        terms = []
        for i in self.support:
            m = self.mult[i]
            terms.append(f"{i}^{m}" if m > 1 else f"{i}")
        return ",".join(terms)

    def __str__(self) -> str:  # pragma: no cover - convenience
        return "{" + self.format() + "}"


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges of K_v, in canonical form.

    Each edge is stored as (min, max) and the edge tuple is sorted
    lexicographically, so equal matchings compare equal structurally.
    """

    v: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, v: int, edges: Iterable[tuple[int, int]]) -> "Matching":
        canon = []
        seen: set[int] = set()
        for u, w in edges:
            if u == w:
                raise InvalidEdgeError(f"degenerate edge {{{u},{w}}}")
            if not (0 <= u < v and 0 <= w < v):
                raise InvalidEdgeError(f"edge {{{u},{w}}} out of range for K_{v}")
            if u in seen or w in seen:
                raise InvalidEdgeError(f"repeated endpoint in edge {{{u},{w}}}")
            seen.add(u)
            seen.add(w)
            canon.append((u, w) if u < w else (w, u))
        canon.sort()
        return cls(v, tuple(canon))

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.v

    def vertices(self) -> set[int]:
        return {x for e in self.edges for x in e}

    def length_list(self) -> LengthList:
        if not self.is_perfect:
            raise InvalidEdgeError("length_list requires a perfect matching")
        return LengthList.from_lengths(
            (edge_length(self.v, u, w) for u, w in self.edges), self.v // 2
        )

    def reduced_lengths(self) -> list[int]:
        return sorted(reduced_length(u, w) for u, w in self.edges)

    def to_json(self) -> str:
        return json.dumps({"v": self.v, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> "Matching":
        data = json.loads(text)
        return cls.build(int(data["v"]), [(int(u), int(w)) for u, w in data["edges"]])


def length_list(matching: Matching) -> LengthList:
    """Multiset of circular edge lengths of a perfect matching."""
    return matching.length_list()


def verify_realizes(matching: Matching, target: LengthList) -> tuple[bool, Optional[str]]:
    """Check that ``matching`` is a perfect matching of K_{2n} realizing ``target``.

    Returns (True, None) on success, else (False, diagnostic) naming the first
    violated property.  Endpoint disjointness is enforced by Matching.build,
    so a structurally valid Matching can only fail on coverage or lengths.
    """
    v = 2 * target.n
    if matching.v != v:
        return False, f"order mismatch: matching lives in K_{matching.v}, list in K_{v}"
    if not matching.is_perfect:
        return False, f"not perfect: {len(matching.edges)} edges for K_{v}"
    if matching.vertices() != set(range(v)):
        return False, "vertex set is not [0, v-1]"
    if matching.length_list() != target:
        return False, "length multiset mismatch"
    return True, None


_STATUSES = ("feasible", "infeasible", "unknown")


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    ``route`` names the construction that realizes a feasible list; ``witness``
    names the checkable condition violated by an infeasible one.
    """

    status: str
    route: Optional[str] = None
    witness: Optional[str] = None
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError(f"bad verdict status {self.status!r}")
        if self.status == "infeasible" and not self.witness:
            raise ValueError("infeasible verdict needs a witness")

    @classmethod
    def feasible(cls, route: str, **params) -> "Verdict":
        return cls("feasible", route=route, params=params)

    @classmethod
    def infeasible(cls, witness: str, **params) -> "Verdict":
        return cls("infeasible", witness=witness, params=params)

    @classmethod
    def unknown(cls) -> "Verdict":
        return cls("unknown")

    @property
    def is_feasible(self) -> bool:
        return self.status == "feasible"

    @property
    def is_infeasible(self) -> bool:
        return self.status == "infeasible"

    def to_dict(self) -> dict:
        return {"status": self.status, "route": self.route, "witness": self.witness}
