"""Parsing and validation of textual 1-knot descriptions.

Two input notations are supported and both produce a canonical ``Diagram``:

* planar-diagram codes, as whitespace/comma separated ``X(a,b,c,d)`` tuples,
  each listed counterclockwise starting from the incoming under-strand, with
  edge labels increasing along the knot's orientation (gaps in the label set
  are tolerated and normalized away);
* braid words, as whitespace-separated nonzero integers, letter ``+-i``
  standing for the i-th Artin generator or its inverse, closed up in the
  standard way.

Only genuine knots are accepted: labels that trace more than one cycle, or a
closure with more than one component, are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    EdgeMultiplicity,
    LetterOutOfRange,
    MalformedToken,
    NotAKnot,
    SplitLink,
    ZeroLetter,
)

_TUPLE_RE = re.compile(r"X\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_SEP_RE = re.compile(r"[\s,]*")


@dataclass(frozen=True)
class PDCode:
    """Raw crossing tuples exactly as parsed, before validation."""

    crossings: tuple[tuple[int, int, int, int], ...]


@dataclass(frozen=True)
class BraidWord:
    letters: tuple[int, ...]
    strands: int

    def __post_init__(self):
        if self.strands < 1:
            raise MalformedToken(f"strand count must be positive, got {self.strands}")
        for x in self.letters:
            if x == 0:
                raise ZeroLetter("0 is not a braid letter")
            if abs(x) >= self.strands:
                raise LetterOutOfRange(
                    f"letter {x} needs at least {abs(x) + 1} strands, have {self.strands}")


@dataclass(frozen=True)
class Crossing:
    """One crossing with canonical edge labels.

    The under-strand runs ``under_in -> under_out`` and the over-strand
    ``over_in -> over_out``.  ``sign`` is the usual orientation sign: +1 when
    the over direction, rotated counterclockwise by 90 degrees, matches the
    under direction.
    """

    under_in: int
    over_in: int
    over_out: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class Diagram:
    """Validated knot diagram.  ``n_edges == 0`` encodes the unknot.

    Edge labels are canonical: 1..n_edges in traversal order, so the
    successor of edge e along the knot is e + 1 (wrapping).
    """

    crossings: tuple[Crossing, ...]
    n_edges: int

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)


def parse_pd(text: str) -> Diagram:
    """Parse a planar-diagram code into a validated ``Diagram``.

    Empty input encodes the unknot.  Raises ``MalformedToken`` on syntax
    errors, ``EdgeMultiplicity`` when a label fails to occur exactly once as
    a source and once as a target, and ``SplitLink`` when the labels trace
    more than one closed cycle.
    """
    tuples: list[tuple[int, int, int, int]] = []
    pos = 0
    while True:
        pos = _SEP_RE.match(text, pos).end()
        if pos == len(text):
            break
        m = _TUPLE_RE.match(text, pos)
        if not m:
            raise MalformedToken(f"expected X(a,b,c,d) at position {pos}: {text[pos:pos + 20]!r}")
        labels = tuple(int(g) for g in m.groups())
        if any(v == 0 for v in labels):
            raise MalformedToken("edge labels are positive integers")
        tuples.append(labels)
        pos = m.end()
    return _diagram_from_tuples(PDCode(tuple(tuples)))


def _diagram_from_tuples(pd: PDCode) -> Diagram:
    c = len(pd.crossings)
    if c == 0:
        return Diagram((), 0)
    n = 2 * c

    counts: dict[int, int] = {}
    for t in pd.crossings:
        for v in t:
            counts[v] = counts.get(v, 0) + 1
    bad = [v for v, k in counts.items() if k != 2]
    if bad:
        raise EdgeMultiplicity(f"labels not appearing exactly twice: {sorted(bad)}")
    if len(counts) != n:
        raise EdgeMultiplicity(f"expected {n} distinct labels, found {len(counts)}")

    # Normalize gap-ridden labels onto 1..2c, preserving order.
    rank = {v: i + 1 for i, v in enumerate(sorted(counts))}
    tuples = [tuple(rank[v] for v in t) for t in pd.crossings]

    def nxt(x: int) -> int:
        return x % n + 1

    # Orient each over-strand by label adjacency.  For a one-crossing
    # diagram both directions satisfy the mod-2 adjacency test; the b -> d
    # reading is the fixed convention there.
    oriented = []  # (over_in, over_out, sign), aligned with tuples
    for a, b, cc, d in tuples:
        d_to_b = nxt(d) == b
        b_to_d = nxt(b) == d
        if d_to_b and not b_to_d:
            oriented.append((d, b, +1))
        elif b_to_d:
            oriented.append((b, d, -1))
        else:
            raise SplitLink(f"over-strand labels {b},{d} are not consecutive along a single cycle")

    # Each label must occur exactly once as an incoming edge (under_in or
    # over_in) and once as an outgoing one.
    heads: set[int] = set()
    outs: set[int] = set()
    succ: dict[int, int] = {}
    for (a, b, cc, d), (over_in, over_out, sign) in zip(tuples, oriented):
        for head in (a, over_in):
            if head in heads:
                raise EdgeMultiplicity(f"label {head} enters two crossings")
            heads.add(head)
        for out in (cc, over_out):
            if out in outs:
                raise EdgeMultiplicity(f"label {out} leaves two crossings")
            outs.add(out)
        succ[a] = cc
        succ[over_in] = over_out
    if heads != set(range(1, n + 1)) or outs != set(range(1, n + 1)):
        raise EdgeMultiplicity("labels do not pair into one incoming and one outgoing slot each")

    # Trace the knot: the successor map must be a single 2c-cycle.
    order: dict[int, int] = {}
    e = 1
    for i in range(n):
        if e in order:
            break
        order[e] = i + 1
        e = succ[e]
    if len(order) != n or e != 1:
        raise SplitLink(f"labels trace more than one cycle ({len(order)} of {n} edges reached)")

    crossings = []
    for (a, b, cc, d), (over_in, over_out, sign) in zip(tuples, oriented):
        crossings.append(Crossing(
            under_in=order[a],
            over_in=order[over_in],
            over_out=order[over_out],
            under_out=order[cc],
            sign=sign,
        ))
    crossings.sort(key=lambda x: x.under_in)
    return Diagram(tuple(crossings), n)


def render_pd(d: Diagram) -> str:
    """Canonical PD text for a diagram; the unknot renders as ''.

    Inverse to ``parse_pd`` on diagrams the parser accepts.  The one
    exception is the single positive curl, whose tuple is indistinguishable
    from a doubled-label error in this convention and is rejected on parse.
    """
    parts = []
    for x in d.crossings:
        if x.sign > 0:
            a, b, cc, dd = x.under_in, x.over_out, x.under_out, x.over_in
        else:
            a, b, cc, dd = x.under_in, x.over_in, x.under_out, x.over_out
        parts.append(f"X({a},{b},{cc},{dd})")
    return " ".join(parts)


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers into a validated braid word."""
    letters = []
    for tok in text.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise MalformedToken(f"braid letters are integers, got {tok!r}") from None
    return BraidWord(tuple(letters), strands)


def braid_closure(b: BraidWord) -> Diagram:
    """Diagram of the braid closure; crossing signs follow letter signs.

    Raises ``NotAKnot`` when the closure has more than one component.
    """
    s = b.strands
    letters = b.letters

    # Components of the closure = cycles of the underlying permutation.
    occupant = list(range(s + 1))  # occupant[pos] = starting strand currently at pos
    for x in letters:
        i = abs(x)
        occupant[i], occupant[i + 1] = occupant[i + 1], occupant[i]
    ends_at = {occupant[pos]: pos for pos in range(1, s + 1)}
    seen = set()
    k = 1
    while k not in seen:
        seen.add(k)
        k = ends_at[k]
    if len(seen) != s:
        raise NotAKnot(f"closure is a link ({len(seen)} of {s} strands in one component)")

    if not letters:
        return Diagram((), 0)  # single strand closing to the unknot

    # Thread edges through the word; fresh ids per outgoing arc, then glue
    # the bottom of each strand to its top.
    fresh = iter(range(10 ** 6))
    top = [None] + [next(fresh) for _ in range(s)]
    cur = top[:]
    raw = []  # (under_in, over_in, over_out, under_out, sign)
    for x in letters:
        i = abs(x)
        if x > 0:
            over_in, under_in = cur[i], cur[i + 1]
            over_out, under_out = next(fresh), next(fresh)
            cur[i], cur[i + 1] = under_out, over_out
            raw.append((under_in, over_in, over_out, under_out, +1))
        else:
            under_in, over_in = cur[i], cur[i + 1]
            under_out, over_out = next(fresh), next(fresh)
            cur[i], cur[i + 1] = over_out, under_out
            raw.append((under_in, over_in, over_out, under_out, -1))

    parent = {}

    def find(v):
        while parent.get(v, v) != v:
            parent[v] = parent.get(parent[v], parent[v])
            v = parent[v]
        return v

    def union(u, v):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv

    for pos in range(1, s + 1):
        union(cur[pos], top[pos])

    succ = {}
    for under_in, over_in, over_out, under_out, _sign in raw:
        succ[find(under_in)] = find(under_out)
        succ[find(over_in)] = find(over_out)

    n = 2 * len(letters)
    start = find(top[1])
    order = {}
    e = start
    for i in range(n):
        order[e] = i + 1
        e = succ[e]
    if len(order) != n or e != start:
        raise NotAKnot("braid closure does not trace a single cycle")

    crossings = tuple(sorted((
        Crossing(order[find(ui)], order[find(oi)], order[find(oo)], order[find(uo)], sign)
        for ui, oi, oo, uo, sign in raw), key=lambda x: x.under_in))
    return Diagram(crossings, n)


def validate_diagram(d: Diagram) -> None:
    """Check the canonical-label invariants; raises ValueError on failure."""
    n = d.n_edges
    if n == 0:
        if d.crossings:
            raise ValueError("crossings present but no edges")
        return
    if n != 2 * len(d.crossings):
        raise ValueError("edge count must be twice the crossing count")
    heads = sorted([x.under_in for x in d.crossings] + [x.over_in for x in d.crossings])
    tails = sorted([x.under_out for x in d.crossings] + [x.over_out for x in d.crossings])
    if heads != list(range(1, n + 1)) or tails != list(range(1, n + 1)):
        raise ValueError("edges must enter and leave exactly one crossing each")
    succ = {}
    for x in d.crossings:
        succ[x.under_in] = x.under_out
        succ[x.over_in] = x.over_out
        if x.sign not in (+1, -1):
            raise ValueError(f"bad crossing sign {x.sign}")
    e, seen = 1, set()
    while e not in seen:
        seen.add(e)
        e = succ[e]
    if len(seen) != n:
        raise ValueError("edges trace more than one cycle")
