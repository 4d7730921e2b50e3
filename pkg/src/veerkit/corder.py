"""The canonical circular order on cusps of the cover, read off continents.

Every continent's coast carries the same circular order on the cusps it
contains, so ordering any three cusps means growing one continent to see all
three and reading their positions on the coast cycle.  Points at infinity
(branch-line endpoints) are handled as nested coastal-arc chains: a
comparison deepens the chains until the arcs separate, then reads positions
the same way.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import UPPER, Continent, convexify, grow_to_include, initial_continent
from .errors import DepthExhausted, EdgeNotInContinent, MalformedSignature
from .perms import sign as perm_sign

DEFAULT_MAX_DEPTH = 64


@dataclass(frozen=True)
class CuspName:
    """A cusp named by a face-crossing path from the root lift plus a vertex."""

    path: tuple
    vertex: int

    def translated(self, gamma):
        return CuspName(tuple(gamma) + self.path, self.vertex)


def parse_cusp_name(text, root_base):
    """Parse ``t<k>.v<j>[/g<f>...]``; k must be the session root's base."""
    try:
        head, *steps = text.split("/")
        tpart, vpart = head.split(".")
        if tpart[0] != "t" or vpart[0] != "v":
            raise ValueError
        k, j = int(tpart[1:]), int(vpart[1:])
        path = []
        for s in steps:
            if s[0] != "g":
                raise ValueError
            path.append(int(s[1:]))
    except (ValueError, IndexError):
        raise MalformedSignature(f"bad cusp name {text!r}") from None
    if k != root_base:
        raise MalformedSignature(
            f"cusp name {text!r} starts at tetrahedron {k}, session is rooted at {root_base}"
        )
    if not 0 <= j < 4 or any(not 0 <= f < 4 for f in path):
        raise MalformedSignature(f"bad cusp name {text!r}")
    return CuspName(tuple(path), j)


class OrderSession:
    """A development session with a memoised circular-order oracle."""

    def __init__(self, tri, tts, base_tet=0, max_depth=DEFAULT_MAX_DEPTH):
        self.cont = initial_continent(tri, tts, base_tet)
        self.max_depth = max_depth
        self.memo = {}

    @property
    def root_base(self):
        return self.cont.bases[self.cont.root]

    def node_at(self, path):
        return grow_to_include(self.cont, path, max_rounds=self.max_depth * max(1, len(path)))

    def cusp_of(self, name):
        if isinstance(name, str):
            name = parse_cusp_name(name, self.root_base)
        node = self.node_at(name.path)
        return self.cont.cusp(node, name.vertex)

    def coast_positions(self):
        cusps = self.cont.landscape(UPPER).coast_cusps()
        return {c: i for i, c in enumerate(cusps)}, len(cusps)

    def order_cusps(self, a, b, c):
        """Sign of the cusp triple (ids already resolved in this session)."""
        if a == b or b == c or a == c:
            return 0
        key = tuple(sorted((a, b, c)))
        if key not in self.memo:
            pos, _n = self.coast_positions()
            self.memo[key] = _cycle_sign(pos[key[0]], pos[key[1]], pos[key[2]])
        base = self.memo[key]
        return base * _triple_parity(key, (a, b, c))

    def order_triple(self, a, b, c):
        """Grow to see all three named cusps and return their circular order."""
        ids = [self.cusp_of(x) for x in (a, b, c)]
        return self.order_cusps(*ids)

    def revalidate_memo(self):
        """Recompute every memoised triple from the current coast; growth must
        never change an answer."""
        pos, _n = self.coast_positions()
        for (a, b, c), val in self.memo.items():
            now = _cycle_sign(pos[a], pos[b], pos[c])
            if now != val:
                raise RuntimeError(f"order of {(a, b, c)} changed from {val} to {now}")
        return True


def _cycle_sign(pa, pb, pc):
    """+1 iff positions pa, pb, pc sit anticlockwise on the coast cycle."""
    n = max(pa, pb, pc) + 1
    return 1 if (pb - pa) % n < (pc - pa) % n else -1


def _triple_parity(sorted_key, triple):
    order = [sorted_key.index(x) for x in triple]
    par = 1
    for i in range(3):
        for j in range(i + 1, 3):
            if order[i] > order[j]:
                par = -par
    return par


# ---------------------------------------------------------------------------
# coastal order and arcs


def coastal_order(cont):
    """The coast cycle of cusps, anticlockwise from above; both landscapes
    must agree."""
    up = cont.landscape("upper").coast_cusps()
    lo = cont.landscape("lower").coast_cusps()
    if not _cyclic_equal(up, lo):
        raise RuntimeError("upper and lower coastal orders disagree")
    return up


def _cyclic_equal(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    if a[0] not in b:
        return False
    k = b.index(a[0])
    return all(a[i] == b[(k + i) % len(b)] for i in range(len(a)))


@dataclass(frozen=True)
class CoastalArc:
    """The coastal interval on the co-oriented side of an edge.

    The edge is directed tail -> head with the co-orientation pointing left,
    so the arc runs anticlockwise from head to tail (endpoints included)."""

    tail: int
    head: int
    cusps: tuple

    def cusp_set(self):
        return frozenset(self.cusps)

    def interior(self):
        return frozenset(self.cusps[1:-1])

    def contains(self, other):
        return other.cusp_set() <= self.cusp_set()

    def strictly_contains(self, other):
        return other.cusp_set() < self.cusp_set()


def coastal_arc(cont, tail, head):
    """Arc of the coast on the co-oriented side of the edge from tail to head."""
    coast = coastal_order(cont)
    if tail not in coast or head not in coast:
        raise EdgeNotInContinent(f"cusp pair ({tail},{head}) not on the coast")
    pair = frozenset((tail, head))
    found = any(
        frozenset(cont.edge_endpoints(cont.edge_id(n, e))) == pair
        for n in range(len(cont.bases))
        for e in range(6)
    )
    if not found:
        raise EdgeNotInContinent(f"no developed edge joins {tail} and {head}")
    i, j = coast.index(head), coast.index(tail)
    n = len(coast)
    run = [(i + k) % n for k in range(((j - i) % n) + 1)]
    return CoastalArc(tail, head, tuple(coast[k] for k in run))


# ---------------------------------------------------------------------------
# compatibility and invariance


def check_compatibility(session, cont=None):
    """O restricted to the three cusps of every face equals the face's own
    anticlockwise-from-above order."""
    cont = cont or session.cont
    seen = set()
    checked = 0
    for node in range(len(cont.bases)):
        for face in range(4):
            fid = cont.face_id(node, face)
            if fid in seen:
                continue
            seen.add(fid)
            cyc = cont.face_cycle_above(node, face)
            cusps = [cont.cusp(node, v) for v in cyc]
            if session.order_cusps(*cusps) != 1:
                raise RuntimeError(f"face {fid} is incompatible with the coastal order")
            checked += 1
    return checked


def deck_translate(session, gamma, name):
    if isinstance(name, str):
        name = parse_cusp_name(name, session.root_base)
    return name.translated(gamma)


def check_deck_invariance(session, gamma, triples):
    """O(ga, gb, gc) == O(a, b, c) for every sampled triple of cusp names.

    ``gamma`` is a face-crossing loop word: its endpoint must be another lift
    of the root base tetrahedron."""
    end = session.node_at(tuple(gamma))
    if session.cont.bases[end] != session.root_base:
        raise MalformedSignature("deck word does not return to a lift of the root base")
    checked = 0
    for a, b, c in triples:
        before = session.order_triple(a, b, c)
        after = session.order_triple(
            deck_translate(session, gamma, a),
            deck_translate(session, gamma, b),
            deck_translate(session, gamma, c),
        )
        if before != after:
            raise RuntimeError(f"deck translation changed the order of {(a, b, c)}")
        checked += 1
    return checked


# ---------------------------------------------------------------------------
# certified cyclic configurations of cusps and points at infinity


class CuspPoint:
    """A plain cusp as a point of the configuration circle."""

    def __init__(self, cusp):
        self.cusp = cusp

    def deepen(self):
        return False


def certify_cyclic_order(session, points, max_rounds=None):
    """Order the given points anticlockwise around the coast.

    Each point is a CuspPoint or any object with ``current_arc() -> (tail,
    head)`` (its nested coastal-arc approximation) and ``deepen() -> bool``.
    Chains are deepened until all arcs are pairwise separated and exclude the
    cusp points; returns the list of indices in anticlockwise order starting
    from the smallest representative."""
    cont = session.cont
    rounds = max_rounds if max_rounds is not None else session.max_depth
    for _ in range(rounds + 1):
        coast = coastal_order(cont)
        pos = {c: i for i, c in enumerate(coast)}
        n = len(coast)
        spans = []
        for p in points:
            if isinstance(p, CuspPoint):
                spans.append(("cusp", pos[p.cusp]))
            else:
                tail, head = p.current_arc()
                i, j = pos[head], pos[tail]
                spans.append(("arc", i, (j - i) % n))
        if _separated(spans, n):
            reps = []
            for k, s in enumerate(spans):
                if s[0] == "cusp":
                    reps.append((2 * s[1], k))
                else:
                    _kind, i, width = s
                    reps.append((2 * ((i + 1) % n) if width >= 2 else 2 * i + 1, k))
            reps.sort()
            return [k for _r, k in reps]
        progress = False
        for p in points:
            if not isinstance(p, CuspPoint):
                progress = p.deepen() or progress
        if not progress:
            raise DepthExhausted("points do not separate and nothing can deepen")
    raise DepthExhausted("cyclic order not certified within the depth cap")


def _separated(spans, n):
    def open_set(span):
        _kind, i, width = span
        return {(i + k) % n for k in range(1, width)}

    for a in range(len(spans)):
        for b in range(a + 1, len(spans)):
            sa, sb = spans[a], spans[b]
            if sa[0] == "cusp" and sb[0] == "cusp":
                if sa[1] == sb[1]:
                    raise ValueError("two configuration points are the same cusp")
            elif sa[0] == "cusp":
                if sa[1] in open_set(sb):
                    return False
            elif sb[0] == "cusp":
                if sb[1] in open_set(sa):
                    return False
            else:
                ia, wa = sa[1], sa[2]
                ib, wb = sb[1], sb[2]
                ca = {(ia + k) % n for k in range(wa + 1)}
                cb = {(ib + k) % n for k in range(wb + 1)}
                inter = ca & cb
                if len(inter) > 1:
                    return False
                if len(inter) == 1:
                    x = inter.pop()
                    enda = x in (ia, (ia + wa) % n)
                    endb = x in (ib, (ib + wb) % n)
                    if not (enda and endb):
                        return False
    return True
