"""Lazy development of the universal cover, and continents in it.

A Continent owns a development session: lifted tetrahedra are created on
demand when a boundary face is resolved, and identified by eagerly closing
every edge ring as soon as all of its tetrahedra are present (walking the
ring through resolved links and gluing the two end faces once the count
reaches the edge degree).  Lifted cusps and lifted edges are classes of a
union-find over (node, vertex) and (node, edge) slots, merged along resolved
faces; class names are the minimum slot ever seen, which never changes
because legal growth only ever merges fresh slots into old classes.

The boundary of the continent is a pair of landscapes (triangulated disks)
meeting along the coast; all structure queries (tracks, rivers, sinks,
coastal order) are made on Landscape snapshots.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadTetIndex,
    DepthExhausted,
    EdgeNotInContinent,
    FaceNotOnBoundary,
    ForkedRiverHasNoComplexity,
    InvalidGluing,
    NotAMouth,
    NotConvex,
)
from .taut import BLUE, RED
from .triangulation import EDGE_VERTICES, FACE_EDGES, FACE_VERTICES, edge_between, face_cycle, map_edge

UPPER = "upper"
LOWER = "lower"


def other_side(side):
    return LOWER if side == UPPER else UPPER


class _UnionFind:
    __slots__ = ("parent", "min_slot")

    def __init__(self):
        self.parent = []
        self.min_slot = []

    def add(self):
        i = len(self.parent)
        self.parent.append(i)
        self.min_slot.append(i)
        return i

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        m = min(self.min_slot[ra], self.min_slot[rb])
        self.parent[rb] = ra
        self.min_slot[ra] = m
        return True

    def canon(self, x):
        return self.min_slot[self.find(x)]


@dataclass(frozen=True)
class FaceView:
    """A landscape face, held by the node on the continent side of it."""

    node: int
    face: int


class Continent:
    """A growing continent rooted at one lift of ``base_tet``."""

    def __init__(self, tri, tts, base_tet=0):
        if not 0 <= base_tet < tri.tet_count:
            raise BadTetIndex(f"base tetrahedron {base_tet} out of range")
        if tts.top_is_hi is None or tts.colours is None:
            raise InvalidGluing("continent development needs a transverse veering structure")
        self.tri = tri
        self.tts = tts
        self.bases = []
        self.nbr = []
        self._vuf = _UnionFind()
        self._euf = _UnionFind()
        self.version = 0
        self.infills = 0
        self._landscapes = {}
        self.root = self._new_node(base_tet)

    # -- node store ----------------------------------------------------------

    def _new_node(self, base):
        n = len(self.bases)
        self.bases.append(base)
        self.nbr.append([None] * 4)
        for _ in range(4):
            self._vuf.add()
        for _ in range(6):
            self._euf.add()
        self.version += 1
        return n

    def __len__(self):
        return len(self.bases)

    def cusp(self, node, v):
        """Stable id of the lifted cusp at vertex v of node."""
        return self._vuf.canon(4 * node + v)

    def edge_id(self, node, e):
        """Stable id of the lifted edge at model edge e of node."""
        return self._euf.canon(6 * node + e)

    def face_id(self, node, face):
        n2 = self.nbr[node][face]
        if n2 is None:
            return (node, face)
        f2 = self.tri.gluings[self.bases[node]][face][1]
        return min((node, face), (n2, f2))

    def edge_endpoints(self, eid):
        node, e = divmod(eid, 6)
        a, b = EDGE_VERTICES[e]
        return self.cusp(node, a), self.cusp(node, b)

    def edge_degree_of(self, node, e):
        return self.tri.edge_degree(self.tri.edge_class_of[(self.bases[node], e)])

    def edge_colour(self, node, e):
        return self.tts.colours[self.tri.edge_class_of[(self.bases[node], e)]]

    def face_cycle_above(self, node, face):
        """Corner vertex labels of the face, anticlockwise as seen from above."""
        base = self.bases[node]
        cyc = face_cycle(face, self.tri.orientation[base])
        if self.tts.is_upper_face(base, face):
            return cyc
        return (cyc[0], cyc[2], cyc[1])

    def cusps(self):
        return sorted({self._vuf.canon(i) for i in range(len(self._vuf.parent))})

    # -- development -----------------------------------------------------------

    def _ray(self, n, e, out):
        """Walk resolved links around the lifted edge (n, e), first exiting
        through face ``out``.  Returns (steps, open_slot) where open_slot is
        the unresolved (node, face) at the far end, or None if the ring is
        already closed."""
        n0, e0, out0 = n, e, out
        steps = 0
        while True:
            n2 = self.nbr[n][out]
            if n2 is None:
                return steps, (n, out)
            _t2, _f2, p = self.tri.gluings[self.bases[n]][out]
            e2 = map_edge(p, e)
            fin = p[out]
            a, b = EDGE_VERTICES[e2]
            out2 = next(ff for ff in range(4) if ff not in (a, b) and ff != fin)
            n, e, out = n2, e2, out2
            steps += 1
            if (n, e, out) == (n0, e0, out0):
                return steps, None

    def _forced_partner(self, node, face):
        for e in FACE_EDGES[face]:
            a, b = EDGE_VERTICES[e]
            g = next(ff for ff in range(4) if ff not in (a, b) and ff != face)
            steps, end = self._ray(node, e, g)
            if end is None:
                raise RuntimeError("closed ring at an unresolved face")
            count = steps + 1
            deg = self.edge_degree_of(node, e)
            if count > deg:
                raise RuntimeError("edge ring exceeds the base degree")
            if count == deg:
                return end
        return None

    def _connect(self, n1, f1, n2, f2, fresh_floor):
        if (n1, f1) == (n2, f2):
            raise RuntimeError("a lifted face cannot glue to itself")
        t2, f2b, p = self.tri.gluings[self.bases[n1]][f1]
        if t2 != self.bases[n2] or f2b != f2:
            raise RuntimeError("forced identification contradicts the base gluing")
        if self.nbr[n1][f1] is not None or self.nbr[n2][f2] is not None:
            raise RuntimeError("double gluing in the cover")
        self.nbr[n1][f1] = n2
        self.nbr[n2][f2] = n1
        for v in FACE_VERTICES[f1]:
            self._merge(self._vuf, 4 * n1 + v, 4 * n2 + p[v], 4 * fresh_floor)
        for e in FACE_EDGES[f1]:
            self._merge(self._euf, 6 * n1 + e, 6 * n2 + map_edge(p, e), 6 * fresh_floor)
        self.version += 1

    @staticmethod
    def _merge(uf, a, b, floor):
        ra, rb = uf.find(a), uf.find(b)
        if ra != rb and uf.min_slot[ra] < floor and uf.min_slot[rb] < floor:
            # two pre-existing classes can only coincide if the developed
            # region stopped being embedded; that is a bug, not user error
            raise RuntimeError("old cusp/edge classes merged during development")
        uf.union(a, b)

    def _close_rings_around(self, n1, f1, fresh_floor):
        stack = [(n1, f1)]
        while stack:
            n, f = stack.pop()
            for e in FACE_EDGES[f]:
                a, b = EDGE_VERTICES[e]
                fa, fb = (ff for ff in range(4) if ff not in (a, b))
                s1, end1 = self._ray(n, e, fa)
                if end1 is None:
                    continue
                s2, end2 = self._ray(n, e, fb)
                count = 1 + s1 + s2
                deg = self.edge_degree_of(n, e)
                if count > deg:
                    raise RuntimeError("edge ring exceeds the base degree")
                if count == deg:
                    self._connect(*end1, *end2, fresh_floor)
                    stack.append(end1)
                    stack.append(end2)

    def resolve(self, node, face):
        """The neighbour of ``node`` across ``face``, developing it if needed."""
        if self.nbr[node][face] is not None:
            return self.nbr[node][face]
        g = self.tri.gluings[self.bases[node]][face]
        if g is None:
            raise InvalidGluing("cannot develop across a boundary face of the base")
        fresh_floor = len(self.bases)
        partner = self._forced_partner(node, face)
        if partner is None:
            n2 = self._new_node(g[0])
            partner = (n2, g[1])
        self._connect(node, face, *partner, fresh_floor)
        self._close_rings_around(node, face, fresh_floor)
        return self.nbr[node][face]

    # -- landscapes ------------------------------------------------------------

    def landscape(self, side):
        cached = self._landscapes.get(side)
        if cached is not None and cached.version == self.version:
            return cached
        want_upper = side == UPPER
        views = [
            FaceView(n, f)
            for n in range(len(self.bases))
            for f in range(4)
            if self.nbr[n][f] is None
            and self.tts.is_upper_face(self.bases[n], f) == want_upper
        ]
        ls = Landscape(self, views, side)
        self._landscapes[side] = ls
        return ls

    def boundary_side_of(self, node, face):
        if self.nbr[node][face] is not None:
            raise FaceNotOnBoundary(f"({node},{face}) is interior")
        return UPPER if self.tts.is_upper_face(self.bases[node], face) else LOWER

    def to_json_dict(self):
        upper, lower = self.landscape(UPPER), self.landscape(LOWER)
        return {
            "tets": [
                {"id": n, "base": self.bases[n], "nbr": list(self.nbr[n])}
                for n in range(len(self.bases))
            ],
            "upper": [list(fid) for fid in sorted(upper.views)],
            "lower": [list(fid) for fid in sorted(lower.views)],
            "coast": upper.coast_cusps(),
            "cusps": self.cusps(),
        }


class Landscape:
    """A snapshot of a triangulated disk carried by the two-skeleton.

    ``side`` is "upper" or "lower" for the continent boundary, or "layer"
    for a spanning landscape from a layering.  Faces are FaceViews held by
    the node on the continent side; all cell names are stable ids.
    """

    def __init__(self, cont, views, side):
        self.cont = cont
        self.side = side
        self.version = cont.version
        self.views = {}
        for v in views:
            self.views[cont.face_id(v.node, v.face)] = v
        self.corner_verts = {}
        self.corners = {}
        self.edges = {}
        self.edge_faces = {}
        self.colour = {}
        for fid, view in self.views.items():
            cyc = cont.face_cycle_above(view.node, view.face)
            self.corner_verts[fid] = cyc
            self.corners[fid] = tuple(cont.cusp(view.node, v) for v in cyc)
            eids = []
            for i in range(3):
                e = edge_between(cyc[i], cyc[(i + 1) % 3])
                eid = cont.edge_id(view.node, e)
                eids.append(eid)
                self.colour[eid] = cont.edge_colour(view.node, e)
                self.edge_faces.setdefault(eid, []).append(fid)
            self.edges[fid] = tuple(eids)
        for eid, fs in self.edge_faces.items():
            if len(fs) > 2:
                raise RuntimeError(f"edge {eid} lies in {len(fs)} landscape faces")
        self._coast = None

    # -- cells -----------------------------------------------------------------

    def face_ids(self):
        return sorted(self.views)

    def edge_ids(self):
        return sorted(self.edge_faces)

    def cusp_ids(self):
        return sorted({c for tri in self.corners.values() for c in tri})

    def is_boundary_edge(self, eid):
        return len(self.edge_faces[eid]) == 1

    def face_across(self, fid, eid):
        fs = self.edge_faces[eid]
        if len(fs) != 2:
            raise EdgeNotInContinent(f"edge {eid} is not interior to the landscape")
        return fs[0] if fs[1] == fid else fs[1]

    def model_edge(self, fid, i):
        """(node, model edge index) for edge slot i of the face."""
        view = self.views[fid]
        cyc = self.corner_verts[fid]
        return view.node, edge_between(cyc[i], cyc[(i + 1) % 3])

    def edge_slot_in(self, fid, eid):
        return self.edges[fid].index(eid)

    # -- tracks ------------------------------------------------------------------

    def track_corner(self, fid, which):
        """Corner position of the face's track-cusp: colours switch blue->red
        anticlockwise there for the upper track, red->blue for the lower."""
        cols = [self.colour[e] for e in self.edges[fid]]
        first = BLUE if which == UPPER else RED
        for k in range(3):
            if cols[(k + 2) % 3] == first and cols[k] != first:
                return k
        raise RuntimeError("face has only one colour")

    def pointed_edge(self, fid, which):
        """Edge id the face's track flows into."""
        k = self.track_corner(fid, which)
        return self.edges[fid][(k + 1) % 3]

    def track_cusp_of(self, fid, which):
        return self.corners[fid][self.track_corner(fid, which)]

    def classify_edge(self, eid, which):
        """(kind, turn) of an interior edge: sink, fall or watershed, with the
        turn direction for falls and the handedness for watersheds."""
        fs = self.edge_faces[eid]
        if len(fs) != 2:
            return ("coastal", None)
        pts = [self.pointed_edge(f, which) == eid for f in fs]
        if all(pts):
            return ("sink", None)
        if not any(pts):
            turns = set()
            for f in fs:
                i = self.edge_slot_in(f, eid)
                j = self.edges[f].index(self.pointed_edge(f, which))
                turns.add("right" if j == (i + 1) % 3 else "left")
            if len(turns) != 1:
                raise RuntimeError("watershed handedness disagrees across the edge")
            return ("watershed", turns.pop())
        src = fs[0] if pts[0] else fs[1]
        tgt = self.face_across(src, eid)
        i = self.edge_slot_in(tgt, eid)
        j = self.edges[tgt].index(self.pointed_edge(tgt, which))
        return ("fall", "right" if j == (i + 1) % 3 else "left")

    def sinks(self, which):
        out = []
        for eid, fs in self.edge_faces.items():
            if len(fs) == 2 and all(self.pointed_edge(f, which) == eid for f in fs):
                out.append(eid)
        return out

    # -- coast and shape -----------------------------------------------------------

    def coast(self):
        """Directed coastal edges (tail cusp, head cusp, edge id), chained
        anticlockwise as seen from above."""
        if self._coast is not None:
            return self._coast
        step = {}
        for fid in self.views:
            for i, eid in enumerate(self.edges[fid]):
                if self.is_boundary_edge(eid):
                    tail = self.corners[fid][i]
                    head = self.corners[fid][(i + 1) % 3]
                    if tail in step:
                        raise RuntimeError("coast is not a single cycle")
                    step[tail] = (head, eid)
        if not step:
            raise RuntimeError("landscape has no boundary")
        start = min(step)
        cycle = []
        cur = start
        for _ in range(len(step)):
            head, eid = step[cur]
            cycle.append((cur, head, eid))
            cur = head
        if cur != start or len(cycle) != len(step):
            raise RuntimeError("coast is not a single cycle")
        self._coast = cycle
        return cycle

    def coast_cusps(self):
        return [tail for tail, _h, _e in self.coast()]

    def euler_characteristic(self):
        return len(self.cusp_ids()) - len(self.edge_faces) + len(self.views)

    def check_disk(self):
        """Interior an open disk: Euler characteristic 1, one boundary cycle."""
        if self.euler_characteristic() != 1:
            raise RuntimeError(f"landscape has Euler characteristic {self.euler_characteristic()}")
        self.coast()
        return True

    def spans(self, coastal_edge_ids):
        return set(coastal_edge_ids) <= set(self.edge_faces)

    # -- heights -------------------------------------------------------------------

    def fan_count_inside(self, fid, eid):
        """Number of continent tetrahedra on this landscape's side of the
        (interior) edge, between its two landscape faces."""
        view = self.views[fid]
        i = self.edge_slot_in(fid, eid)
        node, e = self.model_edge(fid, i)
        a, b = EDGE_VERTICES[e]
        out = next(ff for ff in range(4) if ff not in (a, b) and ff != view.face)
        count = 1
        cont = self.cont
        while True:
            if cont.face_id(node, out) in self.views:
                other = cont.face_id(node, out)
                if other != self.face_across(fid, eid):
                    raise RuntimeError("edge fan ended at an unexpected face")
                return count
            n2 = cont.nbr[node][out]
            if n2 is None:
                raise RuntimeError("edge fan left the continent")
            _t2, _f2, p = cont.tri.gluings[cont.bases[node]][out]
            e2 = map_edge(p, e)
            fin = p[out]
            a, b = EDGE_VERTICES[e2]
            node, e, out = n2, e2, next(
                ff for ff in range(4) if ff not in (a, b) and ff != fin
            )
            count += 1
            if count > cont.edge_degree_of(node, e):
                raise RuntimeError("edge fan exceeds the base degree")


# ---------------------------------------------------------------------------
# rivers


@dataclass
class River:
    landscape: Landscape
    which: str
    faces: list
    falls: list  # (edge id, height) per interior fall, in flow order
    mouth: int
    mouth_kind: str  # "coastal" or "sink"
    source: int = None

    @property
    def length(self):
        return len(self.faces)

    def complexity(self):
        return river_complexity(self)


@dataclass
class ForkedRiver:
    main: River
    fork_face: int
    sink_edge: int
    distributaries: tuple

    @property
    def length(self):
        return self.main.length + 1 + sum(d.length for d in self.distributaries)

    def mouths(self):
        return [d.mouth for d in self.distributaries]

    def faces(self):
        out = list(self.main.faces) + [self.fork_face]
        for d in self.distributaries:
            out += d.faces
        return out

    def riverbanks(self):
        """Boundary edges of the forked river other than its mouths."""
        counts = {}
        per_face = {}
        for f in self.faces():
            per_face[f] = self.main.landscape.edges[f]
            for e in per_face[f]:
                counts[e] = counts.get(e, 0) + 1
        mouths = set(self.mouths())
        return sorted(e for e, c in counts.items() if c == 1 and e not in mouths)


def maximal_river(landscape, fid, which=None):
    """Follow the track flow from a source face to a sink or the coast."""
    if which is None:
        if landscape.side not in (UPPER, LOWER):
            raise ValueError("a track side is required on a layer landscape")
        which = landscape.side
    faces = [fid]
    falls = []
    cur = fid
    limit = len(landscape.views) + 1
    while True:
        eid = landscape.pointed_edge(cur, which)
        if landscape.is_boundary_edge(eid):
            return River(landscape, which, faces, falls, eid, "coastal", source=fid)
        nxt = landscape.face_across(cur, eid)
        if landscape.pointed_edge(nxt, which) == eid:
            return River(landscape, which, faces, falls, eid, "sink", source=fid)
        if landscape.side in (UPPER, LOWER):
            deg = landscape.cont.edge_degree_of(*landscape.model_edge(cur, landscape.edge_slot_in(cur, eid)))
            falls.append((eid, deg - landscape.fan_count_inside(cur, eid)))
        faces.append(nxt)
        cur = nxt
        if len(faces) > limit:
            raise RuntimeError("river exceeded the landscape size")


def river_complexity(river):
    """(length, h_1, ..., h_{l-1}); tuples compare lexicographically."""
    if river.mouth_kind != "coastal":
        raise ForkedRiverHasNoComplexity("river ends at a sink")
    return (river.length, *[h for _e, h in river.falls])


def forked_river(landscape, fid, which=None):
    """The forked river of Def. style: the maximal river, or the river plus
    the face past its sink and the two distributaries."""
    main = maximal_river(landscape, fid, which)
    which = main.which
    if main.mouth_kind == "coastal":
        return main
    sink = main.mouth
    f0 = landscape.face_across(main.faces[-1], sink)
    i = landscape.edge_slot_in(f0, sink)
    dists = []
    for j in ((i + 1) % 3, (i + 2) % 3):
        dists.append(_distributary(landscape, f0, landscape.edges[f0][j], which))
    return ForkedRiver(main, f0, sink, tuple(dists))


def _distributary(landscape, from_face, eid, which):
    faces = []
    cur_face, cur_e = from_face, eid
    limit = len(landscape.views) + 1
    while True:
        if landscape.is_boundary_edge(cur_e):
            return River(landscape, which, faces, [], cur_e, "coastal")
        nxt = landscape.face_across(cur_face, cur_e)
        if landscape.pointed_edge(nxt, which) == cur_e:
            # with no triangles the flow never leaves; otherwise a true sink
            return River(landscape, which, faces, [], cur_e, "sink" if faces else "still")
        faces.append(nxt)
        cur_face, cur_e = nxt, landscape.pointed_edge(nxt, which)
        if len(faces) > limit:
            raise RuntimeError("distributary exceeded the landscape size")


# ---------------------------------------------------------------------------
# continent operations


def initial_continent(tri, tts, base_tet=0):
    return Continent(tri, tts, base_tet)


def landfill(cont, side, eid):
    """Attach the unique tetrahedron over a sink (in-fill) or over a coastal
    mouth; raises NotAMouth at falls and watersheds."""
    ls = cont.landscape(side)
    fs = ls.edge_faces.get(eid)
    if fs is None:
        raise EdgeNotInContinent(f"edge {eid} is not on the {side} landscape")
    pointing = [f for f in fs if ls.pointed_edge(f, side) == eid]
    if len(fs) == 1:
        if not pointing:
            raise NotAMouth(f"coastal edge {eid} is not a mouth")
        view = ls.views[fs[0]]
    else:
        if len(pointing) != 2:
            raise NotAMouth(f"interior edge {eid} is a fall or watershed")
        view = ls.views[min(pointing)]
        cont.infills += 1
    return cont.resolve(view.node, view.face)


def convexify(cont, rng=None):
    """In-fill all sinks on both landscapes; the cusp set never changes.

    Sinks are processed in increasing (face id, edge id) order, or shuffled
    by ``rng`` (any order terminates and yields the same continent)."""
    cusps_before = len(cont.cusps())
    for side in (UPPER, LOWER):
        n_faces = len(cont.landscape(side).views)
        bound = n_faces * (n_faces - 1) // 2
        fills = 0
        while True:
            ls = cont.landscape(side)
            sinks = ls.sinks(side)
            if not sinks:
                break
            keyed = sorted((min(ls.edge_faces[e]), e) for e in sinks)
            if rng is not None:
                pick = keyed[rng.randrange(len(keyed))][1]
            else:
                pick = keyed[0][1]
            landfill(cont, side, pick)
            fills += 1
            if fills > bound:
                raise RuntimeError("in-fill count exceeded the n(n-1)/2 bound")
    if len(cont.cusps()) != cusps_before:
        raise RuntimeError("convexification changed the cusp set")
    return cont


def is_convex(cont):
    return not cont.landscape(UPPER).sinks(UPPER) and not cont.landscape(LOWER).sinks(LOWER)


def channelise(cont, fid, side=UPPER):
    """Coastal landfill at the mouth of the maximal river from ``fid``, then
    convexify.  Requires a convex continent and a boundary face."""
    if not is_convex(cont):
        raise NotConvex("channelisation requires a convex continent")
    ls = cont.landscape(side)
    if fid not in ls.views:
        raise FaceNotOnBoundary(f"face {fid} is not on the {side} landscape")
    river = maximal_river(ls, fid, side)
    if river.mouth_kind != "coastal":
        raise RuntimeError("river in a convex continent ended at a sink")
    landfill(cont, side, river.mouth)
    return convexify(cont)


def grow_to_include(cont, path, start=None, max_rounds=100000):
    """Grow a convex continent to contain the lift at the end of the
    face-crossing path word, channelising at each boundary face it meets."""
    convexify(cont)
    cur = cont.root if start is None else start
    rounds = 0
    for f in path:
        if not 0 <= f < 4:
            raise ValueError(f"face index {f} out of range")
        while cont.nbr[cur][f] is None:
            side = cont.boundary_side_of(cur, f)
            channelise(cont, cont.face_id(cur, f), side)
            rounds += 1
            if rounds > max_rounds:
                raise DepthExhausted("growth budget exhausted")
        cur = cont.nbr[cur][f]
    return cur


def extract_layering(cont):
    """Spanning landscapes L_0 (lower) ... L_N (upper), consecutive pairs
    cobounding exactly one tetrahedron."""
    tts, tri = cont.tts, cont.tri
    layer = dict(cont.landscape(LOWER).views)
    layers = [Landscape(cont, list(layer.values()), "layer")]
    remaining = set(range(len(cont.bases)))
    order = []
    while remaining:
        pick = None
        for n in sorted(remaining):
            lows = [cont.face_id(n, f) for f in tts.lower_faces(cont.bases[n])]
            if all(fid in layer for fid in lows):
                pick = n
                break
        if pick is None:
            raise RuntimeError("layering extraction stalled")
        for f in tts.lower_faces(cont.bases[pick]):
            del layer[cont.face_id(pick, f)]
        for f in tts.upper_faces(cont.bases[pick]):
            layer[cont.face_id(pick, f)] = FaceView(pick, f)
        layers.append(Landscape(cont, list(layer.values()), "layer"))
        order.append(pick)
        remaining.discard(pick)
    if set(layers[-1].views) != set(cont.landscape(UPPER).views):
        raise RuntimeError("layering did not end at the upper landscape")
    return layers, order


def check_no_parallel_edges(cont):
    """No two distinct lifted edges join the same pair of lifted cusps."""
    by_pair = {}
    for node in range(len(cont.bases)):
        for e in range(6):
            eid = cont.edge_id(node, e)
            a, b = EDGE_VERTICES[e]
            pair = frozenset((cont.cusp(node, a), cont.cusp(node, b)))
            old = by_pair.setdefault(pair, eid)
            if old != eid:
                return False
    return True
