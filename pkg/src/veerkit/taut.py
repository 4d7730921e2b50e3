"""Taut angle structures, co-orientations, veering colourings, and the local
structure checks on them.

A taut structure stores, per tetrahedron, which pair of opposite edges
carries the dihedral angle pi (as the census digit 0/1/2).  A transverse
structure additionally knows which pi-edge of each tetrahedron is on top;
the co-orientation of every face follows from that (the two faces containing
the top pi-edge point up and out of the tetrahedron).  A veering structure
additionally colours every edge class red or blue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import NotTransverse, NotVeering
from .isosig import PAIR_EDGES, decode_taut_sig, encode_taut_sig
from .triangulation import (
    EDGE_VERTICES,
    FACE_EDGES,
    Triangulation,
    edge_between,
    face_cycle,
    map_edge,
)

RED = "red"
BLUE = "blue"


def other_colour(c):
    return BLUE if c == RED else RED


class TetKind(Enum):
    TOGGLE_RED_TOP = "ToggleRedTop"
    TOGGLE_BLUE_TOP = "ToggleBlueTop"
    FAN_RED = "FanRed"
    FAN_BLUE = "FanBlue"

    @property
    def is_toggle(self):
        return self in (TetKind.TOGGLE_RED_TOP, TetKind.TOGGLE_BLUE_TOP)


@dataclass
class TransverseTautStructure:
    """Pi-pairs plus, once derived, top-edge polarity and edge colours.

    ``pi_pairs[t]`` is the census digit; ``top_is_hi[t]`` says whether the
    top pi-edge of t is the lexicographically larger edge of its pair;
    ``colours[c]`` is the colour of edge class c.
    """

    tri: Triangulation
    pi_pairs: list
    top_is_hi: list = None
    colours: list = None

    def pi_edges(self, t):
        return PAIR_EDGES[self.pi_pairs[t]]

    def is_pi(self, t, e):
        return e in PAIR_EDGES[self.pi_pairs[t]]

    def top_edge(self, t):
        lo, hi = PAIR_EDGES[self.pi_pairs[t]]
        return hi if self.top_is_hi[t] else lo

    def bottom_edge(self, t):
        lo, hi = PAIR_EDGES[self.pi_pairs[t]]
        return lo if self.top_is_hi[t] else hi

    def upper_faces(self, t):
        """Faces of t whose co-orientation points out of t (they contain the
        top pi-edge, so their indices are the bottom edge's vertices)."""
        return EDGE_VERTICES[self.bottom_edge(t)]

    def lower_faces(self, t):
        return EDGE_VERTICES[self.top_edge(t)]

    def is_upper_face(self, t, f):
        return f in self.upper_faces(t)

    def face_pi_edge(self, t, f):
        """The unique edge of face f with angle pi inside t."""
        lo, hi = PAIR_EDGES[self.pi_pairs[t]]
        return lo if f not in EDGE_VERTICES[lo] else hi

    def edge_colour(self, t, e):
        return self.colours[self.tri.edge_class_of[(t, e)]]

    def reversed(self):
        """The totally reversed co-orientation (top and bottom swapped)."""
        flipped = [not b for b in self.top_is_hi]
        return TransverseTautStructure(self.tri, list(self.pi_pairs), flipped, self.colours)


# ---------------------------------------------------------------------------
# taut check


@dataclass
class EdgeCheck:
    edge_class: int
    degree: int
    pi_count: int

    @property
    def ok(self):
        return self.pi_count == 2

    def as_dict(self):
        return {"edge": self.edge_class, "degree": self.degree, "pi_count": self.pi_count}


@dataclass
class TautCertificate:
    edges: list
    vertex_corner_sums_ok: bool
    closed: bool
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def check_taut(tri, taut):
    """Certify the taut angle conditions; violations are data, not errors."""
    edges = []
    violations = []
    closed = tri.is_closed()
    for cls in range(len(tri.edge_classes)):
        fan, cyc = tri.edge_class_fan(cls)
        pi = sum(1 for (t, e, _f) in fan if taut.is_pi(t, e))
        edges.append(EdgeCheck(cls, len(fan), pi))
        if pi != 2 or not cyc:
            violations.append(
                f"edge class {cls}: pi count {pi} over degree {len(fan)}"
                + ("" if cyc else " (open link)")
            )
    # each model corner meets exactly one pi-edge, by the pair structure
    corner_ok = all(
        sum(taut.is_pi(t, e) for e in range(6) if v in EDGE_VERTICES[e]) == 1
        for t in range(tri.tet_count)
        for v in range(4)
    )
    if not corner_ok:
        violations.append("corner angle sums broken")
    return TautCertificate(edges, corner_ok, closed, violations)


# ---------------------------------------------------------------------------
# co-orientations


def derive_coorientations(tri, taut):
    """Propagate which pi-edge of each tetrahedron is on top.

    Exactly two global solutions exist on success (related by total
    reversal); the one making tetrahedron 0's top edge the lex-larger member
    of its pair is returned.  Raises NotTransverse on a parity contradiction.
    """
    n = tri.tet_count
    top_is_hi = [None] * n

    def upper(t, f, hi):
        # with top = hi edge, the upper faces are the lo edge's vertices
        lo_e = PAIR_EDGES[taut.pi_pairs[t]][0]
        base = f in EDGE_VERTICES[lo_e]
        return base if hi else not base

    for start in range(n):
        if top_is_hi[start] is not None:
            continue
        top_is_hi[start] = True
        stack = [start]
        while stack:
            t = stack.pop()
            for f in range(4):
                g = tri.gluings[t][f]
                if g is None:
                    continue
                t2, f2, _p = g
                # the glued copies must point through the face the same way:
                # upper on one side, lower on the other
                want = not upper(t, f, top_is_hi[t])
                forced = want if upper(t2, f2, True) else not want
                if top_is_hi[t2] is None:
                    top_is_hi[t2] = forced
                    stack.append(t2)
                elif top_is_hi[t2] != forced:
                    raise NotTransverse(f"parity contradiction at ({t},{f})")
    return TransverseTautStructure(tri, list(taut.pi_pairs), top_is_hi, taut.colours)


def coorientation_ok(tri, tts):
    """Re-check the face constraint for a full polarity assignment."""
    for t in range(tri.tet_count):
        for f in range(4):
            g = tri.gluings[t][f]
            if g is None:
                continue
            t2, f2, _ = g
            if tts.is_upper_face(t, f) == tts.is_upper_face(t2, f2):
                return False
    return True


# ---------------------------------------------------------------------------
# veering colours


def face_colour_rule(tri, tts, t, f):
    """Forced colours on face f of tetrahedron t: [(edge, colour), (edge, colour)].

    Reading the face's corner cycle anticlockwise from outside the
    tetrahedron, the edge after the pi-edge is red and the next one blue.
    """
    cyc = face_cycle(f, tri.orientation[t])
    edges = [
        edge_between(cyc[0], cyc[1]),
        edge_between(cyc[1], cyc[2]),
        edge_between(cyc[2], cyc[0]),
    ]
    k = edges.index(tts.face_pi_edge(t, f))
    return [(edges[(k + 1) % 3], RED), (edges[(k + 2) % 3], BLUE)]


def derive_veering_colours(tri, tts):
    """Total edge colouring per the local veering rule, or NotVeering.

    Every constraint is an equatorial edge of some tetrahedron; an edge class
    that never appears equatorially cannot be coloured and is reported as
    unconstrained.
    """
    if tri.orientation is None:
        raise NotVeering("not-orientable")
    colours = [None] * len(tri.edge_classes)
    for t in range(tri.tet_count):
        for f in range(4):
            for e, col in face_colour_rule(tri, tts, t, f):
                cls = tri.edge_class_of[(t, e)]
                if colours[cls] is None:
                    colours[cls] = col
                elif colours[cls] != col:
                    raise NotVeering("conflict", cls)
    for cls, col in enumerate(colours):
        if col is None:
            raise NotVeering("unconstrained", cls)
    return TransverseTautStructure(tri, list(tts.pi_pairs), list(tts.top_is_hi), colours)


def classify_tetrahedra(tri, tts):
    """TetKind per tetrahedron, from its six model-edge class colours."""
    kinds = []
    for t in range(tri.tet_count):
        reds = sum(1 for e in range(6) if tts.edge_colour(t, e) == RED)
        if reds == 3:
            top = tts.edge_colour(t, tts.top_edge(t))
            kinds.append(TetKind.TOGGLE_RED_TOP if top == RED else TetKind.TOGGLE_BLUE_TOP)
        elif reds == 4:
            kinds.append(TetKind.FAN_RED)
        elif reds == 2:
            kinds.append(TetKind.FAN_BLUE)
        else:
            raise NotVeering("conflict", None)
    return kinds


# ---------------------------------------------------------------------------
# edge neighbourhood report


@dataclass
class EdgeNeighbourhood:
    edge_class: int
    colour: str
    degree: int
    above: int
    below: int
    sides: list
    side_kinds: list
    majority_matching_faces: int
    problems: list

    @property
    def ok(self):
        return not self.problems


def edge_neighbourhood_report(tri, tts, kinds=None):
    """Verify the five edge-neighbourhood clauses for every edge class."""
    if kinds is None:
        kinds = classify_tetrahedra(tri, tts)
    reports = []
    for cls in range(len(tri.edge_classes)):
        col = tts.colours[cls]
        fan, cyc = tri.edge_class_fan(cls)
        problems = []
        if not cyc:
            reports.append(EdgeNeighbourhood(cls, col, len(fan), 0, 0, [], [], 0, ["open edge link"]))
            continue
        above = [i for i, (t, e, _f) in enumerate(fan) if tts.is_pi(t, e) and tts.bottom_edge(t) == e]
        below = [i for i, (t, e, _f) in enumerate(fan) if tts.is_pi(t, e) and tts.top_edge(t) == e]
        if len(above) != 1 or len(below) != 1:
            problems.append(f"above/below counts {len(above)}/{len(below)}")
            reports.append(EdgeNeighbourhood(cls, col, len(fan), len(above), len(below), [], [], 0, problems))
            continue
        a, b = above[0], below[0]
        n = len(fan)
        side1 = [fan[(b + i) % n] for i in range(1, (a - b) % n)]
        side2 = [fan[(a + i) % n] for i in range(1, (b - a) % n)]
        # side2 runs from the top tet down; flip it so both read bottom-up
        side2 = side2[::-1]
        sides = [side1, side2]
        side_kinds = [[kinds[t] for (t, _e, _f) in s] for s in sides]
        for s, sk in zip(sides, side_kinds):
            if not s:
                problems.append("empty side")
            elif len(s) == 1:
                want = TetKind.FAN_BLUE if col == BLUE else TetKind.FAN_RED
                if sk[0] != want:
                    problems.append(f"single side tet is {sk[0].value}")
            else:
                inner_fan = TetKind.FAN_RED if col == BLUE else TetKind.FAN_BLUE
                first = TetKind.TOGGLE_RED_TOP if col == BLUE else TetKind.TOGGLE_BLUE_TOP
                last = TetKind.TOGGLE_BLUE_TOP if col == BLUE else TetKind.TOGGLE_RED_TOP
                if sk[0] != first or sk[-1] != last or any(k != inner_fan for k in sk[1:-1]):
                    problems.append(f"side stack {[k.value for k in sk]}")
        maj = 0
        for i, (t, e, f_in) in enumerate(fan):
            # the face crossed between this slot and the next
            a2, b2 = EDGE_VERTICES[e]
            f_out = next(f for f in range(4) if f not in (a2, b2) and f != f_in)
            cols = [tts.edge_colour(t, e2) for e2 in FACE_EDGES[f_out]]
            if cols.count(col) == 2:
                maj += 1
        if maj != 4:
            problems.append(f"{maj} majority-{col} faces")
        reports.append(
            EdgeNeighbourhood(cls, col, n, len(above), len(below), sides, side_kinds, maj, problems)
        )
    return reports


# ---------------------------------------------------------------------------
# one-stop pipeline and report


@dataclass
class StructureReport:
    signature: str
    tri: Triangulation = None
    structure: TransverseTautStructure = None
    kinds: list = None
    taut_cert: TautCertificate = None
    neighbourhoods: list = None
    taut_ok: bool = False
    transverse_ok: bool = False
    veering_ok: bool = False
    failure: str = None

    def as_dict(self):
        edges = []
        if self.taut_cert is not None:
            for ec in self.taut_cert.edges:
                d = ec.as_dict()
                if self.structure is not None and self.structure.colours is not None:
                    d["colour"] = self.structure.colours[ec.edge_class]
                edges.append(d)
        return {
            "signature": self.signature,
            "tet_count": self.tri.tet_count if self.tri is not None else None,
            "edges": edges,
            "tet_kinds": [k.value for k in self.kinds] if self.kinds else [],
            "checks": {
                "taut": self.taut_ok,
                "transverse": self.transverse_ok,
                "veering": self.veering_ok,
            },
            **({"failure": self.failure} if self.failure else {}),
        }

    @property
    def passed(self):
        return self.taut_ok and self.transverse_ok and self.veering_ok


def analyse(sig):
    """Run parse -> taut -> transverse -> veering -> neighbourhoods on a
    signature.  Parse errors propagate; structural failures are recorded."""
    tri, pairs = decode_taut_sig(sig)
    report = StructureReport(signature=sig, tri=tri)
    taut = TransverseTautStructure(tri, pairs)
    report.taut_cert = check_taut(tri, taut)
    report.taut_ok = report.taut_cert.passed
    if not report.taut_ok:
        report.failure = "; ".join(report.taut_cert.violations)
        return report
    try:
        tts = derive_coorientations(tri, taut)
    except NotTransverse as err:
        report.failure = str(err)
        return report
    report.transverse_ok = True
    try:
        tts = derive_veering_colours(tri, tts)
    except NotVeering as err:
        report.failure = str(err)
        return report
    report.structure = tts
    report.kinds = classify_tetrahedra(tri, tts)
    report.neighbourhoods = edge_neighbourhood_report(tri, tts, report.kinds)
    report.veering_ok = all(r.ok for r in report.neighbourhoods)
    if not report.veering_ok:
        report.failure = "edge neighbourhood check failed"
    return report


def load_veering(sig):
    """Parse a signature and insist it is transverse veering."""
    report = analyse(sig)
    if not report.passed:
        raise NotVeering(report.failure or "structure checks failed")
    return report.tri, report.structure


def serialize_taut_isosig(tri, tts):
    return encode_taut_sig(tri, tts.pi_pairs)


def parse_taut_isosig(sig):
    """Spec-named alias: signature string -> (Triangulation, structure with
    pi-pairs only)."""
    tri, pairs = decode_taut_sig(sig)
    return tri, TransverseTautStructure(tri, pairs)
