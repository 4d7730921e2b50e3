"""Decode and encode census signatures.

A taut signature has the shape ``<isoSig>_<angles>``.  The isoSig part is the
standard isomorphism-signature encoding of a triangulation over the alphabet
``a..zA..Z0..9+-`` (value 0..63): per connected component it stores the size,
then one 2-bit action per unseen facet (0 boundary, 1 glue to a fresh
tetrahedron by the identity, 2 glue to an already-labelled one), then the
destination of every action-2 gluing, then its vertex permutation as the
lexicographic rank in S4.  The angle part is one digit per tetrahedron
selecting the pair of opposite pi-edges (0 -> 01|23, 1 -> 02|13, 2 -> 03|12).

The canonical form of a triangulation is the lexicographically smallest
encoding over all choices of start tetrahedron and start labelling; the
canonical angle string is the smallest transport of the pi-pairs over all
minimising relabellings.
"""

from __future__ import annotations

import string

from .errors import AngleLengthMismatch, InvalidGluing, MalformedSignature
from .perms import IDENTITY, S4, S4_INDEX, compose, inverse
from .triangulation import EDGE_VERTICES, Triangulation, edge_between

ALPHABET = string.ascii_lowercase + string.ascii_uppercase + string.digits + "+-"
VALUE = {ch: i for i, ch in enumerate(ALPHABET)}

# pi-pair digit d selects opposite edges {d, 5-d} in the model edge numbering
PAIR_EDGES = ((0, 5), (1, 4), (2, 3))


def digit_of_pair(e):
    return e if e < 3 else 5 - e


def _val(sig, pos):
    try:
        return VALUE[sig[pos]]
    except (IndexError, KeyError):
        raise MalformedSignature(f"bad or missing character at position {pos}") from None


def _read_int(sig, pos, nchars):
    v = 0
    for i in range(nchars):
        v |= _val(sig, pos + i) << (6 * i)
    return v, pos + nchars


def decode_isosig(sig):
    """Decode an isoSig into a gluing table (list of 4-slot rows)."""
    for ch in sig:
        if ch not in VALUE:
            raise MalformedSignature(f"character {ch!r} not in the signature alphabet")
    gluings = []
    pos = 0
    while pos < len(sig):
        pos = _decode_component(sig, pos, gluings)
    return gluings


def _decode_component(sig, pos, gluings):
    n = _val(sig, pos)
    pos += 1
    nchars = 1
    if n == 63:
        nchars = _val(sig, pos)
        pos += 1
        n, pos = _read_int(sig, pos, nchars)
    if n == 0:
        return pos

    actions = []
    covered = 0
    njoins = 0
    while covered < 4 * n:
        k = _val(sig, pos)
        pos += 1
        for _ in range(3):
            a = k & 3
            k >>= 2
            if covered == 4 * n:
                if a:
                    raise MalformedSignature("nonzero padding in facet actions")
                continue
            if a == 0:
                covered += 1
            elif a in (1, 2):
                if covered + 2 > 4 * n:
                    raise InvalidGluing("facet action overruns the facet count")
                covered += 2
                njoins += a == 2
            else:
                raise MalformedSignature("facet action 3 is invalid")
            actions.append(a)

    dests = []
    for _ in range(njoins):
        d, pos = _read_int(sig, pos, nchars)
        dests.append(d)
    perms = []
    for _ in range(njoins):
        g = _val(sig, pos)
        pos += 1
        if g >= 24:
            raise InvalidGluing(f"permutation index {g} out of range")
        perms.append(S4[g])

    base = len(gluings)
    gluings += [[None] * 4 for _ in range(n)]

    def join(t, f, t2, f2, p):
        if gluings[base + t][f] is not None or gluings[base + t2][f2] is not None:
            raise InvalidGluing("facet glued twice")
        gluings[base + t][f] = (base + t2, f2, p)
        gluings[base + t2][f2] = (base + t, f, inverse(p))

    next_unused = 1
    ai = ji = 0
    for t in range(n):
        for f in range(4):
            if gluings[base + t][f] is not None:
                continue
            a = actions[ai]
            ai += 1
            if a == 0:
                continue
            if a == 1:
                if next_unused >= n:
                    raise InvalidGluing("new-tetrahedron action overruns the size")
                join(t, f, next_unused, f, IDENTITY)
                next_unused += 1
            else:
                d, p = dests[ji], perms[ji]
                ji += 1
                if d >= n:
                    raise InvalidGluing(f"join destination {d} out of range")
                if (d, p[f]) == (t, f) and p == IDENTITY:
                    raise InvalidGluing("identity self-gluing")
                join(t, f, d, p[f], p)
    if ai != len(actions) or ji != njoins:
        raise InvalidGluing("unused gluing data")
    if next_unused != n:
        raise InvalidGluing("component is not connected")
    return pos


def _encode_int(v, nchars):
    out = []
    for _ in range(nchars):
        out.append(ALPHABET[v & 63])
        v >>= 6
    return "".join(out)


def _size_chars(n):
    if n < 63:
        return 1
    nchars = 0
    v = n
    while v:
        nchars += 1
        v >>= 6
    return nchars


def encode_from(tri, start, rho):
    """Encode the component of ``start``, relabelled so that ``start`` becomes
    tetrahedron 0 with vertex ``rho[i]`` renamed ``i``.

    Returns (sig, image, vertex_map) where image[t] is the new index of t and
    vertex_map[t] the label permutation (old -> new), or -1/None off-component.
    """
    n = tri.tet_count
    image = [-1] * n
    preimage = [-1] * n
    vmap = [None] * n
    image[start] = 0
    preimage[0] = start
    vmap[start] = inverse(rho)

    actions = []
    join_dest = []
    join_perm = []
    next_unused = 1
    simp_img = 0
    while simp_img < n and preimage[simp_img] >= 0:
        src = preimage[simp_img]
        inv_m = inverse(vmap[src])
        for facet_img in range(4):
            facet_src = inv_m[facet_img]
            g = tri.gluings[src][facet_src]
            if g is None:
                actions.append(0)
                continue
            dest, dest_facet, p = g
            if image[dest] >= 0:
                seen = image[dest] < simp_img or (
                    image[dest] == simp_img and vmap[dest][dest_facet] < facet_img
                )
                if seen:
                    continue
            if image[dest] < 0:
                image[dest] = next_unused
                preimage[next_unused] = dest
                next_unused += 1
                vmap[dest] = compose(vmap[src], inverse(p))
                actions.append(1)
            else:
                actions.append(2)
                join_dest.append(image[dest])
                join_perm.append(S4_INDEX[compose(vmap[dest], compose(p, inverse(vmap[src])))])
        simp_img += 1

    size = simp_img
    nchars = _size_chars(size)
    parts = []
    if size >= 63:
        parts.append(ALPHABET[63] + ALPHABET[nchars])
    parts.append(_encode_int(size, nchars))
    for i in range(0, len(actions), 3):
        k = actions[i]
        if i + 1 < len(actions):
            k |= actions[i + 1] << 2
        if i + 2 < len(actions):
            k |= actions[i + 2] << 4
        parts.append(ALPHABET[k])
    for d in join_dest:
        parts.append(_encode_int(d, nchars))
    for g in join_perm:
        parts.append(ALPHABET[g])
    return "".join(parts), image, vmap


def canonical_isosig_with_angles(tri, pi_pairs):
    """Canonical ``isoSig_angles`` pair for a connected triangulation."""
    if tri.tet_count == 0:
        return "", ""
    best_sig = None
    best_angles = None
    for start in range(tri.tet_count):
        for rho in S4:
            sig, image, vmap = encode_from(tri, start, rho)
            if -1 in image:
                raise InvalidGluing("triangulation is not connected")
            if best_sig is not None and sig > best_sig:
                continue
            digits = [None] * tri.tet_count
            for t in range(tri.tet_count):
                a, b = EDGE_VERTICES[PAIR_EDGES[pi_pairs[t]][0]]
                m = vmap[t]
                digits[image[t]] = str(digit_of_pair(edge_between(m[a], m[b])))
            angles = "".join(digits)
            if best_sig is None or sig < best_sig or angles < best_angles:
                best_sig, best_angles = sig, angles
    return best_sig, best_angles


def split_taut_sig(sig):
    if sig.count("_") != 1:
        raise MalformedSignature("expected exactly one '_' separator")
    iso, angles = sig.split("_")
    return iso, angles


def decode_taut_sig(sig):
    """Decode ``isoSig_angles`` into (Triangulation, pi-pair digit list)."""
    iso, angles = split_taut_sig(sig)
    gluings = decode_isosig(iso)
    tri = Triangulation(gluings)
    if len(angles) != tri.tet_count:
        raise AngleLengthMismatch(
            f"angle string has length {len(angles)}, expected {tri.tet_count}"
        )
    pairs = []
    for ch in angles:
        if ch not in "012":
            raise MalformedSignature(f"angle digit {ch!r} not in 0/1/2")
        pairs.append(int(ch))
    return tri, pairs


def encode_taut_sig(tri, pi_pairs):
    sig, angles = canonical_isosig_with_angles(tri, pi_pairs)
    return f"{sig}_{angles}"
