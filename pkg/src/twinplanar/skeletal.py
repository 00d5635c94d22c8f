"""Skeletal-trigraph bookkeeping: bridges, face assignments, wrapped faces,
k-reduced counting and vh-division validation.

These are the checkable counterparts of the geometric notions the sequence
builders rely on; the builders keep the skeleton implicit for speed, while
tests and ``--assert`` runs use this module to validate states explicitly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .layering import BfsTree
from .plane_graph import PlaneGraph
from .trigraph import Trigraph


class SkeletalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Bridges
# ---------------------------------------------------------------------------


@dataclass
class Bridge:
    """A component of H - V(S) with its attachments, or a single S-chord."""

    vertices: frozenset[int]
    attachments: frozenset[int]
    trivial: bool
    chord: tuple[int, int] | None = None


def bridges(h: Trigraph, s_vertices: Iterable[int]) -> list[Bridge]:
    """All bridges of S in the trigraph h (black and red edges alike)."""
    sv = set(s_vertices)
    seen: set[int] = set()
    out: list[Bridge] = []
    for v in sorted(h.black):
        if v in sv or v in seen:
            continue
        comp = {v}
        att: set[int] = set()
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in h.neighbors(u):
                if w in sv:
                    att.add(w)
                elif w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        out.append(Bridge(frozenset(comp), frozenset(att), False))
    done_chords: set[tuple[int, int]] = set()
    for v in sorted(sv):
        if v not in h.black:
            continue
        for w in sorted(h.neighbors(v)):
            if w in sv and v < w:
                if (v, w) not in done_chords:
                    done_chords.add((v, w))
                    out.append(Bridge(frozenset(), frozenset((v, w)), True,
                                      chord=(v, w)))
    return out


# ---------------------------------------------------------------------------
# Natural face assignment
# ---------------------------------------------------------------------------


def skeleton_faces(g: PlaneGraph, s_eids: Iterable[int]) -> dict[int, int]:
    """Faces of the sub-plane-graph S inside g's embedding.

    Returns a map S-dart -> S-face id, where S-faces are orbits of
    ``d -> pred among S-darts at head(d) of d^1``.
    """
    se = set(s_eids)
    sdarts = [d for d in range(2 * g.m) if (d >> 1) in se]
    sset = set(sdarts)

    def s_next(d: int) -> int:
        e = d ^ 1
        while True:
            e = g.rot_prev(e)
            if e in sset:
                return e

    face: dict[int, int] = {}
    nf = 0
    for d0 in sdarts:
        if d0 in face:
            continue
        d = d0
        while d not in face:
            face[d] = nf
            d = s_next(d)
        nf += 1
    return face


def natural_assignment(g: PlaneGraph, s_eids: Iterable[int]
                       ) -> tuple[dict[int, int], list[Bridge]]:
    """Natural face assignment: each bridge of S goes to the S-face its
    drawing occupies.  Returns (bridge index -> S-face id, bridges).

    The trigraph view of g is its edge set with all edges black.
    """
    se = set(s_eids)
    sv: set[int] = set()
    for e in se:
        u, v = g.edges[e]
        sv.add(u)
        sv.add(v)
    h = Trigraph(g.n, g.edges)
    bl = bridges(h, sv)
    sface = skeleton_faces(g, se)

    def face_of_dart(d: int) -> int:
        # the S-face whose wedge at tail(d) contains the non-S dart d:
        # sweep cw (rotation predecessor) to the first S-dart, whose left
        # S-face is the wedge's face.  tail(d) must lie on the skeleton.
        e = d
        while (e >> 1) not in se:
            e = g.rot_prev(e)
        return sface[e]

    assign: dict[int, int] = {}
    for bi, br in enumerate(bl):
        darts = []
        if br.trivial:
            u, v = br.chord  # type: ignore[misc]
            for d in g.rot[u]:
                if g.head[d] == v and (d >> 1) not in se:
                    darts.append(d)
                    break
            if not darts:
                continue  # an edge of S itself, not a bridge
        else:
            # probe through the attachment darts; interior vertices carry
            # no skeleton dart to anchor a sweep on
            for s in sorted(br.attachments):
                for d in g.rot[s]:
                    if g.head[d] in br.vertices:
                        darts.append(d)
        found: set[int] = set()
        for d in darts:
            found.add(face_of_dart(d))
        if len(found) != 1:
            raise SkeletalError(
                f"bridge {bi} spans faces {sorted(found)} (embedding inconsistency)")
        f = found.pop()
        boundary = {g.tail[d] for d, ff in sface.items() if ff == f}
        if not br.attachments <= boundary:
            raise SkeletalError(
                f"bridge {bi} attachments {sorted(br.attachments)} not on "
                f"face {f} boundary")
        assign[bi] = f
    return assign, bl


def check_s_aware(h: Trigraph, s_vertices: Iterable[int],
                  assignment: Mapping[int, int], x: int, y: int) -> bool:
    """True iff contracting x, y is S-aware: both off the skeleton and in
    bridges assigned to one common face (``assignment``: vertex -> face)."""
    sv = set(s_vertices)
    if x in sv or y in sv:
        return False
    fx = assignment.get(x)
    fy = assignment.get(y)
    return fx is not None and fx == fy


# ---------------------------------------------------------------------------
# Wrapped faces
# ---------------------------------------------------------------------------


@dataclass
class WrappedFace:
    """A T-wrapped cycle: two vertical paths from the sink plus a lid edge."""

    sink: int
    lid: tuple[int, int]  # (left end, right end)
    left_path: list[int]  # sink .. left lid end
    right_path: list[int]  # sink .. right lid end
    boundary: list[int]  # cycle vertices, ccw with the disk on the left


def wrapped_info(t: BfsTree, cycle_darts: Sequence[int]) -> WrappedFace:
    """Decompose a cycle (darts listed with its disk on the left) into sink,
    lid and wrapping paths.  Raises SkeletalError if it is not T-wrapped."""
    g = t.g
    vs = [g.tail[d] for d in cycle_darts]
    non_tree = [d for d in cycle_darts if not t.is_tree_edge(d >> 1)]
    if len(non_tree) != 1:
        raise SkeletalError(
            f"cycle has {len(non_tree)} non-tree edges, wrapped needs exactly 1")
    lid_dart = non_tree[0]
    v1, v2 = g.tail[lid_dart], g.head[lid_dart]
    sinks = [v for v in vs if t.depth[v] == min(t.depth[v] for v in vs)]
    if len(sinks) != 1:
        raise SkeletalError("no unique minimum-depth vertex on the cycle")
    sink = sinks[0]
    left_path = _path_down(t, sink, v1)
    right_path = _path_down(t, sink, v2)
    if left_path is None or right_path is None:
        raise SkeletalError("cycle sides are not vertical paths")
    if set(left_path) | set(right_path) != set(vs):
        raise SkeletalError("cycle is not two vertical paths plus a lid")
    return WrappedFace(sink, (v1, v2), left_path, right_path, list(vs))


def _path_down(t: BfsTree, top: int, bottom: int) -> list[int] | None:
    if not t.is_ancestor(top, bottom):
        return None
    path = [bottom]
    while path[-1] != top:
        path.append(t.parent[path[-1]])
    return path[::-1]


# ---------------------------------------------------------------------------
# Reduced faces
# ---------------------------------------------------------------------------


def is_k_reduced(levels_of_assigned: Iterable[int], k: int) -> bool:
    """At most k assigned vertices on every level."""
    return all(c <= k for c in Counter(levels_of_assigned).values())


def is_maximally_k_reduced(levels_of_assigned: Iterable[int], k: int,
                           boundary_levels: Iterable[int],
                           boundary_is_triangle: bool) -> bool:
    """k-reduced, and no assigned level exceeds the boundary maximum
    (one more is allowed inside a triangle)."""
    la = list(levels_of_assigned)
    if not is_k_reduced(la, k):
        return False
    if not la:
        return True
    m = max(boundary_levels)
    cap = m + 1 if boundary_is_triangle else m
    return max(la) <= cap


# ---------------------------------------------------------------------------
# Vh-division validation
# ---------------------------------------------------------------------------


def _edge_set(g: PlaneGraph, darts: Sequence[int]) -> set[int]:
    return {d >> 1 for d in darts}


def validate_vh_division(t: BfsTree,
                         d_cycle: Sequence[int],
                         c_cycle: Sequence[int],
                         b1: Sequence[int] | None,
                         b2: Sequence[int] | None,
                         p0: Sequence[int] | None = None,
                         s_eids: Iterable[int] | None = None,
                         g: PlaneGraph | None = None,
                         ) -> tuple[bool, str]:
    """Check clauses (a)-(d) of a vh-division of D into (C, B1, B2).

    Cycles are dart sequences (disk on the left); ``p0`` is the vertical
    path (top..bottom vertex list) required when B2 is present; ``s_eids``
    with ``g`` enables the 'C is an S-face' test of clause (c).
    Returns (ok, failed-clause-or-empty).
    """
    g = g or t.g
    wd = wrapped_info(t, d_cycle)
    ed = _edge_set(g, d_cycle)
    ec = _edge_set(g, c_cycle)
    e1 = _edge_set(g, b1) if b1 else set()
    e2 = _edge_set(g, b2) if b2 else set()
    for name, b in (("B1", b1), ("B2", b2)):
        if not b:
            continue
        wb = wrapped_info(t, b)
        if len(b) == 3:
            return False, f"(pre) {name} is a triangle"
        la, lb = wb.lid
        if t.depth[la] != t.depth[lb]:
            return False, f"(pre) {name} lid is not horizontal"
    if ec ^ e1 ^ e2 != ed:
        return False, "(a) C ^ B1 ^ B2 != D"
    if b1:
        wb1 = wrapped_info(t, b1)
        if wb1.sink != wd.sink:
            return False, "(b) B1 sink differs from D sink"
        if not (set(wb1.left_path) <= set(wd.left_path)
                and set(wb1.right_path) <= set(wd.right_path)):
            return False, "(b) B1 wrapping paths not subpaths of D's"
    if not b2:
        if s_eids is not None:
            sface = skeleton_faces(g, s_eids)
            fs = {sface.get(d) for d in c_cycle}
            if len(fs) != 1 or None in fs:
                return False, "(c) C is not an S-face"
    else:
        wb2 = wrapped_info(t, b2)
        if e1 & e2:
            return False, "(d) B2 not edge-disjoint from B1"
        if not set(wb2.left_path) <= set(wd.left_path):
            return False, "(d) B2 left wrapping path not inside P1"
        if p0 is None:
            return False, "(d) missing P0"
        pset = set(p0)
        ok_r = set(wb2.right_path) <= pset
        if not ok_r and not b1:
            ok_r = set(wb2.right_path) <= pset | set(wd.right_path)
        if not ok_r:
            return False, "(d) B2 right wrapping path not inside P0 (or P0+P2)"
    return True, ""


# ---------------------------------------------------------------------------
# Runtime assertions
# ---------------------------------------------------------------------------


def assert_sink_black(h: Trigraph, wf: WrappedFace,
                      assigned: Iterable[int]) -> None:
    """The sink of a wrapped face must see no red edge into its interior."""
    s = wf.sink
    reds = h.red.get(s, set())
    bad = reds & set(assigned)
    if bad:
        raise SkeletalError(f"sink {s} has red edges to assigned {sorted(bad)}")


def assert_left_align_exclusion(h: Trigraph, t: BfsTree, wf: WrappedFace,
                                assigned: Iterable[int]) -> None:
    """No vertex on the right wrapping path may have a neighbour one level
    up among the vertices assigned inside the cycle (left-alignment)."""
    if h.level is None:
        raise SkeletalError("level assignment required")
    inner = set(assigned)
    for x in wf.right_path:
        lx = h.level[x] if x in h.level else t.depth[x]
        for y in h.neighbors(x):
            if y in inner and h.level[y] == lx - 1:
                raise SkeletalError(
                    f"right-path vertex {x} has neighbour {y} one level up "
                    f"inside the face")


# ---------------------------------------------------------------------------
# Debug dump
# ---------------------------------------------------------------------------


def write_skeleton_debug(g: PlaneGraph, s_eids: Iterable[int],
                         assignment: Mapping[int, int],
                         bridge_list: Sequence[Bridge]) -> str:
    """Plane-graph text plus ``f <faceid> <vertex-list>`` assignment lines."""
    from .plane_graph import write_plane

    out = [write_plane(g).rstrip("\n")]
    per_face: dict[int, set[int]] = {}
    for bi, f in assignment.items():
        per_face.setdefault(f, set()).update(bridge_list[bi].vertices)
    for f in sorted(per_face):
        vs = " ".join(str(v) for v in sorted(per_face[f]))
        out.append(f"f {f} {vs}".rstrip())
    return "\n".join(out) + "\n"
