"""Trigraphs, contractions with the red-edge rule, and sequence verification.

A contraction of x, y into a fresh z keeps the common black neighbours
black and turns every other inherited adjacency red:
``N(z) = (N(x) | N(y)) - {x, y}`` and
``red(z) = (red(x) | red(y) | (N(x) ^ N(y))) - {x, y}``.

A sequence's width is the maximum red degree seen after any step; dummy
``d x`` steps lower the level of x by one and never touch adjacency.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .plane_graph import FormatError

Step = tuple  # ("k", x, y, z) or ("d", x)


class SequenceError(ValueError):
    """Invalid contraction sequence (bad ids, wrong fresh id, bad d-step)."""


@dataclass
class ContractionSequence:
    """Ordered contraction steps over a graph on vertices 0..n-1.

    Fresh ids are forced: the k-th contraction creates vertex n + k.
    """

    n: int
    steps: list[Step] = field(default_factory=list)

    @property
    def contract_count(self) -> int:
        return sum(1 for s in self.steps if s[0] == "k")

    def is_full(self) -> bool:
        return self.contract_count == self.n - 1

    def contractions(self) -> list[tuple[int, int, int]]:
        return [(s[1], s[2], s[3]) for s in self.steps if s[0] == "k"]


@dataclass
class WidthReport:
    width: int
    per_step_max: list[int]
    full: bool


class Trigraph:
    """Mutable trigraph with black/red adjacency, levels and provenance.

    Single-writer; ``contract`` merges the smaller provenance set into the
    larger one so total bookkeeping stays near-linear.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 levels: Sequence[int] | None = None,
                 track_provenance: bool = True):
        self.n0 = n
        self.black: dict[int, set[int]] = {v: set() for v in range(n)}
        self.red: dict[int, set[int]] = {v: set() for v in range(n)}
        for u, v in edges:
            if u == v:
                raise SequenceError(f"loop edge at {u}")
            self.black[u].add(v)
            self.black[v].add(u)
        self.level: dict[int, int] | None = (
            {v: levels[v] for v in range(n)} if levels is not None else None)
        self.prov: dict[int, set[int]] | None = (
            {v: {v} for v in range(n)} if track_provenance else None)
        self.next_id = n

    # -- queries ------------------------------------------------------------

    def live(self) -> list[int]:
        return sorted(self.black)

    def is_live(self, v: int) -> bool:
        return v in self.black

    def red_degree(self, v: int) -> int:
        return len(self.red[v])

    def max_red_degree(self) -> int:
        return max((len(r) for r in self.red.values()), default=0)

    def neighbors(self, v: int) -> set[int]:
        return self.black[v] | self.red[v]

    # -- operations ----------------------------------------------------------

    def contract(self, x: int, y: int) -> int:
        """Contract x and y into a fresh vertex, returning its id."""
        if x == y:
            raise SequenceError("cannot contract a vertex with itself")
        if x not in self.black or y not in self.black:
            raise SequenceError(f"contracting dead/unknown vertex ({x},{y})")
        z = self.next_id
        self.next_id += 1
        bx, by = self.black[x], self.black[y]
        rx, ry = self.red[x], self.red[y]
        nx = bx | rx
        ny = by | ry
        reds = (rx | ry | (nx ^ ny)) - {x, y}
        blacks = (nx | ny) - {x, y} - reds
        for w in blacks:
            self.black[w].discard(x)
            self.black[w].discard(y)
            self.red[w].discard(x)
            self.red[w].discard(y)
            self.black[w].add(z)
        for w in reds:
            self.black[w].discard(x)
            self.black[w].discard(y)
            self.red[w].discard(x)
            self.red[w].discard(y)
            self.red[w].add(z)
        del self.black[x], self.black[y], self.red[x], self.red[y]
        self.black[z] = blacks
        self.red[z] = reds
        if self.prov is not None:
            px, py = self.prov.pop(x), self.prov.pop(y)
            if len(px) < len(py):
                px, py = py, px
            px |= py
            self.prov[z] = px
        if self.level is not None:
            self.level[z] = min(self.level.pop(x), self.level.pop(y))
        return z

    def decrease_level(self, x: int) -> None:
        if self.level is None:
            raise SequenceError("no level assignment present")
        if x not in self.black:
            raise SequenceError(f"level decrease of dead vertex {x}")
        lx = self.level[x]
        for t in self.neighbors(x):
            if self.level[t] > lx - 1:
                raise SequenceError(
                    f"illegal level decrease of {x}: neighbour {t} at level "
                    f"{self.level[t]} > {lx - 1}")
        self.level[x] = lx - 1


def contract(t: Trigraph, x: int, y: int) -> tuple[Trigraph, int]:
    """Functional wrapper around Trigraph.contract (mutates and returns t)."""
    z = t.contract(x, y)
    return t, z


# ---------------------------------------------------------------------------
# Level-assignment checks
# ---------------------------------------------------------------------------

LEVEL_PRESERVING = "level-preserving"
LEVEL_RESPECTING = "level-respecting"
VIOLATION = "violation"


def classify_step(t: Trigraph, step: Step, mode: str = "min") -> str:
    """Classify a step against Definition-style level rules.

    Contractions of equal levels are level-preserving; a one-apart pair is
    level-respecting iff every neighbour of the deeper vertex sits on the
    shallower level.  ``mode`` selects the discipline being enforced:
    "preserving" accepts only same-level contractions, "respecting" also
    the one-apart case, and "min" additionally admits legal dummy level
    decreases (the recursive minimum-level rule).
    """
    if mode not in ("preserving", "respecting", "min"):
        raise ValueError(f"unknown mode {mode!r}")
    if t.level is None:
        raise SequenceError("no level assignment present")
    if step[0] == "d":
        if mode != "min":
            return VIOLATION
        x = step[1]
        lx = t.level[x]
        ok = all(t.level[w] <= lx - 1 for w in t.neighbors(x))
        return LEVEL_RESPECTING if ok else VIOLATION
    _, x, y, _z = step
    lx, ly = t.level[x], t.level[y]
    if lx == ly:
        return LEVEL_PRESERVING
    if mode == "preserving" or abs(lx - ly) != 1:
        return VIOLATION
    hi = x if lx > ly else y
    lo_level = min(lx, ly)
    if all(t.level[w] == lo_level for w in t.neighbors(hi)):
        return LEVEL_RESPECTING
    return VIOLATION


def min_level_update(t: Trigraph, step: Step) -> Trigraph:
    """Apply a step under the minimum level assignment: a contraction gives
    the new vertex the smaller level; a d-step decreases by one (validated)."""
    if step[0] == "d":
        t.decrease_level(step[1])
        return t
    _, x, y, z = step
    got = t.contract(x, y)
    if got != z:
        raise SequenceError(f"fresh id mismatch: expected {z}, produced {got}")
    return t


def is_good_assignment(t: Trigraph) -> bool:
    """True iff every (black or red) edge spans at most one level."""
    if t.level is None:
        raise SequenceError("no level assignment present")
    lev = t.level
    for v, bl in t.black.items():
        lv = lev[v]
        for w in bl:
            if abs(lv - lev[w]) > 1:
                return False
        for w in t.red[v]:
            if abs(lv - lev[w]) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def verify_sequence(n: int, edges: Iterable[tuple[int, int]],
                    seq: ContractionSequence,
                    levels: Sequence[int] | None = None,
                    debug_recheck: int = 0) -> WidthReport:
    """Replay a sequence, reporting the exact max red degree after each step.

    Levels are optional; without them ``d`` steps are replayed unchecked.
    With ``debug_recheck=k`` the incremental red-degree maximum is recomputed
    from scratch every k steps to catch drift.
    """
    from .plane_graph import pause_gc
    if seq.n != n:
        raise SequenceError(f"sequence is for n={seq.n}, graph has n={n}")
    with pause_gc():
        return _verify_inner(n, edges, seq, levels, debug_recheck)


def _verify_inner(n, edges, seq, levels, debug_recheck):
    t = Trigraph(n, edges, levels, track_provenance=False)
    # exact running maximum via red-degree counts
    cnt: dict[int, int] = {0: n}
    cur_max = 0
    per_step: list[int] = []
    expected_fresh = n
    for idx, step in enumerate(seq.steps):
        if step[0] == "k":
            _, x, y, z = step
            if z != expected_fresh:
                raise SequenceError(
                    f"step {idx}: fresh id {z} != expected {expected_fresh}")
            expected_fresh += 1
            if x not in t.red or y not in t.red:
                raise SequenceError(f"step {idx}: dead/unknown vertex")
            # only red-incident degrees can change: common black neighbours
            # keep their black edge and their red degree
            affected = {x, y} | t.red[x] | t.red[y]
            old = {w: len(t.red[w]) for w in affected}
            t.contract(x, y)
            for w in t.red[z]:
                if w not in old:
                    affected.add(w)
                    old[w] = len(t.red[w]) - 1  # gained exactly the z edge
            for w in affected:
                cnt[old[w]] -= 1
                if w in t.red:
                    d = len(t.red[w])
                    cnt[d] = cnt.get(d, 0) + 1
                    if d > cur_max:
                        cur_max = d
            dz = len(t.red[z])
            cnt[dz] = cnt.get(dz, 0) + 1
            if dz > cur_max:
                cur_max = dz
            while cur_max and not cnt.get(cur_max):
                cur_max -= 1
        elif step[0] == "d":
            if t.level is not None:
                t.decrease_level(step[1])
            elif step[1] not in t.black:
                raise SequenceError(f"step {idx}: d-step on dead vertex")
        else:
            raise SequenceError(f"step {idx}: unknown step kind {step[0]!r}")
        per_step.append(cur_max)
        if debug_recheck and (idx + 1) % debug_recheck == 0:
            real = t.max_red_degree()
            if real != cur_max:
                raise SequenceError(
                    f"red-degree drift at step {idx}: {cur_max} != {real}")
    width = max(per_step, default=0)
    return WidthReport(width, per_step, seq.is_full())


# ---------------------------------------------------------------------------
# Restriction to an induced subgraph
# ---------------------------------------------------------------------------


def restrict_sequence(seq: ContractionSequence, keep: Iterable[int]
                      ) -> ContractionSequence:
    """Restrict a sequence to the subgraph induced on ``keep``.

    A contraction survives iff both sides still represent at least one kept
    original vertex; the kept originals are renumbered 0..k-1 in sorted
    order and fresh ids follow deterministically.  Dummy steps are dropped.
    """
    keep_sorted = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(keep_sorted)}
    k = len(keep_sorted)
    # per live id: (number of kept originals, restricted id or -1)
    cnt: dict[int, int] = {}
    rid: dict[int, int] = {}
    for v in range(seq.n):
        if v in new_id:
            cnt[v] = 1
            rid[v] = new_id[v]
        else:
            cnt[v] = 0
            rid[v] = -1
    out = ContractionSequence(k)
    fresh = k
    for step in seq.steps:
        if step[0] != "k":
            continue
        _, x, y, z = step
        cx, cy = cnt.pop(x), cnt.pop(y)
        rx, ry = rid.pop(x), rid.pop(y)
        cnt[z] = cx + cy
        if cx > 0 and cy > 0:
            out.steps.append(("k", rx, ry, fresh))
            rid[z] = fresh
            fresh += 1
        else:
            rid[z] = rx if cx > 0 else ry
    return out


# ---------------------------------------------------------------------------
# Sequence text format
# ---------------------------------------------------------------------------


def write_seq(seq: ContractionSequence, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p tww-seq {seq.n} {len(seq.steps)}")
    for step in seq.steps:
        if step[0] == "k":
            lines.append(f"k {step[1]} {step[2]} {step[3]}")
        else:
            lines.append(f"d {step[1]}")
    return "\n".join(lines) + "\n"


def parse_seq(text: str) -> ContractionSequence:
    n = -1
    declared = -1
    steps: list[Step] = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "p":
                if parts[1] != "tww-seq":
                    raise FormatError("expected 'p tww-seq'")
                n, declared = int(parts[2]), int(parts[3])
            elif parts[0] == "k":
                steps.append(("k", int(parts[1]), int(parts[2]), int(parts[3])))
            elif parts[0] == "d":
                steps.append(("d", int(parts[1])))
            else:
                raise FormatError(f"unknown record {parts[0]!r}")
        except (IndexError, ValueError, FormatError) as exc:
            raise FormatError(f"line {ln}: {raw!r}: {exc}") from exc
    if n < 0:
        raise FormatError("missing 'p tww-seq' header")
    if declared != len(steps):
        raise FormatError(f"declared {declared} steps, found {len(steps)}")
    expected = n
    for step in steps:
        if step[0] == "k":
            if step[3] != expected:
                raise FormatError(
                    f"contraction produces {step[3]}, expected fresh id {expected}")
            expected += 1
    return ContractionSequence(n, steps)
