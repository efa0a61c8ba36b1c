"""The torus-grid line arrangement and its degenerated monodromy factorization.

Nine vertices sit on a 3x3 grid with torus identifications; the 27 lines are
the horizontal, vertical and diagonal edges.  Vertices are numbered
lexicographically; lines are numbered by (larger vertex, smaller vertex)
lexicographically.  Each vertex is a 6-point, each of the 18 triangular planes
meets exactly three others.

The factorization of the full twist on 27 strands (one per line) is computed
from an exact rational realization of the arrangement: the vertices are placed
on a convex curve so that all 225 singular values of the projection (9 vertex
values, 216 crossings of lines disjoint in the arrangement) are distinct and
each singular fiber involves a consecutive block of the current fiber order.
Sweeping the fiber across all singular values yields one conjugated block
twist per singular value, and their product (farthest value first) is exactly
the full twist.  Hurwitz moves then regroup the factors into the standard
order: for each vertex j, first the parasitic blocks D_t of the lines whose
smaller endpoint is j, then the full twist on the six lines through j.
"""

from __future__ import annotations

from fractions import Fraction

from .arcs import BELOW, PunctureConfig, simple_arc
from .braid import Braid, free_reduce, half_twist_word
from .factorization import COMPOSITE_TAG, Factor, Factorization

CHAIN_SIDE = BELOW   # side of the chain arcs embedding a vertex's 6-disk


class DegenGraph:
    """27 lines over 9 six-points, with lex orders and local numerations."""

    __slots__ = ("lines", "planes", "_incident", "_local")

    def __init__(self, lines, planes):
        self.lines = tuple(lines)      # lines[t-1] = (alpha, beta), alpha < beta
        self.planes = tuple(planes)    # triangles as vertex triples
        inc = {v: [] for v in range(1, 10)}
        for t, (a, b) in enumerate(self.lines, start=1):
            inc[a].append(t)
            inc[b].append(t)
        self._incident = {v: tuple(sorted(ls)) for v, ls in inc.items()}
        self._local = {v: {t: k for k, t in enumerate(self._incident[v], start=1)}
                       for v in range(1, 10)}

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def endpoints(self, t: int):
        return self.lines[t - 1]

    def small_vertex(self, t: int) -> int:
        return self.lines[t - 1][0]

    def large_vertex(self, t: int) -> int:
        return self.lines[t - 1][1]

    def incident_lines(self, v: int):
        """The six lines through vertex v, in increasing global order."""
        return self._incident[v]

    def local_map(self, v: int) -> dict:
        """Global index -> local numeration 1..6 at vertex v."""
        return dict(self._local[v])

    def disjoint(self, p: int, t: int) -> bool:
        return not set(self.lines[p - 1]) & set(self.lines[t - 1])

    def to_json(self) -> dict:
        return {"lines": [list(l) for l in self.lines],
                "planes": [list(p) for p in self.planes],
                "local_maps": {str(v): {str(t): k for t, k in self._local[v].items()}
                               for v in range(1, 10)}}


def build_tt() -> DegenGraph:
    """The unique incidence graph of the degenerated torus-product surface."""
    def vnum(r, c):
        return 3 * (r % 3) + (c % 3) + 1

    edges = set()
    for r in range(3):
        for c in range(3):
            for dr, dc in ((0, 1), (1, 0), (1, 1)):
                e = tuple(sorted((vnum(r, c), vnum(r + dr, c + dc))))
                edges.add(e)
    lines = sorted(edges, key=lambda ab: (ab[1], ab[0]))
    planes = []
    for r in range(3):
        for c in range(3):
            planes.append((vnum(r, c), vnum(r, c + 1), vnum(r + 1, c + 1)))
            planes.append((vnum(r, c), vnum(r + 1, c), vnum(r + 1, c + 1)))
    g = DegenGraph(lines, planes)
    assert g.n_lines == 27
    assert all(len(g.incident_lines(v)) == 6 for v in range(1, 10))
    return g


def standard_config(g: DegenGraph) -> PunctureConfig:
    """Typical-fiber punctures: one real point per line, in line order."""
    return PunctureConfig.standard(g.n_lines)


def markers(g: DegenGraph, t: int):
    """Lines j < t through the larger vertex of L_t (the conjugation marks)."""
    beta = g.large_vertex(t)
    return tuple(j for j in g.incident_lines(beta) if j < t and g.large_vertex(j) == beta)


# ---------------------------------------------------------------------------
# exact realization and fiber sweep


def _realization(g: DegenGraph):
    """Vertices on a convex parabola; line t joins its two vertices.

    Returns (slopes, intercepts) of the 27 lines as exact rationals.  The
    abscissas grow fast enough that the slope order (hence the fiber order far
    to the right) coincides with the global line order.
    """
    a = {j: Fraction(4 ** j + j * j) for j in range(1, 10)}
    slope, icept = {}, {}
    for t, (al, be) in enumerate(g.lines, start=1):
        # line through (a_al, a_al^2) and (a_be, a_be^2)
        slope[t] = a[al] + a[be]
        icept[t] = -a[al] * a[be]
    order = sorted(slope, key=lambda t: slope[t])
    if order != list(range(1, g.n_lines + 1)):
        raise ValueError("realization does not induce the global line order")
    return a, slope, icept


def _events(g: DegenGraph):
    """All singular values of the projection, nearest the base point first.

    Each event is (x, kind, payload): a vertex event carries the vertex index,
    a crossing event the disjoint pair (p, t).  The base point lies far to the
    right, so events are swept in decreasing x.
    """
    a, slope, icept = _realization(g)
    events = []
    for j in range(1, 10):
        events.append((a[j], "vertex", j))
    for t in range(1, g.n_lines + 1):
        for p in range(1, t):
            if g.disjoint(p, t):
                x = (icept[t] - icept[p]) / (slope[p] - slope[t])
                events.append((x, "cross", (p, t)))
    xs = [e[0] for e in events]
    if len(set(xs)) != len(xs):
        raise ValueError("degenerate realization: coincident singular values")
    events.sort(key=lambda e: e[0], reverse=True)
    return events


def _sweep(g: DegenGraph):
    """Sweep the fiber across all singular values.

    Maintains the current fiber order and the accumulated conjugating word W.
    Each event contributes the factor W . Delta^2<block> . W^-1, where the
    block is the (consecutive) run of lines meeting at the event; afterwards W
    absorbs the half twist of the block and the block order reverses.

    Returns records (kind, payload, offset, size, W_before) in product order
    (farthest event first); the factor product in this order is the full
    twist.
    """
    n = g.n_lines
    fiber = list(range(1, n + 1))
    W: list[int] = []
    records = []
    for _x, kind, payload in _events(g):
        lines = (list(g.incident_lines(payload)) if kind == "vertex"
                 else list(payload))
        pos = sorted(fiber.index(l) for l in lines)
        a0, k = pos[0], len(pos)
        if pos != list(range(a0, a0 + k)):
            raise ValueError(f"event lines {lines} not consecutive in the fiber")
        records.append((kind, payload, a0, k, list(W)))
        W = W + [l + a0 for l in half_twist_word(k)]
        fiber[a0:a0 + k] = reversed(fiber[a0:a0 + k])
    records.reverse()
    return records


def _record_factor(g: DegenGraph, n: int, kind, payload, a0, k, W) -> Factor:
    """The monodromy factor of one sweep record."""
    conj = Braid(n, W)
    if kind == "cross":
        p, t = payload
        twist = conj * Braid(n, [a0 + 1]) * conj.inverse()
        return Factor(twist, 2, "node", transport=conj.inverse(),
                      label=f"D{t}:{_pair_notation(g, p, t)}")
    lines = g.incident_lines(payload)
    core = Braid(n, [l + a0 for l in half_twist_word(k)]) ** 2
    twist = conj * core * conj.inverse()
    label = f"V{payload}:Delta2<" + ",".join(str(t) for t in lines) + ">"
    return Factor(twist, 1, COMPOSITE_TAG, transport=conj.inverse(), label=label)


def _paper_order(g: DegenGraph):
    """Keys of the 225 factors in the standard regrouped order."""
    keys = []
    for j in range(1, 10):
        for t in range(1, g.n_lines + 1):
            if g.small_vertex(t) == j:
                for p in range(1, t):
                    if g.disjoint(p, t):
                        keys.append(("cross", (p, t)))
        keys.append(("vertex", j))
    return keys


def _build_phi8(g: DegenGraph) -> Factorization:
    """Sweep, then regroup by Hurwitz moves into the standard order."""
    n = g.n_lines
    records = _sweep(g)
    cur = []  # (key, factor word, Factor)
    for kind, payload, a0, k, W in records:
        f = _record_factor(g, n, kind, payload, a0, k, W)
        cur.append(((kind, payload), f))
    out = []
    for key in _paper_order(g):
        idx = next(i for i, (kk, _) in enumerate(cur) if kk == key)
        _, f = cur.pop(idx)
        if idx:
            # pulling a factor left past a prefix conjugates it by the prefix
            prefix: list[int] = []
            for _, h in cur[:idx]:
                prefix.extend(h.braid().word)
            f = f.conjugate(Braid(n, free_reduce(prefix)).inverse())
        out.append(f)
    return Factorization(n, out)


_PHI8_CACHE: dict = {}


def _phi8_cached(g: DegenGraph) -> Factorization:
    key = g.lines
    if key not in _PHI8_CACHE:
        _PHI8_CACHE[key] = _build_phi8(g)
    return _PHI8_CACHE[key]


# ---------------------------------------------------------------------------
# public factorization views


def phi8(g: DegenGraph) -> Factorization:
    """The degenerated factorization: product over vertices of C~_j . D~^2_j."""
    return _phi8_cached(g)


def parasitic_Dt(g: DegenGraph, t: int) -> Factorization:
    """D_t: full twists of L_t with every earlier line disjoint from it."""
    if not 1 <= t <= g.n_lines:
        raise ValueError(f"line index {t} out of range")
    pre = f"D{t}:"
    return Factorization(g.n_lines,
                         [f for f in _phi8_cached(g) if f.label.startswith(pre)])


def tilde_Cj(g: DegenGraph, j: int) -> Factorization:
    """Product of the D_t over lines whose smaller vertex is j."""
    out = Factorization(g.n_lines)
    for t in range(1, g.n_lines + 1):
        if g.small_vertex(t) == j:
            out = out + parasitic_Dt(g, t)
    return out


def tilde_Delta2(g: DegenGraph, j: int) -> Factorization:
    """Full twist on the six punctures of the lines through vertex j."""
    pre = f"V{j}:"
    return Factorization(g.n_lines,
                         [f for f in _phi8_cached(g) if f.label.startswith(pre)])


# ---------------------------------------------------------------------------
# notation


def _marker_text(marks) -> str:
    """(4), (6)(7), (17)-(20): runs of four or more are hyphenated."""
    if not marks:
        return ""
    runs = []
    for m in marks:
        if runs and m == runs[-1][1] + 1:
            runs[-1][1] = m
        else:
            runs.append([m, m])
    out = []
    for lo, hi in runs:
        if hi - lo >= 3:
            out.append(f"({lo})-({hi})")
        else:
            out.extend(f"({m})" for m in range(lo, hi + 1))
    return "".join(out)


def _pair_notation(g: DegenGraph, p: int, t: int) -> str:
    """Notation of one parasitic twist: Zbar2[p,t] with conjugation markers.

    The bar (arc passing the intermediate punctures on the far side) is
    vacuous when p and t are adjacent, and is then omitted, as are markers.
    """
    if t - p == 1:
        return f"Z2[{p},{t}]"
    return f"Zbar2[{p},{t}]" + _marker_text(markers(g, t))


def dt_notation(g: DegenGraph, t: int) -> str:
    """Serialized factor list of D_t, 'Id' when empty."""
    parts = [_pair_notation(g, p, t)
             for p in range(1, t) if g.disjoint(p, t)]
    return " . ".join(parts) if parts else "Id"


# ---------------------------------------------------------------------------
# embeddings and audits


def chain_embed(cfg: PunctureConfig, labels, word, side: str = CHAIN_SIDE) -> Braid:
    """Image of a local braid word under the sub-disk embedding along `labels`.

    The sub-disk is a neighborhood of the chain of arcs joining consecutive
    labels on the given side; local generator k maps to the half-twist of the
    k-th chain arc.
    """
    labels = [str(l) for l in labels]
    bands = [simple_arc(cfg, labels[k], labels[k + 1], side=side).realized.word
             for k in range(len(labels) - 1)]
    out: list[int] = []
    for k in word:
        w = bands[abs(k) - 1]
        out.extend(w if k > 0 else [-x for x in reversed(w)])
    return Braid(cfg.n, out)


def degree_audit(f: Factorization, expected: int) -> dict:
    """Per-factor degree table with block subtotals; pass iff total matches."""
    rows = [(x.label or f"#{i}", x.degree) for i, x in enumerate(f.factors, 1)]
    blocks: dict[str, int] = {}
    for label, d in rows:
        key = label.split(":")[0] or "?"
        blocks[key] = blocks.get(key, 0) + d
    total = sum(d for _, d in rows)
    return {"factors": rows, "blocks": blocks, "total": total,
            "expected": expected, "pass": total == expected}


def check_pair_partition(g: DegenGraph) -> bool:
    """Every line pair is parasitic in exactly one D_t or meets at one vertex."""
    seen = {}
    for t in range(1, 28):
        for p in range(1, t):
            if g.disjoint(p, t):
                seen[(p, t)] = seen.get((p, t), 0) + 1
    meet = {}
    for v in range(1, 10):
        inc = g.incident_lines(v)
        for i, p in enumerate(inc):
            for t in inc[i + 1:]:
                meet[(p, t)] = meet.get((p, t), 0) + 1
    allpairs = {(p, t) for t in range(1, 28) for p in range(1, t)}
    if set(seen) | set(meet) != allpairs or set(seen) & set(meet):
        return False
    return all(c == 1 for c in seen.values()) and all(c == 1 for c in meet.values())
