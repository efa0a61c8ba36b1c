"""Doubling (regeneration) of a line-arrangement monodromy factorization.

Each line of the degenerated arrangement splits into a conic; in the typical
fiber every puncture i is replaced by a close pair i, i' (i' to the right).
On braids this doubling is the 2-cabling homomorphism: each strand becomes a
ribbon of two strands, each crossing a block crossing of two ribbons.

Factors of the degenerated factorization regenerate by local rules:

* branch rule:  a degree-1 factor Z_{ij} becomes Z_{ij'} . Z_{i'j};
* node rule:    a degree-2 factor Z^2_{ij} becomes Z^2_{i'j} . Z^2_{ij}
  (fat left end) or Z^2_{ij'} . Z^2_{ij} (fat right end), or the single
  ribbon full twist Z^2_{ii',jj'} when both branches stay smooth;
* cusp rule:    a degree-4 factor Z^4_{ij} becomes the three cusps
  (Z^3_{ij})_{rho} . Z^3_{ij} . (Z^3_{ij})_{rho^-1} with rho = Z_{jj'}.

Composition convention.  Printed factor lists are read RIGHT TO LEFT: the
value of the list [p_1, ..., p_k] is p_k ... p_2 p_1.  All public
Factorizations returned by this module store their factors in composition
order (so Factorization.product() is the plain left-to-right product); the
printed order is the reverse.  A printed conjugation (A)^{B C} means
g.A.g^-1 with g = C.B (same calibration as the local monodromy tables).

Arc conventions (frozen; every choice is pinned by the exact splitting
identities Z^2_{ii',j} = Z^2_{i'j} Z^2_{ij} etc., which the doubled local
models satisfy on the nose -- see the cabling oracle in the tests):

* a split node's longer arc passes the partner member of its own fat end
  below the line, and the unrelated punctures on the decorated side
  (below for plain/underlined symbols, above for barred ones);
* a cusp's base arc ends on the near member of the fat pair;
* the two branch factors Z_{ij'} and Z_{i'j} are the short arc i'->j and
  the long arc i->j' passing i' above and j below; both are conjugated by
  the transported conjugator of the line they regenerate (the printed lists
  drop this common conjugation).
"""

from __future__ import annotations

import re

from .arcs import ABOVE, BELOW, PunctureConfig, arc_from_crossings, simple_arc
from .braid import Braid, artin_gen, delta_squared
from .data import golden_json
from .factorization import Factor, Factorization
from .lefschetz import _block_half_twist


# ---------------------------------------------------------------------------
# 2-cabling


def cable_word(n: int, word) -> list:
    """Image of a braid word of B_n under the 2-cabling into B_2n."""
    out = []
    for g in word:
        k, s = abs(g), (1 if g > 0 else -1)
        w = [2 * k, 2 * k + 1, 2 * k - 1, 2 * k]
        out.extend(w if s > 0 else [-x for x in reversed(w)])
    return out


def cable(b: Braid) -> Braid:
    """The 2-cabling homomorphism B_n -> B_2n (no internal ribbon twist)."""
    return Braid(2 * b.n, cable_word(b.n, b.word))


def cable_factor(f: Factor) -> Factor:
    return Factor(cable(f.twist), f.exponent, f.tag,
                  transport=cable(f.transport), label=f.label)


def partial_cable(b: Braid, widths) -> tuple:
    """Cable only some strands: strand k becomes a ribbon of widths[k-1]
    parallel strands.  Returns (image braid, permuted widths).

    A positive crossing of ribbons of widths (a, b) is the positive block
    crossing; a negative one is the exact inverse of the positive block
    crossing of the swapped widths, so the map is well defined on words.
    """
    w = list(widths)
    if len(w) != b.n:
        raise ValueError("one width per strand required")
    out = []
    for g in b.word:
        k, s = abs(g), (1 if g > 0 else -1)
        a, c = w[k - 1], w[k]
        if s < 0:
            a, c = c, a
        start = sum(w[:k - 1]) + 1
        block = [start + a - 1 + j - i for j in range(c) for i in range(a)]
        out.extend(block if s > 0 else [-x for x in reversed(block)])
        w[k - 1], w[k] = w[k], w[k - 1]
    return Braid(sum(widths), out), w


def doubled_labels(labels) -> list:
    out = []
    for l in labels:
        out.append(str(l))
        out.append(f"{l}'")
    return out


# ---------------------------------------------------------------------------
# ribbon (fat) band twists


def _ends_slots(cfg: PunctureConfig, end) -> list:
    """Contiguous 1-based slots of an end (a label or a pair of labels)."""
    labels = [end] if isinstance(end, str) else list(end)
    slots = sorted(cfg.position(l) + 1 for l in labels)
    if slots != list(range(slots[0], slots[0] + len(slots))):
        raise ValueError(f"end {labels} is not a contiguous block")
    return slots


def _gather_transport(n: int, slots_a, slots_b, side: str) -> Braid:
    """Drag block B leftward until it sits right after block A.

    Every intermediate puncture is crossed on the given side (below gives
    positive elementary letters, as for plain arcs).
    """
    e = 1 if side == BELOW else -1
    word = []
    target = slots_a[-1] + 1
    cur = list(slots_b)
    for i in range(len(cur)):
        frm, to = cur[i], target + i
        for p in range(frm - 1, to - 1, -1):
            word.append(e * p)
    return Braid(n, word)


def _block_delta2(n: int, a: int, k: int) -> Braid:
    """Full twist of the k adjacent strands starting at slot a."""
    if k == 1:
        return Braid(n)
    return _block_half_twist(n, a, a + k - 1) ** 2


def band_full_twist(cfg: PunctureConfig, end_a, end_b, side: str = BELOW) -> Braid:
    """Z^2_{A,B}: full twist of the band joining the two ends.

    The value is the boundary twist of the gathered A u B disk with the
    internal twists of each end removed, transported back so that the
    intermediates are passed on the given side.
    """
    sa, sb = _ends_slots(cfg, end_a), _ends_slots(cfg, end_b)
    if sa[0] > sb[0]:
        sa, sb = sb, sa
    if sa[-1] >= sb[0]:
        raise ValueError("band ends overlap")
    n = cfg.n
    T = _gather_transport(n, sa, sb, side)
    a0, p, q = sa[0], len(sa), len(sb)
    core = (_block_delta2(n, a0, p + q)
            * _block_delta2(n, a0, p).inverse()
            * _block_delta2(n, a0 + p, q).inverse())
    return T * core * T.inverse()


def _pair_rho(cfg: PunctureConfig, label: str) -> Braid:
    """Half twist Z_{ll'} of a close pair (adjacent by construction)."""
    a = _ends_slots(cfg, (label, f"{label}'"))
    return artin_gen(cfg.n, a[0])


def _conj(h: Braid, g: Braid) -> Braid:
    """Value of the printed conjugation: g . h . g^-1."""
    return g * h * g.inverse()


# ---------------------------------------------------------------------------
# regeneration rules as factor lists (printed order; reverse to compose)


def _arc2(cfg: PunctureConfig, a: str, b: str, side: str) -> Braid:
    return simple_arc(cfg, a, b, side=side).realized


def _between(cfg: PunctureConfig, a: str, b: str):
    pa, pb = cfg.position(a), cfg.position(b)
    return [cfg.label_at(i) for i in range(min(pa, pb) + 1, max(pa, pb))]


def _long_arc(cfg: PunctureConfig, a: str, b: str, side: str, partner: str) -> Braid:
    """Arc a->b passing the fat partner below and everything else on `side`."""
    cross = [(p, BELOW if p == partner else side) for p in _between(cfg, a, b)]
    return arc_from_crossings(cfg, a, b, cross).realized


def branch_factors(cfg: PunctureConfig, i: str, j: str, label: str = "") -> list:
    """First rule, printed order: Z_{ij'} . Z_{i'j}.

    The long arc i->j' passes i' above and j below; the short arc i'->j is
    plain.  Any common conjugation is applied by the caller.
    """
    cross = [(p, ABOVE if p == f"{i}'" else BELOW)
             for p in _between(cfg, i, f"{j}'")]
    long_arc = arc_from_crossings(cfg, i, f"{j}'", cross).realized
    short_arc = _arc2(cfg, f"{i}'", j, BELOW)
    return [Factor(long_arc, 1, "branch", label=f"{label}Z1[{i},{j}']"),
            Factor(short_arc, 1, "branch", label=f"{label}Z1[{i}',{j}]")]


def node_factors(cfg: PunctureConfig, end_a, end_b,
                 side: str = BELOW, label: str = "") -> list:
    """Second rule, printed order.

    Z^2_{ii',j} -> Z^2_{i'j} . Z^2_{ij}   (fat left:  short printed first)
    Z^2_{i,jj'} -> Z^2_{ij'} . Z^2_{ij}   (fat right: long printed first)
    A fat-fat twist stays one band factor, a thin-thin twist a plain node.
    """
    fat_a = not isinstance(end_a, str)
    fat_b = not isinstance(end_b, str)
    if fat_a and fat_b:
        tw = band_full_twist(cfg, end_a, end_b, side)
        return [Factor(tw, 1, "composite",
                       label=f"{label}Z2[{end_a[0]}{end_a[1]},{end_b[0]}{end_b[1]}]")]
    if not fat_a and not fat_b:
        return [Factor(_arc2(cfg, end_a, end_b, side), 2, "node",
                       label=f"{label}Z2[{end_a},{end_b}]")]
    if fat_a:
        (i, ip), j = end_a, end_b
        long_tw = _long_arc(cfg, i, j, side, ip)
        short_tw = _arc2(cfg, ip, j, side)
        printed = [Factor(short_tw, 2, "node", label=f"{label}Z2[{ip},{j}]"),
                   Factor(long_tw, 2, "node", label=f"{label}Z2[{i},{j}]")]
    else:
        i, (j, jp) = end_a, end_b
        long_tw = _long_arc(cfg, i, jp, side, j)
        short_tw = _arc2(cfg, i, j, side)
        printed = [Factor(long_tw, 2, "node", label=f"{label}Z2[{i},{jp}]"),
                   Factor(short_tw, 2, "node", label=f"{label}Z2[{i},{j}]")]
    return printed


def cusp_factors(cfg: PunctureConfig, end_a, end_b,
                 side: str = BELOW, label: str = "") -> list:
    """Third rule, printed order:
    (Z^3)_{rho} . Z^3 . (Z^3)_{rho^-1}, rho the fat pair's half twist.

    The base arc joins the thin end to the near member of the fat pair.
    """
    fat_a = not isinstance(end_a, str)
    if fat_a == (not isinstance(end_b, str)):
        raise ValueError("a cusp triple needs exactly one fat end")
    if fat_a:
        pair, single = end_a, end_b
        a, b = pair[1], single          # near member is the right one
    else:
        pair, single = end_b, end_a
        a, b = single, pair[0]          # near member is the left one
    base = _arc2(cfg, a, b, side)
    rho = _pair_rho(cfg, pair[0].rstrip("'"))
    return [Factor(_conj(base, rho), 3, "cusp", label=f"{label}Z3[{a},{b}]_rho"),
            Factor(base, 3, "cusp", label=f"{label}Z3[{a},{b}]"),
            Factor(_conj(base, rho.inverse()), 3, "cusp",
                   label=f"{label}Z3[{a},{b}]_rho-")]


# ---------------------------------------------------------------------------
# rule interface on factors of a base (undoubled) configuration


class DoublingMap:
    """Doubling of a puncture configuration: every i gains a close i'."""

    __slots__ = ("base", "doubled", "stage")

    def __init__(self, base_labels, stage=None):
        self.base = PunctureConfig.reals(base_labels)
        self.doubled = PunctureConfig.reals(doubled_labels(base_labels))
        self.stage = dict(stage or {})
        if self.doubled.n != 2 * self.base.n:
            raise ValueError("doubling must exactly double the punctures")


def _factor_ends(dm: DoublingMap, f: Factor):
    """Base labels of the two punctures a half-twist factor exchanges."""
    perm = list(range(f.twist.n))
    for k in f.twist.word:
        a = abs(k) - 1
        perm[a], perm[a + 1] = perm[a + 1], perm[a]
    moved = [i for i, p in enumerate(perm) if p != i]
    if len(moved) != 2:
        raise ValueError("factor twist is not a half twist of two punctures")
    return dm.base.label_at(moved[0]), dm.base.label_at(moved[1])


def _rule_result(dm: DoublingMap, printed) -> Factorization:
    return Factorization(dm.doubled.n, list(reversed(printed)))


def regen_rule1(f: Factor, dm: DoublingMap) -> Factorization:
    """Branch point: Z_{ij} -> Z_{ij'} . Z_{i'j}."""
    if f.exponent != 1:
        raise ValueError(f"rule 1 needs exponent 1, got {f.exponent}")
    i, j = _factor_ends(dm, f)
    return _rule_result(dm, branch_factors(dm.doubled, i, j))


def regen_rule2(f: Factor, dm: DoublingMap, which: str = "i-side") -> Factorization:
    """Node: one-sided split (2 factors) or both-sides ribbon twist.

    which = "i-side" | "j-side" | "both"; "both" returns the four degree-2
    factors of the fully expanded Z^2_{ii',jj'}.
    """
    if f.exponent != 2:
        raise ValueError(f"rule 2 needs exponent 2, got {f.exponent}")
    i, j = _factor_ends(dm, f)
    ip, jp = f"{i}'", f"{j}'"
    if which == "i-side":
        printed = node_factors(dm.doubled, (i, ip), j)
    elif which == "j-side":
        printed = node_factors(dm.doubled, i, (j, jp))
    elif which == "both":
        printed = (node_factors(dm.doubled, ip, (j, jp))
                   + node_factors(dm.doubled, i, (j, jp)))
    else:
        raise ValueError(f"unknown side {which!r}")
    return _rule_result(dm, printed)


def regen_rule3(f: Factor, dm: DoublingMap) -> Factorization:
    """Tangency: Z^4_{ij} -> (Z^3_{i,jj'} triple), rho = Z_{jj'}."""
    if f.exponent != 4:
        raise ValueError(f"rule 3 needs exponent 4, got {f.exponent}")
    i, j = _factor_ends(dm, f)
    return _rule_result(dm, cusp_factors(dm.doubled, i, (j, f"{j}'")))


# ---------------------------------------------------------------------------
# printed-notation parser for the regenerated vocabulary
#
# Atom:   Z | Zu (below) | Zb (above), optional m (negative), exponent digit,
#         [END,END] with END = "3" | "3'" | "33'" (close pair).
# Factor: ATOM or ATOM^{TOK TOK ...}; TOK is an atom, "rho" or "rho-".

_RATOM = re.compile(r"Z(u|b)?(m)?(\d)\[([^,\]]+),([^,\]]+)\]$")


def _parse_end(tok: str):
    tok = tok.strip()
    m = re.fullmatch(r"(.+)\1'", tok)
    if m:
        return (m.group(1), f"{m.group(1)}'")
    return tok


def _revprod(cfg_n: int, factors) -> Braid:
    """Value of a printed factor list (rightmost factor applied first)."""
    val = Braid(cfg_n)
    for f in reversed(factors):
        val = val * f.braid()
    return val


def parse_regen_atom(cfg: PunctureConfig, text: str):
    """Returns (value braid, exponent, side, end_a, end_b)."""
    m = _RATOM.match(text.strip())
    if not m:
        raise ValueError(f"bad regenerated atom {text!r}")
    side = ABOVE if m.group(1) == "b" else BELOW
    exp = int(m.group(3)) * (-1 if m.group(2) else 1)
    ea, eb = _parse_end(m.group(4)), _parse_end(m.group(5))
    fat_a, fat_b = not isinstance(ea, str), not isinstance(eb, str)
    if abs(exp) == 2 and (fat_a or fat_b):
        # any fat full twist: value is the (reversed) product of its factors
        val = _revprod(cfg.n, node_factors(cfg, ea, eb, side))
        if exp < 0:
            val = val.inverse()
    elif not fat_a and not fat_b:
        val = _arc2(cfg, ea, eb, side) ** exp
    else:
        val = _revprod(cfg.n, atom_factors(cfg, text))
    return val, exp, side, ea, eb


def atom_factors(cfg: PunctureConfig, text: str, label: str = "") -> list:
    """Expand one printed atom into its factor list (printed order)."""
    m = _RATOM.match(text.strip())
    if not m:
        raise ValueError(f"bad regenerated atom {text!r}")
    side = ABOVE if m.group(1) == "b" else BELOW
    exp = int(m.group(3)) * (-1 if m.group(2) else 1)
    ea, eb = _parse_end(m.group(4)), _parse_end(m.group(5))
    fat = not isinstance(ea, str) or not isinstance(eb, str)
    if exp == 1:
        # a single branch factor; the long arc Z_{ij'} passes the partner of
        # its left end above and everything else below
        cross = [(p, ABOVE if p == f"{ea}'" else BELOW)
                 for p in _between(cfg, ea, eb)]
        tw = arc_from_crossings(cfg, ea, eb, cross).realized
        return [Factor(tw, 1, "branch", label=f"{label}{text.strip()}")]
    if exp == 2:
        return node_factors(cfg, ea, eb, side, label)
    if exp == 3 and fat:
        return cusp_factors(cfg, ea, eb, side, label)
    if exp == 3:
        return [Factor(_arc2(cfg, ea, eb, side), 3, "cusp",
                       label=f"{label}{text.strip()}")]
    raise ValueError(f"atom {text!r} cannot stand as a factor")


def _conjugator(cfg: PunctureConfig, tokens, rho: Braid | None) -> Braid:
    """g for a printed ^{B C ...}: the atom values multiplied right to left."""
    g = Braid(cfg.n)
    for tok in tokens:
        if tok in ("rho", "rho-"):
            if rho is None:
                raise ValueError("rho token without a rho braid")
            v = rho if tok == "rho" else rho.inverse()
        else:
            v = parse_regen_atom(cfg, tok)[0]
        g = v * g
    return g


def _conj_factor(f: Factor, g: Braid) -> Factor:
    return Factor(_conj(f.twist, g), f.exponent, f.tag,
                  transport=f.transport * g.inverse(), label=f.label)


def entry_factors(cfg: PunctureConfig, text: str,
                  rho: Braid | None = None, label: str = "") -> list:
    """Expand a printed factor ATOM^{...} (printed order)."""
    text = text.strip()
    if text.startswith("(") and ")^" in text:
        base, conj = text[1:].rsplit(")^", 1)
    elif "^" in text:
        base, conj = text.split("^", 1)
    else:
        base, conj = text, ""
    factors = atom_factors(cfg, base.strip(), label)
    tokens = conj.strip().strip("{}").split()
    if not tokens:
        return factors
    g = _conjugator(cfg, tokens, rho)
    return [_conj_factor(f, g) for f in factors]


def formula_factors(labels, entries, rho_pairs=None,
                    branch_conj=()) -> Factorization:
    """Expand a printed factor list over doubled labels.

    The returned Factorization is in composition order (printed reversed).
    branch_conj, if given, is the printed conjugator applied to every plain
    degree-1 entry (the printed lists omit it).
    """
    cfg = PunctureConfig.reals(labels)
    rho = None
    if rho_pairs:
        rho = Braid(cfg.n)
        for a, b in rho_pairs:
            rho = rho * artin_gen(cfg.n, min(_ends_slots(cfg, (str(a), str(b)))))
    gb = _conjugator(cfg, list(branch_conj), rho) if branch_conj else None
    printed = []
    for e in entries:
        fs = entry_factors(cfg, e, rho)
        if gb is not None and len(fs) == 1 and fs[0].exponent == 1 and "^" not in e:
            fs = [_conj_factor(fs[0], gb)]
        printed.extend(fs)
    return Factorization(cfg.n, list(reversed(printed)))


# ---------------------------------------------------------------------------
# doubled conic monodromy and its full-twist identity


def _golden(name: str) -> dict:
    return golden_json(f"regen/{name}.json")


def conic_monodromy(obj) -> Factorization:
    """F^_1 . (F^_1)^{rho^-1} of a doubled two-branch local model (8 strands).

    Factors come back in composition order (printed order reversed).
    """
    labels = obj["labels"]
    cfg = PunctureConfig.reals(labels)
    rho = Braid(cfg.n)
    for a, b in obj["rho"]:
        rho = rho * artin_gen(cfg.n, min(_ends_slots(cfg, (str(a), str(b)))))
    gb = (_conjugator(cfg, obj["branch_conj"], rho)
          if obj.get("branch_conj") else None)
    f1 = []
    for e in obj["fhat1"]:
        fs = entry_factors(cfg, e, rho)
        if gb is not None and len(fs) == 1 and fs[0].exponent == 1 and "^" not in e:
            fs = [_conj_factor(fs[0], gb)]
        f1.extend(fs)
    ri = rho.inverse()
    f2 = [Factor(_conj(f.twist, ri), f.exponent, f.tag,
                 transport=f.transport * rho,
                 label=f"{f.label}^rho-") for f in f1]
    return Factorization(cfg.n, list(reversed(f1 + f2)))


def conic_identity(obj) -> bool:
    """prod Z^2_{ii'} . product(F^_1 F^_2) == Delta^2 on the doubled strands.

    This is the printed identity Delta^2 = F^_1 F^_2 . prod Z^2_{ii'} read
    right to left (the pair twists commute with each other).
    """
    fz = conic_monodromy(obj)
    cfg = PunctureConfig.reals(obj["labels"])
    tail = Braid(cfg.n)
    for a, b in obj["infinity"]:
        tail = tail * artin_gen(cfg.n, min(_ends_slots(cfg, (str(a), str(b))))) ** 2
    return tail * fz.product() == delta_squared(cfg.n)


def conic_tables() -> dict:
    return {name: _golden(name) for name in ("fhat_a", "fhat_b", "fhat_c")}


# ---------------------------------------------------------------------------
# global regeneration of the arrangement factorization


def _branch_assignment(g) -> dict:
    """Orient each line to one endpoint so every vertex receives three lines.

    Found by augmenting paths (each vertex has six lines; a 3-in orientation
    always exists and is certified by the returned assignment).
    """
    assign: dict[int, int] = {}          # line -> chosen vertex
    count = {v: 0 for v in range(1, 10)}

    def augment(t, seen):
        for v in g.endpoints(t):
            if count[v] < 3:
                assign[t] = v
                count[v] += 1
                return True
        for v in g.endpoints(t):
            for t2, v2 in list(assign.items()):
                if v2 == v and t2 not in seen and augment(t2, seen | {t2}):
                    assign[t] = v
                    return True
        return False

    for t in range(1, g.n_lines + 1):
        if not augment(t, {t}):
            raise ValueError("no balanced line orientation exists")
    lines_of = {v: tuple(sorted(t for t, v2 in assign.items() if v2 == v))
                for v in range(1, 10)}
    assert all(len(ls) == 3 for ls in lines_of.values())
    return lines_of


def _vertex_split(f: Factor, n: int) -> list:
    """A vertex full-twist factor split into 30 transported frame letters."""
    core = f.transport * f.twist * f.transport.inverse()
    inf, perms = core.normal_form()
    support = sorted({i for p in perms for i in range(n) if p[i] != i})
    if (inf != 0 or len(support) != 6
            or support != list(range(support[0], support[0] + 6))
            or core != _block_delta2(n, support[0] + 1, 6)):
        raise ValueError("vertex factor core is not a six-strand block twist")
    a0 = support[0] + 1
    ti = f.transport.inverse()
    out = []
    for _round in range(6):
        for k in range(a0, a0 + 5):
            tw = ti * artin_gen(n, k) * f.transport
            out.append(Factor(tw, 1, "branch", transport=f.transport,
                              label=f"{f.label}|H{k - a0 + 1}"))
    return out


def regenerate(g) -> Factorization:
    """The doubled factorization on 54 strands.

    Parasitic factors are cabled one-for-one (ribbon full twists, degree 8).
    Each vertex full twist is split into thirty frame letters, cabled
    (degree 4 each), and followed by the three deferred pair twists of the
    lines assigned to the vertex, transported through the cabled suffix.
    """
    from .degeneration import phi8, tilde_Cj, tilde_Delta2

    n = g.n_lines
    lines_of = _branch_assignment(g)
    groups = []
    for j in range(1, 10):
        groups.append((j, tilde_Cj(g, j), tilde_Delta2(g, j)))
    # suffix products in the degenerated group, vertex j exclusive
    suffix = {9: Braid(n)}
    for j in range(9, 0, -1):
        _, cj, dj = groups[j - 1]
        s = cj.product() * dj.product() * suffix[j]
        suffix[j - 1] = s
    out = []
    for j, cj, dj in groups:
        for f in cj.factors:
            out.append(cable_factor(f))
        for vf in dj.factors:
            for f in _vertex_split(vf, n):
                out.append(cable_factor(f))
        sc = cable(suffix[j])
        sci = sc.inverse()
        for t in lines_of[j]:
            tw = sc * artin_gen(2 * n, 2 * t - 1) * sci
            out.append(Factor(tw, 2, "node", transport=sci,
                              label=f"V{j}:Z2[{t},{t}']"))
    return Factorization(2 * n, out)


def regen_audit(fz: Factorization) -> dict:
    """Degree bookkeeping of the doubled factorization."""
    parasitic = sum(f.braid().degree for f in fz.factors
                    if f.label.startswith("D"))
    per_vertex = {}
    for f in fz.factors:
        if f.label.startswith("V"):
            v = int(f.label[1:].split(":")[0].split("|")[0])
            per_vertex[v] = per_vertex.get(v, 0) + f.braid().degree
    total = sum(f.braid().degree for f in fz.factors)
    return {"total": total, "parasitic": parasitic, "per_vertex": per_vertex}


# ---------------------------------------------------------------------------
# printed local monodromies of the three worked vertices (diff reporting)


def hv_table(name: str) -> dict:
    return _golden(name)


def hv_paper_factors(obj) -> Factorization:
    """The printed local monodromy of a worked vertex (composition order)."""
    return formula_factors(obj["labels"], obj["entries"], obj.get("rho"),
                           obj.get("branch_conj", ()))


def hv_diff(engine: Factorization, vertex: int, paper: Factorization) -> list:
    """Factor-by-factor comparison report (strings); empty means identical."""
    mine = [f for f in engine.factors if f.label.startswith(f"V{vertex}")]
    out = []
    if len(mine) != len(paper.factors):
        out.append(f"factor count: engine {len(mine)}, printed {len(paper.factors)}")
    dm = sorted(f.braid().degree for f in mine)
    dp = sorted(f.braid().degree for f in paper.factors)
    if dm != dp:
        out.append(f"degree multiset: engine {dm}, printed {dp}")
    for i in range(min(len(mine), len(paper.factors))):
        a, b = mine[i], paper.factors[i]
        if a.braid().degree != b.braid().degree or a.tag != b.tag:
            out.append(f"factor {i + 1}: engine {a.label} "
                       f"(deg {a.braid().degree}, {a.tag}) vs printed {b.label} "
                       f"(deg {b.braid().degree}, {b.tag})")
    return out
