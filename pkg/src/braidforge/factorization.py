"""Factors and factorizations of braids.

A Factor is a half-twist raised to an Artin exponent r in {1,2,3,4}, tagged
with the singularity type it came from (branch/node/cusp/tangent), or a
composite block (e.g. a full twist Delta^2<...>) with exponent 1.  A
Factorization is an ordered product of factors, multiplied left to right.
"""

from __future__ import annotations

import json

from .braid import Braid, artin_gen, delta_squared, free_reduce, from_text, to_text

SINGULARITY_TAGS = {"branch": 1, "node": 2, "cusp": 3, "tangent": 4}
COMPOSITE_TAG = "composite"


class Factor:
    """twist^exponent with provenance.

    twist is a half-twist stored as (transport word w, position k) with value
    w^-1 . sigma_k . w, so the "is a half-twist" invariant is checkable by one
    normal form.  Composite factors store an arbitrary braid in `twist` with
    exponent 1 and tag "composite".
    """

    __slots__ = ("twist", "exponent", "tag", "transport", "label")

    def __init__(self, twist: Braid, exponent: int, tag: str,
                 transport: Braid | None = None, label: str = ""):
        if tag in SINGULARITY_TAGS:
            if exponent != SINGULARITY_TAGS[tag]:
                raise ValueError(
                    f"tag {tag!r} requires exponent {SINGULARITY_TAGS[tag]}, got {exponent}")
        elif tag != COMPOSITE_TAG:
            raise ValueError(f"unknown provenance tag {tag!r}")
        self.twist = twist
        self.exponent = exponent
        self.tag = tag
        self.transport = transport if transport is not None else Braid(twist.n)
        self.label = label

    @property
    def n(self) -> int:
        return self.twist.n

    def braid(self) -> Braid:
        return self.twist ** self.exponent

    @property
    def degree(self) -> int:
        return self.twist.degree * self.exponent

    def is_half_twist(self) -> bool:
        """Check twist == transport^-1 . sigma_k . transport for some k."""
        if self.twist.degree != 1:
            return False
        # undo the transport; what remains must be one Artin generator
        core = self.transport * self.twist * self.transport.inverse()
        perm = core.permutation()
        moved = [i for i in range(self.n) if perm[i] != i]
        if len(moved) != 2 or moved[1] != moved[0] + 1:
            return False
        return core == artin_gen(self.n, moved[0] + 1)

    def conjugate(self, g: Braid) -> "Factor":
        return Factor(self.twist.conjugate(g), self.exponent, self.tag,
                      transport=self.transport * g, label=self.label)

    def __eq__(self, other):
        if not isinstance(other, Factor):
            return NotImplemented
        return (self.exponent == other.exponent and self.tag == other.tag
                and self.twist == other.twist)

    def __repr__(self):
        return f"Factor({self.label or self.twist.to_text()}, r={self.exponent}, {self.tag})"

    def to_json(self) -> dict:
        out = {"twist": self.twist.to_text(), "exp": self.exponent, "tag": self.tag}
        if self.label:
            out["label"] = self.label
        if self.transport.word:
            out["transport"] = self.transport.to_text()
        return out

    @classmethod
    def from_json(cls, n: int, obj: dict) -> "Factor":
        transport = from_text(n, obj.get("transport", ""))
        return cls(from_text(n, obj["twist"]), obj["exp"], obj["tag"],
                   transport=transport, label=obj.get("label", ""))


class Factorization:
    __slots__ = ("strands", "factors")

    def __init__(self, strands: int, factors=()):
        factors = tuple(factors)
        for f in factors:
            if f.n != strands:
                raise ValueError(
                    f"factor on {f.n} strands in a B_{strands} factorization")
        self.strands = strands
        self.factors = factors

    def __len__(self):
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __getitem__(self, i):
        return self.factors[i]

    def __add__(self, other: "Factorization") -> "Factorization":
        if self.strands != other.strands:
            raise ValueError("strand mismatch")
        return Factorization(self.strands, self.factors + other.factors)

    @property
    def degree(self) -> int:
        return sum(f.degree for f in self.factors)

    def word(self):
        w: list[int] = []
        for f in self.factors:
            fw = f.twist.word
            for _ in range(f.exponent):
                w.extend(fw)
        return free_reduce(w)

    def product(self) -> Braid:
        """Left-to-right product of the factors."""
        return Braid(self.strands, self.word())

    def conjugate(self, g: Braid) -> "Factorization":
        if g.n != self.strands:
            raise ValueError("strand mismatch")
        return Factorization(self.strands, [f.conjugate(g) for f in self.factors])

    def __eq__(self, other):
        if not isinstance(other, Factorization):
            return NotImplemented
        return (self.strands == other.strands and len(self) == len(other)
                and all(a == b for a, b in zip(self.factors, other.factors)))

    def __repr__(self):
        return f"Factorization(B_{self.strands}, {len(self.factors)} factors, deg {self.degree})"

    def labels(self):
        return [f.label for f in self.factors]

    def to_json(self) -> dict:
        return {"strands": self.strands,
                "factors": [f.to_json() for f in self.factors]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, obj: dict) -> "Factorization":
        n = obj["strands"]
        return cls(n, [Factor.from_json(n, f) for f in obj["factors"]])

    @classmethod
    def loads(cls, text: str) -> "Factorization":
        return cls.from_json(json.loads(text))


def product(f: Factorization) -> Braid:
    return f.product()


def hurwitz_move(f: Factorization, i: int, direction: str = "right") -> Factorization:
    """Elementary Hurwitz move at position i (1-based pair index).

    right: (..., a, b, ...) -> (..., b, b^-1 a b, ...)
    left:  (..., a, b, ...) -> (..., a b a^-1, a, ...)
    Both preserve the product.
    """
    if not (1 <= i < len(f) + 1) or i >= len(f):
        raise ValueError(f"move position {i} out of range for {len(f)} factors")
    fs = list(f.factors)
    a, b = fs[i - 1], fs[i]
    if direction == "right":
        fs[i - 1], fs[i] = b, a.conjugate(b.braid())
    elif direction == "left":
        fs[i - 1], fs[i] = b.conjugate(a.braid().inverse()), a
    else:
        raise ValueError("direction must be left or right")
    return Factorization(f.strands, fs)


def conjugate_factorization(f: Factorization, g: Braid) -> Factorization:
    return f.conjugate(g)


def conj_factorization(f: Factorization) -> Factorization:
    """Complex conjugation: mirror every arc and reverse the factor order.

    Mirroring the plane through the real axis sends a half twist along an
    arc to the (still positive) half twist along the mirrored arc; on words
    this is braid reversal (read the twist word backwards, same signs).
    Reversal is an anti-automorphism fixing the full twist, so the result is
    again a factorization of Delta^2_n.
    """
    out = []
    for fac in reversed(f.factors):
        tw = Braid(fac.n, list(reversed(fac.twist.word)))
        tr = Braid(fac.n, [-x for x in fac.transport.word])
        out.append(Factor(tw, fac.exponent, fac.tag, transport=tr,
                          label=f"~{fac.label}" if fac.label else ""))
    return Factorization(f.strands, out)


def frame_factorization(n: int) -> Factorization:
    """Delta^2_n written as n(n-1) frame half-twist factors."""
    factors = []
    for _ in range(n):
        for k in range(1, n):
            factors.append(Factor(artin_gen(n, k), 1, "branch", label=f"H{k}"))
    fz = Factorization(n, factors)
    assert fz.product() == delta_squared(n)
    return fz
