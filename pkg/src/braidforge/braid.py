"""Exact braid-group arithmetic.

Braids on n strands are words in the Artin generators sigma_1 .. sigma_{n-1},
stored as signed integers (+k / -k).  Equality is decided through the left-greedy
Garside normal form Delta^d . p_1 ... p_m over permutation braids: two words are
equal in B_n iff their normal forms coincide.

Permutation braids are represented as tuples, perm[i] = end position of the
strand starting at position i (0-based).  The product convention is
left-to-right: (a*b) means "do a, then b", so compose(a, b)[i] = b[a[i]].
With this convention sigma_k is the transposition of positions k-1, k, the
starting set of a permutation braid is its descent set and the finishing set is
the descent set of its inverse.
"""

from __future__ import annotations

from functools import lru_cache


Letter = int  # +k or -k for sigma_k^{+-1}, 1 <= k <= n-1
Perm = tuple  # tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation-braid primitives


@lru_cache(maxsize=None)
def identity_perm(n: int) -> Perm:
    return tuple(range(n))


@lru_cache(maxsize=None)
def delta_perm(n: int) -> Perm:
    """The half-twist Delta as a permutation: full reversal."""
    return tuple(range(n - 1, -1, -1))


def compose(a: Perm, b: Perm) -> Perm:
    """a then b."""
    return tuple(b[x] for x in a)


def invert(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def flip(a: Perm) -> Perm:
    """Conjugation by Delta: flip(a) = Delta^-1 a Delta."""
    n = len(a)
    return tuple(n - 1 - a[n - 1 - i] for i in range(n))


def inversions(a: Perm) -> int:
    """Word length of the permutation braid (number of crossings)."""
    n = len(a)
    total = 0
    for i in range(n):
        ai = a[i]
        for j in range(i + 1, n):
            if ai > a[j]:
                total += 1
    return total


def perm_of_word(n: int, word) -> Perm:
    """Underlying permutation of a braid word (signs ignored)."""
    out = list(range(n))
    for k in word:
        i = abs(k) - 1
        out[i], out[i + 1] = out[i + 1], out[i]
    # out as built maps positions through successive swaps applied left-to-right
    # on positions, which is exactly the start->end assignment we want when
    # each letter swaps the *current* occupants of slots i, i+1; invert once.
    return invert(tuple(out))


def perm_to_word(a: Perm) -> list[Letter]:
    """A positive word (1-based letters) realizing the permutation braid."""
    a = list(a)
    n = len(a)
    word: list[Letter] = []
    # bubble-sort a to the identity; recorded swaps spell the word in reverse
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                word.append(i + 1)
                changed = True
    word.reverse()
    return word


def _left_weight_pair(fA, fB) -> bool:
    """Make the adjacent factor pair left-weighted in place; return "changed".

    Factors are mutable [perm, inverse-perm] pairs.  Uses the descent
    characterization: slide sigma_i from the front of B to the back of A while
    i is a descent of B and not a descent of A^-1.  A single bubble pass with
    one-step backtracking finds every slide (each slide only creates new
    opportunities at the neighbouring indices).
    """
    A, Ainv = fA
    B, Binv = fB
    n1 = len(A) - 1
    changed = False
    i = 0
    while i < n1:
        if B[i] > B[i + 1] and Ainv[i] < Ainv[i + 1]:
            # A <- A * sigma_i: swap values i, i+1 of A (slots of Ainv)
            p, q = Ainv[i], Ainv[i + 1]
            Ainv[i], Ainv[i + 1] = q, p
            A[p], A[q] = A[q], A[p]
            # B <- sigma_i^-1 * B: swap arguments i, i+1 of B (values of Binv)
            u, v = B[i], B[i + 1]
            B[i], B[i + 1] = v, u
            Binv[v], Binv[u] = i, i + 1
            changed = True
            if i:
                i -= 1
        else:
            i += 1
    return changed


class _Normalizer:
    """Streaming left-greedy normalizer.

    Maintains Delta^d . f_1 ... f_m with the f_i left-weighted.  A lazy flip
    parity absorbs the Delta^-1 introduced by each negative letter, so negative
    letters cost the same as positive ones: the stored factor s_i represents the
    actual factor flip^parity(s_i), and flip is an automorphism preserving
    left-weightedness, Delta and the identity.  Letters are grouped into
    maximal permutation-braid chunks before entering the factor list.
    """

    def __init__(self, n: int):
        self.n = n
        self.d = 0
        self.parity = 0
        self.factors: list = []  # mutable [perm-list, inverse-list] pairs
        self._id = list(range(n))
        self._delta = list(range(n - 1, -1, -1))
        # chunk accumulator: a permutation braid under construction, in actual
        # (unflipped) coordinates; sign -1 means the accumulated braid appears
        # inverted in the word (a maximal run of negative letters).
        self._acc = None  # [perm, inv] or None
        self._acc_sign = 1

    # -- factor-list maintenance -------------------------------------------

    def _append_perm(self, perm: list, inv: list) -> None:
        """Append a permutation braid on the right and restore normal form."""
        if perm == self._id:
            return
        fs = self.factors
        fs.append([perm, inv])
        j = len(fs) - 2
        while j >= 0 and _left_weight_pair(fs[j], fs[j + 1]):
            j -= 1
        # trim: Deltas surface at the front, identities at the back
        ndrop = 0
        while ndrop < len(fs) and fs[ndrop][0] == self._delta:
            ndrop += 1
        if ndrop:
            del fs[:ndrop]
            self.d += ndrop
        while fs and fs[-1][0] == self._id:
            fs.pop()

    def _flush(self) -> None:
        acc = self._acc
        if acc is None:
            return
        self._acc = None
        if self._acc_sign > 0:
            perm = acc[0]
            inv = acc[1]
        else:
            # P^-1 = Delta^-1 . (Delta P^-1): one Delta^-1 (a parity toggle)
            # plus the left-complement permutation braid, per chunk.
            self.d -= 1
            self.parity ^= 1
            qinv = acc[1]
            perm = [qinv[x] for x in self._delta]  # Delta * P^-1
            inv = list(invert(tuple(perm)))
        if self.parity:
            perm = list(flip(tuple(perm)))
            inv = list(invert(tuple(perm)))
        self._append_perm(perm, inv)

    # -- letter stream ------------------------------------------------------

    def push_letter(self, k: Letter) -> None:
        n = self.n
        i = abs(k) - 1
        acc = self._acc
        if k > 0:
            if acc is not None and self._acc_sign > 0:
                perm, inv = acc
                if inv[i] < inv[i + 1]:
                    # chunk extends on the right: acc * sigma_i
                    p, q = inv[i], inv[i + 1]
                    inv[i], inv[i + 1] = q, p
                    perm[p], perm[q] = perm[q], perm[p]
                    return
            self._flush()
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            self._acc = [perm, list(perm)]
            self._acc_sign = 1
        else:
            if acc is not None and self._acc_sign < 0:
                perm, inv = acc
                if perm[i] < perm[i + 1]:
                    # word suffix ...sigma_a^-1 sigma_i^-1 = (sigma_i ...
                    # sigma_a)^-1: the positive chunk extends on the left.
                    u, v = perm[i], perm[i + 1]
                    perm[i], perm[i + 1] = v, u
                    inv[v], inv[u] = i, i + 1
                    return
            self._flush()
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            self._acc = [perm, list(perm)]
            self._acc_sign = -1

    def push_delta_power(self, e: int) -> None:
        self._flush()
        if e >= 0:
            for _ in range(e):
                self._append_perm(list(self._delta), list(self._delta))
        else:
            self.d += e
            if e % 2:
                self.parity ^= 1

    def result(self):
        self._flush()
        if self.parity:
            facs = tuple(flip(tuple(f[0])) for f in self.factors)
        else:
            facs = tuple(tuple(f[0]) for f in self.factors)
        return self.d, facs


def normal_form_of_word(n: int, word):
    """Left-greedy normal form (inf, permutation factors) of a braid word."""
    nf = _Normalizer(n)
    push = nf.push_letter
    for k in free_reduce(word):
        push(k)
    return nf.result()


def free_reduce(word):
    """Cancel adjacent sigma sigma^-1 pairs (cheap pre-pass)."""
    out: list[Letter] = []
    for k in word:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return out


# ---------------------------------------------------------------------------
# the public Braid value


class Braid:
    """An element of B_n, stored as a word with a cached normal form."""

    __slots__ = ("n", "word", "_nf")

    def __init__(self, n: int, word=()):
        if n < 1:
            raise ValueError(f"strand count must be >= 1, got {n}")
        word = tuple(word)
        for k in word:
            if not (1 <= abs(k) <= n - 1):
                raise ValueError(f"letter {k} out of range for B_{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "_nf", None)

    def __setattr__(self, name, value):
        raise AttributeError("Braid values are immutable")

    # -- group structure ----------------------------------------------------

    def __mul__(self, other: "Braid") -> "Braid":
        if self.n != other.n:
            raise ValueError(f"strand mismatch: B_{self.n} vs B_{other.n}")
        return Braid(self.n, self.word + other.word)

    def inverse(self) -> "Braid":
        return Braid(self.n, tuple(-k for k in reversed(self.word)))

    def __pow__(self, e: int) -> "Braid":
        if e == 0:
            return Braid(self.n)
        base = self if e > 0 else self.inverse()
        return Braid(self.n, base.word * abs(e))

    def conjugate(self, g: "Braid") -> "Braid":
        """g^-1 * self * g (the paper's (self)_g = self^g)."""
        return g.inverse() * self * g

    # -- canonical form -----------------------------------------------------

    def normal_form(self):
        nf = object.__getattribute__(self, "_nf")
        if nf is None:
            nf = normal_form_of_word(self.n, self.word)
            object.__setattr__(self, "_nf", nf)
        return nf

    def __eq__(self, other) -> bool:
        if not isinstance(other, Braid):
            return NotImplemented
        return self.n == other.n and self.normal_form() == other.normal_form()

    def __hash__(self) -> int:
        return hash((self.n, self.normal_form()))

    def is_identity(self) -> bool:
        d, facs = self.normal_form()
        return d == 0 and not facs

    # -- invariants ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Exponent sum of the word (crossing number with signs)."""
        return sum(1 if k > 0 else -1 for k in self.word)

    def permutation(self) -> Perm:
        return perm_of_word(self.n, self.word)

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        return f"Braid({self.n}, {to_text(self.word)!r})"

    def to_text(self) -> str:
        return to_text(self.word)


def to_text(word) -> str:
    """`s3` / `S3` text notation for sigma_3^{+1} / sigma_3^{-1}."""
    return " ".join(f"s{k}" if k > 0 else f"S{-k}" for k in word)


def from_text(n: int, text: str) -> Braid:
    word = []
    for tok in text.split():
        if tok[0] == "s":
            word.append(int(tok[1:]))
        elif tok[0] == "S":
            word.append(-int(tok[1:]))
        else:
            raise ValueError(f"bad braid token {tok!r}")
    return Braid(n, word)


# ---------------------------------------------------------------------------
# standard elements


def artin_gen(n: int, k: int, sign: int = 1) -> Braid:
    """The elementary braid sigma_k^{sign} in B_n."""
    if not (1 <= k <= n - 1):
        raise ValueError(f"generator index {k} out of range for B_{n}")
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    return Braid(n, (k * sign,))


def identity(n: int) -> Braid:
    return Braid(n)


def half_twist_word(n: int) -> list[Letter]:
    """A positive word for Delta_n: (s1)(s2 s1)...(s_{n-1} ... s1)."""
    word: list[Letter] = []
    for k in range(1, n):
        word.extend(range(k, 0, -1))
    return word


def delta(n: int) -> Braid:
    if n < 2:
        raise ValueError("Delta needs n >= 2")
    return Braid(n, half_twist_word(n))


def delta_squared(n: int) -> Braid:
    """The full twist, generator of the center of B_n; degree n(n-1)."""
    if n < 2:
        raise ValueError("full twist needs n >= 2")
    w = half_twist_word(n)
    return Braid(n, tuple(w) * 2)
