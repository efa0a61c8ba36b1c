"""Group laws, canonical forms, and a sympy Burau-matrix oracle."""

import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidforge.braid import (Braid, artin_gen, delta, delta_squared,
                              from_text, half_twist_word, perm_to_word,
                              to_text)

N = 4
letters = st.integers(min_value=-(N - 1), max_value=N - 1).filter(lambda k: k != 0)
words = st.lists(letters, max_size=12)


@given(words, words)
def test_multiplication_concatenates_words(u, v):
    assert Braid(N, u) * Braid(N, v) == Braid(N, u + v)


@given(words)
def test_inverse(u):
    b = Braid(N, u)
    assert (b * b.inverse()).is_identity()
    assert (b.inverse() * b).is_identity()


@given(words)
def test_degree_is_exponent_sum(u):
    assert Braid(N, u).degree == sum(1 if k > 0 else -1 for k in u)


@given(words, st.integers(min_value=-3, max_value=3))
def test_power(u, e):
    b = Braid(N, u)
    expect = Braid(N)
    for _ in range(abs(e)):
        expect = expect * (b if e > 0 else b.inverse())
    assert b ** e == expect


@given(words, words)
def test_conjugate(u, v):
    a, g = Braid(N, u), Braid(N, v)
    assert a.conjugate(g) == g.inverse() * a * g


@given(words)
def test_full_twist_is_central(u):
    b = Braid(N, u)
    z = delta_squared(N)
    assert b * z == z * b


def test_braid_relations():
    s = [artin_gen(N, k) for k in range(1, N)]
    assert s[0] * s[1] * s[0] == s[1] * s[0] * s[1]
    assert s[0] * s[2] == s[2] * s[0]


def test_delta_facts():
    for n in (2, 3, 4, 5):
        assert delta(n) ** 2 == delta_squared(n)
        assert delta_squared(n).degree == n * (n - 1)
        assert len(half_twist_word(n)) == n * (n - 1) // 2
        # delta conjugation flips the frame
        for k in range(1, n):
            assert artin_gen(n, k).conjugate(delta(n)) == artin_gen(n, n - k)


def test_permutation():
    b = Braid(3, [1, 2])
    assert b.permutation() == (1, 2, 0)


def test_text_round_trip():
    b = Braid(4, [1, -2, 3, 3, -1])
    assert from_text(4, b.to_text()) == b
    assert to_text([]) == ""


def _nf_word(b: Braid) -> list:
    """Reconstruct a word from the left-greedy normal form."""
    inf, perms = b.normal_form()
    d = half_twist_word(b.n)
    word = []
    if inf >= 0:
        word += list(d) * inf
    else:
        word += [-x for x in reversed(d)] * (-inf)
    for p in perms:
        word += perm_to_word(list(p))
    return word


@given(words)
@settings(max_examples=50)
def test_normal_form_reconstructs_the_braid(u):
    b = Braid(N, u)
    assert Braid(N, _nf_word(b)) == b


def _burau(n: int, word, t):
    m = sympy.eye(n)
    pos = sympy.Matrix([[1 - t, t], [1, 0]])
    neg = pos.inv()
    for k in word:
        blk = sympy.eye(n)
        a = abs(k) - 1
        blk[a:a + 2, a:a + 2] = pos if k > 0 else neg
        m = m * blk
    return sympy.simplify(m)


def test_burau_oracle_for_normal_form_equality(rng):
    """If two words have the same canonical form, their Burau matrices agree."""
    t = sympy.Symbol("t")
    for _ in range(15):
        u = [rng.choice([1, -1]) * rng.randint(1, 3) for _ in range(rng.randint(0, 8))]
        b = Braid(4, u)
        assert _burau(4, u, t) == _burau(4, _nf_word(b), t)


def test_burau_oracle_separates_distinct_braids():
    t = sympy.Symbol("t")
    assert _burau(3, [1], t) != _burau(3, [2], t)
    assert _burau(3, [1, 2], t) != _burau(3, [2, 1], t)
    assert Braid(3, [1, 2]) != Braid(3, [2, 1])


def test_hash_consistent_with_equality():
    a = Braid(3, [1, 2, 1])
    b = Braid(3, [2, 1, 2])
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
