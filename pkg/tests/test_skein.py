import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sl2char.algebra import XYZ, MPoly, Rat
from sl2char.errors import InputError
from sl2char.skein import (canonical_form, chebyshev, check_quadratic_tangent, clear_cache, delta,
                           is_irreducible_at, reducible_character, trace_polynomial)
from sl2char.words import Word, parse_word, word_inv, word_mul

from conftest import random_word

X, Y, Z = MPoly.gens(XYZ)
words = st.lists(st.tuples(st.integers(0, 1), st.sampled_from((1, -1))), max_size=12).map(Word)


def _mul(m, n):
    return [[m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]],
            [m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]]]


def _inv(m):
    return [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]]


def _random_sl2(rng):
    p = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    q, r = Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4))
    return [[p, q], [r, (1 + q * r) / p]]


def _product_trace(w, mats):
    m = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    for g, s in w.letters:
        m = _mul(m, mats[g] if s > 0 else _inv(mats[g]))
    return m[0][0] + m[1][1]


# -- examples -----------------------------------------------------------------

def test_commutator():
    assert str(trace_polynomial("abAB")) == "x^2 + y^2 + z^2 - x*y*z - 2"


def test_small_words():
    assert trace_polynomial("") == MPoly.const(XYZ, Rat(2))
    assert trace_polynomial("a") == X
    assert trace_polynomial("B") == Y
    assert trace_polynomial("ab") == Z
    assert trace_polynomial("aa") == X * X - 2
    assert trace_polynomial("aB") == X * Y - Z


def test_delta_examples():
    assert delta("a", "b") == X ** 2 + Y ** 2 + Z ** 2 - X * Y * Z - 4
    assert delta("a", "a") == MPoly.zero(XYZ)


def test_irreducibility_and_reducible_characters():
    assert is_irreducible_at({"x": Rat(0), "y": Rat(0), "z": Rat(0)}, [("a", "b")])
    assert not is_irreducible_at({"x": Rat(2), "y": Rat(2), "z": Rat(2)}, [("a", "b")])
    assert reducible_character(2, 1, "a") == Rat(5, 2)
    assert reducible_character(2, 3, "aB") == Rat(2, 3) + Rat(3, 2)
    assert reducible_character(2, 2, "abAB") == 2


def test_chebyshev():
    t = X
    assert chebyshev(t, 0) == MPoly.const(XYZ, Rat(2))
    assert chebyshev(t, 3) == X ** 3 - X * 3


def test_three_generator_words_rejected():
    with pytest.raises(InputError):
        trace_polynomial(parse_word("abc", ("a", "b", "c")))


def test_canonical_form_is_rotation_invariant():
    w = parse_word("aabAbb")
    rot = parse_word("bAbbaa")
    assert canonical_form(w.letters) == canonical_form(rot.letters)


# -- oracles and properties ---------------------------------------------------------

def test_matches_matrix_products():
    rng = random.Random(7)
    for _ in range(200):
        mats = [_random_sl2(rng), _random_sl2(rng)]
        pt = {"x": mats[0][0][0] + mats[0][1][1], "y": mats[1][0][0] + mats[1][1][1],
              "z": _product_trace(parse_word("ab"), mats)}
        w = random_word(rng, 14)
        assert trace_polynomial(w).evaluate({k: Rat(v) for k, v in pt.items()}) == _product_trace(w, mats)


@given(words, words)
@settings(max_examples=100)
def test_trace_relation(u, v):
    lhs = trace_polynomial(word_mul(u, v)) + trace_polynomial(word_mul(u, word_inv(v)))
    assert lhs == trace_polynomial(u) * trace_polynomial(v)


@given(words, words)
@settings(max_examples=100)
def test_conjugation_and_inverse_invariance(w, c):
    t = trace_polynomial(w)
    assert trace_polynomial(word_mul(word_mul(c, w), word_inv(c))) == t
    assert trace_polynomial(word_inv(w)) == t


def test_quadratic_tangent_examples():
    def psi(w):
        return w.exponent_sum(0) * (w.exponent_sum(0) + 2 * w.exponent_sum(1))
    rng = random.Random(3)
    pairs = [(random_word(rng, 8), random_word(rng, 8)) for _ in range(50)]
    assert check_quadratic_tangent(psi, pairs)
    # a linear function is not quadratic
    assert not check_quadratic_tangent(lambda w: w.exponent_sum(0), [(parse_word("a"), parse_word("a"))])


def test_cache_is_thread_safe():
    clear_cache()
    rng = random.Random(11)
    ws = [random_word(rng, 14) for _ in range(60)]
    expected = {str(w): trace_polynomial(w) for w in ws}
    clear_cache()
    errors = []

    def work(seed):
        order = ws[:]
        random.Random(seed).shuffle(order)
        for w in order:
            if trace_polynomial(w) != expected[str(w)]:
                errors.append(str(w))
    threads = [threading.Thread(target=work, args=(k,)) for k in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
