"""Free-algebra arithmetic, the deglex word order, and rendering."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymgraph import DEGLEX, Generators, Poly, word, word_cmp
from qsymgraph.freealg import EMPTY_WORD, leading_term, poly_add, poly_mul, scalar_mul

words = st.builds(bytes, st.lists(st.integers(0, 3), max_size=5))
coeffs = st.one_of(
    st.integers(-9, 9).filter(bool),
    st.fractions(min_value=-5, max_value=5, max_denominator=7).filter(bool),
)
polys = st.builds(Poly, st.dictionaries(words, coeffs, max_size=5))


# word order


def test_degree_dominates():
    assert word_cmp(word(0, 1), word(0)) > 0
    assert word_cmp(word(0), word(0, 1)) < 0


def test_ties_break_left_to_right():
    # u11*u22 < u12*u11 because the first letters differ
    assert word_cmp(word(0, 3), word(1, 0)) < 0
    assert word_cmp(word(1, 0), word(0, 3)) > 0
    assert word_cmp(word(1, 0), word(1, 0)) == 0


def test_degree_two_words_on_three_generators_sort_row_major():
    all_words = [word(a, b) for a in range(3) for b in range(3)]
    shuffled = sorted(all_words, key=lambda w: (w[1], w[0]))
    assert sorted(shuffled, key=DEGLEX.key) == all_words


@given(words, words, words, words)
@settings(max_examples=200)
def test_order_is_multiplicative(u, v, a, b):
    if word_cmp(u, v) < 0:
        assert word_cmp(a + u + b, a + v + b) < 0


@given(words)
def test_empty_word_is_minimal(w):
    assert word_cmp(EMPTY_WORD, w) <= 0


# polynomial arithmetic


def test_noncommutative_product_keeps_cross_terms():
    x, y = Poly.gen(0), Poly.gen(1)
    product = (x + y) * (x - y)
    assert product == Poly({
        word(0, 0): 1, word(0, 1): -1, word(1, 0): 1, word(1, 1): -1,
    })


def test_additive_inverse():
    f = Poly({word(0): 2, word(1, 1): Fraction(-1, 3)})
    assert (f + f.scale(-1)).is_zero()
    assert poly_add(f, scalar_mul(-1, f)).is_zero()


def test_unit_laws():
    f = Poly({word(2, 1): 5, EMPTY_WORD: -1})
    assert Poly.one() * f == f
    assert f * Poly.one() == f
    assert poly_mul(f, Poly.zero()).is_zero()


@given(polys, polys, polys)
@settings(max_examples=150, deadline=None)
def test_associativity(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(polys, polys, polys)
@settings(max_examples=150, deadline=None)
def test_distributivity(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (g + h) * f == g * f + h * f


@given(polys)
def test_scalar_exactness(f):
    assert f.scale(Fraction(1, 3)).scale(3) == f


def test_canonical_no_zero_terms():
    f = Poly({word(0): 1}) - Poly({word(0): 1})
    assert f.terms == {}
    assert f == Poly.zero()


# leading terms


def test_leading_term_prefers_longer_word():
    f = Poly({word(0): 1, word(0, 1): 1})
    assert f.leading_term() == (word(0, 1), 1)
    assert leading_term(f) == (word(0, 1), 1)


def test_leading_term_constant_vs_generator():
    f = Poly({EMPTY_WORD: 3, word(3): -2})
    assert f.leading_term() == (word(3), -2)


def test_leading_term_of_row_sum():
    # u(1,1) + u(1,2) + u(1,3) - 1 on a 3x3 generator table
    gens = Generators.full(3)
    f = sum((Poly.gen(gens.index(1, k)) for k in (1, 2, 3)), Poly.zero()) - 1
    assert f.leading_term() == (word(gens.index(1, 3)), 1)


def test_leading_term_of_zero_fails():
    with pytest.raises(ValueError):
        Poly.zero().leading_term()


def test_monic_divides_exactly():
    f = Poly({word(1, 1): -2, word(0): 1})
    m = f.monic()
    assert m.leading_term() == (word(1, 1), 1)
    assert m.coefficient(word(0)) == Fraction(-1, 2)


# generator tables and rendering


def test_generator_table_row_major():
    gens = Generators.full(2)
    assert gens.labels == ((1, 1), (1, 2), (2, 1), (2, 2))
    assert gens.index(2, 1) == 2
    assert gens.gen_name(3) == "u(2,2)"


def test_generator_table_from_alive():
    gens = Generators.from_alive([(1, 1), (0, 0), (2, 2)])
    assert gens.labels == ((1, 1), (2, 2), (3, 3))


def test_render_stable():
    gens = Generators.full(2)
    f = Poly({word(0, 3): 1, word(3, 0): -1})
    assert f.render(gens) == "-u(2,2)*u(1,1) + u(1,1)*u(2,2)"
    g = Poly({EMPTY_WORD: Fraction(-1, 2), word(1): 2})
    assert g.render(gens) == "2*u(1,2) - 1/2"
    assert Poly.zero().render(gens) == "0"
