"""The weighted shuffle product on tensor words.

The recursive product is the implementation under test; the enumeration
oracle builds every interleaving-with-merges directly from subset choices
and never recurses, so the two routes are independent.  Small hand-worked
products are frozen on top of the cross-check.
"""

import itertools
import math
from fractions import Fraction

import pytest

from mixshuffle import (
    FreeAbelian,
    OrderedSet,
    Ring,
    TensorPoly,
    Word,
    empty_word,
    enumerate_words,
    eettl_representative,
    graded_basis,
    length_rescale,
    shuffle_oracle,
    with_weight,
    word_poly,
)


def poly_of(ring, lam, semigroup, names, coeff=1):
    letters = tuple(semigroup.parse(n) for n in names)
    return TensorPoly.from_word(ring, lam, semigroup, Word(letters), coeff)


# hand-worked products


def test_weight_zero_is_plain_shuffle():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = poly_of(Q, 0, f, ["x"])
    sq = x * x
    assert sq.terms == {Word((f.parse("x"), f.parse("x"))): Q.of(2)}


def test_weighted_square_merges():
    # x shuffled with x: two interleavings plus one merged slot
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    lam = Fraction(7, 2)
    x = poly_of(Q, lam, f, ["x"])
    sq = x * x
    xx = Word((f.parse("x"), f.parse("x")))
    merged = Word((f.parse("x") ** 2,))
    assert sq.terms == {xx: Q.of(2), merged: Q.of(lam)}


def test_two_letter_quasi_shuffle():
    Q = Ring.rationals()
    f = FreeAbelian(["x", "y"])
    a = poly_of(Q, 1, f, ["x"])
    b = poly_of(Q, 1, f, ["y"])
    prod = a * b
    x, y = f.parse("x"), f.parse("y")
    assert prod.terms == {Word((x, y)): Q.of(1), Word((y, x)): Q.of(1),
                          Word((x * y,)): Q.of(1)}


def test_divided_power_identity():
    # x^m shuffled with x^n at weight 0 is the binomial times x^(m+n)
    Z = Ring.integers()
    f = FreeAbelian(["x"])
    x = f.parse("x")
    for m in range(1, 5):
        for n in range(1, 5):
            u = TensorPoly.from_word(Z, 0, f, Word((x,) * m))
            v = TensorPoly.from_word(Z, 0, f, Word((x,) * n))
            prod = u * v
            assert prod.terms == {Word((x,) * (m + n)): math.comb(m + n, m)}


def test_unit_and_zero():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = poly_of(Q, 1, f, ["x", "x"])
    one = TensorPoly.unit(Q, 1, f)
    zero = TensorPoly.zero(Q, 1, f)
    assert one * x == x
    assert x * one == x
    assert zero * x == zero
    assert x + zero == x
    assert (x - x).is_zero()


# recursion against the enumeration oracle


def test_recursion_matches_oracle_one_generator():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    for lam in (0, 1, Fraction(5, 3)):
        words = [w for w in enumerate_words(f, 4) if w.length <= 3]
        for u, v in itertools.product(words, repeat=2):
            if u.length + v.length > 5:
                continue
            a = TensorPoly.from_word(Q, lam, f, u)
            b = TensorPoly.from_word(Q, lam, f, v)
            assert a * b == shuffle_oracle(a, b), (u, v, lam)


def test_recursion_matches_oracle_two_generators():
    F3 = Ring.prime_field(3)
    f = FreeAbelian(["x", "y"])
    words = [w for w in enumerate_words(f, 3) if w.length <= 2]
    for lam in (0, 2):
        for u, v in itertools.product(words, repeat=2):
            a = TensorPoly.from_word(F3, lam, f, u)
            b = TensorPoly.from_word(F3, lam, f, v)
            assert a * b == shuffle_oracle(a, b), (u, v, lam)


def test_product_commutes_and_associates():
    Q = Ring.rationals()
    f = FreeAbelian(["x", "y"])
    lam = Fraction(-2)
    a = poly_of(Q, lam, f, ["x"]) + poly_of(Q, lam, f, ["y", "x"], 3)
    b = poly_of(Q, lam, f, ["y"]) - poly_of(Q, lam, f, ["x", "x"], 2)
    c = poly_of(Q, lam, f, ["x", "y"])
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_ordered_set_merges():
    # zero-multiplication alphabet: fine at weight 0, refuses otherwise
    Q = Ring.rationals()
    o = OrderedSet(["a", "b"])
    a0 = poly_of(Q, 0, o, ["a"])
    prod = a0 * a0
    assert prod.terms == {Word((o.parse("a"), o.parse("a"))): Q.of(2)}
    a1 = poly_of(Q, 1, o, ["a"])
    with pytest.raises(ValueError):
        a1 * a1


# structure of the polynomial type


def test_leading_term_is_pro_length_max():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = f.parse("x")
    poly = (TensorPoly.from_word(Q, 0, f, Word((x ** 3,)), 5)
            + TensorPoly.from_word(Q, 0, f, Word((x, x)), 2))
    # length beats degree in the pro-length order
    word, coeff = poly.leading_term()
    assert word == Word((x, x))
    assert coeff == 2
    assert poly.max_degree() == 3


def test_support_sorted_and_coefficient():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = f.parse("x")
    poly = (TensorPoly.from_word(Q, 0, f, Word((x, x)))
            + TensorPoly.from_word(Q, 0, f, Word((x ** 2,)), 4))
    sup = poly.support()
    assert [w.pro_length_key for w in sup] == sorted(
        w.pro_length_key for w in sup)
    assert poly.coefficient(Word((x ** 2,))) == 4
    assert poly.coefficient(Word((x ** 3,))) == 0


def test_scale_and_mixed_ring_guard():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = poly_of(Q, 1, f, ["x"])
    assert x.scale(0).is_zero()
    assert x.scale(Fraction(1, 2)).coefficient(Word((f.parse("x"),))) == Fraction(1, 2)
    other = poly_of(Q, 0, f, ["x"])
    with pytest.raises(ValueError):
        x * other  # weights differ


def test_shuffle_power_matches_iterated_product():
    Q = Ring.rationals()
    f = FreeAbelian(["x", "y"])
    base = poly_of(Q, 1, f, ["x"]) + poly_of(Q, 1, f, ["y"], 2)
    assert base.shuffle_power(0) == TensorPoly.unit(Q, 1, f)
    assert base.shuffle_power(1) == base
    assert base.shuffle_power(2) == base * base
    assert base.shuffle_power(3) == base * base * base


def test_shuffle_power_weight_zero_single_letter():
    Z = Ring.integers()
    f = FreeAbelian(["x"])
    x = poly_of(Z, 0, f, ["x"])
    cube = x.shuffle_power(3)
    assert cube.terms == {Word((f.parse("x"),) * 3): 6}


def test_length_rescale_and_weight_transport():
    # rescaling letters by c turns the weight-lambda product into the
    # weight-c*lambda product
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    c = Fraction(3)
    lam = Fraction(2)
    u = poly_of(Q, c * lam, f, ["x"])
    v = poly_of(Q, c * lam, f, ["x", "x"])
    # rescale(u *_{c lam} v) == rescale(u) *_lam rescale(v): each merge
    # trades one length unit against one weight factor
    left = length_rescale(u * v, c)
    right = (with_weight(length_rescale(u, c), lam)
             * with_weight(length_rescale(v, c), lam))
    assert with_weight(left, lam) == right


def test_graded_basis_dimensions():
    f = FreeAbelian(["x"])
    dims = [graded_basis(f, d).dimension for d in range(7)]
    assert dims == [1, 1, 2, 4, 8, 16, 32]
    f2 = FreeAbelian(["x", "y"])
    dims = [graded_basis(f2, d).dimension for d in range(5)]
    assert dims == [1, 2, 7, 24, 82]
    assert graded_basis(f, 0).basis == (empty_word(),)


def test_eettl_representative():
    F2 = Ring.prime_field(2)
    f = FreeAbelian(["x"])
    x = f.parse("x")
    w = Word((x,))
    rep = eettl_representative(F2, 1, f, w, 2)
    assert rep.terms == {w: F2.one, Word((x ** 2,)): F2.of(-1)}
    with pytest.raises(ValueError):
        # x^2(x)x falls into two Lyndon factors
        eettl_representative(F2, 1, f, Word((x ** 2, x)), 2)
    with pytest.raises(ValueError):
        # multiplicity 3 is not a power of 2
        eettl_representative(F2, 1, f, Word((x, x, x)), 2)


def test_word_poly_and_render():
    Q = Ring.rationals()
    f = FreeAbelian(["x"])
    x = f.parse("x")
    poly = word_poly(Q, 0, f, (x, x), 2) + word_poly(Q, 0, f, (x ** 2,))
    assert poly.render(ascii_mode=True) == "2*x(x)x + x^2"
    assert poly.render() == "2·x⊗x + x²"
    assert TensorPoly.zero(Q, 0, f).render(ascii_mode=True) == "0"
    assert TensorPoly.unit(Q, 0, f).render(ascii_mode=True) == "1"


def test_json_round_trip():
    Q = Ring.rationals()
    f = FreeAbelian(["x", "y"])
    poly = (poly_of(Q, Fraction(1, 2), f, ["x", "y"], Fraction(-3, 4))
            + poly_of(Q, Fraction(1, 2), f, ["x"], 5))
    again = TensorPoly.from_json(poly.to_json())
    assert again == poly
    assert again.lam == poly.lam
    assert again.ring == poly.ring
