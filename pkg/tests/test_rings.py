"""Coefficient rings, integer matrices, and the sparse eliminator.

Expected values in this file were worked out by hand (small determinants,
base-p digit expansions, elementary divisor chains) so the matrix code is
checked against an independent computation, not against itself.
"""

from fractions import Fraction

import pytest

from mixshuffle import (
    Matrix,
    Ring,
    SparseEliminator,
    base_power_multinomial,
    p_adic_valuation,
)
from mixshuffle.rings import _is_prime, base_p_digits, is_p_adic_unit


# ring arithmetic


def test_rational_ring_basics():
    R = Ring.rationals()
    half = R.of(Fraction(1, 2))
    assert R.add(half, half) == 1
    assert R.mul(half, R.of(4)) == 2
    assert R.inverse(R.of(3)) == Fraction(1, 3)
    assert R.pow_(R.of(2), 10) == 1024
    assert R.is_field


def test_integer_ring_units():
    R = Ring.integers()
    assert R.is_unit(R.of(-1))
    assert R.is_unit(R.of(1))
    assert not R.is_unit(R.of(2))
    assert not R.is_field
    with pytest.raises(Exception):
        R.inverse(R.of(2))


def test_prime_field_coerces_fractions():
    # 1/2 = 3 in F5 because 2 * 3 = 6 = 1
    F5 = Ring.prime_field(5)
    assert F5.of(Fraction(1, 2)) == 3
    assert F5.of(-1) == 4
    assert F5.mul(F5.of(3), F5.of(4)) == 2
    assert F5.inverse(F5.of(2)) == 3


def test_truncated_padic_ring():
    # Z/9: 1/2 = 5 because 2 * 5 = 10 = 1 mod 9
    R = Ring.truncated_padic(3, 2)
    assert R.of(Fraction(1, 2)) == 5
    assert R.of(11) == 2
    assert R.is_unit(R.of(2))
    assert not R.is_unit(R.of(3))
    assert not R.is_field


def test_ring_parse_format_round_trip():
    for R in (Ring.rationals(), Ring.integers(), Ring.prime_field(3),
              Ring.truncated_padic(2, 4)):
        for x in (R.zero, R.one, R.of(-7)):
            assert R.parse(R.format(x)) == x
    Q = Ring.rationals()
    assert Q.parse(Q.format(Fraction(5, 3))) == Fraction(5, 3)
    # and non-integers are rejected where they make no sense
    with pytest.raises(ValueError):
        Ring.integers().of(Fraction(5, 3))


def test_ring_json_round_trip():
    for R in (Ring.rationals(), Ring.integers(), Ring.prime_field(7),
              Ring.truncated_padic(5, 3)):
        assert Ring.from_json(R.to_json()) == R


def test_ring_element_wrapper():
    R = Ring.rationals()
    x = R.elem(Fraction(1, 3))
    y = R.elem(2)
    assert (x + y).value == Fraction(7, 3)
    assert (x * 3).value == 1
    assert (-x).value == Fraction(-1, 3)
    assert (y ** 5).value == 32
    assert (y / x).value == 6


# number-theoretic helpers


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 97}
    for n in range(2, 100):
        expected = all(n % d for d in range(2, n)) and n > 1
        assert _is_prime(n) == expected, n
    assert not _is_prime(1)
    assert not _is_prime(0)
    assert 91 not in primes and not _is_prime(91)


def test_p_adic_valuation():
    assert p_adic_valuation(12, 2) == 2
    assert p_adic_valuation(12, 3) == 1
    assert p_adic_valuation(1, 5) == 0
    assert p_adic_valuation(-8, 2) == 3
    with pytest.raises(Exception):
        p_adic_valuation(0, 2)


def test_p_adic_unit_predicate():
    assert is_p_adic_unit(15, 2)
    assert not is_p_adic_unit(12, 2)
    assert not is_p_adic_unit(0, 3)


def test_base_p_digits_lsb_first():
    assert base_p_digits(11, 2) == [1, 1, 0, 1]
    assert base_p_digits(0, 3) == []
    assert base_p_digits(26, 3) == [2, 2, 2]


def test_base_power_multinomial_hand_values():
    # n = 3 = 11 in base 2: 3!/(1! * 2!) = 3
    assert base_power_multinomial(3, 2) == 3
    # n = 4 = 100: 4!/4! = 1
    assert base_power_multinomial(4, 2) == 1
    # n = 5 = 101: 5!/(1! * 4!) = 5
    assert base_power_multinomial(5, 2) == 5
    # n = 6 = 110: 6!/(2! * 4!) = 15
    assert base_power_multinomial(6, 2) == 15
    # n = 4 = 11 in base 3: 4!/(1! * 3!) = 4
    assert base_power_multinomial(4, 3) == 4


def test_base_power_multinomial_is_p_adic_unit():
    # the leading-coefficient argument needs this for every n
    for p in (2, 3, 5):
        for n in range(1, 33):
            assert is_p_adic_unit(base_power_multinomial(n, p), p), (n, p)


# matrices


def test_matrix_mul_and_apply():
    Z = Ring.integers()
    a = Matrix(Z, [[1, 2], [3, 4]])
    b = Matrix(Z, [[0, 1], [1, 0]])
    assert a.mul(b).rows == [[2, 1], [4, 3]]
    assert a.apply_vector([1, 1]) == [3, 7]
    assert a.transpose().rows == [[1, 3], [2, 4]]
    assert Matrix.identity(Z, 2).mul(a) == a


def test_matrix_from_columns():
    Z = Ring.integers()
    m = Matrix.from_columns(Z, [[1, 2], [3, 4]], nrows=2)
    assert m.rows == [[1, 3], [2, 4]]
    assert m.column(1) == [3, 4]


def test_det_bareiss():
    Z = Ring.integers()
    assert Matrix(Z, [[1, 2], [3, 4]]).det_bareiss() == -2
    assert Matrix(Z, [[2, 0, 1], [1, 1, 0], [0, 3, 1]]).det_bareiss() == 5
    assert Matrix(Z, [[1, 2], [2, 4]]).det_bareiss() == 0
    Q = Ring.rationals()
    d = Matrix(Q, [[Fraction(1, 2), 1], [1, 1]]).det_bareiss()
    assert d == Fraction(-1, 2)


def test_row_reduce_rank_and_kernel():
    Q = Ring.rationals()
    m = Matrix(Q, [[1, 2, 3], [2, 4, 6]])
    rank, pivots, kernel, _ = m.row_reduce()
    assert rank == 1
    assert pivots == (0,)
    assert len(kernel) == 2
    for v in kernel:
        assert m.apply_vector(v) == [0, 0]


def test_row_reduce_requires_field():
    Z = Ring.integers()
    with pytest.raises(ValueError):
        Matrix(Z, [[1]]).row_reduce()


def test_smith_normal_form_divisor_chain():
    Z = Ring.integers()
    a = Matrix(Z, [[2, 4], [6, 8]])
    D, U, V = a.smith_normal_form()
    # det is -8 and the entry gcd is 2, so the divisors must be 2, 4
    assert D == [2, 4]
    assert abs(U.det_bareiss()) == 1
    assert abs(V.det_bareiss()) == 1
    prod = U.mul(a).mul(V)
    assert prod.rows == [[2, 0], [0, 4]]


def test_smith_normal_form_identity_and_rank_deficient():
    Z = Ring.integers()
    D, _, _ = Matrix.identity(Z, 3).smith_normal_form()
    assert D == [1, 1, 1]
    D, U, V = Matrix(Z, [[1, 2], [2, 4], [3, 6]]).smith_normal_form()
    assert D == [1]


def test_solve_over_field():
    Q = Ring.rationals()
    m = Matrix(Q, [[1, 1], [1, -1]])
    x = m.solve([3, 1])
    assert x == [2, 1]
    assert Matrix(Q, [[1, 1], [1, 1]]).solve([0, 1]) is None


def test_solve_over_integers():
    Z = Ring.integers()
    m = Matrix(Z, [[2, 0], [0, 3]])
    assert m.solve([4, 9]) == [2, 3]
    # 2x = 3 has no integer solution
    assert Matrix(Z, [[2]]).solve([3]) is None
    # consistent but non-diagonal
    m = Matrix(Z, [[1, 2], [3, 4]])
    x = m.solve([5, 11])
    assert m.apply_vector(x) == [5, 11]


def test_solve_over_truncated_padics():
    R = Ring.truncated_padic(2, 3)  # Z/8
    m = Matrix(R, [[2]])
    x = m.solve([4])
    assert x is not None and (2 * x[0]) % 8 == 4
    assert m.solve([3]) is None


def test_matrix_json_round_trip():
    for R in (Ring.integers(), Ring.prime_field(3)):
        m = Matrix(R, [[1, 2], [3, 4]])
        assert Matrix.from_json(m.to_json()) == m


# sparse eliminator


def test_eliminator_rank_and_membership():
    Q = Ring.rationals()
    elim = SparseEliminator(Q)
    assert elim.insert({"x": 1, "y": 2})
    assert elim.insert({"y": 1})
    assert not elim.insert({"x": 2, "y": 5})  # dependent on the first two
    assert elim.rank == 2
    assert elim.contains({"x": 7})
    assert not elim.contains({"z": 1})


def test_eliminator_express_reconstructs_combination():
    Q = Ring.rationals()
    elim = SparseEliminator(Q, track=True)
    elim.insert({"x": 1}, tag="a")
    elim.insert({"y": 1}, tag="b")
    combo = elim.express({"x": 2, "y": 3})
    assert combo == {"a": Q.of(2), "b": Q.of(3)}
    assert elim.express({"z": 1}) is None


def test_eliminator_respects_key_order():
    # with the reversed order the second vector reduces against the first
    Q = Ring.rationals()
    elim = SparseEliminator(Q, key_order=lambda k: -k)
    assert elim.insert({1: 1, 2: 1})
    assert elim.insert({1: 1})
    assert elim.rank == 2


def test_eliminator_needs_field():
    with pytest.raises(ValueError):
        SparseEliminator(Ring.integers())
