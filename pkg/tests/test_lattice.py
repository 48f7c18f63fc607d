import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwtight.errors import InputError, NonCyclicQuotient
from cwtight.lattice import (
    AbelianGroupPresentation,
    IntegerMatrix,
    QuotientElement,
    cokernel,
    cyclic_quotient,
    hermite_normal_form,
    lattice_gcd,
    lattice_member,
    quotient_coordinates,
    quotient_image,
    smith_normal_form,
    xgcd,
)

import oracles


def matrices(max_rows=5, max_cols=5, lo=-9, hi=9):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


# -- frozen examples ---------------------------------------------------------

def test_xgcd_matches_bezout():
    for a in range(-12, 13):
        for b in range(-12, 13):
            g, x, y = xgcd(a, b)
            assert g == gcd(a, b) and a * x + b * y == g


def test_smith_small_examples():
    assert smith_normal_form([[2, 4], [6, 8]]).D.tolist() == [[2, 0], [0, 4]]
    assert smith_normal_form([[2], [3]]).D.tolist() == [[1], [0]]
    assert smith_normal_form([[0, 0], [0, 0]]).invariant_factors == ()
    assert smith_normal_form([[6, 0], [0, 4]]).invariant_factors == (2, 12)


def test_hermite_small_examples():
    H, U = hermite_normal_form([[2, 3]])
    assert H.tolist() == [[1, 0]]
    assert (IntegerMatrix.from_rows([[2, 3]]) @ U) == H
    H, _ = hermite_normal_form([[4, 6], [0, 2]])
    assert H.tolist() == [[2, 0], [2, 4]]


def test_membership_examples():
    assert lattice_member([[2], [3]], (0, 1)) is None
    assert lattice_member([[2], [3]], (2, 3)).coefficients == (1,)
    assert lattice_member([[1, 0], [0, 1]], (5, -7)).coefficients == (5, -7)
    assert lattice_member([[2, 0], [0, 2]], (1, 0)) is None
    with pytest.raises(InputError):
        lattice_member([[1]], (1, 2))


def test_cokernel_examples():
    assert str(cokernel([[2, 0], [0, 2]])) == "Z/2 + Z/2"
    assert str(cokernel([[2], [3]])) == "Z"
    assert str(cokernel([], ambient_rank=2)) == "Z + Z"
    assert str(cokernel([[1]])) == "0"
    assert cokernel([[4, 0], [0, 6]]).torsion == (2, 12)


def test_quotient_image_examples():
    assert quotient_image([[2], [3]], (1, 0)) == QuotientElement(3)
    assert quotient_image([[2], [3]], (0, 1)) == QuotientElement(-2)
    assert quotient_image([[2], [3]], (2, 3)).is_zero
    assert quotient_image([[2]], (1,)) == QuotientElement(1, 2)
    assert quotient_image([[2], [-3]], (1, 0)) == QuotientElement(3)
    assert quotient_image([[2], [-3]], (0, 1)) == QuotientElement(2)
    assert quotient_image([[2], [-3]], (0, 1), generator_sign=-1) == QuotientElement(-2)
    with pytest.raises(NonCyclicQuotient):
        quotient_image([[2, 0], [0, 2]], (1, 0))


def test_presentation_validation():
    with pytest.raises(InputError):
        AbelianGroupPresentation(0, (4, 2))
    with pytest.raises(InputError):
        AbelianGroupPresentation(0, (1,))
    assert AbelianGroupPresentation(0, (2, 4)).order == 8
    assert AbelianGroupPresentation(1).order is None


def test_quotient_element_arithmetic():
    a = QuotientElement(5, 3)
    assert a.value == 2 and str(a) == "2 mod 3"
    assert (a + QuotientElement(1, 3)).is_zero
    assert (2 * a).value == 1 and (-a).value == 1
    with pytest.raises(InputError):
        a + QuotientElement(1)


def test_matrix_basics():
    a = IntegerMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert a.shape == (2, 3) and a.T.shape == (3, 2)
    assert a @ (1, 0, -1) == (-2, -2)
    assert IntegerMatrix.from_rows([[2, 1], [7, 4]]).det() == 1
    assert a.rank() == 2
    assert lattice_gcd(IntegerMatrix.from_rows([[4, 6], [10, 8]])) == 2


# -- properties --------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(matrices())
def test_smith_decomposition_properties(rows):
    a = IntegerMatrix.from_rows(rows)
    s = smith_normal_form(a)
    assert s.U @ a @ s.V == s.D
    assert s.D.is_diagonal
    assert abs(s.U.det()) == 1 and abs(s.V.det()) == 1
    assert (s.U @ s.U_inv) == IntegerMatrix.identity(a.rows)
    d = s.invariant_factors
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))


@settings(max_examples=80, deadline=None)
@given(matrices(4, 4, -6, 6))
def test_invariant_factors_match_determinantal_divisors(rows):
    assert list(smith_normal_form(rows).invariant_factors) == oracles.invariant_factors(rows)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_hermite_is_column_echelon(rows):
    a = IntegerMatrix.from_rows(rows)
    H, U = hermite_normal_form(a)
    assert a @ U == H
    assert abs(U.det()) == 1
    # each nonzero column starts strictly lower than the previous one
    leads = []
    for c in range(H.cols):
        lead = next((i for i in range(H.rows) if H[i, c]), None)
        if lead is None:
            assert all(H.column(c2) == (0,) * H.rows for c2 in range(c, H.cols))
            break
        assert H[lead, c] > 0
        assert all(0 <= H[lead, c2] < H[lead, c] for c2 in range(c))
        leads.append(lead)
    assert leads == sorted(set(leads))


@settings(max_examples=150, deadline=None)
@given(matrices(3, 3, -5, 5), st.lists(st.integers(-8, 8), min_size=3, max_size=3))
def test_membership_agrees_with_enumeration(rows, target):
    a = IntegerMatrix.from_rows(rows)
    b = tuple(target[: a.rows])
    w = lattice_member(a, b)
    sols = oracles.enumerate_solutions(rows, b, bound=12)
    if w is not None:
        assert a @ w.coefficients == b
    else:
        assert sols == []
    if sols:
        assert w is not None


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4, -5, 5), st.data())
def test_quotient_coordinates_detect_lattice(rows, data):
    a = IntegerMatrix.from_rows(rows)
    v = data.draw(st.lists(st.integers(-6, 6), min_size=a.rows, max_size=a.rows))
    zero = all(c.is_zero for c in quotient_coordinates(a, v))
    assert zero == (lattice_member(a, v) is not None)


@settings(max_examples=100, deadline=None)
@given(matrices(4, 3, -5, 5))
def test_cyclic_quotient_functional(rows):
    a = IntegerMatrix.from_rows(rows)
    try:
        q = cyclic_quotient(a)
    except NonCyclicQuotient:
        assert not cokernel(a).is_cyclic
        return
    group = cokernel(a)
    # kills every relation and hits a generator
    for col in a.columns():
        assert q.image(col).is_zero
    if group.is_trivial:
        return
    vals = [q.image(IntegerMatrix.identity(a.rows).column(i)).value for i in range(a.rows)]
    g = 0
    for v in vals:
        g = gcd(g, v)
    modulus = q.modulus
    assert gcd(g, modulus) == 1 if modulus else g == 1
    assert next(x for x in q.functional if x) > 0


def test_quotient_index_brute_force():
    # finite cokernels: count classes of a box of vectors, compare with the order
    rng = random.Random(3)
    for _ in range(60):
        m = rng.randint(1, 3)
        rows = [[rng.randint(-4, 4) for _ in range(m)] for _ in range(m)]
        d = oracles.det(rows)
        if d == 0 or abs(d) ** m > 5000:
            continue
        group = cokernel(rows)
        assert group.order == abs(d)
        classes = {
            tuple((c.value, c.modulus) for c in quotient_coordinates(rows, v))
            for v in itertools.product(range(abs(d)), repeat=m)
        }
        assert len(classes) == abs(d)
