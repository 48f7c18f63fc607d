import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwtight.complex import (
    ComplexPresentation,
    cell_class,
    codim1_cohomology,
    complex_from_dict,
    dumps_complex,
    loads_complex,
    top_cohomology,
)
from cwtight.errors import InputError
from cwtight.lattice import QuotientElement

import families


def test_single_cell_no_spheres_is_z():
    K = ComplexPresentation.from_lists(3, [[]], spheres=0)
    assert str(top_cohomology(K)) == "Z"
    assert str(codim1_cohomology(K).group) == "0"


def test_projective_plane_like():
    K = ComplexPresentation.from_lists(2, [[2]])
    assert str(top_cohomology(K)) == "Z/2"
    assert codim1_cohomology(K).group.free_rank == 0
    assert codim1_cohomology(K).abelianized_attaching


def test_example_two_cells_one_sphere():
    K = ComplexPresentation.from_lists(2, [[2], [-3]])
    assert str(top_cohomology(K)) == "Z"
    assert cell_class(K, 1) == QuotientElement(3)
    assert cell_class(K, 2) == QuotientElement(2)


def test_codim_one_rank_counts_unused_spheres():
    K = ComplexPresentation.from_lists(4, [[1, 0, 0], [0, 0, 0]])
    assert codim1_cohomology(K).group.free_rank == 2
    assert not codim1_cohomology(K).abelianized_attaching


@pytest.mark.parametrize("bad", [
    lambda: ComplexPresentation.from_lists(1, [[1]]),
    lambda: ComplexPresentation.from_lists(2, []),
    lambda: ComplexPresentation.from_lists(2, [[1, 2], [3]]),
    lambda: ComplexPresentation.from_lists(2, [[1]]).unit(2),
])
def test_invalid_presentations(bad):
    with pytest.raises(InputError):
        bad()


def test_loads_reports_position_and_field():
    with pytest.raises(InputError, match="line 3 column"):
        loads_complex('{\n  "n": 2,\n  "spheres" 1\n}')
    with pytest.raises(InputError, match="'cells'"):
        complex_from_dict({"n": 2, "spheres": 1})
    with pytest.raises(InputError, match="unknown fields"):
        complex_from_dict({"n": 2, "spheres": 0, "cells": [[]], "extra": 1})
    with pytest.raises(InputError, match=r"cells\[1\]"):
        complex_from_dict({"n": 2, "spheres": 1, "cells": [[1], ["x"]]})


def test_dumps_is_canonical():
    K = ComplexPresentation.from_lists(2, [[2], [-3]])
    assert dumps_complex(K) == '{\n  "n": 2,\n  "spheres": 1,\n  "cells": [\n    [2],\n    [-3]\n  ]\n}\n'


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_round_trip(seed):
    K = families.random_complex(random.Random(seed), lo=-10 ** 30, hi=10 ** 30)
    text = dumps_complex(K)
    assert loads_complex(text) == K
    assert dumps_complex(loads_complex(text)) == text


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_euler_characteristic_balance(seed):
    # ranks of H^n and H^{n-1} differ by m - k, like the cellular chain complex
    K = families.random_complex(random.Random(seed))
    top = top_cohomology(K)
    low = codim1_cohomology(K).group
    assert top.free_rank - low.free_rank == K.m - K.k


def test_contractible_cell_class_dies():
    K = ComplexPresentation.from_lists(3, [[1]])
    assert str(top_cohomology(K)) == "0"
    assert cell_class(K, 1).is_zero


@pytest.mark.parametrize("d,expected", [(0, "Z"), (1, "0"), (-5, "Z/5"), (12, "Z/12")])
def test_single_cell_single_sphere(d, expected):
    assert str(top_cohomology(ComplexPresentation.from_lists(4, [[d]]))) == expected


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_relabel_and_reorient_invariance(seed):
    rng = random.Random(seed)
    K = families.random_complex(rng, max_m=4, max_k=3, lo=-4, hi=4)
    rows = K.attach.tolist()
    perm = list(range(K.m))
    rng.shuffle(perm)
    flips = [rng.choice((1, -1)) for _ in range(K.k)]
    L = ComplexPresentation.from_lists(K.n, [[rows[p][j] * flips[j] for j in range(K.k)] for p in perm], spheres=K.k)
    assert top_cohomology(L) == top_cohomology(K)
    rank = K.attach.rank()
    assert rank + codim1_cohomology(K).group.free_rank == K.k
    assert rank + top_cohomology(K).free_rank == K.m
    if top_cohomology(K).is_cyclic:
        for new, old in enumerate(perm, start=1):
            a, b = cell_class(L, new), cell_class(K, old + 1)
            assert a.modulus == b.modulus
            if a.modulus == 0:
                assert abs(a.value) == abs(b.value)
            else:
                assert a.is_zero == b.is_zero
