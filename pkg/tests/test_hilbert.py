import itertools
import random

import numpy as np
import pytest

from xyreg.errors import HomogeneityError
from xyreg.fields import PrimeField
from xyreg.hilbert import (HilbertData, complete_intersection_numerator,
                           hilbert_numerator, hilbert_series_quotient)
from xyreg.orders import MonomialOrder
from xyreg.pattern import GenericProduct, selected_entries
from xyreg.poly import Polynomial
from xyreg.ring import Monomial, VariableTable


def M(*exps):
    return Monomial(np.array(exps, dtype=np.int64))


def count_standard_monomials(gens, nvars, degree):
    """Independent oracle: enumerate all monomials of the given degree and
    count those divisible by no generator."""
    count = 0
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        if not any(all(g[k] <= exps[k] for k in range(nvars)) for g in gens):
            count += 1
    return count


def test_numerator_examples():
    assert hilbert_numerator([], 3) == HilbertData((1,), 3)
    assert hilbert_numerator([M(2)], 1) == HilbertData((1, 0, -1), 1)
    assert hilbert_numerator([M(1, 0), M(0, 1)], 2) == HilbertData((1, -2, 1), 2)
    # quotient by <x, y> is the ground field: series 1, 0, 0, ...
    assert hilbert_numerator([M(1, 0), M(0, 1)], 2).series_coefficients(3) == [1, 0, 0, 0]


def test_numerator_tolerates_redundant_generators():
    a = hilbert_numerator([M(1, 0, 0), M(2, 0, 0), M(1, 1, 0)], 3)
    b = hilbert_numerator([M(1, 0, 0)], 3)
    assert a == b


def test_brute_force_agreement():
    rng = random.Random(2024)
    trials = 0
    while trials < 20:
        nvars = rng.randint(2, 5)
        gens = []
        for _ in range(rng.randint(1, 6)):
            degree = rng.randint(1, 4)
            e = [0] * nvars
            for _ in range(degree):
                e[rng.randrange(nvars)] += 1
            gens.append(tuple(e))
        gens = list(set(gens))
        hd = hilbert_numerator([M(*g) for g in gens], nvars)
        expected = [count_standard_monomials(gens, nvars, d) for d in range(7)]
        assert hd.series_coefficients(6) == expected
        trials += 1


def test_pivot_independence():
    gens = [M(2, 1, 0, 0), M(0, 2, 1, 0), M(1, 0, 0, 2), M(0, 1, 1, 1)]
    fwd = hilbert_numerator(gens, 4)
    rev = hilbert_numerator(list(reversed(gens)), 4)
    assert fwd == rev


def test_quotient_series_for_selected_entries():
    gf = PrimeField(32003)
    entries = [p.resort(MonomialOrder.grevlex(8))
               for p in selected_entries(2, field=gf)]
    hd = hilbert_series_quotient(entries)
    assert tuple(hd.numerator) == complete_intersection_numerator([2, 2, 2])
    assert hd.series_coefficients(2) == [1, 8, 33]
    # generator order never matters
    assert hilbert_series_quotient(list(reversed(entries))) == hd


def test_quotient_series_principal():
    gf = PrimeField(32003)
    table = VariableTable.xy(2)
    order = MonomialOrder.grevlex(8)
    x11 = Polynomial.variable(table, gf, order, table.slot("x", 1, 1))
    hd = hilbert_series_quotient([x11])
    assert tuple(hd.numerator) == (1, -1)
    assert hd.nvars == 8


def test_quotient_requires_homogeneous():
    gf = PrimeField(32003)
    table = VariableTable.xy(2)
    order = MonomialOrder.grevlex(8)
    x11 = Polynomial.variable(table, gf, order, table.slot("x", 1, 1))
    one = Polynomial.constant(table, gf, order, 1)
    with pytest.raises(HomogeneityError):
        hilbert_series_quotient([x11 + one])


def test_complete_intersection_numerator():
    assert complete_intersection_numerator([]) == (1,)
    assert complete_intersection_numerator([2, 2]) == (1, 0, -2, 0, 1)
