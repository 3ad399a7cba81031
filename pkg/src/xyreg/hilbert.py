"""Hilbert series of monomial quotients via the generator-pivot recursion.

The numerator h(t) of the series h(t)/(1-t)^N of R/<m_1..m_k> satisfies

    h(<m_1..m_k>) = h(<m_2..m_k>) - t^deg(m_1) * h(<m_2..m_k> : m_1)

with h(<>) = 1.  The recursion minimalizes at every node, splits
support-disjoint generator groups into factors, and memoizes on the
generator set, which keeps the desk-scale inputs here well in hand.
A graded quotient and its lead-term quotient share a Hilbert series, so
composing buchberger -> lead_ideal -> numerator yields the series of an
arbitrary homogeneous quotient.
"""

from dataclasses import dataclass
from math import comb

from .errors import HomogeneityError
from .groebner import buchberger, lead_ideal


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def poly_sub(a, b):
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    while out and out[-1] == 0:
        out.pop()
    return out


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


@dataclass(frozen=True)
class HilbertData:
    """Series numerator over (1-t)^nvars, as a coefficient tuple by degree."""

    numerator: tuple
    nvars: int

    def series_coefficients(self, upto):
        """Dimensions of the graded pieces in degrees 0..upto."""
        out = []
        n = self.nvars
        for d in range(upto + 1):
            s = 0
            for j, hj in enumerate(self.numerator):
                if j > d:
                    break
                s += hj * comb(n - 1 + d - j, n - 1)
            out.append(s)
        return out

    def __eq__(self, other):
        return (isinstance(other, HilbertData)
                and self.nvars == other.nvars
                and _trim(self.numerator) == _trim(other.numerator))

    def __hash__(self):
        return hash((tuple(_trim(self.numerator)), self.nvars))


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return tuple(out)


def _support(m):
    return frozenset(i for i, e in enumerate(m) if e)


def _components(gens):
    """Group generators into support-disjoint classes."""
    groups = []
    for m in gens:
        sup = _support(m)
        merged = [m]
        rest = []
        for gsup, members in groups:
            if gsup & sup:
                sup |= gsup
                merged += members
            else:
                rest.append((gsup, members))
        groups = rest + [(sup, merged)]
    return [tuple(sorted(members)) for _, members in groups]


def _numerator(gens, memo):
    gens = _minimalize(gens)
    if gens in memo:
        return memo[gens]
    if not gens:
        res = [1]
    elif gens[0] == tuple(0 for _ in gens[0]):
        res = []  # 1 lies in the ideal: the quotient is zero
    elif len(gens) == 1:
        d = sum(gens[0])
        res = [1] + [0] * (d - 1) + [-1]
    else:
        comps = _components(gens)
        if len(comps) > 1:
            res = [1]
            for comp in comps:
                res = poly_mul(res, _numerator(comp, memo))
        else:
            pivot, rest = gens[0], gens[1:]
            colon = tuple(tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in rest)
            shifted = [0] * sum(pivot) + _numerator(colon, memo)
            res = poly_sub(_numerator(rest, memo), shifted)
    res = _trim(res)
    memo[gens] = res
    return res


def hilbert_numerator(monomials, nvars):
    """Numerator of the Hilbert series of R/<monomials> over (1-t)^nvars.

    Redundant generators are tolerated; the result does not depend on the
    generator order.
    """
    gens = tuple(m.as_tuple() if hasattr(m, "as_tuple") else tuple(m) for m in monomials)
    memo = {}
    return HilbertData(tuple(_numerator(gens, memo)), nvars)


def complete_intersection_numerator(degrees):
    """prod (1 - t^d) as a coefficient list."""
    out = [1]
    for d in degrees:
        out = poly_mul(out, [1] + [0] * (d - 1) + [-1])
    return tuple(_trim(out))


def hilbert_series_quotient(gens, order=None, **budget):
    """Hilbert series of R/<gens> for homogeneous generators."""
    gens = [g for g in gens]
    for g in gens:
        if not g.is_homogeneous():
            raise HomogeneityError("Hilbert series requires homogeneous generators")
    live = [g for g in gens if not g.is_zero()]
    nvars = gens[0].table.nvars if gens else 0
    if not live:
        return HilbertData((1,), nvars)
    gb = buchberger(live, order, **budget)
    return hilbert_numerator(lead_ideal(gb), nvars)
