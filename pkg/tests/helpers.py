"""Shared test helpers: ring shortcuts, brute-force oracles (exact linear
algebra for syzygies, monomial sweeps for membership), and a direct
Groebner-property checker that reduces every S- and G-polynomial."""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from fpdlab import (CoefficientDomain, GroebnerBasis, PolynomialRing,
                    RingPresentation, normal_form_polys)
from fpdlab.groebner import gpolynomial, spolynomial

QQ = CoefficientDomain.QQ()
ZZ = CoefficientDomain.ZZ()


def FF(p):
    return CoefficientDomain.FF(p)


def poly_ring(domain, *variables, order=None):
    from fpdlab import GREVLEX
    return PolynomialRing(domain, tuple(variables), order or GREVLEX)


def presentation(domain, variables, relations=()):
    ambient = poly_ring(domain, *variables)
    return RingPresentation(ambient, [ambient.poly(r) for r in relations])


def monomials_up_to(ring: PolynomialRing, max_degree: int):
    """All monomials of the ambient ring with total degree <= max_degree."""
    n = ring.nvars
    out = []
    for exps in product(range(max_degree + 1), repeat=n):
        if sum(exps) <= max_degree:
            out.append(exps)
    return out


def assert_is_groebner(G: GroebnerBasis):
    """Every S-polynomial (and G-polynomial over ZZ) reduces to zero."""
    basis = G.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spolynomial(basis[i], basis[j])
            assert normal_form_polys(s, G).is_zero, \
                f"S-poly of {basis[i]} and {basis[j]} does not reduce to zero"
            if not G.ambient.domain.is_field:
                g = gpolynomial(basis[i], basis[j])
                if g is not None:
                    assert normal_form_polys(g, G).is_zero, \
                        f"G-poly of {basis[i]} and {basis[j]} does not reduce to zero"


def fraction_nullspace(rows, ncols):
    """Basis of {v : A v = 0} over QQ by Gaussian elimination."""
    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(tuple(v))
    return basis


def brute_linear_syzygies(ring: PolynomialRing, columns, max_degree: int):
    """All syzygies among the columns with entries of degree <= max_degree,
    found by exact linear algebra (independent of any Groebner code).

    `columns` are tuples of polynomials (a free-module element each); the
    result is a list of tuples of polynomials h with sum h_j col_j = 0.
    """
    assert ring.domain.kind == "rationals"
    monos = monomials_up_to(ring, max_degree)
    k = len(columns)
    target_rank = len(columns[0])
    unknowns = k * len(monos)
    row_index = {}
    rows = []

    def row_for(key):
        if key not in row_index:
            row_index[key] = len(rows)
            rows.append([Fraction(0)] * unknowns)
        return row_index[key]

    for j, col in enumerate(columns):
        for mi, m in enumerate(monos):
            var = j * len(monos) + mi
            for t in range(target_rank):
                for cm, cc in col[t].terms:
                    prod_m = tuple(a + b for a, b in zip(m, cm))
                    rows[row_for((t, prod_m))][var] += Fraction(cc)
    out = []
    for v in fraction_nullspace(rows, unknowns):
        hs = []
        for j in range(k):
            coeffs = {}
            for mi, m in enumerate(monos):
                c = v[j * len(monos) + mi]
                if c != 0:
                    coeffs[m] = c
            hs.append(ring.from_dict(coeffs))
        out.append(tuple(hs))
    return out
