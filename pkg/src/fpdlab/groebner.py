"""Groebner engines and the ideal operations built on them.

One engine handles both rings and free modules: a term is keyed by
(position, monomial) under the position-over-term extension of the ring
order (lower position index dominates).  Over fields this is Buchberger
with normal (degree) selection and Gebauer-Moeller pair elimination; over
the integers it is the strong-basis completion with S- and G-polynomials
and Euclidean coefficient reduction.  Syzygies and membership certificates
come from the same engine run on generators tagged in an extended free
module, where the tag block sits below every original position.
"""
from __future__ import annotations

import heapq
from typing import Optional, Sequence

from .errors import (Budget, ResourceBudgetExceeded, StructuralError,
                     UnsupportedDomainError, ensure_budget)
from .rings import (GREVLEX, IdealPresentation, Polynomial, PolynomialRing,
                    RingPresentation, block_order, mono_degree, mono_div,
                    mono_divides, mono_lcm, mono_mul, mono_one)

REDUCED_FIELD = "reduced_field"
STRONG_INTEGER = "strong_integer"


def _xgcd(a: int, b: int):
    """(g, s, t) with g = gcd(a, b) > 0 and s*a + t*b = g."""
    s, next_s = 1, 0
    t, next_t = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        s, next_s = next_s, s - q * next_s
        t, next_t = next_t, t - q * next_t
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, s, t = -g, -s, -t
    return g, s, t


# ---------------------------------------------------------------------------
# Vector terms: Vec = {(position, monomial): coefficient}

def _term_key(ring: PolynomialRing):
    okey = ring.order.key
    return lambda k: (-k[0], okey(k[1]))


def poly_to_vec(p: Polynomial, position: int = 0) -> dict:
    return {(position, m): c for m, c in p.terms}


def polys_to_vec(entries: Sequence) -> dict:
    """A free-module element given as a tuple of polynomials, one per position."""
    vec = {}
    for pos, p in enumerate(entries):
        for m, c in p.terms:
            vec[(pos, m)] = c
    return vec


def vec_to_poly(vec: dict, ring: PolynomialRing) -> Polynomial:
    return ring.from_dict({m: c for (_, m), c in vec.items()})


def vec_to_polys(vec: dict, rank: int, ring: PolynomialRing) -> tuple:
    split = [dict() for _ in range(rank)]
    for (pos, m), c in vec.items():
        split[pos][m] = c
    return tuple(ring.from_dict(d) for d in split)


class VecBasis:
    """A list of vectors with cached leading data, normalized for reduction.

    Over fields every vector is monic; over ZZ leading coefficients are
    positive.  Zero vectors are dropped.
    """

    def __init__(self, vecs: Sequence, ring: PolynomialRing):
        tkey = _term_key(ring)
        dom = ring.domain
        self.ring = ring
        self.vecs = []
        self.lts = []
        self.lcs = []
        for v in vecs:
            if not v:
                continue
            lt = max(v, key=tkey)
            c = v[lt]
            u = dom.lc_normalizer(c)
            if u != dom.one():
                v = {k: dom.mul(u, cc) for k, cc in v.items()}
            self.append(v, lt)

    def append(self, v: dict, lt=None):
        if lt is None:
            lt = max(v, key=_term_key(self.ring))
        self.vecs.append(v)
        self.lts.append(lt)
        self.lcs.append(v[lt])

    def __len__(self):
        return len(self.vecs)


def vec_normal_form(v: dict, basis: VecBasis, budget: Budget) -> dict:
    """Full (tail-including) normal form of v against the basis vectors.

    Over ZZ a term c*m is reducible by a leading term a*u (a > 0) when u
    divides m and floor(c / a) is nonzero; the remainder coefficient lands
    in [0, a).  Reducers are tried in basis order, which makes the result
    deterministic.
    """
    ring = basis.ring
    dom = ring.domain
    field = dom.is_field
    tkey = _term_key(ring)
    vecs, lts, lcs = basis.vecs, basis.lts, basis.lcs
    n = len(vecs)
    work = dict(v)
    rem = {}
    while work:
        k = max(work, key=tkey)
        c = work.pop(k)
        pos, m = k
        reduced = False
        for j in range(n):
            bpos, bm = lts[j]
            if bpos != pos:
                continue
            q = mono_div(m, bm)
            if q is None:
                continue
            budget.tick()
            if field:
                # basis vector is monic: subtract c * x^q * vecs[j]
                lt_j = lts[j]
                for bk, bc in vecs[j].items():
                    if bk == lt_j:
                        continue
                    kk = (bk[0], mono_mul(bk[1], q))
                    nc = dom.sub(work.get(kk, dom.zero()), dom.mul(c, bc))
                    if nc == dom.zero():
                        work.pop(kk, None)
                    else:
                        work[kk] = nc
                reduced = True
                break
            a = lcs[j]
            qq = c // a
            if qq == 0:
                continue
            r = c - qq * a
            lt_j = lts[j]
            for bk, bc in vecs[j].items():
                if bk == lt_j:
                    continue
                kk = (bk[0], mono_mul(bk[1], q))
                nc = work.get(kk, 0) - qq * bc
                if nc:
                    work[kk] = nc
                else:
                    work.pop(kk, None)
            if r:
                work[k] = r
            reduced = True
            break
        if not reduced:
            rem[k] = c
    return rem


def _shift(vec: dict, q, scale, dom) -> dict:
    return {(p, mono_mul(m, q)): dom.mul(scale, c) for (p, m), c in vec.items()}


def _vec_sub(a: dict, b: dict, dom) -> dict:
    out = dict(a)
    for k, c in b.items():
        nc = dom.sub(out.get(k, dom.zero()), c)
        if nc == dom.zero():
            out.pop(k, None)
        else:
            out[k] = nc
    return out


def _vec_add(a: dict, b: dict, dom) -> dict:
    out = dict(a)
    for k, c in b.items():
        nc = dom.add(out.get(k, dom.zero()), c)
        if nc == dom.zero():
            out.pop(k, None)
        else:
            out[k] = nc
    return out


# ---------------------------------------------------------------------------
# Completion over fields

def _groebner_field(vecs: Sequence, ring: PolynomialRing, budget: Budget,
                    rank1: bool) -> VecBasis:
    dom = ring.domain
    okey = ring.order.key
    basis = VecBasis([], ring)
    pairs = set()
    heap = []

    def push_pairs(fidx: int):
        fpos, fm = basis.lts[fidx]
        # chain criterion: drop old pairs whose lcm the new lead strictly refines
        dead = []
        for (i, j) in pairs:
            ipos, im = basis.lts[i]
            _, jm = basis.lts[j]
            if ipos != fpos:
                continue
            lij = mono_lcm(im, jm)
            if (mono_divides(fm, lij)
                    and mono_lcm(im, fm) != lij and mono_lcm(jm, fm) != lij):
                dead.append((i, j))
        pairs.difference_update(dead)
        # group candidate pairs by lcm, keep minimal lcms, one pair per class
        cand = {}
        for i in range(fidx):
            ipos, im = basis.lts[i]
            if ipos != fpos:
                continue
            cand.setdefault(mono_lcm(im, fm), []).append(i)
        kept = []
        for lcm_m in sorted(cand, key=okey):
            if any(mono_divides(prev, lcm_m) for prev in kept):
                continue
            kept.append(lcm_m)
            if rank1 and any(mono_lcm(basis.lts[i][1], fm)
                             == mono_mul(basis.lts[i][1], fm)
                             for i in cand[lcm_m]):
                continue  # a coprime pair in the class settles the whole class
            i = min(cand[lcm_m])
            pairs.add((i, fidx))
            heapq.heappush(heap, (mono_degree(lcm_m), fpos, okey(lcm_m), i, fidx))

    def insert(v: dict):
        tkey = _term_key(ring)
        lt = max(v, key=tkey)
        c = v[lt]
        if c != dom.one():
            inv = dom.inv(c)
            v = {k: dom.mul(inv, cc) for k, cc in v.items()}
        basis.append(v, lt)
        push_pairs(len(basis) - 1)

    for v in vecs:
        if v:
            r = vec_normal_form(v, basis, budget)
            if r:
                insert(r)

    while heap:
        _, _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        budget.tick(1, len(basis), len(heap))
        (pos, u), (_, v) = basis.lts[i], basis.lts[j]
        w = mono_lcm(u, v)
        s = _vec_sub(_shift(basis.vecs[i], mono_div(w, u), dom.one(), dom),
                     _shift(basis.vecs[j], mono_div(w, v), dom.one(), dom), dom)
        try:
            r = vec_normal_form(s, basis, budget)
        except ResourceBudgetExceeded as exc:
            raise ResourceBudgetExceeded(exc.reason, exc.steps,
                                         len(basis), len(heap)) from exc
        if r:
            insert(r)
    return basis


# ---------------------------------------------------------------------------
# Completion over the integers (strong bases)

def _groebner_integer(vecs: Sequence, ring: PolynomialRing, budget: Budget) -> VecBasis:
    okey = ring.order.key
    basis = VecBasis([], ring)
    heap = []

    def push_pairs(fidx: int):
        fpos, fm = basis.lts[fidx]
        a = basis.lcs[fidx]
        for i in range(fidx):
            ipos, im = basis.lts[i]
            if ipos != fpos:
                continue
            b = basis.lcs[i]
            w = mono_lcm(im, fm)
            heapq.heappush(heap, (mono_degree(w), fpos, okey(w), i, fidx, 0))
            if a % b != 0 and b % a != 0:
                heapq.heappush(heap, (mono_degree(w), fpos, okey(w), i, fidx, 1))

    def insert(v: dict):
        lt = max(v, key=_term_key(ring))
        if v[lt] < 0:
            v = {k: -c for k, c in v.items()}
        basis.append(v, lt)
        push_pairs(len(basis) - 1)

    dom = ring.domain
    for v in vecs:
        if v:
            r = vec_normal_form(v, basis, budget)
            if r:
                insert(r)

    while heap:
        _, _, _, i, j, kind = heapq.heappop(heap)
        budget.tick(1, len(basis), len(heap))
        (pos, u), (_, v) = basis.lts[i], basis.lts[j]
        a, b = basis.lcs[i], basis.lcs[j]
        w = mono_lcm(u, v)
        qi, qj = mono_div(w, u), mono_div(w, v)
        if kind == 0:
            l = a * b // _xgcd(a, b)[0]
            s = _vec_sub(_shift(basis.vecs[i], qi, l // a, dom),
                         _shift(basis.vecs[j], qj, l // b, dom), dom)
        else:
            _, si, tj = _xgcd(a, b)
            s = _vec_add(_shift(basis.vecs[i], qi, si, dom),
                         _shift(basis.vecs[j], qj, tj, dom), dom)
        try:
            r = vec_normal_form(s, basis, budget)
        except ResourceBudgetExceeded as exc:
            raise ResourceBudgetExceeded(exc.reason, exc.steps,
                                         len(basis), len(heap)) from exc
        if r:
            insert(r)
    return basis


# ---------------------------------------------------------------------------
# Minimalization, tail interreduction, canonical form

def _minimalize(basis: VecBasis, ring: PolynomialRing) -> list:
    field = ring.domain.is_field
    tkey = _term_key(ring)
    idx = sorted(range(len(basis)),
                 key=lambda i: (tkey(basis.lts[i]), abs(basis.lcs[i])
                                if not field else 0))
    kept = []
    for i in idx:
        pos, m = basis.lts[i]
        a = basis.lcs[i]
        dominated = False
        for j in kept:
            jpos, jm = basis.lts[j]
            if jpos == pos and mono_divides(jm, m) and (field or a % basis.lcs[j] == 0):
                dominated = True
                break
        if not dominated:
            kept.append(i)
    return [basis.vecs[i] for i in kept]


def _interreduce(vecs: list, ring: PolynomialRing, budget: Budget) -> list:
    """Tail-reduce every element against the others until stable.

    Leading terms are never touched, so the Groebner property is preserved.
    """
    tkey = _term_key(ring)
    vecs = [dict(v) for v in vecs]
    guard = 0
    changed = True
    while changed:
        changed = False
        guard += 1
        if guard > 200:
            raise ResourceBudgetExceeded("interreduction failed to stabilize",
                                         budget.steps, len(vecs))
        for i in range(len(vecs)):
            lt = max(vecs[i], key=tkey)
            tail = {k: c for k, c in vecs[i].items() if k != lt}
            if not tail:
                continue
            others = VecBasis([], ring)
            for j, w in enumerate(vecs):
                if j != i:
                    others.append(dict(w))
            r = vec_normal_form(tail, others, budget)
            new = {lt: vecs[i][lt]}
            new.update(r)
            if new != vecs[i]:
                vecs[i] = new
                changed = True
    return vecs


def vec_groebner(vecs: Sequence, ring: PolynomialRing, budget: Budget,
                 rank1: bool = False) -> list:
    """Canonical Groebner basis of the submodule generated by `vecs`."""
    if ring.domain.is_field:
        basis = _groebner_field(vecs, ring, budget, rank1)
    else:
        if ring.domain.kind != "integers":
            raise UnsupportedDomainError(f"no engine for domain {ring.domain}")
        basis = _groebner_integer(vecs, ring, budget)
    reduced = _interreduce(_minimalize(basis, ring), ring, budget)
    tkey = _term_key(ring)
    reduced.sort(key=lambda v: tkey(max(v, key=tkey)))
    return reduced


# ---------------------------------------------------------------------------
# Syzygies and membership lifts via a tagged extended module

def _tagged(vecs: Sequence, rank: int, ring: PolynomialRing) -> list:
    one = mono_one(ring.nvars)
    out = []
    for j, v in enumerate(vecs):
        ev = dict(v)
        ev[(rank + j, one)] = ring.domain.one()
        out.append(ev)
    return out


def vec_syzygies(vecs: Sequence, rank: int, ring: PolynomialRing,
                 budget: Budget) -> list:
    """Generators of {h : sum h_j vecs[j] = 0} as vectors over len(vecs) slots."""
    G = vec_groebner(_tagged(vecs, rank, ring), ring, budget)
    syz = []
    for g in G:
        if all(pos >= rank for pos, _ in g):
            syz.append({(pos - rank, m): c for (pos, m), c in g.items()})
    return syz


def vec_lift(target: dict, vecs: Sequence, rank: int, ring: PolynomialRing,
             budget: Budget) -> Optional[list]:
    """Polynomials h with target = sum h_j vecs[j], or None if no member."""
    G = vec_groebner(_tagged(vecs, rank, ring), ring, budget)
    r = vec_normal_form(target, VecBasis(G, ring), budget)
    if any(pos < rank for pos, _ in r):
        return None
    dom = ring.domain
    cof = [dict() for _ in vecs]
    for (pos, m), c in r.items():
        cof[pos - rank][m] = dom.neg(c)
    return [ring.from_dict(d) for d in cof]


# ---------------------------------------------------------------------------
# Polynomial-level Groebner bases

class GroebnerBasis:
    """A canonical Groebner basis: reduced monic over fields, normalized
    strong basis (positive leading coefficients, reduced tails) over ZZ.

    Immutable; reduction caches fill lazily and idempotently.
    """

    def __init__(self, ambient: PolynomialRing, basis: Sequence, kind: str,
                 ideal: Optional[IdealPresentation] = None):
        self.ambient = ambient
        self.order = ambient.order
        self.basis = tuple(basis)
        self.kind = kind
        self.ideal = ideal
        self._vec_basis = None

    def vec_basis(self) -> VecBasis:
        if self._vec_basis is None:
            self._vec_basis = VecBasis([poly_to_vec(p) for p in self.basis],
                                       self.ambient)
        return self._vec_basis

    def leading_monomials(self) -> tuple:
        return tuple(p.leading_monomial() for p in self.basis)

    def contains_one(self) -> bool:
        one = self.ambient.one()
        return normal_form_polys(one, self).is_zero

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __str__(self):
        return "{" + ", ".join(str(p) for p in self.basis) + "}"


def groebner_basis_of_polys(ambient: PolynomialRing, polys: Sequence,
                            budget: Budget = None,
                            ideal: Optional[IdealPresentation] = None) -> GroebnerBasis:
    budget = ensure_budget(budget)
    for p in polys:
        if p.ring != ambient:
            raise StructuralError("generator from a different ambient ring")
    vecs = [poly_to_vec(p) for p in polys if not p.is_zero]
    G = vec_groebner(vecs, ambient, budget, rank1=True)
    kind = REDUCED_FIELD if ambient.domain.is_field else STRONG_INTEGER
    return GroebnerBasis(ambient, [vec_to_poly(g, ambient) for g in G], kind, ideal)


def groebner_basis(I: IdealPresentation, budget: Budget = None) -> GroebnerBasis:
    """Groebner basis of the preimage of I in the ambient polynomial ring."""
    return groebner_basis_of_polys(I.ring.ambient, I.preimage_generators(),
                                   budget, ideal=I)


def normal_form_polys(f: Polynomial, G: GroebnerBasis,
                      budget: Budget = None) -> Polynomial:
    if f.ring != G.ambient:
        raise StructuralError(
            f"normal form order/ring mismatch: {f.ring} with order {f.ring.order} "
            f"vs basis over {G.ambient} with order {G.order}")
    budget = ensure_budget(budget)
    r = vec_normal_form(poly_to_vec(f), G.vec_basis(), budget)
    return vec_to_poly(r, G.ambient)


def spolynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The S-polynomial (with lcm coefficients over ZZ)."""
    dom = f.ring.domain
    u, v = f.leading_monomial(), g.leading_monomial()
    a, b = f.leading_coefficient(), g.leading_coefficient()
    w = mono_lcm(u, v)
    if dom.is_field:
        return (f.mul_monomial(mono_div(w, u)).scale(dom.inv(a))
                - g.mul_monomial(mono_div(w, v)).scale(dom.inv(b)))
    l = a * b // _xgcd(a, b)[0]
    return (f.mul_monomial(mono_div(w, u)).scale(l // a)
            - g.mul_monomial(mono_div(w, v)).scale(l // b))


def gpolynomial(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """The gcd-polynomial over ZZ; None when one lead coefficient divides the other."""
    u, v = f.leading_monomial(), g.leading_monomial()
    a, b = f.leading_coefficient(), g.leading_coefficient()
    if a % b == 0 or b % a == 0:
        return None
    _, s, t = _xgcd(a, b)
    w = mono_lcm(u, v)
    return (f.mul_monomial(mono_div(w, u)).scale(s)
            + g.mul_monomial(mono_div(w, v)).scale(t))


# ---------------------------------------------------------------------------
# Unit-ideal decision with certificate

class UnitIdealResult:
    def __init__(self, is_unit: bool, cofactors: Optional[tuple] = None):
        self.is_unit = is_unit
        self.cofactors = cofactors

    def __bool__(self):
        return self.is_unit


def is_unit_ideal(I: IdealPresentation, budget: Budget = None) -> UnitIdealResult:
    """Decide 1 in I + J; on success return re-multiplication-verified cofactors
    g_i over I's generators with sum g_i a_i = 1 in R."""
    budget = ensure_budget(budget)
    ambient = I.ring.ambient
    if not normal_form_polys(ambient.one(), I.groebner(budget), budget).is_zero:
        return UnitIdealResult(False)
    gens = I.preimage_generators()
    lifted = vec_lift(poly_to_vec(ambient.one()),
                      [poly_to_vec(g) for g in gens], 1, ambient, budget)
    if lifted is None:
        raise StructuralError("internal: unit ideal without a lift")
    cof = tuple(lifted[:len(I.generators)])
    total = ambient.zero()
    for c, a in zip(lifted, gens):
        total = total + c * a
    if not I.ring.is_zero_element(total - ambient.one(), budget):
        raise StructuralError("internal: unit certificate failed re-multiplication")
    return UnitIdealResult(True, cof)


# ---------------------------------------------------------------------------
# Elimination, intersection, quotient, annihilator

def fresh_variable_name(taken: Sequence, base: str = "_t") -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def _extend_poly(p: Polynomial, ext: PolynomialRing) -> Polynomial:
    return ext.from_dict({(0,) + m: c for m, c in p.terms})


def _restrict_poly(p: Polynomial, ambient: PolynomialRing) -> Polynomial:
    return ambient.from_dict({m[1:]: c for m, c in p.terms})


def ideal_intersection_polys(ambient: PolynomialRing, gens_a: Sequence,
                             gens_b: Sequence, budget: Budget = None) -> list:
    """Generators of <gens_a> cap <gens_b> in the ambient polynomial ring."""
    budget = ensure_budget(budget)
    tname = fresh_variable_name(ambient.variables)
    ext = PolynomialRing(ambient.domain, (tname,) + ambient.variables,
                         block_order(1, GREVLEX, ambient.order))
    t = ext.variable(tname)
    one_minus_t = ext.one() - t
    gens = [t * _extend_poly(a, ext) for a in gens_a if not a.is_zero]
    gens += [one_minus_t * _extend_poly(b, ext) for b in gens_b if not b.is_zero]
    G = groebner_basis_of_polys(ext, gens, budget)
    out = []
    for p in G.basis:
        if all(m[0] == 0 for m, _ in p.terms):
            out.append(_restrict_poly(p, ambient))
    return out


def exact_poly_div(g: Polynomial, f: Polynomial) -> Polynomial:
    """g / f when f divides g exactly in the ambient ring."""
    ring = g.ring
    dom = ring.domain
    if f.is_zero:
        raise StructuralError("division by the zero polynomial")
    okey = ring.order.key
    fm, fc = f.leading_monomial(), f.leading_coefficient()
    work = dict(g.terms)
    out = {}
    while work:
        m = max(work, key=okey)
        c = work.pop(m)
        q = mono_div(m, fm)
        if q is None:
            raise StructuralError("inexact polynomial division")
        qc = dom.exact_div(c, fc)
        out[q] = qc
        for m2, c2 in f.terms[1:]:
            k = mono_mul(m2, q)
            nc = dom.sub(work.get(k, dom.zero()), dom.mul(qc, c2))
            if nc == dom.zero():
                work.pop(k, None)
            else:
                work[k] = nc
    return ring.from_dict(out)


def _quotient_by_poly(ambient: PolynomialRing, gens: Sequence, f: Polynomial,
                      budget: Budget) -> list:
    """(<gens> : f) in the ambient polynomial ring, f nonzero."""
    meet = ideal_intersection_polys(ambient, gens, [f], budget)
    return [exact_poly_div(p, f) for p in meet]


def ideal_quotient(I: IdealPresentation, divisor, budget: Budget = None) -> IdealPresentation:
    """(I : f) for a ring element, or (I : J) for an ideal, inside R.

    (I : 0) = R by convention; the result carries a note when it applies.
    """
    budget = ensure_budget(budget)
    ring = I.ring
    ambient = ring.ambient
    pre = I.preimage_generators()
    if isinstance(divisor, IdealPresentation):
        if divisor.ring != ring:
            raise StructuralError("ideal quotient across different rings")
        divisors = [ring.normal_form(f, budget) for f in divisor.generators]
        divisors = [f for f in divisors if not f.is_zero]
        if not divisors:
            return IdealPresentation(ring, (ambient.one(),),
                                     notes=("quotient by the zero ideal is R",))
        current: Optional[list] = None
        for f in divisors:
            q = _quotient_by_poly(ambient, pre, f, budget)
            current = q if current is None else ideal_intersection_polys(
                ambient, current, q, budget)
        gens = current
        note = ()
    else:
        f = ring.normal_form(ring.poly(divisor), budget)
        if f.is_zero:
            return IdealPresentation(ring, (ambient.one(),),
                                     notes=("quotient by zero is R",))
        gens = _quotient_by_poly(ambient, pre, f, budget)
        note = ()
    reduced = []
    for g in gens:
        r = ring.normal_form(g, budget)
        if not r.is_zero and r not in reduced:
            reduced.append(r)
    if not reduced:
        return IdealPresentation(ring, (), notes=note)
    return IdealPresentation(ring, tuple(reduced), notes=note)


def annihilator(I: IdealPresentation, budget: Budget = None) -> IdealPresentation:
    """Ann_R(I) = (J : <gens I>) mod J; the zero ideal exactly when I is dense."""
    budget = ensure_budget(budget)
    ring = I.ring
    ambient = ring.ambient
    gens = [ring.normal_form(g, budget) for g in I.generators]
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        return IdealPresentation(ring, (ambient.one(),),
                                 notes=("annihilator of the zero ideal is R",))
    current: Optional[list] = None
    for f in gens:
        q = _quotient_by_poly(ambient, ring.relations, f, budget)
        current = q if current is None else ideal_intersection_polys(
            ambient, current, q, budget)
    reduced = []
    for g in current:
        r = ring.normal_form(g, budget)
        if not r.is_zero and r not in reduced:
            reduced.append(r)
    return IdealPresentation(ring, tuple(reduced))


# ---------------------------------------------------------------------------
# Krull dimension over field coefficients

def krull_dimension(R: RingPresentation, budget: Budget = None) -> int:
    """dim A[x1..xn]/J as the largest variable set independent modulo the
    initial ideal of J (field coefficients only)."""
    budget = ensure_budget(budget)
    if not R.domain.is_field:
        raise UnsupportedDomainError(
            "Krull dimension is only computed over field coefficients")
    G = R.relations_groebner(budget)
    if G.contains_one():
        raise StructuralError("the zero ring has empty spectrum")
    n = R.ambient.nvars
    supports = []
    for m in G.leading_monomials():
        supports.append(frozenset(i for i, e in enumerate(m) if e > 0))
    from itertools import combinations
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            s = set(subset)
            if all(not sup <= s for sup in supports):
                return size
    return 0
