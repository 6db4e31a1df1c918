"""Finite ring tables, ideal enumeration, and the brute-force DQ/DW oracle."""
import pytest
from fpdlab import CapExceededError, StructuralError
from fpdlab.finite_rings import (FiniteRing, annihilator_set, brute_ext1_vanishes,
                                 brute_hom_vanishes, brute_is_dq, brute_is_dw,
                                 brute_is_gv, build_finite_ring, enumerate_ideals,
                                 ideal_closure, minimal_generators)


def test_integers_mod_four():
    R = FiniteRing.integers_mod(4)
    assert R.order == 4
    assert R.add[3][3] == 2 and R.mul[2][2] == 0
    assert R.labels == ("0", "1", "2", "3")


def test_quotient_dual_numbers_over_f2():
    R = FiniteRing.quotient(2, [0, 0, 1])  # x^2 = 0
    assert R.order == 4
    assert set(R.labels) == {"0", "1", "x", "1 + x"}
    x = R.labels.index("x")
    assert R.mul[x][x] == R.zero


def test_quotient_respects_relation():
    R = FiniteRing.quotient(3, [1, 0, 1])  # x^2 = -1 over ZZ/3: a field with 9 elements
    x = next(i for i, c in enumerate(R.element_coeffs) if c == (0, 1))
    assert R.element_coeffs[R.mul[x][x]] == (2, 0)
    # every nonzero element is a unit
    units = {R.mul[a][b] for a in range(9) for b in range(9)} - {R.zero}
    assert all(any(R.mul[a][b] == R.one for b in range(9))
               for a in range(1, 9))


def test_ring_axioms_verified():
    R = FiniteRing.integers_mod(6)
    assert R.order == 6  # construction would have raised on an axiom failure


def test_bad_tables_rejected():
    add = [[0, 1], [1, 0]]
    broken_mul = [[0, 0], [0, 0]]  # no multiplicative identity
    with pytest.raises(StructuralError):
        FiniteRing([0, 1], add, broken_mul, 0, 1, "broken")


def test_non_monic_relation_rejected():
    with pytest.raises(StructuralError):
        FiniteRing.quotient(4, [0, 0, 2])  # 2x^2: not monic, infinite quotient
    with pytest.raises(StructuralError):
        FiniteRing.quotient(4, [3])  # constant relation


def test_build_cap():
    with pytest.raises(CapExceededError):
        FiniteRing.integers_mod(5000)
    with pytest.raises(CapExceededError):
        FiniteRing.quotient(2, [0] * 13 + [1])  # 2^13 elements
    assert build_finite_ring(7).order == 7


def test_ideal_enumeration_chain_rings():
    Z4 = FiniteRing.integers_mod(4)
    assert [sorted(I) for I in enumerate_ideals(Z4)] == [[0], [0, 2], [0, 1, 2, 3]]
    F2 = FiniteRing.integers_mod(2)
    assert [sorted(I) for I in enumerate_ideals(F2)] == [[0], [0, 1]]
    Z6 = FiniteRing.integers_mod(6)
    assert [sorted(I) for I in enumerate_ideals(Z6)] == \
        [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_ideal_closure_is_an_ideal():
    R = FiniteRing.quotient(2, [0, 0, 0, 1])  # F2[x]/(x^3)
    x = next(i for i, c in enumerate(R.element_coeffs) if c == (0, 1, 0))
    I = ideal_closure(R, {x})
    for a in I:
        for r in range(R.order):
            assert R.mul[r][a] in I
        for b in I:
            assert R.add[a][b] in I


def test_minimal_generators_regenerate():
    R = FiniteRing.integers_mod(12)
    for I in enumerate_ideals(R):
        gens = minimal_generators(R, I)
        assert ideal_closure(R, gens) == I


def test_annihilator_set_mod_four():
    R = FiniteRing.integers_mod(4)
    assert sorted(annihilator_set(R, {2})) == [0, 2]
    assert sorted(annihilator_set(R, {1, 2, 3})) == [0]


def test_hom_vanishing():
    R = FiniteRing.integers_mod(4)
    assert not brute_hom_vanishes(R, frozenset({0, 2}))
    assert brute_hom_vanishes(R, frozenset(range(4)))


def test_ext1_brute_on_principal_ideals():
    R = FiniteRing.integers_mod(4)
    # Ext^1(R/(2), R) over Z/4: syzygy of (2) is (2); phi(2)=0 forces phi in {0,2} = 2*R
    assert brute_ext1_vanishes(R, frozenset({0, 2}))
    F4 = FiniteRing.quotient(2, [0, 0, 1])
    x = F4.labels.index("x")
    assert brute_ext1_vanishes(F4, ideal_closure(F4, {x}))


def test_ext1_cap():
    R = FiniteRing.integers_mod(64)
    with pytest.raises(CapExceededError):
        brute_ext1_vanishes(R, frozenset({0, 32}), size_cap=32)


def test_dq_of_small_rings():
    assert brute_is_dq(FiniteRing.integers_mod(4)).holds
    assert brute_is_dq(FiniteRing.integers_mod(7)).holds  # a field
    for n in range(2, 17):
        assert brute_is_dq(FiniteRing.integers_mod(n)).holds


def test_dw_of_small_rings():
    assert brute_is_dw(FiniteRing.integers_mod(4)).holds
    assert brute_is_dw(FiniteRing.quotient(2, [0, 0, 1])).holds
    assert brute_is_dw(FiniteRing.integers_mod(5)).holds


def test_dq_implies_dw_on_a_batch():
    rings = [FiniteRing.integers_mod(n) for n in (2, 4, 6, 8, 9, 12)]
    rings.append(FiniteRing.quotient(3, [0, 0, 1]))
    for R in rings:
        dq = brute_is_dq(R)
        dw = brute_is_dw(R)
        assert (not dq.holds) or dw.holds


def test_gv_oracle_on_f4():
    F4 = FiniteRing.quotient(2, [0, 0, 1])
    full = frozenset(range(4))
    assert brute_is_gv(F4, full)
    x_ideal = ideal_closure(F4, {F4.labels.index("x")})
    assert not brute_is_gv(F4, x_ideal)  # Ann(x) = (x) != 0
