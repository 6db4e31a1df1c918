"""Koszul complexes, Koszul-route grade, and the dual-top-cokernel module."""
import pytest
from fpdlab import (GradeValue, StructuralError, dual_koszul_cokernel,
                    koszul_complex, koszul_grade)
from fpdlab.koszul import koszul_homology_is_zero
from helpers import QQ, ZZ, presentation


def test_single_generator_complex():
    P = presentation(QQ, ("x",))
    K = koszul_complex(P, ("x",))
    assert K.ranks == (1, 1)
    assert [[str(e) for e in row] for row in K.differential(1).matrix] == [["x"]]


def test_two_generator_complex_shape_and_signs():
    P = presentation(QQ, ("x", "y"))
    K = koszul_complex(P, ("x", "y"))
    assert K.ranks == (1, 2, 1)
    assert [[str(e) for e in row] for row in K.differential(1).matrix] == [["x", "y"]]
    assert [[str(e) for e in row] for row in K.differential(2).matrix] == [["-y"], ["x"]]


def test_three_generator_complex_composes_to_zero():
    P = presentation(QQ, ("x", "y", "z"))
    K = koszul_complex(P, ("x", "y", "z"))
    assert K.ranks == (1, 3, 3, 1)
    for i in range(1, 3):
        assert K.differential(i).compose(K.differential(i + 1)).is_zero()


def test_empty_generator_tuple_rejected():
    P = presentation(QQ, ("x",))
    with pytest.raises(StructuralError):
        koszul_complex(P, ())


def test_degree_zero_homology_presents_the_quotient():
    # coker d_1 and the ideal have mutually reducing generators
    P = presentation(QQ, ("x", "y"), ["y^2"])
    gens = ("x + y", "x*y")
    K = koszul_complex(P, gens)
    row = K.differential(1).matrix[0]
    I = P.ideal(*gens)
    for entry in row:
        assert I.contains(entry)
    row_ideal = P.ideal(*row)
    for g in gens:
        assert row_ideal.contains(g)


def test_koszul_grade_of_regular_sequence():
    P = presentation(QQ, ("x", "y"))
    I = P.ideal("x", "y")
    assert koszul_grade(I) == GradeValue.finite(2)
    # H_1 = H_2 = 0 and H_0 != 0, directly
    K = koszul_complex(P, I.generators)
    assert koszul_homology_is_zero(K, 1)
    assert koszul_homology_is_zero(K, 2)
    assert not koszul_homology_is_zero(K, 0)


def test_koszul_grade_detects_socle():
    P = presentation(QQ, ("x",), ["x^2"])
    assert koszul_grade(P.ideal("x")) == GradeValue.finite(0)
    K = koszul_complex(P, (P.poly("x"),))
    assert not koszul_homology_is_zero(K, 1)  # H_1 = Ann(x) != 0


def test_koszul_grade_of_unit_ideal_is_infinite():
    P = presentation(QQ, ("x",))
    assert koszul_grade(P.ideal("1")).is_infinite
    assert koszul_grade(P.ideal("x", "x + 1")).is_infinite


def test_koszul_grade_generator_permutation_invariant():
    P = presentation(QQ, ("x", "y"), ["x*y"])
    I = P.ideal("x", "y")
    base = koszul_grade(I, (P.poly("x"), P.poly("y")))
    assert koszul_grade(I, (P.poly("y"), P.poly("x"))) == base


def test_koszul_grade_extra_generator_invariant():
    P = presentation(QQ, ("x", "y"))
    I = P.ideal("x", "y")
    base = koszul_grade(I)
    extra = koszul_grade(I, (P.poly("x"), P.poly("y"), P.poly("x + y")))
    assert extra == base


def test_koszul_grade_over_integers():
    P = presentation(ZZ, ("x",))
    assert koszul_grade(P.ideal("x")) == GradeValue.finite(1)
    assert koszul_grade(P.ideal("2", "x")) == GradeValue.finite(2)


def test_dual_cokernel_of_principal_ideal():
    P = presentation(QQ, ("x",))
    res = dual_koszul_cokernel(P.ideal("x"), 0)
    assert res.index == 1
    assert [[str(e) for e in row] for row in res.presentation.matrix] == [["x"]]
    assert res.profile == (True,)
    assert res.exactness_verified
    assert res.projective_dimension_bound == 1


def test_dual_cokernel_of_regular_pair():
    P = presentation(QQ, ("x", "y"))
    res = dual_koszul_cokernel(P.ideal("x", "y"), 1)
    assert res.index == 2
    assert (res.presentation.target_rank, res.presentation.source_rank) == (1, 2)
    assert [[str(e) for e in row] for row in res.presentation.matrix] == [["-y", "x"]]
    assert res.profile == (True, True)
    assert res.exactness_verified


def test_dual_cokernel_without_vanishing_makes_no_claim():
    P = presentation(QQ, ("x",), ["x^2"])
    res = dual_koszul_cokernel(P.ideal("x"), 1)
    assert res.profile[0] is False
    assert not res.exactness_verified
    assert res.projective_dimension_bound is None


def test_dual_cokernel_of_unit_ideal_split_exact():
    P = presentation(QQ, ("x", "y"))
    I = P.ideal("1", "x")
    res = dual_koszul_cokernel(I, 1)
    assert res.exactness_verified
    # S is presented by the transposed top differential with full expected ranks
    assert res.presentation.target_rank == 1  # C(2, 2)
    assert res.presentation.source_rank == 2  # C(2, 1)
