"""Free-module maps, module normal forms, kernels, and subquotient tests."""
import pytest
from fpdlab import (FreeModuleMap, StructuralError, SubmodulePresentation,
                    image, is_zero_subquotient, kernel, module_normal_form)
from helpers import QQ, ZZ, brute_linear_syzygies, presentation


def _submodule(P, rank, *gens):
    return SubmodulePresentation(P, rank, [tuple(P.poly(e) for e in g) for g in gens])


def test_module_normal_form_member_is_zero():
    P = presentation(QQ, ("x",))
    S = _submodule(P, 2, ("x", "0"), ("0", "x - 1"))
    assert all(p.is_zero for p in module_normal_form(("x", "x - 1"), S))


def test_module_normal_form_basis_vector_survives():
    P = presentation(QQ, ("x",))
    S = _submodule(P, 1, ("x",))
    nf = module_normal_form(("1",), S)
    assert [str(p) for p in nf] == ["1"]


def test_module_normal_form_power_reduces():
    P = presentation(QQ, ("x",))
    S = _submodule(P, 1, ("x",))
    assert all(p.is_zero for p in module_normal_form(("x^2",), S))


def test_module_normal_form_rank_mismatch():
    P = presentation(QQ, ("x",))
    S = _submodule(P, 2, ("x", "0"))
    with pytest.raises(StructuralError):
        module_normal_form(("x",), S)


def test_kernel_of_two_variable_row():
    P = presentation(QQ, ("x", "y"))
    phi = FreeModuleMap(P, 2, 1, [["x", "y"]])
    K = kernel(phi)
    assert len(K.generators) == 1
    g = K.generators[0]
    # the reported generator multiplies to zero
    assert all(P.is_zero_element(e) for e in phi.apply(g))
    # brute syzygy sweep (exact linear algebra, degree <= 4) is contained
    cols = [phi.column(j) for j in range(2)]
    for h in brute_linear_syzygies(P.ambient, cols, 4):
        assert K.contains(h)


def test_kernel_of_identity_is_zero():
    P = presentation(QQ, ("x",))
    phi = FreeModuleMap(P, 1, 1, [["1"]])
    assert kernel(phi).generators == ()


def test_kernel_of_multiplication_on_dual_numbers():
    P = presentation(QQ, ("x",), ["x^2"])
    phi = FreeModuleMap(P, 1, 1, [["x"]])
    K = kernel(phi)
    assert [[str(p) for p in g] for g in K.generators] == [["x"]]


def test_kernel_generators_multiply_to_zero_over_integers():
    P = presentation(ZZ, ("x", "y"))
    phi = FreeModuleMap(P, 3, 1, [["2*x", "3*y", "x*y"]])
    K = kernel(phi)
    assert K.generators
    for g in K.generators:
        assert all(P.is_zero_element(e) for e in phi.apply(g))


def test_is_zero_subquotient_equal_modules():
    P = presentation(QQ, ("x",))
    S1 = _submodule(P, 1, ("x",))
    S2 = _submodule(P, 1, ("x",), ("x^2",))
    assert is_zero_subquotient(S1, S2)
    assert is_zero_subquotient(S2, S1)


def test_is_zero_subquotient_detects_proper_quotient():
    P = presentation(QQ, ("x",))
    K = _submodule(P, 1, ("1",))
    Im = _submodule(P, 1, ("x",))
    assert not is_zero_subquotient(K, Im, verify_containment=False)


def test_is_zero_subquotient_redundant_generators():
    P = presentation(QQ, ("x", "y"))
    K = _submodule(P, 1, ("x",), ("y",))
    Im = _submodule(P, 1, ("x",), ("y",), ("x + y",))
    assert is_zero_subquotient(K, Im)


def test_is_zero_subquotient_containment_violation():
    P = presentation(QQ, ("x",))
    K = _submodule(P, 1, ("x^2",))
    Im = _submodule(P, 1, ("x",))  # not contained in K
    with pytest.raises(StructuralError):
        is_zero_subquotient(K, Im, verify_containment=True)


def test_is_zero_subquotient_rank_mismatch():
    P = presentation(QQ, ("x",))
    with pytest.raises(StructuralError):
        is_zero_subquotient(_submodule(P, 1, ("x",)), _submodule(P, 2, ("x", "0")))


def test_relation_multiples_reduce_to_zero():
    # J * e_i always reduces to zero against any submodule's Groebner data
    P = presentation(QQ, ("x", "y"), ["x*y", "y^3"])
    S = _submodule(P, 2, ("x", "y"))
    for rel in P.relations:
        for i in range(2):
            v = tuple(rel if j == i else P.ambient.zero() for j in range(2))
            assert S.contains(v)


def test_transpose_and_compose():
    P = presentation(QQ, ("x", "y"))
    phi = FreeModuleMap(P, 2, 1, [["x", "y"]])
    psi = phi.transpose()
    assert (psi.source_rank, psi.target_rank) == (1, 2)
    assert [[str(e) for e in row] for row in psi.matrix] == [["x"], ["y"]]
    comp = phi.compose(FreeModuleMap(P, 1, 2, [["-y"], ["x"]]))
    assert comp.is_zero()


def test_matrix_entries_normalized_modulo_relations():
    P = presentation(QQ, ("x",), ["x^2"])
    phi = FreeModuleMap(P, 1, 1, [["x^2 + x"]])
    assert [[str(e) for e in row] for row in phi.matrix] == [["x"]]


def test_image_submodule():
    P = presentation(QQ, ("x", "y"))
    phi = FreeModuleMap(P, 2, 2, [["x", "0"], ["0", "y"]])
    Im = image(phi)
    assert Im.contains(("x", "0"))
    assert not Im.contains(("1", "0"))
