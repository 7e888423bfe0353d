import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from csai import structure
from csai.errors import Inconclusive, ShapeError
from csai.matrices import Kind, adjoint, basis, identity, zeros
from csai.sampling import random_invertible
from csai.structure import (BasisFamily, MatrixModel, StructureConstantAlgebra,
                            canonical_family, catalog, center, center_certificate,
                            center_is_field, change_basis, check_linear_independence,
                            conjugate_family, csa_model_check, csai_model_check,
                            from_matrix_model, is_semisimple, reduced_trace_values,
                            regular_trace_gram, verify_delta, verify_trace_functional)

seeds = st.integers(0, 10**6)
CASE_KIND = {1: Kind.REAL, 2: Kind.COMPLEX, 3: Kind.QUATERNION}


def product_algebra(k):
    """Q^k with idempotent basis."""
    c = [[[int(u == v == w) for w in range(k)] for v in range(k)] for u in range(k)]
    return StructureConstantAlgebra(k, c, [1] * k)


@pytest.mark.parametrize("case", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_canonical_families(case, n):
    fam = canonical_family(case, n)
    assert verify_delta(case, fam)
    assert check_linear_independence(fam.flat())


@settings(max_examples=15)
@given(seeds, st.sampled_from([1, 2, 3]), st.integers(1, 2))
def test_conjugated_families(seed, case, n):
    g = random_invertible(random.Random(seed), CASE_KIND[case], n)
    fam = conjugate_family(canonical_family(case, n), g)
    assert verify_delta(case, fam)
    assert check_linear_independence(fam.flat())


def test_delta_failing_clause():
    fam = canonical_family(1, 2)
    fam.elements[0][0][0] = zeros(Kind.REAL, 2)
    v = verify_delta(1, fam)
    assert not v and v.reason == "X_{1,1}·X_{1,1} = X_{1,1} ≠ 0"
    fam = canonical_family(2, 2)
    fam.elements[1][0][0] = fam.elements[0][0][0]
    v = verify_delta(2, fam)
    # E11 * E11 = E11 still holds, so the first break is at s = 2
    assert not v and v.reason == "X^{(1)}_{1,2}·X^{(i)}_{2,1} = X^{(i)}_{1,1} ≠ 0"
    with pytest.raises(ShapeError):
        verify_delta(2, canonical_family(1, 2))


def test_delta_in_structure_constants():
    alg = from_matrix_model(Kind.QUATERNION, 1)
    fam = BasisFamily.from_list(3, 1, alg.basis())
    assert verify_delta(3, fam)
    swapped = BasisFamily.from_list(3, 1, [alg.basis()[i] for i in (0, 2, 1, 3)])
    assert not verify_delta(3, swapped)


def test_linear_independence():
    B = basis(Kind.REAL, 2)
    assert check_linear_independence(B)
    assert not check_linear_independence(B + [B[0]])
    assert not check_linear_independence([identity(Kind.REAL, 2), B[0] + B[3]])


def test_center_examples():
    assert center(from_matrix_model(Kind.REAL, 2)) == [[1, 0, 0, 1]]
    assert center(from_matrix_model(Kind.QUATERNION, 1)) == [[1, 0, 0, 0]]
    assert len(center(from_matrix_model(Kind.COMPLEX, 1))) == 2


@pytest.mark.parametrize("kind,n", [(k, n) for k in Kind for n in (1, 2)])
def test_center_of_matrix_models(kind, n):
    assert len(center(from_matrix_model(kind, n))) == (2 if kind is Kind.COMPLEX else 1)


def test_semisimple_examples():
    assert is_semisimple(from_matrix_model(Kind.REAL, 2))
    assert not is_semisimple(structure.upper_triangular())
    dual = structure.dual_numbers()
    assert not is_semisimple(dual)
    assert regular_trace_gram(dual) == [[2, 0], [0, 0]]


@settings(max_examples=10)
@given(seeds, st.sampled_from(["M_2(Q)", "QxQ", "Q[x]/(x^2)", "upper-triangular 2x2"]))
def test_semisimple_invariant_under_base_change(seed, name):
    alg = catalog()[name]
    g = random_invertible(random.Random(seed), Kind.REAL, alg.m, 3)
    other = change_basis(alg, [list(r) for r in g.rows])
    assert structure.check_associative_unital(other)
    assert is_semisimple(other) == is_semisimple(alg)


def test_center_is_field_examples():
    assert center_is_field(from_matrix_model(Kind.COMPLEX, 1))
    cert = center_certificate(structure.split_product())
    assert not cert.is_field and cert.method == "minimal-polynomial"
    assert len(cert.factors) == 2
    assert center_is_field(from_matrix_model(Kind.REAL, 1))


def test_center_fallback(monkeypatch):
    monkeypatch.setattr(structure, "CENTER_TRIALS", 0)
    cert = center_certificate(structure.split_product())
    assert not cert.is_field and cert.method == "idempotent"
    e = cert.element
    assert structure.split_product().mul(e, e) == list(e)
    assert center_certificate(from_matrix_model(Kind.COMPLEX, 1)).is_field
    assert center_certificate(structure.dual_numbers()).method == "trace-form"
    with pytest.raises(Inconclusive):
        center_certificate(product_algebra(5))


def test_center_not_field_in_bigger_product():
    assert not center_is_field(product_algebra(5))


def test_trace_functional_examples():
    model = MatrixModel(Kind.REAL, 2)
    trd = reduced_trace_values(Kind.REAL, 2)
    assert verify_trace_functional(model, trd)
    v = verify_trace_functional(model, [2 * x for x in trd])
    assert not v and v.reason.startswith("f(1)")
    v = verify_trace_functional(model, [1, 0, 0, 0])
    assert not v and v.reason.startswith("f(e_1 e_2)")


@pytest.mark.parametrize("kind", list(Kind))
@pytest.mark.parametrize("n", [1, 2])
def test_trace_functional_uniqueness(kind, n):
    model = MatrixModel(kind, n)
    trd = reduced_trace_values(kind, n)
    assert verify_trace_functional(model, trd)
    for u in range(len(trd)):
        bad = list(trd)
        bad[u] = bad[u] + 1
        assert not verify_trace_functional(model, bad)


def test_trace_functional_on_constants():
    alg = from_matrix_model(Kind.REAL, 2)
    assert verify_trace_functional(alg, [1, 0, 0, 1], deg=2)
    with pytest.raises(ShapeError):
        verify_trace_functional(alg, [1, 0, 0, 1])


def test_catalog_verdicts():
    got = {name: csa_model_check(alg).status for name, alg in catalog().items()}
    assert got == {"M_2(Q)": "pass", "H": "pass", "Q(sqrt(-1))": "pass-commutative",
                   "QxQ": "fail-center", "Q[x]/(x^2)": "fail-semisimple",
                   "upper-triangular 2x2": "fail-semisimple"}
    assert csa_model_check(catalog()["M_2(Q)"]).degree == 2
    assert csa_model_check(catalog()["H"]).degree == 2


def test_csai_examples():
    r = csai_model_check(from_matrix_model(Kind.REAL, 2, adjoint))
    assert r.status == "pass" and r.involution_kind == "first"
    r = csai_model_check(from_matrix_model(Kind.COMPLEX, 1, adjoint))
    assert r.status == "pass-commutative" and r.involution_kind == "second"
    r = csai_model_check(from_matrix_model(Kind.QUATERNION, 2, adjoint))
    assert r.passed and r.involution_kind == "first" and r.degree == 4
    alg = from_matrix_model(Kind.REAL, 2)
    bad = StructureConstantAlgebra(alg.m, alg.constants, alg.unit,
                                   [[int(u == v) for v in range(4)] for u in range(4)])
    r = csai_model_check(bad)
    assert r.status == "fail-involution"
    assert "basis pair (0, 1)" in r.involution.reason
    with pytest.raises(ShapeError):
        csai_model_check(alg)


def test_csai_identity_on_complex_is_not_csai():
    # conjugation-free identity on Q(i): Z cap Sym is all of Q(i)
    alg = from_matrix_model(Kind.COMPLEX, 1, lambda x: x)
    r = csai_model_check(alg)
    assert r.status == "fail-involution" and "dimension 2" in r.notes[0]


def test_nonassociative_constants():
    c = [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]
    alg = StructureConstantAlgebra(2, c, [1, 0])
    assert csa_model_check(alg).status == "pass-commutative"  # Q(golden ratio) is a field
    c2 = [[[1, 0], [0, 1]], [[0, 1], [Fraction(1, 2), 0]]]
    assert center_is_field(StructureConstantAlgebra(2, c2, [1, 0]))
