import itertools
import json
import random
from fractions import Fraction

import pytest

import oracles
from lrmbasis import filtration
from lrmbasis.compositions import (compositions_of, eta, partition_refines, set_of,
                                   strictly_partition_refines, underlying_partition)
from lrmbasis.exact_linalg import is_subspace, span, span_equal, unitriangular_certificate
from lrmbasis.filtration import (SigmaElement, declared_order, dimension_table, left_mult_matrix,
                                 lrm_basis, lrm_vectors, r_alpha, s_alpha, s_prime_alpha,
                                 strictly_finer_sum)
from lrmbasis.group_algebra import GroupAlgebraElement, b_element
from lrmbasis.permutations import Permutation, clrm_prime, permutation_list
from lrmbasis.report import GuardError

P = Permutation.parse


def random_sigma(n, rng, lo=-3, hi=3):
    return SigmaElement(n, {a: rng.randint(lo, hi) for a in compositions_of(n)})


def oracle_lrm_vector(w):
    """B_{cLRM'(w)} * w with the LRM set read off directly and B built by descent filtering."""
    n = len(w)
    lrms = oracles.lrm_values(w)
    cuts = {x - 1 for x in lrms if x > 1}
    pts = [0, *sorted(cuts), n]
    alpha = tuple(b - a for a, b in zip(pts, pts[1:]))
    prod = oracles.convolve(oracles.b_dict(alpha), {tuple(w): 1})
    return [prod.get(tuple(u), 0) for u in permutation_list(n)]


# -- examples -----------------------------------------------------------------

def test_lrm_basis_examples():
    (e,) = lrm_basis(1)
    assert e.value == GroupAlgebraElement.identity(1)
    b12, b21 = lrm_basis(2)
    assert b12.value == GroupAlgebraElement.basis(P("12"))
    assert b21.value == GroupAlgebraElement(2, {P("12"): 1, P("21"): 1})
    assert len(lrm_basis(3)) == 6 and unitriangular_certificate(lrm_vectors(3))
    with pytest.raises(ValueError):
        lrm_basis(7)


@pytest.mark.parametrize("n", range(1, 6))
def test_lrm_vectors_match_oracle(n):
    for w, vec in zip(permutation_list(n), lrm_vectors(n)):
        assert list(vec) == oracle_lrm_vector(w)


def test_r_alpha_examples():
    for n in range(1, 5):
        assert r_alpha((n,)).rank == len(permutation_list(n))
        assert r_alpha((1,) * n).rank == 1
    assert [r_alpha(a).rank for a in compositions_of(3)] == [1, 4, 4, 6]


def test_s_alpha_examples():
    for n in range(1, 5):
        assert s_alpha((n,)).rank == len(permutation_list(n))
        S = s_alpha((1,) * n)
        assert S == span([lrm_vectors(n)[-1]], len(permutation_list(n)))
    assert [s_alpha(a).rank for a in compositions_of(3)] == [1, 4, 4, 6]


def test_s_prime_alpha_examples():
    assert [s_prime_alpha(a).rank for a in compositions_of(3)] == [1, 3, 2, 6]
    for alpha in [(1, 2), (2, 1)]:
        assert is_subspace(s_prime_alpha(alpha), s_alpha(alpha))
        assert not span_equal(s_prime_alpha(alpha), s_alpha(alpha))


def test_dimension_table_n3():
    rows = [(str(r["alpha"]), r["dim_R"], r["dim_S"], r["dim_S_prime"]) for r in dimension_table(3)]
    assert rows == [("(1,1,1)", 1, 1, 1), ("(1,2)", 4, 4, 3), ("(2,1)", 4, 4, 2), ("(3)", 6, 6, 6)]
    assert [(r["dim_R"], r["dim_S_prime"]) for r in dimension_table(1)] == [(1, 1)]


def test_anagram_examples():
    assert span_equal(r_alpha((1, 2)), r_alpha((2, 1)))
    quads = [r_alpha(a) for a in [(1, 1, 2), (1, 2, 1), (2, 1, 1)]]
    assert all(span_equal(x, y) for x, y in itertools.combinations(quads, 2))


def test_inclusion_examples():
    assert is_subspace(r_alpha((1, 1, 1)), r_alpha((1, 2)))
    assert not is_subspace(r_alpha((1, 2)), r_alpha((1, 1, 1)))


def test_scalar_action_on_finest():
    for n in range(1, 5):
        ones = (1,) * n
        assert strictly_finer_sum(ones).rank == 0
        for alpha in compositions_of(n):
            assert b_element(alpha) * b_element(ones) == b_element(ones).scale(eta(ones, alpha))


def test_left_mult_examples():
    n = 4
    ident = left_mult_matrix(SigmaElement(n, {(n,): 1}))
    N = 24
    assert ident.matrix == [[int(i == j) for j in range(N)] for i in range(N)]
    assert ident.predicted == [1] * N
    total = left_mult_matrix(SigmaElement(n, {(1,) * n: 1}))
    assert total.triangular
    k = total.order.index(Permutation.longest(n))
    assert total.diagonal[k] == 24 and total.diagonal.count(0) == 23
    assert total.eigenvalues() == {24: 1, 0: 23}


def test_left_mult_rational_and_lex_matrix():
    rng = random.Random(11)
    n = 4
    a = SigmaElement(n, {alpha: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for alpha in compositions_of(n)})
    res = left_mult_matrix(a)
    assert res.triangular and res.block_scalar and res.diagonal_matches
    # rebuild a * beta_w from the matrix and compare with direct convolution
    element = a.to_group_algebra()
    vecs = {w: v for w, v in zip(permutation_list(n), lrm_vectors(n))}
    for j, w in enumerate(res.order):
        image = (element * GroupAlgebraElement.from_vector(n, vecs[w])).to_vector()
        rebuilt = [sum(res.matrix[i][j] * vecs[u][c] for i, u in enumerate(res.order)) for c in range(24)]
        assert rebuilt == image


def test_declared_order_extends_partition_refinement():
    for n in range(1, 6):
        order = declared_order(n)
        parts = [underlying_partition(clrm_prime(w)) for w in order]
        for i, j in itertools.combinations(range(len(order)), 2):
            assert not strictly_partition_refines(parts[j], parts[i])


def test_sigma_element_json():
    a = SigmaElement(4, {(2, 1, 1): Fraction(3, 2), (4,): -1})
    text = a.to_json()
    assert SigmaElement.from_json(text) == a
    assert json.loads(text)[0].keys() == {"alpha", "num", "den"}
    with pytest.raises(ValueError):
        SigmaElement(4, {(2, 1): 1})
    with pytest.raises(ValueError):
        left_mult_matrix(a, 5)


def test_sigma_inclusion_example():
    rep = filtration.verify_sigma_inclusion(3)
    assert rep.passed
    assert any("B(1,1,1) Sigma in B(1,2) Sigma" == c.label for c in rep.cases)


# -- exhaustive invariants ----------------------------------------------------

@pytest.mark.parametrize("n", range(1, 7))
def test_basis_triangular(n):
    for e in lrm_basis(n):
        assert e.value.coefficient(e.w) == 1
        assert all(u <= e.w for u in e.value.support())
    assert unitriangular_certificate(lrm_vectors(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_ideal_dimension_depends_on_partition(n):
    dims = {}
    for alpha in compositions_of(n):
        dims.setdefault(underlying_partition(alpha), set()).add(r_alpha(alpha).rank)
    assert all(len(v) == 1 for v in dims.values())


@pytest.mark.parametrize("n", range(1, 6))
def test_monotonicity(n):
    comps = compositions_of(n)
    for b, g in itertools.product(comps, repeat=2):
        if partition_refines(b, g):
            assert is_subspace(r_alpha(b), r_alpha(g))


@pytest.mark.parametrize("n", range(1, 6))
def test_filtration_equality(n):
    for alpha in compositions_of(n):
        assert span_equal(s_alpha(alpha), r_alpha(alpha))
        assert is_subspace(s_prime_alpha(alpha), s_alpha(alpha))


@pytest.mark.parametrize("n", range(1, 5))
def test_r_alpha_rank_matches_sympy(n):
    perms = permutation_list(n)
    for alpha in compositions_of(n):
        B = oracles.b_dict(alpha)
        rows = []
        for w in perms:
            prod = oracles.convolve(B, {tuple(w): 1})
            rows.append([prod.get(tuple(u), 0) for u in perms])
        assert r_alpha(alpha).rank == oracles.sympy_rank(rows)


@pytest.mark.parametrize("n", range(1, 5))
def test_block_scalar_exhaustive(n):
    assert filtration.verify_block_scalar(n).passed


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("suite", ["anagram", "inclusion", "bimodule", "scalar-action",
                                   "filtration", "basis", "sigma-inclusion"])
def test_suites_pass(suite, n):
    from lrmbasis.verification import run_suite
    rep = run_suite(suite, n)
    assert rep.passed, rep.to_text()
    assert rep.cases


def test_guard():
    with pytest.raises(GuardError):
        filtration.verify_filtration_equality(6)
    with pytest.raises(GuardError):
        filtration.verify_filtration_equality(7, extended=True)


def test_failure_is_reported_with_witness(monkeypatch):
    # corrupt eta: the scalar-action check must fail and stop at the first witness
    monkeypatch.setattr(filtration, "eta", lambda b, a: eta(b, a) + 1)
    rep = filtration.verify_scalar_action(3)
    assert not rep.passed
    assert len(rep.failures) == 1 and rep.cases[-1] is rep.failures[0]
    assert "not in the finer sum" in rep.failures[0].witness
    full = filtration.verify_scalar_action(3, stop_on_failure=False)
    assert len(full.failures) > 1


@pytest.mark.parametrize("n", [4, 5])
def test_random_sigma_elements(n):
    rng = random.Random(n)
    for _ in range(5):
        res = left_mult_matrix(random_sigma(n, rng))
        assert res.triangular and res.block_scalar and res.diagonal_matches


def test_set_of_clrm_consistent():
    for w in permutation_list(5):
        assert set_of(clrm_prime(w)) == {x - 1 for x in oracles.lrm_values(w) if x > 1}
