import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from lrmbasis.compositions import are_anagrams, compositions_of, eta, partition_refines, refines
from lrmbasis.group_algebra import (DegreeMismatch, GroupAlgebraElement, anagram_conjugator,
                                    b_blocked, b_element, b_element_of_set, b_product_mackey,
                                    convolve, mackey_sum)
from lrmbasis.permutations import Permutation, permutation_list

P = Permutation.parse
G = GroupAlgebraElement


def as_dict(a):
    return {tuple(w): c for w, c in a.items()}


@st.composite
def elements(draw, n, integral=True):
    perms = permutation_list(n)
    idx = draw(st.lists(st.integers(0, len(perms) - 1), max_size=8))
    if integral:
        coeffs = st.integers(-5, 5)
    else:
        coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return G(n, {perms[i]: draw(coeffs) for i in idx})


def test_linear_examples():
    a = b_element((2, 1))
    assert a + G.zero(3) == a
    assert a.scale(0) == G.zero(3)
    assert a.coefficient(P("231")) == 1
    assert a.coefficient(P("213")) == 0
    assert G(3, {P("123"): 0}) == G.zero(3) and len(G(3, {P("123"): 0})) == 0
    with pytest.raises(DegreeMismatch):
        a + b_element((2,))


def test_convolve_examples():
    u, v = P("231"), P("213")
    assert convolve(G.basis(u), G.basis(v)) == G.basis(u * v)
    b11 = b_element((1, 1))
    assert convolve(b11, b11) == b11.scale(2)
    a = G(2, {P("12"): 3, P("21"): Fraction(-1, 2)})
    assert convolve(b_element((2,)), a) == a
    with pytest.raises(DegreeMismatch):
        convolve(b11, b_element((3,)))


def test_b_element_examples():
    assert as_dict(b_element((3, 1))) == {(1, 2, 3, 4): 1, (1, 2, 4, 3): 1, (1, 3, 4, 2): 1, (2, 3, 4, 1): 1}
    assert str(b_element((3, 1))) == "1234 + 1243 + 1342 + 2341"
    assert b_element((4,)) == G.identity(4)
    assert str(b_element((2, 1))) == "123 + 132 + 231"
    assert b_element_of_set({2}, 3) == b_element((2, 1))


def test_mackey_examples():
    assert b_product_mackey((1, 1), (1, 1)) == {(1, 1): 2}
    assert b_product_mackey((2,), (1, 1)) == {(1, 1): 1}
    assert mackey_sum((2, 1), (2, 1)) == b_element((2, 1)) * b_element((2, 1))


def test_b_blocked_examples():
    assert b_blocked((3,), (2, 1)) == b_element((2, 1))
    x = b_blocked((2, 2), (1, 1, 2))
    assert len(x) == 2
    assert b_element((2, 2)) * x == b_element((1, 1, 2))
    assert b_element((2, 2)) * b_blocked((2, 2), (2, 2)) == b_element((2, 2))
    with pytest.raises(ValueError):
        b_blocked((1, 1, 2), (2, 2))


def test_anagram_conjugator_examples():
    assert anagram_conjugator((2, 1), (2, 1)).is_identity()
    w = anagram_conjugator((1, 2), (2, 1))
    assert b_element((2, 1)).right_translate(w) == b_element((1, 2))
    w = anagram_conjugator((2, 1, 1), (1, 2, 1))
    assert b_element((1, 2, 1)) * G.basis(w) == b_element((2, 1, 1))
    with pytest.raises(ValueError):
        anagram_conjugator((2, 2), (3, 1))


def test_printing_and_json():
    a = G(3, {P("123"): 2, P("132"): -1, P("231"): Fraction(1, 3)})
    assert str(a) == "2·123 - 132 + 1/3·231"
    assert str(G.zero(3)) == "0"
    assert G.from_json(3, a.to_json()) == a


@pytest.mark.parametrize("n", range(1, 5))
def test_b_element_matches_descent_filter(n):
    for alpha in compositions_of(n):
        assert as_dict(b_element(alpha)) == oracles.b_dict(alpha)


@pytest.mark.parametrize("n", range(1, 6))
def test_mackey_formula_exhaustive(n):
    comps = compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        multiset = b_product_mackey(alpha, beta)
        lhs = b_element(alpha) * b_element(beta)
        assert lhs == mackey_sum(alpha, beta)
        assert multiset.get(beta, 0) == eta(beta, alpha)
        for gamma in multiset:
            assert refines(gamma, beta) and partition_refines(gamma, alpha)


@pytest.mark.parametrize("n", range(1, 5))
def test_mackey_against_bruteforce_convolution(n):
    comps = compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        conv = oracles.convolve(oracles.b_dict(alpha), oracles.b_dict(beta))
        assert as_dict(mackey_sum(alpha, beta)) == conv


@pytest.mark.parametrize("n", range(1, 6))
def test_b_blocked_factorisation(n):
    comps = compositions_of(n)
    for gamma, beta in itertools.product(comps, repeat=2):
        if refines(beta, gamma):
            assert b_element(gamma) * b_blocked(gamma, beta) == b_element(beta)


@pytest.mark.parametrize("n", range(1, 6))
def test_anagram_conjugator_exhaustive(n):
    comps = compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        if are_anagrams(alpha, beta):
            w = anagram_conjugator(alpha, beta)
            assert b_element(beta).right_translate(w) == b_element(alpha)


@given(st.data())
def test_prop_convolution_matches_oracle(data):
    n = data.draw(st.integers(1, 4))
    a = data.draw(elements(n, integral=False))
    b = data.draw(elements(n, integral=False))
    assert as_dict(a * b) == oracles.convolve(as_dict(a), as_dict(b))


@given(st.data())
def test_prop_ring_axioms(data):
    n = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(elements(n)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert G.identity(n) * a == a == a * G.identity(n)
    assert a - a == G.zero(n)


@given(st.data())
def test_prop_json_round_trip(data):
    n = data.draw(st.integers(1, 5))
    a = data.draw(elements(n, integral=False))
    assert G.from_json(n, a.to_json()) == a
    assert G.from_vector(n, a.to_vector()) == a


@given(st.data())
def test_prop_large_products_use_kernel_consistently(data):
    # dense integral operands take the compiled path; compare with the oracle
    n = data.draw(st.sampled_from([3, 4]))
    alpha = data.draw(st.sampled_from(compositions_of(n)))
    beta = data.draw(st.sampled_from(compositions_of(n)))
    k = data.draw(st.integers(-3, 3))
    a = b_element(alpha).scale(k) + G.sum_of(n, permutation_list(n))
    b = b_element(beta) + G.sum_of(n, permutation_list(n))
    assert as_dict(a * b) == oracles.convolve(as_dict(a), as_dict(b))
