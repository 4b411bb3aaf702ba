"""Exhaustive checks of the B-basis product rule, the Dynkin action formulas and
the LRM lemmas, plus the registry of named suites used by the CLI."""
from __future__ import annotations

import itertools
from typing import Callable

from .compositions import (are_anagrams, compositions_of, eta, partition_refines, refines,
                           strictly_partition_refines)
from .filtration import (verify_anagram_invariance, verify_basis, verify_bimodule,
                         verify_block_scalar, verify_filtration_equality,
                         verify_refinement_inclusion, verify_scalar_action,
                         verify_sigma_inclusion)
from .free_algebra import (permuted_block_product, right_action_by_algebra, v_alpha,
                           vb_equal_length_rhs, vb_rhs)
from .group_algebra import b_blocked, b_element, b_product_mackey, mackey_sum
from .permutations import (clrm_prime, compose, descent_set, inverse, lrm,
                           lrm_prime, lrm_sequence, lrm_sequence_by_recursion, permutation_list)
from .report import Report, check_guard


def verify_mackey(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """Sum of B_read(M) equals B_alpha B_beta; diagonal multiplicity is eta; B_gamma->beta factorises B_beta."""
    check_guard(n, extended)
    rep = Report("mackey", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    for alpha in comps:
        for beta in comps:
            multiset = b_product_mackey(alpha, beta)
            lhs = b_element(alpha) * b_element(beta)
            ok = lhs == mackey_sum(alpha, beta)
            ok = ok and multiset.get(beta, 0) == eta(beta, alpha)
            ok = ok and all(refines(g, beta) and partition_refines(g, alpha) for g in multiset)
            if not rep.add(f"B{alpha} B{beta}", ok,
                           f"convolution: {lhs}\nmackey multiset: {dict(multiset)}"):
                return rep
    for gamma in comps:
        for beta in comps:
            if refines(beta, gamma):
                ok = b_element(gamma) * b_blocked(gamma, beta) == b_element(beta)
                if not rep.add(f"B{beta} = B{gamma} B{gamma}->{beta}", ok):
                    return rep
    return rep


def verify_vb(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """V_beta . B_gamma against the ordered-set-partition formula, its vanishing and equal-length forms."""
    check_guard(n, extended)
    rep = Report("vb", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    for beta in comps:
        V = v_alpha(beta)
        for gamma in comps:
            lhs = right_action_by_algebra(V, b_element(gamma))
            rhs = vb_rhs(beta, gamma)
            ok = lhs == rhs
            if not partition_refines(beta, gamma):
                ok = ok and not lhs
            if len(beta) == len(gamma):
                ok = ok and lhs == vb_equal_length_rhs(beta, gamma)
            if not rep.add(f"V{beta} B{gamma}", ok, f"action: {lhs}\nformula: {rhs}"):
                return rep
    return rep


def _anagram_pairs_of_lrm(n: int):
    perms = permutation_list(n)
    comp = {w: clrm_prime(w) for w in perms}
    for w in perms:
        for u in perms:
            if are_anagrams(comp[w], comp[u]):
                yield w, u, comp[w], comp[u]


def verify_wuv(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """A word v in a permuted block product with vu = w forces chi = id, v = id, gamma = beta."""
    check_guard(n, extended)
    rep = Report("wuv", n, stop_on_failure=stop_on_failure)
    products: dict = {}
    hits = 0
    for w, u, beta, gamma in _anagram_pairs_of_lrm(n):
        p = len(beta)
        uinv = inverse(u)
        for chi in itertools.permutations(range(1, p + 1)):
            if any(beta[c - 1] != g for c, g in zip(chi, gamma)):
                continue
            key = (beta, chi)
            if key not in products:
                products[key] = permuted_block_product(beta, chi)
            # vu = w  <=>  v = w u^{-1}
            v = compose(w, uinv)
            if products[key].coefficient(tuple(v)):
                hits += 1
                ok = chi == tuple(range(1, p + 1)) and v.is_identity() and beta == gamma
                if not rep.add(f"w={w} u={u} chi={chi}", ok, f"v = {v}, beta = {beta}, gamma = {gamma}"):
                    return rep
    rep.add(f"{hits} admissible (w, u, chi, v) found", hits > 0)
    return rep


def verify_wu2(n: int, *, extended: bool = False, stop_on_failure: bool = True,
               part_b_max_n: int = 4) -> Report:
    """Coefficient of w in V_beta . (B_beta w) is 1; in V_beta . (B_gamma u) it is 0 unless beta < gamma."""
    check_guard(n, extended)
    rep = Report("wu2", n, stop_on_failure=stop_on_failure)
    perms = permutation_list(n)
    for w in perms:
        beta = clrm_prime(w)
        x = right_action_by_algebra(v_alpha(beta), b_element(beta).right_translate(w))
        if not rep.add(f"(a) w={w}", x.coefficient(tuple(w)) == 1,
                       f"coefficient {x.coefficient(tuple(w))}"):
            return rep
    if n > part_b_max_n:
        return rep
    for w in perms:
        beta = clrm_prime(w)
        V = v_alpha(beta)
        for u in perms:
            if u == w:
                continue
            gamma = clrm_prime(u)
            if strictly_partition_refines(beta, gamma):
                continue
            x = right_action_by_algebra(V, b_element(gamma).right_translate(u))
            c = x.coefficient(tuple(w))
            if not rep.add(f"(b) w={w} u={u}", c == 0, f"coefficient {c}"):
                return rep
    return rep


def verify_lrm(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """LRM statistics: inverse relation, recursion, composition length, and lexicographic triangularity."""
    check_guard(n, extended, limit=6, extended_limit=7)
    rep = Report("lrm", n, stop_on_failure=stop_on_failure)
    perms = permutation_list(n)
    for w in perms:
        winv = inverse(w)
        ok = lrm(w) == frozenset(w(i) for i in lrm(winv))
        ok = ok and lrm_sequence(w) == lrm_sequence_by_recursion(w)
        ok = ok and len(lrm(w)) == len(clrm_prime(w))
        if not rep.add(f"statistics of {w}", ok, f"LRM {sorted(lrm(w))}, LRM of inverse {sorted(lrm(winv))}"):
            return rep
    if n <= 5:
        for w in perms:
            allowed = lrm_prime(w)
            for u in perms:
                if descent_set(u) <= allowed:
                    uw = compose(u, w)
                    ok = uw <= w and ((uw == w) == u.is_identity())
                    if not rep.add(f"uw <= w for u={u}, w={w}", ok, f"uw = {uw}"):
                        return rep
    return rep


SUITES: dict[str, Callable[..., Report]] = {
    "lrm": verify_lrm,
    "mackey": verify_mackey,
    "vb": verify_vb,
    "wuv": verify_wuv,
    "wu2": verify_wu2,
    "basis": verify_basis,
    "filtration": verify_filtration_equality,
    "scalar-action": verify_scalar_action,
    "bimodule": verify_bimodule,
    "anagram": verify_anagram_invariance,
    "inclusion": verify_refinement_inclusion,
    "sigma-inclusion": verify_sigma_inclusion,
    "block-scalar": verify_block_scalar,
}


def run_suite(name: str, n: int, **kw) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](n, **kw)
