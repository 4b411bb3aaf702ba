"""Exact computations in the descent algebra and the group algebra of S_n.

The left-to-right-minima (LRM) basis, the filtrations it induces, the Mackey
product rule for the B-basis and the Dynkin-element action on words.
"""
from .compositions import Composition, Partition, compositions_of, eta, partitions_of
from .exact_linalg import RationalMatrix, SubspaceBasis, rank, rref, span
from .filtration import SigmaElement, dimension_table, left_mult_matrix, lrm_basis
from .free_algebra import FreeAlgebraElement, dynkin, v_alpha
from .group_algebra import GroupAlgebraElement, b_element, b_product_mackey
from .kernels import BACKEND
from .permutations import Permutation, clrm_prime, lrm, lrm_prime
from .verification import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Composition", "FreeAlgebraElement", "GroupAlgebraElement", "Partition",
    "Permutation", "RationalMatrix", "SUITES", "SigmaElement", "SubspaceBasis", "b_element",
    "b_product_mackey", "clrm_prime", "compositions_of", "dimension_table", "dynkin", "eta",
    "left_mult_matrix", "lrm", "lrm_basis", "lrm_prime", "partitions_of", "rank", "rref",
    "run_suite", "span", "v_alpha",
]
