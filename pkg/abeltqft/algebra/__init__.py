from abeltqft.algebra.intmatrix import IntMatrix, RationalMatrix, det, integer_inverse, rank, rational_inverse
from abeltqft.algebra.snf import SnfDecomposition, snf
from abeltqft.algebra.modone import ModOne
from abeltqft.algebra.cyclotomic import CyclotomicNumber, GaussianApprox, counts_to_number, root_term

__all__ = [
    "IntMatrix",
    "RationalMatrix",
    "det",
    "integer_inverse",
    "rank",
    "rational_inverse",
    "SnfDecomposition",
    "snf",
    "ModOne",
    "CyclotomicNumber",
    "GaussianApprox",
    "counts_to_number",
    "root_term",
]
