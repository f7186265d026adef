"""Exact counting, enumeration and classification of square 0/1 matrices
with k ones in every row and column."""

from ._lambdakit import (
    BinaryMatrix,
    LambdaError,
    class_counts,
    classify_plus3,
    complement,
    count_lambda,
    count_split,
    dp_count,
    dp_count_from,
    dp_table,
    enumerate_lambda,
    is_lambda,
    lambda2_anand,
    lambda2_good,
    lambda2_partition_sum,
    lambda2_plus,
    lambda2_system,
    lambda3_explicit,
    lambda_minus_from_plus,
    lambda_plus_from_total,
    parse_matrix,
    parse_matrix_record,
    rho_class_generate,
    rho_class_stats,
    serialize_matrix,
    theorem4_check,
    tilde_submatrix,
    transpose,
)

__all__ = [
    "BinaryMatrix",
    "LambdaError",
    "class_counts",
    "classify_plus3",
    "complement",
    "count_lambda",
    "count_split",
    "dp_count",
    "dp_count_from",
    "dp_table",
    "enumerate_lambda",
    "is_lambda",
    "lambda2_anand",
    "lambda2_good",
    "lambda2_partition_sum",
    "lambda2_plus",
    "lambda2_system",
    "lambda3_explicit",
    "lambda_minus_from_plus",
    "lambda_plus_from_total",
    "parse_matrix",
    "parse_matrix_record",
    "rho_class_generate",
    "rho_class_stats",
    "serialize_matrix",
    "theorem4_check",
    "tilde_submatrix",
    "transpose",
]
