"""Doubly alternating Baxter permutations: exact counts B(m,i,j), uniform
sampling of B_2m, and the limit surface density phi/Phi."""

from dab._core import (
    brute_count_matrix,
    catalan,
    catalan_asymptotic,
    catalan_log,
    complement,
    corner_probabilities,
    count_b,
    count_b_lemma,
    count_b_recurrence,
    count_matrix,
    dyck_oracle,
    empirical_matrix,
    enumerate_dab,
    first_value_distribution,
    inflate,
    inner_antiderivative,
    inverse,
    is_alternating,
    is_baxter,
    is_dab,
    partial_convolution,
    partial_convolution_log,
    phi,
    phi_reduced,
    probability,
    probability_float,
    sample_batch,
    sample_even,
    sample_odd,
    slice_compare,
    surface_grid,
    surface_value,
)

__all__ = [
    "brute_count_matrix",
    "catalan",
    "catalan_asymptotic",
    "catalan_log",
    "complement",
    "corner_probabilities",
    "count_b",
    "count_b_lemma",
    "count_b_recurrence",
    "count_matrix",
    "dyck_oracle",
    "empirical_matrix",
    "enumerate_dab",
    "first_value_distribution",
    "inflate",
    "inner_antiderivative",
    "inverse",
    "is_alternating",
    "is_baxter",
    "is_dab",
    "partial_convolution",
    "partial_convolution_log",
    "phi",
    "phi_reduced",
    "probability",
    "probability_float",
    "sample_batch",
    "sample_even",
    "sample_odd",
    "slice_compare",
    "surface_grid",
    "surface_value",
]
