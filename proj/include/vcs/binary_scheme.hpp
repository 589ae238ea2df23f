// Deterministic binary (k, n, m) threshold schemes: basis matrix pair S0
// (white pixel) and S1 (black pixel), validated by exhaustive subset
// enumeration.
#pragma once

#include "vcs/matrix.hpp"
#include "vcs/rational.hpp"
#include "vcs/report.hpp"

namespace vcs {

struct BinaryScheme {
  int k = 0;
  int n = 0;
  int m = 0;
  BooleanMatrix S0;
  BooleanMatrix S1;
  long h = 0;  // min zero count of a stacked white pixel over k-subsets
  long l = 0;  // max zero count of a stacked black pixel over k-subsets
  Rational alpha{0};
};

/// (2, n) scheme: S0 has a single all-ones last column, S1 is the identity.
/// m = n, h = n-1, l = n-2, alpha = 1/n.
BinaryScheme build_2_of_n(int n);

/// (n, n) scheme: S0 columns are the indicators of all even-cardinality
/// subsets of the share set, S1 the odd ones, both in binary-counting order.
/// m = 2^(n-1), h = 1, l = 0. max_n caps the exponential expansion.
BinaryScheme build_n_of_n(int n, int max_n = 20);

/// h = min over k-subsets of zeros in the stacked S0 rows, l = max for S1;
/// secure when every restriction to fewer than k rows is column-permutation
/// equal between S0 and S1. Valid iff h > l and secure.
ValidationReport validate_binary_scheme(const BooleanMatrix& S0, const BooleanMatrix& S1, int k);

/// Validates and assembles; throws SchemeError when the pair is not a valid
/// scheme.
BinaryScheme binary_scheme_from_matrices(BooleanMatrix S0, BooleanMatrix S1, int k);

/// True when every k-subset produces the same zero counts for both matrices
/// (the builders always do). Required by the probabilistic model.
bool is_uniform(const BinaryScheme& scheme);

}  // namespace vcs
