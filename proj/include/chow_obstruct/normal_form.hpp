#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chow_obstruct/integer_matrix.hpp"

namespace chowob {

/// u * a * v = s with u, v unimodular and s diagonal, d_1 | d_2 | ... | d_r,
/// all d_i >= 0 and zeros trailing.
struct SnfDecomposition {
  IntegerMatrix u;
  IntegerMatrix s;
  IntegerMatrix v;

  /// Main diagonal of s, length min(rows, cols).
  IntegerVector diagonal() const;
};

SnfDecomposition smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form: u * a = h, det(u) = +-1, h in row echelon form
/// with positive pivots and the entries above each pivot reduced into [0, pivot).
/// Zero rows sit at the bottom.
struct HermiteDecomposition {
  IntegerMatrix h;
  IntegerMatrix u;
  std::vector<std::size_t> pivot_cols;  // pivot column of row k, for k < rank

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

HermiteDecomposition hermite_normal_form(const IntegerMatrix& a);

/// Canonical representative of v modulo the row lattice of `hnf.h`. Two vectors give
/// the same result iff their difference lies in the lattice.
IntegerVector reduce_modulo(const HermiteDecomposition& hnf, std::span<const Integer> v);

/// True iff v lies in the integer row span of `basis`.
bool lattice_contains(const IntegerMatrix& basis, std::span<const Integer> v);
bool lattice_contains(const HermiteDecomposition& hnf, std::span<const Integer> v);

/// Inverse of a unimodular matrix. Throws std::invalid_argument if |det| != 1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

}  // namespace chowob
