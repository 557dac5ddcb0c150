#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "chow_obstruct/integer_matrix.hpp"
#include "chow_obstruct/normal_form.hpp"

namespace chowob {

/// Finitely generated abelian group Z^n / (row span of `relations`).
///
/// Immutable after construction. The Smith and Hermite forms of the relation
/// matrix are computed once in the constructor, so every query is a pure read.
class AbelianPresentation {
 public:
  AbelianPresentation(std::vector<std::string> generator_names, IntegerMatrix relations);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const IntegerMatrix& relations() const noexcept { return relations_; }
  std::size_t num_generators() const noexcept { return names_.size(); }

  /// Nontrivial invariant factors d_1 | d_2 | ... followed by one 0 per free summand.
  const IntegerVector& invariant_factors() const noexcept { return factors_; }

  /// Prime-power decomposition of the torsion in increasing order,
  /// followed by one 0 per free summand. Z/12 gives [3, 4].
  IntegerVector elementary_divisors() const;

  bool is_finite() const;
  /// Group order; 0 when infinite.
  Integer order() const;
  /// Largest invariant factor (0 when infinite, 1 for the trivial group).
  Integer exponent() const;

  /// "Z/3 ⊕ Z/4" style; the trivial group is "0".
  std::string describe() const;

  const HermiteDecomposition& hermite() const noexcept { return hermite_; }
  const SnfDecomposition& smith() const noexcept { return smith_; }
  /// Inverse of smith().v: maps Smith coordinates back to generator coordinates.
  const IntegerMatrix& smith_basis_inverse() const noexcept { return v_inverse_; }

  /// Diagonal entry attached to Smith coordinate i (0 for free coordinates).
  Integer smith_modulus(std::size_t i) const;

 private:
  std::vector<std::string> names_;
  IntegerMatrix relations_;
  SnfDecomposition smith_;
  HermiteDecomposition hermite_;
  IntegerMatrix v_inverse_;
  IntegerVector factors_;
};

using PresentationPtr = std::shared_ptr<const AbelianPresentation>;

PresentationPtr make_presentation(std::vector<std::string> generator_names, IntegerMatrix relations);

/// Coset of `coords` in `group`. Equality is coset equality.
struct GroupElement {
  PresentationPtr group;
  IntegerVector coords;
};

GroupElement make_element(PresentationPtr group, IntegerVector coords);
GroupElement zero_element(PresentationPtr group);

bool is_zero(const GroupElement& e);
/// Least k >= 1 with k*e = 0, or 0 if e has infinite order.
Integer element_order(const GroupElement& e);
/// Unique representative of the coset (reduction modulo the Hermite basis).
IntegerVector canonical_coords(const GroupElement& e);
/// Coordinates in the Smith basis, each reduced into [0, d_i) where d_i > 0.
IntegerVector smith_coords(const GroupElement& e);

GroupElement operator+(const GroupElement& a, const GroupElement& b);
GroupElement operator-(const GroupElement& a, const GroupElement& b);
GroupElement operator-(const GroupElement& a);
GroupElement operator*(const Integer& k, const GroupElement& a);
bool operator==(const GroupElement& a, const GroupElement& b);

/// G ⊗ Z/2: same generators, relations extended by 2 * (each generator).
PresentationPtr tensor_mod2(const AbelianPresentation& g);

/// One canonical representative per element, in a fixed mixed-radix order over
/// the Smith coordinates. Throws InfiniteGroup if g has a free summand.
void for_each_element(const PresentationPtr& g, const std::function<void(const GroupElement&)>& fn);
std::vector<GroupElement> enumerate_elements(const PresentationPtr& g);

/// "Z/3 ⊕ Z/4" rendering of an arbitrary factor list (0 renders as Z, 1s skipped).
std::string describe_factors(const IntegerVector& factors);

/// Invariant factors of Z/f_1 ⊕ ... ⊕ Z/f_k (f_i >= 0), normalized as in
/// AbelianPresentation::invariant_factors.
IntegerVector normalize_factors(const IntegerVector& factors);

}  // namespace chowob

namespace chowob {

/// m*a + n*b = g = gcd(a, b) >= 0, with |m| minimal (ties resolved toward m > 0).
struct CanonicalBezout {
  Integer g;
  Integer m;
  Integer n;
};
CanonicalBezout canonical_bezout(const Integer& a, const Integer& b);

}  // namespace chowob
