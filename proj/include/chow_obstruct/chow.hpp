#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chow_obstruct/integer_matrix.hpp"

namespace chowob {

/// P^{n_1} x ... x P^{n_k}, with Chow ring Z[x_1..x_k]/(x_i^{n_i+1}).
class AmbientSpace {
 public:
  explicit AmbientSpace(std::vector<int> factor_dims);

  const std::vector<int>& factor_dims() const noexcept { return dims_; }
  std::size_t num_factors() const noexcept { return dims_.size(); }
  int dimension() const noexcept { return dimension_; }

  /// "1,3"
  std::string to_string() const;

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  std::vector<int> dims_;
  int dimension_ = 0;
};

/// Exponent vector (a_1, ..., a_k).
using Monomial = std::vector<int>;

/// Basis order: descending lexicographic, so the first factor's power leads
/// (on P^1 x P^3 in degree 2 this is x1*x2 before x2^2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

int monomial_degree(const Monomial& m);
bool is_valid_monomial(const AmbientSpace& ambient, const Monomial& m);

/// All monomials of the given degree within the truncation bounds, in basis order.
std::vector<Monomial> monomial_basis(const AmbientSpace& ambient, int degree);

/// "x1*x2^2", "1" for the unit.
std::string monomial_to_string(const Monomial& m);

/// Homogeneous class of fixed codimension, stored sparsely (nonzero terms only).
class ChowClass {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  ChowClass(AmbientSpace ambient, int degree);

  static ChowClass monomial(const AmbientSpace& ambient, const Monomial& m, const Integer& coeff = 1);
  /// Hyperplane class x_i (0-based factor index).
  static ChowClass hyperplane(const AmbientSpace& ambient, std::size_t factor);
  static ChowClass from_coords(const AmbientSpace& ambient, int degree, std::span<const Integer> coords);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  /// Coefficients in monomial_basis(ambient, degree) order.
  IntegerVector coords() const;

  /// Adds coeff * m. Monomials outside the truncation bounds are dropped.
  void add_term(const Monomial& m, const Integer& coeff);

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const Integer& k, const ChowClass& a);
  friend bool operator==(const ChowClass& a, const ChowClass& b);

  /// "3*x1 + 4*x2"; "0" for the zero class.
  std::string to_string() const;

 private:
  AmbientSpace ambient_;
  int degree_;
  Terms terms_;
};

ChowClass cup(const ChowClass& a, const ChowClass& b);

/// Matrix of (z ∪ -) from degree j-1 to degree j. Rows index the degree-j basis,
/// columns the degree-(j-1) basis.
IntegerMatrix divisor_multiplication_matrix(const AmbientSpace& ambient, const ChowClass& z, int j);

/// Parses "3*x1 + 4*x2", "x1*x2^2", "-2*x1^2", "0". x_i is the i-th factor's hyperplane
/// class; xi/tau (and ξ/τ) alias x1/x2 when there are at most two factors. The literal
/// "0" needs `degree`; otherwise the degree is inferred and checked against it.
ChowClass parse_class(const AmbientSpace& ambient, std::string_view text,
                      std::optional<int> degree = std::nullopt);

/// Parses "1,3" style comma-separated positive integers.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace chowob
