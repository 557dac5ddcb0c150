#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chow_obstruct/chow.hpp"

namespace chowob {

/// Homogeneous class in CH^*(Y)/2; the monomials with coefficient 1.
class Mod2ChowClass {
 public:
  using Monomials = std::set<Monomial, MonomialOrder>;

  Mod2ChowClass(AmbientSpace ambient, int degree);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  int degree() const noexcept { return degree_; }
  const Monomials& monomials() const noexcept { return monomials_; }
  bool is_zero() const noexcept { return monomials_.empty(); }

  /// Adds m (mod 2). Monomials outside the truncation bounds are dropped.
  void toggle(const Monomial& m);

  /// Integer lift with coefficients in {0, 1}.
  ChowClass lift() const;

  Mod2ChowClass& operator+=(const Mod2ChowClass& other);
  friend Mod2ChowClass operator+(Mod2ChowClass a, const Mod2ChowClass& b) { return a += b; }
  friend bool operator==(const Mod2ChowClass&, const Mod2ChowClass&) = default;

  std::string to_string() const;

 private:
  AmbientSpace ambient_;
  int degree_;
  Monomials monomials_;
};

Mod2ChowClass reduce_mod2(const ChowClass& c);
Mod2ChowClass cup(const Mod2ChowClass& a, const Mod2ChowClass& b);

/// Sq^2 of a single monomial: sum_i a_i * x_i^{a_i+1} * prod_{j != i} x_j^{a_j} mod 2.
Mod2ChowClass sq2_monomial(const AmbientSpace& ambient, const Monomial& m);

/// Additive extension of sq2_monomial; raises degree by one.
Mod2ChowClass sq2(const Mod2ChowClass& c);
Mod2ChowClass sq2(const ChowClass& c);

/// Sq^1 is identically zero on these classes.
inline constexpr std::string_view kSq1VanishingReason = "H^{3,1}(W,Z) vanishes for any smooth scheme W";

/// Result of checking that Sq^2 maps [Z]·CH^{j-1}(Y) into [Z]·CH^j(Y) mod 2.
struct DescentReport {
  struct Generator {
    Monomial alpha;        // r = [Z] * alpha
    Mod2ChowClass sq2_r;   // Sq^2(r mod 2)
    ChowClass cofactor;    // [Z]*alpha + Sq^2(alpha); Sq^2(r) = [Z] * cofactor mod 2
    bool symbolic_ok;      // Sq^2(r) == [Z] * cofactor mod 2
    bool lattice_ok;       // Sq^2(r) lies in ([Z]·CH^j(Y) + 2 CH^{j+1}(Y))
  };
  int degree = 2;
  std::vector<Generator> generators;

  bool holds() const;
};

/// Checks the descent property for relation generators in degree j (default 2).
DescentReport check_descent(const AmbientSpace& ambient, const ChowClass& z, int j = 2);

}  // namespace chowob
