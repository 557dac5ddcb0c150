#include "chow_obstruct/steenrod.hpp"

#include <algorithm>

#include "chow_obstruct/errors.hpp"
#include "chow_obstruct/normal_form.hpp"

namespace chowob {

Mod2ChowClass::Mod2ChowClass(AmbientSpace ambient, int degree)
    : ambient_(std::move(ambient)), degree_(degree) {
  if (degree < 0) throw InvalidArgument("Chow degree must be nonnegative");
}

void Mod2ChowClass::toggle(const Monomial& m) {
  if (monomial_degree(m) != degree_) throw InvalidArgument("monomial degree mismatch in mod-2 class");
  if (!is_valid_monomial(ambient_, m)) return;
  if (auto it = monomials_.find(m); it != monomials_.end())
    monomials_.erase(it);
  else
    monomials_.insert(m);
}

ChowClass Mod2ChowClass::lift() const {
  ChowClass out(ambient_, degree_);
  for (const auto& m : monomials_) out.add_term(m, 1);
  return out;
}

Mod2ChowClass& Mod2ChowClass::operator+=(const Mod2ChowClass& other) {
  if (!(ambient_ == other.ambient_)) throw AmbientMismatch("mod-2 classes on different ambients");
  if (degree_ != other.degree_) throw InvalidArgument("cannot add mod-2 classes of different degree");
  for (const auto& m : other.monomials_) toggle(m);
  return *this;
}

std::string Mod2ChowClass::to_string() const { return lift().to_string(); }

Mod2ChowClass reduce_mod2(const ChowClass& c) {
  Mod2ChowClass out(c.ambient(), c.degree());
  for (const auto& [m, coeff] : c.terms())
    if (mpz_odd_p(coeff.get_mpz_t())) out.toggle(m);
  return out;
}

Mod2ChowClass cup(const Mod2ChowClass& a, const Mod2ChowClass& b) {
  return reduce_mod2(cup(a.lift(), b.lift()));
}

Mod2ChowClass sq2_monomial(const AmbientSpace& ambient, const Monomial& m) {
  if (!is_valid_monomial(ambient, m)) throw InvalidArgument("invalid monomial " + monomial_to_string(m));
  Mod2ChowClass out(ambient, monomial_degree(m) + 1);
  // Sq^2(x^a) = a x^{a+1} for a hyperplane class x; the Cartan formula with Sq^1 = 0
  // spreads this over the factors.
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] % 2 == 0) continue;
    Monomial t = m;
    ++t[i];
    out.toggle(t);
  }
  return out;
}

Mod2ChowClass sq2(const Mod2ChowClass& c) {
  Mod2ChowClass out(c.ambient(), c.degree() + 1);
  for (const auto& m : c.monomials()) out += sq2_monomial(c.ambient(), m);
  return out;
}

Mod2ChowClass sq2(const ChowClass& c) { return sq2(reduce_mod2(c)); }

bool DescentReport::holds() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Generator& g) { return g.symbolic_ok && g.lattice_ok; });
}

DescentReport check_descent(const AmbientSpace& ambient, const ChowClass& z, int j) {
  if (z.degree() != 1) throw InvalidArgument("descent check needs a divisor class");
  if (!(z.ambient() == ambient)) throw AmbientMismatch("divisor class lives on a different ambient");
  DescentReport report;
  report.degree = j;

  // Lattice ([Z]·CH^j + 2·CH^{j+1}) in degree-(j+1) coordinates.
  const auto target = monomial_basis(ambient, j + 1);
  IntegerMatrix lattice = divisor_multiplication_matrix(ambient, z, j + 1).transpose();
  for (std::size_t i = 0; i < target.size(); ++i) {
    IntegerVector r(target.size());
    r[i] = 2;
    lattice.append_row(r);
  }
  const auto hnf = hermite_normal_form(lattice);

  for (const auto& alpha : monomial_basis(ambient, j - 1)) {
    const ChowClass a = ChowClass::monomial(ambient, alpha);
    const ChowClass r = cup(z, a);
    Mod2ChowClass s = sq2(r);
    ChowClass cofactor = cup(z, a) + sq2(a).lift();
    const bool symbolic_ok = s == reduce_mod2(cup(z, cofactor));
    const bool lattice_ok = lattice_contains(hnf, s.lift().coords());
    report.generators.push_back({alpha, std::move(s), std::move(cofactor), symbolic_ok, lattice_ok});
  }
  return report;
}

}  // namespace chowob
