#include "chow_obstruct/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chow_obstruct/errors.hpp"

namespace chowob {

AbelianPresentation::AbelianPresentation(std::vector<std::string> generator_names,
                                         IntegerMatrix relations)
    : names_(std::move(generator_names)), relations_(std::move(relations)) {
  if (relations_.rows() == 0) relations_ = IntegerMatrix(0, names_.size());
  if (relations_.cols() != names_.size())
    throw InvalidArgument("relation matrix has " + std::to_string(relations_.cols()) +
                          " columns but there are " + std::to_string(names_.size()) +
                          " generators");
  smith_ = smith_normal_form(relations_);
  hermite_ = hermite_normal_form(relations_);
  v_inverse_ = unimodular_inverse(smith_.v);

  std::size_t free_rank = names_.size();
  for (const auto& d : smith_.diagonal()) {
    if (d == 0) continue;
    --free_rank;
    if (d != 1) factors_.push_back(d);
  }
  factors_.insert(factors_.end(), free_rank, Integer(0));
}

Integer AbelianPresentation::smith_modulus(std::size_t i) const {
  if (i < smith_.s.rows() && i < smith_.s.cols()) return smith_.s(i, i);
  return 0;
}

IntegerVector AbelianPresentation::elementary_divisors() const {
  IntegerVector out;
  std::size_t free_rank = 0;
  for (const auto& d : factors_) {
    if (d == 0) {
      ++free_rank;
      continue;
    }
    Integer rest = d;
    for (Integer p = 2; p * p <= rest; ++p) {
      if (mpz_probab_prime_p(rest.get_mpz_t(), 30) > 0) break;
      if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) continue;
      Integer power = 1;
      while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        power *= p;
      }
      out.push_back(power);
    }
    if (rest > 1) out.push_back(rest);
  }
  std::sort(out.begin(), out.end());
  out.insert(out.end(), free_rank, Integer(0));
  return out;
}

bool AbelianPresentation::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Integer& d) { return d == 0; });
}

Integer AbelianPresentation::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer AbelianPresentation::exponent() const {
  if (!is_finite()) return 0;
  return factors_.empty() ? Integer(1) : factors_.back();
}

std::string AbelianPresentation::describe() const { return describe_factors(factors_); }

std::string describe_factors(const IntegerVector& factors) {
  std::string out;
  for (const auto& d : factors) {
    if (d == 1) continue;
    if (!out.empty()) out += " ⊕ ";
    out += d == 0 ? std::string("Z") : "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

IntegerVector normalize_factors(const IntegerVector& factors) {
  IntegerMatrix diag(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) diag(i, i) = factors[i];
  std::vector<std::string> names(factors.size());
  return AbelianPresentation(std::move(names), std::move(diag)).invariant_factors();
}

PresentationPtr make_presentation(std::vector<std::string> generator_names, IntegerMatrix relations) {
  return std::make_shared<const AbelianPresentation>(std::move(generator_names), std::move(relations));
}

GroupElement make_element(PresentationPtr group, IntegerVector coords) {
  if (!group) throw std::invalid_argument("make_element: null group");
  if (coords.size() != group->num_generators())
    throw InvalidArgument("element has " + std::to_string(coords.size()) +
                          " coordinates, group has " + std::to_string(group->num_generators()) +
                          " generators");
  return GroupElement{std::move(group), std::move(coords)};
}

GroupElement zero_element(PresentationPtr group) {
  const std::size_t n = group->num_generators();
  return make_element(std::move(group), IntegerVector(n));
}

bool is_zero(const GroupElement& e) { return lattice_contains(e.group->hermite(), e.coords); }

IntegerVector canonical_coords(const GroupElement& e) { return reduce_modulo(e.group->hermite(), e.coords); }

IntegerVector smith_coords(const GroupElement& e) {
  IntegerVector y = multiply(e.coords, e.group->smith().v);
  for (std::size_t i = 0; i < y.size(); ++i) {
    Integer d = e.group->smith_modulus(i);
    if (d != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
  }
  return y;
}

Integer element_order(const GroupElement& e) {
  IntegerVector y = smith_coords(e);
  Integer order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] == 0) continue;
    Integer d = e.group->smith_modulus(i);
    if (d == 0) return 0;
    order = lcm(order, d / gcd(y[i], d));
  }
  return order;
}

namespace {
void require_same_group(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group) throw InvalidArgument("group elements belong to different presentations");
}
}  // namespace

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  IntegerVector c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return {a.group, std::move(c)};
}

GroupElement operator-(const GroupElement& a) {
  IntegerVector c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return {a.group, std::move(c)};
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement operator*(const Integer& k, const GroupElement& a) {
  IntegerVector c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
  return {a.group, std::move(c)};
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  require_same_group(a, b);
  return is_zero(a - b);
}

PresentationPtr tensor_mod2(const AbelianPresentation& g) {
  IntegerMatrix rel = g.relations();
  const std::size_t n = g.num_generators();
  for (std::size_t i = 0; i < n; ++i) {
    IntegerVector r(n);
    r[i] = 2;
    rel.append_row(r);
  }
  return make_presentation(g.generator_names(), std::move(rel));
}

void for_each_element(const PresentationPtr& g, const std::function<void(const GroupElement&)>& fn) {
  if (!g->is_finite())
    throw InfiniteGroup("cannot enumerate " + g->describe() + ": group has a free summand");
  const std::size_t n = g->num_generators();
  std::vector<std::size_t> slots;  // Smith coordinates with modulus > 1
  for (std::size_t i = 0; i < n; ++i)
    if (g->smith_modulus(i) > 1) slots.push_back(i);

  IntegerVector digits(n);
  for (;;) {
    IntegerVector x = multiply(digits, g->smith_basis_inverse());
    GroupElement e{g, std::move(x)};
    e.coords = canonical_coords(e);
    fn(e);
    // Mixed-radix increment, last slot fastest.
    std::size_t k = slots.size();
    while (k > 0) {
      const std::size_t i = slots[k - 1];
      digits[i] += 1;
      if (digits[i] < g->smith_modulus(i)) break;
      digits[i] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

std::vector<GroupElement> enumerate_elements(const PresentationPtr& g) {
  std::vector<GroupElement> out;
  for_each_element(g, [&](const GroupElement& e) { out.push_back(e); });
  return out;
}

}  // namespace chowob

namespace chowob {

CanonicalBezout canonical_bezout(const Integer& a, const Integer& b) {
  auto [g, s, t] = extended_gcd(a, b);
  if (g == 0 || b == 0) return {g, s, t};
  // All solutions: m = s + k*(b/g).
  Integer step = abs(b / g);
  Integer m0;
  mpz_fdiv_r(m0.get_mpz_t(), s.get_mpz_t(), step.get_mpz_t());
  Integer m1 = m0 - step;
  Integer m = abs(m1) < abs(m0) ? m1 : m0;
  Integer n = (g - m * a) / b;
  return {g, m, n};
}

}  // namespace chowob
