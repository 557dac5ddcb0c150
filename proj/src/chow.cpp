#include "chow_obstruct/chow.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "chow_obstruct/errors.hpp"

namespace chowob {

AmbientSpace::AmbientSpace(std::vector<int> factor_dims) : dims_(std::move(factor_dims)) {
  if (dims_.empty()) throw InvalidArgument("ambient space needs at least one factor");
  for (int n : dims_)
    if (n < 1) throw InvalidArgument("projective factor dimensions must be >= 1");
  dimension_ = std::accumulate(dims_.begin(), dims_.end(), 0);
}

std::string AmbientSpace::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims_[i]);
  }
  return out;
}

int monomial_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool is_valid_monomial(const AmbientSpace& ambient, const Monomial& m) {
  if (m.size() != ambient.num_factors()) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 || m[i] > ambient.factor_dims()[i]) return false;
  return true;
}

namespace {
void fill_basis(const std::vector<int>& dims, std::size_t i, int remaining, Monomial& cur,
                std::vector<Monomial>& out) {
  if (i + 1 == dims.size()) {
    if (remaining <= dims[i]) {
      cur[i] = remaining;
      out.push_back(cur);
    }
    return;
  }
  for (int a = std::min(remaining, dims[i]); a >= 0; --a) {
    cur[i] = a;
    fill_basis(dims, i + 1, remaining - a, cur, out);
  }
}
}  // namespace

std::vector<Monomial> monomial_basis(const AmbientSpace& ambient, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || degree > ambient.dimension()) return out;
  Monomial cur(ambient.num_factors());
  fill_basis(ambient.factor_dims(), 0, degree, cur, out);
  return out;
}

std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

ChowClass::ChowClass(AmbientSpace ambient, int degree) : ambient_(std::move(ambient)), degree_(degree) {
  if (degree < 0) throw InvalidArgument("Chow degree must be nonnegative");
}

ChowClass ChowClass::monomial(const AmbientSpace& ambient, const Monomial& m, const Integer& coeff) {
  ChowClass c(ambient, monomial_degree(m));
  c.add_term(m, coeff);
  return c;
}

ChowClass ChowClass::hyperplane(const AmbientSpace& ambient, std::size_t factor) {
  if (factor >= ambient.num_factors()) throw InvalidArgument("hyperplane index out of range");
  Monomial m(ambient.num_factors());
  m[factor] = 1;
  return monomial(ambient, m);
}

ChowClass ChowClass::from_coords(const AmbientSpace& ambient, int degree, std::span<const Integer> coords) {
  auto basis = monomial_basis(ambient, degree);
  if (coords.size() != basis.size())
    throw InvalidArgument("coordinate vector length does not match the degree-" +
                          std::to_string(degree) + " basis");
  ChowClass c(ambient, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) c.add_term(basis[i], coords[i]);
  return c;
}

Integer ChowClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

IntegerVector ChowClass::coords() const {
  auto basis = monomial_basis(ambient_, degree_);
  IntegerVector out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = coefficient(basis[i]);
  return out;
}

void ChowClass::add_term(const Monomial& m, const Integer& coeff) {
  if (m.size() != ambient_.num_factors()) throw InvalidArgument("monomial has wrong number of factors");
  if (monomial_degree(m) != degree_)
    throw InvalidArgument("monomial " + monomial_to_string(m) + " is not of degree " +
                          std::to_string(degree_));
  if (coeff == 0 || !is_valid_monomial(ambient_, m)) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {
void require_compatible(const ChowClass& a, const ChowClass& b, bool same_degree) {
  if (!(a.ambient() == b.ambient()))
    throw AmbientMismatch("classes live on P(" + a.ambient().to_string() + ") and P(" +
                          b.ambient().to_string() + ")");
  if (same_degree && a.degree() != b.degree())
    throw InvalidArgument("cannot add classes of degree " + std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()));
}
}  // namespace

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_compatible(*this, other, true);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_compatible(*this, other, true);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ChowClass operator*(const Integer& k, const ChowClass& a) {
  ChowClass out(a.ambient_, a.degree_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, k * c);
  return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.ambient_ == b.ambient_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string ChowClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = monomial_degree(m) == 0;
    if (unit)
      out += mag.get_str();
    else if (mag == 1)
      out += monomial_to_string(m);
    else
      out += mag.get_str() + "*" + monomial_to_string(m);
  }
  return out;
}

ChowClass cup(const ChowClass& a, const ChowClass& b) {
  require_compatible(a, b, false);
  ChowClass out(a.ambient(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return out;
}

IntegerMatrix divisor_multiplication_matrix(const AmbientSpace& ambient, const ChowClass& z, int j) {
  if (!(z.ambient() == ambient)) throw AmbientMismatch("divisor class lives on a different ambient");
  if (z.degree() != 1) throw InvalidArgument("divisor class must have degree 1");
  if (j < 1) throw InvalidArgument("target degree must be >= 1");
  auto source = monomial_basis(ambient, j - 1);
  auto target = monomial_basis(ambient, j);
  IntegerMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    auto image = cup(z, ChowClass::monomial(ambient, source[c])).coords();
    for (std::size_t r = 0; r < target.size(); ++r) m(r, c) = image[r];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Class literal parser.

namespace {

class ClassParser {
 public:
  ClassParser(const AmbientSpace& ambient, std::string_view text) : ambient_(ambient), text_(text) {}

  ChowClass parse(std::optional<int> degree) {
    skip_ws();
    if (at_end()) fail("empty class literal");
    std::optional<int> seen_degree;
    std::vector<std::pair<Monomial, Integer>> terms;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [m, coeff] = parse_term();
      coeff *= sign;
      const int d = monomial_degree(m);
      if (seen_degree && *seen_degree != d) fail("class literal is not homogeneous");
      // A bare "0" is degree-agnostic.
      if (!(coeff == 0 && d == 0)) seen_degree = d;
      terms.emplace_back(std::move(m), std::move(coeff));
      first = false;
      skip_ws();
    }
    if (!seen_degree) {
      if (!degree) fail("cannot infer the degree of the zero class");
      return ChowClass(ambient_, *degree);
    }
    if (degree && *degree != *seen_degree)
      fail("expected a class of degree " + std::to_string(*degree) + ", got degree " +
           std::to_string(*seen_degree));
    ChowClass out(ambient_, *seen_degree);
    for (auto& [m, c] : terms)
      if (!(c == 0 && monomial_degree(m) == 0 && *seen_degree != 0)) out.add_term(m, c);
    return out;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Integer coeff = 1;
    Monomial m(ambient_.num_factors());
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (!starts_generator()) {
        return {m, coeff};
      }
    }
    for (;;) {
      auto [factor, exponent] = parse_factor();
      m[factor] += exponent;
      have_factor = true;
      skip_ws();
      // juxtaposition ("ξτ", "3x1") multiplies like '*'
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      } else if (!starts_generator()) {
        break;
      }
    }
    if (!have_factor) fail("expected a generator");
    return {m, coeff};
  }

  std::pair<std::size_t, int> parse_factor() {
    std::size_t factor = parse_generator();
    skip_ws();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      Integer e = parse_integer();
      if (e > 1000) fail("exponent too large");
      exponent = static_cast<int>(e.get_si());
    }
    return {factor, exponent};
  }

  std::size_t parse_generator() {
    const std::size_t k = ambient_.num_factors();
    auto try_word = [&](std::string_view w) {
      if (text_.substr(pos_, w.size()) != w) return false;
      pos_ += w.size();
      return true;
    };
    if (k <= 2 && (try_word("xi") || try_word("ξ"))) return 0;
    if (k == 2 && (try_word("tau") || try_word("τ"))) return 1;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        if (k == 1) return 0;
        fail("generator 'x' is ambiguous; use x1..x" + std::to_string(k));
      }
      Integer idx = parse_integer();
      if (idx < 1 || idx > static_cast<long>(k))
        fail("generator index out of range (ambient has " + std::to_string(k) + " factors)");
      return static_cast<std::size_t>(idx.get_si() - 1);
    }
    fail("expected a generator");
  }

  bool starts_generator() const {
    if (at_end()) return false;
    const auto rest = text_.substr(pos_);
    return rest.front() == 'x' || rest.starts_with("tau") || rest.starts_with("ξ") || rest.starts_with("τ");
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("class literal \"" + std::string(text_) + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  const AmbientSpace& ambient_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ChowClass parse_class(const AmbientSpace& ambient, std::string_view text, std::optional<int> degree) {
  return ClassParser(ambient, text).parse(degree);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer list: \"" + std::string(text) + "\"");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw ParseError("not an integer list: \"" + std::string(text) + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

}  // namespace chowob
