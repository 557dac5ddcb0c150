#include "chow_obstruct/complement.hpp"

#include <map>
#include <mutex>

#include "chow_obstruct/errors.hpp"
#include "chow_obstruct/steenrod.hpp"

namespace chowob {

// ---------------------------------------------------------------------------
// Assumptions

PushforwardAssumption PushforwardAssumption::naive() { return {}; }

PushforwardAssumption PushforwardAssumption::even_degree() {
  PushforwardAssumption a;
  a.kind = AssumptionKind::EvenDegree;
  a.applicable_degree = 3;
  return a;
}

PushforwardAssumption PushforwardAssumption::nori() {
  PushforwardAssumption a;
  a.kind = AssumptionKind::NoriExact;
  return a;
}

PushforwardAssumption PushforwardAssumption::custom(std::vector<ChowClass> generators, Containment direction,
                                                    int degree) {
  if (direction == Containment::EqualsImage)
    throw InvalidArgument("custom subgroups are declared contains_image or contained_in_image");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw InvalidArgument("custom generator " + g.to_string() + " is not of degree " + std::to_string(degree));
  PushforwardAssumption a;
  a.kind = AssumptionKind::CustomSubgroup;
  a.custom_generators = std::move(generators);
  a.custom_direction = direction;
  a.applicable_degree = degree;
  return a;
}

Containment PushforwardAssumption::containment() const {
  switch (kind) {
    case AssumptionKind::NaiveDivisor:
      return Containment::ContainedInImage;
    case AssumptionKind::EvenDegree:
      return Containment::ContainsImage;
    case AssumptionKind::NoriExact:
      return Containment::EqualsImage;
    case AssumptionKind::CustomSubgroup:
      return custom_direction;
  }
  return Containment::ContainedInImage;
}

bool PushforwardAssumption::applies_to(int j) const { return !applicable_degree || *applicable_degree == j; }

std::string PushforwardAssumption::name() const {
  switch (kind) {
    case AssumptionKind::NaiveDivisor:
      return "naive";
    case AssumptionKind::EvenDegree:
      return "even-degree";
    case AssumptionKind::NoriExact:
      return "nori";
    case AssumptionKind::CustomSubgroup:
      return "custom";
  }
  return "naive";
}

std::string PushforwardAssumption::signature() const {
  std::string s = name();
  if (kind == AssumptionKind::CustomSubgroup) {
    s += "|" + containment_name(custom_direction) + "|" + std::to_string(applicable_degree.value_or(-1));
    for (const auto& g : custom_generators) s += "|" + g.to_string();
  }
  return s;
}

PushforwardAssumption parse_assumption_name(std::string_view name) {
  if (name == "naive") return PushforwardAssumption::naive();
  if (name == "even-degree") return PushforwardAssumption::even_degree();
  if (name == "nori") return PushforwardAssumption::nori();
  throw ParseError("unknown assumption \"" + std::string(name) + "\" (expected naive|even-degree|nori|custom:<file>)");
}

std::string containment_name(Containment c) {
  switch (c) {
    case Containment::ContainedInImage:
      return "contained_in_image";
    case Containment::ContainsImage:
      return "contains_image";
    case Containment::EqualsImage:
      return "equals_image";
  }
  return "contained_in_image";
}

std::string status_name(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Exact:
      return "EXACT";
    case CertificateStatus::UpperBoundOnly:
      return "UPPER_BOUND_ONLY";
    case CertificateStatus::AssumedExact:
      return "ASSUMED_EXACT";
    case CertificateStatus::AssumedContains:
      return "ASSUMED_CONTAINS";
  }
  return "UPPER_BOUND_ONLY";
}

// ---------------------------------------------------------------------------
// Model

struct ComplementModel::Cache {
  std::mutex mutex;
  std::map<std::pair<int, std::string>, ComplementGroup> groups;
  std::map<std::pair<int, std::string>, PresentationPtr> mod2;
};

ComplementModel::ComplementModel(AmbientSpace ambient, ChowClass z_class)
    : ambient_(std::move(ambient)), z_(std::move(z_class)), cache_(std::make_shared<Cache>()) {
  if (!(z_.ambient() == ambient_)) throw AmbientMismatch("hypersurface class lives on a different ambient");
  if (z_.degree() != 1) throw InvalidArgument("hypersurface class must have degree 1");
  for (const auto& d : multidegree())
    if (d < 0) throw InvalidArgument("hypersurface multidegree must be nonnegative");
  // Sq^2 descends to the naive quotient; asserted here rather than assumed.
  if (!check_descent(ambient_, z_, 2).holds())
    throw std::logic_error("Sq^2 descent check failed for P(" + ambient_.to_string() + ")");
}

ComplementModel ComplementModel::from_multidegree(AmbientSpace ambient, const IntegerVector& degrees) {
  if (degrees.size() != ambient.num_factors())
    throw InvalidArgument("multidegree has " + std::to_string(degrees.size()) + " entries, ambient has " +
                          std::to_string(ambient.num_factors()) + " factors");
  ChowClass z(ambient, 1);
  for (std::size_t i = 0; i < degrees.size(); ++i) z += degrees[i] * ChowClass::hyperplane(ambient, i);
  return ComplementModel(std::move(ambient), std::move(z));
}

IntegerVector ComplementModel::multidegree() const {
  IntegerVector d(ambient_.num_factors());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Monomial m(d.size());
    m[i] = 1;
    d[i] = z_.coefficient(m);
  }
  return d;
}

bool ComplementModel::is_ample() const {
  for (const auto& d : multidegree())
    if (d <= 0) return false;
  return true;
}

IntegerMatrix ComplementModel::naive_relations(int j) const {
  const std::size_t n = monomial_basis(ambient_, j).size();
  if (j < 1) return IntegerMatrix(0, n);
  return divisor_multiplication_matrix(ambient_, z_, j).transpose();
}

ComplementGroup ComplementModel::group(int j, const PushforwardAssumption& assumption) const {
  auto key = std::make_pair(j, assumption.signature());
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->groups.find(key); it != cache_->groups.end()) return it->second;
  }
  ComplementGroup g = compute_group(j, assumption);
  std::lock_guard lock(cache_->mutex);
  return cache_->groups.try_emplace(std::move(key), std::move(g)).first->second;
}

PresentationPtr ComplementModel::group_mod2(int j, const PushforwardAssumption& assumption) const {
  auto key = std::make_pair(j, assumption.signature());
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->mod2.find(key); it != cache_->mod2.end()) return it->second;
  }
  PresentationPtr p = tensor_mod2(*group(j, assumption).presentation);
  std::lock_guard lock(cache_->mutex);
  return cache_->mod2.try_emplace(std::move(key), std::move(p)).first->second;
}

bool contains_naive_subgroup(const ComplementModel& model, int j, const IntegerMatrix& rows) {
  const auto naive = model.naive_relations(j);
  const auto hnf = hermite_normal_form(rows);
  for (std::size_t r = 0; r < naive.rows(); ++r)
    if (!lattice_contains(hnf, naive.row(r))) return false;
  return true;
}

namespace {

IntegerMatrix even_degree_relations(const AmbientSpace& ambient) {
  if (ambient.factor_dims() == std::vector<int>{1, 3}) return IntegerMatrix{{2, 0}, {0, 1}};  // x1 x2^2, x2^3
  if (ambient.factor_dims() == std::vector<int>{4}) return IntegerMatrix{{2}};               // x1^3
  throw InapplicableAssumption("even-degree preset is only certified for P^1 x P^3 and P^4, not P(" +
                               ambient.to_string() + ")");
}

}  // namespace

ComplementGroup ComplementModel::compute_group(int j, const PushforwardAssumption& assumption) const {
  if (j < 0) throw InvalidArgument("Chow degree must be nonnegative");
  if (!assumption.applies_to(j))
    throw InapplicableAssumption("assumption " + assumption.name() + " applies in degree " +
                                 std::to_string(assumption.applicable_degree.value_or(-1)) + ", not " +
                                 std::to_string(j));
  const auto basis = monomial_basis(ambient_, j);
  std::vector<std::string> names;
  for (const auto& m : basis) names.push_back(monomial_to_string(m));

  const bool ample = is_ample();
  const IntegerMatrix naive = naive_relations(j);
  const bool naive_exact = j <= 2 && ambient_.dimension() >= 4 && ample;

  ExactnessCertificate cert;
  cert.degree = j;
  cert.assumption = assumption.name();
  cert.containment = assumption.containment();
  cert.not_ample = !ample;

  IntegerMatrix relations;
  switch (assumption.kind) {
    case AssumptionKind::NaiveDivisor:
      relations = naive;
      cert.status = naive_exact ? CertificateStatus::Exact : CertificateStatus::UpperBoundOnly;
      cert.note = naive_exact ? "localization sequence with i^* an isomorphism in degree j-1"
                              : "quotient by a subgroup of im(i_*); CH^j(X) is a further quotient";
      break;
    case AssumptionKind::NoriExact:
      if (!ample) throw InapplicableAssumption("nori assumption needs an ample hypersurface");
      if (j >= ambient_.dimension())
        throw InapplicableAssumption("nori assumption covers degrees below dim Y = " +
                                     std::to_string(ambient_.dimension()));
      relations = naive;
      cert.status = CertificateStatus::AssumedExact;
      cert.note = "restriction CH^{j-1}(Y) -> CH^{j-1}(Z) assumed to be an isomorphism";
      break;
    case AssumptionKind::EvenDegree:
      relations = even_degree_relations(ambient_);
      cert.status = CertificateStatus::AssumedContains;
      cert.consistent = contains_naive_subgroup(*this, j, relations);
      cert.note = cert.consistent ? "every curve on Z assumed to have even degree"
                                  : "asserted subgroup misses part of [Z]·CH^{j-1}(Y), which lies in im(i_*); "
                                    "the assumption is inconsistent for this hypersurface";
      break;
    case AssumptionKind::CustomSubgroup: {
      IntegerMatrix gens(0, basis.size());
      for (const auto& c : assumption.custom_generators) {
        if (!(c.ambient() == ambient_)) throw AmbientMismatch("custom generator lives on a different ambient");
        gens.append_row(c.coords());
      }
      if (assumption.custom_direction == Containment::ContainsImage) {
        relations = gens;
        cert.status = CertificateStatus::AssumedContains;
        cert.consistent = contains_naive_subgroup(*this, j, relations);
        cert.note = cert.consistent ? "user-supplied subgroup asserted to contain im(i_*)"
                                    : "asserted subgroup misses part of [Z]·CH^{j-1}(Y), which lies in im(i_*); "
                                      "the assumption is inconsistent for this hypersurface";
      } else {
        relations = naive;
        for (std::size_t r = 0; r < gens.rows(); ++r) relations.append_row(gens.row(r));
        cert.status = naive_exact ? CertificateStatus::Exact : CertificateStatus::UpperBoundOnly;
        cert.note = "naive subgroup joined with user-supplied classes inside im(i_*)";
      }
      break;
    }
  }
  if (!ample && cert.status == CertificateStatus::Exact) cert.status = CertificateStatus::UpperBoundOnly;
  if (!ample) cert.note += "; hypersurface not ample, closed-form guarantees void";
  if (relations.cols() != basis.size()) relations = IntegerMatrix(0, basis.size());
  return {make_presentation(std::move(names), std::move(relations)), cert};
}

ComplementGroup complement_group(const ComplementModel& model, int j, const PushforwardAssumption& assumption) {
  return model.group(j, assumption);
}

GroupElement restrict_class(const ComplementModel& model, const ChowClass& c,
                            const PushforwardAssumption& assumption) {
  if (!(c.ambient() == model.ambient())) throw AmbientMismatch("class lives on a different ambient");
  auto g = model.group(c.degree(), assumption);
  return make_element(g.presentation, c.coords());
}

// ---------------------------------------------------------------------------
// Closed forms on P^1 x P^3

ClosedFormReport closed_form_check(const Integer& d1, const Integer& d2) {
  if (d1 < 1 || d2 < 1) throw InvalidArgument("closed forms need d1, d2 >= 1");
  ClosedFormReport r;
  r.d1 = d1;
  r.d2 = d2;
  auto [g, m, n] = canonical_bezout(d1, d2);
  r.g = g;
  r.m = m;
  r.n = n;

  const AmbientSpace ambient({1, 3});
  const auto model = ComplementModel::from_multidegree(ambient, {d1, d2});
  const auto naive = PushforwardAssumption::naive();

  const auto g1 = model.group(1, naive);
  r.certificate1 = g1.certificate;
  r.degree1_computed = g1.presentation->invariant_factors();
  r.degree1_stated = normalize_factors({d1, d2});
  r.degree1_corrected = normalize_factors({g, 0});
  r.degree1_matches_stated = r.degree1_computed == r.degree1_stated;
  r.degree1_matches_corrected = r.degree1_computed == r.degree1_corrected;

  const Integer big = d2 * d2 / g;
  const auto g2 = model.group(2, naive);
  r.certificate2 = g2.certificate;
  r.degree2_computed = g2.presentation->invariant_factors();
  r.degree2_stated = normalize_factors({g, big});
  r.degree2_matches = r.degree2_computed == r.degree2_stated;

  const IntegerMatrix a = divisor_multiplication_matrix(ambient, model.z_class(), 2);
  r.identity_u = IntegerMatrix(2, 2);
  r.identity_u(0, 0) = 1;
  r.identity_u(1, 0) = -m * d2 / g;
  r.identity_u(1, 1) = 1;
  r.identity_v = IntegerMatrix(2, 2);
  r.identity_v(0, 0) = n;
  r.identity_v(0, 1) = -d1 / g;
  r.identity_v(1, 0) = m;
  r.identity_v(1, 1) = d2 / g;
  IntegerMatrix diag(2, 2);
  diag(0, 0) = g;
  diag(1, 1) = big;
  r.identity_holds = r.identity_u * a * r.identity_v == diag;

  // Column convention: x ↦ U x carries coker(A) onto coker(diag).
  r.xi_tau_image = {r.identity_u(0, 0), r.identity_u(1, 0)};
  Integer y1 = r.xi_tau_image[1];
  r.xi_tau_order_closed_form = lcm(g / gcd(Integer(1), g), big / gcd(y1, big));

  const auto xi_tau = ChowClass::monomial(ambient, {1, 1});
  r.xi_tau_order_computed = element_order(restrict_class(model, xi_tau, naive));
  return r;
}

}  // namespace chowob
