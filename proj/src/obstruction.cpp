#include "chow_obstruct/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "chow_obstruct/errors.hpp"

namespace chowob {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Algebraizable:
      return "ALGEBRAIZABLE";
    case Verdict::NotAlgebraizable:
      return "NOT_ALGEBRAIZABLE";
    case Verdict::Undetermined:
      return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

std::string decided_by_name(DecidedBy d) {
  switch (d) {
    case DecidedBy::LowerBoundQuotient:
      return "lower_bound_quotient";
    case DecidedBy::ContainingQuotient:
      return "containing_quotient";
    case DecidedBy::Nothing:
      return "none";
  }
  return "none";
}

Mod2ChowClass theta(const ChernPair& pair) {
  if (!(pair.c1.ambient() == pair.c2.ambient())) throw AmbientMismatch("c1 and c2 live on different ambients");
  if (pair.c1.degree() != 1) throw InvalidArgument("c1 must have degree 1, got " + std::to_string(pair.c1.degree()));
  if (pair.c2.degree() != 2) throw InvalidArgument("c2 must have degree 2, got " + std::to_string(pair.c2.degree()));
  return sq2(pair.c2) + reduce_mod2(cup(pair.c1, pair.c2));
}

namespace {

constexpr std::string_view kHypotheses =
    "X smooth affine 4-fold over an algebraically closed field of characteristic != 2 "
    "(recorded, not verified)";

// Quotient by a subgroup of im(i_*): the naive one, or naive + user classes declared inside the image.
PushforwardAssumption lower_bound_assumption(const PushforwardAssumption& a) {
  if (a.kind == AssumptionKind::CustomSubgroup && a.custom_direction == Containment::ContainedInImage) return a;
  return PushforwardAssumption::naive();
}

bool provides_containing_quotient(const PushforwardAssumption& a) {
  const auto c = a.containment();
  return c == Containment::ContainsImage || c == Containment::EqualsImage;
}

}  // namespace

ObstructionReport decide(const ComplementModel& model, const ChernPair& pair,
                         const PushforwardAssumption& assumption) {
  if (model.ambient().dimension() != 4)
    throw DimensionUnsupported("the rank-2 criterion is stated for 4-folds; ambient has dimension " +
                               std::to_string(model.ambient().dimension()));
  if (!assumption.applies_to(3))
    throw InapplicableAssumption("assumption " + assumption.name() + " does not apply in degree 3");
  if (!(pair.c1.ambient() == model.ambient()) || !(pair.c2.ambient() == model.ambient()))
    throw AmbientMismatch("Chern class lifts live on a different ambient");

  const Mod2ChowClass t = theta(pair);
  const IntegerVector t_coords = t.lift().coords();
  const auto naive = PushforwardAssumption::naive();

  Justification just;
  just.assumption = assumption.name();
  just.containment = assumption.containment();
  just.hypotheses = std::string(kHypotheses);
  just.sq1 = "Sq^1 = 0: " + std::string(kSq1VanishingReason);
  const auto cert1 = model.group(1, naive).certificate;
  const auto cert2 = model.group(2, naive).certificate;
  just.certificates = {cert1, cert2};
  just.lifts_unique = cert1.status == CertificateStatus::Exact && cert2.status == CertificateStatus::Exact;

  const auto lower = lower_bound_assumption(assumption);
  just.certificates.push_back(model.group(3, lower).certificate);
  GroupElement lower_image = make_element(model.group_mod2(3, lower), t_coords);
  lower_image.coords = canonical_coords(lower_image);

  ObstructionReport report{t, lower_image, lower_image, std::nullopt, Verdict::Undetermined, {}};

  if (provides_containing_quotient(assumption)) {
    const auto upper = model.group(3, assumption);
    just.certificates.push_back(upper.certificate);
    just.assumption_consistent = upper.certificate.consistent;
    GroupElement image = make_element(model.group_mod2(3, assumption), t_coords);
    image.coords = canonical_coords(image);
    report.theta_containing_image = image;
  }

  if (is_zero(lower_image)) {
    report.verdict = Verdict::Algebraizable;
    just.decided_by = DecidedBy::LowerBoundQuotient;
    just.notes.push_back("theta vanishes modulo a subgroup of im(i_*); CH^3(X)/2 is a further quotient");
  } else if (report.theta_containing_image && !is_zero(*report.theta_containing_image)) {
    if (just.assumption_consistent) {
      report.verdict = Verdict::NotAlgebraizable;
      just.decided_by = DecidedBy::ContainingQuotient;
      report.theta_image = *report.theta_containing_image;
      just.notes.push_back("theta survives modulo a subgroup asserted to contain im(i_*); "
                           "CH^3(X)/2 surjects onto that quotient");
    } else {
      just.notes.push_back("containing subgroup is inconsistent with the projection formula; "
                           "it cannot certify non-vanishing");
    }
  } else if (report.theta_containing_image) {
    just.notes.push_back("theta vanishes modulo the containing subgroup, which bounds CH^3(X)/2 from below only");
  } else {
    just.notes.push_back("theta survives the lower-bound quotient and no containing subgroup is available");
  }
  if (!just.assumption_consistent)
    just.notes.push_back("assumption " + assumption.name() + " does not contain [Z]·CH^2(Y)");
  report.justification = std::move(just);
  return report;
}

ChowClass lift_to_ambient(const ComplementModel& model, const GroupElement& e, int degree) {
  return ChowClass::from_coords(model.ambient(), degree, e.coords);
}

std::vector<ClassificationRow> classify_all(const ComplementModel& model, const PushforwardAssumption& assumption,
                                            const std::optional<ChowClass>& fixed_c1, unsigned threads) {
  const auto naive = PushforwardAssumption::naive();
  std::vector<GroupElement> c1s;
  if (fixed_c1) {
    if (fixed_c1->degree() != 1) throw InvalidArgument("fixed c1 must have degree 1");
    GroupElement e = restrict_class(model, *fixed_c1, naive);
    e.coords = canonical_coords(e);
    c1s.push_back(std::move(e));
  } else {
    c1s = enumerate_elements(model.group(1, naive).presentation);
  }
  const auto c2s = enumerate_elements(model.group(2, naive).presentation);

  std::vector<ClassificationRow> rows(c1s.size() * c2s.size());
  for (std::size_t i = 0; i < c1s.size(); ++i)
    for (std::size_t k = 0; k < c2s.size(); ++k) {
      auto& row = rows[i * c2s.size() + k];
      row.c1_index = i;
      row.c2_index = k;
      row.c1 = c1s[i];
      row.c2 = c2s[k];
    }
  if (rows.empty()) return rows;
  // Fail fast on precondition errors before spawning workers.
  (void)decide(model, {lift_to_ambient(model, rows[0].c1, 1), lift_to_ambient(model, rows[0].c2, 2)}, assumption);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
        auto& row = rows[idx];
        ChernPair pair{lift_to_ambient(model, row.c1, 1), lift_to_ambient(model, row.c2, 2)};
        row.verdict = decide(model, pair, assumption).verdict;
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = rows.size();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

long parse_preset_arg(std::string_view spec, std::string_view arg) {
  try {
    std::size_t used = 0;
    long v = std::stol(std::string(arg), &used);
    if (used != arg.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad preset argument in \"" + std::string(spec) + "\"");
  }
}

}  // namespace

Preset load_preset(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::optional<std::string_view> arg =
      colon == std::string_view::npos ? std::nullopt : std::optional(spec.substr(colon + 1));
  const AmbientSpace p4({4});

  if (name == "trento") {
    const long p = arg ? parse_preset_arg(spec, *arg) : 5;
    if (p < 5 || std::gcd(p, 6L) != 1) throw InvalidArgument("trento needs p >= 5 coprime to 6");
    const Integer d = Integer(p) * p * p;
    return {"trento", ComplementModel::from_multidegree(p4, {d}), PushforwardAssumption::naive(),
            "P^4 minus a general hypersurface of degree p^3 = " + d.get_str() + ", naive quotient only"};
  }
  if (name == "totaro48" && !arg)
    return {"totaro48", ComplementModel::from_multidegree(p4, {Integer(48)}), PushforwardAssumption::even_degree(),
            "P^4 minus a degree-48 hypersurface all of whose curves have even degree"};
  if (name == "bidegree34" && !arg)
    return {"bidegree34", ComplementModel::from_multidegree(AmbientSpace({1, 3}), {Integer(3), Integer(4)}),
            PushforwardAssumption::even_degree(),
            "P^1 x P^3 minus a bidegree (3,4) hypersurface with the even-degree curve assumption"};
  if (name == "nori") {
    if (!arg) throw ParseError("nori preset needs a degree, e.g. nori:12");
    const long d = parse_preset_arg(spec, *arg);
    if (d < 1) throw InvalidArgument("nori degree must be >= 1");
    return {"nori", ComplementModel::from_multidegree(p4, {Integer(d)}), PushforwardAssumption::nori(),
            "P^4 minus a very general degree-" + std::to_string(d) + " hypersurface, naive subgroup assumed exact"};
  }
  throw ParseError("unknown example \"" + std::string(spec) + "\" (expected trento[:p]|totaro48|bidegree34|nori:d)");
}

}  // namespace chowob
