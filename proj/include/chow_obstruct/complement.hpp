#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow_obstruct/abelian.hpp"
#include "chow_obstruct/chow.hpp"

namespace chowob {

enum class AssumptionKind { NaiveDivisor, EvenDegree, NoriExact, CustomSubgroup };

/// How a relation subgroup S_j sits relative to im(i_*: CH^{j-1}(Z) -> CH^j(Y)).
enum class Containment { ContainedInImage, ContainsImage, EqualsImage };

struct PushforwardAssumption {
  AssumptionKind kind = AssumptionKind::NaiveDivisor;
  std::vector<ChowClass> custom_generators;  // CustomSubgroup only
  Containment custom_direction = Containment::ContainedInImage;
  std::optional<int> applicable_degree;  // nullopt: every degree

  /// S_j = [Z]·CH^{j-1}(Y); always inside im(i_*) by the projection formula.
  static PushforwardAssumption naive();
  /// Degree 3 only: <2 x1 x2^2, x2^3> on P^1 x P^3, <2 x1^3> on P^4. Asserted to contain im(i_*).
  static PushforwardAssumption even_degree();
  /// The naive subgroup is asserted to equal im(i_*).
  static PushforwardAssumption nori();
  static PushforwardAssumption custom(std::vector<ChowClass> generators, Containment direction, int degree);

  Containment containment() const;
  bool applies_to(int j) const;
  /// "naive", "even-degree", "nori", "custom"
  std::string name() const;
  /// Stable identity used as a cache key.
  std::string signature() const;
};

/// Parses naive | even-degree | nori. custom:<file> is handled by the JSON layer.
PushforwardAssumption parse_assumption_name(std::string_view name);

std::string containment_name(Containment c);

enum class CertificateStatus { Exact, UpperBoundOnly, AssumedExact, AssumedContains };

std::string status_name(CertificateStatus s);

struct ExactnessCertificate {
  int degree = 0;
  CertificateStatus status = CertificateStatus::UpperBoundOnly;
  std::string assumption;
  Containment containment = Containment::ContainedInImage;
  bool not_ample = false;
  /// For subgroups asserted to contain im(i_*): whether they contain the naive
  /// subgroup, which always lies in im(i_*). Always true otherwise.
  bool consistent = true;
  std::string note;
};

struct ComplementGroup {
  PresentationPtr presentation;
  ExactnessCertificate certificate;
};

/// X = Y \ Z with Y a product of projective spaces and Z a hypersurface of class z.
///
/// Copies share one memo table of computed groups, guarded by a mutex.
class ComplementModel {
 public:
  ComplementModel(AmbientSpace ambient, ChowClass z_class);
  static ComplementModel from_multidegree(AmbientSpace ambient, const IntegerVector& degrees);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  const ChowClass& z_class() const noexcept { return z_; }
  /// Coefficients (d_1, ..., d_k) of z.
  IntegerVector multidegree() const;
  bool is_ample() const;

  /// Rows generate [Z]·CH^{j-1}(Y) in degree-j coordinates.
  IntegerMatrix naive_relations(int j) const;

  ComplementGroup group(int j, const PushforwardAssumption& assumption) const;
  /// tensor_mod2 of group(j, assumption).presentation, memoized.
  PresentationPtr group_mod2(int j, const PushforwardAssumption& assumption) const;

 private:
  struct Cache;
  ComplementGroup compute_group(int j, const PushforwardAssumption& assumption) const;

  AmbientSpace ambient_;
  ChowClass z_;
  std::shared_ptr<Cache> cache_;
};

ComplementGroup complement_group(const ComplementModel& model, int j, const PushforwardAssumption& assumption);

/// Image of c in complement_group(model, c.degree(), assumption).
GroupElement restrict_class(const ComplementModel& model, const ChowClass& c,
                            const PushforwardAssumption& assumption);

/// True iff every naive relation in degree j lies in the subgroup generated by `rows`.
bool contains_naive_subgroup(const ComplementModel& model, int j, const IntegerMatrix& rows);

/// Closed forms for the bidegree (d1, d2) hypersurface in P^1 x P^3 against the
/// computed groups in degrees 1 and 2.
struct ClosedFormReport {
  Integer d1, d2;
  Integer g, m, n;  // m*d1 + n*d2 = g

  IntegerVector degree1_computed;
  IntegerVector degree1_stated;     // Z/d1 ⊕ Z/d2
  IntegerVector degree1_corrected;  // Z/g ⊕ Z, the cokernel of the single relation (d1, d2)
  bool degree1_matches_stated = false;
  bool degree1_matches_corrected = false;

  IntegerVector degree2_computed;
  IntegerVector degree2_stated;  // Z/g ⊕ Z/(d2^2/g)
  bool degree2_matches = false;

  /// [[1,0],[-m d2/g,1]] · [[d2,d1],[0,d2]] · [[n,-d1/g],[m,d2/g]] == diag(g, d2^2/g)
  bool identity_holds = false;
  IntegerMatrix identity_u, identity_v;
  /// Image of x1*x2 in the diagonal basis: (1, -m d2/g).
  IntegerVector xi_tau_image;
  Integer xi_tau_order_closed_form;
  Integer xi_tau_order_computed;

  ExactnessCertificate certificate1, certificate2;

  bool degree2_ok() const { return degree2_matches && identity_holds && xi_tau_order_closed_form == xi_tau_order_computed; }
};

ClosedFormReport closed_form_check(const Integer& d1, const Integer& d2);

}  // namespace chowob
