#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow_obstruct/abelian.hpp"
#include "chow_obstruct/complement.hpp"
#include "chow_obstruct/steenrod.hpp"

namespace chowob {

/// Lifts to Y of (c_1, c_2) in CH^1(X) x CH^2(X).
struct ChernPair {
  ChowClass c1;
  ChowClass c2;
};

enum class Verdict { Algebraizable, NotAlgebraizable, Undetermined };

std::string verdict_name(Verdict v);

/// Which quotient of CH^3(Y)/2 settled the verdict.
enum class DecidedBy { LowerBoundQuotient, ContainingQuotient, Nothing };

std::string decided_by_name(DecidedBy d);

struct Justification {
  std::string assumption;
  Containment containment = Containment::ContainedInImage;
  DecidedBy decided_by = DecidedBy::Nothing;
  /// Degree 1 and 2 (naive), degree 3 lower-bound quotient, then the degree-3
  /// containing quotient when the assumption provides one.
  std::vector<ExactnessCertificate> certificates;
  bool assumption_consistent = true;
  /// Degree 1 and 2 certificates are EXACT, so lifts of the topological classes are
  /// unique provided the cycle class map is an isomorphism there (assumed, not computed).
  bool lifts_unique = false;
  std::string hypotheses;
  std::string sq1;
  std::vector<std::string> notes;
};

struct ObstructionReport {
  Mod2ChowClass theta_on_y;
  /// Image in the quotient named by justification.decided_by (the lower-bound quotient
  /// when nothing decided).
  GroupElement theta_image;
  GroupElement theta_lower_image;
  std::optional<GroupElement> theta_containing_image;
  Verdict verdict = Verdict::Undetermined;
  Justification justification;
};

/// Sq^2 c_2 + c_1 ∪ c_2 mod 2, a degree-3 class on Y.
Mod2ChowClass theta(const ChernPair& pair);

/// Sound three-valued verdict: ALGEBRAIZABLE needs theta = 0 modulo a subgroup known to
/// lie in im(i_*); NOT_ALGEBRAIZABLE needs theta != 0 modulo a consistent subgroup
/// asserted to contain im(i_*). Requires dim Y = 4.
ObstructionReport decide(const ComplementModel& model, const ChernPair& pair,
                         const PushforwardAssumption& assumption);

struct ClassificationRow {
  std::size_t c1_index = 0;
  std::size_t c2_index = 0;
  GroupElement c1;  // canonical coset representatives in the naive CH^1, CH^2 models
  GroupElement c2;
  Verdict verdict = Verdict::Undetermined;
};

/// One row per element of CH^1(X) x CH^2(X) (naive models), c1-major. With `fixed_c1`
/// only that c1 coset is swept. Throws InfiniteGroup when a swept group is infinite.
/// Rows are computed on up to `threads` workers; the order does not depend on it.
std::vector<ClassificationRow> classify_all(const ComplementModel& model, const PushforwardAssumption& assumption,
                                            const std::optional<ChowClass>& fixed_c1 = std::nullopt,
                                            unsigned threads = 1);

/// Lift of a coset representative to a class on Y.
ChowClass lift_to_ambient(const ComplementModel& model, const GroupElement& e, int degree);

struct Preset {
  std::string name;
  ComplementModel model;
  PushforwardAssumption assumption;
  std::string description;
};

/// trento[:p] | totaro48 | bidegree34 | nori:d
Preset load_preset(std::string_view spec);

}  // namespace chowob
