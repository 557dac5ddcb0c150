#include "chow_obstruct/json_io.hpp"

#include <cctype>
#include <fstream>

#include "chow_obstruct/errors.hpp"

namespace chowob {

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const IntegerVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json to_json(const IntegerMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(to_json(m.row_vector(r)));
  return a;
}

Json to_json(const ExactnessCertificate& c) {
  return Json{{"degree", c.degree},
              {"status", status_name(c.status)},
              {"assumption", c.assumption},
              {"containment", containment_name(c.containment)},
              {"not_ample", c.not_ample},
              {"consistent", c.consistent},
              {"note", c.note}};
}

Json to_json(const GroupElement& e) {
  return Json{{"group", e.group->describe()},
              {"generators", e.group->generator_names()},
              {"coords", to_json(canonical_coords(e))},
              {"zero", is_zero(e)},
              {"order", to_json(element_order(e))}};
}

Json to_json(const AbelianPresentation& g) {
  return Json{{"generators", g.generator_names()},
              {"relations", to_json(g.relations())},
              {"invariant_factors", to_json(g.invariant_factors())},
              {"elementary_divisors", to_json(g.elementary_divisors())},
              {"description", g.describe()},
              {"order", to_json(g.order())}};
}

Json to_json(const ObstructionReport& r) {
  const auto& j = r.justification;
  Json certs = Json::array();
  for (const auto& c : j.certificates) certs.push_back(to_json(c));
  return Json{{"theta", r.theta_on_y.to_string()},
              {"verdict", verdict_name(r.verdict)},
              {"assumption", j.assumption},
              {"containment", containment_name(j.containment)},
              {"certificates", certs},
              {"theta_image", to_json(r.theta_image)},
              {"theta_lower_image", to_json(r.theta_lower_image)},
              {"theta_containing_image", r.theta_containing_image ? to_json(*r.theta_containing_image) : Json()},
              {"decided_by", decided_by_name(j.decided_by)},
              {"assumption_consistent", j.assumption_consistent},
              {"lifts_unique", j.lifts_unique},
              {"hypotheses", j.hypotheses},
              {"sq1", j.sq1},
              {"notes", j.notes}};
}

Json to_json(const ClosedFormReport& r) {
  return Json{{"d1", to_json(r.d1)},
              {"d2", to_json(r.d2)},
              {"g", to_json(r.g)},
              {"m", to_json(r.m)},
              {"n", to_json(r.n)},
              {"degree1",
               {{"computed", describe_factors(r.degree1_computed)},
                {"stated", describe_factors(r.degree1_stated)},
                {"corrected", describe_factors(r.degree1_corrected)},
                {"matches_stated", r.degree1_matches_stated},
                {"matches_corrected", r.degree1_matches_corrected},
                {"certificate", to_json(r.certificate1)}}},
              {"degree2",
               {{"computed", describe_factors(r.degree2_computed)},
                {"stated", describe_factors(r.degree2_stated)},
                {"matches_stated", r.degree2_matches},
                {"certificate", to_json(r.certificate2)}}},
              {"snf_identity",
               {{"u", to_json(r.identity_u)}, {"v", to_json(r.identity_v)}, {"holds", r.identity_holds}}},
              {"xi_tau_image", to_json(r.xi_tau_image)},
              {"xi_tau_order", {{"closed_form", to_json(r.xi_tau_order_closed_form)},
                                {"computed", to_json(r.xi_tau_order_computed)}}}};
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("not a decimal integer: \"" + s + "\"");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ParseError("expected an integer or decimal string, got " + j.dump());
}

IntegerMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of arrays");
  std::optional<std::size_t> cols;
  std::vector<IntegerVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    if (cols && row.size() != *cols) throw ParseError("ragged matrix literal");
    cols = row.size();
    IntegerVector r;
    for (const auto& x : row) r.push_back(integer_from_json(x));
    rows.push_back(std::move(r));
  }
  return IntegerMatrix::from_rows(rows, cols.value_or(0));
}

IntegerMatrix parse_matrix(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw ParseError("matrix literal is not valid JSON: " + std::string(text));
  return matrix_from_json(j);
}

PresentationPtr presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators"))
    throw ParseError("group JSON needs a \"generators\" list");
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw ParseError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  IntegerMatrix rel = j.contains("relations") ? matrix_from_json(j.at("relations")) : IntegerMatrix(0, names.size());
  if (rel.rows() == 0) rel = IntegerMatrix(0, names.size());
  return make_presentation(std::move(names), std::move(rel));
}

PushforwardAssumption custom_assumption_from_json(const AmbientSpace& ambient, const Json& j) {
  if (!j.is_object()) throw ParseError("custom assumption must be a JSON object");
  if (!j.contains("degree") || !j.at("degree").is_number_integer())
    throw ParseError("custom assumption needs an integer \"degree\"");
  const int degree = j.at("degree").get<int>();
  const std::string dir = j.value("direction", std::string());
  Containment direction;
  if (dir == "contains_image")
    direction = Containment::ContainsImage;
  else if (dir == "contained_in_image")
    direction = Containment::ContainedInImage;
  else
    throw ParseError("custom assumption \"direction\" must be contains_image or contained_in_image");
  std::vector<ChowClass> gens;
  for (const auto& g : j.value("generators", Json::array())) {
    if (!g.is_string()) throw ParseError("custom generators must be class strings");
    gens.push_back(parse_class(ambient, g.get<std::string>(), degree));
  }
  return PushforwardAssumption::custom(std::move(gens), direction, degree);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(path + " is not valid JSON");
  return j;
}

PushforwardAssumption parse_assumption(const AmbientSpace& ambient, std::string_view text) {
  constexpr std::string_view prefix = "custom:";
  if (text.substr(0, prefix.size()) == prefix)
    return custom_assumption_from_json(ambient, read_json_file(std::string(text.substr(prefix.size()))));
  return parse_assumption_name(text);
}

}  // namespace chowob
