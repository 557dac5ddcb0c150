#include "chow_obstruct/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "chow_obstruct/errors.hpp"
#include "chow_obstruct/json_io.hpp"

namespace chowob::cli {
namespace {

struct Options {
  bool json = false;

  std::string matrix;

  std::string generators;
  std::string relations;
  std::string group_file;
  std::string element;
  bool mod2 = false;
  bool enumerate = false;

  std::string ambient;
  std::string degree;
  std::string assumption;
  std::string example;
  std::string a, b;
  std::string cls;
  std::string c1, c2;
  int j = 1;
  std::string format = "tsv";

  std::string d1, d2;
};

IntegerVector parse_integer_list(const std::string& text) {
  IntegerVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(integer_from_json(Json(item)));
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::string join(const IntegerVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::string element_text(const GroupElement& e) {
  std::string coords;
  for (const auto& x : canonical_coords(e)) coords += (coords.empty() ? "" : ", ") + x.get_str();
  std::string s = "(" + coords + ") in " + e.group->describe();
  return s + (is_zero(e) ? " [zero]" : " [nonzero, order " + element_order(e).get_str() + "]");
}

std::string certificate_text(const ExactnessCertificate& c) {
  std::string s = "deg" + std::to_string(c.degree) + " " + status_name(c.status) + " [" + c.assumption + "]";
  if (!c.consistent) s += " INCONSISTENT";
  if (c.not_ample) s += " NOT_AMPLE";
  return s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct ModelChoice {
  ComplementModel model;
  PushforwardAssumption assumption;
};

ModelChoice resolve_model(const Options& o) {
  if (!o.example.empty()) {
    if (!o.ambient.empty() || !o.degree.empty()) throw ParseError("--example cannot be combined with --ambient/--degree");
    Preset p = load_preset(o.example);
    auto assumption = o.assumption.empty() ? p.assumption : parse_assumption(p.model.ambient(), o.assumption);
    return {p.model, assumption};
  }
  if (o.ambient.empty() || o.degree.empty()) throw ParseError("need --ambient and --degree, or --example");
  AmbientSpace ambient(parse_int_list(o.ambient));
  auto model = ComplementModel::from_multidegree(ambient, parse_integer_list(o.degree));
  auto assumption = o.assumption.empty() ? PushforwardAssumption::naive() : parse_assumption(ambient, o.assumption);
  return {model, assumption};
}

// --- subcommands -----------------------------------------------------------

void cmd_snf(const Options& o, std::ostream& out) {
  const auto a = parse_matrix(o.matrix);
  const auto d = smith_normal_form(a);
  if (o.json) {
    emit(out, Json{{"diagonal", to_json(d.diagonal())}, {"u", to_json(d.u)}, {"s", to_json(d.s)}, {"v", to_json(d.v)}});
    return;
  }
  out << "diagonal: " << join(d.diagonal()) << '\n'
      << "u: " << d.u.to_string() << '\n'
      << "s: " << d.s.to_string() << '\n'
      << "v: " << d.v.to_string() << '\n';
}

void cmd_group(const Options& o, std::ostream& out) {
  PresentationPtr g;
  if (!o.group_file.empty()) {
    g = presentation_from_json(read_json_file(o.group_file));
  } else {
    if (o.generators.empty()) throw ParseError("need --generators (and --relations) or --file");
    std::vector<std::string> names;
    std::stringstream ss(o.generators);
    for (std::string item; std::getline(ss, item, ',');) names.push_back(item);
    IntegerMatrix rel = o.relations.empty() ? IntegerMatrix(0, names.size()) : parse_matrix(o.relations);
    if (rel.rows() == 0) rel = IntegerMatrix(0, names.size());
    g = make_presentation(std::move(names), std::move(rel));
  }
  if (o.mod2) g = tensor_mod2(*g);

  Json j = to_json(*g);
  std::optional<GroupElement> e;
  if (!o.element.empty()) {
    e = make_element(g, parse_integer_list(o.element));
    j["element"] = to_json(*e);
  }
  std::vector<GroupElement> elements;
  if (o.enumerate) {
    elements = enumerate_elements(g);
    Json list = Json::array();
    for (const auto& x : elements) list.push_back(to_json(canonical_coords(x)));
    j["elements"] = list;
  }
  if (o.json) {
    emit(out, j);
    return;
  }
  out << "group: " << g->describe() << '\n'
      << "invariant factors: " << join(g->invariant_factors()) << '\n'
      << "elementary divisors: " << join(g->elementary_divisors()) << '\n'
      << "order: " << (g->is_finite() ? g->order().get_str() : std::string("infinite")) << '\n';
  if (e) out << "element: " << element_text(*e) << '\n';
  if (o.enumerate) {
    out << "elements: " << elements.size() << '\n';
    for (const auto& x : elements) out << "  " << join(canonical_coords(x)) << '\n';
  }
}

void cmd_cup(const Options& o, std::ostream& out) {
  AmbientSpace ambient(parse_int_list(o.ambient));
  const auto a = parse_class(ambient, o.a);
  const auto b = parse_class(ambient, o.b);
  const auto c = cup(a, b);
  if (o.json) {
    emit(out, Json{{"product", c.to_string()}, {"degree", c.degree()}, {"coords", to_json(c.coords())}});
    return;
  }
  out << "product: " << c.to_string() << '\n' << "degree: " << c.degree() << '\n';
}

void cmd_complement(const Options& o, std::ostream& out) {
  auto [model, assumption] = resolve_model(o);
  const auto g = complement_group(model, o.j, assumption);
  Json j{{"ambient", model.ambient().to_string()},
         {"multidegree", to_json(model.multidegree())},
         {"degree", o.j},
         {"group", to_json(*g.presentation)},
         {"certificate", to_json(g.certificate)}};
  std::optional<GroupElement> e;
  if (!o.cls.empty()) {
    e = restrict_class(model, parse_class(model.ambient(), o.cls, o.j), assumption);
    j["restriction"] = to_json(*e);
  }
  if (o.json) {
    emit(out, j);
    return;
  }
  out << "CH^" << o.j << " model: " << g.presentation->describe() << '\n'
      << "generators: ";
  for (std::size_t i = 0; i < g.presentation->num_generators(); ++i)
    out << (i ? ", " : "") << g.presentation->generator_names()[i];
  out << '\n' << "certificate: " << certificate_text(g.certificate) << '\n';
  if (!g.certificate.note.empty()) out << "note: " << g.certificate.note << '\n';
  if (e) out << "restriction: " << element_text(*e) << '\n';
}

void cmd_sq2(const Options& o, std::ostream& out) {
  AmbientSpace ambient(parse_int_list(o.ambient));
  const auto c = parse_class(ambient, o.cls);
  const auto s = sq2(c);
  if (o.json) {
    emit(out, Json{{"input", reduce_mod2(c).to_string()}, {"sq2", s.to_string()}, {"degree", s.degree()}});
    return;
  }
  out << "sq2(" << reduce_mod2(c).to_string() << ") = " << s.to_string() << " (mod 2, degree " << s.degree() << ")\n";
}

void cmd_obstruct(const Options& o, std::ostream& out) {
  auto [model, assumption] = resolve_model(o);
  const ChernPair pair{parse_class(model.ambient(), o.c1, 1), parse_class(model.ambient(), o.c2, 2)};
  const auto r = decide(model, pair, assumption);
  if (o.json) {
    emit(out, to_json(r));
    return;
  }
  const auto& j = r.justification;
  out << "theta: " << r.theta_on_y.to_string() << '\n'
      << "verdict: " << verdict_name(r.verdict) << '\n'
      << "decided by: " << decided_by_name(j.decided_by) << '\n'
      << "theta image: " << element_text(r.theta_image) << '\n'
      << "theta lower-bound image: " << element_text(r.theta_lower_image) << '\n';
  if (r.theta_containing_image) out << "theta containing image: " << element_text(*r.theta_containing_image) << '\n';
  out << "assumption: " << j.assumption << " (" << containment_name(j.containment) << ")"
      << (j.assumption_consistent ? "" : " INCONSISTENT") << '\n'
      << "certificates:";
  for (const auto& c : j.certificates) out << "\n  " << certificate_text(c);
  out << '\n' << "lifts unique: " << (j.lifts_unique ? "yes" : "no") << '\n'
      << "hypotheses: " << j.hypotheses << '\n'
      << "sq1: " << j.sq1 << '\n';
  for (const auto& n : j.notes) out << "note: " << n << '\n';
}

void cmd_classify(const Options& o, std::ostream& out) {
  auto [model, assumption] = resolve_model(o);
  std::optional<ChowClass> fixed;
  if (!o.c1.empty()) fixed = parse_class(model.ambient(), o.c1, 1);
  const auto rows = classify_all(model, assumption, fixed, worker_threads());
  const bool as_json = o.json || o.format == "json";
  if (!as_json && o.format != "tsv") throw ParseError("--format must be tsv or json");
  if (as_json) {
    Json a = Json::array();
    for (const auto& r : rows)
      a.push_back(Json{{"c1", lift_to_ambient(model, r.c1, 1).to_string()},
                       {"c2", lift_to_ambient(model, r.c2, 2).to_string()},
                       {"c1_coords", to_json(r.c1.coords)},
                       {"c2_coords", to_json(r.c2.coords)},
                       {"verdict", verdict_name(r.verdict)}});
    emit(out, a);
    return;
  }
  out << "c1_index\tc2_index\tc1\tc2\tverdict\n";
  for (const auto& r : rows)
    out << r.c1_index << '\t' << r.c2_index << '\t' << lift_to_ambient(model, r.c1, 1).to_string() << '\t'
        << lift_to_ambient(model, r.c2, 2).to_string() << '\t' << verdict_name(r.verdict) << '\n';
}

void cmd_closed_form(const Options& o, std::ostream& out) {
  const auto r = closed_form_check(integer_from_json(Json(o.d1)), integer_from_json(Json(o.d2)));
  if (o.json) {
    emit(out, to_json(r));
    return;
  }
  out << "g = " << r.g << ", m = " << r.m << ", n = " << r.n << "  (m*d1 + n*d2 = g)\n"
      << "CH^1: computed " << describe_factors(r.degree1_computed) << "; stated "
      << describe_factors(r.degree1_stated) << (r.degree1_matches_stated ? " (match)" : " (MISMATCH)")
      << "; corrected " << describe_factors(r.degree1_corrected)
      << (r.degree1_matches_corrected ? " (match)" : " (MISMATCH)") << '\n'
      << "CH^2: computed " << describe_factors(r.degree2_computed) << "; stated "
      << describe_factors(r.degree2_stated) << (r.degree2_matches ? " (match)" : " (MISMATCH)") << '\n'
      << "SNF identity U*A*V = diag(g, d2^2/g): " << (r.identity_holds ? "holds" : "FAILS") << '\n'
      << "x1*x2 -> " << join(r.xi_tau_image) << ", order " << r.xi_tau_order_computed << " (closed form "
      << r.xi_tau_order_closed_form << ")\n";
}

}  // namespace

unsigned worker_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHOW_OBSTRUCT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
    }
  }
  return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow groups of hypersurface complements and the rank-2 algebraizability obstruction",
               "chow-obstruct"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "JSON output");

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  snf->add_option("--matrix", o.matrix, "JSON array of arrays of integers")->required();

  auto* group = app.add_subcommand("group", "Invariants of a presented abelian group");
  group->add_option("--generators", o.generators, "comma-separated generator names");
  group->add_option("--relations", o.relations, "JSON relation matrix, one row per relation");
  group->add_option("--file", o.group_file, "JSON file {\"generators\": [...], \"relations\": [[...]]}");
  group->add_option("--element", o.element, "comma-separated coordinates of an element");
  group->add_flag("--mod2", o.mod2, "tensor with Z/2 first");
  group->add_flag("--enumerate", o.enumerate, "list one representative per element");

  auto* cupc = app.add_subcommand("cup", "Cup product in the Chow ring of the ambient");
  cupc->add_option("--ambient", o.ambient, "factor dimensions, e.g. 1,3")->required();
  cupc->add_option("--a", o.a)->required();
  cupc->add_option("--b", o.b)->required();

  auto add_model_options = [&](CLI::App* sub) {
    sub->add_option("--ambient", o.ambient, "factor dimensions, e.g. 1,3");
    sub->add_option("--degree", o.degree, "hypersurface multidegree, e.g. 3,4");
    sub->add_option("--assumption", o.assumption, "naive|even-degree|nori|custom:<file>");
    sub->add_option("--example", o.example, "trento[:p]|totaro48|bidegree34|nori:d");
  };

  auto* comp = app.add_subcommand("complement", "Chow group model of the complement in one degree");
  add_model_options(comp);
  comp->add_option("--j", o.j, "Chow degree")->required();
  comp->add_option("--class", o.cls, "class on the ambient to restrict");

  auto* sq = app.add_subcommand("sq2", "Motivic Sq^2 of a class mod 2");
  sq->add_option("--ambient", o.ambient)->required();
  sq->add_option("--class", o.cls)->required();

  auto* obs = app.add_subcommand("obstruct", "Decide algebraizability of a rank-2 bundle");
  add_model_options(obs);
  obs->add_option("--c1", o.c1, "lift of c1 (degree 1)")->required();
  obs->add_option("--c2", o.c2, "lift of c2 (degree 2)")->required();

  auto* cls = app.add_subcommand("classify", "Verdicts for every (c1, c2) in CH^1 x CH^2");
  add_model_options(cls);
  cls->add_option("--c1", o.c1, "sweep only this c1 (degree 1)");
  cls->add_option("--format", o.format, "tsv|json");

  auto* cf = app.add_subcommand("closed-form", "Closed forms for a bidegree (d1,d2) hypersurface in P^1 x P^3");
  cf->add_option("--d1", o.d1)->required();
  cf->add_option("--d2", o.d2)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (snf->parsed()) cmd_snf(o, out);
    else if (group->parsed()) cmd_group(o, out);
    else if (cupc->parsed()) cmd_cup(o, out);
    else if (comp->parsed()) cmd_complement(o, out);
    else if (sq->parsed()) cmd_sq2(o, out);
    else if (obs->parsed()) cmd_obstruct(o, out);
    else if (cls->parsed()) cmd_classify(o, out);
    else if (cf->parsed()) cmd_closed_form(o, out);
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    if (o.json) emit(out, Json{{"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    err << "error (" << e.kind() << "): " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace chowob::cli
