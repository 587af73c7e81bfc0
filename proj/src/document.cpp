#include "germlab/document.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "germlab/parse.hpp"
#include "json.hpp"

namespace germlab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string field_context(const std::string& field, const Error& e) {
  return field + ": " + e.what();
}

std::vector<std::string> string_list(const ordered_json& j, const std::string& field) {
  if (!j.is_array()) fail(Errc::invalid_input, field + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(Errc::invalid_input, field + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Rational rational_entry(const ordered_json& e, const std::string& field) {
  if (e.is_number_integer()) return Rational(e.get<long>());
  if (e.is_string()) return Rational::parse(e.get<std::string>());
  fail(Errc::invalid_input, field + ": rationals must be integers or \"p/q\" strings");
}

}  // namespace

Germ InputDocument::germ() const {
  if (is_family())
    fail(Errc::invalid_input, "this command needs a germ document (no parameters)");
  return Germ(var_ring, map);
}

DeformationFamily InputDocument::family() const {
  if (!is_family())
    fail(Errc::invalid_input, "this command needs a family document (declare parameters)");
  return DeformationFamily(parameters, variables, map);
}

Arc parse_arc(const std::string& text, int dim) {
  RingPtr s_ring = Ring::make({"s"});
  std::vector<Poly> comps;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    comps.push_back(parse_poly(part, s_ring));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(comps.size()) != dim)
    fail(Errc::invalid_input, "arc needs " + std::to_string(dim) + " comma-separated components");
  return Arc(std::move(comps));
}

std::vector<std::vector<Rational>> parse_samples(const std::string& text, int k) {
  std::vector<std::vector<Rational>> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    std::string tuple = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    std::vector<Rational> point;
    size_t tstart = 0;
    while (tstart <= tuple.size()) {
      size_t comma = tuple.find(',', tstart);
      std::string part = tuple.substr(tstart, comma == std::string::npos ? std::string::npos : comma - tstart);
      part.erase(std::remove_if(part.begin(), part.end(), ::isspace), part.end());
      point.push_back(Rational::parse(part));
      if (comma == std::string::npos) break;
      tstart = comma + 1;
    }
    if (static_cast<int>(point.size()) != k)
      fail(Errc::invalid_input, "sample tuple needs " + std::to_string(k) + " entries");
    out.push_back(std::move(point));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (out.empty()) fail(Errc::invalid_input, "empty sample list");
  return out;
}

InputDocument parse_input(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::invalid_input, std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(Errc::invalid_input, "top-level JSON value must be an object");

  static const std::set<std::string> known = {"variables", "parameters", "map",
                                              "arcs",      "h",          "samples"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) fail(Errc::invalid_input, "unknown field '" + key + "'");

  InputDocument doc;
  if (!j.contains("variables")) fail(Errc::invalid_input, "missing 'variables'");
  doc.variables = string_list(j["variables"], "variables");
  if (j.contains("parameters")) doc.parameters = string_list(j["parameters"], "parameters");
  if (!j.contains("map")) fail(Errc::invalid_input, "missing 'map'");
  doc.map_text = string_list(j["map"], "map");

  if (doc.map_text.size() != doc.variables.size())
    fail(Errc::invalid_input, "'map' must list exactly one polynomial per variable (got " +
                                  std::to_string(doc.map_text.size()) + " for " +
                                  std::to_string(doc.variables.size()) + " variables)");

  doc.var_ring = Ring::make(doc.variables);
  if (doc.is_family()) {
    std::vector<std::string> all = doc.parameters;
    all.insert(all.end(), doc.variables.begin(), doc.variables.end());
    doc.full_ring = Ring::make(std::move(all));
  } else {
    doc.full_ring = doc.var_ring;
  }

  for (size_t i = 0; i < doc.map_text.size(); ++i) {
    try {
      doc.map.push_back(parse_poly(doc.map_text[i], doc.full_ring));
    } catch (const Error& e) {
      fail(Errc::invalid_input, field_context("map[" + std::to_string(i) + "]", e));
    }
  }

  if (j.contains("h")) {
    auto hs = string_list(j["h"], "h");
    for (size_t i = 0; i < hs.size(); ++i) {
      try {
        doc.h_list.push_back(parse_poly(hs[i], doc.var_ring));
      } catch (const Error& e) {
        fail(Errc::invalid_input, field_context("h[" + std::to_string(i) + "]", e));
      }
    }
  }

  if (j.contains("arcs")) {
    auto arcs = string_list(j["arcs"], "arcs");
    for (size_t i = 0; i < arcs.size(); ++i) {
      try {
        doc.arcs.push_back(parse_arc(arcs[i], static_cast<int>(doc.variables.size())));
      } catch (const Error& e) {
        fail(Errc::invalid_input, field_context("arcs[" + std::to_string(i) + "]", e));
      }
    }
  }

  if (j.contains("samples")) {
    const auto& s = j["samples"];
    if (!s.is_array()) fail(Errc::invalid_input, "samples: expected an array of tuples");
    for (const auto& tup : s) {
      if (!tup.is_array()) fail(Errc::invalid_input, "samples: expected an array of tuples");
      std::vector<Rational> point;
      for (const auto& e : tup) point.push_back(rational_entry(e, "samples"));
      if (point.size() != doc.parameters.size())
        fail(Errc::invalid_input, "samples: tuple arity does not match the parameter count");
      doc.samples.push_back(std::move(point));
    }
  }

  return doc;
}

namespace {

ordered_json polygon_json(const NewtonPolygon& p) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& [x, y] : p.vertices()) j["vertices"].push_back({x, y});
  j["edges"] = ordered_json::array();
  for (const auto& inc : p.edge_inclinations()) {
    ordered_json e;
    e["inclination"] = inc.str();
    j["edges"].push_back(e);
  }
  return j;
}

ordered_json monomial_strings(const std::vector<Monomial>& monos, const RingPtr& ring) {
  ordered_json out = ordered_json::array();
  for (const auto& m : monos)
    out.push_back(poly_to_string(Poly::from_terms(ring, {{m, Rational(1)}})));
  return out;
}

ordered_json tuple_json(const std::vector<Rational>& t) {
  ordered_json out = ordered_json::array();
  for (const auto& r : t) out.push_back(r.str());
  return out;
}

ordered_json status_json(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return true;
    case CheckStatus::violated:
      return false;
    default:
      return "NOT_APPLICABLE";
  }
}

std::vector<std::vector<Rational>> effective_samples(const InputDocument& doc,
                                                     const DispatchOptions& options, int k) {
  std::vector<std::vector<Rational>> pts;
  if (options.samples) {
    pts = parse_samples(*options.samples, k);
  } else if (!doc.samples.empty()) {
    pts = doc.samples;
  } else {
    pts = default_samples(k);
  }
  if (options.random_samples) {
    if (!options.seed)
      fail(Errc::invalid_input, "randomized sampling requires an explicit --seed");
    std::mt19937 rng(*options.seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int i = 0; i < *options.random_samples; ++i) {
      std::vector<Rational> point;
      for (int c = 0; c < k; ++c) point.push_back(Rational(num(rng), den(rng)));
      pts.push_back(std::move(point));
    }
  }
  return pts;
}

std::vector<Poly> effective_h(const InputDocument& doc, const DispatchOptions& options,
                              bool required) {
  std::vector<Poly> hs;
  if (options.h) {
    hs.push_back(parse_poly(*options.h, doc.var_ring));
  } else if (!doc.h_list.empty()) {
    hs = doc.h_list;
  } else if (required) {
    fail(Errc::invalid_input, "this command needs --h or an 'h' entry in the document");
  }
  return hs;
}

ordered_json charpoly_json(const CharPoly& cp, const Poly& h) {
  ordered_json j;
  j["h"] = poly_to_string(h);
  j["m0"] = cp.full_degree();
  j["minimal_degree"] = cp.min_degree();
  j["power"] = cp.power();
  j["exact"] = cp.exact();
  if (!cp.exact()) j["truncation"] = cp.truncation();
  j["minimal_polynomial"] = poly_to_string(cp.q_as_poly());
  if (cp.power() > 1 && cp.exact())
    j["characteristic_polynomial"] = poly_to_string(cp.p_as_poly());
  else
    j["characteristic_polynomial"] = j["minimal_polynomial"];
  ordered_json coeffs = ordered_json::array();
  for (const auto& a : cp.coefficients()) coeffs.push_back(poly_to_string(a));
  j["coefficients"] = coeffs;
  return j;
}

ordered_json run_multiplicity(const InputDocument& doc) {
  Germ f = doc.germ();
  MultiplicityReport rep = multiplicity(f);
  ordered_json j;
  j["m0"] = rep.m0;
  j["leading_ideal"] = monomial_strings(rep.leading_ideal, f.ring());
  return j;
}

ordered_json run_exponent(const InputDocument& doc) {
  Germ f = doc.germ();
  ExponentReport rep = exponent_report(f);
  ordered_json j;
  j["l0"] = rep.l0.str();
  ordered_json per;
  for (int i = 0; i < f.dim(); ++i)
    per[f.ring()->name(i)] = rep.per_coordinate[i].value.str();
  j["per_coordinate"] = per;
  j["m0"] = rep.m0;
  j["l0_equals_m0"] = rep.l0_equals_m0;
  return j;
}

ordered_json run_charpoly(const InputDocument& doc, const DispatchOptions& options) {
  Germ f = doc.germ();
  std::vector<Poly> hs = effective_h(doc, options, /*required=*/true);
  MultiplicityReport mult = multiplicity(f);
  ordered_json out = ordered_json::array();
  for (const auto& h : hs)
    out.push_back(charpoly_json(characteristic_polynomial(f, h, mult, options.truncation), h));
  if (out.size() == 1) return out[0];
  ordered_json j;
  j["results"] = out;
  return j;
}

ordered_json run_polygon(const InputDocument& doc, const DispatchOptions& options) {
  Germ f = doc.germ();
  std::vector<Poly> hs = effective_h(doc, options, /*required=*/true);
  MultiplicityReport mult = multiplicity(f);
  ordered_json out = ordered_json::array();
  for (const auto& h : hs) {
    CharPoly cp = characteristic_polynomial(f, h, mult, options.truncation);
    NewtonPolygon np = newton_polygon(cp);
    ordered_json j;
    j["h"] = poly_to_string(h);
    j["m0"] = cp.full_degree();
    j["charpoly_polygon"] = polygon_json(np);
    j["relative_polygon"] = polygon_json(sigma(np));
    j["theta"] = theta(cp).str();
    j["last_edge_inclination"] = last_edge_inclination(sigma(np)).str();
    out.push_back(std::move(j));
  }
  if (out.size() == 1) return out[0];
  ordered_json j;
  j["results"] = out;
  return j;
}

ordered_json run_arc(const InputDocument& doc, const DispatchOptions& options) {
  Germ f = doc.germ();
  Arc arc = [&]() {
    if (options.arc) return parse_arc(*options.arc, f.dim());
    if (doc.arcs.size() == 1) return doc.arcs[0];
    fail(Errc::invalid_input, "this command needs --arc or exactly one 'arcs' entry");
  }();
  ArcQuotient q = arc_quotient(f, arc);
  ordered_json j;
  if (q.finite) {
    j["quotient"] = q.value.str();
    Rational l0 = lojasiewicz_exponent(f);
    j["attains_l0"] = q.value == l0;
    j["l0"] = l0.str();
  } else {
    j["quotient"] = "+inf";
    j["note"] = "composition vanishes within the arc's truncation (degree " +
                std::to_string(q.truncation_degree) + "); the quotient is only bounded below";
    j["attains_l0"] = false;
    j["l0"] = lojasiewicz_exponent(f).str();
  }
  return j;
}

ordered_json run_deform(const InputDocument& doc, const DispatchOptions& options) {
  DeformationFamily F = doc.family();
  auto pts = effective_samples(doc, options, F.param_count());

  std::vector<Poly> hs = effective_h(doc, options, /*required=*/false);
  SemicontinuityReport rep = semicontinuity_check(F, pts, hs.empty() ? nullptr : &hs);

  ordered_json j;
  j["note"] =
      "checks are exact at finitely many rational parameter samples; they exhibit consistency "
      "with the semicontinuity statements but cannot certify behavior for all parameters near 0";
  ordered_json hlist = ordered_json::array();
  for (const auto& h : rep.h_list) hlist.push_back(poly_to_string(h));
  j["h"] = hlist;
  ordered_json samples = ordered_json::array();
  for (const auto& s : rep.samples) {
    ordered_json sj;
    sj["t"] = tuple_json(s.t);
    sj["base"] = s.is_base;
    if (s.m0) {
      sj["m0"] = *s.m0;
      sj["l0"] = s.l0->str();
      sj["l0_equals_m0"] = s.l0_equals_m0;
      ordered_json exps;
      ordered_json polys;
      for (size_t i = 0; i < rep.h_list.size(); ++i) {
        std::string key = poly_to_string(rep.h_list[i]);
        exps[key] = s.rel_exponents[i].str();
        polys[key] = polygon_json(s.relative_polygons[i]);
      }
      sj["relative_exponents"] = exps;
      sj["relative_polygons"] = polys;
    } else {
      sj["m0"] = nullptr;
      sj["error"] = "NOT_FINITE";
    }
    samples.push_back(std::move(sj));
  }
  j["samples"] = samples;
  j["multiplicity_constant"] = rep.multiplicity_constant;
  j["l0_semicontinuity"] = status_json(rep.l0_semicontinuity);
  j["exponent_semicontinuity"] = status_json(rep.exponent_semicontinuity);
  j["polygon_semicontinuity"] = status_json(rep.polygon_semicontinuity);
  if (rep.nonzero_constancy) j["nonzero_constancy"] = *rep.nonzero_constancy;
  return j;
}

ordered_json run_prop23(const InputDocument& doc, const DispatchOptions& options) {
  DeformationFamily F = doc.family();
  auto pts = effective_samples(doc, options, F.param_count());
  RankCriterionReport rep = rank_criterion_check(F, pts);
  ordered_json j;
  ordered_json samples = ordered_json::array();
  for (const auto& s : rep.samples) {
    ordered_json sj;
    sj["t"] = tuple_json(s.t);
    sj["rank"] = s.rank;
    sj["m0"] = s.m0;
    sj["l0"] = std::to_string(s.m0);  // rank criterion forces l0 = m0
    samples.push_back(std::move(sj));
  }
  j["samples"] = samples;
  j["rank_hypothesis"] = true;
  j["l0_upper_semicontinuous"] = rep.upper_semicontinuous;
  return j;
}

}  // namespace

std::string run_command(const std::string& command, const InputDocument& doc,
                        const DispatchOptions& options) {
  ordered_json j;
  if (command == "multiplicity") {
    j = run_multiplicity(doc);
  } else if (command == "exponent") {
    j = run_exponent(doc);
  } else if (command == "charpoly") {
    j = run_charpoly(doc, options);
  } else if (command == "polygon") {
    j = run_polygon(doc, options);
  } else if (command == "arc") {
    j = run_arc(doc, options);
  } else if (command == "deform") {
    j = run_deform(doc, options);
  } else if (command == "prop23") {
    j = run_prop23(doc, options);
  } else {
    fail(Errc::invalid_input, "unknown command '" + command + "'");
  }
  return j.dump(2) + "\n";
}

}  // namespace germlab
