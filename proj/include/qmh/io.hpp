#pragma once

// JSON records for the CLI: algebra elements, Betti tables, oracle reports,
// comparisons, and the finite-dimensional demo corpus.

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmh/engine.hpp"
#include "qmh/findim.hpp"
#include "qmh/oracle.hpp"
#include "qmh/qma.hpp"

namespace qmh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// Integers as numbers, other rationals as "p/q" strings.
inline Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

/// [[exponent, coefficient], ...] in increasing exponent order.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, rational_to_json(c)}));
  return out;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), rational_from_json(t.at(1)));
  return LaurentPoly::from_terms(std::move(terms));
}

/// {"rows", "cols", "terms": [{"monomial": [[i, j, e], ...], "coeff": [...]}, ...]}
inline Json element_to_json(const NCElement& a) {
  const Signature s = a.signature();
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json mono = Json::array();
    for (std::size_t k = 0; k < m.exp.size(); ++k) {
      if (m.exp[k] == 0) continue;
      const GeneratorIndex g = generator_at(s, static_cast<int>(k));
      mono.push_back(Json::array({g.i, g.j, m.exp[k]}));
    }
    terms.push_back({{"monomial", mono}, {"coeff", laurent_to_json(c)}});
  }
  return {{"rows", s.rows}, {"cols", s.cols}, {"text", to_text(a)}, {"terms", terms}};
}

inline NCElement element_from_json(const Json& j) {
  const Signature s{j.at("rows").get<int>(), j.at("cols").get<int>()};
  NCElement out(s);
  for (const auto& t : j.at("terms")) {
    Monomial m = Monomial::one(s);
    for (const auto& f : t.at("monomial")) {
      const GeneratorIndex g{f.at(0).get<int>(), f.at(1).get<int>()};
      check_generator(s, g);
      m.exp[static_cast<std::size_t>(flat_index(s, g))] += f.at(2).get<std::uint16_t>();
    }
    out.add_term(m, laurent_from_json(t.at("coeff")));
  }
  return out;
}

inline Json betti_to_json(const BettiTable& t) {
  Json dims = Json::object();
  for (const auto& [m, d] : t.dims) dims[std::to_string(m)] = d;
  return {{"n", t.n},
          {"character", t.character},
          {"group", to_string(t.group)},
          {"provenance", to_string(t.provenance)},
          {"dims", dims}};
}

inline Provenance parse_provenance(const std::string& s) {
  if (s == "engine") return Provenance::engine;
  if (s == "oracle") return Provenance::oracle;
  if (s == "paper-figure") return Provenance::paper_figure;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

inline BettiTable betti_from_json(const Json& j) {
  BettiTable t;
  t.n = j.at("n").get<int>();
  t.character = j.at("character").get<std::vector<int>>();
  t.group = parse_group(j.at("group").get<std::string>());
  t.provenance = parse_provenance(j.at("provenance").get<std::string>());
  for (const auto& [m, d] : j.at("dims").items()) t.set(std::stoi(m), d.get<long long>());
  return t;
}

inline Json report_to_json(const HomologyReport& r) {
  Json by_cap = Json::object();
  for (const auto& [D, dims] : r.dims_by_cap) by_cap[std::to_string(D)] = dims;
  Json wit = Json::array();
  for (const auto& w : r.witnesses) wit.push_back({{"prime", w.prime}, {"q0", w.q0}, {"rank", w.rank}});
  return {{"algebra", r.algebra},
          {"coefficients", r.coefficients},
          {"pmax", r.pmax},
          {"caps", r.caps},
          {"dims", r.dims},
          {"dims_by_cap", by_cap},
          {"stable", r.stable},
          {"chain_counts", r.chain_counts},
          {"mode", to_string(r.mode)},
          {"witnesses", wit}};
}

inline Json classes_to_json(const std::vector<WedgeClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) out.push_back(c.to_string());
  return out;
}

inline Json comparison_to_json(const FigureComparison& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) rows.push_back({{"m", r.m}, {"engine", r.engine}, {"figure", r.figure}, {"diff", r.diff}});
  Json diff = Json::object();
  for (const auto& [m, d] : c.diff) diff[std::to_string(m)] = d;
  Json attributed = Json::array();
  for (const auto& s : c.attributed_to) attributed.push_back(s.to_string());
  return {{"n", c.n},
          {"group", to_string(c.group)},
          {"status", to_string(c.status)},
          {"rows", rows},
          {"diff", diff},
          {"attributed_to", attributed},
          {"attribution_verified", c.attribution_verified},
          {"note", c.note}};
}

inline Json adjudication_to_json(const Adjudication& a) {
  Json out = {{"n", a.n},
              {"character", a.character},
              {"m_max", a.m_max},
              {"oracle", report_to_json(a.oracle)},
              {"engine", a.engine},
              {"figure", a.figure ? Json(*a.figure) : Json(nullptr)},
              {"consistent_across_caps", a.consistent_across_caps},
              {"verdict", a.verdict}};
  return out;
}

inline Json cylinder_checks_to_json(const std::vector<CylinderCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back({{"cylinder", c.cylinder},
                   {"kind", c.kind},
                   {"coefficients", c.coefficients},
                   {"over_Z", c.over_Z},
                   {"over_P", c.over_P},
                   {"status", c.agree() ? "PASS" : "FAIL"}});
  return out;
}

/// Top-level record shared by every subcommand.
inline Json make_document(const std::string& command, Json params, Json results, const std::vector<std::string>& provenance) {
  return {{"tool-version", kToolVersion},
          {"command", command},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"provenance", provenance}};
}

// ---------------------------------------------------------------------------
// Demo corpus

namespace detail {

inline QVec qvec_from_json(const Json& j) {
  QVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

inline FinDimAlgebra algebra_from_json(const Json& j) {
  std::vector<std::vector<QVec>> table;
  for (const auto& row : j.at("table")) {
    std::vector<QVec> r;
    for (const auto& v : row) r.push_back(qvec_from_json(v));
    table.push_back(std::move(r));
  }
  return FinDimAlgebra(j.at("labels").get<std::vector<std::string>>(), std::move(table), qvec_from_json(j.at("unit")));
}

inline QMat qmat_from_json(const Json& j) {
  QMat m;
  for (const auto& row : j) m.push_back(qvec_from_json(row));
  return m;
}

inline FinDimModule module_from_json(const FinDimAlgebra& A, Side side, const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "regular") return regular_module(A, side);
  if (kind == "character") return character_module(A, side, qvec_from_json(j.at("values")));
  if (kind == "explicit") {
    std::vector<QMat> act;
    for (const auto& m : j.at("action")) act.push_back(qmat_from_json(m));
    return make_module(A, side, std::move(act));
  }
  throw std::invalid_argument("unknown module kind '" + kind + "'");
}

inline FinDimBimodule bimodule_from_json(const FinDimAlgebra& A, const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "regular") return regular_bimodule(A);
  if (kind == "character") return character_bimodule(A, qvec_from_json(j.at("left")), qvec_from_json(j.at("right")));
  if (kind == "explicit") {
    std::vector<QMat> l, r;
    for (const auto& m : j.at("left")) l.push_back(qmat_from_json(m));
    for (const auto& m : j.at("right")) r.push_back(qmat_from_json(m));
    return make_bimodule(A, std::move(l), std::move(r));
  }
  throw std::invalid_argument("unknown bimodule kind '" + kind + "'");
}

}  // namespace detail

inline CylinderDemo demo_from_json(const Json& j) {
  FinDimAlgebra P = detail::algebra_from_json(j.at("P"));
  CylinderDemo d{j.at("name").get<std::string>(), j.value("description", std::string()), P, {}, {}, {}};
  for (const auto& c : j.at("cylinders"))
    d.cases.push_back({c.at("label").get<std::string>(), detail::algebra_from_json(c.at("Q")),
                       AlgebraMap{detail::qmat_from_json(c.at("phi"))}});
  for (const auto& m : j.at("bimodules"))
    d.bimodules.push_back({m.at("name").get<std::string>(), detail::bimodule_from_json(P, m)});
  for (const auto& t : j.value("tor", Json::array()))
    d.tor.push_back({t.at("name").get<std::string>(), detail::module_from_json(P, Side::right, t.at("right")),
                     detail::module_from_json(P, Side::left, t.at("left"))});
  return d;
}

/// Reads `<dir>/<name>.json`.
inline CylinderDemo load_demo(const std::string& name, const std::string& dir) {
  const std::string path = dir + "/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("no demo '" + name + "' (looked for " + path + ")");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("cannot parse " + path + ": " + e.what());
  }
  return demo_from_json(j);
}

}  // namespace qmh
