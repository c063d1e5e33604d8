// qmh: Betti tables, explicit classes, oracle runs, structural checks and
// figure comparisons for quantum matrix algebras.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qmh/qmh.hpp"

namespace {

using qmh::Json;

enum class Format { text, json, csv };

/// Usage errors map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  // shared
  std::string format = "text";
  int threads = 0;
  std::uint64_t seed = 0x5eed;
  std::string output;
  std::string data_dir = QMH_DATA_DIR;
  // problem
  int n = 0;
  int cols = 0;
  std::string character = "f-inv";
  std::string group;
  std::string solutions = "full";
  int degree = -1;
  // oracle
  std::string oracle_kind;
  int cap = -1;
  int pmax = -1;
  std::string mode = "auto";
  std::string expect;
  std::string demo = "dual-numbers";
  std::size_t max_nonzeros = 5'000'000;
  // verify
  std::string check;
  int count = 20;
  // compare
  bool adjudicate = false;
  std::string caps = "3,4";
};

struct Output {
  std::string command;
  Json params = Json::object();
  Json results = Json::object();
  std::vector<std::string> provenance;
  std::ostringstream text;
  std::ostringstream csv;
  int exit_code = 0;
};

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

std::string join(const std::vector<long long>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
  return os.str();
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? sep : "") << v[k];
  return os.str();
}

/// Named characters: eps, eta, f, f-inv; otherwise a comma-separated exponent list of length n.
qmh::Character parse_character(const std::string& text, int n) {
  if (text == "eps") return qmh::Character::epsilon(n);
  if (text == "eta") return qmh::Character::eta(n);
  if (text == "f") return qmh::Character::f(n);
  if (text == "f-inv") return qmh::Character::f_inv(n);
  const auto a = parse_int_list(text, "--character");
  if (static_cast<int>(a.size()) != n)
    throw UsageError("--character: expected " + std::to_string(n) + " exponents, got " + std::to_string(a.size()));
  return qmh::Character::diagonal(a);
}

qmh::ArithmeticMode parse_mode(const std::string& s) {
  if (s == "exact") return qmh::ArithmeticMode::exact;
  if (s == "modp") return qmh::ArithmeticMode::modular;
  if (s == "auto") return qmh::ArithmeticMode::automatic;
  throw UsageError("--mode: expected exact, modp or auto");
}

void require_n(const Config& cfg, int lo = 1) {
  if (cfg.n < lo) throw UsageError("--n must be at least " + std::to_string(lo));
}

std::vector<qmh::Group> requested_groups(const Config& cfg) {
  if (cfg.group.empty()) return {qmh::Group::M, qmh::Group::GL, qmh::Group::SL};
  return {qmh::parse_group(cfg.group)};
}

std::string character_label(const qmh::Character& c) {
  return c.is_eta() ? std::string("eta") : "(" + join(c.exponents) + ")";
}

void render_table_text(std::ostream& os, const qmh::BettiTable& t) {
  os << qmh::to_string(t.group) << ":";
  if (t.dims.empty()) {
    os << " (zero)\n";
    return;
  }
  os << " m=" << t.dims.begin()->first << ".." << t.dims.rbegin()->first << ":";
  for (int m = t.dims.begin()->first; m <= t.dims.rbegin()->first; ++m) os << " " << t.at(m);
  os << "   total " << t.total() << "\n";
}

std::vector<qmh::PairMultiplicity> solution_set(const Config& cfg, const qmh::CharacterExponents& a, int threads) {
  if (cfg.solutions == "full") return qmh::enumerate_solutions(a.n(), a.a, threads);
  if (cfg.solutions == "paper") {
    auto p = qmh::published_solutions(a);
    if (!p) throw UsageError("--solutions paper: no published solution list for character (" + join(a.a) + ")");
    return *p;
  }
  throw UsageError("--solutions: expected full or paper");
}

// ---------------------------------------------------------------------------

void cmd_betti(const Config& cfg, Output& out) {
  require_n(cfg);
  const int cols = cfg.cols > 0 ? cfg.cols : cfg.n;
  const qmh::Character c = parse_character(cfg.character, cfg.n);
  out.params = {{"n", cfg.n}, {"cols", cols}, {"character", character_label(c)}, {"solutions", cfg.solutions},
                {"group", cfg.group.empty() ? "all" : cfg.group}};
  out.provenance = {"engine"};
  std::vector<qmh::BettiTable> tables;
  if (c.is_eta()) {
    if (!cfg.group.empty() && cfg.group != "M") throw UsageError("eta coefficients are only defined here for M");
    tables.push_back(qmh::betti_eta(cfg.n, cols));
  } else {
    if (cols != cfg.n) throw UsageError("--cols differs from --n: only eta coefficients are supported for M_q(n,m)");
    const qmh::CharacterExponents a{c.exponents};
    const auto sols = solution_set(cfg, a, cfg.threads);
    for (qmh::Group g : requested_groups(cfg)) {
      try {
        tables.push_back(qmh::betti_table(a, g, sols));
      } catch (const qmh::NonRealizableTable& e) {
        throw UsageError(e.what());
      }
    }
  }
  out.text << "n=" << cfg.n << (cols != cfg.n ? " cols=" + std::to_string(cols) : std::string()) << " character "
           << character_label(c) << " solutions=" << cfg.solutions << "\n";
  out.csv << "group,m,dim\n";
  Json arr = Json::array();
  for (const auto& t : tables) {
    render_table_text(out.text, t);
    for (const auto& [m, d] : t.dims) out.csv << qmh::to_string(t.group) << "," << m << "," << d << "\n";
    arr.push_back(qmh::betti_to_json(t));
  }
  out.results = {{"tables", arr}};
}

void cmd_classes(const Config& cfg, Output& out) {
  require_n(cfg);
  if (cfg.degree < 0) throw UsageError("classes: --degree is required");
  const qmh::Character c = parse_character(cfg.character, cfg.n);
  if (c.is_eta()) throw UsageError("classes: a diagonal character is required");
  const qmh::CharacterExponents a{c.exponents};
  const auto classes = qmh::explicit_classes(a, cfg.degree, solution_set(cfg, a, cfg.threads));
  out.params = {{"n", cfg.n}, {"character", character_label(c)}, {"degree", cfg.degree}, {"solutions", cfg.solutions}};
  out.provenance = {"engine"};
  out.text << classes.size() << " class" << (classes.size() == 1 ? "" : "es") << " in degree " << cfg.degree
           << " for n=" << cfg.n << " character " << character_label(c) << "\n";
  out.csv << "m,class\n";
  for (const auto& k : classes) {
    out.text << "  " << k.to_string() << "\n";
    out.csv << cfg.degree << ",\"" << k.to_string() << "\"\n";
  }
  out.results = {{"degree", cfg.degree}, {"count", classes.size()}, {"classes", qmh::classes_to_json(classes)}};
}

/// --expect: exit 1 when the reported dims differ.
void check_expect(const Config& cfg, const std::vector<long long>& dims, Output& out) {
  if (cfg.expect.empty()) return;
  const auto want = parse_int_list(cfg.expect, "--expect");
  std::vector<long long> w(want.begin(), want.end());
  const bool ok = w == dims;
  out.results["expect"] = {{"dims", w}, {"status", ok ? "PASS" : "FAIL"}};
  out.text << "expect " << join(w) << ": " << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) out.exit_code = 1;
}

void render_report_text(std::ostream& os, const qmh::HomologyReport& r) {
  os << r.algebra << ", " << r.coefficients << ", mode " << qmh::to_string(r.mode) << "\n";
  for (const auto& [D, dims] : r.dims_by_cap) os << "  cap D=" << D << ": " << join(dims) << "\n";
  os << "  stable:";
  for (std::size_t p = 0; p < r.stable.size(); ++p) os << " p" << p << "=" << (r.stable[p] ? "yes" : "no");
  os << "\n  dims: " << join(r.dims) << "\n";
}

void cmd_oracle_hochschild(const Config& cfg, Output& out) {
  require_n(cfg);
  const int cols = cfg.cols > 0 ? cfg.cols : cfg.n;
  const int pmax = cfg.pmax >= 0 ? cfg.pmax : 2;
  const int cap = cfg.cap >= 0 ? cfg.cap : pmax + 2;
  if (cap < 1) throw UsageError("--cap must be at least 1");
  const qmh::Character c = parse_character(cfg.character, cfg.n);
  const qmh::ArithmeticMode mode = parse_mode(cfg.mode);
  qmh::OracleLimits limits;
  limits.max_nonzeros = cfg.max_nonzeros;
  limits.seed = cfg.seed;
  const auto rep = qmh::truncated_homology({cfg.n, cols}, c, cap, pmax, mode, limits);
  out.params = {{"n", cfg.n}, {"cols", cols}, {"character", character_label(c)}, {"cap", cap},
                {"pmax", pmax}, {"mode", cfg.mode}, {"seed", cfg.seed}};
  out.provenance = {"oracle"};
  render_report_text(out.text, rep);
  out.csv << "cap,p,dim,stable\n";
  for (const auto& [D, dims] : rep.dims_by_cap)
    for (std::size_t p = 0; p < dims.size(); ++p)
      out.csv << D << "," << p << "," << dims[p] << "," << (rep.stable[p] ? "yes" : "no") << "\n";
  out.results = {{"report", qmh::report_to_json(rep)}};
  check_expect(cfg, rep.dims, out);
}

void cmd_oracle_cylinder(const Config& cfg, Output& out, bool tor_only) {
  const int pmax = cfg.pmax >= 0 ? cfg.pmax : 3;
  const auto demo = qmh::load_demo(cfg.demo, cfg.data_dir + "/algebras");
  auto checks = qmh::run_cylinder_demo(demo, pmax);
  if (tor_only) std::erase_if(checks, [](const qmh::CylinderCheck& c) { return c.kind != "tor"; });
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.agree();
  out.params = {{"demo", cfg.demo}, {"pmax", pmax}};
  out.provenance = {"oracle"};
  out.text << "demo " << demo.name << ": " << demo.description << "\n";
  out.csv << "cylinder,kind,coefficients,p,over_Z,over_P\n";
  for (const auto& c : checks) {
    out.text << "  [" << c.cylinder << "] " << c.kind << " (" << c.coefficients << "): Z " << join(c.over_Z) << " | P "
             << join(c.over_P) << "  " << (c.agree() ? "PASS" : "FAIL") << "\n";
    for (std::size_t p = 0; p < c.over_Z.size(); ++p)
      out.csv << "\"" << c.cylinder << "\"," << c.kind << ",\"" << c.coefficients << "\"," << p << "," << c.over_Z[p]
              << "," << c.over_P[p] << "\n";
  }
  out.text << (ok ? "PASS" : "FAIL") << " (Z vs P dims " << (ok ? "equal" : "differ") << ")\n";
  out.results = {{"status", ok ? "PASS" : "FAIL"}, {"checks", qmh::cylinder_checks_to_json(checks)}};
  if (!ok) out.exit_code = 1;
}

void cmd_oracle(const Config& cfg, Output& out) {
  if (cfg.oracle_kind == "hochschild") return cmd_oracle_hochschild(cfg, out);
  if (cfg.oracle_kind == "cylinder") return cmd_oracle_cylinder(cfg, out, false);
  if (cfg.oracle_kind == "tor") return cmd_oracle_cylinder(cfg, out, true);
  throw UsageError("oracle: expected hochschild, cylinder or tor");
}

void cmd_verify(const Config& cfg, Output& out) {
  const int n = cfg.n > 0 ? cfg.n : 3;
  const int cols = cfg.cols > 0 ? cfg.cols : n;
  const int dmax = cfg.degree >= 0 ? cfg.degree : 4;
  const bool all = cfg.check == "all";
  std::vector<qmh::CheckResult> results;
  if (all || cfg.check == "mpi") results.push_back(qmh::check_mpi(n));
  if (all || cfg.check == "central") results.push_back(qmh::check_central(n));
  if (all || cfg.check == "scaling") results.push_back(qmh::check_scaling(n, cols, cfg.count, cfg.seed));
  if (all || cfg.check == "confluence") results.push_back(qmh::check_confluence(n, cols));
  if (all || cfg.check == "pbw") results.push_back(qmh::check_graded_dims(n, cols, dmax));
  if (results.empty()) throw UsageError("verify: expected mpi, pbw, central, scaling, confluence or all");
  out.params = {{"check", cfg.check}, {"n", n}, {"cols", cols}, {"degree", dmax}, {"count", cfg.count}, {"seed", cfg.seed}};
  out.provenance = {"engine"};
  out.csv << "check,status,detail\n";
  Json arr = Json::array();
  for (const auto& r : results) {
    out.text << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    out.csv << r.name << "," << (r.pass ? "PASS" : "FAIL") << ",\"" << r.detail << "\"\n";
    arr.push_back({{"check", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}, {"seconds", r.seconds}});
    if (!r.pass) out.exit_code = 1;
  }
  out.results = {{"checks", arr}};
}

void cmd_compare(const Config& cfg, Output& out) {
  if (cfg.n < 2 || cfg.n > 4) throw UsageError("compare: stored figures exist for n = 2, 3, 4 only");
  const qmh::FigureSet fig = qmh::load_figure(cfg.n, cfg.data_dir + "/figures");
  const qmh::CharacterExponents a{qmh::Character::f_inv(cfg.n).exponents};
  const auto sols = qmh::enumerate_solutions(cfg.n, a.a, cfg.threads);
  out.params = {{"n", cfg.n}, {"character", "(" + join(a.a) + ")"}, {"group", cfg.group.empty() ? "all" : cfg.group},
                {"adjudicate", cfg.adjudicate}};
  out.provenance = {"engine", "paper-figure"};
  out.text << "n=" << cfg.n << " character (" << join(a.a) << "), " << sols.size() << " solution vector"
           << (sols.size() == 1 ? "" : "s") << ":";
  for (const auto& s : sols) out.text << " " << s.to_string();
  out.text << "\n";
  out.csv << "group,m,engine,figure,diff\n";
  Json comps = Json::array();
  for (qmh::Group g : requested_groups(cfg)) {
    const qmh::BettiTable eng = qmh::betti_table(a, g, sols);
    const qmh::FigureComparison c = qmh::compare_with_figure(eng, fig);
    out.text << qmh::to_string(g) << ": " << qmh::to_string(c.status) << "\n";
    out.text << "  engine: ";
    render_table_text(out.text, eng);
    out.text << "  figure: ";
    render_table_text(out.text, fig.tables.at(g));
    if (c.status == qmh::MatchStatus::divergent) {
      out.text << "  diff (engine - figure):";
      for (const auto& [m, d] : c.diff) out.text << " m=" << m << ":" << (d > 0 ? "+" : "") << d;
      out.text << "\n";
      if (!c.attributed_to.empty()) {
        out.text << "  attributed to:";
        for (const auto& s : c.attributed_to) out.text << " " << s.to_string();
        out.text << (c.attribution_verified ? " (verified: these solutions alone reproduce the diff)" : " (unverified)")
                 << "\n";
      }
      if (!c.note.empty()) out.text << "  note: " << c.note << "\n";
    }
    for (const auto& r : c.rows)
      out.csv << qmh::to_string(g) << "," << r.m << "," << r.engine << "," << r.figure << "," << r.diff << "\n";
    Json cj = qmh::comparison_to_json(c);
    cj["engine_table"] = qmh::betti_to_json(eng);
    cj["figure_table"] = qmh::betti_to_json(fig.tables.at(g));
    comps.push_back(cj);
  }
  out.results = {{"comparisons", comps}};
  if (!cfg.adjudicate) return;

  out.provenance.push_back("oracle");
  const int m_max = cfg.pmax >= 0 ? cfg.pmax : 2;
  const auto caps = parse_int_list(cfg.caps, "--caps");
  qmh::OracleLimits limits;
  limits.max_nonzeros = cfg.max_nonzeros;
  limits.seed = cfg.seed;
  out.params["m_max"] = m_max;
  out.params["caps"] = caps;
  out.params["mode"] = cfg.mode;
  try {
    const auto adj = qmh::adjudicate(a, m_max, caps, parse_mode(cfg.mode), fig, limits);
    out.text << "adjudication (degrees 0.." << m_max << ", caps " << join(caps) << "):\n";
    out.text << "  oracle: ";
    render_report_text(out.text, adj.oracle);
    out.text << "  engine dims: " << join(adj.engine) << "\n";
    if (adj.figure) out.text << "  figure dims: " << join(*adj.figure) << "\n";
    out.text << "  consistent across caps: " << (adj.consistent_across_caps ? "yes" : "no") << "\n";
    out.text << "  verdict: " << adj.verdict << "\n";
    out.results["adjudication"] = qmh::adjudication_to_json(adj);
  } catch (const qmh::ResourceGuardError& e) {
    out.text << "adjudication not run: " << e.what() << "\n";
    out.results["adjudication"] = {{"verdict", "not run"}, {"reason", e.what()}};
  }
}

std::string render(const Output& out, Format f) {
  switch (f) {
    case Format::json:
      return qmh::make_document(out.command, out.params, out.results, out.provenance).dump(2) + "\n";
    case Format::csv:
      return out.csv.str();
    case Format::text:
      return out.text.str();
  }
  return {};
}

int default_threads() {
  if (const char* env = std::getenv("QMH_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology of quantum matrix algebras"};
  app.set_version_flag("--version", std::string(qmh::kToolVersion));
  app.require_subcommand(1);
  Config cfg;

  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (default: QMH_THREADS or hardware)")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for modular specializations");
  app.add_option("--output", cfg.output, "Also write the report to this file");
  app.add_option("--data-dir", cfg.data_dir, "Directory holding figures/ and algebras/");
  app.fallthrough();

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Matrix size n");
    sub->add_option("--character", cfg.character, "eps | eta | f | f-inv | comma-separated exponents");
    sub->add_option("--solutions", cfg.solutions, "full | paper")->check(CLI::IsMember({"full", "paper"}));
  };

  auto* betti = app.add_subcommand("betti", "Betti table from the combinatorial formula");
  add_problem(betti);
  betti->add_option("--cols", cfg.cols, "Columns m of M_q(n,m) (eta only)");
  betti->add_option("--group", cfg.group, "M | GL | SL (default: all)")->check(CLI::IsMember({"M", "GL", "SL"}));

  auto* classes = app.add_subcommand("classes", "Explicit homology classes in one degree");
  add_problem(classes);
  classes->add_option("--degree", cfg.degree, "Homological degree")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force chain-complex computations");
  oracle->add_option("kind", cfg.oracle_kind, "hochschild | cylinder | tor")
      ->required()
      ->check(CLI::IsMember({"hochschild", "cylinder", "tor"}));
  oracle->add_option("--n", cfg.n, "Rows n");
  oracle->add_option("--cols", cfg.cols, "Columns m (default n)");
  oracle->add_option("--character", cfg.character, "eps | eta | f | f-inv | comma-separated exponents");
  oracle->add_option("--cap", cfg.cap, "Total-degree cap D (caps D-1 and D are run; default pmax+2)");
  oracle->add_option("--pmax", cfg.pmax, "Highest homological degree");
  oracle->add_option("--mode", cfg.mode, "exact | modp | auto")->check(CLI::IsMember({"exact", "modp", "auto"}));
  oracle->add_option("--expect", cfg.expect, "Expected dims p=0..pmax; exit 1 on mismatch");
  oracle->add_option("--demo", cfg.demo, "Demo corpus entry for cylinder/tor");
  oracle->add_option("--max-nonzeros", cfg.max_nonzeros, "Resource guard on boundary matrix entries");

  auto* verify = app.add_subcommand("verify", "Structural checks");
  verify->add_option("check", cfg.check, "mpi | pbw | central | scaling | confluence | all")
      ->required()
      ->check(CLI::IsMember({"mpi", "pbw", "central", "scaling", "confluence", "all"}));
  verify->add_option("--n", cfg.n, "Rows n (default 3)");
  verify->add_option("--cols", cfg.cols, "Columns m (default n)");
  verify->add_option("--degree", cfg.degree, "Highest degree for pbw (default 4)");
  verify->add_option("--count", cfg.count, "Random exponent sequences for scaling")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Engine tables against the stored figures");
  compare->add_option("--n", cfg.n, "2, 3 or 4")->required();
  compare->add_option("--group", cfg.group, "M | GL | SL (default: all)")->check(CLI::IsMember({"M", "GL", "SL"}));
  compare->add_flag("--adjudicate", cfg.adjudicate, "Run the oracle on low degrees");
  compare->add_option("--pmax", cfg.pmax, "Highest degree adjudicated (default 2)");
  compare->add_option("--caps", cfg.caps, "Comma-separated caps (default 3,4)");
  compare->add_option("--mode", cfg.mode, "exact | modp | auto")->check(CLI::IsMember({"exact", "modp", "auto"}));
  compare->add_option("--max-nonzeros", cfg.max_nonzeros, "Resource guard on boundary matrix entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (cfg.threads <= 0) cfg.threads = default_threads();

  Output out;
  const Format format = cfg.format == "json" ? Format::json : cfg.format == "csv" ? Format::csv : Format::text;
  try {
    if (betti->parsed()) {
      out.command = "betti";
      cmd_betti(cfg, out);
    } else if (classes->parsed()) {
      out.command = "classes";
      cmd_classes(cfg, out);
    } else if (oracle->parsed()) {
      out.command = "oracle " + cfg.oracle_kind;
      cmd_oracle(cfg, out);
    } else if (verify->parsed()) {
      out.command = "verify " + cfg.check;
      cmd_verify(cfg, out);
    } else if (compare->parsed()) {
      out.command = "compare";
      cmd_compare(cfg, out);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qmh::ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qmh::RankDisagreement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string rendered = render(out, format);
  if (!cfg.output.empty()) {
    std::ofstream f(cfg.output);
    if (!f || !(f << rendered)) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
  }
  std::cout << rendered << std::flush;
  return out.exit_code;
}
