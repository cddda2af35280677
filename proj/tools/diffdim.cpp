// Command-line front end: analyze, primitive, family, oracle.

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "diffdim/report.hpp"

using namespace diffdim;

namespace {

std::string read_input(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot open input file '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::pair<long, long> parse_range(const std::string& text) {
  static const std::regex pattern(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    throw InvalidArgument("expected a range A..B, got '" + text + "'");
  const long a = std::stol(m[1].str()), b = std::stol(m[2].str());
  if (a > b)
    throw InvalidArgument("empty range '" + text + "'");
  return {a, b};
}

// "1,0;0,2" -> {(1,0), (0,2)}
ExponentSet parse_set(const std::string& text) {
  ExponentSet set;
  set.m = -1;
  std::stringstream points(text);
  std::string point;
  while (std::getline(points, point, ';')) {
    std::vector<int> coords;
    std::stringstream cs(point);
    std::string c;
    while (std::getline(cs, c, ',')) {
      static const std::regex num(R"(^\s*(\d+)\s*$)");
      std::smatch mm;
      if (!std::regex_match(c, mm, num))
        throw InvalidArgument("bad coordinate '" + c + "' in --set");
      coords.push_back(std::stoi(mm[1].str()));
    }
    if (coords.empty())
      continue;
    if (set.m == -1)
      set.m = static_cast<int>(coords.size());
    if (static_cast<int>(coords.size()) != set.m)
      throw InvalidArgument("points of --set have different dimensions");
    if (set.m > static_cast<int>(kMaxVars))
      throw InvalidArgument("too many coordinates in --set");
    set.elements.emplace_back(coords);
  }
  if (set.m == -1)
    throw InvalidArgument("--set needs at least one point");
  return set;
}

struct Output {
  bool as_json = false;

  int emit(const json& j, const std::string& text, bool ok) const {
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
    return ok ? 0 : 1;
  }
};

int run_analyze(const Output& out, const std::string& input, const std::string& ranking) {
  const SystemSource src = parse_system(read_input(input));
  const SystemAnalysis a = analyze(src.generators(), src.m(), src.n(), Ranking::parse(ranking));
  const BoundReport b = bound_report(a, src.orders());
  return out.emit(analysis_json(src, a, b), analysis_text(src, a, b), b.ok());
}

int run_primitive(const Output& out, const std::string& input, std::uint64_t seed, bool with_annihilator) {
  const SystemSource src = parse_system(read_input(input));
  PrimitiveOptions opts;
  opts.seed = seed;
  const auto gens = src.generators();
  const PrimitiveElementResult r = primitive_element(gens, src.m(), src.n(), opts);
  std::vector<DiffOperator> j;
  if (with_annihilator)
    j = annihilator_generators(gens, r);
  const auto* jp = with_annihilator ? &j : nullptr;
  return out.emit(primitive_json(src, r, jp), primitive_text(src, r, jp), r.verified);
}

int run_family(const Output& out, int m, int n, int emax) {
  if (m < 2 || n < 1 || emax < 1)
    throw InvalidArgument("family needs --m >= 2, --n >= 1 and --emax >= 1");
  if (m > static_cast<int>(kMaxVars))
    throw InvalidArgument("--m exceeds the supported number of derivations");
  // grid in lexicographic order of e
  std::vector<ChainParams> grid;
  std::vector<int> e(static_cast<std::size_t>(n), 1);
  for (;;) {
    grid.push_back({m, e});
    int k = n - 1;
    while (k >= 0 && e[static_cast<std::size_t>(k)] == emax)
      e[static_cast<std::size_t>(k--)] = 1;
    if (k < 0)
      break;
    ++e[static_cast<std::size_t>(k)];
  }
  std::vector<FamilyInstance> rows(grid.size());
  std::vector<std::string> errors(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      const auto t0 = std::chrono::steady_clock::now();
      const SystemAnalysis a = analyze(chain_system(grid[i]), m, n);
      rows[i].params = grid[i];
      rows[i].omega = a.omega;
      rows[i].expected = chain_expected(grid[i]);
      rows[i].match = rows[i].omega == rows[i].expected;
      rows[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (const auto& err : errors)
    if (!err.empty())
      throw std::runtime_error(err);
  bool all = std::all_of(rows.begin(), rows.end(), [](const FamilyInstance& r) { return r.match; });
  return out.emit(family_json(m, n, emax, rows), family_text(rows), all);
}

int run_oracle(const Output& out, const std::string& set_text, const std::string& range) {
  const ExponentSet set = parse_set(set_text);
  const auto [a, b] = parse_range(range);
  const ExponentSet minimal = minimize(set);
  const DimensionPolynomial dp = dimension_polynomial(minimal);
  std::vector<OracleRow> rows;
  bool ok = true;
  for (long s = a; s <= b; ++s) {
    OracleRow r{s, count_excluded(minimal, static_cast<int>(s)), dp.omega.evaluate(s), s >= dp.threshold};
    if (r.stable && r.omega_value != r.count)
      ok = false;
    rows.push_back(r);
  }
  return out.emit(oracle_json(set, minimal, dp, rows), oracle_text(minimal, dp, rows), ok);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension polynomials of linear differential systems"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.as_json, "Emit a JSON document instead of text");

  std::string input = "-";
  std::string ranking = "degrevlex";
  auto* analyze_cmd = app.add_subcommand("analyze", "Groebner basis, dimension polynomial and bound checks");
  analyze_cmd->add_option("--input", input, "System file in the input language, '-' for stdin");
  analyze_cmd->add_option("--ranking", ranking, "Module ranking")->check(CLI::IsMember({"degrevlex", "degrevlex-top"}));
  analyze_cmd->add_flag("--json", out.as_json, "Emit a JSON document");

  std::uint64_t seed = PrimitiveOptions{}.seed;
  bool with_annihilator = false;
  auto* prim_cmd = app.add_subcommand("primitive", "Primitive element psi with m_j = lambda_j psi");
  prim_cmd->add_option("--input", input, "System file in the input language, '-' for stdin");
  prim_cmd->add_option("--seed", seed, "Seed for the random coefficients c_j");
  prim_cmd->add_flag("--annihilator", with_annihilator, "Also list generators of the annihilator of psi");
  prim_cmd->add_flag("--json", out.as_json, "Emit a JSON document");

  int m = 2, n = 2, emax = 3;
  auto* fam_cmd = app.add_subcommand("family", "Chain family sweep against its closed form");
  fam_cmd->add_option("--m", m, "Number of derivations (>= 2)");
  fam_cmd->add_option("--n", n, "Number of unknowns");
  fam_cmd->add_option("--emax", emax, "Largest order e_j in the grid");
  fam_cmd->add_flag("--json", out.as_json, "Emit a JSON document");

  std::string set_text, range = "0..10";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force staircase counts against omega_E");
  oracle_cmd->add_option("--set", set_text, "Points of E, e.g. '2,0;1,1;0,3'")->required();
  oracle_cmd->add_option("--s-range", range, "Range of s as A..B");
  oracle_cmd->add_flag("--json", out.as_json, "Emit a JSON document");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd)
      return run_analyze(out, input, ranking);
    if (*prim_cmd)
      return run_primitive(out, input, seed, with_annihilator);
    if (*fam_cmd)
      return run_family(out, m, n, emax);
    return run_oracle(out, set_text, range);
  } catch (const std::exception& e) {
    if (out.as_json)
      std::cout << error_json(e).dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
