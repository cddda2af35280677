#include "diffdim/report.hpp"

#include <iomanip>
#include <sstream>

namespace diffdim {

namespace {

json exponent_json(const Exponent& e, int m) {
  json a = json::array();
  for (int v : e.coords(static_cast<std::size_t>(m)))
    a.push_back(v);
  return a;
}

json set_json(const ExponentSet& s) {
  json a = json::array();
  for (const auto& e : s.elements)
    a.push_back(exponent_json(e, s.m));
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

std::string ints(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v)
    parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

} // namespace

json to_json(const mpz_class& z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

json to_json(const NumericalPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.std_coeffs())
    coeffs.push_back(to_json(c));
  json out;
  out["std_coeffs"] = coeffs;
  out["degree"] = p.degree();
  out["text"] = p.to_string();
  return out;
}

json to_json(const BoundReport& b) {
  json out;
  out["e"] = b.e;
  out["d"] = b.d;
  out["a_d"] = b.a_d.get_str();
  out["kolchin_codim1"] = b.kolchin_codim1.get_str();
  out["bezout_single"] = b.bezout_single ? json(b.bezout_single->get_str()) : json(nullptr);
  out["conjecture_codim2"] = b.conjecture_codim2.get_str();
  out["new_codim2"] = b.new_codim2.get_str();
  out["grigoriev"] = b.grigoriev ? json(b.grigoriev->get_str()) : json(nullptr);
  json checks;
  for (const auto& c : b.checks)
    checks[c.name] = to_string(c.status);
  out["checks"] = checks;
  return out;
}

json error_json(const std::exception& e) {
  json err;
  if (const auto* d = dynamic_cast<const Error*>(&e)) {
    err["kind"] = d->kind();
    if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
      err["line"] = s->line;
      err["column"] = s->column;
    }
  } else {
    err["kind"] = "InternalError";
  }
  err["message"] = e.what();
  json out;
  out["error"] = err;
  return out;
}

json analysis_json(const SystemSource& src, const SystemAnalysis& a, const BoundReport& b) {
  json out;
  out["command"] = "analyze";
  out["m"] = a.m;
  out["n"] = a.n;
  out["ranking"] = a.basis.ranking.name();
  out["orders"] = b.e;
  out["omega"] = to_json(a.omega);
  out["type"] = a.type;
  out["typical_dimension"] = to_json(a.typical_dimension);
  out["codimension"] = a.codimension;
  out["rank"] = to_json(a.rank);
  json stairs = json::array();
  for (const auto& s : a.staircases)
    stairs.push_back(set_json(s));
  out["staircases"] = stairs;
  out["stable_from"] = a.stable_from();
  json basis = json::array();
  for (const auto& g : a.basis.elements)
    basis.push_back(g.to_string(src.vars, src.unknowns));
  out["basis"] = basis;
  out["bounds"] = to_json(b);
  out["ok"] = b.ok();
  return out;
}

std::string analysis_text(const SystemSource& src, const SystemAnalysis& a, const BoundReport& b) {
  std::ostringstream os;
  os << "m = " << a.m << ", n = " << a.n << ", ranking " << a.basis.ranking.name() << "\n";
  os << "omega(s) = " << a.omega.to_string() << "   (exact for s >= " << a.stable_from() << ")\n";
  os << "type d = " << a.type << ", typical dimension a_d = " << a.typical_dimension
     << ", codimension = " << a.codimension << ", rank = " << a.rank << "\n";
  os << "Groebner basis (" << a.basis.elements.size() << " elements):\n";
  for (const auto& g : a.basis.elements)
    os << "  " << g.to_string(src.vars, src.unknowns) << "\n";
  os << "orders e = " << ints(b.e) << "\n";
  os << "bounds:\n";
  os << "  sum e              = " << b.kolchin_codim1 << "\n";
  if (b.bezout_single)
    os << "  e1^2               = " << *b.bezout_single << "\n";
  os << "  conjectured codim 2 = " << b.conjecture_codim2 << " (informational)\n";
  os << "  2^(2m+2)(sum e)^2  = " << b.new_codim2 << "\n";
  if (b.grigoriev) {
    const std::string g = b.grigoriev->get_str();
    os << "  Grigoriev          = " << (g.size() > 40 ? g.substr(0, 20) + "... (" + std::to_string(g.size()) + " digits)" : g)
       << "\n";
  }
  for (const auto& c : b.checks)
    os << "  check " << std::left << std::setw(16) << c.name << to_string(c.status) << "\n";
  return os.str();
}

json primitive_json(const SystemSource& src, const PrimitiveElementResult& r,
                    const std::vector<DiffOperator>* annihilator) {
  json out;
  out["command"] = "primitive";
  out["m"] = r.m;
  out["n"] = r.n;
  json c = json::array();
  for (const auto& v : r.c)
    c.push_back(v.to_string(src.vars));
  out["c"] = c;
  out["psi"] = r.psi_definition.to_string(src.vars, src.unknowns);
  json lambdas = json::array();
  for (const auto& l : r.lambdas)
    lambdas.push_back(l.to_string(src.vars));
  out["lambdas"] = lambdas;
  json orders = json::array();
  for (const auto& l : r.lambdas)
    orders.push_back(l.order());
  out["lambda_orders"] = orders;
  out["s_used"] = r.s_used;
  out["order_cap"] = to_json(r.order_cap);
  out["orders"] = r.orders;
  out["subsystem"] = r.subsystem;
  out["full_system"] = r.full_system;
  out["attempts"] = r.attempts;
  out["verification"] = r.verified ? "ok" : "failed";
  if (annihilator) {
    json j = json::array();
    for (const auto& op : *annihilator)
      j.push_back(op.to_string(src.vars));
    out["annihilator"] = j;
  }
  return out;
}

std::string primitive_text(const SystemSource& src, const PrimitiveElementResult& r,
                           const std::vector<DiffOperator>* annihilator) {
  std::ostringstream os;
  os << "psi = " << r.psi_definition.to_string(src.vars, src.unknowns) << "\n";
  for (std::size_t j = 0; j < r.lambdas.size(); ++j)
    os << "  " << src.unknowns[j] << " = (" << r.lambdas[j].to_string(src.vars) << ") psi   [order "
       << r.lambdas[j].order() << "]\n";
  os << "prolongation order s = " << r.s_used << ", cap 2^m * sum e = " << r.order_cap << ", attempts "
     << r.attempts << (r.full_system ? ", full system" : ", independent subsystem") << "\n";
  os << "verification: " << (r.verified ? "ok" : "failed") << "\n";
  if (annihilator) {
    os << "annihilator of psi:\n";
    for (const auto& op : *annihilator)
      os << "  " << op.to_string(src.vars) << "\n";
  }
  return os.str();
}

json family_json(int m, int n, int emax, const std::vector<FamilyInstance>& rows) {
  json out;
  out["command"] = "family";
  out["m"] = m;
  out["n"] = n;
  out["emax"] = emax;
  json inst = json::array();
  bool all = true;
  for (const auto& r : rows) {
    json j;
    j["e"] = r.params.e;
    j["omega"] = to_json(r.omega);
    j["expected"] = to_json(r.expected);
    j["match"] = r.match;
    inst.push_back(j);
    all = all && r.match;
  }
  out["instances"] = inst;
  out["all_match"] = all;
  return out;
}

std::string family_text(const std::vector<FamilyInstance>& rows) {
  std::ostringstream os;
  for (const auto& r : rows)
    os << "m=" << r.params.m << " e=" << ints(r.params.e) << "  omega = " << r.omega.to_string()
       << "  expected = " << r.expected.to_string() << "  " << (r.match ? "match" : "MISMATCH") << "  ("
       << std::fixed << std::setprecision(4) << r.seconds << " s)\n";
  return os.str();
}

json oracle_json(const ExponentSet& set, const ExponentSet& minimal, const DimensionPolynomial& dp,
                 const std::vector<OracleRow>& rows) {
  json out;
  out["command"] = "oracle";
  out["m"] = set.m;
  out["set"] = set_json(set);
  out["minimal"] = set_json(minimal);
  out["omega"] = to_json(dp.omega);
  out["threshold"] = dp.threshold;
  json vals = json::array();
  bool ok = true;
  for (const auto& r : rows) {
    json j;
    j["s"] = r.s;
    j["count"] = r.count;
    j["omega"] = to_json(r.omega_value);
    j["stable"] = r.stable;
    j["agree"] = r.omega_value == r.count;
    if (r.stable && r.omega_value != r.count)
      ok = false;
    vals.push_back(j);
  }
  out["values"] = vals;
  out["ok"] = ok;
  return out;
}

std::string oracle_text(const ExponentSet& minimal, const DimensionPolynomial& dp, const std::vector<OracleRow>& rows) {
  std::ostringstream os;
  std::vector<std::string> pts;
  for (const auto& e : minimal.elements)
    pts.push_back(e.to_string(static_cast<std::size_t>(minimal.m)));
  os << "minimal set {" << join(pts, ", ") << "}\n";
  os << "omega(s) = " << dp.omega.to_string() << "   (exact for s >= " << dp.threshold << ")\n";
  for (const auto& r : rows)
    os << "  s = " << r.s << ": count " << r.count << ", omega " << r.omega_value
       << (r.omega_value == r.count ? "" : (r.stable ? "   DISAGREE" : "   (below threshold)")) << "\n";
  return os.str();
}

} // namespace diffdim
