#include "diffdim/primitive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <type_traits>

#include "diffdim/errors.hpp"
#include "diffdim/log.hpp"

namespace diffdim {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::vector<Exponent> exponents_up_to(int m, int r) {
  std::vector<Exponent> out;
  if (r < 0)
    return out;
  Exponent x;
  // odometer over the simplex ord x <= r
  for (;;) {
    out.push_back(x);
    int k = 0;
    for (; k < m; ++k) {
      if (x.order() < r) {
        x[static_cast<std::size_t>(k)]++;
        break;
      }
      x[static_cast<std::size_t>(k)] = 0;
    }
    if (k == m)
      break;
  }
  std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return grevlex_greater(b, a); });
  return out;
}

// ---------------------------------------------------------------------------
// Sparse row echelon form with pivots normalized to 1. Columns are unknown
// indices; the leading entry of a row is its smallest column.

struct RFOps {
  using value_type = RationalFunction;
  static bool is_zero(const value_type& a) { return a.is_zero(); }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type inv(const value_type& a) { return a.inverse(); }
  static value_type neg(const value_type& a) { return -a; }
};

struct ModOps {
  using value_type = std::uint64_t;
  static bool is_zero(value_type a) { return a == 0; }
  static value_type mul(value_type a, value_type b) {
    return static_cast<value_type>((static_cast<unsigned __int128>(a) * b) % kPrime);
  }
  static value_type sub(value_type a, value_type b) { return a >= b ? a - b : a + kPrime - b; }
  static value_type neg(value_type a) { return a == 0 ? 0 : kPrime - a; }
  static value_type inv(value_type a) {
    value_type r = 1, e = kPrime - 2;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

template <class Ops>
struct SparseRow {
  using T = typename Ops::value_type;
  std::vector<std::pair<std::size_t, T>> lhs;
  std::vector<std::pair<std::size_t, T>> rhs;
};

// a - f*b over sorted sparse vectors
template <class Ops>
std::vector<std::pair<std::size_t, typename Ops::value_type>>
axpy(const std::vector<std::pair<std::size_t, typename Ops::value_type>>& a, const typename Ops::value_type& f,
     const std::vector<std::pair<std::size_t, typename Ops::value_type>>& b) {
  using T = typename Ops::value_type;
  std::vector<std::pair<std::size_t, T>> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      T v = Ops::neg(Ops::mul(f, b[j].second));
      if (!Ops::is_zero(v))
        out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      T v = Ops::sub(a[i].second, Ops::mul(f, b[j].second));
      if (!Ops::is_zero(v))
        out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Ops>
class Echelon {
public:
  using T = typename Ops::value_type;

  Echelon(std::size_t columns, bool track_rhs) : pivots_(columns), track_rhs_(track_rhs) {}

  // reduces the row and stores it as a pivot; returns its column, or
  // SIZE_MAX when it reduced to zero on the left-hand side, leaving the
  // reduced right-hand side in `rest` when given
  std::size_t insert(SparseRow<Ops> row, std::vector<std::pair<std::size_t, T>>* rest = nullptr) {
    while (!row.lhs.empty()) {
      const std::size_t col = row.lhs.front().first;
      const auto& piv = pivots_[col];
      if (!piv)
        break;
      const T f = row.lhs.front().second;
      row.lhs = axpy<Ops>(row.lhs, f, piv->lhs);
      if (track_rhs_)
        row.rhs = axpy<Ops>(row.rhs, f, piv->rhs);
    }
    if (row.lhs.empty()) {
      if (rest)
        *rest = std::move(row.rhs);
      return SIZE_MAX;
    }
    const std::size_t col = row.lhs.front().first;
    const T inv = Ops::inv(row.lhs.front().second);
    for (auto& [k, v] : row.lhs)
      v = Ops::mul(inv, v);
    if (track_rhs_)
      for (auto& [k, v] : row.rhs)
        v = Ops::mul(inv, v);
    pivots_[col] = std::move(row);
    return col;
  }

  bool has_pivot(std::size_t col) const { return pivots_[col].has_value(); }
  const SparseRow<Ops>& pivot(std::size_t col) const { return *pivots_[col]; }
  SparseRow<Ops>& pivot(std::size_t col) { return *pivots_[col]; }

private:
  std::vector<std::optional<SparseRow<Ops>>> pivots_;
  bool track_rhs_;
};

// The last n columns are m_1..m_n at order zero. `on_relation(r, rhs)` sees
// every row r whose left-hand side reduced to zero with a nonzero right-hand
// side, a relation among the theta psi; with one the scan visits every row.
template <class Ops, class Convert, class OnRelation = std::nullptr_t>
std::optional<Echelon<Ops>> eliminate(const LinearSystem& sys, Convert&& convert, bool track_rhs,
                                      std::vector<std::size_t>* used = nullptr, OnRelation on_relation = nullptr) {
  constexpr bool collect = !std::is_same_v<OnRelation, std::nullptr_t>;
  const std::size_t cols = sys.unknowns.size();
  const auto n = static_cast<std::size_t>(sys.n);
  Echelon<Ops> ech(cols, track_rhs);
  std::size_t found = 0;
  for (std::size_t r = 0; r < sys.equations.size(); ++r) {
    const auto& eq = sys.equations[r];
    SparseRow<Ops> row;
    for (const auto& e : eq.lhs) {
      auto v = convert(e.value);
      if (!v)
        return std::nullopt;
      if (!Ops::is_zero(*v))
        row.lhs.emplace_back(e.index, std::move(*v));
    }
    if (track_rhs)
      for (const auto& e : eq.rhs) {
        auto v = convert(e.value);
        if (!v)
          return std::nullopt;
        if (!Ops::is_zero(*v))
          row.rhs.emplace_back(e.index, std::move(*v));
      }
    std::vector<std::pair<std::size_t, typename Ops::value_type>> rhs;
    const std::size_t col = ech.insert(std::move(row), collect ? &rhs : nullptr);
    if (col != SIZE_MAX && used)
      used->push_back(r);
    if constexpr (collect) {
      if (col == SIZE_MAX && !rhs.empty())
        on_relation(r, std::move(rhs));
    } else {
      if (col != SIZE_MAX && col >= cols - n && ++found == n)
        break;
    }
  }
  return ech;
}

bool all_determined(const LinearSystem& sys, const auto& ech) {
  const std::size_t cols = sys.unknowns.size();
  for (std::size_t k = cols - static_cast<std::size_t>(sys.n); k < cols; ++k)
    if (!ech.has_pivot(k))
      return false;
  return true;
}

RationalFunction random_linear(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> dist(-9, 9);
  Poly p(dist(rng));
  for (int i = 0; i < m; ++i)
    p += Poly::variable(static_cast<std::size_t>(i)) * mpq_class(dist(rng));
  return RationalFunction(p);
}

// `used` collects the equations that produced a pivot over Z/p
std::optional<bool> screen(const LinearSystem& sys, const std::vector<std::uint64_t>& point,
                           std::vector<std::size_t>* used) {
  auto ech = eliminate<ModOps>(sys, [&](const RationalFunction& v) { return v.eval_mod(point, kPrime); }, false, used);
  if (!ech)
    return std::nullopt;
  return all_determined(sys, *ech);
}

// Over Z/p: the pivot rows plus the rows giving linearly independent
// relations among the theta psi, in equation order.
std::optional<std::vector<std::size_t>> relation_screen(const LinearSystem& sys, const std::vector<std::uint64_t>& point) {
  std::vector<std::size_t> rows;
  Echelon<ModOps> relations(sys.psi_symbols.size(), false);
  auto ech = eliminate<ModOps>(sys, [&](const RationalFunction& v) { return v.eval_mod(point, kPrime); }, true, &rows,
                               [&](std::size_t r, std::vector<std::pair<std::size_t, std::uint64_t>> rhs) {
                                 if (relations.insert({std::move(rhs), {}}) != SIZE_MAX)
                                   rows.push_back(r);
                               });
  if (!ech)
    return std::nullopt;
  std::sort(rows.begin(), rows.end());
  return rows;
}

// exact relations among the theta psi implied by the given rows
std::vector<DiffOperator> exact_relations(const LinearSystem& sys, const std::vector<std::size_t>& rows) {
  LinearSystem part = sys;
  part.equations.clear();
  for (auto r : rows)
    part.equations.push_back(sys.equations[r]);
  std::vector<DiffOperator> out;
  eliminate<RFOps>(part, [](const RationalFunction& v) { return std::optional<RationalFunction>(v); }, true, nullptr,
                   [&](std::size_t, std::vector<std::pair<std::size_t, RationalFunction>> rhs) {
                     std::vector<DiffOperator::Term> terms;
                     for (auto& [idx, v] : rhs)
                       terms.push_back({sys.psi_symbols[idx], std::move(v)});
                     out.push_back(DiffOperator::from_terms(std::move(terms)));
                   });
  return out;
}

ModuleElement psi_definition(const std::vector<RationalFunction>& c, int n) {
  ModuleElement psi = ModuleElement::term(static_cast<std::size_t>(n), 0, Exponent{});
  for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j)
    psi[j] = DiffOperator(c[j - 1]);
  return psi;
}

} // namespace

std::vector<int> order_profile(const std::vector<ModuleElement>& generators, int n) {
  std::vector<int> e(static_cast<std::size_t>(n), -1);
  for (const auto& g : generators)
    for (std::size_t j = 0; j < g.size() && j < e.size(); ++j)
      e[j] = std::max(e[j], g.order_in(j));
  return e;
}

std::vector<std::size_t> select_independent_subsystem(const std::vector<ModuleElement>& generators, int m, int n) {
  const SystemAnalysis full = analyze(generators, m, n);
  if (full.rank != 0)
    throw NotZeroRank("the quotient module has rank " + full.rank.get_str() + "; a primitive element needs rank 0");
  std::vector<std::size_t> picked;
  std::vector<ModuleElement> current;
  mpz_class rank = n;
  for (std::size_t k = 0; k < generators.size() && rank > 0; ++k) {
    current.push_back(generators[k]);
    const mpz_class r = analyze(current, m, n).rank;
    if (r < rank) {
      picked.push_back(k);
      rank = r;
    } else {
      current.pop_back();
    }
  }
  return picked;
}

std::size_t LinearSystem::index_of(int j, const Exponent& theta) const {
  // unknowns are sorted by decreasing ranking
  const Ranking ranking;
  auto it = std::lower_bound(unknowns.begin(), unknowns.end(), std::make_pair(j, theta),
                             [&](const std::pair<int, Exponent>& a, const std::pair<int, Exponent>& b) {
                               return ranking.greater(a.first, a.second, b.first, b.second);
                             });
  if (it == unknowns.end() || it->first != j || it->second != theta)
    throw std::out_of_range("unknown outside the prolongation window: m" + std::to_string(j + 1) + " " + theta.to_string(static_cast<std::size_t>(m)));
  return static_cast<std::size_t>(it - unknowns.begin());
}

LinearSystem prolong(const std::vector<ModuleElement>& subsystem, const std::vector<RationalFunction>& c, int s,
                     int m, int n) {
  if (s < 0)
    throw InvalidArgument("prolongation order must be non-negative");
  if (static_cast<int>(c.size()) != n - 1)
    throw InvalidArgument("expected n-1 coefficients c_2..c_n");
  LinearSystem sys;
  sys.m = m;
  sys.n = n;
  sys.s = s;
  sys.orders = order_profile(subsystem, n);
  for (auto& e : sys.orders)
    e = std::max(e, 0);

  const Ranking ranking;
  for (int j = 0; j < n; ++j)
    for (const auto& theta : exponents_up_to(m, s + sys.orders[static_cast<std::size_t>(j)]))
      sys.unknowns.emplace_back(j, theta);
  std::sort(sys.unknowns.begin(), sys.unknowns.end(), [&](const auto& a, const auto& b) {
    return ranking.greater(a.first, a.second, b.first, b.second);
  });
  sys.psi_symbols = exponents_up_to(m, s);

  auto row_of = [&](const ModuleElement& f, const Exponent& theta) {
    std::vector<LinearSystem::Entry> lhs;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const DiffOperator shifted = shift(theta, f[j]);
      for (const auto& t : shifted.terms())
        lhs.push_back({sys.index_of(static_cast<int>(j), t.theta), t.coeff});
    }
    std::sort(lhs.begin(), lhs.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return lhs;
  };

  for (const auto& f : subsystem)
    for (const auto& theta : sys.psi_symbols)
      sys.equations.push_back({row_of(f, theta), {}, false});

  const ModuleElement psi = psi_definition(c, n);
  for (std::size_t k = 0; k < sys.psi_symbols.size(); ++k)
    sys.equations.push_back({row_of(psi, sys.psi_symbols[k]), {{k, RationalFunction(1)}}, true});
  return sys;
}

std::optional<std::vector<DiffOperator>> solve_for_generators(const LinearSystem& sys) {
  auto ech = eliminate<RFOps>(sys, [](const RationalFunction& v) { return std::optional<RationalFunction>(v); }, true);
  if (!ech || !all_determined(sys, *ech))
    return std::nullopt;
  const std::size_t cols = sys.unknowns.size();
  const auto n = static_cast<std::size_t>(sys.n);
  std::vector<DiffOperator> lambdas(n);
  // back-substitute from m_n up so each row keeps only its own pivot
  for (std::size_t k = cols; k-- > cols - n;) {
    auto& row = ech->pivot(k);
    while (row.lhs.size() > 1) {
      const auto [col, f] = row.lhs.back();
      const auto& other = ech->pivot(col);
      row.lhs = axpy<RFOps>(row.lhs, f, other.lhs);
      row.rhs = axpy<RFOps>(row.rhs, f, other.rhs);
    }
    std::vector<DiffOperator::Term> terms;
    for (const auto& [idx, v] : row.rhs)
      terms.push_back({sys.psi_symbols[idx], v});
    lambdas[static_cast<std::size_t>(sys.unknowns[k].first)] = DiffOperator::from_terms(std::move(terms));
  }
  return lambdas;
}

std::optional<bool> generators_determined_mod_p(const LinearSystem& sys, const std::vector<std::uint64_t>& point,
                                                std::uint64_t p) {
  if (p != kPrime)
    throw InvalidArgument("modular screen is fixed to the Mersenne prime 2^61-1");
  return screen(sys, point, nullptr);
}

bool verify_primitive(const std::vector<ModuleElement>& generators, const PrimitiveElementResult& result,
                      const Ranking& ranking) {
  const GroebnerBasis gb = groebner(generators, result.m, result.n, ranking);
  for (std::size_t j = 0; j < static_cast<std::size_t>(result.n); ++j) {
    ModuleElement residue = result.lambdas[j] * result.psi_definition;
    residue -= ModuleElement::term(static_cast<std::size_t>(result.n), j, Exponent{});
    if (!reduce(residue, gb).is_zero())
      return false;
  }
  return true;
}

PrimitiveElementResult primitive_element(const std::vector<ModuleElement>& generators, int m, int n,
                                         const PrimitiveOptions& options) {
  PrimitiveElementResult result;
  result.m = m;
  result.n = n;
  result.orders = order_profile(generators, n);
  mpz_class sum_e = 0;
  for (int e : result.orders)
    sum_e += std::max(e, 0);
  result.order_cap = sum_e << m;
  result.subsystem = select_independent_subsystem(generators, m, n);

  std::vector<ModuleElement> subsystem;
  for (auto k : result.subsystem)
    subsystem.push_back(generators[k]);

  const long cap = result.order_cap.get_si();
  std::mt19937_64 rng(options.seed);
  for (int attempt = 1; attempt <= options.retries; ++attempt) {
    result.attempts = attempt;
    result.c.clear();
    for (int j = 1; j < n; ++j)
      result.c.push_back(random_linear(rng, m));
    result.psi_definition = psi_definition(result.c, n);

    std::vector<std::uint64_t> point;
    std::uniform_int_distribution<std::uint64_t> pick(1, kPrime - 1);
    for (int i = 0; i < m; ++i)
      point.push_back(pick(rng));

    auto solve_at = [&](const std::vector<ModuleElement>& equations, int s) -> std::optional<std::vector<DiffOperator>> {
      const LinearSystem sys = prolong(equations, result.c, s, m, n);
      if (options.modular_screen) {
        std::vector<std::size_t> rows;
        const auto determined = screen(sys, point, &rows);
        if (determined && !*determined)
          return std::nullopt;
        // rows that vanished mod p are redundant with high probability
        if (determined) {
          LinearSystem reduced = sys;
          reduced.equations.clear();
          for (auto r : rows)
            reduced.equations.push_back(sys.equations[r]);
          if (auto lambdas = solve_for_generators(reduced))
            return lambdas;
        }
      }
      return solve_for_generators(sys);
    };

    for (long s = 0; s <= cap; ++s) {
      log().debug("attempt {}: trying s = {}", attempt, s);
      auto lambdas = solve_at(subsystem, static_cast<int>(s));
      result.full_system = false;
      if (!lambdas && options.full_system_fallback && generators.size() > subsystem.size()) {
        lambdas = solve_at(generators, static_cast<int>(s));
        result.full_system = true;
      }
      if (!lambdas)
        continue;
      result.lambdas = std::move(*lambdas);
      result.s_used = static_cast<int>(s);
      result.verified = verify_primitive(generators, result);
      log().info("primitive element found at s = {} (attempt {}), verified = {}", s, attempt, result.verified);
      if (result.verified)
        return result;
      break;
    }
    log().info("attempt {} failed up to the order cap {}, redrawing c", attempt, cap);
  }
  throw RetriesExhausted("no primitive element found in " + std::to_string(options.retries) +
                         " draws of c within the order cap " + result.order_cap.get_str());
}

std::vector<DiffOperator> psi_relations(const std::vector<ModuleElement>& generators,
                                        const PrimitiveElementResult& result) {
  std::vector<ModuleElement> equations;
  if (result.full_system) {
    equations = generators;
  } else {
    for (auto k : result.subsystem)
      equations.push_back(generators[k]);
  }
  const LinearSystem sys = prolong(equations, result.c, result.s_used, result.m, result.n);
  std::mt19937_64 rng(result.s_used + 1);
  std::uniform_int_distribution<std::uint64_t> pick(1, kPrime - 1);
  std::optional<std::vector<std::size_t>> rows;
  for (int tries = 0; tries < 4 && !rows; ++tries) {
    std::vector<std::uint64_t> point;
    for (int i = 0; i < result.m; ++i)
      point.push_back(pick(rng));
    rows = relation_screen(sys, point);
  }
  if (!rows) {
    rows.emplace(sys.equations.size());
    std::iota(rows->begin(), rows->end(), std::size_t{0});
  }
  return exact_relations(sys, *rows);
}

std::vector<DiffOperator> annihilator_generators(const std::vector<ModuleElement>& generators,
                                                 const PrimitiveElementResult& result) {
  // low-order relations first: they usually generate J on their own
  std::vector<DiffOperator> out = psi_relations(generators, result);
  for (const auto& g : generators) {
    DiffOperator op;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!g[j].is_zero())
        op += g[j] * result.lambdas[j];
    if (!op.is_zero())
      out.push_back(std::move(op));
  }
  DiffOperator psi_row(RationalFunction(1));
  psi_row -= result.lambdas[0];
  for (std::size_t j = 1; j < result.lambdas.size(); ++j)
    psi_row -= result.lambdas[j].scaled(result.c[j - 1]);
  if (!psi_row.is_zero())
    out.push_back(std::move(psi_row));
  return out;
}

} // namespace diffdim
