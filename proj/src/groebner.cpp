#include "diffdim/groebner.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "diffdim/errors.hpp"
#include "diffdim/log.hpp"

namespace diffdim {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> deadline;

// Rows carry polynomial coefficients: every step multiplies by a nonzero
// element of Q[x], which is a unit of F, so leading terms and the reduced
// basis over F are unchanged while no rational function is ever normalized.
struct PTerm {
  int pos;
  Exponent theta;
  Poly coeff;
};

// terms in strictly decreasing ranking order
using Row = std::vector<PTerm>;

struct Cmp {
  const Ranking& ranking;
  bool operator()(const PTerm& a, const PTerm& b) const { return ranking.greater(a.pos, a.theta, b.pos, b.theta); }
};

bool same_term(const PTerm& a, const PTerm& b) { return a.pos == b.pos && a.theta == b.theta; }

Row canonical(Row terms, const Ranking& ranking) {
  std::sort(terms.begin(), terms.end(), Cmp{ranking});
  Row out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && same_term(out.back(), t)) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero())
        out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero())
    out.pop_back();
  return out;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_constant())
    return a * (1 / b.constant_value());
  auto q = divide_exact(a, b);
  if (!q)
    throw std::logic_error("groebner: inexact polynomial division");
  return *std::move(q);
}

// Divides out the gcd of all coefficients, content over Q included (only
// the latter when `rational_only`), and makes the leading coefficient have a
// positive leading number. Returns the factor divided out.
RationalFunction make_primitive(Row& r, bool rational_only = false) {
  if (r.empty())
    return RationalFunction(1);
  Poly g(1);
  if (!rational_only) {
    // smallest coefficients first, most gcds then end at 1 quickly
    std::vector<const Poly*> cs;
    for (const auto& t : r)
      cs.push_back(&t.coeff);
    std::sort(cs.begin(), cs.end(), [](const Poly* a, const Poly* b) { return a->size() < b->size(); });
    g = cs.front()->monic();
    for (std::size_t k = 1; k < cs.size() && !g.is_one(); ++k)
      g = gcd(g, *cs[k]);
    if (!g.is_one())
      for (auto& t : r)
        t.coeff = exact_quotient(t.coeff, g);
  }
  mpz_class num = 0, den = 1;
  for (const auto& t : r)
    for (const auto& u : t.coeff.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), u.coeff.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), u.coeff.get_den_mpz_t());
    }
  mpq_class c(num, den);
  c.canonicalize();
  if (r.front().coeff.leading_coeff() < 0)
    c = -c;
  if (c != 1) {
    const mpq_class inv = 1 / c;
    for (auto& t : r)
      t.coeff *= inv;
  }
  return RationalFunction(g) * RationalFunction(c);
}

// `cleared`, when given, receives the common denominator multiplied in
Row to_row(const ModuleElement& f, const Ranking& ranking, Poly* cleared = nullptr) {
  // common denominator of all coefficients
  Poly l(1);
  for (std::size_t j = 0; j < f.size(); ++j)
    for (const auto& t : f[j].terms())
      if (!t.coeff.is_polynomial())
        l = l * exact_quotient(t.coeff.denominator(), gcd(l, t.coeff.denominator()));
  Row r;
  for (std::size_t j = 0; j < f.size(); ++j)
    for (const auto& t : f[j].terms())
      r.push_back({static_cast<int>(j), t.theta,
                   t.coeff.numerator() * exact_quotient(l, t.coeff.denominator())});
  if (cleared)
    *cleared = l;
  return canonical(std::move(r), ranking);
}

ModuleElement from_row(const Row& r, int n, const RationalFunction& scale) {
  std::vector<std::vector<DiffOperator::Term>> comps(static_cast<std::size_t>(n));
  for (const auto& t : r)
    comps[static_cast<std::size_t>(t.pos)].push_back({t.theta, scale * RationalFunction(t.coeff)});
  ModuleElement f(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < comps.size(); ++j)
    f[j] = DiffOperator::from_terms(std::move(comps[j]));
  return f;
}

// d_i * g
Row single_shift(std::size_t i, const Row& g, const Ranking& ranking) {
  Row out;
  out.reserve(2 * g.size());
  bool constant = true;
  for (const auto& t : g) {
    out.push_back({t.pos, t.theta + Exponent::unit(i), t.coeff});
    if (!t.coeff.is_constant()) {
      Poly d = t.coeff.derivative(i);
      if (!d.is_zero()) {
        constant = false;
        out.push_back({t.pos, t.theta, std::move(d)});
      }
    }
  }
  // shifting every term by e_i preserves the order
  return constant ? out : canonical(std::move(out), ranking);
}

// c * (d^delta * g)
Row shifted(const Exponent& delta, const Poly& c, const Row& g, const Ranking& ranking) {
  Row cur = g;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    for (int k = 0; k < delta[i]; ++k)
      cur = single_shift(i, cur, ranking);
  if (!c.is_one())
    for (auto& t : cur)
      t.coeff = c * t.coeff;
  return cur;
}

// a * x - y, both sorted
Row combine(const Poly& a, const Row& x, const Row& y, const Ranking& ranking) {
  Row out;
  out.reserve(x.size() + y.size());
  const bool scale = !a.is_one();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (same_term(x[i], y[j])) {
      Poly c = scale ? a * x[i].coeff : x[i].coeff;
      c -= y[j].coeff;
      if (!c.is_zero())
        out.push_back({x[i].pos, x[i].theta, std::move(c)});
      ++i;
      ++j;
    } else if (ranking.greater(x[i].pos, x[i].theta, y[j].pos, y[j].theta)) {
      out.push_back({x[i].pos, x[i].theta, scale ? a * x[i].coeff : x[i].coeff});
      ++i;
    } else {
      out.push_back({y[j].pos, y[j].theta, -y[j].coeff});
      ++j;
    }
  }
  for (; i < x.size(); ++i)
    out.push_back({x[i].pos, x[i].theta, scale ? a * x[i].coeff : x[i].coeff});
  for (; j < y.size(); ++j)
    out.push_back({y[j].pos, y[j].theta, -y[j].coeff});
  return out;
}

struct Slot {
  Row row;
  bool alive = true;
};

const Row* find_reducer(const PTerm& t, const std::vector<Slot>& basis, std::size_t skip) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip || !basis[k].alive)
      continue;
    const PTerm& lead = basis[k].row.front();
    if (lead.pos == t.pos && lead.theta.divides(t.theta))
      return &basis[k].row;
  }
  return nullptr;
}

// Full normal form against the live slots, optionally skipping one slot and
// keeping the first `keep` terms untouched. The result is a primitive
// multiple of the normal form over F; `scale` receives the factor q with
// normal form = q * result.
Row normal_form(Row p, const std::vector<Slot>& basis, const Ranking& ranking, std::size_t skip = SIZE_MAX,
                std::size_t keep = 0, RationalFunction* scale = nullptr) {
  RationalFunction q(1);
  std::size_t idx = keep;
  while (idx < p.size()) {
    const Row* g = find_reducer(p[idx], basis, skip);
    if (!g) {
      ++idx;
      continue;
    }
    TimeBudget::check();
    // b * p - a * d^delta g cancels the term a d^theta
    const Poly& a = p[idx].coeff;
    const Poly& b = g->front().coeff;
    Poly ca = a, cb = b;
    if (!b.is_constant()) {
      const Poly h = gcd(a, b);
      if (!h.is_one()) {
        ca = exact_quotient(a, h);
        cb = exact_quotient(b, h);
      }
    } else {
      ca = a * (1 / b.constant_value());
      cb = Poly(1);
    }
    const Row sub = shifted(p[idx].theta - g->front().theta, ca, *g, ranking);
    Row head(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(idx));
    Row tail(p.begin() + static_cast<std::ptrdiff_t>(idx), p.end());
    Row rest = combine(cb, tail, sub, ranking);
    if (!cb.is_one()) {
      for (auto& t : head)
        t.coeff = cb * t.coeff;
      if (scale)
        q /= RationalFunction(cb);
    }
    head.insert(head.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    p = std::move(head);
    if (!cb.is_one() || !ca.is_constant()) {
      const RationalFunction c = make_primitive(p);
      if (scale)
        q *= c;
    }
  }
  if (!p.empty()) {
    const RationalFunction c = make_primitive(p);
    if (scale)
      q *= c;
  }
  if (scale)
    *scale = q;
  return p;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  int pos;
  Exponent lcm;
};

// monic rational form of a basis row
ModuleElement monic_element(const Row& r, int n) {
  return from_row(r, n, RationalFunction(r.front().coeff).inverse());
}

} // namespace

TimeBudget::TimeBudget(std::chrono::milliseconds limit) : previous_(deadline) {
  deadline = std::chrono::steady_clock::now() + limit;
}

TimeBudget::~TimeBudget() { deadline = previous_; }

void TimeBudget::check() {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw BudgetExceeded("Groebner computation exceeded its time budget");
}

std::vector<ExponentSet> GroebnerBasis::staircases() const {
  std::vector<ExponentSet> out(static_cast<std::size_t>(n), ExponentSet{m, {}});
  for (std::size_t k = 0; k < lead_positions.size(); ++k)
    out[static_cast<std::size_t>(lead_positions[k])].elements.push_back(lead_exponents[k]);
  return out;
}

ModuleElement reduce(const ModuleElement& f, const std::vector<ModuleElement>& basis, const Ranking& ranking) {
  std::vector<Slot> slots;
  for (const auto& g : basis) {
    Row r = to_row(g, ranking);
    if (r.empty())
      continue;
    make_primitive(r);
    slots.push_back({std::move(r), true});
  }
  Poly cleared;
  RationalFunction scale;
  const Row r = normal_form(to_row(f, ranking, &cleared), slots, ranking, SIZE_MAX, 0, &scale);
  return from_row(r, static_cast<int>(f.size()), scale / RationalFunction(cleared));
}

ModuleElement reduce(const ModuleElement& f, const GroebnerBasis& gb) { return reduce(f, gb.elements, gb.ranking); }

GroebnerBasis groebner(const std::vector<ModuleElement>& generators, int m, int n, const Ranking& ranking) {
  if (m < 1 || m > static_cast<int>(kMaxVars))
    throw InvalidArgument("number of derivations out of range");
  std::deque<Row> todo;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (static_cast<int>(generators[k].size()) > n)
      throw InvalidArgument("generator has more components than indeterminates");
    ModuleElement g = generators[k];
    if (static_cast<int>(g.size()) < n)
      g += ModuleElement(static_cast<std::size_t>(n));
    Row r = to_row(g, ranking);
    if (r.empty()) {
      log().warn("dropping zero generator #{}", k + 1);
      continue;
    }
    todo.push_back(std::move(r));
  }

  std::vector<Slot> basis;
  std::vector<Pair> pairs;
  auto pair_less = [&](const Pair& a, const Pair& b) { return ranking.greater(b.pos, b.lcm, a.pos, a.lcm); };

  for (;;) {
    TimeBudget::check();
    Row h;
    // drop pairs that lost a member
    pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                               [&](const Pair& p) { return !basis[p.i].alive || !basis[p.j].alive; }),
                pairs.end());
    // normal strategy over inputs and pairs alike: an input counts with its
    // leading term, a pair with its lcm, and the smallest goes first
    auto input = std::min_element(todo.begin(), todo.end(), [&](const Row& a, const Row& b) {
      return ranking.greater(b.front().pos, b.front().theta, a.front().pos, a.front().theta);
    });
    auto best_pair = std::min_element(pairs.begin(), pairs.end(), pair_less);
    if (input == todo.end() && best_pair == pairs.end())
      break;
    if (best_pair == pairs.end() ||
        (input != todo.end() &&
         !ranking.greater(input->front().pos, input->front().theta, best_pair->pos, best_pair->lcm))) {
      h = std::move(*input);
      todo.erase(input);
    } else {
      const Pair p = *best_pair;
      pairs.erase(best_pair);
      const Row& gi = basis[p.i].row;
      const Row& gj = basis[p.j].row;
      // lead_j * d^a gi - lead_i * d^b gj, with the common factor removed
      const Poly& bi = gi.front().coeff;
      const Poly& bj = gj.front().coeff;
      const Poly c = gcd(bi, bj);
      const Poly ci = exact_quotient(bi, c), cj = exact_quotient(bj, c);
      h = combine(cj, shifted(p.lcm - gi.front().theta, Poly(1), gi, ranking),
                  shifted(p.lcm - gj.front().theta, ci, gj, ranking), ranking);
    }
    h = normal_form(std::move(h), basis, ranking);
    if (h.empty())
      continue;
    const PTerm lead = h.front();
    if (log().should_log(spdlog::level::trace)) {
      std::size_t weight = 0;
      for (const auto& t : h)
        weight += t.coeff.size();
      log().trace("groebner: new element m{} {} with {} terms, {} coefficient monomials; {} pairs pending",
                  lead.pos + 1, lead.theta.to_string(static_cast<std::size_t>(m)), h.size(), weight, pairs.size());
    }

    // inter-reduce the current basis against the new element
    const std::size_t new_index = basis.size();
    basis.push_back({h, true});
    for (std::size_t k = 0; k < new_index; ++k) {
      if (!basis[k].alive)
        continue;
      Row& g = basis[k].row;
      if (g.front().pos == lead.pos && lead.theta.divides(g.front().theta)) {
        basis[k].alive = false;
        todo.push_back(g);
        continue;
      }
      bool touches = false;
      for (std::size_t t = 1; t < g.size() && !touches; ++t)
        touches = g[t].pos == lead.pos && lead.theta.divides(g[t].theta);
      if (touches)
        g = normal_form(std::move(g), basis, ranking, k, 1);
    }
    for (std::size_t k = 0; k < new_index; ++k) {
      if (!basis[k].alive || basis[k].row.front().pos != lead.pos)
        continue;
      pairs.push_back({k, new_index, lead.pos, lcm(basis[k].row.front().theta, lead.theta)});
    }
  }

  std::vector<Row> rows;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!basis[k].alive)
      continue;
    Row r = normal_form(basis[k].row, basis, ranking, k, 1);
    make_primitive(r);
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    return ranking.greater(b.front().pos, b.front().theta, a.front().pos, a.front().theta);
  });

  GroebnerBasis gb;
  gb.ranking = ranking;
  gb.m = m;
  gb.n = n;
  for (const auto& r : rows) {
    gb.elements.push_back(monic_element(r, n));
    gb.lead_positions.push_back(r.front().pos);
    gb.lead_exponents.push_back(r.front().theta);
  }
  log().debug("groebner: {} generators -> {} basis elements", generators.size(), gb.elements.size());
  return gb;
}

int SystemAnalysis::stable_from() const {
  int s = 0;
  for (int t : thresholds)
    s = std::max(s, t);
  return s;
}

SystemAnalysis analyze(const std::vector<ModuleElement>& generators, int m, int n, const Ranking& ranking) {
  SystemAnalysis a;
  a.m = m;
  a.n = n;
  a.orders.assign(static_cast<std::size_t>(n), -1);
  for (const auto& g : generators)
    for (std::size_t j = 0; j < g.size() && j < a.orders.size(); ++j)
      a.orders[j] = std::max(a.orders[j], g.order_in(j));
  a.basis = groebner(generators, m, n, ranking);
  a.staircases = a.basis.staircases();
  for (auto& e : a.staircases) {
    e = minimize(e);
    const auto dp = dimension_polynomial(e);
    a.omega += dp.omega;
    a.thresholds.push_back(dp.threshold);
  }
  a.omega.set_m_cap(m);
  a.type = a.omega.degree();
  a.typical_dimension = a.omega.leading();
  a.codimension = m - a.type;
  a.rank = a.omega.coeff(m);
  return a;
}

std::int64_t hilbert_value(const GroebnerBasis& gb, int r) {
  std::int64_t total = 0;
  for (const auto& e : gb.staircases())
    total += count_excluded(e, r);
  return total;
}

} // namespace diffdim
