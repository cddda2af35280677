#include "diffdim/poly.hpp"

#include <map>
#include <unordered_map>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffdim {

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) {
  return grevlex_greater(a.exp, b.exp);
}

// a + sign*b by merging two sorted term lists
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].exp == b[j].exp) {
      mpq_class c = subtract ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
      if (c != 0)
        out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    } else if (grevlex_greater(a[i].exp, b[j].exp)) {
      out.push_back(a[i++]);
    } else {
      out.push_back(subtract ? Poly::Term{b[j].exp, -b[j].coeff} : b[j]);
      ++j;
    }
  }
  for (; i < a.size(); ++i)
    out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back(subtract ? Poly::Term{b[j].exp, -b[j].coeff} : b[j]);
  return out;
}

mpz_class mpz_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

mpz_class mpz_lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1)
      r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod_u64(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_mod(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

// ---------------------------------------------------------------------------
// Recursive gcd over Z[x]. Polynomials are viewed as univariate in one
// variable with coefficients in the remaining ones.

using UPoly = std::vector<Poly>; // coefficient of v^k at index k

UPoly to_univariate(const Poly& a, std::size_t v) {
  UPoly out(static_cast<std::size_t>(a.degree_in(v)) + 1);
  std::vector<std::vector<Poly::Term>> buckets(out.size());
  for (const auto& t : a.terms()) {
    Exponent e = t.exp;
    const auto k = e[v];
    e[v] = 0;
    buckets[k].push_back({e, t.coeff});
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = Poly::from_terms(std::move(buckets[k]));
  return out;
}

Poly from_univariate(const UPoly& u, std::size_t v) {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (const auto& t : u[k].terms()) {
      Exponent e = t.exp;
      e[v] = static_cast<Exponent::value_type>(k);
      terms.push_back({e, t.coeff});
    }
  }
  return Poly::from_terms(std::move(terms));
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero())
    u.pop_back();
}

Poly gcd_rec(const Poly& a, const Poly& b);

// integer-primitive with positive leading coefficient
Poly normalize_z(const Poly& a) {
  if (a.is_zero())
    return a;
  return a.primitive_part();
}

Poly monomial_gcd(const Poly& mono, const Poly& other) {
  Exponent g = mono.leading_exp();
  for (const auto& t : other.terms())
    g = gcd(g, t.exp);
  return Poly::monomial(g, 1);
}

Poly content_of(const UPoly& u) {
  Poly g;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    if (it->is_zero())
      continue;
    g = g.is_zero() ? normalize_z(*it) : gcd_rec(g, *it);
    if (g.is_constant())
      return Poly(1);
  }
  return g;
}

// divide every coefficient by their common content, including the rational
// content, and make the top coefficient positive
void make_primitive(UPoly& u) {
  trim(u);
  if (u.empty())
    return;
  Poly c = content_of(u);
  if (!c.is_constant()) {
    for (auto& p : u) {
      if (p.is_zero())
        continue;
      auto q = divide_exact(p, c);
      if (!q)
        throw std::logic_error("gcd: content does not divide coefficient");
      p = std::move(*q);
    }
  }
  mpz_class num = 0, den = 1;
  for (const auto& p : u)
    for (const auto& t : p.terms()) {
      num = mpz_gcd(num, t.coeff.get_num());
      den = mpz_lcm(den, t.coeff.get_den());
    }
  mpq_class z(num, den);
  z.canonicalize();
  if (u.back().leading_coeff() < 0)
    z = -z;
  if (z != 1)
    for (auto& p : u)
      p *= mpq_class(1 / z);
}

// Heuristic gcd by evaluation at a large integer and xi-adic reconstruction
// of the image gcd. Arguments are integer-primitive. A candidate is accepted
// only when it divides both arguments, which makes the answer exact.
mpz_class max_norm(const Poly& a) {
  mpz_class n = 0;
  for (const auto& t : a.terms()) {
    const mpz_class c = abs(t.coeff.get_num());
    if (c > n)
      n = c;
  }
  return n;
}

Poly evaluate_at(const Poly& a, std::size_t v, const mpz_class& xi) {
  std::vector<mpz_class> powers{1};
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    Exponent e = t.exp;
    const auto k = static_cast<std::size_t>(e[v]);
    while (powers.size() <= k)
      powers.push_back(powers.back() * xi);
    e[v] = 0;
    terms.push_back({e, t.coeff * powers[k]});
  }
  return Poly::from_terms(std::move(terms));
}

std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  std::size_t v = kMaxVars;
  const unsigned mask = a.variables_mask() | b.variables_mask();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i))
      v = i;
  if (v == kMaxVars)
    return std::nullopt;
  const int deg = std::max(a.degree_in(v), b.degree_in(v));
  mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    // keep the evaluated integers within a sane size
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > 200000)
      return std::nullopt;
    const Poly ea = evaluate_at(a, v, xi), eb = evaluate_at(b, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      // gcd over Z, integer content included
      Poly gamma = gcd_rec(ea, eb);
      gamma *= mpq_class(mpz_gcd(ea.content().get_num(), eb.content().get_num()));
      std::vector<Poly::Term> terms;
      const mpz_class half = xi / 2;
      for (std::size_t k = 0; !gamma.is_zero(); ++k) {
        std::vector<Poly::Term> digit;
        for (const auto& t : gamma.terms()) {
          mpz_class r;
          mpz_fdiv_r(r.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
          if (r > half)
            r -= xi;
          if (r != 0) {
            digit.push_back({t.exp, mpq_class(r)});
            Exponent e = t.exp;
            e[v] = static_cast<Exponent::value_type>(k);
            terms.push_back({e, mpq_class(r)});
          }
        }
        gamma -= Poly::from_terms(std::move(digit));
        gamma *= mpq_class(1, 1) / mpq_class(xi);
      }
      const Poly g = normalize_z(Poly::from_terms(std::move(terms)));
      if (!g.is_zero() && g.degree_in(v) <= deg && divide_exact(a, g) && divide_exact(b, g))
        return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Sparse pseudo-remainder of a by b with respect to the outer variable.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    Poly lr = a.back();
    for (auto& c : a)
      if (!c.is_zero())
        c = c * lcb;
    for (std::size_t k = 0; k <= db; ++k)
      if (!b[k].is_zero())
        a[k + shift] -= lr * b[k];
    a.back() = Poly();
    trim(a);
  }
  return a;
}

// Univariate image in x_{v+1} mod p with the other variables set to `pt`;
// empty when a denominator vanishes or the degree in x_{v+1} drops.
std::vector<std::uint64_t> image_mod(const Poly& a, std::size_t v, const std::uint64_t* pt, std::uint64_t p) {
  const int deg = a.degree_in(v);
  std::vector<std::uint64_t> u(static_cast<std::size_t>(deg) + 1, 0);
  for (const auto& t : a.terms()) {
    const std::uint64_t den = mpz_mod_u64(t.coeff.get_den(), p);
    if (den == 0)
      return {};
    std::uint64_t c = mulmod(mpz_mod_u64(t.coeff.get_num(), p), powmod(den, p - 2, p), p);
    for (std::size_t w = 0; w < kMaxVars; ++w)
      if (w != v && t.exp[w])
        c = mulmod(c, powmod(pt[w], static_cast<std::uint64_t>(t.exp[w]), p), p);
    auto& slot = u[static_cast<std::size_t>(t.exp[v])];
    slot = (slot + c) % p;
  }
  if (u.back() == 0)
    return {};
  return u;
}

// degree of gcd(a, b) over Z/p, both with nonzero top coefficient
int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, std::uint64_t p) {
  auto trim = [](std::vector<std::uint64_t>& u) {
    while (!u.empty() && u.back() == 0)
      u.pop_back();
  };
  if (a.size() < b.size())
    std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv, p);
      const std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k)
        a[off + k] = (a[off + k] + p - mulmod(f, b[k], p)) % p;
      trim(a);
      if (a.empty())
        break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True only when gcd(a, b) is certainly constant: for every variable the
// images at a point that keeps both degrees are coprime mod p, and such an
// image bounds the degree of the true gcd from above.
bool certainly_coprime(const Poly& a, const Poly& b, unsigned mask) {
  constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  static const std::uint64_t pt[kMaxVars] = {0x1d6f3a2b5c11ull % p, 0x2a9e44c1f05ull % p, 0x3b0c7d912e3ull % p,
                                              0x4f1e2d3c4b5ull % p, 0x5a6b7c8d9e1ull % p, 0x6c5d4e3f2a1ull % p,
                                              0x7e8f9a0b1c3ull % p, 0x8a7b6c5d4e9ull % p};
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(mask & (1u << v)))
      continue;
    const auto ua = image_mod(a, v, pt, p), ub = image_mod(b, v, pt, p);
    if (ua.empty() || ub.empty() || gcd_degree_mod(ua, ub, p) > 0)
      return false;
  }
  return true;
}

Poly gcd_rec(const Poly& a0, const Poly& b0) {
  if (a0.is_zero())
    return normalize_z(b0);
  if (b0.is_zero())
    return normalize_z(a0);
  if (a0.is_constant() || b0.is_constant())
    return Poly(1);
  if (a0.is_monomial())
    return monomial_gcd(a0, b0);
  if (b0.is_monomial())
    return monomial_gcd(b0, a0);
  if (a0 == b0)
    return normalize_z(a0);

  const Poly a = normalize_z(a0);
  const Poly b = normalize_z(b0);
  const unsigned ma = a.variables_mask(), mb = b.variables_mask();

  // a variable present in only one argument drops out through that argument's content
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const unsigned bit = 1u << v;
    if ((ma & bit) && !(mb & bit))
      return gcd_rec(content_of(to_univariate(a, v)), b);
    if ((mb & bit) && !(ma & bit))
      return gcd_rec(a, content_of(to_univariate(b, v)));
  }

  if (certainly_coprime(a, b, ma))
    return Poly(1);
  if (auto g = heuristic_gcd(a, b))
    return *g;

  std::size_t best = kMaxVars;
  int best_deg = 0;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(ma & (1u << v)))
      continue;
    const int d = std::max(a.degree_in(v), b.degree_in(v));
    if (best == kMaxVars || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  const std::size_t v = best;

  UPoly ua = to_univariate(a, v), ub = to_univariate(b, v);
  const Poly ca = content_of(ua), cb = content_of(ub);
  const Poly c = gcd_rec(ca, cb);
  make_primitive(ua);
  make_primitive(ub);

  if (ua.size() < ub.size())
    std::swap(ua, ub);
  while (!ub.empty()) {
    if (ub.size() == 1)
      return c;
    UPoly r = pseudo_remainder(std::move(ua), ub);
    ua = std::move(ub);
    make_primitive(r);
    ub = std::move(r);
  }
  make_primitive(ua);
  return normalize_z(c * from_univariate(ua, v));
}

} // namespace

Poly::Poly(const mpq_class& c) {
  if (c != 0)
    terms_.push_back({Exponent{}, c});
}

Poly Poly::variable(std::size_t i) { return monomial(Exponent::unit(i), 1); }

Poly Poly::monomial(const Exponent& e, const mpq_class& c) {
  Poly p;
  if (c != 0)
    p.terms_.push_back({e, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0)
    p.terms_.pop_back();
  return p;
}

bool Poly::is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }

mpq_class Poly::constant_value() const {
  if (terms_.empty())
    return 0;
  return terms_.back().exp.is_zero() ? terms_.back().coeff : mpq_class(0);
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().exp.order(); }

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_)
    d = std::max(d, static_cast<int>(t.exp[var]));
  return d;
}

unsigned Poly::variables_mask() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exp[i])
        mask |= 1u << i;
  return mask;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero())
    return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  if (c == 1)
    return *this;
  for (auto& t : terms_)
    t.coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  if (b.is_monomial())
    return a.mul_term(b.leading_exp(), b.leading_coeff());
  if (a.is_monomial())
    return b.mul_term(a.leading_exp(), a.leading_coeff());
  // multiply integer images and divide by the denominators once per term
  const mpz_class da = a.denominator_lcm(), db = b.denominator_lcm();
  auto scaled = [](const Poly& p, const mpz_class& d) {
    std::vector<mpz_class> out;
    out.reserve(p.terms_.size());
    for (const auto& t : p.terms_)
      out.push_back(t.coeff.get_num() * (d / t.coeff.get_den()));
    return out;
  };
  const std::vector<mpz_class> ia = scaled(a, da), ib = scaled(b, db);
  std::unordered_map<Exponent, mpz_class, ExponentHash> acc;
  acc.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    for (std::size_t j = 0; j < b.terms_.size(); ++j) {
      mpz_class& slot = acc[a.terms_[i].exp + b.terms_[j].exp];
      mpz_addmul(slot.get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
    }
  const mpz_class den = da * db;
  std::vector<Poly::Term> prod;
  prod.reserve(acc.size());
  for (auto& [e, z] : acc) {
    if (z == 0)
      continue;
    mpq_class c(z, den);
    c.canonicalize();
    prod.push_back({e, std::move(c)});
  }
  std::sort(prod.begin(), prod.end(), term_greater);
  Poly r;
  r.terms_ = std::move(prod);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

mpz_class Poly::denominator_lcm() const {
  mpz_class d = 1;
  for (const auto& t : terms_)
    if (t.coeff.get_den() != 1)
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
  return d;
}

Poly Poly::mul_term(const Exponent& shift, const mpq_class& coeff) const {
  Poly r;
  if (coeff == 0)
    return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.exp + shift, t.coeff * coeff});
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exp[var] == 0)
      continue;
    Exponent e = t.exp;
    const auto k = e[var];
    e[var] = static_cast<Exponent::value_type>(k - 1);
    out.push_back({e, t.coeff * k});
  }
  // differentiation by one variable keeps the relative grevlex order except
  // for ties broken differently, so re-canonicalize
  return from_terms(std::move(out));
}

mpq_class Poly::content() const {
  if (terms_.empty())
    return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : terms_) {
    num = mpz_gcd(num, t.coeff.get_num());
    den = mpz_lcm(den, t.coeff.get_den());
  }
  mpq_class c(num, den);
  c.canonicalize();
  if (terms_.front().coeff < 0)
    c = -c;
  return c;
}

Poly Poly::primitive_part() const {
  if (terms_.empty())
    return *this;
  Poly r = *this;
  r *= mpq_class(1 / content());
  return r;
}

Poly Poly::monic() const {
  if (terms_.empty())
    return *this;
  Poly r = *this;
  r *= mpq_class(1 / leading_coeff());
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0)
        c = -c;
    }
    first = false;
    const bool unit = c == 1 && !t.exp.is_zero();
    if (!unit) {
      os << c.get_str();
      if (!t.exp.is_zero())
        os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.exp[i])
        continue;
      if (!first_var)
        os << "*";
      first_var = false;
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (t.exp[i] > 1)
        os << "^" << t.exp[i];
    }
  }
  return os.str();
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.exp.hash();
    h = h * 31 + std::hash<std::string>{}(t.coeff.get_str());
  }
  return h;
}

std::optional<std::uint64_t> Poly::eval_mod(const std::vector<std::uint64_t>& point,
                                            std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    const std::uint64_t den = mpz_mod_u64(t.coeff.get_den(), p);
    if (den == 0)
      return std::nullopt;
    std::uint64_t v = mulmod(mpz_mod_u64(t.coeff.get_num(), p), powmod(den, p - 2, p), p);
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exp[i])
        v = mulmod(v, powmod(i < point.size() ? point[i] : 0, t.exp[i], p), p);
    acc = (acc + v) % p;
  }
  return acc;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero())
    return std::nullopt;
  if (b.is_constant()) {
    Poly q = a;
    q *= mpq_class(1 / b.leading_coeff());
    return q;
  }
  for (std::size_t v = 0; v < kMaxVars; ++v)
    if (b.degree_in(v) > a.degree_in(v))
      return std::nullopt;
  // Over the integers: with b = cb * B for primitive integer B and
  // a = A / da, Gauss's lemma puts A / B in Z[x] whenever it exists. The
  // remainder lives in an ordered map so each quotient term costs |b|
  // insertions instead of a merge with the whole remainder.
  struct Greater {
    bool operator()(const Exponent& x, const Exponent& y) const { return grevlex_greater(x, y); }
  };
  const mpq_class cb = b.content();
  const Poly bp = b * (1 / cb);
  const mpz_class da = a.denominator_lcm();
  std::map<Exponent, mpz_class, Greater> rem;
  for (const auto& t : a.terms())
    rem.emplace(t.exp, t.coeff.get_num() * (da / t.coeff.get_den()));
  const Exponent& lb = bp.leading_exp();
  const mpz_class& lc = bp.leading_coeff().get_num();
  std::vector<std::pair<Exponent, mpz_class>> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lb.divides(top->first) || !mpz_divisible_p(top->second.get_mpz_t(), lc.get_mpz_t()))
      return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
    const Exponent e = top->first - lb;
    rem.erase(top);
    for (std::size_t k = 1; k < bp.terms().size(); ++k) {
      const auto& u = bp.terms()[k];
      auto [it, fresh] = rem.try_emplace(e + u.exp);
      mpz_submul(it->second.get_mpz_t(), t.get_mpz_t(), u.coeff.get_num_mpz_t());
      if (!fresh && it->second == 0)
        rem.erase(it);
    }
    quotient.emplace_back(e, std::move(t));
  }
  // q = A / B / (da * cb)
  const mpq_class scale = 1 / (cb * da);
  Poly q;
  q.terms_.reserve(quotient.size());
  for (auto& [e, z] : quotient)
    q.terms_.push_back({e, mpq_class(z) * scale});
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    return Poly();
  return gcd_rec(a, b).monic();
}

} // namespace diffdim
