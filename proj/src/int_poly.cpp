#include "mixspec/int_poly.hpp"

#include <algorithm>
#include <sstream>

namespace mixspec {

namespace {

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

int sign(const BigInt& v) { return v.sign(); }

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

int compare(const Endpoint& a, const Endpoint& b) {
  using K = Endpoint::Kind;
  if (a.kind != K::kFinite || b.kind != K::kFinite) {
    auto rank = [](K k) { return k == K::kNegInfinity ? 0 : (k == K::kFinite ? 1 : 2); };
    if (a.kind == b.kind) return 0;
    return rank(a.kind) < rank(b.kind) ? -1 : 1;
  }
  const BigInt lhs = a.num * b.den;
  const BigInt rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

int sign_at(const IntPoly& p, const Endpoint& e) {
  switch (e.kind) {
    case Endpoint::Kind::kNegInfinity: return p.sign_at_infinity(false);
    case Endpoint::Kind::kPosInfinity: return p.sign_at_infinity(true);
    case Endpoint::Kind::kFinite: return p.sign_at(e.num, e.den);
  }
  return 0;
}

int sign_changes(const std::vector<IntPoly>& chain, const Endpoint& e) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, e);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void check_endpoint(const Endpoint& e) {
  if (e.kind == Endpoint::Kind::kFinite && e.den <= 0) throw std::invalid_argument("endpoint denominator must be positive");
}

// Distinct roots of a squarefree polynomial (given by its Sturm chain) in the interval.
int count_distinct(const std::vector<IntPoly>& chain, const Interval& iv) {
  const int order = compare(iv.lo, iv.hi);
  if (order > 0) throw std::invalid_argument("interval lower endpoint exceeds upper endpoint");
  const IntPoly& f = chain.front();
  auto is_root = [&](const Endpoint& e) { return e.kind == Endpoint::Kind::kFinite && f.sign_at(e.num, e.den) == 0; };
  if (order == 0) {
    return (iv.lo.kind == Endpoint::Kind::kFinite && iv.lo.closed && iv.hi.closed && is_root(iv.lo)) ? 1 : 0;
  }
  // Sturm: V(a) - V(b) counts roots in (a, b], also when a or b is a root.
  int n = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
  if (!iv.hi.closed && is_root(iv.hi)) --n;
  if (iv.lo.closed && is_root(iv.lo)) ++n;
  return n;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const BigInt& c, int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_factor(const BigInt& r) { return IntPoly(std::vector<BigInt>{-r, 1}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPoly::leading() const { return is_zero() ? zero() : coeffs_.back(); }

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  for (int i = 0; i < k && i <= degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) throw ArithmeticError("shifted_down: polynomial not divisible by x^k");
  }
  if (k > degree()) return {};
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return abs_value(g);
}

IntPoly IntPoly::content_reduced() const {
  const BigInt g = content();
  if (g <= 1) return *this;
  std::vector<BigInt> v = coeffs_;
  for (auto& x : v) x /= g;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::primitive_part() const {
  IntPoly p = content_reduced();
  if (!p.is_zero() && p.leading() < 0) p = -p;
  return p;
}

int IntPoly::sign_at(const BigInt& num, const BigInt& den) const {
  if (is_zero()) return 0;
  if (den == 1) {
    BigInt acc = coeffs_.back();
    for (int i = degree() - 1; i >= 0; --i) acc = acc * num + coeffs_[static_cast<std::size_t>(i)];
    return sign(acc);
  }
  // Homogenized Horner: sum c_i num^i den^(d-i); den > 0 keeps the sign.
  BigInt acc = coeffs_.back();
  BigInt power = den;
  for (int i = degree() - 1; i >= 0; --i) {
    acc = acc * num + coeffs_[static_cast<std::size_t>(i)] * power;
    power *= den;
  }
  return sign(acc);
}

int IntPoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = sign(leading());
  return (positive || degree() % 2 == 0) ? s : -s;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt mag = abs_value(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag;
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<BigInt> v = a.coeffs_;
  for (auto& x : v) x = -x;
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by the zero polynomial");
  const BigInt lead = b.leading();
  const BigInt mult = abs_value(lead);
  const int lead_sign = sign(lead);
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  int dr = a.degree();
  while (dr >= db) {
    const BigInt top = r[static_cast<std::size_t>(dr)];
    if (top == 0) {
      --dr;
      continue;
    }
    // r <- |lc b| * r - sign(lc b) * lc(r) * x^(dr-db) * b
    for (auto& c : r) c *= mult;
    const int shift = dr - db;
    for (int i = 0; i <= db; ++i) {
      const BigInt term = top * b.coeff(i);
      if (lead_sign > 0) {
        r[static_cast<std::size_t>(i + shift)] -= term;
      } else {
        r[static_cast<std::size_t>(i + shift)] += term;
      }
    }
    --dr;
  }
  r.resize(static_cast<std::size_t>(std::max(0, std::min<int>(db, static_cast<int>(r.size())))));
  return IntPoly(std::move(r));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("exact_quotient by the zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) throw ArithmeticError("exact_quotient: divisor degree exceeds dividend degree");
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> q(static_cast<std::size_t>(da - db + 1), 0);
  const BigInt& lead = b.leading();
  for (int k = da - db; k >= 0; --k) {
    BigInt& top = r[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    BigInt rem;
    BigInt quot;
    boost::multiprecision::divide_qr(top, lead, quot, rem);
    if (rem != 0) throw ArithmeticError("exact_quotient: non-integral quotient coefficient");
    q[static_cast<std::size_t>(k)] = quot;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k + i)] -= quot * b.coeff(i);
  }
  for (const auto& c : r) {
    if (c != 0) throw ArithmeticError("exact_quotient: nonzero remainder");
  }
  return IntPoly(std::move(q));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, int>> out;
  if (p.degree() < 1) return out;
  const IntPoly f = p.primitive_part();
  const IntPoly df = f.derivative();
  const IntPoly a0 = gcd(f, df);
  IntPoly b = exact_quotient(f, a0);
  IntPoly c = exact_quotient(df, a0);
  IntPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const IntPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_quotient(b, a);
    c = d.is_zero() ? IntPoly{} : exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

int root_mult_at(const IntPoly& p, const BigInt& r) {
  if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
  std::vector<BigInt> c(p.coefficients().begin(), p.coefficients().end());
  int mult = 0;
  while (c.size() > 1) {
    // synthetic division by (x - r)
    std::vector<BigInt> q(c.size() - 1);
    BigInt acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      q[k] = acc;
      acc = c[k] + r * acc;
    }
    if (acc != 0) break;
    ++mult;
    c = std::move(q);
  }
  return mult;
}

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
  std::vector<IntPoly> chain;
  chain.push_back(squarefree);
  if (squarefree.degree() < 1) return chain;
  chain.push_back(squarefree.derivative().content_reduced());
  while (true) {
    IntPoly r = pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back((-r).content_reduced());
  }
  return chain;
}

RootCounter::RootCounter(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root counting for the zero polynomial");
  for (auto& [factor, mult] : squarefree_decomposition(p)) factors_.push_back({mult, sturm_chain(factor)});
}

int RootCounter::count(const Interval& interval) const {
  check_endpoint(interval.lo);
  check_endpoint(interval.hi);
  int total = 0;
  for (const auto& f : factors_) total += f.multiplicity * count_distinct(f.chain, interval);
  return total;
}

int count_roots_in(const IntPoly& p, const Interval& interval) { return RootCounter(p).count(interval); }

}  // namespace mixspec
