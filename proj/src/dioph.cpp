#include "mixspec/dioph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace mixspec::dioph {

namespace {

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("dioph: int64 overflow");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("dioph: int64 overflow");
  return out;
}

long long checked_pow(long long base, int e) {
  long long out = 1;
  for (int i = 0; i < e; ++i) out = checked_mul(out, base);
  return out;
}

int sign_of(long long v) { return (v > 0) - (v < 0); }

constexpr std::array<char, kVars> kNames{'p', 'q', 'r', 's'};

using Point = std::array<long long, kVars>;

}  // namespace

Poly Poly::constant(long long c) {
  Poly p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

Poly Poly::var(int i) {
  Poly p;
  Exponents e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, 1);
  return p;
}

void Poly::add_term(const Exponents& e, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

long long Poly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

bool Poly::is_multilinear() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return std::all_of(t.first.begin(), t.first.end(), [](int e) { return e <= 1; });
  });
}

unsigned Poly::support() const {
  unsigned mask = 0;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kVars; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) mask |= 1U << i;
  return mask;
}

Poly Poly::substitute(int var, long long value) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const int power = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    out.add_term(f, checked_mul(c, checked_pow(value, power)));
  }
  return out;
}

Poly Poly::shifted(const Point& lower) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    Poly term = constant(c);
    for (int i = 0; i < kVars; ++i) {
      const Poly factor = var(i) + constant(lower[static_cast<std::size_t>(i)]);
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) term = term * factor;
    }
    out = out + term;
  }
  return out;
}

long long Poly::evaluate(const Point& x) const {
  long long total = 0;
  for (const auto& [e, c] : terms_) {
    long long v = c;
    for (int i = 0; i < kVars; ++i) v = checked_mul(v, checked_pow(x[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]));
    total = checked_add(total, v);
  }
  return total;
}

int Poly::definite_sign(const Point& lower) const {
  const Poly h = shifted(lower);
  const int s = sign_of(h.constant_term());
  if (s == 0) return 0;
  for (const auto& [e, c] : h.terms_) {
    if (sign_of(c) == -s) return 0;
  }
  return s;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, long long>> ordered(terms_.begin(), terms_.end());
  auto degree = [](const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; };
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) > degree(b.first);
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    std::string mono;
    for (int i = 0; i < kVars; ++i) {
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) mono += kNames[static_cast<std::size_t>(i)];
    }
    const long long mag = c < 0 ? -c : c;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty() || mag != 1) out += std::to_string(mag);
    out += mono;
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

Poly operator*(long long c, const Poly& a) { return Poly::constant(c) * a; }

// ---------------------------------------------------------------------------

namespace {

const Poly P = Poly::var(0);
const Poly Q = Poly::var(1);
const Poly R = Poly::var(2);
const Poly S = Poly::var(3);
Poly K(long long c) { return Poly::constant(c); }

std::vector<SignPattern> build_patterns() {
  const Poly pqrs = P * Q * R * S;
  return {
      {"(p,q,r,-s)", {1, 1, 1, -1}, {R, S, P + Q - K(1)}, {K(-1) * P * Q * R}},
      {"(p,q,-r,-s)", {1, 1, -1, -1}, {R, S, P + Q - K(1)}, {K(-1) * P * Q * R}},
      {"(p,-q,-r,s)", {1, -1, -1, 1}, {Q, R, P + S - K(1)}, {P, S, K(1) - Q - R}},
      {"(p,-q,r,-s)", {1, -1, 1, -1}, {pqrs}, {P, R, Q * S - S - 2 * Q + K(1)}},
      {"(p,-q,-r,-s)", {1, -1, -1, -1}, {pqrs}, {P, Q * R * S - R * S - Q * R - Q + K(1)}},
      {"(-p,q,r,-s)", {-1, 1, 1, -1}, {pqrs}, {Q, R, (P - K(1)) * (S - K(1)) - K(1)}},
      {"(-p,-q,r,-s)", {-1, -1, 1, -1}, {pqrs}, {R, P * Q * S - P * Q - Q - S + K(1)}},
      {"(p,q,-r,s)", {1, 1, -1, 1}, {R, K(-1) * P * Q * S + 2 * Q * S + P * Q + P * S - S - Q}, {K(-1) * pqrs}},
      {"(p,q,r,s)",
       {1, 1, 1, 1},
       {K(-1) * pqrs + P * Q * R + Q * R * S + P * S + P * R + Q * S - P - Q - R - S + K(1)},
       {K(-1) * pqrs}},
  };
}

long long product_at(const std::vector<Poly>& factors, const Point& x) {
  long long v = 1;
  for (const auto& f : factors) v = checked_mul(v, f.evaluate(x));
  return v;
}

// Complete root search for multilinear polynomials over integer boxes [lower, inf).
class Search {
 public:
  explicit Search(const Point& lower) : lower_(lower) {}

  void solve(const Poly& g, unsigned free, Point fixed) {
    if (++branches_ > kBranchLimit) throw CertificateError("case search exceeded its branch limit");
    if (free == 0) {
      if (g.constant_term() == 0) solutions_.insert(fixed);
      return;
    }
    if (g.definite_sign(lower_) != 0) return;
    const unsigned support = g.support();
    if (support != free) {
      const std::size_t before = solutions_.size();
      solve(g, support, fixed);
      if (solutions_.size() != before) throw CertificateError("root family with a free variable: " + g.to_string());
      return;
    }
    std::vector<int> vars;
    for (int i = 0; i < kVars; ++i)
      if (free & (1U << i)) vars.push_back(i);

    if (vars.size() == 1) {
      solve_linear(g, vars[0], fixed);
    } else if (vars.size() == 2) {
      solve_bilinear(g, vars[0], vars[1], fixed);
    } else {
      Exponents top{0, 0, 0, 0};
      for (int v : vars) top[static_cast<std::size_t>(v)] = 1;
      const long long c = g.coeff(top);
      if (c == 0) throw CertificateError("no dominating monomial in " + g.to_string());
      long long others = 0;
      for (const auto& [e, coef] : g.terms()) {
        if (e != top) others = checked_add(others, coef < 0 ? -coef : coef);
      }
      // With every variable >= m, |c| * prod > others * prod / m bounds every other term away.
      const long long m = others / (c < 0 ? -c : c) + 1;
      for (int v : vars) {
        for (long long value = lower_[static_cast<std::size_t>(v)]; value < m; ++value) {
          Point next = fixed;
          next[static_cast<std::size_t>(v)] = value;
          solve(g.substitute(v, value), free & ~(1U << v), next);
        }
      }
    }
  }

  const std::set<Point>& solutions() const { return solutions_; }
  long long branches() const { return branches_; }

 private:
  static constexpr long long kBranchLimit = 50'000'000;

  void accept(Point fixed, int var, long long value) {
    if (value < lower_[static_cast<std::size_t>(var)]) return;
    fixed[static_cast<std::size_t>(var)] = value;
    solutions_.insert(fixed);
  }

  void solve_linear(const Poly& g, int v, Point fixed) {
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    const long long a = g.coeff(e);
    const long long b = g.constant_term();
    if (a == 0 || b % a != 0) return;
    accept(fixed, v, -b / a);
  }

  // A xy + B x + C y + D = 0  <=>  (A x + C)(A y + B) = BC - AD.
  void solve_bilinear(const Poly& g, int x, int y, Point fixed) {
    Exponents ex{0, 0, 0, 0};
    Exponents ey{0, 0, 0, 0};
    ex[static_cast<std::size_t>(x)] = 1;
    ey[static_cast<std::size_t>(y)] = 1;
    Exponents exy = ex;
    exy[static_cast<std::size_t>(y)] = 1;
    long long a = g.coeff(exy);
    long long b = g.coeff(ex);
    long long c = g.coeff(ey);
    long long d = g.constant_term();
    const long long lx = lower_[static_cast<std::size_t>(x)];
    const long long ly = lower_[static_cast<std::size_t>(y)];
    if (a == 0) {
      if (b < 0) {
        b = -b;
        c = -c;
        d = -d;
      }
      if (c <= 0) throw CertificateError("unbounded linear case " + g.to_string());
      // b x = -d - c y <= -d - c ly.
      const long long hi = (-d - checked_mul(c, ly)) / b;
      for (long long vx = lx; vx <= hi; ++vx) {
        const long long rest = checked_add(checked_mul(b, vx), d);
        if (rest % c == 0) {
          Point next = fixed;
          next[static_cast<std::size_t>(x)] = vx;
          accept(next, y, -rest / c);
        }
      }
      return;
    }
    const long long n = checked_add(checked_mul(b, c), -checked_mul(a, d));
    if (n == 0) {
      if ((-c) % a == 0 && -c / a >= lx) throw CertificateError("root family in " + g.to_string());
      if ((-b) % a == 0 && -b / a >= ly) throw CertificateError("root family in " + g.to_string());
      return;
    }
    const long long mag = n < 0 ? -n : n;
    for (long long d1 = 1; d1 * d1 <= mag; ++d1) {
      if (mag % d1 != 0) continue;
      for (long long f : {d1, mag / d1, -d1, -(mag / d1)}) {
        const long long g2 = n / f;
        if ((f - c) % a != 0 || (g2 - b) % a != 0) continue;
        const long long vx = (f - c) / a;
        const long long vy = (g2 - b) / a;
        if (vx < lx || vy < ly) continue;
        Point next = fixed;
        next[static_cast<std::size_t>(x)] = vx;
        next[static_cast<std::size_t>(y)] = vy;
        solutions_.insert(next);
      }
    }
  }

  Point lower_;
  std::set<Point> solutions_;
  long long branches_ = 0;
};

void enumerate_bounded(unsigned vars, long long limit, const Point& lower, Point current, int from,
                       std::vector<Point>& out) {
  // Assignments of `vars` (ascending) whose product stays <= limit.
  int v = from;
  while (v < kVars && !(vars & (1U << v))) ++v;
  if (v == kVars) {
    out.push_back(current);
    return;
  }
  long long used = 1;
  for (int i = 0; i < v; ++i)
    if (vars & (1U << i)) used *= current[static_cast<std::size_t>(i)];
  for (long long value = lower[static_cast<std::size_t>(v)]; used * value <= limit; ++value) {
    current[static_cast<std::size_t>(v)] = value;
    enumerate_bounded(vars, limit, lower, current, v + 1, out);
  }
}

bool is_unit_monomial(const Poly& m) {
  return m.terms().size() == 1 && m.terms().begin()->second == 1 && m.is_multilinear();
}

std::vector<Point> certified_roots(const Poly& f, unsigned vars, Certificate& cert) {
  Poly rhs;
  bool shapes_ok = true;
  for (const auto& t : cert.terms) {
    rhs = rhs + t.coef * t.monomial * (t.bounded - Poly::constant(t.threshold));
    shapes_ok = shapes_ok && t.coef > 0 && is_unit_monomial(t.monomial) && is_unit_monomial(t.bounded) &&
                t.threshold >= 1;
  }
  rhs = rhs - cert.remainder;
  cert.identity_holds = shapes_ok && rhs == cert.multiplier * f;
  cert.remainder_negative = cert.remainder.definite_sign(cert.lower) < 0;
  if (!cert.identity_holds || !cert.remainder_negative) return {};

  Search search(cert.lower);
  for (const auto& t : cert.terms) {
    const unsigned bounded_vars = t.bounded.support();
    std::vector<Point> assignments;
    enumerate_bounded(bounded_vars, t.threshold - 1, cert.lower, cert.lower, 0, assignments);
    for (const Point& a : assignments) {
      Poly g = f;
      for (int v = 0; v < kVars; ++v)
        if (bounded_vars & (1U << v)) g = g.substitute(v, a[static_cast<std::size_t>(v)]);
      search.solve(g, vars & ~bounded_vars, a);
    }
    cert.cases.push_back(t.bounded.to_string() + " <= " + std::to_string(t.threshold - 1) + ": " +
                         std::to_string(assignments.size()) + " assignment(s)");
  }
  cert.case_branches = search.branches();
  cert.complete = true;
  return {search.solutions().begin(), search.solutions().end()};
}

// Roots inside [lower, bound]^vars; f must be multilinear so the last variable is solved linearly.
std::vector<Point> brute_force_roots(const Poly& f, unsigned vars, const Point& lower, long long bound) {
  std::vector<int> order;
  for (int i = 0; i < kVars; ++i)
    if (vars & (1U << i)) order.push_back(i);
  const int last = order.back();
  order.pop_back();
  std::vector<Point> out;
  Point x = lower;
  for (int i = 0; i < kVars; ++i)
    if (!(vars & (1U << i))) x[static_cast<std::size_t>(i)] = 0;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      Point at0 = x;
      Point at1 = x;
      at0[static_cast<std::size_t>(last)] = 0;
      at1[static_cast<std::size_t>(last)] = 1;
      const long long b = f.evaluate(at0);
      const long long a = f.evaluate(at1) - b;
      if (a == 0) {
        if (b == 0) {
          for (long long v = lower[static_cast<std::size_t>(last)]; v <= bound; ++v) {
            at0[static_cast<std::size_t>(last)] = v;
            out.push_back(at0);
          }
        }
        return;
      }
      if (b % a != 0) return;
      const long long v = -b / a;
      if (v < lower[static_cast<std::size_t>(last)] || v > bound) return;
      at0[static_cast<std::size_t>(last)] = v;
      out.push_back(at0);
      return;
    }
    const int var = order[depth];
    for (long long v = lower[static_cast<std::size_t>(var)]; v <= bound; ++v) {
      x[static_cast<std::size_t>(var)] = v;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<std::vector<long long>> project(const std::vector<Point>& points, unsigned vars, bool reversal) {
  std::set<std::vector<long long>> out;
  for (const auto& pt : points) {
    std::vector<long long> t;
    for (int i = 0; i < kVars; ++i)
      if (vars & (1U << i)) t.push_back(pt[static_cast<std::size_t>(i)]);
    if (reversal) {
      std::vector<long long> rev(t.rbegin(), t.rend());
      t = std::min(t, rev);
    }
    out.insert(t);
  }
  return {out.begin(), out.end()};
}

SolveReport run_solver(std::string family, const Poly& f, unsigned vars, Certificate cert, long long bound,
                       bool reversal) {
  SolveReport report;
  report.family = std::move(family);
  report.arity = std::popcount(vars);
  report.bound = bound;
  cert.equation = f.to_string() + " = 0";
  const auto roots = certified_roots(f, vars, cert);
  report.solutions = project(roots, vars, reversal);
  report.brute_force = project(brute_force_roots(f, vars, cert.lower, bound), vars, reversal);
  std::vector<std::vector<long long>> within;
  for (const auto& t : report.solutions) {
    if (std::all_of(t.begin(), t.end(), [&](long long v) { return v <= bound; })) within.push_back(t);
  }
  report.brute_force_agrees = within == report.brute_force;
  report.certificate = std::move(cert);
  return report;
}

}  // namespace

const std::vector<SignPattern>& sign_patterns() {
  static const std::vector<SignPattern> patterns = build_patterns();
  return patterns;
}

const SignPattern& sign_pattern(std::string_view name) {
  for (const auto& p : sign_patterns()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown sign pattern " + std::string(name));
}

DetPair det_formulas(const SignPattern& pattern, const Point& params) {
  for (long long v : params) {
    if (v < 1) throw std::invalid_argument("det_formulas: parameters must be >= 1");
  }
  return {product_at(pattern.det_q_factors, params), product_at(pattern.det_q_plus_i_factors, params)};
}

DetPair det_formulas(std::string_view pattern_name, const Point& params) {
  return det_formulas(sign_pattern(pattern_name), params);
}

ExtensionType pattern_type(const SignPattern& pattern, const Point& params) {
  ExtensionType t;
  for (std::size_t i = 0; i < kVars; ++i) t.push_back(static_cast<int>(pattern.signs[i] * params[i]));
  return t;
}

SolveReport solve_bip_P4(long long bound) {
  const Poly f = P * Q * R * S - P * Q - Q * R - R * S + K(1);
  Certificate cert;
  cert.multiplier = 3;
  cert.terms = {{1, P * Q, R * S, 3}, {1, Q * R, P * S, 3}, {1, R * S, P * Q, 3}};
  cert.remainder = K(-3);
  cert.lower = {1, 1, 1, 1};
  return run_solver("bipP4", f, 0b1111, std::move(cert), bound, true);
}

SolveReport solve_thm10_iii(long long bound) {
  const Poly f = K(-1) * P * Q * S + 2 * Q * S + P * Q + P * S - S - Q;
  Certificate cert;
  cert.multiplier = -3;
  cert.terms = {{1, Q * S, P, 6}, {1, P * Q, S, 3}, {1, P * S, Q, 3}};
  cert.remainder = K(-3) * (Q + S);
  cert.lower = {2, 2, 1, 2};
  return run_solver("iii", f, 0b1011, std::move(cert), bound, false);
}

SolveReport solve_thm10_iv(long long bound) {
  const Poly f = sign_pattern("(p,q,r,s)").det_q_factors.front();
  Certificate cert;
  cert.multiplier = -12;
  cert.terms = {{3, P * Q * R, S, 4}, {3, Q * R * S, P, 4}, {2, P * S, Q * R, 6}, {2, P * R, Q * S, 6},
                {2, Q * S, P * R, 6}};
  cert.remainder = K(-12) * (P + Q + R + S - K(1));
  cert.lower = {2, 2, 2, 2};
  return run_solver("iv", f, 0b1111, std::move(cert), bound, true);
}

NoSolutionReport verify_no_solution_patterns(long long bound) {
  struct Case {
    const char* name;
    Point lower;
  };
  static constexpr std::array<Case, 4> kCases{{{"(p,q,r,-s)", {1, 1, 1, 1}},
                                               {"(p,q,-r,-s)", {1, 1, 1, 1}},
                                               {"(p,-q,-r,s)", {1, 1, 1, 1}},
                                               {"(-p,-q,r,-s)", {2, 2, 1, 2}}}};
  NoSolutionReport report;
  report.bound = bound;
  report.all_clear = true;
  for (const auto& c : kCases) {
    const SignPattern& pattern = sign_pattern(c.name);
    NoSolutionCheck check;
    check.pattern = c.name;
    check.lower = c.lower;
    check.det_q_definite = true;
    check.det_q_plus_i_definite = true;
    for (const auto& f : pattern.det_q_factors) {
      check.det_q_factors.push_back(f.to_string());
      check.det_q_definite = check.det_q_definite && f.definite_sign(c.lower) != 0;
    }
    for (const auto& f : pattern.det_q_plus_i_factors) {
      check.det_q_plus_i_factors.push_back(f.to_string());
      check.det_q_plus_i_definite = check.det_q_plus_i_definite && f.definite_sign(c.lower) != 0;
    }
    Point x{};
    for (x[0] = c.lower[0]; x[0] <= bound; ++x[0])
      for (x[1] = c.lower[1]; x[1] <= bound; ++x[1])
        for (x[2] = c.lower[2]; x[2] <= bound; ++x[2])
          for (x[3] = c.lower[3]; x[3] <= bound; ++x[3]) {
            const DetPair d = det_formulas(pattern, x);
            ++check.tuples_scanned;
            if (d.det_q == 0 || d.det_q_plus_i == 0) ++check.zeros_found;
          }
    report.all_clear = report.all_clear && check.det_q_definite && check.det_q_plus_i_definite && check.zeros_found == 0;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace mixspec::dioph
