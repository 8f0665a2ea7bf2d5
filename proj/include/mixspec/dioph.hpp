#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mixspec/mixext.hpp"

namespace mixspec::dioph {

inline constexpr int kVars = 4;
using Exponents = std::array<int, kVars>;

/// Sparse polynomial in p, q, r, s (variables 0..3) with int64 coefficients.
/// Arithmetic throws std::overflow_error instead of wrapping.
class Poly {
 public:
  Poly() = default;
  static Poly constant(long long c);
  static Poly var(int i);

  const std::map<Exponents, long long>& terms() const { return terms_; }
  long long coeff(const Exponents& e) const;
  long long constant_term() const { return coeff({0, 0, 0, 0}); }
  bool is_zero() const { return terms_.empty(); }
  bool is_multilinear() const;
  /// Variables with a positive exponent somewhere, as a bitmask.
  unsigned support() const;

  Poly substitute(int var, long long value) const;
  /// p(x + lower), i.e. the polynomial in the offsets from the lower corner.
  Poly shifted(const std::array<long long, kVars>& lower) const;
  long long evaluate(const std::array<long long, kVars>& x) const;

  /// +1 / -1 if every coefficient after shifting to `lower` has that sign (zeros allowed)
  /// and the constant term is strictly of that sign; 0 otherwise. A nonzero result proves
  /// the polynomial has no root with every variable at or above its lower bound.
  int definite_sign(const std::array<long long, kVars>& lower) const;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(long long c, const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Exponents& e, long long c);
  std::map<Exponents, long long> terms_;
};

/// Sign pattern of a type (±p, ±q, ±r, ±s) on the path with four vertices.
struct SignPattern {
  std::string name;
  std::array<int, kVars> signs;
  std::vector<Poly> det_q_factors;
  std::vector<Poly> det_q_plus_i_factors;
};

/// The nine patterns whose determinants are tabulated, in a fixed order.
const std::vector<SignPattern>& sign_patterns();
/// Throws std::invalid_argument for an unknown name such as "(p,q,r,s)".
const SignPattern& sign_pattern(std::string_view name);

struct DetPair {
  long long det_q = 0;
  long long det_q_plus_i = 0;
  friend bool operator==(const DetPair&, const DetPair&) = default;
};

/// Closed forms of det(Q) and det(Q + I); every parameter must be >= 1.
DetPair det_formulas(const SignPattern& pattern, const std::array<long long, kVars>& params);
DetPair det_formulas(std::string_view pattern_name, const std::array<long long, kVars>& params);
/// The signed type (sign_i * param_i).
ExtensionType pattern_type(const SignPattern& pattern, const std::array<long long, kVars>& params);

/// One summand coef * monomial * (bounded - threshold) of a rewriting.
struct RewriteTerm {
  long long coef;
  Poly monomial;
  Poly bounded;
  long long threshold;
};

/// Exhaustiveness certificate: multiplier * f == sum(terms) - remainder identically and
/// remainder < 0 whenever every variable is at its lower bound or above. A root of f
/// therefore makes some term negative, i.e. bounded <= threshold - 1 for some term, and
/// each such case is solved completely by a dominance/divisor search.
struct Certificate {
  std::string equation;
  long long multiplier = 0;
  std::vector<RewriteTerm> terms;
  Poly remainder;
  std::array<long long, kVars> lower{};
  bool identity_holds = false;
  bool remainder_negative = false;
  std::vector<std::string> cases;  // one line per forced case
  long long case_branches = 0;     // assignments examined across all cases
  bool complete = false;           // every branch terminated in a finite search
};

struct SolveReport {
  std::string family;
  int arity = 0;
  long long bound = 0;
  std::vector<std::vector<long long>> solutions;    // certified, normalized, sorted
  std::vector<std::vector<long long>> brute_force;  // exhaustive within the bound, normalized, sorted
  bool brute_force_agrees = false;
  Certificate certificate;
};

/// pqrs - pq - qr - rs + 1 = 0 over positive integers, modulo reversal.
SolveReport solve_bip_P4(long long bound);
/// -pqs + 2qs + pq + ps - s - q = 0 with p, q, s >= 2; reported as (p, q, s).
SolveReport solve_thm10_iii(long long bound);
/// det(Q) = 0 for type (p,q,r,s) with all entries >= 2, modulo reversal.
SolveReport solve_thm10_iv(long long bound);

struct NoSolutionCheck {
  std::string pattern;
  std::array<long long, kVars> lower{};
  std::vector<std::string> det_q_factors;
  std::vector<std::string> det_q_plus_i_factors;
  bool det_q_definite = false;
  bool det_q_plus_i_definite = false;
  long long tuples_scanned = 0;
  long long zeros_found = 0;
};

struct NoSolutionReport {
  long long bound = 0;
  std::vector<NoSolutionCheck> checks;
  bool all_clear = false;
};

/// Patterns with no admissible root: (p,q,r,-s), (p,q,-r,-s), (p,-q,-r,s), and
/// (-p,-q,r,-s) restricted to p, q, s >= 2.
NoSolutionReport verify_no_solution_patterns(long long bound);

/// Thrown when the case search meets a branch it cannot bound.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mixspec::dioph
