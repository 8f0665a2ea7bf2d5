#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixspec {

using BigInt = boost::multiprecision::cpp_int;

/// Signals a violated exactness invariant (a division that should have been exact, ...).
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Polynomial with arbitrary-precision integer coefficients, stored in ascending degree.
/// Trailing zero coefficients are never stored; the zero polynomial has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  IntPoly(std::initializer_list<long long> ascending);

  /// c * x^k
  static IntPoly monomial(const BigInt& c, int k);
  /// x - r
  static IntPoly linear_factor(const BigInt& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& coeff(int i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  IntPoly derivative() const;
  IntPoly scaled(const BigInt& c) const;
  IntPoly shifted_down(int k) const;  // divides by x^k; low coefficients must be zero

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Divided by its content; the sign of every coefficient is preserved.
  IntPoly content_reduced() const;
  /// Divided by its content and normalized to a positive leading coefficient.
  IntPoly primitive_part() const;

  /// Sign of p(num/den) for den > 0.
  int sign_at(const BigInt& num, const BigInt& den = 1) const;
  /// Sign of p(x) as x -> +infinity (positive = true) or -infinity.
  int sign_at_infinity(bool positive) const;

  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// r with |lc(b)|^k * a = q * b + r and deg r < deg b (positive multiplier keeps signs).
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// a / b in Z[x]; throws ArithmeticError if the division is not exact over the integers.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Yun's algorithm: p = c * prod f_i^i with squarefree, pairwise coprime, primitive f_i.
/// Returns (f_i, i) for the non-constant factors only.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// Largest k with (x - r)^k dividing p. Throws for the zero polynomial.
int root_mult_at(const IntPoly& p, const BigInt& r);

/// Point of the extended rational line.
struct Endpoint {
  enum class Kind { kNegInfinity, kFinite, kPosInfinity };
  Kind kind = Kind::kFinite;
  BigInt num = 0;
  BigInt den = 1;
  bool closed = false;

  static Endpoint neg_infinity() { return {Kind::kNegInfinity, 0, 1, false}; }
  static Endpoint pos_infinity() { return {Kind::kPosInfinity, 0, 1, false}; }
  static Endpoint open(BigInt num, BigInt den = 1) { return {Kind::kFinite, std::move(num), std::move(den), false}; }
  static Endpoint closed_at(BigInt num, BigInt den = 1) { return {Kind::kFinite, std::move(num), std::move(den), true}; }
};

struct Interval {
  Endpoint lo;
  Endpoint hi;
};

/// Counts real roots with multiplicity inside intervals. The squarefree decomposition
/// and one Sturm chain per factor are built once and shared by every query.
class RootCounter {
 public:
  explicit RootCounter(const IntPoly& p);
  int count(const Interval& interval) const;

 private:
  struct Factor {
    int multiplicity;
    std::vector<IntPoly> chain;
  };
  std::vector<Factor> factors_;
};

/// Real roots of p in the interval, counted with multiplicity. Requires p != 0.
int count_roots_in(const IntPoly& p, const Interval& interval);

/// Sturm sequence f, f', -rem, ... built with fraction-free signed pseudo-remainders.
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

}  // namespace mixspec
