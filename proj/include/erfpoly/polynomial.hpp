#pragma once

// Exact arithmetic for the family P_0 = 1, P_{n+1} = P_n' + x(n+1)P_n.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "erfpoly/log_value.hpp"

namespace erfpoly {

inline constexpr int kDefaultSequenceCeiling = 1000;

// Dense integer polynomial carrying its index in the family.  coeffs[k] is
// the coefficient of x^k.
class Polynomial {
 public:
  // P_0 = 1.
  Polynomial();
  Polynomial(int index, std::vector<mpz_class> coeffs);

  int index() const { return index_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const mpz_class> coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t k) const { return coeffs_[k]; }

  // Coefficients as decimal strings separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int index_;
  std::vector<mpz_class> coeffs_;
};

// Checks degree n, leading coefficient n!, zero coefficients of the wrong
// parity and no negative coefficients.  Returns an empty string when all
// hold, else a description of the first violation.
std::string check_invariants(const Polynomial& p);

// c'_k = (k+1) c_{k+1} + (n+1) c_{k-1}.
Polynomial next_poly(const Polynomial& p);

// [P_0, ..., P_{n_max}].  Throws ResourceError above `ceiling`.
std::vector<Polynomial> poly_sequence(int n_max,
                                      int ceiling = kDefaultSequenceCeiling);

// P_n alone, same ceiling rule.
Polynomial poly_at(int n, int ceiling = kDefaultSequenceCeiling);

// Exact Horner evaluation.
mpq_class eval_exact(const Polynomial& p, const mpq_class& x);

// The exact dyadic rational a finite double denotes.
mpq_class exact_rational(double x);

// Parses "p", "p/q", or a decimal/scientific float (converted through
// double to its exact dyadic value).  Throws std::invalid_argument.
mpq_class parse_rational(const std::string& text);

// ln of |q| for an arbitrary-size nonzero rational.
double log_abs(const mpq_class& q);
double log_abs(const mpz_class& z);

// (sign, ln|P_n(x)/n!|), evaluated exactly before taking the log.  A zero
// value comes back as sign 0.
LogValue eval_log_scaled(const Polynomial& p, const mpq_class& x);

mpz_class factorial(int n);

// integer_part * (pi/2)^(half_power/2) * (1/sqrt 2 if sqrt2_inverse).
struct ExactScaledValue {
  mpz_class integer_part;
  int half_power_of_pi_over_2 = 0;
  bool sqrt2_inverse = false;

  double to_double() const;
  // Correctly rounded to 17 significant digits, in the format_double17 layout.
  std::string decimal17() const;
  // "k * (pi/2)^(m/2) / sqrt(2)", or "0" when integer_part vanishes.
  std::string symbolic() const;
};

// The n-th derivative of inverf at 0: (1/sqrt 2)(pi/2)^(n/2) P_{n-1}(0).
ExactScaledValue inverf_deriv_at_zero(int n);

}  // namespace erfpoly
