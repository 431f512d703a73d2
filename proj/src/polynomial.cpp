#include "erfpoly/polynomial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "erfpoly/errors.hpp"

namespace erfpoly {

Polynomial::Polynomial() : index_(0), coeffs_{mpz_class(1)} {}

Polynomial::Polynomial(int index, std::vector<mpz_class> coeffs)
    : index_(index), coeffs_(std::move(coeffs)) {
  if (index_ < 0 || coeffs_.size() != static_cast<std::size_t>(index_) + 1) {
    throw std::invalid_argument("Polynomial: P_n needs exactly n+1 coefficients");
  }
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ' ';
    out += coeffs_[k].get_str();
  }
  return out;
}

mpz_class factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

std::string check_invariants(const Polynomial& p) {
  const int n = p.index();
  std::ostringstream why;
  if (p.degree() != n) {
    why << "P_" << n << " has degree " << p.degree();
    return why.str();
  }
  if (p[n] != factorial(n)) {
    why << "P_" << n << " leading coefficient " << p[n] << " != " << n << "!";
    return why.str();
  }
  for (int k = 0; k <= n; ++k) {
    if (sgn(p[k]) < 0) {
      why << "P_" << n << " coefficient " << k << " is negative";
      return why.str();
    }
    if ((k - n) % 2 != 0 && p[k] != 0) {
      why << "P_" << n << " coefficient " << k << " breaks parity";
      return why.str();
    }
  }
  return {};
}

Polynomial next_poly(const Polynomial& p) {
  const int n = p.index();
  const auto c = p.coeffs();
  std::vector<mpz_class> out(static_cast<std::size_t>(n) + 2);
  const unsigned long np1 = static_cast<unsigned long>(n) + 1;
  for (int k = 0; k <= n + 1; ++k) {
    mpz_class& v = out[k];
    // Only every other coefficient is nonzero.
    if ((k - (n + 1)) % 2 != 0) continue;
    if (k + 1 <= n) v = c[k + 1] * static_cast<unsigned long>(k + 1);
    if (k >= 1) mpz_addmul_ui(v.get_mpz_t(), c[k - 1].get_mpz_t(), np1);
  }
  return Polynomial(n + 1, std::move(out));
}

std::vector<Polynomial> poly_sequence(int n_max, int ceiling) {
  if (n_max < 0) throw std::invalid_argument("poly_sequence: n_max must be >= 0");
  if (n_max > ceiling) {
    throw ResourceError("poly_sequence: n_max " + std::to_string(n_max) +
                        " exceeds ceiling " + std::to_string(ceiling));
  }
  std::vector<Polynomial> seq;
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  seq.emplace_back();
  for (int n = 0; n < n_max; ++n) seq.push_back(next_poly(seq.back()));
  return seq;
}

Polynomial poly_at(int n, int ceiling) {
  if (n < 0) throw std::invalid_argument("poly_at: n must be >= 0");
  if (n > ceiling) {
    throw ResourceError("poly_at: n " + std::to_string(n) + " exceeds ceiling " +
                        std::to_string(ceiling));
  }
  Polynomial p;
  for (int k = 0; k < n; ++k) p = next_poly(p);
  return p;
}

mpq_class eval_exact(const Polynomial& p, const mpq_class& x) {
  const auto c = p.coeffs();
  mpq_class acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += mpq_class(*it);
  }
  acc.canonicalize();
  return acc;
}

mpq_class exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("exact_rational: non-finite input");
  mpq_class q(x);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const bool plain = text.find_first_of(".eE") == std::string::npos;
  if (plain) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || (text.find('/') != std::string::npos && q.get_den() == 0)) {
      throw std::invalid_argument("not a rational: " + text);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: " + text);
  }
  if (used != text.size()) throw std::invalid_argument("trailing characters: " + text);
  return exact_rational(d);
}

double log_abs(const mpz_class& z) {
  if (z == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::numbers::ln2;
}

double log_abs(const mpq_class& q) {
  return log_abs(q.get_num()) - log_abs(q.get_den());
}

LogValue eval_log_scaled(const Polynomial& p, const mpq_class& x) {
  const mpq_class v = eval_exact(p, x);
  const int s = sgn(v);
  if (s == 0) return LogValue::zero();
  // Exact n! division first, then one log.
  mpq_class scaled = v / mpq_class(factorial(p.index()));
  scaled.canonicalize();
  return LogValue::from_log(s, log_abs(scaled));
}

double ExactScaledValue::to_double() const {
  if (integer_part == 0) return 0.0;
  // k (pi/2)^(m/2) / sqrt2 = k sqrt(pi)^m 2^{-(m+1)/2}, in extended precision
  // with a single final rounding.
  constexpr long double kSqrtPiL = 1.772453850905516027298167483341145183L;
  constexpr long double kSqrtHalfL = 0.707106781186547524400844362104849039L;
  long exp2 = 0;
  const long double mant = mpz_get_d_2exp(&exp2, integer_part.get_mpz_t());
  const int m = half_power_of_pi_over_2;
  const int twos = m + (sqrt2_inverse ? 1 : 0);
  long double v = mant * std::pow(kSqrtPiL, static_cast<long double>(m));
  const bool odd = twos % 2 != 0;
  if (odd) v *= kSqrtHalfL;
  v = std::ldexp(v, static_cast<int>(exp2) - (odd ? twos - 1 : twos) / 2);
  return static_cast<double>(v);
}

std::string ExactScaledValue::decimal17() const {
  if (integer_part == 0) return "0e0";
  const mp_bitcnt_t prec = 256;
  const mpf_class sqrt_pi("1.7724538509055160272981674833411451827975494561223871282138", prec);
  mpf_class v(integer_part, prec);
  mpf_class pw(0, prec);
  mpf_pow_ui(pw.get_mpf_t(), sqrt_pi.get_mpf_t(), half_power_of_pi_over_2);
  v *= pw;
  const int twos = half_power_of_pi_over_2 + (sqrt2_inverse ? 1 : 0);
  if (twos % 2 != 0) v /= sqrt(mpf_class(2, prec));
  mpf_div_2exp(v.get_mpf_t(), v.get_mpf_t(), twos / 2);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.16Fe", v.get_mpf_t());
  std::string s(buf);
  const auto e = s.find('e');
  const long ex = std::stol(s.substr(e + 1));
  return s.substr(0, e) + "e" + std::to_string(ex);
}

std::string ExactScaledValue::symbolic() const {
  if (integer_part == 0) return "0";
  std::string out = integer_part.get_str() + " * (pi/2)^(" +
                    std::to_string(half_power_of_pi_over_2) + "/2)";
  if (sqrt2_inverse) out += " / sqrt(2)";
  return out;
}

ExactScaledValue inverf_deriv_at_zero(int n) {
  if (n < 1) throw DomainError("inverf_deriv_at_zero: n must be >= 1");
  const Polynomial p = poly_at(n - 1);
  return ExactScaledValue{p[0], n, true};
}

}  // namespace erfpoly
