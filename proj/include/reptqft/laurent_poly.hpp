#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace reptqft {

/// Exponent pair of a monomial u^u * v^v. Exponents may be negative.
struct Exponent {
  std::int64_t u = 0;
  std::int64_t v = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Total monomial order used for display and for exact division:
/// lexicographic on (u + v, u).
inline bool monomial_less(const Exponent& a, const Exponent& b) noexcept {
  const std::int64_t da = a.u + a.v;
  const std::int64_t db = b.u + b.v;
  return da != db ? da < db : a.u < b.u;
}

inline Exponent operator+(const Exponent& a, const Exponent& b) noexcept {
  return {a.u + b.u, a.v + b.v};
}

inline Exponent operator-(const Exponent& a, const Exponent& b) noexcept {
  return {a.u - b.u, a.v - b.v};
}

enum class PolyFormat {
  Auto,  ///< powers of q when every term is diagonal, u/v otherwise
  Uv,    ///< always u^a*v^b
};

/// Element of Z[u^{±1}, v^{±1}] with arbitrary-precision coefficients.
///
/// Terms are kept sorted by decreasing monomial order with no zero
/// coefficients, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  struct Term {
    Exponent exp;
    mpz_class coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpz_class& constant);

  static LaurentPoly monomial(const mpz_class& coeff, Exponent exp);
  /// q^k where q = uv.
  static LaurentPoly q(std::int64_t k = 1);
  static LaurentPoly u(std::int64_t k = 1);
  static LaurentPoly v(std::int64_t k = 1);
  /// Canonicalizes an arbitrary term list (merges duplicates, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);

  /// Accepts `u^a*v^b` and `q^k` monomials with signed integer coefficients,
  /// e.g. "q^3 - 2*q^2 + 1" or "3*u^2*v^-1 - v".
  static LaurentPoly parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True when every term is a power of q (u and v exponents agree).
  bool is_diagonal() const noexcept;
  bool is_constant() const noexcept;
  /// Coefficient of the constant monomial.
  mpz_class constant_term() const;
  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Term& trailing_term() const;

  std::string to_string(PolyFormat format = PolyFormat::Auto) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r);

/// Binary exponentiation; pow(p, 0) == 1.
LaurentPoly pow(const LaurentPoly& p, std::uint64_t k);

/// Quotient of an exact division in the Laurent ring. Throws
/// Error(NonExactDivision) when `divisor` does not divide `dividend` and
/// Error(InvalidArgument) when `divisor` is zero.
LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor);

/// Exact value at (u0, v0). Throws Error(ZeroBase) if a zero base meets a
/// negative exponent.
mpq_class eval(const LaurentPoly& p, const mpq_class& u0, const mpq_class& v0);

}  // namespace reptqft
