#include "reptqft/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "reptqft/error.hpp"

namespace reptqft {

namespace {

bool term_before(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return monomial_less(b.exp, a.exp);
}

// Merges two canonical term lists, with `sign` applied to the second.
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && term_before(*ia, *ib))) {
      out.push_back(*ia++);
    } else if (ia == a.end() || term_before(*ib, *ia)) {
      out.push_back({ib->exp, sign > 0 ? mpz_class(ib->coeff) : mpz_class(-ib->coeff)});
      ++ib;
    } else {
      mpz_class c = sign > 0 ? mpz_class(ia->coeff + ib->coeff)
                             : mpz_class(ia->coeff - ib->coeff);
      if (c != 0) out.push_back({ia->exp, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    std::vector<LaurentPoly::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      if (at_end()) fail("expected a term");
      terms.push_back(term(sign));
      first = false;
      skip_ws();
    }
    return LaurentPoly::from_terms(std::move(terms));
  }

 private:
  LaurentPoly::Term term(int sign) {
    mpz_class coeff = 1;
    Exponent exp;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = digits();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        factor(exp);
      } else if (!at_end() && is_var(peek())) {
        factor(exp);
      }
    } else {
      factor(exp);
    }
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      factor(exp);
      skip_ws();
    }
    if (sign < 0) coeff = -coeff;
    return {exp, coeff};
  }

  void factor(Exponent& exp) {
    if (at_end() || !is_var(peek())) fail("expected 'u', 'v' or 'q'");
    const char var = peek();
    ++pos_;
    skip_ws();
    std::int64_t k = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool paren = false;
      if (!at_end() && peek() == '(') {
        paren = true;
        ++pos_;
        skip_ws();
      }
      int s = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        s = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      k = s * small_int();
      skip_ws();
      if (paren) {
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
      }
    }
    switch (var) {
      case 'u': exp.u += k; break;
      case 'v': exp.v += k; break;
      default: exp.u += k; exp.v += k; break;
    }
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::int64_t small_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc{}) fail("bad exponent");
    return value;
  }

  static bool is_var(char c) { return c == 'u' || c == 'v' || c == 'q'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "cannot parse polynomial \"" << text_ << "\" at offset " << pos_ << ": " << what;
    throw Error(ErrorKind::Parse, os.str());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_power(std::ostringstream& os, char var, std::int64_t k, bool& any) {
  if (k == 0) return;
  if (any) os << '*';
  os << var;
  if (k != 1) os << '^' << k;
  any = true;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({{0, 0}, mpz_class(constant)});
}

LaurentPoly::LaurentPoly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({{0, 0}, constant});
}

LaurentPoly LaurentPoly::monomial(const mpz_class& coeff, Exponent exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.push_back({exp, coeff});
  return p;
}

LaurentPoly LaurentPoly::q(std::int64_t k) { return monomial(1, {k, k}); }
LaurentPoly LaurentPoly::u(std::int64_t k) { return monomial(1, {k, 0}); }
LaurentPoly LaurentPoly::v(std::int64_t k) { return monomial(1, {0, k}); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).run(); }

bool LaurentPoly::is_diagonal() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.exp.u == t.exp.v; });
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

mpz_class LaurentPoly::constant_term() const {
  for (const auto& t : terms_) {
    if (t.exp == Exponent{}) return t.coeff;
  }
  return 0;
}

const LaurentPoly::Term& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

const LaurentPoly::Term& LaurentPoly::trailing_term() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no trailing term");
  return terms_.back();
}

std::string LaurentPoly::to_string(PolyFormat format) const {
  if (terms_.empty()) return "0";
  const bool in_q = format == PolyFormat::Auto && is_diagonal();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const mpz_class magnitude = abs(t.coeff);
    std::ostringstream mono;
    bool any = false;
    if (in_q) {
      append_power(mono, 'q', t.exp.u, any);
    } else {
      append_power(mono, 'u', t.exp.u, any);
      append_power(mono, 'v', t.exp.v, any);
    }
    if (!any) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << mono.str();
    } else {
      os << magnitude.get_str() << '*' << mono.str();
    }
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, 1);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_ = merge_terms(a.terms_, b.terms_, -1);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && b.terms_[0].exp == Exponent{}) {
    LaurentPoly r = a;
    for (auto& t : r.terms_) t.coeff *= b.terms_[0].coeff;
    return r;
  }
  if (a.terms_.size() == 1 && a.terms_[0].exp == Exponent{}) return b * a;
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prod.push_back({x.exp + y.exp, x.coeff * y.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& r) { return p + r; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& r) { return p * r; }

LaurentPoly pow(const LaurentPoly& p, std::uint64_t k) {
  LaurentPoly result = 1;
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly exact_div(const LaurentPoly& dividend, const LaurentPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (dividend.is_zero()) return {};

  // Newton polytopes add under multiplication, so every quotient exponent
  // lies in this box.
  auto bounds = [](const LaurentPoly& p) {
    Exponent lo = p.terms().front().exp;
    Exponent hi = lo;
    for (const auto& t : p.terms()) {
      lo.u = std::min(lo.u, t.exp.u);
      lo.v = std::min(lo.v, t.exp.v);
      hi.u = std::max(hi.u, t.exp.u);
      hi.v = std::max(hi.v, t.exp.v);
    }
    return std::pair{lo, hi};
  };
  const auto [p_lo, p_hi] = bounds(dividend);
  const auto [d_lo, d_hi] = bounds(divisor);
  const Exponent q_lo = p_lo - d_lo;
  const Exponent q_hi = p_hi - d_hi;

  auto fail = [&] {
    throw Error(ErrorKind::NonExactDivision,
                "(" + dividend.to_string() + ") is not divisible by (" + divisor.to_string() + ")");
  };
  if (q_lo.u > q_hi.u || q_lo.v > q_hi.v) fail();

  const auto& lead = divisor.leading_term();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly remainder = dividend;
  while (!remainder.is_zero()) {
    const auto& r = remainder.leading_term();
    if (!mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) fail();
    const Exponent e = r.exp - lead.exp;
    if (e.u < q_lo.u || e.u > q_hi.u || e.v < q_lo.v || e.v > q_hi.v) fail();
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), r.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    const LaurentPoly step = LaurentPoly::monomial(c, e);
    quotient.push_back({e, std::move(c)});
    remainder -= step * divisor;
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

mpq_class eval(const LaurentPoly& p, const mpq_class& u0, const mpq_class& v0) {
  auto power = [](const mpq_class& base, std::int64_t k) -> mpq_class {
    if (k == 0) return 1;
    if (base == 0) {
      if (k < 0) throw Error(ErrorKind::ZeroBase, "negative power of a zero base");
      return 0;
    }
    mpq_class b = k < 0 ? mpq_class(1 / base) : base;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    mpq_class r = 1;
    while (e > 0) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e > 0) b *= b;
    }
    return r;
  };
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    sum += mpq_class(t.coeff) * power(u0, t.exp.u) * power(v0, t.exp.v);
  }
  sum.canonicalize();
  return sum;
}

}  // namespace reptqft
