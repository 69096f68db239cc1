#include "dx/ring.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace dx {

// ---------------------------------------------------------------------------
// QuarterLaurent

QuarterLaurent::QuarterLaurent(long c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

QuarterLaurent::QuarterLaurent(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

QuarterLaurent QuarterLaurent::monomial(const Rational& c, int t_exponent) {
  QuarterLaurent p;
  p.add_term(t_exponent, c);
  return p;
}

QuarterLaurent QuarterLaurent::q_power(int q_exponent, const Rational& c) {
  return monomial(c, 4 * q_exponent);
}

bool QuarterLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational QuarterLaurent::coefficient(int t_exponent) const {
  auto it = terms_.find(t_exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QuarterLaurent::add_term(int t_exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(t_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QuarterLaurent QuarterLaurent::shifted(int k) const {
  if (k == 0) return *this;
  QuarterLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

QuarterLaurent QuarterLaurent::inverted_variable() const {
  QuarterLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

Rational QuarterLaurent::at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QuarterLaurent& QuarterLaurent::operator+=(const QuarterLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QuarterLaurent& QuarterLaurent::operator-=(const QuarterLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QuarterLaurent operator*(const QuarterLaurent& a, const QuarterLaurent& b) {
  QuarterLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

QuarterLaurent& QuarterLaurent::operator*=(const QuarterLaurent& o) {
  *this = *this * o;
  return *this;
}

QuarterLaurent& QuarterLaurent::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

QuarterLaurent QuarterLaurent::operator-() const {
  QuarterLaurent r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial division and gcd over Q

void poly_divmod(const QuarterLaurent& a, const QuarterLaurent& b,
                 QuarterLaurent& quotient, QuarterLaurent& remainder) {
  if (b.is_zero()) throw DivisionByZero();
  quotient = QuarterLaurent();
  remainder = a;
  const int db = b.high();
  const Rational lb = b.leading();
  while (!remainder.is_zero() && remainder.high() >= db) {
    const int shift = remainder.high() - db;
    const Rational factor = remainder.leading() / lb;
    quotient.add_term(shift, factor);
    for (const auto& [e, c] : b.terms()) remainder.add_term(e + shift, -factor * c);
  }
}

QuarterLaurent poly_gcd(QuarterLaurent a, QuarterLaurent b) {
  if (!a.is_zero()) a = a.shifted(-a.low());
  if (!b.is_zero()) b = b.shifted(-b.low());
  while (!b.is_zero()) {
    QuarterLaurent quo, rem;
    poly_divmod(a, b, quo, rem);
    a = std::move(b);
    b = rem.is_zero() ? rem : rem.shifted(-rem.low());
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.leading();
  a *= inv;
  return a;
}

// ---------------------------------------------------------------------------
// RatFunc

namespace {

// Scale factor turning p into a primitive integer polynomial with positive
// leading coefficient.
Rational primitive_scale(const QuarterLaurent& p) {
  Integer lcm_den = 1;
  Integer gcd_num = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(lcm_den, gcd_num);
  s.canonicalize();
  if (p.leading() < 0) s = -s;
  return s;
}

}  // namespace

RatFunc::RatFunc(QuarterLaurent num, QuarterLaurent den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = QuarterLaurent(1);
    return;
  }
  if (den_.is_one()) return;
  const int shift = num_.low() - den_.low();
  QuarterLaurent n = num_.shifted(-num_.low());
  QuarterLaurent d = den_.shifted(-den_.low());
  QuarterLaurent g = poly_gcd(n, d);
  if (!g.is_one()) {
    QuarterLaurent rem;
    QuarterLaurent nq, dq;
    poly_divmod(n, g, nq, rem);
    poly_divmod(d, g, dq, rem);
    n = std::move(nq);
    d = std::move(dq);
  }
  const Rational s = primitive_scale(d);
  n *= s;
  d *= s;
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

RatFunc RatFunc::lambda() {
  QuarterLaurent p = QuarterLaurent::q_power(1) - QuarterLaurent::q_power(-1);
  return RatFunc(p);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = QuarterLaurent(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatFunc RatFunc::inverted_variable() const {
  return RatFunc(num_.inverted_variable(), den_.inverted_variable());
}

Rational RatFunc::at_one() const {
  const Rational d = den_.at_one();
  if (d == 0) throw DivisionByZero();
  return num_.at_one() / d;
}

RatFunc poly_arith(const RatFunc& lhs, const RatFunc& rhs, ArithKind kind, int power) {
  switch (kind) {
    case ArithKind::add: return lhs + rhs;
    case ArithKind::sub: return lhs - rhs;
    case ArithKind::mul: return lhs * rhs;
    case ArithKind::div: return lhs / rhs;
    case ArithKind::neg: return -lhs;
    case ArithKind::pow: return lhs.pow(power);
  }
  throw std::invalid_argument("poly_arith: unknown kind");
}

RatFunc q_integer(int n, int c) {
  if (c == 0) return RatFunc(1);
  QuarterLaurent num = QuarterLaurent::q_power(n * c) - QuarterLaurent(1);
  QuarterLaurent den = QuarterLaurent::q_power(c) - QuarterLaurent(1);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc q_factorial(int n, int c) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative n");
  RatFunc r(1);
  for (int k = 1; k <= n; ++k) r *= q_integer(k, c);
  return r;
}

// ---------------------------------------------------------------------------
// IntLaurent

IntLaurent::IntLaurent(long c) {
  if (c != 0) terms_.emplace(0, Integer(c));
}

IntLaurent IntLaurent::monomial(long c, int q_exponent) {
  IntLaurent p;
  p.add_term(q_exponent, Integer(c));
  return p;
}

void IntLaurent::add_term(int q_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(q_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  IntLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntLaurent IntLaurent::inverted_variable() const {
  IntLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

IntLaurent IntLaurent::divided_by(const Integer& d) const {
  if (d == 0) throw DivisionByZero();
  IntLaurent r;
  for (const auto& [e, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("IntLaurent: inexact division");
    r.terms_.emplace(e, Integer(c / d));
  }
  return r;
}

QuarterLaurent IntLaurent::to_quarter() const {
  QuarterLaurent r;
  for (const auto& [e, c] : terms_) r.add_term(4 * e, Rational(c));
  return r;
}

IntLaurent to_integer_laurent(const RatFunc& p) {
  if (!p.is_polynomial()) throw NotLaurentInQ("denominator is not 1", to_string(p.den()));
  IntLaurent r;
  for (const auto& [e, c] : p.num().terms()) {
    if (e % 4 != 0)
      throw NotLaurentInQ("fractional power of q", "t^" + std::to_string(e) + " (q^(" + std::to_string(e) + "/4))");
    if (c.get_den() != 1) throw NotLaurentInQ("non-integral coefficient", c.get_str());
    r.add_term(e / 4, c.get_num());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text

namespace {

template <class Coef, class ExpFn>
std::string render_terms(const std::map<int, Coef>& terms, ExpFn exponent_text) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    Coef mag = negative ? Coef(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string x = exponent_text(e);
    if (x.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << x;
    } else {
      out << mag.get_str() << '*' << x;
    }
  }
  return out.str();
}

}  // namespace

std::string to_string(const IntLaurent& p) {
  return render_terms(p.terms(), [](int e) -> std::string {
    if (e == 0) return "";
    if (e == 1) return "q";
    return "q^" + std::to_string(e);
  });
}

std::string to_string(const QuarterLaurent& p) {
  return render_terms(p.terms(), [](int e) -> std::string {
    if (e == 0) return "";
    if (e % 4 != 0) return "q^(" + std::to_string(e) + "/4)";
    if (e == 4) return "q";
    return "q^" + std::to_string(e / 4);
  });
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

IntLaurent parse_int_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  IntLaurent result;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial '" + text + "': " + why);
  };
  auto read_int = [&](bool allow_sign) {
    std::size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail("expected integer");
    return s.substr(start, i - start);
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Integer coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = Integer(read_int(false));
      have_coef = true;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail("'*' without coefficient");
      ++i;
      if (i >= s.size() || s[i] != 'q') fail("expected q after '*'");
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exponent = std::stoi(read_int(true));
      }
    } else if (!have_coef) {
      fail("empty term");
    }
    result.add_term(exponent, sign * coef);
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QuarterLaurent& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const IntLaurent& p) { return os << to_string(p); }

}  // namespace dx
