#include "daha1/poly_io.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace daha1 {

namespace {

constexpr long kMaxExponent = 1000000;

std::string power(char var, int num, int den) {
  int g = std::gcd(num, den);
  num /= g;
  den /= g;
  std::string s(1, var);
  if (den == 1) return num == 1 ? s : s + "^" + (num < 0 ? "(" + std::to_string(num) + ")" : std::to_string(num));
  return s + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

// c * q^(eu/4) * t^(ev/2) with |c| printed only when it is not 1.
std::string monomial_text(const mpz_class& c, int eu, int ev, bool with_sign) {
  std::string parts;
  auto push = [&](const std::string& p) { parts += (parts.empty() ? "" : "*") + p; };
  mpz_class a = with_sign ? mpz_class(abs(c)) : c;
  if (a != 1 || (eu == 0 && ev == 0)) push(a.get_str());
  if (eu) push(power('q', eu, 4));
  if (ev) push(power('t', ev, 2));
  return parts;
}

std::string bipoly_text(const BiPoly& p) {
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first)
      s += t.c < 0 ? "-" : "";
    else
      s += t.c < 0 ? " - " : " + ";
    first = false;
    s += monomial_text(t.c, static_cast<int>(t.eu), static_cast<int>(t.ev), true);
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse_all() {
    LaurentPoly f = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, i_); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  LaurentPoly sum() {
    LaurentPoly f;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    LaurentPoly t = product();
    f += neg ? -t : t;
    for (;;) {
      if (accept('+')) f += product();
      else if (accept('-')) f -= product();
      else return f;
    }
  }

  LaurentPoly product() {
    LaurentPoly f = factor();
    for (;;) {
      if (accept('*')) {
        f = f * factor();
      } else if (peek() == '/') {
        std::size_t at = i_;
        ++i_;
        LaurentPoly d = factor();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        if (d.terms().size() != 1 || d.min_deg() != 0) throw SyntaxError("divisor must not contain X", at);
        f = f.scaled(d.constant_term().inv());
      } else {
        return f;
      }
    }
  }

  mpz_class digits() {
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected a number");
    return mpz_class(std::string(s_.substr(start, i_ - start)));
  }

  long small_int() {
    std::size_t at = i_;
    bool neg = accept('-');
    if (!neg) accept('+');
    mpz_class z = digits();
    if (z > kMaxExponent) throw ExponentOverflow("exponent at position " + std::to_string(at) + " exceeds 10^6");
    return neg ? -z.get_si() : z.get_si();
  }

  // Exponent after '^', returned as num/den.
  std::pair<long, long> exponent() {
    if (!accept('^')) return {1, 1};
    if (accept('(')) {
      long n = small_int(), d = 1;
      if (accept('/')) {
        std::size_t at = i_;
        d = small_int();
        if (d <= 0) throw SyntaxError("exponent denominator must be positive", at);
      }
      if (!accept(')')) fail("expected ')'");
      return {n, d};
    }
    return {small_int(), 1};
  }

  LaurentPoly factor() {
    char c = peek();
    std::size_t at = i_;
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(RatQT(mpq_class(digits())));
    if (c == '(') {
      ++i_;
      LaurentPoly f = sum();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == 'q' || c == 't' || c == 'X') {
      ++i_;
      auto [n, d] = exponent();
      long scale = c == 'q' ? 4 : c == 't' ? 2 : 1;
      if ((n * scale) % d != 0)
        throw SyntaxError(std::string(c == 'q' ? "q exponent must be a multiple of 1/4"
                                      : c == 't' ? "t exponent must be a multiple of 1/2"
                                                 : "X exponent must be an integer"),
                          at);
      long e = n * scale / d;
      if (std::labs(e) > kMaxExponent * scale) throw ExponentOverflow("exponent at position " + std::to_string(at));
      int ei = static_cast<int>(e);
      if (c == 'q') return LaurentPoly::constant(RatQT::u_pow(ei));
      if (c == 't') return LaurentPoly::constant(RatQT::v_pow(ei));
      return LaurentPoly::monomial(ei);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::string format_coeff(const RatQT& c) {
  if (c.is_zero()) return "0";
  std::string shift;
  if (c.u_shift()) shift += "*" + power('q', c.u_shift(), 4);
  if (c.v_shift()) shift += "*" + power('t', c.v_shift(), 2);
  if (c.is_monomial()) {
    mpz_class n = c.num().lead().c, d = c.den().lead().c;
    if (d == 1 && abs(n) == 1 && !shift.empty()) return (n < 0 ? "-" : "") + shift.substr(1);
    std::string s = n.get_str() + (d == 1 ? "" : "/" + d.get_str());
    return s + shift;
  }
  std::string s = "(" + bipoly_text(c.num()) + ")";
  if (!c.den().is_one()) s += "/(" + bipoly_text(c.den()) + ")";
  return s + shift;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    auto [n, c] = *it;
    std::string xs = n == 0 ? "" : n == 1 ? "X" : "X^" + std::to_string(n);
    bool neg = c.is_monomial() && c.num().lead().c < 0;
    RatQT a = neg ? -c : c;
    std::string cs = format_coeff(a);
    std::string term;
    if (xs.empty()) term = cs;
    else if (a.is_one()) term = xs;
    else term = cs + "*" + xs;
    if (first) out += (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

LaurentPoly parse_poly(std::string_view src) { return Parser(src).parse_all(); }

}  // namespace daha1
