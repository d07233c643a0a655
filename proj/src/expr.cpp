#include "skein/expr.hpp"

#include <cctype>

namespace skein {

namespace {

void add_term(Multinomial& p, const Exponents& e, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

Multinomial multiply(const Multinomial& x, const Multinomial& y) {
  Multinomial out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) add_term(out, ex + ey, cx * cy);
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, VarSet allowed) : text_(text), allowed_(allowed) {}

  Expression parse() {
    Expression out;
    bool negative = false;
    std::size_t save = pos_;
    if (peek() == '-') {
      ++pos_;
      negative = true;
      if (peek() != '(') {  // an ordinary signed sum; expr() handles the sign
        pos_ = save;
        negative = false;
      }
    }
    out.num = group();
    if (negative)
      for (auto& [e, c] : out.num) c = -c;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      Multinomial den = group();
      if (den.empty()) fail("division by zero");
      out.den = std::move(den);
    }
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Multinomial group() {
    if (peek() == '(') {
      ++pos_;
      Multinomial e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    return expr();
  }

  Multinomial expr() {
    Multinomial out;
    bool negative = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negative = c == '-';
      ++pos_;
    }
    for (;;) {
      Multinomial t = term();
      for (const auto& [e, coef] : t) add_term(out, e, negative ? Rational(-coef) : coef);
      c = peek();
      if (c != '+' && c != '-') break;
      negative = c == '-';
      ++pos_;
    }
    return out;
  }

  Multinomial term() {
    Multinomial out{{Exponents{}, Rational(1)}};
    out = multiply(out, factor());
    while (peek() == '*') {
      ++pos_;
      out = multiply(out, factor());
    }
    return out;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Multinomial factor() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      std::size_t save = pos_;
      if (peek() == '/') {
        ++pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          std::size_t at = pos_;
          Integer den = digits();
          if (den == 0) fail_at("zero denominator in rational literal", at);
          value = Rational(value.get_num(), den);
          value.canonicalize();
        } else {
          pos_ = save;  // top-level division, not part of the literal
        }
      }
      Multinomial out;
      add_term(out, Exponents{}, value);
      return out;
    }
    std::size_t at = pos_;
    Exponents e;
    int* slot = nullptr;
    if (c == 'A') {
      ++pos_;
      if (!allowed_.a) fail_at("unknown variable 'A'", at);
      slot = &e.a;
    } else if (c == 'm') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '2') {
        ++pos_;
        if (!allowed_.m2) fail_at("unknown variable 'm2'", at);
        slot = &e.m2;
      } else {
        if (!allowed_.m) fail_at("unknown variable 'm'", at);
        slot = &e.m;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
      fail_at("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", at);
    } else if (c == '\0') {
      fail("unexpected end of input");
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    *slot = 1;
    if (peek() == '^') {
      ++pos_;
      bool negative = false;
      char s = peek();
      if (s == '-' || s == '+') {
        negative = s == '-';
        ++pos_;
      }
      std::size_t exp_at = pos_;
      Integer n = digits();
      if (!n.fits_sint_p() || n > 1000000) fail_at("exponent out of range", exp_at);
      *slot = static_cast<int>(n.get_si()) * (negative ? -1 : 1);
    }
    return Multinomial{{e, Rational(1)}};
  }

  std::string_view text_;
  VarSet allowed_;
  std::size_t pos_ = 0;
};

std::string power(const char* name, int k) {
  if (k == 1) return name;
  return std::string(name) + "^" + std::to_string(k);
}

Multinomial from_laurent(const LaurentPoly& p, int m2_degree) {
  Multinomial out;
  for (const auto& [k, c] : p.terms()) out.emplace(Exponents{k, 0, m2_degree}, c);
  return out;
}

LaurentPoly laurent_from(const Multinomial& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p) out = out + LaurentPoly::monomial(c, e.a);
  return out;
}

}  // namespace

Expression parse_expression(std::string_view text, VarSet allowed) { return Parser(text, allowed).parse(); }

std::string to_string(const Multinomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p) {
    const bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::vector<std::string> factors;
    if (e.a != 0) factors.push_back(power("A", e.a));
    if (e.m2 != 0) factors.push_back(power("m2", e.m2));
    if (e.m != 0) factors.push_back(power("m", e.m));
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

std::string to_string(const LaurentPoly& p) { return to_string(from_laurent(p, 0)); }

bool is_printable_polynomial(const RatFunc& x) { return x.is_laurent(); }

bool is_printable_polynomial(const LocalizedField& x) {
  if (!x.is_polynomial()) return false;
  for (const auto& c : x.num().coefficients())
    if (!c.is_laurent()) return false;
  return true;
}

Multinomial to_multinomial(const RatFunc& x) {
  if (!x.is_laurent()) throw InvariantError("scalar is not a Laurent polynomial");
  return from_laurent(x.num(), 0);
}

Multinomial to_multinomial(const LocalizedField& x) {
  if (!is_printable_polynomial(x)) throw InvariantError("scalar is not a polynomial in A and m2");
  Multinomial out;
  const auto& cs = x.num().coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (const auto& [e, c] : from_laurent(cs[i].num(), static_cast<int>(i))) out.emplace(e, c);
  }
  return out;
}

RatFunc clearing_scale(const std::vector<RatFunc>& xs) { return RatFunc(LaurentPoly(0, denominator_lcm(xs))); }

LocalizedField clearing_scale(const std::vector<LocalizedField>& xs) {
  UPoly<RatFunc> l(RatFunc(1));
  for (const auto& x : xs)
    if (!x.is_polynomial()) l = lcm(l, x.den());
  std::vector<RatFunc> flat = l.coefficients();
  for (const auto& x : xs) {
    if (is_zero(x)) continue;
    UPoly<RatFunc> cleared = exact_div(x.num() * l, x.den());
    for (const auto& c : cleared.coefficients()) flat.push_back(c);
  }
  RatFunc t = clearing_scale(flat);
  return LocalizedField(l.scaled(t));
}

RatFunc scalar_from_multinomial(const Multinomial& p, std::type_identity<RatFunc>) {
  for (const auto& [e, c] : p)
    if (e.m != 0 || e.m2 != 0) throw ParseError("scalar in Q(A) may only involve A");
  return RatFunc(laurent_from(p));
}

LocalizedField scalar_from_multinomial(const Multinomial& p, std::type_identity<LocalizedField>) {
  std::map<int, Multinomial> by_degree;
  for (const auto& [e, c] : p) {
    if (e.m != 0) throw ParseError("scalar in Q(A)(m2) may only involve A and m2");
    by_degree[e.m2].emplace(Exponents{e.a, 0, 0}, c);
  }
  LocalizedField out;
  for (const auto& [deg, part] : by_degree) {
    auto power = UPoly<RatFunc>::monomial(RatFunc(1), static_cast<std::size_t>(deg < 0 ? -deg : deg));
    LocalizedField m2_power = deg >= 0 ? LocalizedField(power) : LocalizedField::fraction(UPoly<RatFunc>(1), power);
    out = out + LocalizedField(RatFunc(laurent_from(part))) * m2_power;
  }
  return out;
}

namespace {

template <class K>
K scalar_from_expression(const Expression& e) {
  K num = scalar_from_multinomial(e.num, std::type_identity<K>{});
  if (!e.den) return num;
  K den = scalar_from_multinomial(*e.den, std::type_identity<K>{});
  return num / den;
}

template <class K>
std::string scalar_to_string(const K& x) {
  if (is_printable_polynomial(x)) return to_string(to_multinomial(x));
  K s = clearing_scale(std::vector<K>{x});
  return "(" + to_string(to_multinomial(x * s)) + ")/(" + to_string(to_multinomial(s)) + ")";
}

}  // namespace

template <>
RatFunc parse_scalar<RatFunc>(std::string_view text) {
  return scalar_from_expression<RatFunc>(parse_expression(text, scalar_vars<RatFunc>()));
}

template <>
LocalizedField parse_scalar<LocalizedField>(std::string_view text) {
  return scalar_from_expression<LocalizedField>(parse_expression(text, scalar_vars<LocalizedField>()));
}

std::string to_string(const RatFunc& x) { return scalar_to_string(x); }
std::string to_string(const LocalizedField& x) { return scalar_to_string(x); }

}  // namespace skein
