#include "kummerwit/literal.hpp"

#include <cctype>

#include "kummerwit/error.hpp"

namespace kummerwit {

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const FieldCtx& F = f.ctx();
  std::string out;
  for (int k = f.deg(); k >= 0; --k) {
    FF c = f.coeff(k);
    if (F.is_zero(c)) continue;
    if (!out.empty()) out += "+";
    bool unit = F.is_one(c);
    if (k == 0) {
      out += F.to_string(c);
    } else {
      if (!unit) out += F.to_string(c) + "*";
      out += "s";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string to_string(const RatFunc& x) {
  if (x.is_poly()) return to_string(x.num());
  return to_string(x.num()) + " / " + to_string(x.den());
}

namespace {

class Parser {
 public:
  Parser(const Field& F, std::string_view s) : F_(F), s_(s) {}

  Poly parse_all() {
    Poly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  i64 integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    i64 v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (i64{1} << 55)) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected integer");
    return neg ? -v : v;
  }

  Poly expr() {
    Poly acc(F_);
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-'))
        neg = true;
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      Poly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      char c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || c == 's' || c == 't' || c == '[' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      i64 e = integer();
      if (e < 0) fail("negative exponent");
      base = pow(base, static_cast<u64>(e));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 's' || c == 't') {
      ++pos_;
      return Poly::s(F_);
    }
    if (c == '[') {
      ++pos_;
      FF x{};
      int i = 0;
      do {
        if (i >= F_->a()) fail("too many extension coordinates");
        x.c[i++] = F_->from_int(integer()).c[0];
      } while (eat(','));
      if (!eat(']')) fail("expected ']'");
      return Poly::constant(F_, x);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::from_int(F_, integer());
    fail("expected a coefficient, s, or '('");
  }

  const Field& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Field& F, std::string_view text) { return Parser(F, text).parse_all(); }

RatFunc parse_ratfunc(const Field& F, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '/' && depth == 0) {
      if (slash != std::string_view::npos)
        throw Error(ErrorCode::ParseError, "more than one '/' in '" + std::string(text) + "'");
      slash = i;
    }
  }
  if (slash == std::string_view::npos) return RatFunc(parse_poly(F, text));
  Poly den = parse_poly(F, text.substr(slash + 1));
  if (den.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator");
  return RatFunc(parse_poly(F, text.substr(0, slash)), den);
}

}  // namespace kummerwit
