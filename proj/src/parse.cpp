#include "chartlab/parse.hpp"

#include <cctype>

namespace chartlab::sym {

namespace {

class Parser {
public:
  Parser(const std::string& text, const Chart& chart) : s_(text), chart_(chart) {}

  ScalarExpr run() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

private:
  const std::string& s_;
  const Chart& chart_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n')) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ScalarExpr expr() {
    ScalarExpr e = term();
    for (;;) {
      if (accept('+'))
        e = e + term();
      else if (accept('-'))
        e = e - term();
      else
        return e;
    }
  }

  ScalarExpr term() {
    ScalarExpr e = factor();
    for (;;) {
      if (accept('*')) {
        e = e * factor();
      } else if (accept('/')) {
        size_t at = pos_;
        ScalarExpr d = factor();
        auto unit = d.poly().as_const_pi_power();
        if (!unit || unit->first.is_zero()) {
          pos_ = at;
          fail("division by a non-constant expression");
        }
        e = e / d;
      } else {
        return e;
      }
    }
  }

  ScalarExpr factor() {
    ScalarExpr b = base();
    if (peek() == '^') {
      ++pos_;
      long n = integer();
      try {
        return b.pow(static_cast<int>(n));
      } catch (const std::domain_error& err) {
        fail(err.what());
      }
    }
    return b;
  }

  long integer() {
    skip_ws();
    size_t at = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = at;
      fail("expected an integer exponent");
    }
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  ScalarExpr base() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      ScalarExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("expected a number, identifier or '('");
  }

  ScalarExpr number() {
    mpz_class n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return ScalarExpr::constant(chart_, GaussRat(mpq_class(n)));
  }

  ScalarExpr identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "i") return ScalarExpr::imag_unit(chart_);
    if (name == "pi") return ScalarExpr::pi_const(chart_);
    if (name == "exp" || name == "sin" || name == "cos") {
      expect('(');
      size_t arg_at = pos_;
      ScalarExpr arg = expr();
      expect(')');
      try {
        if (name == "exp") return exp_of(arg);
        if (name == "sin") return sin_of(arg);
        return cos_of(arg);
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), arg_at);
      }
    }
    int idx = chart_.index_of(name);
    if (idx < 0) {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    return ScalarExpr::variable(chart_, idx);
  }
};

} // namespace

ScalarExpr parse(const std::string& text, const Chart& chart) { return Parser(text, chart).run(); }

} // namespace chartlab::sym
