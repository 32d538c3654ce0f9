#include "wickwave/expression.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>

#include "wickwave/errors.hpp"

namespace wickwave {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "expression error at position " << pos << ": " << what;
  throw ConfigError(os.str());
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  TimeFn run() {
    TimeFn fn = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return fn;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  TimeFn expr() {
    TimeFn lhs = term();
    for (;;) {
      if (eat('+')) {
        TimeFn rhs = term();
        lhs = [lhs, rhs](double t) { return lhs(t) + rhs(t); };
      } else if (eat('-')) {
        TimeFn rhs = term();
        lhs = [lhs, rhs](double t) { return lhs(t) - rhs(t); };
      } else {
        return lhs;
      }
    }
  }

  TimeFn term() {
    TimeFn lhs = factor();
    for (;;) {
      if (eat('*')) {
        TimeFn rhs = factor();
        lhs = [lhs, rhs](double t) { return lhs(t) * rhs(t); };
      } else if (eat('/')) {
        TimeFn rhs = factor();
        lhs = [lhs, rhs](double t) { return lhs(t) / rhs(t); };
      } else {
        return lhs;
      }
    }
  }

  TimeFn factor() {
    TimeFn base = unary();
    if (eat('^')) {
      TimeFn exponent = factor();  // right-associative
      return [base, exponent](double t) {
        Complex b = base(t);
        // a -0.0 imaginary part (e.g. from unary minus) would flip the branch
        // cut; real bases should take the principal branch
        if (b.imag() == 0.0) b = Complex(b.real(), 0.0);
        return std::pow(b, exponent(t));
      };
    }
    return base;
  }

  TimeFn unary() {
    bool negate = false;
    for (;;) {
      if (eat('+')) continue;
      if (eat('-')) {
        negate = !negate;
        continue;
      }
      break;
    }
    TimeFn inner = primary();
    if (!negate) return inner;
    return [inner](double t) { return -inner(t); };
  }

  TimeFn primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      TimeFn inner = expr();
      if (!eat(')')) fail(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    return word();
  }

  TimeFn number() {
    const std::size_t start = pos_;
    const char* begin = text_.c_str() + start;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail(start, "expected a number");
    pos_ = start + static_cast<std::size_t>(end - begin);
    return [v](double) { return Complex(v, 0.0); };
  }

  TimeFn word() {
    const std::size_t start = pos_;
    // pi may appear as the two-byte UTF-8 Greek letter
    if (text_.compare(pos_, 2, "\xcf\x80") == 0) {
      pos_ += 2;
      return [](double) { return Complex(kPi, 0.0); };
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "t") return [](double t) { return Complex(t, 0.0); };
    if (name == "i") return [](double) { return Complex(0.0, 1.0); };
    if (name == "pi") return [](double) { return Complex(kPi, 0.0); };
    if (name == "sin" || name == "cos" || name == "exp") {
      if (!eat('(')) fail(pos_, "expected '(' after " + name);
      TimeFn arg = expr();
      if (!eat(')')) fail(pos_, "expected ')'");
      if (name == "sin") return [arg](double t) { return std::sin(arg(t)); };
      if (name == "cos") return [arg](double t) { return std::cos(arg(t)); };
      return [arg](double t) { return std::exp(arg(t)); };
    }
    if (name.empty()) fail(start, std::string("unexpected character '") + text_[start] + "'");
    fail(start, "unknown name '" + name + "'");
  }
};

}  // namespace

TimeFn parse_time_function(const std::string& text) { return Parser(text).run(); }

RealFn parse_real_time_function(const std::string& text) {
  TimeFn fn = parse_time_function(text);
  RealFn checked = [fn, text](double t) {
    const Complex v = fn(t);
    if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
      throw DomainError("expression '" + text + "' must be real-valued");
    return v.real();
  };
  (void)checked(0.0);
  return checked;
}

}  // namespace wickwave
