#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "uc/errors.hpp"

namespace uc::detail {

// Recursive-descent parser for arithmetic expressions with + - * / ^ and
// parentheses. Juxtaposition such as "2x" or "3(x+y)" means multiplication.
template <class V, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

  V parse() {
    V v = expr();
    skip();
    if (i_ != s_.size()) error("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void error(const char* what) {
    fail(ErrorCode::Parse, std::string(what) + " at position " + std::to_string(i_) + " in \"" +
                               std::string(s_) + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  V expr() {
    V v = term();
    while (true) {
      if (peek('+')) {
        ++i_;
        v = ops_.add(v, term());
      } else if (peek('-')) {
        ++i_;
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  V term() {
    V v = unary();
    while (true) {
      if (peek('*')) {
        ++i_;
        v = ops_.mul(v, unary());
      } else if (peek('/')) {
        ++i_;
        v = ops_.div(v, unary());
      } else if (starts_factor()) {
        v = ops_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (peek('-')) {
      ++i_;
      return ops_.neg(unary());
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  V power() {
    V base = atom();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) error("expected exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
      return ops_.pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  V atom() {
    skip();
    if (i_ >= s_.size()) error("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      V v = expr();
      if (!peek(')')) error("expected ')'");
      ++i_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return ops_.number(mpq_class(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      ++i_;
      return ops_.variable(s_.substr(start, 1));
    }
    error("unexpected character");
  }

  std::string_view s_;
  Ops& ops_;
  std::size_t i_ = 0;
};

}  // namespace uc::detail
