#include "frobtangle/parse.hpp"

#include <cctype>

namespace frobtangle {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Term run() {
    Term t = term();
    skip_ws();
    if (pos_ != src_.size()) fail("trailing input");
    return t;
  }

 private:
  Term term() {
    Term t = par();
    while (peek() == ';') {
      get();
      Term rhs = par();
      t = Term::seq(t, rhs);
    }
    return t;
  }

  Term par() {
    Term t = atom();
    while (peek() == '*') {
      get();
      Term rhs = atom();
      t = Term::par(t, rhs);
    }
    return t;
  }

  Term atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Term t = term();
      expect(')');
      return t;
    }
    if (c == 'i') {
      expect_word("id");
      expect('(');
      int n = nat();
      expect(')');
      return Term::id(n);
    }
    if (c == 'm' || c == 'u' || c == 'd' || c == 'e' || c == 'g') {
      get();
      return Term::gen(gen_from_name(c));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  int nat() {
    skip_ws();
    if (!std::isdigit((unsigned char)peek())) fail("expected number");
    long v = 0;
    while (std::isdigit((unsigned char)peek())) {
      v = v * 10 + (get() - '0');
      if (v > 1000000) fail("width out of range");
    }
    return (int)v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  void expect_word(const std::string& w) {
    skip_ws();
    for (char c : w) {
      if (peek() != c) fail("expected '" + w + "'");
      get();
    }
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  char get() {
    char c = src_[pos_++];
    if (c == '\n') { ++line_; col_ = 1; } else { ++col_; }
    return c;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) get();
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, line_, col_); }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

Term parse_term(const std::string& src) { return Parser(src).run(); }

}  // namespace frobtangle
