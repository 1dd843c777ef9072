#include <cctype>

#include "fibrephi/error.hpp"
#include "fibrephi/polynomial.hpp"

namespace fibrephi {

namespace {

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse_all() {
    skip_space();
    if (at_end())
      fail("empty polynomial");
    Polynomial p = expression();
    skip_space();
    if (!at_end())
      fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      skip_space();
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*'))
      acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    if (accept('-'))
      return -factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty())
        fail("expected a natural exponent");
      if (digits.size() > 6) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip_space();
    if (at_end())
      fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{mpz_class(read_digits())};
      const std::size_t slash = pos_;
      skip_space();
      if (!at_end() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        const std::string den = read_digits();
        if (den.empty())
          fail("expected a denominator");
        mpz_class d(den);
        if (d == 0) {
          pos_ = slash;
          fail("zero denominator");
        }
        value = Rational(value.get_num(), d);
        value.canonicalize();
      } else {
        pos_ = slash;
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring,
                                              bool drop_zero) {
  std::vector<Polynomial> out;
  std::size_t depth = 0, start = 0;
  auto flush = [&](std::size_t end) {
    const auto piece = text.substr(start, end - start);
    try {
      Polynomial p = parse_polynomial(piece, ring);
      if (!(drop_zero && p.is_zero()))
        out.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(')
      ++depth;
    else if (text[i] == ')' && depth > 0)
      --depth;
    else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

} // namespace fibrephi
