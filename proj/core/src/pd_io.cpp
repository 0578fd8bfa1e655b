#include <cctype>
#include <charconv>
#include <sstream>

#include "knotfib/diagram.hpp"

namespace knotfib {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

  long integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || (pos_ == start && text_[pos_] == '-')))
      ++pos_;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    column_ += static_cast<int>(pos_ - start);
    return value;
  }

  [[noreturn]] void fail(const std::string& what) {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : std::string("end of input");
    throw ParseError(what + ", found " + found, line_, column_);
  }

  int line() const { return line_; }
  int column() const { return column_; }
  char take() {
    char ch = peek();
    advance();
    return ch;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
  Lexer lx(text);
  std::vector<std::array<EdgeLabel, 4>> quads;
  int loops = 0;
  bool any = false;
  while (!lx.at_end()) {
    int line = lx.line();
    int column = lx.column();
    char head = lx.take();
    if (head == 'X') {
      lx.expect('(');
      std::array<EdgeLabel, 4> q{};
      for (int i = 0; i < 4; ++i) {
        if (i) lx.expect(',');
        int l = lx.line(), c = lx.column();
        long v = lx.integer();
        if (v <= 0 || v > 1'000'000'000) throw ParseError("labels must be positive integers", l, c);
        q[static_cast<std::size_t>(i)] = static_cast<EdgeLabel>(v);
      }
      lx.expect(')');
      quads.push_back(q);
    } else if (head == 'U') {
      lx.expect('(');
      int l = lx.line(), c = lx.column();
      long v = lx.integer();
      if (v < 0 || v > 1'000'000) throw ParseError("loop count out of range", l, c);
      lx.expect(')');
      loops += static_cast<int>(v);
    } else {
      throw ParseError(std::string("expected 'X(' but found '") + head + "'", line, column);
    }
    any = true;
  }
  if (!any) throw ParseError("empty diagram", lx.line(), lx.column());
  if (quads.empty() && loops == 0) throw ParseError("diagram has no components", lx.line(), lx.column());
  return Diagram::from_pd(quads, loops);
}

std::string serialize_pd(const Diagram& d) {
  Diagram c = canonical(d);
  std::ostringstream os;
  for (const auto& x : c.crossings()) {
    const auto& s = x.slots;
    os << "X(" << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ")\n";
  }
  if (c.free_loops() > 0) os << "U(" << c.free_loops() << ")\n";
  return os.str();
}

}  // namespace knotfib
