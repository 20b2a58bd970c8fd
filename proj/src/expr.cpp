#include "focalis/expr.hpp"

#include <cctype>
#include <sstream>

#include "focalis/error.hpp"

namespace focalis {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  RationalFunction parse_full() {
    RationalFunction e = expr();
    skip_ws();
    if (pos_ != text_.size()) error("trailing input");
    return e;
  }

  RFVec parse_tuple_full() {
    skip_ws();
    expect('(');
    RFVec out;
    out.push_back(expr());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      out.push_back(expr());
      skip_ws();
    }
    expect(')');
    skip_ws();
    if (pos_ != text_.size()) error("trailing input after tuple");
    return out;
  }

  [[noreturn]] void error(const std::string& what) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k < pos_ && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << what << " at line " << line << ", column " << col;
    fail(Errc::parse_error, os.str());
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  RationalFunction expr() {
    skip_ws();
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    RationalFunction acc = term();
    if (sign < 0) acc = -acc;
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      char op = peek();
      ++pos_;
      RationalFunction rhs = term();
      acc = (op == '+') ? acc + rhs : acc - rhs;
      skip_ws();
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    skip_ws();
    while (peek() == '*' || peek() == '/') {
      char op = peek();
      ++pos_;
      RationalFunction rhs = factor();
      if (op == '/') {
        if (rhs.is_zero()) error("division by zero");
        acc = acc / rhs;
      } else {
        acc = acc * rhs;
      }
      skip_ws();
    }
    return acc;
  }

  RationalFunction factor() {
    skip_ws();
    int sign = 1;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    RationalFunction b = base();
    skip_ws();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit((unsigned char)peek())) error("expected exponent");
      unsigned long e = 0;
      while (std::isdigit((unsigned char)peek())) {
        e = e * 10 + (unsigned long)(peek() - '0');
        if (e > 1000000) error("exponent too large");
        ++pos_;
      }
      b = b.pow(e);
      skip_ws();
    }
    return sign < 0 ? -b : b;
  }

  RationalFunction base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit((unsigned char)c)) {
      mpz_class n(0);
      while (std::isdigit((unsigned char)peek())) {
        n = n * 10 + (peek() - '0');
        ++pos_;
      }
      return RationalFunction(Polynomial(GaussianRational(mpq_class(n))));
    }
    if (std::islower((unsigned char)c)) {
      std::string name;
      while (std::islower((unsigned char)peek()) ||
             std::isdigit((unsigned char)peek())) {
        name += peek();
        ++pos_;
      }
      if (name == "i")
        return RationalFunction(Polynomial(GaussianRational::i()));
      return RationalFunction(Polynomial::variable(name));
    }
    error("expected a value");
  }

  const std::string& text_;
  size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_bracket_list(const std::string& text) {
  size_t a = text.find('[');
  size_t b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    fail(Errc::parse_error, "expected a bracketed list");
  std::vector<std::string> items;
  std::string inner = text.substr(a + 1, b - a - 1);
  if (trim(inner).empty()) return items;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  items.push_back(cur);
  return items;
}

}  // namespace

RationalFunction parse_expression(const std::string& text) {
  return Parser(text).parse_full();
}

RFVec parse_tuple(const std::string& text) {
  return Parser(text).parse_tuple_full();
}

std::vector<std::string> parse_name_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& item : split_bracket_list(text)) {
    std::string name = trim(item);
    if (name.empty()) fail(Errc::parse_error, "empty name in list");
    for (char c : name)
      if (!std::islower((unsigned char)c) && !std::isdigit((unsigned char)c))
        fail(Errc::parse_error, "invalid name '" + name + "'");
    out.push_back(name);
  }
  return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  for (const auto& item : split_bracket_list(text)) {
    std::string v = trim(item);
    try {
      size_t used = 0;
      long long n = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      out.push_back(n);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "invalid integer '" + v + "'");
    }
  }
  return out;
}

Mat<GaussianRational> parse_gram_matrix(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    fail(Errc::parse_error, "gram: expected [[...],[...]]");
  Mat<GaussianRational> rows;
  for (const auto& row_text : split_bracket_list(t)) {
    std::string r = trim(row_text);
    std::vector<GaussianRational> row;
    for (const auto& cell : split_bracket_list(r)) {
      RationalFunction v = parse_expression(trim(cell));
      if (!v.is_constant())
        fail(Errc::parse_error, "gram entries must be rational constants");
      row.push_back(v.constant_value());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace focalis
