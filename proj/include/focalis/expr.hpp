#pragma once

#include <string>
#include <vector>

#include "focalis/euclid.hpp"

namespace focalis {

// Expression grammar: variables [a-z][a-z0-9]*, integer literals, the
// imaginary unit i, operators + - * / ^ and parentheses; whitespace is
// insignificant. Rational literals are integer quotients p/q. Parse errors
// carry line and column.
RationalFunction parse_expression(const std::string& text);

// "(expr, expr, ...)"
RFVec parse_tuple(const std::string& text);

// "[a, b, c]" of names or integers
std::vector<std::string> parse_name_list(const std::string& text);
std::vector<long long> parse_int_list(const std::string& text);

// "[[q, q, ...], ...]" row-major rational matrix
Mat<GaussianRational> parse_gram_matrix(const std::string& text);

}  // namespace focalis
