#pragma once

#include <functional>
#include <string>

namespace epibound::detail {

/// Compiles an arithmetic expression over the variables x and y using
/// + - * / (and unary minus), parentheses, numeric literals and the functions
/// min, max, sqrt, pow. Throws ValidationError on syntax errors.
std::function<double(double, double)> parse_closure_expression(const std::string& expr);

}  // namespace epibound::detail
