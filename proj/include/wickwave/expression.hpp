#pragma once

#include <string>

#include "wickwave/time_function.hpp"

namespace wickwave {

// Compiles a whitelisted arithmetic expression in the variable t into a
// callable. Grammar: numbers, + - * / ^ (right-associative), parentheses,
// sin, cos, exp, and the constants i and pi (the Greek letter is accepted).
// Malformed input throws ConfigError naming the byte position.
TimeFn parse_time_function(const std::string& text);

// Same grammar restricted to real results: the compiled function is evaluated
// once at t=0 to reject obviously complex expressions early, and any call
// whose imaginary part is non-negligible throws DomainError.
RealFn parse_real_time_function(const std::string& text);

}  // namespace wickwave
