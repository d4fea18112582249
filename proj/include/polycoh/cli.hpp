#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polycoh/gee.hpp"
#include "polycoh/index_set.hpp"
#include "polycoh/length_space.hpp"

namespace polycoh::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;

/// Comma-separated tokens, each `p` or `p/q`. Throws Error(InvalidLength) on
/// malformed tokens; positivity is left to LengthVector::normalize.
std::vector<Rational> parse_rationals(std::string_view text);

/// Comma-separated positive integers; the empty string gives the empty list.
std::vector<int> parse_ints(std::string_view text);

GeeParams parse_gee(std::string_view text);
IndexSet parse_index_set(std::string_view text);

/// Runs one CLI invocation. `args` excludes the program name. Returns the exit
/// code: 0 on success, 1 when a mathematical check fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycoh::cli
