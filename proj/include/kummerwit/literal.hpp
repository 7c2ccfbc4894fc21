#pragma once
// Text form of polynomials and rational functions.
//
//   coefficient: decimal integer (prime field) or [c0,c1,...] (extension)
//   polynomial : terms c*s^k joined by '+', highest degree first; "0" for zero
//   ratfunc    : "num / den", or just num when den = 1
//
// The parser is more lenient than the printer: it accepts '-', '*', '^',
// parentheses, implicit multiplication and 't' as a synonym for 's'.
#include <string>
#include <string_view>

#include "kummerwit/ratfunc.hpp"

namespace kummerwit {

std::string to_string(const Poly& f);
std::string to_string(const RatFunc& x);

Poly parse_poly(const Field& F, std::string_view text);
RatFunc parse_ratfunc(const Field& F, std::string_view text);

}  // namespace kummerwit
