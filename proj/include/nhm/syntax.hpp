#pragma once

#include <string>
#include <string_view>

#include "nhm/kernel.hpp"

namespace nhm {

// Parsers for the text syntax. All throw ParseError on malformed input;
// whitespace between tokens is ignored.

/// `{}`, `{0,1/2}`.
FinSet parse_finset(std::string_view text);
/// `empty`, `(0,1)u(2,3)`, `(-inf,inf)`.
IntervalSet parse_interval_set(std::string_view text);
/// `cofinite-excl{1,2}`, `cofinite-empty`.
CofiniteSet parse_cofinite_set(std::string_view text);

/// `F`, `line`, `D`, `D3`, `Dk`, `Dk@{0,1}`, `two-origins`, `branching`,
/// `cofinite`.
Space parse_space(std::string_view text);

/// `F(0,1,1)`, `D(3/2 @1)` (level defaults to 0), `B(1 @R)`, `N(5)`.
Point parse_point(std::string_view text);

/// `FI[(0,0);(0,1)]`, `W[(-1,1)-{0^1}]` or `W[(-1,1)-{0}^1]`,
/// `BI[(-1,1)@R]`, `BI[empty]`, and the cofinite set syntax.
BasicOpen parse_basic(std::string_view text);

/// Pieces joined by `|`: basics and `skeleton` or `skeleton^F(..)` for the
/// (flip-conjugated) strict skeleton of F.
OpenHandle parse_handle(std::string_view text);

std::string to_string(const Space& s);
std::string to_string(const Point& p);
std::string to_string(const CofinitePoint& p);
std::string to_string(const BasicOpen& b);
std::string to_string(const OpenSet& s);
std::string to_string(const OpenHandle& u);
std::string to_string(const Move& m);
std::string to_string(const HomeoWord& w);

/// One-line summary of a certificate.
std::string to_string(const Certificate& c);

}  // namespace nhm
