#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "retract/endomorphism.hpp"

namespace retract {

// Problem-file grammar (whitespace-insensitive, `#` starts a comment):
//
//   ring QQ[x1^±, x2^±, x3]        domain is QQ, ZZ or GF(p); `^±` (or the
//                                   ASCII alias `^+-`) marks Laurent
//                                   variables, which come first
//   x1 -> x1*x2                     one map line per variable
//   x3 -> x3 + 1/2*x2^-1 - (x1 + 1)^2
//   option seed = 7                 optional free-form key/value lines
//
// Expressions use + - * / ^ and parentheses. Division is by nonzero constant
// units only; negative exponents need a unit base.

using Options = std::vector<std::pair<std::string, std::string>>;

struct ProblemFile {
  RingPtr ring;
  Endomorphism map;
  Options options;
};

/// Throws ParseError with 1-based line and column.
ProblemFile parse_problem(std::string_view text);

/// Parses a single expression over the ring.
MixedPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Parses just a `ring ...` header.
RingPtr parse_ring(std::string_view text);

/// `ring QQ[x1^±, x2]`
std::string ring_header(const Ring& ring);

/// Canonical problem text; parse_problem(print_problem(...)) reproduces the map.
std::string print_problem(const Endomorphism& map, const Options& options = {},
                          const std::vector<std::string>& comments = {});

}  // namespace retract
