#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "behrend/polynomial.hpp"

namespace behrend {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'|'/'] factor)*      ('*' may be omitted)
///   factor  := primary ['^' integer]
///   primary := integer | identifier | '(' expr ')'
/// Identifiers that are not variable names are split into a product of
/// variable names when possible, so "xy" reads as x*y in ring (x, y).
/// Division is only allowed by nonzero constants, which gives "a/b" literals.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma- or newline-separated generators; blank items are skipped.
std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring);

struct IdealText {
  RingPtr ring;
  std::vector<Polynomial> generators;
};

/// File format: an optional `ring x, y, z;` header line followed by
/// generators, one per line or comma-separated. `#` starts a comment.
/// A missing header is an error unless `fallback` supplies the ring.
IdealText parse_ideal_text(std::string_view text, std::uint64_t characteristic = 0,
                           RingPtr fallback = nullptr);
IdealText read_ideal_file(const std::string& path, std::uint64_t characteristic = 0);

/// Comma-separated rationals, e.g. "0,1/2,-3".
Point parse_point(std::string_view text);

}  // namespace behrend
