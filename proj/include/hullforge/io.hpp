#ifndef HULLFORGE_IO_HPP
#define HULLFORGE_IO_HPP

#include <string>

#include "hullforge/code.hpp"

namespace hullforge {

/// Parses the self-describing text format:
///   line 1: `p m n k` (space-separated decimal)
///   line 2: `modulus c0 c1 ... cm` (ascending coefficients in [0, p))
///   lines 3..k+2: n decimal element reps in [0, p^m)
/// Lines starting with `#` are comments; LF endings; trailing whitespace
/// tolerated. Errors are ParseError with line/column diagnostics.
LinearCode parse_code_file(const std::string& text);

/// Canonical serialization (RREF generator, single spaces, LF, no comments).
/// serialize(parse(t)) equals the canonical form of t byte-for-byte.
std::string serialize_code_file(const LinearCode& code);

}  // namespace hullforge

#endif
