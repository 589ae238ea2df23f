// Scheme files: a header line naming the kind and parameters, then the basis
// matrices in the shared matrix text format.
//   VSS k n m    + S0 block + S1 block
//   GVSS k n m g + g level blocks
//   CVSS k n m c + c color blocks
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "vcs/binary_scheme.hpp"
#include "vcs/color_scheme.hpp"
#include "vcs/gray_scheme.hpp"

namespace vcs {

using AnyScheme = std::variant<BinaryScheme, GrayScheme, ColorScheme>;

void write_scheme(std::ostream& out, const BinaryScheme& scheme);
void write_scheme(std::ostream& out, const GrayScheme& scheme);
void write_scheme(std::ostream& out, const ColorScheme& scheme);

std::string scheme_to_string(const AnyScheme& scheme);

/// Header and matrix blocks as stored, without validity checks; lets the
/// validator report on files that do not form a valid scheme.
struct RawScheme {
  std::string kind;  // VSS | GVSS | CVSS
  int k = 0;
  int n = 0;
  int m = 0;
  int g = 0;  // GVSS only
  int c = 0;  // CVSS only
  std::vector<BooleanMatrix> bool_blocks;
  std::vector<ColorMatrix> color_blocks;
};
RawScheme read_scheme_raw(std::istream& in);

/// Parses and validates; throws IoError on malformed input and SchemeError
/// when the matrices do not form a valid scheme.
AnyScheme read_scheme(std::istream& in);
AnyScheme load_scheme_file(const std::string& path);
void save_scheme_file(const std::string& path, const AnyScheme& scheme);

/// FNV-1a of the canonical serialization, as 16 hex digits.
std::string scheme_hash(const AnyScheme& scheme);

}  // namespace vcs
