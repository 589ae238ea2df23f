// Boolean and color matrices with the stacking algebra.
//
// Cell conventions follow the transparency model: in a boolean matrix 1 is a
// black subpixel and 0 is a light-transmitting white subpixel. Color cells
// are palette indices 0..c-1 plus an absorbing black symbol. Values are
// immutable after construction and safe to read concurrently.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace vcs {

using BitVector = std::vector<std::uint8_t>;

std::size_t hamming_weight(std::span<const std::uint8_t> v);
std::size_t zero_count(std::span<const std::uint8_t> v);

class BooleanMatrix {
 public:
  /// cells are row-major, each exactly 0 or 1; rows >= 1, cols >= 0
  /// (zero-width matrices only arise as concatenation identities).
  BooleanMatrix(int rows, int cols, std::vector<std::uint8_t> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t at(int r, int c) const {
    return cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
  }
  std::span<const std::uint8_t> row(int r) const;
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const BooleanMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> cells_;
};

class ColorSymbol {
 public:
  static constexpr std::uint8_t kBlackCode = 0xFF;

  static ColorSymbol black() { return ColorSymbol(kBlackCode); }
  static ColorSymbol color(int index);
  static ColorSymbol from_code(std::uint8_t code) { return ColorSymbol(code); }

  bool is_black() const { return code_ == kBlackCode; }
  int index() const;  // throws for black
  std::uint8_t code() const { return code_; }

  bool operator==(const ColorSymbol&) const = default;

 private:
  explicit ColorSymbol(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

class ColorMatrix {
 public:
  /// cells are row-major symbol codes; every non-black code < palette_size.
  ColorMatrix(int rows, int cols, int palette_size, std::vector<std::uint8_t> cells);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int palette_size() const { return palette_size_; }
  ColorSymbol at(int r, int c) const {
    return ColorSymbol::from_code(
        cells_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)]);
  }
  std::span<const std::uint8_t> row(int r) const;
  const std::vector<std::uint8_t>& cells() const { return cells_; }

  bool operator==(const ColorMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  int palette_size_;
  std::vector<std::uint8_t> cells_;
};

/// OR of the selected rows; position j is 1 iff any selected row is 1 there.
BitVector or_rows(const BooleanMatrix& m, std::span<const int> row_set);

/// Generalized OR of the selected rows, per column: matching colors persist,
/// any mixture or black yields black. Returns symbol codes.
std::vector<std::uint8_t> or_rows(const ColorMatrix& m, std::span<const int> row_set);

/// Number of coordinates equal to color `index` (use for z_i counts).
std::size_t color_count(std::span<const std::uint8_t> symbols, int index);
std::size_t black_count(std::span<const std::uint8_t> symbols);

ColorSymbol generalized_or(std::span<const ColorSymbol> symbols);

struct GeneralizedOrResult {
  ColorSymbol value;
  /// True when two distinct non-black colors appear among the inputs — the
  /// combination left undefined by the block subpixel model. The value is
  /// still black (total rule); valid schemes never stack such mixtures.
  bool undefined_combination;
};
GeneralizedOrResult generalized_or_strict(std::span<const ColorSymbol> symbols);

BooleanMatrix concat(const BooleanMatrix& a, const BooleanMatrix& b);

bool columns_equal_up_to_permutation(const BooleanMatrix& a, const BooleanMatrix& b);
bool columns_equal_up_to_permutation(const ColorMatrix& a, const ColorMatrix& b);

BooleanMatrix restrict_rows(const BooleanMatrix& m, std::span<const int> row_set);
ColorMatrix restrict_rows(const ColorMatrix& m, std::span<const int> row_set);

// Text format shared by all scheme files. First line "n m kind" with kind
// "bin" or "color c"; then n lines of m space-separated tokens; tokens are
// 0|1 for bin, 0..c-1|B for color. Round-trips bit-exactly.
using AnyMatrix = std::variant<BooleanMatrix, ColorMatrix>;

void write_matrix_text(std::ostream& out, const BooleanMatrix& m);
void write_matrix_text(std::ostream& out, const ColorMatrix& m);
AnyMatrix read_matrix_text(std::istream& in);

}  // namespace vcs
