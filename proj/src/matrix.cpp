#include "vcs/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vcs/kernels.hpp"
#include "vcs/util.hpp"

namespace vcs {

namespace {

void check_row_set(std::span<const int> row_set, int rows) {
  if (row_set.empty()) throw std::invalid_argument("row set is empty");
  for (int r : row_set)
    if (r < 0 || r >= rows) throw std::out_of_range("row index out of range");
}

template <typename M>
bool columns_permutation_equal(const M& a, const M& b) {
  const int n = a.rows();
  const int m = a.cols();
  auto columns = [&](const M& x) {
    std::vector<std::vector<std::uint8_t>> cols(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      auto& col = cols[static_cast<std::size_t>(c)];
      col.resize(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = x.row(r)[static_cast<std::size_t>(c)];
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  return columns(a) == columns(b);
}

}  // namespace

std::size_t hamming_weight(std::span<const std::uint8_t> v) {
  return v.size() - kernels::count_equal(v.data(), v.size(), 0);
}

std::size_t zero_count(std::span<const std::uint8_t> v) {
  return kernels::count_equal(v.data(), v.size(), 0);
}

BooleanMatrix::BooleanMatrix(int rows, int cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ < 1 || cols_ < 0) throw std::invalid_argument("bad matrix shape");
  if (cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
    throw std::invalid_argument("cell count does not match shape");
  for (std::uint8_t v : cells_)
    if (v > 1) throw std::invalid_argument("boolean matrix cell is not 0/1");
}

std::span<const std::uint8_t> BooleanMatrix::row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
  return {cells_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_),
          static_cast<std::size_t>(cols_)};
}

ColorSymbol ColorSymbol::color(int index) {
  if (index < 0 || index >= kBlackCode) throw std::invalid_argument("color index out of range");
  return ColorSymbol(static_cast<std::uint8_t>(index));
}

int ColorSymbol::index() const {
  if (is_black()) throw std::logic_error("black symbol has no color index");
  return code_;
}

ColorMatrix::ColorMatrix(int rows, int cols, int palette_size, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), palette_size_(palette_size), cells_(std::move(cells)) {
  if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("bad matrix shape");
  if (palette_size_ < 1 || palette_size_ >= ColorSymbol::kBlackCode)
    throw std::invalid_argument("bad palette size");
  if (cells_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
    throw std::invalid_argument("cell count does not match shape");
  for (std::uint8_t v : cells_)
    if (v != ColorSymbol::kBlackCode && v >= palette_size_)
      throw std::invalid_argument("color cell outside palette");
}

std::span<const std::uint8_t> ColorMatrix::row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("row index out of range");
  return {cells_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_),
          static_cast<std::size_t>(cols_)};
}

BitVector or_rows(const BooleanMatrix& m, std::span<const int> row_set) {
  check_row_set(row_set, m.rows());
  auto first = m.row(row_set[0]);
  BitVector acc(first.begin(), first.end());
  for (std::size_t i = 1; i < row_set.size(); ++i)
    kernels::or_bytes(acc.data(), m.row(row_set[i]).data(), acc.size());
  return acc;
}

std::vector<std::uint8_t> or_rows(const ColorMatrix& m, std::span<const int> row_set) {
  check_row_set(row_set, m.rows());
  auto first = m.row(row_set[0]);
  std::vector<std::uint8_t> acc(first.begin(), first.end());
  for (std::size_t i = 1; i < row_set.size(); ++i)
    kernels::generalized_or_bytes(acc.data(), m.row(row_set[i]).data(), acc.size());
  return acc;
}

std::size_t color_count(std::span<const std::uint8_t> symbols, int index) {
  if (index < 0 || index >= ColorSymbol::kBlackCode)
    throw std::invalid_argument("color index out of range");
  return kernels::count_equal(symbols.data(), symbols.size(), static_cast<std::uint8_t>(index));
}

std::size_t black_count(std::span<const std::uint8_t> symbols) {
  return kernels::count_equal(symbols.data(), symbols.size(), ColorSymbol::kBlackCode);
}

ColorSymbol generalized_or(std::span<const ColorSymbol> symbols) {
  if (symbols.empty()) throw std::invalid_argument("generalized_or of empty list");
  ColorSymbol acc = symbols[0];
  for (std::size_t i = 1; i < symbols.size(); ++i)
    if (symbols[i] != acc) acc = ColorSymbol::black();
  return acc;
}

GeneralizedOrResult generalized_or_strict(std::span<const ColorSymbol> symbols) {
  if (symbols.empty()) throw std::invalid_argument("generalized_or of empty list");
  int first_color = -1;
  bool mixed = false;
  for (const auto& s : symbols) {
    if (s.is_black()) continue;
    if (first_color < 0)
      first_color = s.index();
    else if (s.index() != first_color)
      mixed = true;
  }
  return {generalized_or(symbols), mixed};
}

BooleanMatrix concat(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("concat: row counts differ");
  std::vector<std::uint8_t> cells;
  cells.reserve(static_cast<std::size_t>(a.rows()) *
                static_cast<std::size_t>(a.cols() + b.cols()));
  for (int r = 0; r < a.rows(); ++r) {
    auto ra = a.row(r);
    auto rb = b.row(r);
    cells.insert(cells.end(), ra.begin(), ra.end());
    cells.insert(cells.end(), rb.begin(), rb.end());
  }
  return BooleanMatrix(a.rows(), a.cols() + b.cols(), std::move(cells));
}

bool columns_equal_up_to_permutation(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("column comparison: shape mismatch");
  return columns_permutation_equal(a, b);
}

bool columns_equal_up_to_permutation(const ColorMatrix& a, const ColorMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.palette_size() != b.palette_size())
    throw std::invalid_argument("column comparison: shape or palette mismatch");
  return columns_permutation_equal(a, b);
}

BooleanMatrix restrict_rows(const BooleanMatrix& m, std::span<const int> row_set) {
  check_row_set(row_set, m.rows());
  std::vector<std::uint8_t> cells;
  cells.reserve(row_set.size() * static_cast<std::size_t>(m.cols()));
  for (int r : row_set) {
    auto row = m.row(r);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return BooleanMatrix(static_cast<int>(row_set.size()), m.cols(), std::move(cells));
}

ColorMatrix restrict_rows(const ColorMatrix& m, std::span<const int> row_set) {
  check_row_set(row_set, m.rows());
  std::vector<std::uint8_t> cells;
  cells.reserve(row_set.size() * static_cast<std::size_t>(m.cols()));
  for (int r : row_set) {
    auto row = m.row(r);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return ColorMatrix(static_cast<int>(row_set.size()), m.cols(), m.palette_size(), std::move(cells));
}

void write_matrix_text(std::ostream& out, const BooleanMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " bin\n";
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << int(row[static_cast<std::size_t>(c)]);
    out << '\n';
  }
}

void write_matrix_text(std::ostream& out, const ColorMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " color " << m.palette_size() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      ColorSymbol s = m.at(r, c);
      if (s.is_black())
        out << 'B';
      else
        out << s.index();
    }
    out << '\n';
  }
}

AnyMatrix read_matrix_text(std::istream& in) {
  int rows = 0, cols = 0;
  std::string kind;
  if (!(in >> rows >> cols >> kind)) throw IoError("matrix header: expected 'n m kind'");
  if (rows < 1 || cols < 1) throw IoError("matrix header: bad shape");
  const std::size_t total = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (kind == "bin") {
    std::vector<std::uint8_t> cells(total);
    for (auto& cell : cells) {
      int v;
      if (!(in >> v) || (v != 0 && v != 1)) throw IoError("matrix body: expected 0/1 token");
      cell = static_cast<std::uint8_t>(v);
    }
    return BooleanMatrix(rows, cols, std::move(cells));
  }
  if (kind == "color") {
    int palette = 0;
    if (!(in >> palette) || palette < 1 || palette >= ColorSymbol::kBlackCode)
      throw IoError("matrix header: bad palette size");
    std::vector<std::uint8_t> cells(total);
    for (auto& cell : cells) {
      std::string tok;
      if (!(in >> tok)) throw IoError("matrix body: missing token");
      if (tok == "B") {
        cell = ColorSymbol::kBlackCode;
      } else {
        std::size_t used = 0;
        int v = -1;
        try {
          v = std::stoi(tok, &used);
        } catch (const std::exception&) {
          throw IoError("matrix body: bad color token '" + tok + "'");
        }
        if (used != tok.size() || v < 0 || v >= palette)
          throw IoError("matrix body: bad color token '" + tok + "'");
        cell = static_cast<std::uint8_t>(v);
      }
    }
    return ColorMatrix(rows, cols, palette, std::move(cells));
  }
  throw IoError("matrix header: unknown kind '" + kind + "'");
}

}  // namespace vcs
