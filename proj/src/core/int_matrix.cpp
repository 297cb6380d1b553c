#include <cctype>
#include <string>

#include "reidemeister/core.hpp"
#include "reidemeister/error.hpp"

namespace reidemeister::core {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "entry count does not match " +
                                                  std::to_string(rows) + "x" + std::to_string(cols));
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> values) {
  IntMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

IntMatrix entrywise(const IntMatrix& a, const IntMatrix& b, bool subtract) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "entrywise operation on different shapes");
  }
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = subtract ? Integer(a(i, j) - b(i, j)) : Integer(a(i, j) + b(i, j));
    }
  }
  return out;
}

}  // namespace

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return entrywise(a, b, true); }
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) { return entrywise(a, b, false); }

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hconcat row counts differ");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) return {};

  std::vector<Integer> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    std::size_t end = compact.find(';', pos);
    if (end == std::string::npos) end = compact.size();
    std::string_view row(compact.data() + pos, end - pos);
    std::size_t count = 0;
    std::size_t cpos = 0;
    while (cpos <= row.size()) {
      std::size_t cend = row.find(',', cpos);
      if (cend == std::string_view::npos) cend = row.size();
      std::string token(row.substr(cpos, cend - cpos));
      Integer value;
      if (token.empty() || value.set_str(token, 10) != 0) {
        throw Error(ErrorCode::ParseError, "bad matrix entry '" + token + "'");
      }
      entries.push_back(std::move(value));
      ++count;
      cpos = cend + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw Error(ErrorCode::ParseError, "matrix rows have different lengths");
    }
    ++rows;
    pos = end + 1;
  }
  return IntMatrix(rows, cols, std::move(entries));
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out;
}

}  // namespace reidemeister::core
