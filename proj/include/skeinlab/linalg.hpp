#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(std::span<const Rational> row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact rank via Bareiss fraction-free elimination. Rows are first cleared of
// denominators, so every intermediate value is an integer.
std::size_t bareiss_rank(const RationalMatrix& matrix);
std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows);

/// Incrementally grown row space over the integers. Each stored row is kept
/// primitive (content 1) and in echelon form against earlier pivots.
class IntegerSpan {
 public:
  explicit IntegerSpan(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when the vector was independent and has been added.
  bool insert(std::vector<Integer> vector);
  bool contains(std::vector<Integer> vector) const;

 private:
  // Reduces in place; returns the first nonzero column or nullopt.
  std::optional<std::size_t> reduce(std::vector<Integer>& vector) const;

  struct Row {
    std::size_t pivot;
    std::vector<Integer> values;
  };
  std::size_t width_;
  std::vector<Row> rows_;
};

/// The same row space kept modulo a 61-bit prime. Used as a fast filter: a
/// vector independent modulo p is independent over the rationals.
class ModularSpan {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  explicit ModularSpan(std::size_t width) : width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  bool insert(std::span<const std::int64_t> vector);
  bool contains(std::span<const std::int64_t> vector) const;

 private:
  bool reduce(std::vector<std::uint64_t>& vector, std::size_t& pivot) const;

  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace skeinlab
