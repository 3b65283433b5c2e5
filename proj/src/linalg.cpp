#include "skeinlab/linalg.hpp"

#include <utility>

#include "skeinlab/error.hpp"

namespace skeinlab {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

void RationalMatrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InvalidArgument("row width does not match matrix");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t bareiss_rank(const RationalMatrix& matrix) {
  std::vector<std::vector<Integer>> rows(matrix.rows(), std::vector<Integer>(matrix.cols()));
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    Integer common = 1;
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), matrix(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      rows[r][c] = matrix(r, c).get_num() * (common / matrix(r, c).get_den());
    }
  }
  return bareiss_rank(std::move(rows));
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != n_cols) throw InvalidArgument("ragged matrix");
  }
  Integer previous = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_cols && rank < n_rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < n_rows && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_rows) continue;
    std::swap(rows[pivot], rows[rank]);
    const Integer& p = rows[rank][col];
    for (std::size_t r = rank + 1; r < n_rows; ++r) {
      const Integer factor = rows[r][col];
      for (std::size_t c = col + 1; c < n_cols; ++c) {
        // Sylvester's identity guarantees exact division.
        rows[r][c] = p * rows[r][c] - factor * rows[rank][c];
        mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      rows[r][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

namespace {

void make_primitive(std::vector<Integer>& vector) {
  Integer content = 0;
  for (const auto& v : vector) {
    if (v != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (content > 1) {
    for (auto& v : vector) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
}

}  // namespace

std::optional<std::size_t> IntegerSpan::reduce(std::vector<Integer>& vector) const {
  if (vector.size() != width_) throw InvalidArgument("vector width does not match span");
  for (const auto& row : rows_) {
    const Integer factor = vector[row.pivot];
    if (factor == 0) continue;
    const Integer& lead = row.values[row.pivot];
    for (std::size_t c = 0; c < width_; ++c) vector[c] = lead * vector[c] - factor * row.values[c];
    make_primitive(vector);
  }
  for (std::size_t c = 0; c < width_; ++c) {
    if (vector[c] != 0) return c;
  }
  return std::nullopt;
}

bool IntegerSpan::insert(std::vector<Integer> vector) {
  auto pivot = reduce(vector);
  if (!pivot) return false;
  make_primitive(vector);
  rows_.push_back(Row{*pivot, std::move(vector)});
  return true;
}

bool IntegerSpan::contains(std::vector<Integer> vector) const { return !reduce(vector).has_value(); }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_mul(u64 a, u64 b) {
  u128 product = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(product & ModularSpan::kPrime);
  u64 hi = static_cast<u64>(product >> 61);
  u64 sum = lo + hi;
  if (sum >= ModularSpan::kPrime) sum -= ModularSpan::kPrime;
  return sum;
}

u64 mod_sub(u64 a, u64 b) { return a >= b ? a - b : a + ModularSpan::kPrime - b; }

u64 mod_pow(u64 base, u64 exponent) {
  u64 result = 1;
  while (exponent) {
    if (exponent & 1) result = mod_mul(result, base);
    base = mod_mul(base, base);
    exponent >>= 1;
  }
  return result;
}

u64 to_residue(std::int64_t value) {
  const auto p = static_cast<std::int64_t>(ModularSpan::kPrime);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<u64>(r);
}

}  // namespace

bool ModularSpan::reduce(std::vector<u64>& vector, std::size_t& pivot) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const u64 factor = vector[pivots_[r]];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < width_; ++c) {
      if (row[c]) vector[c] = mod_sub(vector[c], mod_mul(factor, row[c]));
    }
  }
  for (std::size_t c = 0; c < width_; ++c) {
    if (vector[c]) {
      pivot = c;
      return true;
    }
  }
  return false;
}

bool ModularSpan::insert(std::span<const std::int64_t> values) {
  if (values.size() != width_) throw InvalidArgument("vector width does not match span");
  std::vector<u64> vector(width_);
  for (std::size_t c = 0; c < width_; ++c) vector[c] = to_residue(values[c]);
  std::size_t pivot = 0;
  if (!reduce(vector, pivot)) return false;
  const u64 inv = mod_pow(vector[pivot], kPrime - 2);
  for (auto& v : vector) v = mod_mul(v, inv);
  // Keep rows fully reduced so each pivot column is a unit vector.
  for (auto& row : rows_) {
    const u64 factor = row[pivot];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < width_; ++c) {
      if (vector[c]) row[c] = mod_sub(row[c], mod_mul(factor, vector[c]));
    }
  }
  rows_.push_back(std::move(vector));
  pivots_.push_back(pivot);
  return true;
}

bool ModularSpan::contains(std::span<const std::int64_t> values) const {
  if (values.size() != width_) throw InvalidArgument("vector width does not match span");
  std::vector<u64> vector(width_);
  for (std::size_t c = 0; c < width_; ++c) vector[c] = to_residue(values[c]);
  std::size_t pivot = 0;
  return !reduce(vector, pivot);
}

}  // namespace skeinlab
