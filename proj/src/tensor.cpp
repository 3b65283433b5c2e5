#include "skeinlab/tensor.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "skeinlab/error.hpp"

namespace skeinlab {

namespace {

struct TupleHash {
  std::size_t operator()(const IndexTuple& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Index v : t) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using Accumulator = std::unordered_map<IndexTuple, Rational, TupleHash>;

SparseTensor from_accumulator(std::size_t rank, std::size_t dim, Accumulator&& acc) {
  SparseTensor out(rank, dim);
  for (auto& [tuple, value] : acc) {
    if (value != 0) out.add(tuple, value);
  }
  return out;
}

void check_position(const SparseTensor& t, std::size_t k, const char* what) {
  if (t.rank() < 2 || k + 1 >= t.rank()) {
    throw InvalidArgument(std::string(what) + ": position " + std::to_string(k) + " invalid for rank " +
                          std::to_string(t.rank()));
  }
}

}  // namespace

SparseTensor::SparseTensor(std::size_t rank, std::size_t dim) : rank_(rank), dim_(dim) {
  if (dim == 0) throw InvalidArgument("tensor dimension must be positive");
}

SparseTensor SparseTensor::scalar(const Rational& value, std::size_t dim) {
  SparseTensor t(0, dim);
  t.add({}, value);
  return t;
}

SparseTensor SparseTensor::basic(IndexTuple tuple, std::size_t dim) {
  SparseTensor t(tuple.size(), dim);
  t.add(std::move(tuple), 1);
  return t;
}

void SparseTensor::check_tuple(std::span<const Index> tuple) const {
  if (tuple.size() != rank_) {
    throw InvalidArgument("tuple of length " + std::to_string(tuple.size()) + " for rank-" + std::to_string(rank_) +
                          " tensor");
  }
  for (Index v : tuple) {
    if (v >= dim_) throw InvalidArgument("index " + std::to_string(v) + " out of range for dim " + std::to_string(dim_));
  }
}

void SparseTensor::check_same_shape(const SparseTensor& other) const {
  if (rank_ != other.rank_ || dim_ != other.dim_) {
    throw InvalidArgument("shape mismatch: (" + std::to_string(rank_) + "," + std::to_string(dim_) + ") vs (" +
                          std::to_string(other.rank_) + "," + std::to_string(other.dim_) + ")");
  }
}

Rational SparseTensor::at(std::span<const Index> tuple) const {
  check_tuple(tuple);
  auto it = entries_.find(IndexTuple(tuple.begin(), tuple.end()));
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational SparseTensor::scalar_value() const {
  if (rank_ != 0) throw InvalidArgument("scalar_value on rank-" + std::to_string(rank_) + " tensor");
  return entries_.empty() ? Rational(0) : entries_.begin()->second;
}

void SparseTensor::add(IndexTuple tuple, const Rational& value) {
  check_tuple(tuple);
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(std::move(tuple), value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& other) {
  check_same_shape(other);
  for (const auto& [tuple, value] : other.entries_) add(tuple, value);
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& other) {
  check_same_shape(other);
  for (const auto& [tuple, value] : other.entries_) add(tuple, -value);
  return *this;
}

SparseTensor& SparseTensor::operator*=(const Rational& factor) {
  if (factor == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [tuple, value] : entries_) value *= factor;
  return *this;
}

SparseTensor tensor_product(const SparseTensor& a, const SparseTensor& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("tensor_product: dimension mismatch");
  SparseTensor out(a.rank() + b.rank(), a.dim());
  for (const auto& [ta, va] : a.entries()) {
    for (const auto& [tb, vb] : b.entries()) {
      IndexTuple joined = ta;
      joined.insert(joined.end(), tb.begin(), tb.end());
      out.add(std::move(joined), va * vb);
    }
  }
  return out;
}

SparseTensor contract(const SparseTensor& t, std::size_t k) {
  check_position(t, k, "contract");
  Accumulator acc;
  for (const auto& [tuple, value] : t.entries()) {
    if (tuple[k] != tuple[k + 1]) continue;
    IndexTuple rest;
    rest.reserve(tuple.size() - 2);
    rest.insert(rest.end(), tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
    rest.insert(rest.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k + 2), tuple.end());
    acc[std::move(rest)] += value;
  }
  return from_accumulator(t.rank() - 2, t.dim(), std::move(acc));
}

SparseTensor permute_swap(const SparseTensor& t, std::size_t k) {
  check_position(t, k, "permute_swap");
  SparseTensor out(t.rank(), t.dim());
  for (const auto& [tuple, value] : t.entries()) {
    IndexTuple swapped = tuple;
    std::swap(swapped[k], swapped[k + 1]);
    out.add(std::move(swapped), value);
  }
  return out;
}

Rational inner_product(const SparseTensor& a, const SparseTensor& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim()) throw InvalidArgument("inner_product: shape mismatch");
  Rational sum = 0;
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (const auto& [tuple, value] : small.entries()) {
    auto it = large.entries().find(tuple);
    if (it != large.entries().end()) sum += value * it->second;
  }
  return sum;
}

std::size_t rank_of_span(std::span<const SparseTensor> tensors) {
  if (tensors.empty()) return 0;
  for (const auto& t : tensors) {
    if (t.rank() != tensors.front().rank() || t.dim() != tensors.front().dim()) {
      throw InvalidArgument("rank_of_span: shape mismatch");
    }
  }
  // Sparse fraction-free echelon form keyed by pivot tuple. Every stored row
  // has its pivot as smallest key, so eliminating the smallest key of a
  // candidate only ever touches larger keys.
  using Row = std::map<IndexTuple, Integer>;
  std::map<IndexTuple, Row> echelon;
  for (const auto& t : tensors) {
    Integer common = 1;
    for (const auto& [tuple, value] : t.entries()) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), value.get_den_mpz_t());
    }
    Row row;
    for (const auto& [tuple, value] : t.entries()) row.emplace(tuple, value.get_num() * (common / value.get_den()));
    while (!row.empty()) {
      auto pivot_row = echelon.find(row.begin()->first);
      if (pivot_row == echelon.end()) break;
      const Integer factor = row.begin()->second;
      const Integer lead = pivot_row->second.begin()->second;
      Row next;
      for (auto& [tuple, value] : row) next.emplace(tuple, lead * value);
      for (const auto& [tuple, value] : pivot_row->second) {
        auto& slot = next[tuple];
        slot -= factor * value;
        if (slot == 0) next.erase(tuple);
      }
      Integer content = 0;
      for (const auto& [tuple, value] : next) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), value.get_mpz_t());
      if (content > 1) {
        for (auto& [tuple, value] : next) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), content.get_mpz_t());
      }
      row = std::move(next);
    }
    if (!row.empty()) {
      IndexTuple key = row.begin()->first;
      echelon.emplace(std::move(key), std::move(row));
    }
  }
  return echelon.size();
}

SparseTensor permute_legs(const SparseTensor& t, std::span<const std::size_t> order) {
  if (order.size() != t.rank()) throw InvalidArgument("permute_legs: order length mismatch");
  std::vector<bool> seen(order.size(), false);
  for (std::size_t p : order) {
    if (p >= order.size() || seen[p]) throw InvalidArgument("permute_legs: order is not a permutation");
    seen[p] = true;
  }
  SparseTensor out(t.rank(), t.dim());
  for (const auto& [tuple, value] : t.entries()) {
    IndexTuple moved(tuple.size());
    for (std::size_t j = 0; j < order.size(); ++j) moved[j] = tuple[order[j]];
    out.add(std::move(moved), value);
  }
  return out;
}

SparseTensor contract_legs(const SparseTensor& t, std::size_t p, std::size_t q) {
  if (p == q || p >= t.rank() || q >= t.rank()) throw InvalidArgument("contract_legs: invalid positions");
  if (p > q) std::swap(p, q);
  SparseTensor current = t;
  while (q > p + 1) {
    current = permute_swap(current, q - 1);
    --q;
  }
  return contract(current, p);
}

SparseTensor contract_product(const SparseTensor& a, const SparseTensor& b,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  if (a.dim() != b.dim()) throw InvalidArgument("contract_product: dimension mismatch");
  std::vector<bool> a_used(a.rank(), false);
  std::vector<bool> b_used(b.rank(), false);
  for (const auto& [pa, pb] : pairs) {
    if (pa >= a.rank() || pb >= b.rank() || a_used[pa] || b_used[pb]) {
      throw InvalidArgument("contract_product: invalid leg pair");
    }
    a_used[pa] = b_used[pb] = true;
  }
  std::vector<std::size_t> a_rest;
  std::vector<std::size_t> b_rest;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!a_used[i]) a_rest.push_back(i);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (!b_used[i]) b_rest.push_back(i);
  }

  struct Part {
    IndexTuple rest;
    const Rational* value;
  };
  std::unordered_map<IndexTuple, std::vector<Part>, TupleHash> by_key;
  for (const auto& [tuple, value] : b.entries()) {
    IndexTuple key(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) key[i] = tuple[pairs[i].second];
    IndexTuple rest(b_rest.size());
    for (std::size_t i = 0; i < b_rest.size(); ++i) rest[i] = tuple[b_rest[i]];
    by_key[std::move(key)].push_back(Part{std::move(rest), &value});
  }

  Accumulator acc;
  IndexTuple key(pairs.size());
  for (const auto& [tuple, value] : a.entries()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) key[i] = tuple[pairs[i].first];
    auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    IndexTuple joined(a_rest.size() + b_rest.size());
    for (std::size_t i = 0; i < a_rest.size(); ++i) joined[i] = tuple[a_rest[i]];
    for (const auto& part : it->second) {
      std::copy(part.rest.begin(), part.rest.end(), joined.begin() + static_cast<std::ptrdiff_t>(a_rest.size()));
      acc[joined] += value * *part.value;
    }
  }
  return from_accumulator(a_rest.size() + b_rest.size(), a.dim(), std::move(acc));
}

SparseTensor trace_legs(const SparseTensor& t, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<bool> used(t.rank(), false);
  for (const auto& [p, q] : pairs) {
    if (p >= t.rank() || q >= t.rank() || p == q || used[p] || used[q]) {
      throw InvalidArgument("trace_legs: invalid leg pair");
    }
    used[p] = used[q] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (!used[i]) rest.push_back(i);
  }
  Accumulator acc;
  for (const auto& [tuple, value] : t.entries()) {
    bool keep = std::all_of(pairs.begin(), pairs.end(), [&](const auto& pq) { return tuple[pq.first] == tuple[pq.second]; });
    if (!keep) continue;
    IndexTuple reduced(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) reduced[i] = tuple[rest[i]];
    acc[std::move(reduced)] += value;
  }
  return from_accumulator(rest.size(), t.dim(), std::move(acc));
}

SparseTensor relabel(const SparseTensor& t, const Permutation& g) {
  if (g.degree() != t.dim()) throw InvalidArgument("relabel: permutation degree does not match tensor dimension");
  SparseTensor out(t.rank(), t.dim());
  for (const auto& [tuple, value] : t.entries()) out.add(act_tuple(g, tuple), value);
  return out;
}

}  // namespace skeinlab
