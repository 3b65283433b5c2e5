#include <algorithm>

#include "skeinlab/linalg.hpp"
#include "skeinlab/skein.hpp"

namespace skeinlab {

namespace {

// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<std::size_t>> set_partitions(unsigned n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> block(n, 0);
  auto rec = [&](auto& self, std::size_t pos, std::size_t blocks) -> void {
    if (pos == n) {
      out.push_back(block);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block[pos] = b;
      self(self, pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Lexicographically least representatives of G-orbits on injective j-tuples.
std::vector<IndexTuple> injective_orbit_reps(const ModelContext& ctx, std::size_t j) {
  std::vector<IndexTuple> reps;
  IndexTuple t(j);
  std::vector<bool> used(ctx.dim(), false);
  auto rec = [&](auto& self, std::size_t pos) -> void {
    if (pos == j) {
      for (const auto& g : ctx.action().elements()) {
        if (act_tuple(g, t) < t) return;
      }
      reps.push_back(t);
      return;
    }
    for (Index v = 0; v < ctx.dim(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      t[pos] = v;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return reps;
}

}  // namespace

StandardFormCount standard_form_count(const ModelContext& ctx, unsigned n, std::size_t budget) {
  std::vector<IndexTuple> reps;
  for (auto& e : orbit_basis(ctx, n)) reps.push_back(std::move(e.representative));
  IntegerSpan span(reps.size());
  StandardFormCount result;

  std::vector<std::vector<IndexTuple>> tuple_reps(n + 1);
  for (std::size_t j = 1; j <= std::min<std::size_t>(n, ctx.dim()); ++j) tuple_reps[j] = injective_orbit_reps(ctx, j);

  auto offer = [&](std::vector<Integer> coords) {
    if (result.enumerated >= budget) {
      result.budget_exhausted = true;
      return false;
    }
    ++result.enumerated;
    span.insert(std::move(coords));
    return span.rank() < reps.size();
  };

  for (const auto& partition : set_partitions(n)) {
    const std::size_t blocks = n == 0 ? 0 : *std::max_element(partition.begin(), partition.end()) + 1;
    // rep_values[r][b]: the value of representative r on block b, if constant.
    std::vector<std::vector<Index>> rep_values;
    std::vector<bool> constant(reps.size(), true);
    for (std::size_t r = 0; r < reps.size(); ++r) {
      std::vector<Index> values(blocks, 0);
      std::vector<bool> seen(blocks, false);
      for (std::size_t pos = 0; pos < n; ++pos) {
        std::size_t b = partition[pos];
        if (seen[b] && values[b] != reps[r][pos]) constant[r] = false;
        seen[b] = true;
        values[b] = reps[r][pos];
      }
      rep_values.push_back(std::move(values));
    }

    std::vector<Integer> plain(reps.size());
    for (std::size_t r = 0; r < reps.size(); ++r) plain[r] = constant[r] ? 1 : 0;
    if (!offer(std::move(plain))) {
      result.rank = span.rank();
      return result;
    }

    for (std::size_t j = 1; j <= std::min<std::size_t>(blocks, ctx.dim()); ++j) {
      std::vector<bool> chosen(blocks, false);
      std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(j), true);
      do {
        std::vector<std::size_t> assigned;
        for (std::size_t b = 0; b < blocks; ++b) {
          if (chosen[b]) assigned.push_back(b);
        }
        for (const auto& legs : tuple_reps[j]) {
          std::vector<Integer> coords(reps.size());
          for (std::size_t r = 0; r < reps.size(); ++r) {
            if (!constant[r]) continue;
            unsigned long count = 0;
            for (const auto& g : ctx.action().elements()) {
              bool match = true;
              for (std::size_t i = 0; i < j && match; ++i) match = g(legs[i]) == rep_values[r][assigned[i]];
              if (match) ++count;
            }
            coords[r] = count;
          }
          if (!offer(std::move(coords))) {
            result.rank = span.rank();
            return result;
          }
        }
      } while (std::prev_permutation(chosen.begin(), chosen.end()));
    }
  }
  result.rank = span.rank();
  return result;
}

}  // namespace skeinlab
