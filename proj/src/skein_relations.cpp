#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "skeinlab/skein.hpp"

namespace skeinlab {

bool RelationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.passed; });
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

SparseTensor join(const SparseTensor& a, const SparseTensor& b, std::initializer_list<Pair> pairs) {
  std::vector<Pair> list(pairs);
  return contract_product(a, b, list);
}

// Identity on n strands with legs (bottom_0..bottom_{n-1}, top_0..top_{n-1}).
SparseTensor strands(const ModelContext& ctx, std::size_t n) {
  SparseTensor t = SparseTensor::scalar(1, ctx.dim());
  const SparseTensor cup = ghz(ctx, 2);
  for (std::size_t k = 0; k < n; ++k) t = tensor_product(t, cup);
  std::vector<std::size_t> order(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    order[k] = 2 * k;
    order[n + k] = 2 * k + 1;
  }
  return permute_legs(t, order);
}

// Stacks a crossing of top strands k and k+1 onto an n-strand diagram.
SparseTensor cross_on_top(const SparseTensor& diagram, const SparseTensor& r, std::size_t n, std::size_t k) {
  SparseTensor joined = join(diagram, r, {{n + k, 0}, {n + k + 1, 1}});
  std::vector<std::size_t> order(2 * n);
  for (std::size_t j = 0; j < n; ++j) order[j] = j;
  for (std::size_t m = 0; m < n; ++m) {
    if (m == k) {
      order[n + m] = 2 * n - 1;  // top-left leg of R
    } else if (m == k + 1) {
      order[n + m] = 2 * n - 2;  // top-right leg of R
    } else {
      order[n + m] = n + (m < k ? m : m - 2);
    }
  }
  return permute_legs(joined, order);
}

// Drags a strand across the listed legs of x, one crossing per leg, and
// returns the result with legs in the order of x followed by the strand ends.
SparseTensor thread_strand(const ModelContext& ctx, const SparseTensor& x, const SparseTensor& r,
                           const std::vector<std::size_t>& crossed) {
  const std::size_t n = x.rank();
  SparseTensor t = tensor_product(x, ghz(ctx, 2));
  std::vector<std::size_t> label(n + 2);
  std::iota(label.begin(), label.end(), std::size_t{0});
  const std::size_t strand = n;
  for (std::size_t leg : crossed) {
    auto ps = static_cast<std::size_t>(std::find(label.begin(), label.end(), strand) - label.begin());
    auto pl = static_cast<std::size_t>(std::find(label.begin(), label.end(), leg) - label.begin());
    t = join(t, r, {{ps, 0}, {pl, 1}});
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (i != ps && i != pl) next.push_back(label[i]);
    }
    next.push_back(strand);
    next.push_back(leg);
    label = std::move(next);
  }
  std::vector<std::size_t> order(n + 2);
  for (std::size_t i = 0; i < label.size(); ++i) order[label[i]] = i;
  return permute_legs(t, order);
}

SparseTensor cap_all(const ModelContext& ctx, SparseTensor t) {
  const SparseTensor unit = ghz(ctx, 1);
  while (t.rank() > 0) t = join(t, unit, {{0, 0}});
  return t;
}

// Moves legs a and b of a rank-n tensor to positions 0 and 1, keeping the
// rest in order; sigma(k) is the new position of leg k.
Permutation pair_to_front(std::size_t n, std::size_t a, std::size_t b) {
  std::vector<Index> images(n);
  Index next = 2;
  for (std::size_t k = 0; k < n; ++k) images[k] = k == a ? 0 : k == b ? 1 : next++;
  return Permutation(std::move(images));
}

}  // namespace

RelationReport verify_relations(const ModelContext& ctx, std::uint64_t seed) {
  RelationReport report;
  const std::size_t d = ctx.dim();
  auto record = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back(RelationCheck{std::move(name), std::move(detail), ok});
  };
  const SparseTensor cup = ghz(ctx, 2);
  const SparseTensor g3 = ghz(ctx, 3);
  const SparseTensor r = transposition(ctx);
  const SparseTensor s = molecule(ctx);

  {
    bool ok = is_invariant(ctx, r) && is_invariant(ctx, s);
    for (std::size_t k = 1; k <= 4; ++k) ok = ok && is_invariant(ctx, ghz(ctx, k));
    record("invariance", ok, "ghz(1..4), R and S are fixed by every generator");
  }
  {
    Rational loop = contract(cup, 0).scalar_value();
    record("circle", loop == Rational(static_cast<unsigned long>(d)), "loop value " + to_string(loop));
  }
  {
    bool ok = contract(r, 0) == cup && contract(r, 1) == cup && contract(r, 2) == cup && contract_legs(r, 3, 0) == cup;
    record("reidemeister-1", ok, "all four kinks reduce to a strand");
  }
  {
    SparseTensor twice = cross_on_top(cross_on_top(strands(ctx, 2), r, 2, 0), r, 2, 0);
    record("reidemeister-2", twice == strands(ctx, 2), "two crossings cancel");
  }
  {
    const SparseTensor id3 = strands(ctx, 3);
    SparseTensor lhs = cross_on_top(cross_on_top(cross_on_top(id3, r, 3, 0), r, 3, 1), r, 3, 0);
    SparseTensor rhs = cross_on_top(cross_on_top(cross_on_top(id3, r, 3, 1), r, 3, 0), r, 3, 1);
    record("reidemeister-3", lhs == rhs, "braid relation on three strands");
  }
  {
    std::vector<SparseTensor> samples;
    for (unsigned n = 0; n <= 3; ++n) {
      for (auto& e : orbit_basis(ctx, n)) samples.push_back(std::move(e.tensor));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto rank4 = orbit_basis(ctx, 4);
    for (int sample = 0; sample < 2; ++sample) {
      SparseTensor t(4, d);
      for (const auto& e : rank4) t += Rational(coeff(rng)) * e.tensor;
      samples.push_back(std::move(t));
    }
    bool ok = true;
    std::size_t cases = 0;
    for (const auto& x : samples) {
      const SparseTensor plain = tensor_product(x, cup);
      for (std::size_t m = 0; m <= x.rank(); ++m) {
        std::vector<std::size_t> up(m), down(x.rank() - m);
        std::iota(up.begin(), up.end(), std::size_t{0});
        std::iota(down.begin(), down.end(), m);
        SparseTensor over = thread_strand(ctx, x, r, up);
        SparseTensor under = thread_strand(ctx, x, r, down);
        ok = ok && over == under && over == plain;
        ++cases;
      }
    }
    record("flatness", ok, std::to_string(samples.size()) + " tensors, " + std::to_string(cases) + " splits");
  }
  {
    SparseTensor left = join(g3, g3, {{2, 0}});
    SparseTensor right = join(g3, g3, {{0, 2}});
    record("ghz-associativity", left == ghz(ctx, 4) && right == ghz(ctx, 4), "both bracketings give ghz(4)");
  }
  record("ghz-bubble", join(g3, g3, {{1, 0}, {2, 1}}) == cup, "a bubble on a strand is removed");
  record("ghz-unit", join(g3, ghz(ctx, 1), {{2, 0}}) == cup, "capping one leg of ghz(3) gives a strand");
  {
    Rational capped = cap_all(ctx, s).scalar_value();
    record("capped-molecule", capped == Rational(static_cast<unsigned long>(ctx.group_order())), "value " + to_string(capped));
  }
  {
    std::vector<Permutation> sigmas;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) sigmas.push_back(pair_to_front(d, a, b));
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 100; ++i) {
      std::vector<Index> images(d);
      std::iota(images.begin(), images.end(), Index{0});
      std::shuffle(images.begin(), images.end(), rng);
      sigmas.emplace_back(std::move(images));
    }
    bool ok = true;
    if (d >= 2) {
      for (const auto& sigma : sigmas) ok = ok && join(apply_leg_permutation(sigma, s), g3, {{0, 0}, {1, 1}}).is_zero();
    }
    record("y-uncappable", ok, std::to_string(d >= 2 ? sigmas.size() : 0) + " leg permutations");
  }
  {
    SparseTensor doubled = s;
    for (std::size_t k = 0; k < d; ++k) doubled = join(doubled, g3, {{0, 0}});
    std::vector<std::size_t> order(2 * d);
    for (std::size_t k = 0; k < d; ++k) {
      order[k] = 2 * k;
      order[d + k] = 2 * k + 1;
    }
    doubled = permute_legs(doubled, order);
    SparseTensor rhs(2 * d, d);
    for (const auto& g : ctx.action().elements()) {
      std::vector<Index> images(2 * d);
      for (std::size_t k = 0; k < d; ++k) {
        images[k] = static_cast<Index>(k);
        images[d + k] = static_cast<Index>(d + g(static_cast<Index>(k)));
      }
      rhs += apply_leg_permutation(Permutation(std::move(images)), doubled);
    }
    record("group-symmetrizing", rhs == tensor_product(s, s), std::to_string(ctx.group_order()) + " terms");
  }
  return report;
}

}  // namespace skeinlab
