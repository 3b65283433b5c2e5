#include "skeinlab/model.hpp"

#include <string>

#include "skeinlab/error.hpp"

namespace skeinlab {

SparseTensor ghz(const ModelContext& ctx, std::size_t k) {
  if (k == 0) throw InvalidArgument("ghz arity must be at least 1");
  SparseTensor t(k, ctx.dim());
  for (Index j = 0; j < ctx.dim(); ++j) t.add(IndexTuple(k, j), 1);
  return t;
}

SparseTensor transposition(const ModelContext& ctx) {
  SparseTensor t(4, ctx.dim());
  for (Index i = 0; i < ctx.dim(); ++i) {
    for (Index j = 0; j < ctx.dim(); ++j) t.add({i, j, i, j}, 1);
  }
  return t;
}

SparseTensor molecule(const ModelContext& ctx) {
  SparseTensor t(ctx.dim(), ctx.dim());
  for (const auto& g : ctx.action().elements()) t.add(IndexTuple(g.images().begin(), g.images().end()), 1);
  return t;
}

SparseTensor orbit_sum(const ModelContext& ctx, std::span<const Index> tuple) {
  SparseTensor t(tuple.size(), ctx.dim());
  for (const auto& g : ctx.action().elements()) t.add(act_tuple(g, tuple), 1);
  return t;
}

std::vector<OrbitBasisElement> orbit_basis(const ModelContext& ctx, unsigned n, std::size_t guard) {
  const std::size_t d = ctx.dim();
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (total > guard / d) throw BudgetExceeded("orbit enumeration d^n exceeds guard " + std::to_string(guard));
    total *= d;
  }
  auto flat = [d](const IndexTuple& t) {
    std::size_t f = 0;
    for (Index v : t) f = f * d + v;
    return f;
  };
  std::vector<bool> seen(total, false);
  std::vector<OrbitBasisElement> basis;
  IndexTuple tuple(n, 0);
  for (std::size_t f = 0; f < total; ++f) {
    if (!seen[f]) {
      SparseTensor sum(n, d);
      for (const auto& g : ctx.action().elements()) {
        IndexTuple image = act_tuple(g, tuple);
        seen[flat(image)] = true;
        sum.add(std::move(image), 1);
      }
      basis.push_back(OrbitBasisElement{tuple, std::move(sum)});
    }
    // Odometer increment in lexicographic order.
    for (std::size_t pos = n; pos-- > 0;) {
      if (++tuple[pos] < d) break;
      tuple[pos] = 0;
    }
  }
  return basis;
}

std::vector<Rational> orbit_coordinates(const SparseTensor& t, std::span<const IndexTuple> representatives) {
  std::vector<Rational> coords;
  coords.reserve(representatives.size());
  for (const auto& rep : representatives) coords.push_back(t.at(rep));
  return coords;
}

bool is_invariant(const ModelContext& ctx, const SparseTensor& t) {
  if (t.dim() != ctx.dim()) throw InvalidArgument("is_invariant: dimension mismatch");
  for (const auto& g : ctx.action().generators()) {
    if (relabel(t, g) != t) return false;
  }
  return true;
}

SparseTensor apply_leg_permutation(const Permutation& g, const SparseTensor& t) {
  if (g.degree() != t.rank()) throw InvalidArgument("leg permutation degree does not match tensor rank");
  SparseTensor out(t.rank(), t.dim());
  for (const auto& [tuple, value] : t.entries()) {
    IndexTuple moved(tuple.size());
    for (std::size_t k = 0; k < tuple.size(); ++k) moved[g(static_cast<Index>(k))] = tuple[k];
    out.add(std::move(moved), value);
  }
  return out;
}

PermutationOperator PermutationOperator::identity(std::size_t legs) {
  PermutationOperator op(legs);
  op.add(Permutation::identity(legs), 1);
  return op;
}

PermutationOperator PermutationOperator::group_symmetrizer(const ModelContext& ctx) {
  PermutationOperator op(ctx.dim());
  for (const auto& g : ctx.action().elements()) op.add(g, 1);
  return op;
}

void PermutationOperator::add(const Permutation& g, const Rational& coefficient) {
  if (g.degree() != legs_) throw InvalidArgument("operator term has wrong degree");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

SparseTensor PermutationOperator::apply(const SparseTensor& t) const {
  if (t.rank() != legs_) throw InvalidArgument("operator applied to tensor of wrong rank");
  SparseTensor out(t.rank(), t.dim());
  for (const auto& [g, c] : terms_) {
    SparseTensor moved = apply_leg_permutation(g, t);
    moved *= c;
    out += moved;
  }
  return out;
}

PermutationOperator compose(const PermutationOperator& a, const PermutationOperator& b) {
  if (a.legs_ != b.legs_) throw InvalidArgument("composing operators of different degree");
  PermutationOperator out(a.legs_);
  for (const auto& [g, cg] : a.terms_) {
    for (const auto& [h, ch] : b.terms_) out.add(compose(g, h), cg * ch);
  }
  return out;
}

PermutationOperator operator*(const Rational& f, PermutationOperator op) {
  if (f == 0) {
    op.terms_.clear();
    return op;
  }
  for (auto& [g, c] : op.terms_) c *= f;
  return op;
}

SparseTensor orbit_from_molecule(const ModelContext& ctx, std::span<const Index> representative) {
  for (std::size_t i = 0; i < representative.size(); ++i) {
    if (representative[i] >= ctx.dim()) throw InvalidArgument("orbit_from_molecule: index out of range");
    if (i > 0 && representative[i] <= representative[i - 1]) {
      throw InvalidArgument("orbit_from_molecule: representative must be strictly increasing");
    }
  }
  // Cap molecule legs from the highest down so lower positions stay put.
  SparseTensor current = molecule(ctx);
  const SparseTensor unit = ghz(ctx, 1);
  std::size_t kept = representative.size();
  for (std::size_t leg = ctx.dim(); leg-- > 0;) {
    if (kept > 0 && representative[kept - 1] == leg) {
      --kept;
      continue;
    }
    const std::pair<std::size_t, std::size_t> pair{leg, 0};
    current = contract_product(current, unit, std::span(&pair, 1));
  }
  return current;
}

}  // namespace skeinlab
