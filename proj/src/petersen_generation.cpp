#include <algorithm>
#include <limits>

#include "skeinlab/linalg.hpp"
#include "skeinlab/petersen.hpp"

namespace skeinlab::petersen {

bool GenerationReport::passed() const {
  return identities.passed() && ranks == targets && transposition_in_span;
}

namespace {

/// An invariant tensor stored densely (row-major, leg 0 most significant).
struct Dense {
  unsigned rank = 0;
  std::vector<std::int64_t> data;
};

/// The orbit structure of rank-n tuples: representative flat indices and the
/// orbit id of every flat index.
struct OrbitTable {
  std::vector<std::size_t> reps;
  std::vector<std::uint32_t> orbit_of;
};

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw BudgetExceeded("generation search: coefficient overflow");
  }
  return static_cast<std::int64_t>(v);
}

class Engine {
 public:
  Engine(const ModelContext& ctx, const GenerationOptions& options) : options_(options), d_(ctx.dim()) {
    power_.push_back(1);
    for (unsigned r = 1; r <= options.max_work_rank; ++r) power_.push_back(power_.back() * d_);
    for (unsigned r = 0; r <= options.max_tensor_rank; ++r) {
      auto basis = orbit_basis(ctx, r);
      OrbitTable table;
      table.orbit_of.assign(power_[r], 0);
      for (std::uint32_t o = 0; o < basis.size(); ++o) {
        table.reps.push_back(flat(basis[o].representative));
        for (const auto& [tuple, value] : basis[o].tensor.entries()) table.orbit_of[flat(tuple)] = o;
      }
      tables_.push_back(std::move(table));
      modular_.emplace_back(tables_.back().reps.size());
      exact_.emplace_back(tables_.back().reps.size());
      elements_.emplace_back();
    }
  }

  std::size_t target(unsigned r) const { return tables_[r].reps.size(); }
  std::size_t rank(unsigned r) const { return exact_[r].rank(); }
  bool full() const {
    for (unsigned r = 0; r <= options_.max_tensor_rank; ++r) {
      if (rank(r) < target(r)) return false;
    }
    return true;
  }
  std::size_t candidates() const { return candidates_; }

  // Offers a tensor given by its values at the orbit representatives.
  bool offer(unsigned r, std::vector<std::int64_t> coords) {
    ++candidates_;
    if (!modular_[r].insert(coords)) return false;
    std::vector<Integer> exact(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) exact[i] = Integer(static_cast<long>(coords[i]));
    if (!exact_[r].insert(std::move(exact))) throw Error("generation search: modular and exact spans disagree");
    Dense x{r, std::vector<std::int64_t>(power_[r])};
    for (std::size_t f = 0; f < x.data.size(); ++f) x.data[f] = coords[tables_[r].orbit_of[f]];
    elements_[r].push_back(std::move(x));
    return true;
  }

  bool offer_tensor(const SparseTensor& t) {
    if (t.rank() > options_.max_tensor_rank) return false;
    std::vector<std::int64_t> coords;
    for (std::size_t rep : tables_[t.rank()].reps) coords.push_back(narrow(__int128(t.at(unflat(rep, t.rank())).get_num().get_si())));
    return offer(static_cast<unsigned>(t.rank()), std::move(coords));
  }

  bool contains(const SparseTensor& t) const {
    std::vector<Integer> coords;
    for (std::size_t rep : tables_[t.rank()].reps) coords.push_back(t.at(unflat(rep, t.rank())).get_num());
    return exact_[t.rank()].contains(std::move(coords));
  }

  // One semi-naive round: every operation with at least one operand that was
  // added in the previous round. Returns the number of new elements.
  std::size_t round(std::vector<std::size_t>& frontier_start) {
    std::vector<std::size_t> before(elements_.size());
    for (unsigned r = 0; r < elements_.size(); ++r) before[r] = elements_[r].size();

    for (unsigned n = 2; n <= options_.max_tensor_rank; ++n) {
      for (std::size_t i = frontier_start[n]; i < before[n]; ++i) {
        if (budget_hit()) break;
        offer(n, rotate_at_reps(i, n));
        for (unsigned p = 0; p < n; ++p) offer(n - 2, trace_at_reps(i, n, p));
      }
    }
    for (unsigned n = 1; n <= options_.max_tensor_rank; ++n) {
      for (unsigned m = 1; m <= options_.max_tensor_rank; ++m) {
        for (unsigned k = 0; k <= std::min(n, m); ++k) {
          const unsigned r = n + m - 2 * k;
          if (r > options_.max_tensor_rank || n + m - k > options_.max_work_rank) continue;
          for (std::size_t i = 0; i < before[n]; ++i) {
            for (std::size_t j = 0; j < before[m]; ++j) {
              if (i < frontier_start[n] && j < frontier_start[m]) continue;
              if (budget_hit()) break;
              offer(r, glue_at_reps(i, n, j, m, k));
            }
          }
        }
      }
    }
    std::size_t added = 0;
    for (unsigned r = 0; r < elements_.size(); ++r) {
      frontier_start[r] = before[r];
      added += elements_[r].size() - before[r];
    }
    return added;
  }

  bool budget_hit() const { return candidates_ >= options_.max_candidates; }

 private:
  std::size_t flat(const IndexTuple& t) const {
    std::size_t f = 0;
    for (Index v : t) f = f * d_ + v;
    return f;
  }

  IndexTuple unflat(std::size_t f, std::size_t r) const {
    IndexTuple t(r);
    for (std::size_t i = r; i-- > 0;) {
      t[i] = static_cast<Index>(f % d_);
      f /= d_;
    }
    return t;
  }

  // Moves the first leg to the end.
  std::vector<std::int64_t> rotate_at_reps(std::size_t i, unsigned n) const {
    const Dense& x = elements_[n][i];
    std::vector<std::int64_t> out;
    for (std::size_t rep : tables_[n].reps) {
      const std::size_t last = rep % d_, rest = rep / d_;
      out.push_back(x.data[last * power_[n - 1] + rest]);
    }
    return out;
  }

  // Contracts legs p and p+1 (cyclically).
  std::vector<std::int64_t> trace_at_reps(std::size_t i, unsigned n, unsigned p) const {
    const Dense& x = elements_[n][i];
    const unsigned q = (p + 1) % n;
    std::vector<std::int64_t> out;
    for (std::size_t rep : tables_[n - 2].reps) {
      IndexTuple t = unflat(rep, n - 2);
      __int128 sum = 0;
      for (Index v = 0; v < d_; ++v) {
        IndexTuple full(n);
        std::size_t src = 0;
        for (unsigned pos = 0; pos < n; ++pos) full[pos] = (pos == p || pos == q) ? v : t[src++];
        sum += x.data[flat(full)];
      }
      out.push_back(narrow(sum));
    }
    return out;
  }

  // Joins the last k legs of x to the first k legs of y in nested order.
  std::vector<std::int64_t> glue_at_reps(std::size_t i, unsigned n, std::size_t j, unsigned m, unsigned k) {
    const Dense& x = elements_[n][i];
    const Dense& y = elements_[m][j];
    const unsigned r = n + m - 2 * k;
    const std::vector<std::size_t>& rev = reversal(k);
    const std::size_t bk = power_[k], tail = power_[m - k];
    std::vector<std::int64_t> out;
    out.reserve(tables_[r].reps.size());
    for (std::size_t rep : tables_[r].reps) {
      const std::size_t a = rep / tail, b = rep % tail;
      const std::int64_t* xa = x.data.data() + a * bk;
      __int128 sum = 0;
      for (std::size_t s = 0; s < bk; ++s) {
        const std::int64_t xv = xa[s];
        if (xv != 0) sum += static_cast<__int128>(xv) * y.data[rev[s] * tail + b];
      }
      out.push_back(narrow(sum));
    }
    return out;
  }

  const std::vector<std::size_t>& reversal(unsigned k) {
    if (reversal_.size() <= k) reversal_.resize(k + 1);
    auto& rev = reversal_[k];
    if (rev.empty()) {
      rev.resize(power_[k]);
      for (std::size_t s = 0; s < power_[k]; ++s) {
        std::size_t f = s, g = 0;
        for (unsigned t = 0; t < k; ++t) {
          g = g * d_ + f % d_;
          f /= d_;
        }
        rev[s] = g;
      }
    }
    return rev;
  }

  GenerationOptions options_;
  std::size_t d_;
  std::vector<std::size_t> power_;
  std::vector<OrbitTable> tables_;
  std::vector<ModularSpan> modular_;
  std::vector<IntegerSpan> exact_;
  std::vector<std::vector<Dense>> elements_;
  std::vector<std::vector<std::size_t>> reversal_;
  std::size_t candidates_ = 0;
};

}  // namespace

GenerationReport verify_generation(const KneserModel& model, const GenerationOptions& options) {
  if (options.max_tensor_rank < 2 || options.max_work_rank < options.max_tensor_rank) {
    throw InvalidArgument("generation search needs max_tensor_rank >= 2 and max_work_rank >= max_tensor_rank");
  }
  const ModelContext ctx(model.action);
  const TwoBoxBasis basis = two_box_basis(model);
  GenerationReport report;

  SparseTensor all_ones(2, model.size());
  for (Index u = 0; u < model.size(); ++u) {
    for (Index v = 0; v < model.size(); ++v) all_ones.add({u, v}, 1);
  }
  SparseTensor j_residual = all_ones - (basis.identity + basis.a_gamma + basis.a_gamma_c);
  report.identities.checks.push_back(IdentityCheck{"two-box-decomposition", "J = 1 + A + Ac", j_residual.support_size(), j_residual.is_zero()});
  const SparseTensor r = transposition(ctx);
  const SparseTensor xi = bridged_crossing(basis.identity);
  SparseTensor r_residual = r - (xi + bridged_crossing(basis.a_gamma) + bridged_crossing(basis.a_gamma_c));
  report.identities.checks.push_back(IdentityCheck{"crossing-decomposition", "R = X_1 + X_A + X_Ac, X_1 = ghz(4)",
                                                   r_residual.support_size(), r_residual.is_zero() && xi == ghz(ctx, 4)});

  Engine engine(ctx, options);
  engine.offer_tensor(SparseTensor::scalar(1, ctx.dim()));
  engine.offer_tensor(basis.identity);
  engine.offer_tensor(basis.a_gamma);
  engine.offer_tensor(basis.a_gamma_c);
  engine.offer_tensor(ghz(ctx, 3));
  engine.offer_tensor(ghz(ctx, 1));

  std::vector<std::size_t> frontier(options.max_tensor_rank + 1, 0);
  report.stabilized = engine.full();
  while (!report.stabilized && report.rounds < options.max_rounds) {
    ++report.rounds;
    std::size_t added = engine.round(frontier);
    if (engine.budget_hit()) {
      report.budget_exhausted = true;
      break;
    }
    report.stabilized = added == 0 || engine.full();
  }
  for (unsigned n = 0; n <= options.max_tensor_rank; ++n) {
    report.ranks.push_back(engine.rank(n));
    report.targets.push_back(engine.target(n));
  }
  report.candidates = engine.candidates();
  report.transposition_in_span = options.max_tensor_rank >= 4 && engine.contains(r);
  return report;
}

}  // namespace skeinlab::petersen
