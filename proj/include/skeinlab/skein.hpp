#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/dsl.hpp"
#include "skeinlab/model.hpp"
#include "skeinlab/tensor.hpp"

namespace skeinlab {

inline constexpr std::size_t kDefaultTermBudget = 1'000'000;

/// Ports grouped into the classes forced equal by wires, GHZ boxes and the two
/// strands of each R box.
struct WireComponentSummary {
  std::vector<std::vector<Port>> components;  // each sorted; ordered by first port
  std::size_t s_count = 0;
  std::size_t closed_components = 0;  // touching no S leg and no boundary slot
};

WireComponentSummary summarize_components(const DiagramIR& diagram);

struct ClosedEvaluation {
  Rational value;
  std::size_t s_boxes = 0;
  std::size_t components = 0;
  std::size_t terms_expanded = 0;
};

// Symbolic evaluation of a closed diagram over GHZ, R and S boxes.
ClosedEvaluation evaluate_closed(const ModelContext& ctx, const DiagramIR& diagram, std::size_t term_budget = kDefaultTermBudget);

// Exact tensor of the diagram on its boundary, by running the compiled plan.
SparseTensor evaluate_dense(const ModelContext& ctx, const DiagramIR& diagram, std::size_t guard = kDefaultGuard,
                            const Bindings& bindings = {});

// Rewrites the two S boxes of smallest index into |G| single-S diagrams: the
// second box is removed and its leg k joins leg g(k) of the first through a
// GHZ(3) splitter, one diagram per g in group order.
std::vector<DiagramIR> expand_molecule_pair(const ModelContext& ctx, const DiagramIR& diagram);

struct RelationCheck {
  std::string name;
  std::string detail;
  bool passed = false;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

RelationReport verify_relations(const ModelContext& ctx, std::uint64_t seed = 0);

struct StandardFormCount {
  std::size_t rank = 0;
  std::size_t enumerated = 0;
  bool budget_exhausted = false;
};

StandardFormCount standard_form_count(const ModelContext& ctx, unsigned n, std::size_t budget = kDefaultTermBudget);

}  // namespace skeinlab
