#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/error.hpp"
#include "skeinlab/model.hpp"
#include "skeinlab/tensor.hpp"

namespace skeinlab {

enum class DiagnosticClass {
  SyntaxError,
  UnknownKind,
  UnknownBox,
  DuplicateBox,
  ArityMismatch,
  DanglingPort,
  DuplicateWire,
};

// Stable spelling used in messages and in `# expect:` corpus annotations.
std::string_view to_string(DiagnosticClass c);

class ParseError : public Error {
 public:
  ParseError(DiagnosticClass kind, std::size_t line, std::size_t column, const std::string& message);

  DiagnosticClass kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  DiagnosticClass kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

struct ParseOptions {
  // Arity given to `S` boxes; 0 rejects them.
  std::size_t molecule_arity = 0;
};

DiagramIR parse_diagram(std::string_view text, const ParseOptions& options = {});

// Canonical text of a diagram; parse_diagram(print_diagram(ir)) == ir.
std::string print_diagram(const DiagramIR& ir);

using Bindings = std::map<std::string, SparseTensor, std::less<>>;

struct PlanStep {
  enum class Op { Load, Join, Trace, Reorder };

  Op op = Op::Load;
  std::size_t target = 0;  // slot written
  std::size_t lhs = 0;     // Load: box index; Join/Trace/Reorder: input slot
  std::size_t rhs = 0;     // Join only
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // Join: (lhs leg, rhs leg); Trace: leg pairs
  std::vector<std::size_t> order;                          // Reorder: permute_legs order
};

struct ContractionPlan {
  std::vector<Box> boxes;
  std::vector<PlanStep> steps;
  std::size_t result_slot = 0;
  std::size_t slot_count = 0;
  // Largest number of pending (wired, not yet contracted) legs on any
  // intermediate produced by a join.
  std::size_t peak_rank = 0;
  std::size_t boundary_rank = 0;
};

inline constexpr std::size_t kDefaultGuard = 8;

// Greedy elimination: repeatedly joins the pair of intermediates whose result
// has the fewest pending legs, ties broken by smallest box index.
ContractionPlan compile(const DiagramIR& ir, std::size_t guard = kDefaultGuard);

SparseTensor run(const ModelContext& ctx, const ContractionPlan& plan, const Bindings& bindings = {});

}  // namespace skeinlab
