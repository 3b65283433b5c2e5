#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "skeinlab/cli.hpp"
#include "skeinlab/groups.hpp"
#include "skeinlab/petersen.hpp"
#include "skeinlab/skein.hpp"

using namespace skeinlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < limit_seconds;
  const bool pass = outcome.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d  %s  %-26s %8.3fs (limit %gs)  %s%s\n", number, pass ? "PASS" : "FAIL", name.c_str(), seconds,
              limit_seconds, outcome.detail.c_str(), in_time ? "" : "  [time limit exceeded]");
  std::fflush(stdout);
}

std::string cli_out(std::vector<std::string> args) {
  std::ostringstream out, err;
  if (run_cli(args, out, err) != kExitOk) return "error: " + err.str();
  return out.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<GroupAction> small_groups() {
  std::vector<GroupAction> groups;
  for (std::size_t d = 2; d <= 4; ++d) {
    groups.push_back(oracle::trivial_group(d));
    groups.push_back(oracle::cyclic_group(d));
    groups.push_back(oracle::symmetric_group(d));
  }
  return groups;
}

}  // namespace

int main() {
  const petersen::KneserModel model = petersen::build_kneser();

  criterion(1, "dimension", 1.0, [] {
    const std::string two = cli_out({"dim", "petersen", "2"});
    const std::string four = cli_out({"dim", "petersen", "4"});
    return Outcome{two == "3\n" && four == "107\n", "dim 2 = " + two.substr(0, two.size() - 1) + ", dim 4 = " + four.substr(0, four.size() - 1)};
  });

  criterion(2, "molecule", 10.0, [&] {
    const ModelContext ctx(model.action);
    const SparseTensor s = petersen::molecule_from_graph(model);
    const bool equal = s == molecule(ctx);
    return Outcome{equal && s.support_size() == 120,
                   "support " + std::to_string(s.support_size()) + (equal ? ", equal" : ", differs")};
  });

  criterion(3, "generation", 300.0, [&] {
    const petersen::GenerationReport r = petersen::verify_generation(model);
    std::ostringstream detail;
    for (std::size_t n = 0; n < r.ranks.size(); ++n) detail << (n ? " " : "ranks ") << r.ranks[n] << "/" << r.targets[n];
    detail << ", R " << (r.transposition_in_span ? "in span" : "not in span") << ", " << r.candidates << " candidates";
    return Outcome{r.passed() && r.ranks.size() == 5 && r.ranks[4] == 107, detail.str()};
  });

  criterion(4, "B1 identity", 10.0, [&] {
    const petersen::Report r = petersen::verify_b1(model);
    std::size_t residual = 0;
    for (const auto& c : r.checks) residual += c.residual_support;
    return Outcome{r.passed() && residual == 0, std::to_string(r.checks.size()) + " checks, residual " + std::to_string(residual)};
  });
  criterion(4, "B2 identity", 10.0, [&] {
    const petersen::Report r = petersen::verify_b2(model);
    std::size_t residual = 0;
    for (const auto& c : r.checks) residual += c.residual_support;
    return Outcome{r.passed() && residual == 0, std::to_string(r.checks.size()) + " checks, residual " + std::to_string(residual)};
  });

  criterion(5, "relation suite", 120.0, [] {
    std::size_t checks = 0;
    std::string failed;
    for (const std::string group : {"sym:3", "cyclic:3", "cyclic:4", "sym:4", "petersen"}) {
      const ModelContext ctx(resolve_group(group));
      for (const auto& c : verify_relations(ctx).checks) {
        ++checks;
        if (!c.passed) failed += " " + group + "/" + c.name;
      }
    }
    return Outcome{failed.empty(), std::to_string(checks) + " checks" + (failed.empty() ? "" : ", failed:" + failed)};
  });

  criterion(6, "closed = dense", 120.0, [] {
    std::mt19937_64 rng(2024);
    const auto groups = small_groups();
    std::size_t count = 0, with_s = 0, nonzero = 0, mismatches = 0;
    for (int i = 0; i < 240; ++i) {
      const GroupAction& action = groups[i % groups.size()];
      const ModelContext ctx(action);
      const DiagramIR ir = oracle::random_diagram(rng, {ctx.dim(), 3, 3, 3, 4, 0});
      const Rational closed = evaluate_closed(ctx, ir).value;
      const Rational dense = evaluate_dense(ctx, ir, 64).scalar_value();
      ++count;
      if (ir.count(BoxKind::Molecule) > 0) ++with_s;
      if (closed != 0) ++nonzero;
      if (closed != dense) ++mismatches;
    }
    return Outcome{mismatches == 0 && count >= 200, std::to_string(count) + " diagrams (" + std::to_string(with_s) +
                                                        " with S, " + std::to_string(nonzero) + " nonzero), " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(7, "d^C law", 30.0, [] {
    std::mt19937_64 rng(7);
    std::size_t count = 0, mismatches = 0;
    for (int i = 0; i < 120; ++i) {
      const std::size_t d = 2 + i % 4;
      const ModelContext ctx(oracle::trivial_group(d));
      const DiagramIR ir = oracle::random_diagram(rng, {d, 0, 4, 4, 4, 0});
      Rational expected = 1;
      for (std::size_t c = oracle::closed_components(ir); c > 0; --c) expected *= static_cast<unsigned long>(d);
      ++count;
      if (evaluate_closed(ctx, ir).value != expected || evaluate_dense(ctx, ir, 64).scalar_value() != expected) ++mismatches;
    }
    return Outcome{mismatches == 0 && count >= 100, std::to_string(count) + " diagrams, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(8, "orbit from molecule", 60.0, [] {
    std::size_t count = 0, mismatches = 0;
    for (std::size_t d = 1; d <= 6; ++d) {
      for (const auto& action : {oracle::symmetric_group(d), oracle::cyclic_group(d)}) {
        const ModelContext ctx(action);
        for (unsigned mask = 1; mask < (1u << d); ++mask) {
          IndexTuple rep;
          for (Index v = 0; v < d; ++v) {
            if (mask & (1u << v)) rep.push_back(v);
          }
          ++count;
          if (orbit_from_molecule(ctx, rep) != orbit_sum(ctx, rep)) ++mismatches;
        }
      }
    }
    return Outcome{mismatches == 0, std::to_string(count) + " representatives, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(9, "DSL robustness", 30.0, [] {
    const fs::path root(SKEINLAB_CORPUS_DIR);
    std::size_t valid = 0, round_trips = 0, malformed = 0, diagnosed = 0;
    for (const auto& entry : fs::directory_iterator(root / "valid")) {
      ++valid;
      try {
        const DiagramIR ir = parse_diagram(slurp(entry.path()), ParseOptions{10});
        const std::string printed = print_diagram(ir);
        if (parse_diagram(printed, ParseOptions{10}) == ir && print_diagram(parse_diagram(printed, ParseOptions{10})) == printed) {
          ++round_trips;
        }
      } catch (const std::exception&) {
      }
    }
    for (const auto& entry : fs::directory_iterator(root / "malformed")) {
      ++malformed;
      const std::string text = slurp(entry.path());
      const std::string tag = "# expect: ";
      if (text.rfind(tag, 0) != 0) continue;
      const std::string expected = text.substr(tag.size(), text.find('\n') - tag.size());
      try {
        parse_diagram(text, ParseOptions{10});
      } catch (const ParseError& e) {
        if (to_string(e.kind()) == expected) ++diagnosed;
      } catch (const std::exception&) {
      }
    }
    return Outcome{valid >= 20 && round_trips == valid && diagnosed == malformed,
                   std::to_string(round_trips) + "/" + std::to_string(valid) + " round trips, " + std::to_string(diagnosed) + "/" +
                       std::to_string(malformed) + " diagnostics"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
