#include "skeinlab/groups.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "skeinlab/error.hpp"
#include "skeinlab/petersen.hpp"

namespace skeinlab {

namespace {

std::size_t parse_degree(std::string_view text, std::string_view source) {
  std::size_t d = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
  if (ec != std::errc() || ptr != text.data() + text.size() || d == 0) {
    throw GroupError("bad degree in group '" + std::string(source) + "'");
  }
  return d;
}

Permutation cycle(std::size_t d) {
  std::vector<Index> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<Index>((i + 1) % d);
  return Permutation(std::move(images));
}

}  // namespace

GroupAction resolve_group(std::string_view source) {
  if (source == "petersen") return petersen::build_kneser().action;
  if (source.find(';') != std::string_view::npos || source.find('\n') != std::string_view::npos) {
    return parse_group_text(source);
  }
  const auto colon = source.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = source.substr(0, colon);
    if (family == "trivial" || family == "sym" || family == "cyclic") {
      const std::size_t d = parse_degree(source.substr(colon + 1), source);
      if (family == "sym") {
        std::size_t order = 1;
        for (std::size_t k = 2; k <= d; ++k) {
          order *= k;
          if (order > kDefaultGroupCap) {
            throw GroupError("group too large (more than " + std::to_string(kDefaultGroupCap) + " elements)");
          }
        }
      }
      std::vector<Permutation> generators;
      if (family == "cyclic" && d > 1) generators.push_back(cycle(d));
      if (family == "sym" && d > 1) {
        generators.push_back(Permutation::from_cycles(d, {{0, 1}}));
        if (d > 2) generators.push_back(cycle(d));
      }
      return closure(d, std::move(generators));
    }
  }
  std::ifstream in{std::string(source)};
  if (!in) throw GroupError("unknown group '" + std::string(source) + "' (not a builtin and not a readable file)");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_group_text(text.str());
}

}  // namespace skeinlab
