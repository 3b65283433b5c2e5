#include "skeinlab/permgroup.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "skeinlab/error.hpp"

namespace skeinlab {

Permutation::Permutation(std::vector<Index> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Index image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw InvalidArgument("image sequence is not a bijection on {0.." + std::to_string(images_.size()) +
                            "-1}");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Index> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Index>(i);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Index>>& cycles) {
  std::vector<Index> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Index>(i);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] >= degree) throw InvalidArgument("cycle entry out of range");
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Index> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Index>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw InvalidArgument("cannot compose permutations of different degree");
  std::vector<Index> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = g(h(static_cast<Index>(i)));
  return Permutation(std::move(images));
}

GroupAction::GroupAction(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

bool GroupAction::contains(const Permutation& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

GroupAction closure(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
  if (degree == 0) throw InvalidArgument("group degree must be positive");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree " + std::to_string(g.degree()) + " does not match " +
                            std::to_string(degree));
    }
  }
  std::set<Permutation> found{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators) {
      Permutation next = compose(gen, current);
      if (found.insert(next).second) {
        if (found.size() > cap) throw GroupError("group too large (more than " + std::to_string(cap) + " elements)");
        frontier.push_back(std::move(next));
      }
    }
  }
  return GroupAction(degree, std::move(generators), std::vector<Permutation>(found.begin(), found.end()));
}

IndexTuple act_tuple(const Permutation& g, std::span<const Index> tuple) {
  IndexTuple out(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] >= g.degree()) throw InvalidArgument("index " + std::to_string(tuple[k]) + " out of range");
    out[k] = g(tuple[k]);
  }
  return out;
}

Integer orbit_count(const GroupAction& action, unsigned n) {
  Integer total = 0;
  for (const auto& g : action.elements()) {
    unsigned long fixed = 0;
    for (std::size_t i = 0; i < g.degree(); ++i) fixed += (g(static_cast<Index>(i)) == i);
    total += pow(Integer(fixed), n);
  }
  Integer order(static_cast<unsigned long>(action.order()));
  return total / order;
}

GroupAction stabilizer(const GroupAction& action, Index point) {
  if (point >= action.degree()) throw InvalidArgument("point " + std::to_string(point) + " out of range");
  std::vector<Permutation> kept;
  for (const auto& g : action.elements()) {
    if (g(point) == point) kept.push_back(g);
  }
  std::vector<Permutation> generators = kept;
  return GroupAction(action.degree(), std::move(generators), std::move(kept));
}

std::vector<Index> point_orbit(const GroupAction& action, Index point) {
  if (point >= action.degree()) throw InvalidArgument("point " + std::to_string(point) + " out of range");
  std::set<Index> orbit;
  for (const auto& g : action.elements()) orbit.insert(g(point));
  return {orbit.begin(), orbit.end()};
}

namespace {

std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' || line[pos] == ',')) ++pos;
    if (pos >= line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + pos) {
      throw GroupError("group text line " + std::to_string(line_no) + ": expected a non-negative integer");
    }
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

GroupAction parse_group_text(std::string_view text, std::size_t cap) {
  std::vector<std::vector<std::size_t>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto numbers = parse_numbers(line, line_no);
    if (!numbers.empty()) rows.push_back(std::move(numbers));
    start = end + 1;
  }
  if (rows.empty()) throw GroupError("group text is empty");
  if (rows[0].size() != 1 || rows[0][0] == 0) throw GroupError("first line must hold the positive degree");
  const std::size_t degree = rows[0][0];
  std::vector<Permutation> generators;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != degree) {
      throw GroupError("generator " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " images, expected " + std::to_string(degree));
    }
    std::vector<Index> images(rows[r].begin(), rows[r].end());
    try {
      generators.emplace_back(std::move(images));
    } catch (const InvalidArgument& e) {
      throw GroupError("generator " + std::to_string(r) + ": " + e.what());
    }
  }
  return closure(degree, std::move(generators), cap);
}

}  // namespace skeinlab
