#include "skeinlab/diagram.hpp"

#include <algorithm>

#include "skeinlab/error.hpp"

namespace skeinlab {

std::string_view to_string(BoxKind kind) {
  switch (kind) {
    case BoxKind::Ghz: return "ghz";
    case BoxKind::Transposition: return "R";
    case BoxKind::Molecule: return "S";
    case BoxKind::Custom: return "tensor";
  }
  return "?";
}

std::size_t DiagramIR::add_box(Box box) {
  if (find_box(box.id)) throw InvalidArgument("duplicate box id '" + box.id + "'");
  boxes.push_back(std::move(box));
  return boxes.size() - 1;
}

std::size_t DiagramIR::add_ghz(std::string id, std::size_t k) {
  return add_box(Box{std::move(id), BoxKind::Ghz, k, {}, false});
}

void DiagramIR::connect(Port a, Port b) {
  if (b < a) std::swap(a, b);
  wires.push_back(Wire{a, b});
}

void DiagramIR::open(Port p) { boundary.push_back(p); }

std::optional<std::size_t> DiagramIR::find_box(std::string_view id) const {
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t DiagramIR::count(BoxKind kind) const {
  return static_cast<std::size_t>(std::count_if(boxes.begin(), boxes.end(), [kind](const Box& b) { return b.kind == kind; }));
}

std::string port_name(const DiagramIR& diagram, Port p) {
  std::string box = p.box < diagram.boxes.size() ? diagram.boxes[p.box].id : "#" + std::to_string(p.box);
  return box + "." + std::to_string(p.leg + 1);
}

void DiagramIR::validate() const {
  std::vector<std::vector<int>> uses(boxes.size());
  for (std::size_t i = 0; i < boxes.size(); ++i) uses[i].assign(boxes[i].arity, 0);
  auto mark = [&](Port p) {
    if (p.box >= boxes.size() || p.leg >= boxes[p.box].arity) {
      throw InvalidArgument("port " + port_name(*this, p) + " does not exist");
    }
    if (++uses[p.box][p.leg] > 1) throw InvalidArgument("port " + port_name(*this, p) + " is used more than once");
  };
  for (const auto& w : wires) {
    mark(w.a);
    mark(w.b);
  }
  for (const auto& p : boundary) mark(p);
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t leg = 0; leg < boxes[i].arity; ++leg) {
      if (uses[i][leg] == 0) throw InvalidArgument("port " + port_name(*this, Port{i, leg}) + " is dangling");
    }
  }
}

bool DiagramIR::operator==(const DiagramIR& other) const {
  if (boxes != other.boxes || boundary != other.boundary) return false;
  auto normalized = [](std::vector<Wire> ws) {
    for (auto& w : ws) {
      if (w.b < w.a) std::swap(w.a, w.b);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
  };
  return normalized(wires) == normalized(other.wires);
}

}  // namespace skeinlab
