#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skeinlab {

enum class BoxKind { Ghz, Transposition, Molecule, Custom };

std::string_view to_string(BoxKind kind);

struct Box {
  std::string id;
  BoxKind kind = BoxKind::Ghz;
  std::size_t arity = 0;
  std::string tensor_name;     // Custom boxes only
  bool synthetic_cap = false;  // a ghz:1 unit introduced by `cap`/`unit`

  bool operator==(const Box&) const = default;
};

/// A leg of a box; both fields are 0-based.
struct Port {
  std::size_t box = 0;
  std::size_t leg = 0;

  auto operator<=>(const Port&) const = default;
};

struct Wire {
  Port a;
  Port b;

  auto operator<=>(const Wire&) const = default;
};

/// Box-and-wire description of a tensor network diagram. Every port is either
/// on exactly one wire or in exactly one boundary slot.
struct DiagramIR {
  std::vector<Box> boxes;
  std::vector<Wire> wires;
  std::vector<Port> boundary;

  std::size_t add_box(Box box);
  std::size_t add_ghz(std::string id, std::size_t k);
  void connect(Port a, Port b);
  void open(Port p);

  bool is_closed() const { return boundary.empty(); }
  std::optional<std::size_t> find_box(std::string_view id) const;
  std::size_t count(BoxKind kind) const;

  // Throws InvalidArgument naming the first dangling or doubly used port.
  void validate() const;

  // Wires compare as an unordered set of unordered pairs.
  bool operator==(const DiagramIR& other) const;
};

std::string port_name(const DiagramIR& diagram, Port p);

}  // namespace skeinlab
