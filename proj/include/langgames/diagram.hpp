#pragma once

// Planar string diagrams in free monoidal and free rigid categories.
//
// A Diagram is a list of layers, each holding exactly one box with the
// untouched wires to its left and right. Port graphs are derived on demand
// and give the connectivity used by equality and snake removal.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "langgames/pregroup.hpp"

namespace langgames {

using ObjectList = std::vector<SimpleType>;

ObjectList concat(ObjectList a, const ObjectList& b);
bool adjoint_free(const ObjectList& objects);

/// "1" for the empty list, otherwise the objects joined by " @ ".
std::string format_objects(const ObjectList& objects);

enum class BoxKind { word, generator, cup, cap };

struct Box {
  BoxKind kind = BoxKind::generator;
  std::string name;  // word token or generator name, empty for cups and caps
  ObjectList dom;
  ObjectList cod;

  /// Word triangle 1 -> t.
  static Box word(std::string word, const PregroupType& type);
  /// Generator of a monoidal signature. dom and cod must be adjoint free.
  static Box generator(std::string name, ObjectList dom, ObjectList cod);
  /// Consumes x x^r (the contraction x^(z) x^(z+1) -> 1).
  static Box cup(const SimpleType& x);
  /// Produces x x^l, i.e. the expansion 1 -> t t^l at winding z (which is
  /// also 1 -> t^r t one winding up). Parameterised by the left object.
  static Box cap(const SimpleType& x);

  bool is_cup_or_cap() const { return kind == BoxKind::cup || kind == BoxKind::cap; }
  std::string label() const;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct Layer {
  ObjectList left;
  Box box;
  ObjectList right;

  std::size_t offset() const { return left.size(); }
  friend bool operator==(const Layer&, const Layer&) = default;
};

class Diagram {
 public:
  /// The identity on the empty list.
  Diagram() = default;
  /// Checks boundary chaining and throws DiagramError on mismatch.
  Diagram(ObjectList dom, ObjectList cod, std::vector<Layer> layers);

  static Diagram identity(ObjectList objects);
  static Diagram from_box(const Box& box);
  /// Builds left/right lists by chaining from dom. Offsets index the wires
  /// present just before each box.
  static Diagram from_offsets(ObjectList dom,
                              const std::vector<std::pair<Box, std::size_t>>& boxes);

  const ObjectList& dom() const { return dom_; }
  const ObjectList& cod() const { return cod_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }
  bool empty() const { return layers_.empty(); }

  std::size_t count(BoxKind kind) const;
  bool has_cups_or_caps() const;

  /// Layer-for-layer identity (not equality up to interchange; see diagram_eq).
  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  ObjectList dom_;
  ObjectList cod_;
  std::vector<Layer> layers_;
};

/// d1 then d2. Throws DiagramError when d1.cod != d2.dom.
Diagram compose_seq(const Diagram& d1, const Diagram& d2);
/// d1 beside d2: d1's layers first, then d2's with d1.cod on their left.
Diagram compose_par(const Diagram& d1, const Diagram& d2);

/// Replaces every box for which `f` returns a diagram. The replacement must
/// have the box's dom and cod.
Diagram substitute(const Diagram& d, const std::function<std::optional<Diagram>(const Box&)>& f);

enum class NodeRole { input_boundary, output_boundary, box };

struct PortGraph {
  struct Node {
    NodeRole role = NodeRole::box;
    std::optional<Box> box;  // set iff role == box
    std::size_t inputs = 0;
    std::size_t outputs = 0;
  };
  struct Edge {
    std::size_t src = 0;
    std::size_t src_port = 0;
    std::size_t dst = 0;
    std::size_t dst_port = 0;
    SimpleType label;
  };

  // nodes[0] is the dom boundary, nodes[1] the cod boundary, then one node
  // per box occurrence.
  std::vector<Node> nodes;
  std::vector<Edge> edges;

  std::size_t port_count() const;
};

PortGraph port_graph(const Diagram& d);

/// Splices every cup and cap out of the graph, joining the wires they bend.
/// Throws DiagramError("non-removable loop") for closed cup/cap chains.
PortGraph contract_cups_caps(const PortGraph& g);

/// Canonical text encoding: equal iff the graphs are isomorphic respecting
/// boundary order, port order and box identities.
std::string canonical_encoding(const PortGraph& g);

/// Reorders layers by interchange only: repeatedly brings forward the box
/// that can reach the front with the leftmost offset.
Diagram normal_form(const Diagram& d);

/// Removes every cup and cap by yanking snakes. Requires an adjoint-free
/// boundary and adjoint-free non-cup/cap boxes.
Diagram snake_remove(const Diagram& d);

/// Equality up to interchange of independent layers.
bool diagram_eq(const Diagram& d1, const Diagram& d2);

std::string render_ascii(const Diagram& d);

}  // namespace langgames
