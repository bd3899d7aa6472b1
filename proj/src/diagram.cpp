#include "langgames/diagram.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "langgames/error.hpp"

namespace langgames {

ObjectList concat(ObjectList a, const ObjectList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool adjoint_free(const ObjectList& objects) {
  return std::all_of(objects.begin(), objects.end(),
                     [](const SimpleType& t) { return t.is_plain(); });
}

std::string format_objects(const ObjectList& objects) {
  if (objects.empty()) return "1";
  std::string out;
  for (const auto& o : objects) {
    if (!out.empty()) out += " @ ";
    out += format_simple(o);
  }
  return out;
}

Box Box::word(std::string word, const PregroupType& type) {
  return {BoxKind::word, std::move(word), {}, type.factors()};
}

Box Box::generator(std::string name, ObjectList dom, ObjectList cod) {
  if (!adjoint_free(dom) || !adjoint_free(cod)) {
    throw DiagramError("generator '" + name + "' must have adjoint-free dom and cod, got " +
                       format_objects(dom) + " -> " + format_objects(cod));
  }
  return {BoxKind::generator, std::move(name), std::move(dom), std::move(cod)};
}

Box Box::cup(const SimpleType& x) { return {BoxKind::cup, {}, {x, x.right()}, {}}; }

Box Box::cap(const SimpleType& x) { return {BoxKind::cap, {}, {}, {x, x.left()}}; }

std::string Box::label() const {
  switch (kind) {
    case BoxKind::cup:
      return "cup(" + format_simple(dom.at(0)) + ")";
    case BoxKind::cap:
      return "cap(" + format_simple(cod.at(0)) + ")";
    default:
      return name;
  }
}

Diagram::Diagram(ObjectList dom, ObjectList cod, std::vector<Layer> layers)
    : dom_(std::move(dom)), cod_(std::move(cod)), layers_(std::move(layers)) {
  ObjectList current = dom_;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& l = layers_[i];
    const ObjectList expected = concat(concat(l.left, l.box.dom), l.right);
    if (expected != current) {
      throw DiagramError("layer " + std::to_string(i) + " (" + l.box.label() + ") expects [" +
                         format_objects(expected) + "] but receives [" +
                         format_objects(current) + "]");
    }
    current = concat(concat(l.left, l.box.cod), l.right);
  }
  if (current != cod_) {
    throw DiagramError("diagram ends in [" + format_objects(current) + "] but cod is [" +
                       format_objects(cod_) + "]");
  }
}

Diagram Diagram::identity(ObjectList objects) {
  ObjectList cod = objects;
  return Diagram(std::move(objects), std::move(cod), {});
}

Diagram Diagram::from_box(const Box& box) { return Diagram(box.dom, box.cod, {Layer{{}, box, {}}}); }

Diagram Diagram::from_offsets(ObjectList dom,
                              const std::vector<std::pair<Box, std::size_t>>& boxes) {
  ObjectList current = dom;
  std::vector<Layer> layers;
  layers.reserve(boxes.size());
  for (const auto& [box, offset] : boxes) {
    if (offset + box.dom.size() > current.size()) {
      throw DiagramError("box " + box.label() + " at offset " + std::to_string(offset) +
                         " overruns [" + format_objects(current) + "]");
    }
    const auto first = current.begin() + static_cast<std::ptrdiff_t>(offset);
    const auto last = first + static_cast<std::ptrdiff_t>(box.dom.size());
    Layer layer{ObjectList(current.begin(), first), box, ObjectList(last, current.end())};
    current = concat(concat(layer.left, box.cod), layer.right);
    layers.push_back(std::move(layer));
  }
  ObjectList cod = current;
  return Diagram(std::move(dom), std::move(cod), std::move(layers));
}

std::size_t Diagram::count(BoxKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      layers_.begin(), layers_.end(), [kind](const Layer& l) { return l.box.kind == kind; }));
}

bool Diagram::has_cups_or_caps() const {
  return std::any_of(layers_.begin(), layers_.end(),
                     [](const Layer& l) { return l.box.is_cup_or_cap(); });
}

Diagram compose_seq(const Diagram& d1, const Diagram& d2) {
  if (d1.cod() != d2.dom()) {
    throw DiagramError("cannot compose: cod [" + format_objects(d1.cod()) +
                       "] does not match dom [" + format_objects(d2.dom()) + "]");
  }
  std::vector<Layer> layers = d1.layers();
  layers.insert(layers.end(), d2.layers().begin(), d2.layers().end());
  return Diagram(d1.dom(), d2.cod(), std::move(layers));
}

Diagram compose_par(const Diagram& d1, const Diagram& d2) {
  std::vector<Layer> layers;
  layers.reserve(d1.size() + d2.size());
  for (const auto& l : d1.layers()) {
    layers.push_back({l.left, l.box, concat(l.right, d2.dom())});
  }
  for (const auto& l : d2.layers()) {
    layers.push_back({concat(d1.cod(), l.left), l.box, l.right});
  }
  return Diagram(concat(d1.dom(), d2.dom()), concat(d1.cod(), d2.cod()), std::move(layers));
}

Diagram substitute(const Diagram& d,
                   const std::function<std::optional<Diagram>(const Box&)>& f) {
  Diagram result = Diagram::identity(d.dom());
  for (const auto& l : d.layers()) {
    Diagram piece = Diagram::from_box(l.box);
    if (auto replacement = f(l.box)) {
      if (replacement->dom() != l.box.dom || replacement->cod() != l.box.cod) {
        throw DiagramError("replacement for " + l.box.label() + " has type " +
                           format_objects(replacement->dom()) + " -> " +
                           format_objects(replacement->cod()) + ", expected " +
                           format_objects(l.box.dom) + " -> " + format_objects(l.box.cod));
      }
      piece = std::move(*replacement);
    }
    const Diagram layer =
        compose_par(compose_par(Diagram::identity(l.left), piece), Diagram::identity(l.right));
    result = compose_seq(result, layer);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Port graphs

std::size_t PortGraph::port_count() const {
  std::size_t total = 0;
  for (const auto& n : nodes) total += n.inputs + n.outputs;
  return total;
}

PortGraph port_graph(const Diagram& d) {
  PortGraph g;
  g.nodes.push_back({NodeRole::input_boundary, std::nullopt, 0, d.dom().size()});
  g.nodes.push_back({NodeRole::output_boundary, std::nullopt, d.cod().size(), 0});

  struct Source {
    std::size_t node;
    std::size_t port;
  };
  std::vector<Source> wires;
  for (std::size_t i = 0; i < d.dom().size(); ++i) wires.push_back({0, i});
  ObjectList types = d.dom();

  for (std::size_t k = 0; k < d.size(); ++k) {
    const auto& layer = d.layers()[k];
    const std::size_t node = g.nodes.size();
    g.nodes.push_back({NodeRole::box, layer.box, layer.box.dom.size(), layer.box.cod.size()});
    const std::size_t off = layer.offset();
    for (std::size_t p = 0; p < layer.box.dom.size(); ++p) {
      g.edges.push_back({wires[off + p].node, wires[off + p].port, node, p, types[off + p]});
    }
    std::vector<Source> outputs;
    for (std::size_t q = 0; q < layer.box.cod.size(); ++q) outputs.push_back({node, q});
    const auto w_first = wires.begin() + static_cast<std::ptrdiff_t>(off);
    wires.erase(w_first, w_first + static_cast<std::ptrdiff_t>(layer.box.dom.size()));
    wires.insert(wires.begin() + static_cast<std::ptrdiff_t>(off), outputs.begin(), outputs.end());
    const auto t_first = types.begin() + static_cast<std::ptrdiff_t>(off);
    types.erase(t_first, t_first + static_cast<std::ptrdiff_t>(layer.box.dom.size()));
    types.insert(types.begin() + static_cast<std::ptrdiff_t>(off), layer.box.cod.begin(),
                 layer.box.cod.end());
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    g.edges.push_back({wires[i].node, wires[i].port, 1, i, types[i]});
  }
  return g;
}

namespace {

struct Incidence {
  // edge index per (node, port)
  std::vector<std::vector<std::size_t>> in;
  std::vector<std::vector<std::size_t>> out;
};

Incidence incidence(const PortGraph& g) {
  Incidence inc;
  inc.in.resize(g.nodes.size());
  inc.out.resize(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    inc.in[i].assign(g.nodes[i].inputs, SIZE_MAX);
    inc.out[i].assign(g.nodes[i].outputs, SIZE_MAX);
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    inc.out[g.edges[e].src][g.edges[e].src_port] = e;
    inc.in[g.edges[e].dst][g.edges[e].dst_port] = e;
  }
  return inc;
}

bool is_bend(const PortGraph::Node& n) {
  return n.role == NodeRole::box && n.box->is_cup_or_cap();
}

}  // namespace

PortGraph contract_cups_caps(const PortGraph& g) {
  const Incidence inc = incidence(g);
  std::vector<std::size_t> renumber(g.nodes.size(), SIZE_MAX);
  PortGraph out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (is_bend(g.nodes[i])) continue;
    renumber[i] = out.nodes.size();
    out.nodes.push_back(g.nodes[i]);
  }
  std::vector<char> visited(g.nodes.size(), 0);
  for (const auto& start : g.edges) {
    if (is_bend(g.nodes[start.src])) continue;
    const PortGraph::Edge* current = &start;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > g.edges.size()) throw InvariantError("wire tracing does not terminate");
      const auto& target = g.nodes[current->dst];
      if (!is_bend(target)) {
        out.edges.push_back({renumber[start.src], start.src_port, renumber[current->dst],
                             current->dst_port, start.label});
        break;
      }
      // Only cups have inputs among the bends.
      visited[current->dst] = 1;
      const auto& partner = g.edges[inc.in[current->dst][1 - current->dst_port]];
      if (!is_bend(g.nodes[partner.src])) {
        throw DiagramError("a cup joins two source wires; boundary or boxes carry adjoints");
      }
      visited[partner.src] = 1;
      current = &g.edges[inc.out[partner.src][1 - partner.src_port]];
    }
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (is_bend(g.nodes[i]) && !visited[i]) throw DiagramError("non-removable loop");
  }
  return out;
}

namespace {

std::string encode_node(const PortGraph& g, const Incidence& inc, std::size_t node,
                        const std::vector<long>& id) {
  std::ostringstream os;
  const auto& n = g.nodes[node];
  switch (n.role) {
    case NodeRole::input_boundary:
      os << "IN";
      break;
    case NodeRole::output_boundary:
      os << "OUT";
      break;
    case NodeRole::box:
      os << "B" << static_cast<int>(n.box->kind) << ':' << n.box->name << ':'
         << format_objects(n.box->dom) << "->" << format_objects(n.box->cod);
      break;
  }
  os << '{';
  for (std::size_t p = 0; p < n.inputs; ++p) {
    const auto& e = g.edges[inc.in[node][p]];
    os << 'i' << id[e.src] << '.' << e.src_port << '.' << format_simple(e.label) << ';';
  }
  for (std::size_t p = 0; p < n.outputs; ++p) {
    const auto& e = g.edges[inc.out[node][p]];
    os << 'o' << id[e.dst] << '.' << e.dst_port << ';';
  }
  os << '}';
  return os.str();
}

// Numbers the nodes reachable from `roots` in breadth-first order following
// ports in order, and returns the encoding plus the visited nodes.
std::pair<std::string, std::vector<std::size_t>> encode_from(const PortGraph& g,
                                                             const Incidence& inc,
                                                             const std::vector<std::size_t>& roots) {
  std::vector<long> id(g.nodes.size(), -1);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue;
  auto visit = [&](std::size_t n) {
    if (id[n] >= 0) return;
    id[n] = static_cast<long>(order.size());
    order.push_back(n);
    queue.push_back(n);
  };
  for (auto r : roots) visit(r);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (auto e : inc.in[u]) visit(g.edges[e].src);
    for (auto e : inc.out[u]) visit(g.edges[e].dst);
  }
  std::string enc;
  for (auto n : order) enc += encode_node(g, inc, n, id);
  return {enc, order};
}

}  // namespace

std::string canonical_encoding(const PortGraph& g) {
  const Incidence inc = incidence(g);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    for (auto e : inc.in[i]) {
      if (e == SIZE_MAX) throw InvariantError("port graph has a dangling input port");
    }
    for (auto e : inc.out[i]) {
      if (e == SIZE_MAX) throw InvariantError("port graph has a dangling output port");
    }
  }
  auto [main, reached] = encode_from(g, inc, {0, 1});
  std::vector<char> seen(g.nodes.size(), 0);
  for (auto n : reached) seen[n] = 1;
  // Components detached from the boundary: minimal encoding over start nodes.
  std::vector<std::string> detached;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    if (seen[n]) continue;
    auto component = encode_from(g, inc, {n}).second;
    std::string best;
    for (auto start : component) {
      seen[start] = 1;
      auto enc = encode_from(g, inc, {start}).first;
      if (best.empty() || enc < best) best = std::move(enc);
    }
    detached.push_back(std::move(best));
  }
  std::sort(detached.begin(), detached.end());
  for (const auto& d : detached) main += "|" + d;
  return main;
}

// ---------------------------------------------------------------------------
// Layer rewriting

namespace {

struct Slot {
  Box box;
  std::size_t offset;
};

std::vector<Slot> slots_of(const Diagram& d) {
  std::vector<Slot> out;
  out.reserve(d.size());
  for (const auto& l : d.layers()) out.push_back({l.box, l.offset()});
  return out;
}

Diagram from_slots(const ObjectList& dom, const std::vector<Slot>& slots) {
  std::vector<std::pair<Box, std::size_t>> boxes;
  boxes.reserve(slots.size());
  for (const auto& s : slots) boxes.emplace_back(s.box, s.offset);
  return Diagram::from_offsets(dom, boxes);
}

// Swaps layers i and i+1 when the later box does not touch the earlier box's
// outputs. A later box with no inputs sitting exactly where an earlier box
// with no outputs was goes to the right of that box's inputs.
bool swap_adjacent(std::vector<Slot>& s, std::size_t i) {
  const Slot a = s[i];
  const Slot b = s[i + 1];
  const std::size_t a_dom = a.box.dom.size(), a_cod = a.box.cod.size();
  const std::size_t b_dom = b.box.dom.size(), b_cod = b.box.cod.size();
  if (b_dom == 0 && b_cod == 0) {
    // a scalar floats freely
    s[i] = {b.box, 0};
    s[i + 1] = a;
    return true;
  }
  if (b.offset >= a.offset + a_cod) {
    s[i] = {b.box, b.offset - a_cod + a_dom};
    s[i + 1] = a;
    return true;
  }
  if (b.offset + b_dom <= a.offset) {
    s[i] = b;
    s[i + 1] = {a.box, a.offset + b_cod - b_dom};
    return true;
  }
  return false;
}

void move_layer(std::vector<Slot>& s, std::size_t from, std::size_t to) {
  while (from > to) {
    if (!swap_adjacent(s, from - 1)) throw InvariantError("interchange of dependent layers");
    --from;
  }
  while (from < to) {
    if (!swap_adjacent(s, from)) throw InvariantError("interchange of dependent layers");
    ++from;
  }
}

struct WireEnd {
  std::size_t layer;  // == slots.size() when the wire reaches the cod
  std::size_t position;
  std::vector<std::size_t> left_obstruction;
  std::vector<std::size_t> right_obstruction;
};

// Follows the wire leaving layer i at `position` until some box consumes it.
WireEnd follow_wire(const std::vector<Slot>& s, std::size_t i, std::size_t position) {
  WireEnd end{s.size(), position, {}, {}};
  while (i + 1 < s.size()) {
    ++i;
    const auto& slot = s[i];
    const std::size_t dom = slot.box.dom.size();
    if (slot.offset <= position && position < slot.offset + dom) {
      end.layer = i;
      end.position = position;
      return end;
    }
    if (slot.offset <= position) {
      position = position - dom + slot.box.cod.size();
      end.left_obstruction.push_back(i);
    } else {
      end.right_obstruction.push_back(i);
    }
  }
  end.position = position;
  return end;
}

struct Snake {
  std::size_t cap;
  std::size_t cup;
  bool left;  // the cap's left leg enters the cup's right input
  WireEnd wire;
};

std::optional<Snake> find_snake(const std::vector<Slot>& s) {
  for (std::size_t c = 0; c < s.size(); ++c) {
    if (s[c].box.kind != BoxKind::cap) continue;
    for (bool left : {true, false}) {
      const std::size_t leg = s[c].offset + (left ? 0 : 1);
      WireEnd end = follow_wire(s, c, leg);
      if (end.layer == s.size() || s[end.layer].box.kind != BoxKind::cup) continue;
      const std::size_t cup_off = s[end.layer].offset;
      if (left ? cup_off + 1 != end.position : cup_off != end.position) continue;
      return Snake{c, end.layer, left, std::move(end)};
    }
  }
  return std::nullopt;
}

void yank(std::vector<Slot>& s, Snake snake) {
  std::size_t cap = snake.cap, cup = snake.cup;
  auto& lefts = snake.wire.left_obstruction;
  auto& rights = snake.wire.right_obstruction;
  if (snake.left) {
    // Boxes left of the wire cannot touch the cap: lift them above it.
    for (auto b : lefts) {
      move_layer(s, b, cap);
      for (auto& r : rights) {
        if (r < b) ++r;
      }
      ++cap;
    }
    for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
      move_layer(s, *it, cup);
      --cup;
    }
  } else {
    for (auto it = lefts.rbegin(); it != lefts.rend(); ++it) {
      move_layer(s, *it, cup);
      for (auto& r : rights) {
        if (r > *it) --r;
      }
      --cup;
    }
    for (auto b : rights) {
      move_layer(s, b, cap);
      ++cap;
    }
  }
  if (cup != cap + 1) throw InvariantError("snake did not become adjacent");
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(cap),
          s.begin() + static_cast<std::ptrdiff_t>(cup) + 1);
}

}  // namespace

namespace {

// Brings layer j to the front by interchanges, or returns nothing.
std::optional<std::vector<Slot>> to_front(std::vector<Slot> s, std::size_t j) {
  for (std::size_t t = j; t > 0; --t) {
    if (!swap_adjacent(s, t - 1)) return std::nullopt;
  }
  return s;
}

// With x at the front of `trial`, whether the box that started at index y
// (and could also reach the front) lies left of x's outputs.
bool left_of_front(const std::vector<Slot>& trial, std::size_t x, std::size_t y) {
  const Slot& front = trial.front();
  std::vector<Slot> rest(trial.begin() + 1, trial.end());
  const auto moved = to_front(std::move(rest), y < x ? y : y - 1);
  if (!moved) return false;
  const Slot& other = moved->front();
  return other.offset < front.offset + front.box.cod.size();
}

}  // namespace

Diagram normal_form(const Diagram& d) {
  std::vector<Slot> remaining = slots_of(d);
  for (auto& slot : remaining) {
    if (slot.box.dom.empty() && slot.box.cod.empty()) slot.offset = 0;
  }
  std::vector<Slot> result;
  result.reserve(remaining.size());
  while (!remaining.empty()) {
    // candidates reaching the front at the smallest offset
    std::vector<std::pair<std::size_t, std::vector<Slot>>> tied;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      auto trial = to_front(remaining, j);
      if (!trial) continue;
      if (!tied.empty() && trial->front().offset > tied.front().second.front().offset) continue;
      if (!tied.empty() && trial->front().offset < tied.front().second.front().offset) tied.clear();
      tied.emplace_back(j, std::move(*trial));
    }
    // Several boxes can open at the same place. Boxes without outputs go
    // first, smallest box first; otherwise take the leftmost.
    std::size_t pick = tied.size();
    for (std::size_t a = 0; a < tied.size(); ++a) {
      const Box& box = tied[a].second.front().box;
      if (box.cod.empty() && (pick == tied.size() || box < tied[pick].second.front().box)) pick = a;
    }
    for (std::size_t a = 0; a < tied.size() && pick == tied.size(); ++a) {
      bool leftmost = true;
      for (std::size_t b = 0; b < tied.size() && leftmost; ++b) {
        if (a != b && left_of_front(tied[a].second, tied[a].first, tied[b].first)) leftmost = false;
      }
      if (leftmost) pick = a;
    }
    if (pick == tied.size()) pick = 0;
    auto& chosen = tied[pick].second;
    result.push_back(chosen.front());
    chosen.erase(chosen.begin());
    remaining = std::move(chosen);
  }
  return from_slots(d.dom(), result);
}

Diagram snake_remove(const Diagram& d) {
  if (!adjoint_free(d.dom()) || !adjoint_free(d.cod())) {
    throw DiagramError("snake removal needs an adjoint-free boundary, got " +
                       format_objects(d.dom()) + " -> " + format_objects(d.cod()));
  }
  for (const auto& l : d.layers()) {
    if (!l.box.is_cup_or_cap() && (!adjoint_free(l.box.dom) || !adjoint_free(l.box.cod))) {
      throw DiagramError("snake removal needs adjoint-free boxes, " + l.box.label() + " is " +
                         format_objects(l.box.dom) + " -> " + format_objects(l.box.cod));
    }
  }
  const PortGraph expected = contract_cups_caps(port_graph(d));

  std::vector<Slot> slots = slots_of(d);
  while (auto snake = find_snake(slots)) yank(slots, std::move(*snake));
  for (const auto& s : slots) {
    if (s.box.is_cup_or_cap()) throw InvariantError("snake removal left " + s.box.label());
  }
  Diagram out = normal_form(from_slots(d.dom(), slots));
  if (canonical_encoding(port_graph(out)) != canonical_encoding(expected)) {
    throw InvariantError("snake removal changed the wiring");
  }
  return out;
}

bool diagram_eq(const Diagram& d1, const Diagram& d2) {
  if (d1.dom() != d2.dom() || d1.cod() != d2.cod()) return false;
  return canonical_encoding(port_graph(d1)) == canonical_encoding(port_graph(d2));
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string centered(const std::string& s, std::size_t width, char fill = ' ') {
  if (s.size() >= width) return s;
  const std::size_t pad = width - s.size();
  return std::string(pad / 2, fill) + s + std::string(pad - pad / 2, fill);
}

void rtrim_append(std::string& out, std::string line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out += line;
  out += '\n';
}

std::string box_glyph(const Box& box, std::size_t width) {
  switch (box.kind) {
    case BoxKind::word:
      return "\\" + centered(box.name, width - 2, '_') + "/";
    case BoxKind::generator:
      return "[" + centered(box.name, width - 2) + "]";
    case BoxKind::cup:
      return "\\" + std::string(width - 2, '_') + "/";
    case BoxKind::cap:
      return "/" + std::string(width - 2, '-') + "\\";
  }
  return {};
}

}  // namespace

std::string render_ascii(const Diagram& d) {
  std::size_t w = 3;
  auto widen_for = [&w](const ObjectList& objs) {
    for (const auto& o : objs) w = std::max(w, format_simple(o).size() + 2);
  };
  widen_for(d.dom());
  for (const auto& l : d.layers()) {
    widen_for(l.box.cod);
    const std::size_t span = std::max({l.box.dom.size(), l.box.cod.size(), std::size_t{1}});
    const std::size_t need = l.box.name.size() + 3;
    w = std::max(w, (need + span - 1) / span);
  }

  auto cut_line = [&](const ObjectList& objs) {
    std::string line;
    for (const auto& o : objs) line += centered(format_simple(o), w);
    return line;
  };
  auto wires = [&](std::size_t n) {
    std::string line;
    for (std::size_t i = 0; i < n; ++i) line += centered("|", w);
    return line;
  };

  std::string out;
  ObjectList current = d.dom();
  if (!current.empty()) rtrim_append(out, cut_line(current));
  if (d.empty() && !current.empty()) {
    rtrim_append(out, wires(current.size()));
    rtrim_append(out, cut_line(current));
  }
  for (const auto& l : d.layers()) {
    if (!current.empty()) rtrim_append(out, wires(current.size()));
    const std::size_t span = std::max({l.box.dom.size(), l.box.cod.size(), std::size_t{1}});
    rtrim_append(out, wires(l.left.size()) + box_glyph(l.box, span * w - 1) + " " +
                          wires(l.right.size()));
    current = concat(concat(l.left, l.box.cod), l.right);
    if (!current.empty()) rtrim_append(out, cut_line(current));
  }
  return out;
}

}  // namespace langgames
