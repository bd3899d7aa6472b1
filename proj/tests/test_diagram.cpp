#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "langgames/diagram.hpp"
#include "langgames/error.hpp"
#include "langgames/grammar.hpp"
#include "random_diagrams.hpp"

using namespace langgames;

namespace {

const SimpleType n{"n"}, s{"s"};

std::map<std::string, int> box_multiset(const Diagram& d) {
  std::map<std::string, int> out;
  for (const auto& l : d.layers()) {
    if (!l.box.is_cup_or_cap()) ++out[l.box.label()];
  }
  return out;
}

Diagram sentence_parse() {
  const auto g = fixtures::this_sentence();
  const Words w = split_words("this sentence makes sense");
  return parse_diagram(w, parse_sentence(g, w, "s").at(0));
}

}  // namespace

TEST_CASE("compose_seq and compose_par boundaries") {
  const Diagram slabs = Diagram::from_box(Box::generator("slabs", {}, {n}));
  const Diagram large = Diagram::from_box(Box::generator("large", {n}, {n}));
  const Diagram both = compose_seq(slabs, large);
  CHECK(both.size() == 2);
  CHECK(both.dom().empty());
  CHECK(both.cod() == ObjectList{n});
  CHECK(compose_seq(Diagram::identity({}), slabs) == slabs);
  CHECK(compose_seq(slabs, Diagram::identity({n})) == slabs);

  const Diagram keep = Diagram::from_box(Box::generator("keep", {s}, {s}));
  CHECK_THROWS_AS(compose_seq(slabs, keep), DiagramError);
  CHECK_THROWS_WITH(compose_seq(slabs, keep), doctest::Contains("n"));

  CHECK(compose_par(Diagram(), slabs) == slabs);
  const Diagram caps = compose_par(Diagram::from_box(Box::cap(n.right())),
                                   Diagram::from_box(Box::cap(n.right())));
  CHECK(caps.cod() == ObjectList{n.right(), n, n.right(), n});
}

TEST_CASE("diagram constructor rejects bad chaining") {
  CHECK_THROWS_AS(Diagram({n}, {s}, {}), DiagramError);
  CHECK_THROWS_AS(Diagram::from_offsets({n}, {{Box::generator("f", {s}, {s}), 0}}), DiagramError);
  CHECK_THROWS_AS(Diagram::from_offsets({n}, {{Box::generator("f", {n}, {s}), 1}}), DiagramError);
  CHECK_THROWS_AS(Box::generator("bad", {n.left()}, {}), DiagramError);
}

TEST_CASE("port graph basics") {
  const auto id = port_graph(Diagram::identity({n}));
  REQUIRE(id.edges.size() == 1);
  CHECK(id.edges[0].src == 0);
  CHECK(id.edges[0].dst == 1);
  CHECK(id.edges[0].label == n);

  const auto g = port_graph(sentence_parse());
  std::size_t words = 0, cups = 0, into_s = 0;
  for (const auto& node : g.nodes) {
    if (!node.box) continue;
    words += node.box->kind == BoxKind::word;
    cups += node.box->kind == BoxKind::cup;
  }
  for (const auto& e : g.edges) into_s += e.dst == 1;
  CHECK(words == 4);
  CHECK(cups == 3);
  CHECK(into_s == 1);
}

TEST_CASE("edge count is half the port count on random diagrams") {
  std::mt19937 rng(3);
  int counter = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Diagram d = gen::random_cup_free(rng, gen::random_objects(rng, 3), gen::pick(rng, 6), counter);
    for (std::size_t k = gen::pick(rng, 3); k > 0; --k) d = gen::add_snake(rng, d);
    const auto g = port_graph(d);
    CHECK(2 * g.edges.size() == g.port_count());
  }
}

TEST_CASE("snake equations") {
  const Diagram left = Diagram::from_offsets({n}, {{Box::cap(n), 0}, {Box::cup(n.left()), 1}});
  const Diagram right =
      Diagram::from_offsets({n}, {{Box::cap(n.right()), 1}, {Box::cup(n), 0}});
  CHECK(snake_remove(left) == Diagram::identity({n}));
  CHECK(snake_remove(right) == Diagram::identity({n}));
  CHECK_FALSE(diagram_eq(left, Diagram::identity({n})));
}

TEST_CASE("snake removal rejects adjoint boundaries") {
  const Diagram d = Diagram::from_box(Box::cap(n));
  CHECK_THROWS_AS(snake_remove(d), DiagramError);
}

TEST_CASE("snake removal on random zig-zagged diagrams") {
  std::mt19937 rng(5);
  int counter = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Diagram base =
        gen::random_cup_free(rng, gen::random_objects(rng, 3), gen::pick(rng, 6), counter);
    Diagram d = base;
    for (std::size_t k = 1 + gen::pick(rng, 3); k > 0; --k) d = gen::add_snake(rng, d);
    d = gen::shuffle(rng, d, 20);
    const Diagram out = snake_remove(d);
    CHECK_FALSE(out.has_cups_or_caps());
    CHECK(out.dom() == base.dom());
    CHECK(out.cod() == base.cod());
    CHECK(box_multiset(out) == box_multiset(base));
    CHECK(diagram_eq(out, base));
    CHECK(diagram_eq(snake_remove(out), out));
    CHECK(snake_remove(out) == out);
  }
}

TEST_CASE("cup-free diagrams survive snake removal") {
  std::mt19937 rng(9);
  int counter = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram d =
        gen::random_cup_free(rng, gen::random_objects(rng, 3), gen::pick(rng, 6), counter);
    CHECK(canonical_encoding(port_graph(snake_remove(d))) == canonical_encoding(port_graph(d)));
  }
}

TEST_CASE("diagram_eq respects interchange and connectivity") {
  const Box slabs = Box::generator("slabs", {}, {n});
  const Box large = Box::generator("large", {n}, {n});
  const Box bring = Box::generator("bring", {n}, {s});
  const Box other = Box::generator("other", {}, {n});

  const Diagram a = Diagram::from_offsets({}, {{slabs, 0}, {other, 1}});
  const Diagram b = Diagram::from_offsets({}, {{other, 0}, {slabs, 0}});
  CHECK(diagram_eq(a, b));
  CHECK_FALSE(a == b);

  const Diagram chain = Diagram::from_offsets({}, {{slabs, 0}, {large, 0}, {bring, 0}});
  CHECK_FALSE(diagram_eq(chain, Diagram::from_offsets({}, {{slabs, 0}, {bring, 0}})));
  CHECK(diagram_eq(chain, chain));
}

TEST_CASE("diagram_eq is invariant under random interchange") {
  std::mt19937 rng(21);
  int counter = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram d =
        gen::random_cup_free(rng, gen::random_objects(rng, 3), 1 + gen::pick(rng, 6), counter);
    const Diagram e = gen::shuffle(rng, d, 30);
    CHECK(diagram_eq(d, e));
    CHECK(diagram_eq(e, d));
    CHECK(diagram_eq(normal_form(d), e));
    CHECK(normal_form(normal_form(d)) == normal_form(d));
    CHECK(normal_form(normal_form(e)) == normal_form(e));
    // a fresh box name changes the graph
    if (!d.empty()) {
      auto layers = d.layers();
      layers[0].box.name += "'";
      CHECK_FALSE(diagram_eq(d, Diagram(d.dom(), d.cod(), layers)));
    }
  }
}

TEST_CASE("category and monoidal laws up to diagram_eq") {
  std::mt19937 rng(33);
  int counter = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const ObjectList x0 = gen::random_objects(rng, 2);
    const Diagram a = gen::random_cup_free(rng, x0, gen::pick(rng, 3), counter);
    const Diagram c = gen::random_cup_free(rng, a.cod(), gen::pick(rng, 3), counter);
    const Diagram e = gen::random_cup_free(rng, c.cod(), gen::pick(rng, 3), counter);
    const ObjectList y0 = gen::random_objects(rng, 2);
    const Diagram b = gen::random_cup_free(rng, y0, gen::pick(rng, 3), counter);
    const Diagram dd = gen::random_cup_free(rng, b.cod(), gen::pick(rng, 3), counter);

    CHECK(diagram_eq(compose_seq(compose_seq(a, c), e), compose_seq(a, compose_seq(c, e))));
    CHECK(diagram_eq(compose_seq(Diagram::identity(a.dom()), a), a));
    CHECK(diagram_eq(compose_par(compose_par(a, b), c), compose_par(a, compose_par(b, c))));
    CHECK(diagram_eq(compose_par(a, Diagram()), a));
    // interchange
    CHECK(diagram_eq(compose_seq(compose_par(a, b), compose_par(c, dd)),
                     compose_par(compose_seq(a, c), compose_seq(b, dd))));
    CHECK(canonical_encoding(port_graph(compose_seq(compose_par(a, b), compose_par(c, dd)))) ==
          canonical_encoding(port_graph(compose_par(compose_seq(a, c), compose_seq(b, dd)))));
  }
}

TEST_CASE("render_ascii") {
  CHECK(render_ascii(Diagram::identity({n})) == " n\n |\n n\n");
  const std::string once = render_ascii(sentence_parse());
  CHECK(once == render_ascii(sentence_parse()));
  CHECK(once.find("this") != std::string::npos);
  CHECK(std::count(once.begin(), once.end(), '\n') > 4);
}
