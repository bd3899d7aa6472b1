#pragma once

// Models in finite relations: a set per basic type, a relation per
// dictionary entry, and diagram evaluation by layer-wise joins.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "langgames/diagram.hpp"
#include "langgames/factorize.hpp"
#include "langgames/grammar.hpp"

namespace langgames {

struct FiniteSet {
  std::string name;
  std::vector<std::string> elements;  // distinct, in a fixed order

  bool contains(const std::string& x) const;
  std::size_t size() const { return elements.size(); }
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

using Tuple = std::vector<std::string>;

struct Relation {
  std::vector<FiniteSet> dom_sets;
  std::vector<FiniteSet> cod_sets;
  std::set<std::pair<Tuple, Tuple>> tuples;

  bool empty() const { return tuples.empty(); }
  std::size_t size() const { return tuples.size(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// R then S, joining on R's cod and S's dom.
Relation compose(const Relation& r, const Relation& s);
/// Cartesian pairing.
Relation tensor(const Relation& r, const Relation& s);

struct RelModel {
  // Keyed by object name; windings are ignored on lookup.
  std::map<std::string, FiniteSet> objects;
  // Keyed by entry name (see entry_name) or signature box name. Each row
  // lists dom coordinates then cod coordinates; for dictionary entries that
  // is the order of the flattened type.
  std::map<std::string, std::set<Tuple>> relations;

  /// Throws InputError when there is no set for the object.
  const FiniteSet& set_of(const std::string& object) const;
};

struct Violation {
  enum class Kind { missing_object, duplicate_element, unknown_relation, arity, membership };
  Kind kind;
  std::string subject;  // object or relation name
  std::string message;
};

/// Every offence against the grammar: basic types without a set, duplicate
/// elements, relations that name no entry or comb box, rows of the wrong
/// length, coordinates outside their set.
std::vector<Violation> validate_model(const RelModel& m, const Grammar& g);

/// Relations for the signature boxes: first-order entries permuted from type
/// order to (box dom, box cod) order, comb boxes copied from the model.
RelModel generator_model(const RelModel& m, const Grammar& g, const MonoidalSignature& sig);

/// Layer-by-layer evaluation. Cups are equality, caps its converse. Word
/// boxes of words with several types are looked up through `g`.
Relation eval_diagram(const RelModel& m, const Diagram& d, const Grammar* g = nullptr);

/// Truth of the first parse to `target` (the sentence type by default); the
/// target set must be a singleton.
bool sentence_truth(const RelModel& m, const Grammar& g, const Words& words,
                    const std::string& target = {});

/// Elements of the answer relation 1 -> F(q) of the first parse to the
/// question type, in set order.
FiniteSet answers(const RelModel& m, const Grammar& g, const Words& question);

}  // namespace langgames
