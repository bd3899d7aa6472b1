#pragma once

// The monoidal signature of a grammar and the factorization of dictionary
// entries into signature boxes and caps. Parsed sentences are pushed through
// the factorization and snake-removed into cup-free diagrams.

#include <set>
#include <string>
#include <vector>

#include "langgames/comb.hpp"
#include "langgames/diagram.hpp"
#include "langgames/grammar.hpp"

namespace langgames {

struct MonoidalSignature {
  std::set<std::string> objects;
  // Dictionary order: words sorted, then type index; comb boxes in the
  // order the comb declares them.
  std::vector<SignatureBox> boxes;

  const SignatureBox* find(const std::string& name) const;
  bool covers(const Box& box) const;
};

/// One generator per first-order entry, inputs reverse(left args) followed by
/// reverse(right args); comb entries contribute their own boxes. Throws
/// InputError for an entry that is neither first-order nor a comb.
MonoidalSignature build_signature(const Grammar& g);

/// Diagram 1 -> t over the signature and caps, with cod exactly t.
Diagram factor_entry(const Grammar& g, const MonoidalSignature& sig, const std::string& word,
                     const PregroupType& t);

/// Parse diagram with every word replaced by its factorization, then snake
/// removed. The result is cup and cap free with cod the reduction's target.
Diagram apply_FG(const Grammar& g, const MonoidalSignature& sig, const Words& words,
                 const Reduction& r);

/// "name : dom -> cod", one line per box.
std::string format_signature(const MonoidalSignature& sig);

}  // namespace langgames
