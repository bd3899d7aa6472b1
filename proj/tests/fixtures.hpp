#pragma once

// Grammars shared by the unit and acceptance tests, built in code so they do
// not depend on the file loaders.

#include <string>

#include "langgames/comb.hpp"
#include "langgames/grammar.hpp"
#include "langgames/language_games.hpp"
#include "langgames/pregroup.hpp"
#include "langgames/rel_semantics.hpp"

namespace fixtures {

using langgames::Grammar;
using langgames::parse_type;

inline Grammar make_grammar(std::initializer_list<std::string> basic, std::string sentence,
                            std::initializer_list<std::pair<std::string, std::string>> entries) {
  Grammar g;
  g.basic_types = basic;
  g.sentence_type = std::move(sentence);
  for (const auto& [w, t] : entries) g.add_entry(w, parse_type(t));
  return g;
}

// "this sentence makes sense", with sentence : d^r n.
inline Grammar this_sentence() {
  return make_grammar({"d", "n", "s"}, "s",
                      {{"this", "d"}, {"sentence", "d^r n"}, {"makes", "n^r s n^l"}, {"sense", "n"}});
}

// bring / large / slabs.
inline Grammar master() {
  return make_grammar({"n", "s"}, "s", {{"bring", "s n^l"}, {"large", "n n^l"}, {"slabs", "n"}});
}

// "the person who explains knows the rules", with who : n^r n s^l n.
inline Grammar relative() {
  Grammar g = make_grammar({"d", "n", "s"}, "s",
                           {{"the", "d"},
                            {"person", "d^r n"},
                            {"who", "n^r n s^l n"},
                            {"explains", "n^r s"},
                            {"knows", "n^r s n^l"},
                            {"rules", "d^r n"}});
  g.add_comb(langgames::relative_pronoun_comb("who"));
  return g;
}

// "who invented truth tables".
inline Grammar who() {
  Grammar g = make_grammar({"n", "s", "q"}, "s",
                           {{"who", "q s^l n"},
                            {"invented", "n^r s n^l"},
                            {"truth", "n n^l"},
                            {"tables", "n"}});
  g.question_type = "q";
  g.add_comb(langgames::question_word_comb("who"));
  return g;
}

// F(d) = {t0}, F(n) = {x1, x2}, F(s) = {*}; the sentence is true.
inline langgames::RelModel sentence_model() {
  langgames::RelModel m;
  m.objects = {{"d", {"d", {"t0"}}}, {"n", {"n", {"x1", "x2"}}}, {"s", {"s", {"*"}}}};
  m.relations = {{"this", {{"t0"}}},
                 {"sentence", {{"t0", "x1"}}},
                 {"makes", {{"x1", "*", "x2"}}},
                 {"sense", {{"x2"}}}};
  return m;
}

// Teacher knowledge for the who-question game.
inline langgames::RelModel kt_model() {
  const std::vector<std::string> people{"Fela", "Wittgenstein", "Peirce"};
  langgames::RelModel m;
  m.objects = {{"n", {"n", people}}, {"q", {"q", people}}, {"s", {"s", {"*"}}}};
  for (const auto& x : people) m.relations["who"].insert({x, "*", x});
  m.relations["invented"] = {{"Wittgenstein", "*", "Fela"}, {"Peirce", "*", "Fela"}};
  m.relations["truth"] = {{"Fela", "Fela"}};
  m.relations["tables"] = {{"Fela"}};
  return m;
}

// Yes/no questions are declaratives judged true or false.
inline Grammar qa_grammar() {
  return make_grammar({"n", "s"}, "s",
                      {{"wittgenstein", "n"},
                       {"peirce", "n"},
                       {"fela", "n"},
                       {"invented", "n^r s n^l"},
                       {"truth", "n n^l"},
                       {"tables", "n"}});
}

// A student who believes exactly `inventors` invented truth tables.
inline langgames::RelModel student(const std::vector<std::string>& inventors) {
  langgames::RelModel m;
  m.objects = {{"n", {"n", {"W", "P", "F", "TT"}}}, {"s", {"s", {"*"}}}};
  m.relations = {{"wittgenstein", {{"W"}}},
                 {"peirce", {{"P"}}},
                 {"fela", {{"F"}}},
                 {"tables", {{"TT"}}},
                 {"truth", {{"TT", "TT"}}},
                 {"invented", {}}};
  for (const auto& x : inventors) m.relations["invented"].insert({x, "*", "TT"});
  return m;
}

inline langgames::QAInstance qa_instance(
    std::initializer_list<std::pair<std::string, bool>> items,
    std::initializer_list<std::vector<std::string>> students) {
  langgames::QAInstance inst;
  inst.grammar = qa_grammar();
  for (const auto& [q, a] : items) inst.corpus.push_back({langgames::split_words(q), a});
  for (const auto& s : students) inst.student_models.push_back(student(s));
  return inst;
}

// Each student is right on one question and wrong on the other.
inline langgames::QAInstance matching_pennies() {
  return qa_instance({{"wittgenstein invented truth tables", true},
                      {"peirce invented truth tables", true}},
                     {{"W"}, {"P"}});
}

// Nobody credits Fela.
inline langgames::QAInstance unanswerable() {
  return qa_instance({{"wittgenstein invented truth tables", true},
                      {"peirce invented truth tables", true},
                      {"fela invented truth tables", true}},
                     {{"W"}, {"P"}});
}

// The second student knows both inventors.
inline langgames::QAInstance perfect_student() {
  return qa_instance({{"wittgenstein invented truth tables", true},
                      {"peirce invented truth tables", true}},
                     {{"W"}, {"W", "P"}});
}

// bring on the first six noun phrases, four distinct actions.
inline langgames::ActionMap master_actions() {
  return {{"bring",
           {{"slabs", "carry_slab"},
            {"large slabs", "haul_large_slab"},
            {"large large slabs", "haul_large_slab"},
            {"large large large slabs", "use_crane"},
            {"large large large large slabs", "use_crane"},
            {"large large large large large slabs", "give_up"}}}};
}

}  // namespace fixtures
