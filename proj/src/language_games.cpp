#include "langgames/language_games.hpp"

#include <algorithm>
#include <memory>

#include "langgames/error.hpp"
#include "langgames/factorize.hpp"

namespace langgames {

Interface GameFunctor::image(const ObjectList& objects) const {
  Interface out;
  for (const auto& o : objects) {
    auto it = object_map.find(o.name);
    if (it == object_map.end() || !o.is_plain()) {
      throw GameError("game functor has no image for object " + format_simple(o));
    }
    out = tensor(out, it->second);
  }
  return out;
}

OpenGame apply_game_functor(const GameFunctor& j, const Diagram& d) {
  if (d.has_cups_or_caps()) throw GameError("game functor needs a cup-free diagram");
  OpenGame out = identity_game(j.image(d.dom()));
  for (const auto& layer : d.layers()) {
    auto it = j.box_map.find(layer.box.name);
    if (it == j.box_map.end()) throw GameError("game functor has no image for box " + layer.box.name);
    const OpenGame& box = it->second;
    const Interface dom = j.image(layer.box.dom);
    const Interface cod = j.image(layer.box.cod);
    if (!(box.dom == dom) || !(box.cod == cod)) {
      throw GameError("image of " + layer.box.name + " has interfaces " + to_string(box.dom) +
                      " -> " + to_string(box.cod) + ", expected " + to_string(dom) + " -> " +
                      to_string(cod));
    }
    OpenGame step = box;
    if (!layer.left.empty()) step = par(identity_game(j.image(layer.left)), step);
    if (!layer.right.empty()) step = par(step, identity_game(j.image(layer.right)));
    out = seq(out, step);
  }
  return out;
}

std::string surface_word(const std::string& box_name) {
  const auto hash = box_name.rfind('#');
  return hash == std::string::npos ? box_name : box_name.substr(0, hash);
}

OpenGame syntactic_box(const std::string& word, std::size_t left, Interface dom, Interface cod,
                       std::shared_ptr<const std::set<std::string>> allowed) {
  const std::size_t arity = dom.moves.size();
  auto play = [word, left, arity, allowed](const Value& x) {
    Words parts;
    const ValueList inputs = unpack(x, arity);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i == left) parts.push_back(word);
      parts.push_back(inputs[i].as_string());
    }
    if (inputs.size() == left) parts.push_back(word);
    const std::string phrase = join_words(parts);
    if (allowed && !allowed->count(phrase)) {
      throw GameError("play '" + phrase + "' escapes the enumerated move set; raise the length bound");
    }
    return Value(phrase);
  };
  return lift(std::move(dom), std::move(cod), play,
              [](const Value&, const Value&) { return Value(); });
}

namespace {

using PhraseSet = std::shared_ptr<const std::set<std::string>>;

std::vector<std::string> joined(const std::vector<Words>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(join_words(w));
  return out;
}

PhraseSet as_set(const std::vector<std::string>& xs) {
  return std::make_shared<const std::set<std::string>>(xs.begin(), xs.end());
}

Diagram first_factored(const Grammar& g, const MonoidalSignature& sig, const Words& words,
                       const std::string& target) {
  const auto parses = parse_sentence(g, words, target);
  if (parses.empty()) {
    throw UngrammaticalError("'" + join_words(words) + "' does not reduce to " + target);
  }
  return apply_FG(g, sig, words, parses.front());
}

// Number of left arguments for every first-order entry box.
std::map<std::string, std::size_t> left_arities(const Grammar& g) {
  std::map<std::string, std::size_t> out;
  for (const auto& [word, types] : g.dictionary) {
    for (std::size_t k = 0; k < types.size(); ++k) {
      if (g.comb_for(word, types[k])) continue;
      const Functionality f = is_functional(types[k]);
      if (f.shape) out[entry_name(g, word, k)] = f.shape->left_args.size();
    }
  }
  return out;
}

std::string syntactic_name(const std::string& object) { return "L(" + object + ")"; }

}  // namespace

OrderGame build_order_game(const Grammar& g, const Words& sentence, const ActionMap& actions,
                           std::size_t max_phrase_len) {
  const std::string& s = g.sentence_type;
  const std::string n = "n";
  if (!g.basic_types.count(n)) throw InputError("order games need the noun type 'n'");
  const MonoidalSignature sig = build_signature(g);
  const Diagram d = first_factored(g, sig, sentence, s);

  OrderGame out;
  out.phrases = joined(enumerate_language(g, n, max_phrase_len));
  out.orders = joined(enumerate_language(g, s, max_phrase_len + 1));
  std::set<std::string> action_set;
  for (const auto& [verb, table] : actions) {
    for (const auto& [phrase, act] : table) action_set.insert(act);
  }
  out.actions.assign(action_set.begin(), action_set.end());

  GameFunctor j;
  std::map<std::string, PhraseSet> phrase_sets;
  for (const auto& b : g.basic_types) {
    if (b == s) {
      j.object_map[b] = {{"O"}, {"A"}};
    } else if (b == n) {
      j.object_map[b] = {{"N"}, {}};
      phrase_sets[b] = as_set(out.phrases);
    } else {
      j.object_map[b] = {{syntactic_name(b)}, {}};
      phrase_sets[b] = as_set(joined(enumerate_language(g, b, max_phrase_len)));
    }
  }
  const PhraseSet orders = as_set(out.orders);

  const auto arities = left_arities(g);
  for (const auto& box : sig.boxes) {
    const Interface dom = j.image(box.dom);
    const Interface cod = j.image(box.cod);
    const std::string word = surface_word(box.name);
    auto left = arities.find(box.name);
    if (left == arities.end()) throw GameError("order games have no image for comb box " + box.name);
    if (box.cod != ObjectList{SimpleType{s}}) {
      j.box_map[box.name] = syntactic_box(word, left->second, dom, cod, phrase_sets.at(box.cod.at(0).name));
      continue;
    }
    // an order: the game lives here
    auto table = actions.find(word);
    if (table == actions.end()) {
      j.box_map[box.name] = syntactic_box(word, left->second, dom, cod, orders);
      continue;
    }
    for (const auto& phrase : out.phrases) {
      if (box.dom == ObjectList{SimpleType{n}} && !table->second.count(phrase)) {
        throw InputError("no action for '" + word + "' on the noun phrase '" + phrase + "'");
      }
    }
    OpenGame game = syntactic_box(word, left->second, dom, cod, orders);
    auto bring = std::make_shared<const std::map<std::string, std::string>>(table->second);
    const std::size_t arity = dom.moves.size();
    auto play = game.play;
    game.best = [play, bring, arity, word](const Value& sigma, const Value& x, const Continuation& k) {
      Words args;
      for (const auto& v : unpack(x, arity)) args.push_back(v.as_string());
      const std::string key = join_words(args);
      auto it = bring->find(key);
      if (it == bring->end()) throw GameError("no action for '" + word + "' on '" + key + "'");
      return k(play(sigma, x)) == Value(it->second);
    };
    j.box_map[box.name] = std::move(game);
  }

  out.game = apply_game_functor(j, d);
  out.game.play(out.game.strategies.front(), Value());
  return out;
}

bool order_equilibrium(const OpenGame& game, const Continuation& k) {
  if (!game.dom.is_unit() || game.cod.moves.size() != 1 || game.cod.utilities.size() != 1) {
    throw GameError("order game must go from the unit to one move set and one utility set, got " +
                    to_string(game.dom) + " -> " + to_string(game.cod));
  }
  if (game.strategies.size() != 1) throw GameError("order game must be strategically trivial");
  return game.best(game.strategies.front(), Value(), k);
}

QuestionGame build_question_game(const Grammar& g, const RelModel& teacher, const Words& question,
                                 std::size_t max_len) {
  if (!g.question_type) throw InputError("grammar declares no question type");
  const std::string& q = *g.question_type;
  const CombEntry* comb = nullptr;
  for (const auto& c : g.combs) {
    if (c.boxes.size() == 2 && c.boxes[0].dom.empty() && c.boxes[0].cod.size() == 2 &&
        c.boxes[1].dom.size() == 2 && c.boxes[1].cod == ObjectList{SimpleType{q}}) {
      comb = &c;
    }
  }
  if (!comb) throw InputError("grammar has no question word comb producing " + q);
  const std::string aux = comb->aux;
  const std::string noun = comb->boxes[0].cod[1].name;
  const std::string sent = comb->boxes[1].dom[1].name;

  const auto problems = validate_model(teacher, g);
  if (!problems.empty()) throw InputError("teacher model: " + problems.front().message);
  if (teacher.set_of(noun).elements != teacher.set_of(q).elements) {
    throw InputError("teacher model must give '" + noun + "' and '" + q + "' the same answer set");
  }

  const MonoidalSignature sig = build_signature(g);
  const Diagram d = first_factored(g, sig, question, q);

  QuestionGame out;
  out.questions = joined(enumerate_language(g, q, max_len));
  out.answer_set = teacher.set_of(q).elements;

  Grammar with_var = g;
  with_var.add_entry(kPlaceholder, PregroupType{SimpleType{noun}});

  GameFunctor j;
  std::map<std::string, PhraseSet> phrase_sets;
  for (const auto& b : g.basic_types) {
    if (b == q) {
      j.object_map[b] = {{"Q"}, {"A"}};
      continue;
    }
    j.object_map[b] = {{b == noun ? "N" : b == sent ? "S" : syntactic_name(b)}, {}};
    phrase_sets[b] = as_set(joined(enumerate_language(with_var, b, max_len)));
  }
  j.object_map[aux] = j.object_map.at(noun);

  const auto arities = left_arities(g);
  for (const auto& box : sig.boxes) {
    if (box.name == comb->boxes[0].name || box.name == comb->boxes[1].name) continue;
    auto left = arities.find(box.name);
    if (left == arities.end() || box.cod.size() != 1) {
      throw GameError("question games have no image for box " + box.name);
    }
    j.box_map[box.name] = syntactic_box(surface_word(box.name), left->second, j.image(box.dom),
                                        j.image(box.cod), phrase_sets.at(box.cod[0].name));
  }

  j.box_map[comb->boxes[0].name] =
      lift(Interface::unit(), j.image(comb->boxes[0].cod),
           [](const Value&) { return Value::list({kPlaceholder, kPlaceholder}); },
           [](const Value&, const Value&) { return Value(); });

  // correct answers per enumerated question, fixed up front
  auto correct = std::make_shared<std::map<std::string, std::set<std::string>>>();
  for (const auto& text : out.questions) {
    const auto a = answers(teacher, g, split_words(text));
    (*correct)[text] = {a.elements.begin(), a.elements.end()};
  }
  const std::string qword = comb->word;
  auto ask = [qword, correct](const Value& x) {
    const auto parts = unpack(x, 2);
    Words words = split_words(parts[1].as_string());
    for (auto& w : words) {
      if (w == parts[0].as_string()) w = qword;
    }
    const std::string text = join_words(words);
    if (!correct->count(text)) {
      throw GameError("question '" + text + "' escapes the enumerated move set; raise the length bound");
    }
    return Value(text);
  };
  OpenGame who2 = lift(j.image(comb->boxes[1].dom), j.image(comb->boxes[1].cod), ask,
                       [](const Value&, const Value&) { return Value(); });
  who2.best = [ask, correct](const Value&, const Value& x, const Continuation& k) {
    const std::string text = ask(x).as_string();
    const Value a = k(Value(text));
    return a.is_string() && correct->at(text).count(a.as_string()) > 0;
  };
  j.box_map[comb->boxes[1].name] = std::move(who2);

  out.game = apply_game_functor(j, d);
  out.game.play(out.game.strategies.front(), Value());
  return out;
}

void QAInstance::validate() const {
  grammar.validate();
  if (corpus.empty()) throw InputError("corpus is empty");
  if (student_models.empty()) throw InputError("no student models");
  if (!model_names.empty() && model_names.size() != student_models.size()) {
    throw InputError("model names do not match the models");
  }
  const std::string& z = grammar.yes_no_type();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!recognizes(grammar, corpus[i].question, z)) {
      throw UngrammaticalError("corpus item " + std::to_string(i) + " '" +
                               join_words(corpus[i].question) + "' does not reduce to " + z);
    }
  }
  for (std::size_t m = 0; m < student_models.size(); ++m) {
    const auto problems = validate_model(student_models[m], grammar);
    if (!problems.empty()) throw InputError("model " + model_name(m) + ": " + problems.front().message);
    if (student_models[m].set_of(z).size() != 1) {
      throw InputError("model " + model_name(m) + " must map '" + z + "' to a singleton");
    }
  }
}

std::string QAInstance::model_name(std::size_t i) const {
  return i < model_names.size() ? model_names[i] : "model" + std::to_string(i);
}

std::vector<std::vector<bool>> student_answers(const QAInstance& inst) {
  const std::string& z = inst.grammar.yes_no_type();
  std::vector<std::vector<bool>> out;
  for (const auto& m : inst.student_models) {
    out.emplace_back();
    for (const auto& item : inst.corpus) {
      out.back().push_back(sentence_truth(m, inst.grammar, item.question, z));
    }
  }
  return out;
}

OpenGame qa_marker() {
  return lift({{"A", "A"}, {"U", "U"}}, Interface::unit(), [](const Value&) { return Value(); },
              [](const Value& a, const Value&) {
                const bool agree = a.as_list().at(0) == a.as_list().at(1);
                return Value::list({Value(agree), Value(!agree)});
              });
}

OpenGame build_qa_game(const std::vector<bool>& corpus_answers,
                       const std::vector<std::string>& questions,
                       const std::vector<std::vector<bool>>& model_answers) {
  return seq(qa_arena(corpus_answers, questions, model_answers), qa_marker());
}

OpenGame qa_arena(const std::vector<bool>& corpus_answers, const std::vector<std::string>& questions,
                  const std::vector<std::vector<bool>>& model_answers) {
  if (questions.size() != corpus_answers.size()) throw GameError("one question text per corpus item");
  ValueList items;
  for (std::size_t i = 0; i < corpus_answers.size(); ++i) {
    items.push_back(Value::list({Value(questions[i]), Value(static_cast<bool>(corpus_answers[i]))}));
  }
  const Value c(items);
  const OpenGame corpus = lift(Interface::unit(), {{"C"}, {}}, [c](const Value&) { return c; },
                               [](const Value&, const Value&) { return Value(); });

  std::vector<PlayerStrategy> picks;
  for (std::size_t i = 0; i < items.size(); ++i) {
    picks.push_back({Value(i), [i](const Value& list) { return list.as_list().at(i); }});
  }
  const OpenGame teacher = utility_player({"C"}, {"Q", "A"}, {"U"}, std::move(picks));

  // answer per (model, question text)
  auto table = std::make_shared<std::vector<std::map<std::string, bool>>>();
  for (const auto& row : model_answers) {
    table->emplace_back();
    if (row.size() != questions.size()) throw GameError("one answer per corpus item");
    for (std::size_t i = 0; i < row.size(); ++i) {
      auto [it, fresh] = table->back().emplace(questions[i], row[i]);
      if (!fresh && it->second != row[i]) {
        throw GameError("a model answers '" + questions[i] + "' in two ways");
      }
    }
  }
  std::vector<PlayerStrategy> models;
  for (std::size_t m = 0; m < model_answers.size(); ++m) {
    models.push_back({Value(m), [table, m](const Value& q) {
                        return Value(table->at(m).at(q.as_string()));
                      }});
  }
  const OpenGame student = utility_player({"Q"}, {"A"}, {"U"}, std::move(models));

  return seq(seq(corpus, teacher), par(student, identity_game({{"A"}, {"U"}})));
}

namespace {

std::vector<Profile> to_profiles(const std::vector<Value>& eq) {
  std::vector<Profile> out;
  for (const auto& p : eq) {
    const auto& l = p.as_list();
    out.emplace_back(static_cast<std::size_t>(l.at(0).as_int()),
                     static_cast<std::size_t>(l.at(1).as_int()));
  }
  return out;
}

}  // namespace

OpenGame build_qa_game(const QAInstance& inst) {
  inst.validate();
  std::vector<bool> truth;
  std::vector<std::string> questions;
  for (const auto& item : inst.corpus) {
    truth.push_back(item.answer);
    questions.push_back(join_words(item.question));
  }
  return build_qa_game(truth, questions, student_answers(inst));
}

std::vector<Profile> qa_equilibria(const QAInstance& inst) {
  return to_profiles(equilibria(build_qa_game(inst)));
}

std::vector<Profile> qa_equilibria(const OpenGame& qa) { return to_profiles(equilibria(qa)); }

std::vector<Profile> qa_equilibria_direct(const std::vector<bool>& corpus_answers,
                                          const std::vector<std::vector<bool>>& model_answers) {
  const std::size_t n = corpus_answers.size();
  const std::size_t models = model_answers.size();
  std::vector<Profile> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 0; s < models; ++s) {
      bool teacher_best = true;
      const bool mine = corpus_answers[j] != model_answers[s][j];
      for (std::size_t i = 0; i < n; ++i) {
        if ((corpus_answers[i] != model_answers[s][i]) > mine) teacher_best = false;
      }
      bool student_best = true;
      const bool theirs = corpus_answers[j] == model_answers[s][j];
      for (std::size_t t = 0; t < models; ++t) {
        if ((corpus_answers[j] == model_answers[t][j]) > theirs) student_best = false;
      }
      if (teacher_best && student_best) out.emplace_back(j, s);
    }
  }
  return out;
}

std::vector<Profile> qa_equilibria_direct(const QAInstance& inst) {
  inst.validate();
  std::vector<bool> truth;
  for (const auto& item : inst.corpus) truth.push_back(item.answer);
  return qa_equilibria_direct(truth, student_answers(inst));
}

QAOutcome classify_qa(const std::vector<bool>& corpus_answers,
                      const std::vector<std::vector<bool>>& model_answers) {
  QAOutcome out;
  out.equilibria = qa_equilibria_direct(corpus_answers, model_answers);
  for (std::size_t i = 0; i < corpus_answers.size() && !out.question; ++i) {
    const bool unanswerable = std::all_of(model_answers.begin(), model_answers.end(),
                                          [&](const auto& row) { return row[i] != corpus_answers[i]; });
    if (unanswerable) out.question = i;
  }
  for (std::size_t s = 0; s < model_answers.size() && !out.model; ++s) {
    if (model_answers[s] == corpus_answers) out.model = s;
  }
  out.kind = out.question ? QAOutcome::Case::unanswerable_question
             : out.model  ? QAOutcome::Case::perfect_student
                          : QAOutcome::Case::no_equilibrium;
  return out;
}

QAOutcome classify_qa(const QAInstance& inst) {
  inst.validate();
  std::vector<bool> truth;
  for (const auto& item : inst.corpus) truth.push_back(item.answer);
  QAOutcome out = classify_qa(truth, student_answers(inst));
  out.equilibria = qa_equilibria(inst);
  return out;
}

std::string case_name(QAOutcome::Case c) {
  switch (c) {
    case QAOutcome::Case::unanswerable_question:
      return "UnanswerableQuestion";
    case QAOutcome::Case::perfect_student:
      return "PerfectStudent";
    case QAOutcome::Case::no_equilibrium:
      return "NoEquilibrium";
  }
  return "";
}

}  // namespace langgames
