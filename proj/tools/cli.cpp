#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "langgames/error.hpp"
#include "langgames/factorize.hpp"
#include "langgames/io.hpp"
#include "langgames/language_games.hpp"
#include "langgames/open_games.hpp"
#include "langgames/rel_semantics.hpp"

namespace langgames {

namespace {

struct Options {
  std::string grammar, model, models, corpus, actions, continuation, bimatrix, target, format = "text";
  std::string sentence;
  std::size_t max_len = 0;
  bool all_parses = false;
};

void indent(std::ostream& out, const std::string& block) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) out << "  " << line << "\n";
}

std::string links_text(const Reduction& r) {
  std::string s;
  for (const auto& [i, j] : r.links) {
    s += (s.empty() ? "" : " ") + ("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  return s.empty() ? "(none)" : s;
}

std::string types_text(const Words& w, const Reduction& r) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += (i ? " | " : "") + w[i] + " : " + format_type(r.word_types[i]);
  }
  return s;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing ") + flag);
}

Words sentence_of(const Options& o) {
  const Words w = sentence_words(o.sentence);
  if (w.empty()) throw InputError("missing sentence");
  return w;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::vector<Reduction> parses_or_fail(const Grammar& g, const Words& w, const std::string& target) {
  auto parses = parse_sentence(g, w, target);
  if (parses.empty()) {
    throw UngrammaticalError("'" + join_words(w) + "' does not reduce to " + target);
  }
  return parses;
}

int cmd_parse(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  const Grammar g = load_grammar(o.grammar);
  const std::string target = o.target.empty() ? g.sentence_type : o.target;
  const Words w = sentence_of(o);
  const auto parses = parses_or_fail(g, w, target);
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : parses) list.push_back(reduction_to_json(r));
    print_json(out, {{"sentence", join_words(w)}, {"target", target}, {"parses", list}});
    return kExitOk;
  }
  out << "sentence: " << join_words(w) << "\n";
  out << "target: " << target << "\n";
  out << "parses: " << parses.size() << "\n";
  for (std::size_t k = 0; k < parses.size(); ++k) {
    const auto& r = parses[k];
    out << "parse " << k + 1 << "\n";
    out << "  types: " << types_text(w, r) << "\n";
    out << "  links: " << links_text(r) << "\n";
    out << "  remainder: " << r.remainder.at(0) + 1 << "\n";
    indent(out, render_ascii(parse_diagram(w, r)));
  }
  return kExitOk;
}

int cmd_factor(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  const Grammar g = load_grammar(o.grammar);
  const MonoidalSignature sig = build_signature(g);
  if (o.sentence.empty()) {
    if (o.format == "json") {
      json boxes = json::array();
      for (const auto& b : sig.boxes) boxes.push_back({{"name", b.name}, {"dom", format_objects(b.dom)}, {"cod", format_objects(b.cod)}});
      print_json(out, {{"signature", boxes}});
    } else {
      out << format_signature(sig);
    }
    return kExitOk;
  }
  const std::string target = o.target.empty() ? g.sentence_type : o.target;
  const Words w = sentence_of(o);
  const auto parses = parses_or_fail(g, w, target);
  const Diagram d = apply_FG(g, sig, w, parses.front());
  if (o.format == "json") {
    print_json(out, {{"sentence", join_words(w)}, {"target", target}, {"diagram", diagram_to_json(d)}});
  } else {
    out << render_ascii(d);
  }
  return kExitOk;
}

RelModel checked_model(const std::string& path, const Grammar& g) {
  RelModel m = load_model(path);
  const auto problems = validate_model(m, g);
  if (!problems.empty()) {
    std::string msg = path + ": model does not fit the grammar";
    for (const auto& p : problems) msg += "\n  " + p.message;
    throw InputError(msg);
  }
  return m;
}

std::string tuple_text(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i];
  return s + ")";
}

int cmd_eval(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  require(o.model, "--model");
  const Grammar g = load_grammar(o.grammar);
  const RelModel m = checked_model(o.model, g);
  const std::string target = o.target.empty() ? g.sentence_type : o.target;
  const Words w = sentence_of(o);
  auto parses = parses_or_fail(g, w, target);
  if (!o.all_parses) parses.resize(1);
  const bool truth = m.set_of(target).size() == 1;
  json results = json::array();
  for (std::size_t k = 0; k < parses.size(); ++k) {
    const Relation r = eval_diagram(m, parse_diagram(w, parses[k]), &g);
    json rows = json::array();
    for (const auto& [x, y] : r.tuples) rows.push_back(y);
    json entry = {{"parse", k + 1}, {"links", reduction_to_json(parses[k])["links"]}, {"rows", rows}};
    if (truth) entry["truth"] = !r.empty();
    results.push_back(entry);
    if (o.format == "json") continue;
    const std::string prefix = o.all_parses ? "parse " + std::to_string(k + 1) + ": " : "";
    if (truth) {
      out << prefix << (r.empty() ? "false" : "true") << "\n";
    } else {
      out << prefix << "relation 1 -> " << target << " (" << r.size() << " rows)\n";
      for (const auto& [x, y] : r.tuples) out << "  " << tuple_text(y) << "\n";
    }
  }
  if (o.format == "json") print_json(out, {{"sentence", join_words(w)}, {"target", target}, {"results", results}});
  return kExitOk;
}

int cmd_answers(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  require(o.model, "--model");
  const Grammar g = load_grammar(o.grammar);
  const RelModel m = checked_model(o.model, g);
  const Words w = sentence_of(o);
  const FiniteSet a = answers(m, g, w);
  if (o.format == "json") {
    print_json(out, {{"question", join_words(w)}, {"answers", a.elements}});
    return kExitOk;
  }
  std::string s;
  for (const auto& e : a.elements) s += (s.empty() ? "" : ", ") + e;
  out << "answers: " << (s.empty() ? "(none)" : s) << "\n";
  return kExitOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  require(o.actions, "--actions");
  require(o.continuation, "--continuation");
  const Grammar g = load_grammar(o.grammar);
  const ActionMap actions = actions_from_json(read_json(o.actions));
  const auto k = continuation_from_json(read_json(o.continuation));
  const Words w = sentence_of(o);
  const std::size_t bound = o.max_len ? o.max_len : std::max<std::size_t>(w.size(), 2) - 1;
  const OrderGame game = build_order_game(g, w, actions, bound);
  for (const auto& order : game.orders) {
    if (!k.count(order)) throw InputError("continuation has no action for the order '" + order + "'");
  }
  const bool eq = order_equilibrium(game.game, [&k](const Value& order) {
    return Value(k.at(order.as_string()));
  });
  const std::string played = game.game.play(Value(), Value()).as_string();
  if (o.format == "json") {
    print_json(out, {{"order", played}, {"orders", game.orders}, {"actions", game.actions}, {"equilibrium", eq}});
  } else {
    out << "order: " << played << "\n";
    out << "orders: " << game.orders.size() << "\n";
    out << "equilibrium: " << (eq ? "true" : "false") << "\n";
  }
  return kExitOk;
}

std::string profiles_text(const std::vector<Profile>& eq, const std::vector<std::string>& second) {
  if (eq.empty()) return "(none)";
  std::string s;
  for (const auto& [i, j] : eq) {
    s += (s.empty() ? "" : ", ") + ("(" + std::to_string(i) + ", " + second.at(j) + ")");
  }
  return s;
}

int cmd_qa(const Options& o, std::ostream& out) {
  require(o.grammar, "--grammar");
  require(o.corpus, "--corpus");
  require(o.models, "--models");
  QAInstance inst;
  inst.grammar = load_grammar(o.grammar);
  inst.corpus = load_corpus(o.corpus);
  for (auto& nm : load_model_dir(o.models)) {
    inst.model_names.push_back(nm.name);
    inst.student_models.push_back(std::move(nm.model));
  }
  const QAOutcome outcome = classify_qa(inst);
  if (outcome.equilibria != qa_equilibria_direct(inst)) {
    throw InvariantError("composite equilibria differ from the direct formula");
  }
  if (o.format == "json") {
    json eq = json::array();
    for (const auto& [i, j] : outcome.equilibria) eq.push_back({{"item", i}, {"model", inst.model_names[j]}});
    json j = {{"items", inst.corpus.size()}, {"models", inst.model_names}, {"equilibria", eq},
              {"classification", case_name(outcome.kind)}};
    if (outcome.question) j["unanswerable_item"] = *outcome.question;
    if (outcome.model) j["perfect_model"] = inst.model_names[*outcome.model];
    print_json(out, j);
    return kExitOk;
  }
  out << "items: " << inst.corpus.size() << "\n";
  for (std::size_t i = 0; i < inst.corpus.size(); ++i) {
    out << "  " << i << ": " << join_words(inst.corpus[i].question) << " -> "
        << (inst.corpus[i].answer ? "true" : "false") << "\n";
  }
  std::string names;
  for (const auto& n : inst.model_names) names += (names.empty() ? "" : ", ") + n;
  out << "models: " << names << "\n";
  out << "equilibria: " << profiles_text(outcome.equilibria, inst.model_names) << "\n";
  out << "classification: " << case_name(outcome.kind);
  if (outcome.question) out << " (item " << *outcome.question << ")";
  if (outcome.kind == QAOutcome::Case::perfect_student) out << " (model " << inst.model_names[*outcome.model] << ")";
  out << "\n";
  if (outcome.question && outcome.model) out << "perfect student: " << inst.model_names[*outcome.model] << "\n";
  return kExitOk;
}

int cmd_nash(const Options& o, std::ostream& out) {
  require(o.bimatrix, "--bimatrix");
  const Bimatrix b = load_bimatrix(o.bimatrix);
  const OpenGame game = bimatrix_to_game(b.p1, b.p2);
  std::vector<Profile> eq;
  for (const auto& p : equilibria(game)) {
    eq.emplace_back(static_cast<std::size_t>(p.as_list().at(0).as_int()),
                    static_cast<std::size_t>(p.as_list().at(1).as_int()));
  }
  if (o.format == "json") {
    json list = json::array();
    for (const auto& [i, j] : eq) list.push_back({i, j});
    print_json(out, {{"rows", b.p1.size()}, {"cols", b.p1[0].size()}, {"equilibria", list}});
    return kExitOk;
  }
  std::vector<std::string> cols;
  for (std::size_t j = 0; j < b.p1[0].size(); ++j) cols.push_back(std::to_string(j));
  out << "game: " << b.p1.size() << " x " << cols.size() << "\n";
  out << "equilibria: " << profiles_text(eq, cols) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pregroup grammars, string diagrams and language games", "langgames"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* parse = app.add_subcommand("parse", "Parse a sentence and draw its reductions");
  parse->add_option("--grammar", o.grammar, "Grammar file")->required();
  parse->add_option("--target", o.target, "Target basic type (default: the sentence type)");
  parse->add_option("sentence", o.sentence, "Sentence")->required();
  add_format(parse);

  auto* factor = app.add_subcommand("factor", "List the monoidal signature, or factor a sentence");
  factor->add_option("--grammar", o.grammar, "Grammar file")->required();
  factor->add_option("--target", o.target, "Target basic type");
  factor->add_option("sentence", o.sentence, "Sentence");
  add_format(factor);

  auto* eval = app.add_subcommand("eval", "Evaluate a sentence in a relational model");
  eval->add_option("--grammar", o.grammar, "Grammar file")->required();
  eval->add_option("--model", o.model, "Model file")->required();
  eval->add_option("--target", o.target, "Target basic type");
  eval->add_flag("--all-parses", o.all_parses, "Report every parse");
  eval->add_option("sentence", o.sentence, "Sentence")->required();
  add_format(eval);

  auto* ans = app.add_subcommand("answers", "Answer a question in a relational model");
  ans->add_option("--grammar", o.grammar, "Grammar file")->required();
  ans->add_option("--model", o.model, "Model file")->required();
  ans->add_option("question", o.sentence, "Question")->required();
  add_format(ans);

  auto* order = app.add_subcommand("order", "Equilibrium of an order against a continuation");
  order->add_option("--grammar", o.grammar, "Grammar file")->required();
  order->add_option("--actions", o.actions, "Actions file")->required();
  order->add_option("--continuation", o.continuation, "Continuation file")->required();
  order->add_option("--max-len", o.max_len, "Longest noun phrase (default: sentence length - 1)")
      ->check(CLI::PositiveNumber);
  order->add_option("sentence", o.sentence, "Order")->required();
  add_format(order);

  auto* qa = app.add_subcommand("qa", "Equilibria of the question-answering game");
  qa->add_option("--grammar", o.grammar, "Grammar file")->required();
  qa->add_option("--corpus", o.corpus, "Corpus file")->required();
  qa->add_option("--models", o.models, "Directory of student models")->required();
  add_format(qa);

  auto* nash = app.add_subcommand("nash", "Pure Nash equilibria of a bimatrix game");
  nash->add_option("--bimatrix", o.bimatrix, "Bimatrix file")->required();
  add_format(nash);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (factor->parsed()) return cmd_factor(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (ans->parsed()) return cmd_answers(o, out);
    if (order->parsed()) return cmd_order(o, out);
    if (qa->parsed()) return cmd_qa(o, out);
    if (nash->parsed()) return cmd_nash(o, out);
  } catch (const UngrammaticalError& e) {
    err << "ungrammatical: " << e.what() << "\n";
    return kExitNoResult;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitBadInput;
}

}  // namespace langgames
