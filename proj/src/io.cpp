#include "langgames/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "langgames/comb.hpp"
#include "langgames/error.hpp"

namespace langgames {

namespace fs = std::filesystem;

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Words sentence_words(const std::string& sentence) {
  Words out = split_words(sentence);
  for (auto& w : out) w = lowercase(w);
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

namespace {

template <class F>
auto guarded(const std::string& what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + " needs the key \"" + key + "\"");
  }
  return j.at(key);
}

std::string text(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) throw InputError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

ObjectList objects_of(const std::string& s) {
  if (s == "1") return {};
  return parse_type(s).factors();
}

std::string objects_text(const ObjectList& o) {
  return o.empty() ? "1" : format_type(PregroupType(o));
}

json box_to_json(const Box& b) {
  switch (b.kind) {
    case BoxKind::cup:
      return {{"kind", "cup"}, {"object", format_simple(b.dom.at(0))}};
    case BoxKind::cap:
      return {{"kind", "cap"}, {"object", format_simple(b.cod.at(0))}};
    case BoxKind::word:
      return {{"kind", "word"}, {"name", b.name}, {"type", objects_text(b.cod)}};
    case BoxKind::generator:
      break;
  }
  return {{"kind", "generator"}, {"name", b.name}, {"dom", objects_text(b.dom)},
          {"cod", objects_text(b.cod)}};
}

SimpleType single(const std::string& s, const std::string& where) {
  const auto t = parse_type(s);
  if (t.size() != 1) throw InputError(where + ": expected one simple type, got '" + s + "'");
  return t[0];
}

Box box_from_json(const json& j) {
  const std::string where = "box";
  const std::string kind = text(j, "kind", where);
  if (kind == "cup") return Box::cup(single(text(j, "object", where), where));
  if (kind == "cap") return Box::cap(single(text(j, "object", where), where));
  if (kind == "word") return Box::word(lowercase(text(j, "name", where)), parse_type(text(j, "type", where)));
  if (kind == "generator") {
    try {
      return Box::generator(lowercase(text(j, "name", where)), objects_of(text(j, "dom", where)),
                            objects_of(text(j, "cod", where)));
    } catch (const DiagramError& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("unknown box kind '" + kind + "'");
}

CombEntry comb_from_json(const json& j, const Grammar& g) {
  const std::string where = "comb";
  const std::string word = lowercase(text(j, "word", where));
  if (j.contains("preset")) {
    const std::string preset = text(j, "preset", where);
    const std::string aux = j.contains("aux") ? text(j, "aux", where) : "a";
    const std::string noun = j.contains("noun") ? text(j, "noun", where) : "n";
    if (preset == "relative_who") return relative_pronoun_comb(word, noun, g.sentence_type, aux);
    if (preset == "question_who") {
      if (!g.question_type) throw InputError("preset question_who needs a question_type");
      return question_word_comb(word, *g.question_type, g.sentence_type, noun, aux);
    }
    throw InputError("unknown comb preset '" + preset + "'");
  }
  CombEntry c;
  c.word = word;
  c.type = parse_type(text(j, "type", where));
  c.aux = text(j, "aux", where);
  for (const auto& b : field(j, "boxes", where)) {
    c.boxes.push_back({lowercase(text(b, "name", where)), objects_of(text(b, "dom", where)),
                       objects_of(text(b, "cod", where))});
  }
  c.recipe = diagram_from_json(field(j, "recipe", where));
  return c;
}

json comb_to_json(const CombEntry& c) {
  json boxes = json::array();
  for (const auto& b : c.boxes) {
    boxes.push_back({{"name", b.name}, {"dom", objects_text(b.dom)}, {"cod", objects_text(b.cod)}});
  }
  return {{"word", c.word}, {"type", format_type(c.type)}, {"aux", c.aux}, {"boxes", boxes},
          {"recipe", diagram_to_json(c.recipe)}};
}

}  // namespace

Grammar grammar_from_json(const json& j) {
  return guarded("grammar", [&] {
    const std::string where = "grammar";
    Grammar g;
    for (const auto& b : field(j, "basic_types", where)) g.basic_types.insert(b.get<std::string>());
    g.sentence_type = text(j, "sentence_type", where);
    if (j.contains("question_type") && !j.at("question_type").is_null()) {
      g.question_type = text(j, "question_type", where);
    }
    for (const auto& e : field(j, "dictionary", where)) {
      const std::string word = lowercase(text(e, "word", "dictionary entry"));
      if (word == kPlaceholder) throw InputError("'" + kPlaceholder + "' is reserved");
      g.add_entry(word, parse_type(text(e, "type", "dictionary entry '" + word + "'")));
    }
    if (j.contains("combs")) {
      for (const auto& c : j.at("combs")) g.add_comb(comb_from_json(c, g));
    }
    g.validate();
    return g;
  });
}

json grammar_to_json(const Grammar& g) {
  json dict = json::array();
  for (const auto& [word, types] : g.dictionary) {
    for (const auto& t : types) dict.push_back({{"word", word}, {"type", format_type(t)}});
  }
  json combs = json::array();
  for (const auto& c : g.combs) combs.push_back(comb_to_json(c));
  json out = {{"basic_types", g.basic_types}, {"sentence_type", g.sentence_type},
              {"dictionary", dict}, {"combs", combs}};
  if (g.question_type) out["question_type"] = *g.question_type;
  return out;
}

Grammar load_grammar(const fs::path& path) {
  try {
    return grammar_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Diagram diagram_from_json(const json& j) {
  return guarded("diagram", [&] {
    const ObjectList dom = j.contains("dom") ? objects_of(j.at("dom").get<std::string>()) : ObjectList{};
    std::vector<std::pair<Box, std::size_t>> steps;
    for (const auto& l : field(j, "layers", "diagram")) {
      steps.emplace_back(box_from_json(field(l, "box", "layer")),
                         field(l, "offset", "layer").get<std::size_t>());
    }
    try {
      return Diagram::from_offsets(dom, steps);
    } catch (const DiagramError& e) {
      throw InputError(std::string("diagram: ") + e.what());
    }
  });
}

json diagram_to_json(const Diagram& d) {
  json layers = json::array();
  for (const auto& l : d.layers()) layers.push_back({{"box", box_to_json(l.box)}, {"offset", l.offset()}});
  return {{"dom", objects_text(d.dom())}, {"cod", objects_text(d.cod())}, {"layers", layers}};
}

json reduction_to_json(const Reduction& r) {
  json types = json::array();
  for (const auto& t : r.word_types) types.push_back(format_type(t));
  json links = json::array();
  for (const auto& [i, j] : r.links) links.push_back({i + 1, j + 1});
  json rest = json::array();
  for (auto p : r.remainder) rest.push_back(p + 1);
  return {{"choices", r.choices}, {"word_types", types}, {"links", links}, {"remainder", rest}};
}

Reduction reduction_from_json(const json& j) {
  return guarded("reduction", [&] {
    Reduction r;
    r.choices = field(j, "choices", "reduction").get<std::vector<std::size_t>>();
    for (const auto& t : field(j, "word_types", "reduction")) r.word_types.push_back(parse_type(t.get<std::string>()));
    for (const auto& l : field(j, "links", "reduction")) {
      const auto a = l.at(0).get<std::size_t>(), b = l.at(1).get<std::size_t>();
      if (a == 0 || b == 0) throw InputError("reduction positions count from 1");
      r.links.emplace_back(a - 1, b - 1);
    }
    for (const auto& p : field(j, "remainder", "reduction")) {
      const auto x = p.get<std::size_t>();
      if (x == 0) throw InputError("reduction positions count from 1");
      r.remainder.push_back(x - 1);
    }
    return r;
  });
}

RelModel model_from_json(const json& j) {
  return guarded("model", [&] {
    RelModel m;
    for (const auto& [name, elems] : field(j, "objects", "model").items()) {
      m.objects[name] = {name, elems.get<std::vector<std::string>>()};
    }
    if (j.contains("relations")) {
      for (const auto& [name, rows] : j.at("relations").items()) {
        auto& rel = m.relations[lowercase(name)];
        for (const auto& row : rows) rel.insert(row.get<Tuple>());
      }
    }
    return m;
  });
}

json model_to_json(const RelModel& m) {
  json objects = json::object();
  for (const auto& [name, s] : m.objects) objects[name] = s.elements;
  json relations = json::object();
  for (const auto& [name, rows] : m.relations) {
    relations[name] = json::array();
    for (const auto& row : rows) relations[name].push_back(row);
  }
  return {{"objects", objects}, {"relations", relations}};
}

RelModel load_model(const fs::path& path) {
  try {
    return model_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<NamedModel> load_model_dir(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError(dir.string() + " holds no .json models");
  std::vector<NamedModel> out;
  for (const auto& f : files) out.push_back({f.stem().string(), load_model(f)});
  return out;
}

std::vector<CorpusItem> corpus_from_json(const json& j) {
  return guarded("corpus", [&] {
    std::vector<CorpusItem> out;
    for (const auto& item : field(j, "items", "corpus")) {
      const json& a = field(item, "answer", "corpus item");
      if (!a.is_boolean()) throw InputError("corpus answers must be true or false");
      out.push_back({sentence_words(text(item, "question", "corpus item")), a.get<bool>()});
    }
    return out;
  });
}

std::vector<CorpusItem> load_corpus(const fs::path& path) {
  try {
    return corpus_from_json(read_json(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ActionMap actions_from_json(const json& j) {
  return guarded("actions", [&] {
    if (!j.is_object()) throw InputError("actions must be an object of verbs");
    ActionMap out;
    for (const auto& [verb, table] : j.items()) {
      for (const auto& [phrase, act] : table.items()) {
        out[lowercase(verb)][join_words(sentence_words(phrase))] = act.get<std::string>();
      }
    }
    return out;
  });
}

std::map<std::string, std::string> continuation_from_json(const json& j) {
  return guarded("continuation", [&] {
    std::map<std::string, std::string> out;
    for (const auto& [order, act] : field(j, "orders", "continuation").items()) {
      out[join_words(sentence_words(order))] = act.get<std::string>();
    }
    return out;
  });
}

namespace {

Value number(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  try {
    const long long i = std::stoll(s, &used);
    if (used == s.size()) return Value(static_cast<std::int64_t>(i));
    const double d = std::stod(s, &used);
    if (used == s.size()) return Value(d);
  } catch (const std::exception&) {
  }
  throw InputError("bimatrix line " + std::to_string(line) + ": '" + s + "' is not a number");
}

}  // namespace

Bimatrix bimatrix_from_text(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows = 0, cols = 0;
  std::string header;
  if (!std::getline(in, header)) throw InputError("bimatrix file is empty");
  {
    std::istringstream h(header);
    std::string extra;
    if (!(h >> rows >> cols) || (h >> extra) || rows == 0 || cols == 0) {
      throw InputError("bimatrix header must be 'R C' with positive sizes");
    }
  }
  Bimatrix out;
  std::string line;
  std::size_t line_no = 1;
  while (out.p1.size() < rows && std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string cell;
    std::vector<Value> r1, r2;
    while (ls >> cell) {
      const auto comma = cell.find(',');
      if (comma == std::string::npos) {
        throw InputError("bimatrix line " + std::to_string(line_no) + ": entry '" + cell + "' is not 'p1,p2'");
      }
      r1.push_back(number(cell.substr(0, comma), line_no));
      r2.push_back(number(cell.substr(comma + 1), line_no));
    }
    if (r1.empty()) continue;
    if (r1.size() != cols) {
      throw InputError("bimatrix line " + std::to_string(line_no) + " has " + std::to_string(r1.size()) +
                       " entries, expected " + std::to_string(cols));
    }
    out.p1.push_back(std::move(r1));
    out.p2.push_back(std::move(r2));
  }
  if (out.p1.size() != rows) throw InputError("bimatrix has fewer than " + std::to_string(rows) + " rows");
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw InputError("bimatrix has extra rows");
  }
  return out;
}

Bimatrix load_bimatrix(const fs::path& path) {
  try {
    return bimatrix_from_text(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace langgames
