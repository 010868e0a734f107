#include "levi/io.hpp"

#include <fstream>

namespace levi {

namespace {

std::vector<std::vector<int>> int_matrix(const Json& j, const char* field) {
  if (!j.is_array()) fail(ErrorCode::ParseError, std::string(field) + " must be an array");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorCode::ParseError, std::string(field) + " rows must be arrays");
    out.push_back(row.get<std::vector<int>>());
  }
  return out;
}

std::vector<std::string> string_list(const Json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

Json group_to_json(const GroupPtr& g) {
  Json j;
  j["kind"] = "group";
  if (!g->name().empty()) j["name"] = g->name();
  j["mul"] = g->mul_table();
  j["labels"] = g->labels();
  return j;
}

GroupPtr group_from_json(const Json& j) {
  std::string name = j.value("name", "");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = string_list(j.at("labels"));
  if (j.contains("mul")) return FiniteGroup::from_mul_table(int_matrix(j.at("mul"), "mul"), labels, name);
  if (j.contains("degree")) {
    auto g = FiniteGroup::from_permutations(j.at("degree").get<int>(),
                                            int_matrix(j.at("generators"), "generators"),
                                            j.value("order_limit", 10080), name);
    return g;
  }
  fail(ErrorCode::ParseError, "group needs either \"mul\" or \"degree\"+\"generators\"");
}

Json bimodule_to_json(const BimodulePtr& b) {
  Json j;
  j["kind"] = "bimodule";
  if (!b->name().empty()) j["name"] = b->name();
  j["group"] = group_to_json(b->group());
  j["carrier"] = b->carrier_size();
  std::vector<std::vector<int>> left(b->group()->order(), std::vector<int>(b->carrier_size()));
  std::vector<std::vector<int>> right(b->carrier_size(), std::vector<int>(b->group()->order()));
  for (int g = 0; g < b->group()->order(); ++g)
    for (int x = 0; x < b->carrier_size(); ++x) left[g][x] = b->left(g, x);
  for (int x = 0; x < b->carrier_size(); ++x)
    for (int g = 0; g < b->group()->order(); ++g) right[x][g] = b->right(x, g);
  j["left"] = left;
  j["right"] = right;
  j["labels"] = b->labels();
  return j;
}

BimodulePtr bimodule_from_json(const Json& j) {
  auto group = group_from_json(j.at("group"));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = string_list(j.at("labels"));
  return Bimodule::from_tables(group, j.at("carrier").get<int>(),
                               int_matrix(j.at("left"), "left"),
                               int_matrix(j.at("right"), "right"), labels, j.value("name", ""));
}

Json group_data_to_json(const GroupData& d) {
  Json j;
  j["kind"] = "group-data";
  j["group"] = group_to_json(d.group);
  j["H"] = d.h.elements();
  j["K"] = d.k.elements();
  std::vector<std::vector<int>> pairs;
  for (auto [a, b] : d.gamma) pairs.push_back({a, b});
  j["gamma"] = pairs;
  return j;
}

GroupData group_data_from_json(const Json& j) {
  auto group = group_from_json(j.at("group"));
  Subgroup h(group, j.at("H").get<std::vector<int>>());
  Subgroup k(group, j.at("K").get<std::vector<int>>());
  std::vector<std::pair<int, int>> gamma;
  for (const auto& pair : j.at("gamma")) {
    auto v = pair.get<std::vector<int>>();
    if (v.size() != 2) fail(ErrorCode::ParseError, "gamma pairs must have two entries");
    gamma.emplace_back(v[0], v[1]);
  }
  return GroupData::make(group, std::move(h), std::move(k), std::move(gamma));
}

Json action_to_json(const SelfSimilarAction& a) {
  Json j;
  j["kind"] = "action";
  if (!a.name.empty()) j["name"] = a.name;
  j["group"] = group_to_json(a.group);
  j["alphabet"] = a.letters;
  j["act"] = a.act;
  j["res"] = a.res;
  return j;
}

SelfSimilarAction action_from_json(const Json& j) {
  SelfSimilarAction a;
  a.group = group_from_json(j.at("group"));
  a.letters = string_list(j.at("alphabet"));
  a.alphabet_size = static_cast<int>(a.letters.size());
  a.act = int_matrix(j.at("act"), "act");
  a.res = int_matrix(j.at("res"), "res");
  a.name = j.value("name", "");
  return a;
}

Json rees_to_json(const ReesElement& e) {
  Json j;
  j["word"] = e.word;
  j["unit"] = e.unit;
  return j;
}

ReesElement rees_from_json(const Json& j, const SelfSimilarAction& a) {
  ReesElement e;
  e.word = j.at("word").get<std::vector<int>>();
  e.unit = j.at("unit").get<int>();
  for (int x : e.word)
    if (x < 0 || x >= a.alphabet_size) fail(ErrorCode::ParseError, "letter index out of range");
  if (!a.group->valid_index(e.unit)) fail(ErrorCode::ParseError, "unit index out of range");
  return e;
}

Json report_to_json(const PropertyReport& r) {
  Json j;
  j["irreducible"] = r.irreducible;
  j["right_cancellative"] = r.right_cancellative;
  j["cancellative"] = r.cancellative;
  j["recurrent"] = r.recurrent;
  j["right_reversible"] = r.right_reversible;
  j["level_transitive"] = r.level_transitive;
  j["level_transitive_proven"] = r.level_transitive_proven;
  j["left_symmetric"] = r.left_symmetric;
  j["trivial_action"] = r.trivial_action;
  j["fundamental"] = r.fundamental;
  j["depth"] = r.depth;
  j["orbit_count"] = r.orbit_count;
  j["kernel_size"] = r.kernel_size;
  j["basis_size"] = r.basis_size;
  j["maximal_principal_ideal_count"] = r.maximal_principal_ideal_count;
  j["witnesses"] = r.witnesses;
  return j;
}

ReesElement parse_rees(const SelfSimilarAction& a, const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  auto comma = body.rfind(',');
  if (comma == std::string::npos)
    fail(ErrorCode::ParseError, "element must look like (word,unit)");
  std::string word_part = body.substr(0, comma);
  std::string unit_part = body.substr(comma + 1);
  auto strip = [](std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  word_part = strip(word_part);
  unit_part = strip(unit_part);

  ReesElement e;
  if (word_part == "\xce\xb5") word_part.clear();  // ε
  size_t pos = 0;
  while (pos < word_part.size()) {
    if (word_part[pos] == ' ') {
      ++pos;
      continue;
    }
    int best = -1;
    size_t best_len = 0;
    for (int x = 0; x < a.alphabet_size; ++x) {
      const auto& l = a.letter(x);
      if (l.size() > best_len && word_part.compare(pos, l.size(), l) == 0) {
        best = x;
        best_len = l.size();
      }
    }
    if (best < 0)
      fail(ErrorCode::ParseError, "unknown letter at '" + word_part.substr(pos) + "'");
    e.word.push_back(best);
    pos += best_len;
  }
  auto unit = a.group->index_of(unit_part);
  if (!unit) fail(ErrorCode::ParseError, "unknown unit label '" + unit_part + "'");
  e.unit = *unit;
  return e;
}

namespace {

GroupPtr corpus_c2() {
  return FiniteGroup::from_mul_table({{0, 1}, {1, 0}}, {"1", "s"}, "C2");
}

SelfSimilarAction make_action(GroupPtr g, std::vector<std::string> letters,
                              std::vector<std::vector<int>> act,
                              std::vector<std::vector<int>> res, std::string name) {
  SelfSimilarAction a;
  a.group = std::move(g);
  a.letters = std::move(letters);
  a.alphabet_size = static_cast<int>(a.letters.size());
  a.act = std::move(act);
  a.res = std::move(res);
  a.name = std::move(name);
  require_valid(a, 2);
  return a;
}

}  // namespace

Workspace Workspace::with_corpus() {
  Workspace w;
  auto trivial = FiniteGroup::trivial();
  auto c2 = corpus_c2();
  auto c4 = FiniteGroup::cyclic(4);
  auto s3 = FiniteGroup::symmetric(3);
  w.add_group("trivial", trivial);
  w.add_group("c2", c2);
  w.add_group("c4", c4);
  w.add_group("s3", s3);

  w.add_action("free2", make_action(trivial, {"a", "b"}, {{0, 1}}, {{0, 0}}, "free2"));
  w.add_action("c2-swap",
               make_action(c2, {"a", "b"}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 0}}, "c2-swap"));
  w.add_action("c2-flat",
               make_action(c2, {"a", "b"}, {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}, "c2-flat"));
  w.add_action("c2-twist",
               make_action(c2, {"a", "b"}, {{0, 1}, {1, 0}}, {{0, 0}, {1, 1}}, "c2-twist"));
  w.add_action("c2-kernel",
               make_action(c2, {"a", "b"}, {{0, 1}, {0, 1}}, {{0, 0}, {0, 0}}, "c2-kernel"));

  {
    auto a3 = Subgroup::closure(s3, {*s3->index_of("(012)")});
    auto data = GroupData::graph_of(PartialHom::identity_on(a3));
    w.add_group_data("s3-a3-identity:data", data);
    auto pointed = from_group_data(data);
    w.add_bimodule("s3-a3-identity:bimodule", pointed.bimodule);
    auto action = from_group_data_action(data, "s3-a3-identity");
    action.letters = {"x", "y"};
    w.add_action("s3-a3-identity", action);
  }
  {
    std::vector<int> square(4), invert(4);
    for (int i = 0; i < 4; ++i) {
      square[i] = (2 * i) % 4;
      invert[i] = (4 - i) % 4;
    }
    w.add_action("rees-c4-square", from_endomorphism(c4, square, "rees-c4-square"));
    w.add_action("rees-c4-inv", from_endomorphism(c4, invert, "rees-c4-inv"));
  }
  w.add_presentation("bs12",
                     HNNPresentation{std::make_shared<IntegerOracle>(1, 2), 64, "bs12"});
  w.add_presentation("bs23",
                     HNNPresentation{std::make_shared<IntegerOracle>(2, 3), 64, "bs23"});
  return w;
}

void Workspace::add_group(const std::string& name, GroupPtr g) {
  groups_[name] = std::move(g);
}
void Workspace::add_bimodule(const std::string& name, BimodulePtr b) {
  bimodules_[name] = std::move(b);
}
void Workspace::add_group_data(const std::string& name, GroupData d) {
  group_data_.emplace(name, std::move(d));
}
void Workspace::add_action(const std::string& name, SelfSimilarAction a) {
  require_valid(a, 2);
  actions_[name] = std::move(a);
}
void Workspace::add_presentation(const std::string& name, HNNPresentation p) {
  presentations_.emplace(name, std::move(p));
}

std::string Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.rfind('.');
  if (dot != std::string::npos) base = base.substr(0, dot);
  return load_json(j, base);
}

std::string Workspace::load_json(const Json& j, const std::string& fallback_name) {
  std::string kind = j.value("kind", "");
  std::string name = j.value("name", fallback_name);
  if (kind == "group") {
    add_group(name, group_from_json(j));
  } else if (kind == "bimodule") {
    add_bimodule(name, bimodule_from_json(j));
  } else if (kind == "group-data") {
    add_group_data(name, group_data_from_json(j));
  } else if (kind == "action") {
    auto a = action_from_json(j);
    require_valid(a, 4);
    add_action(name, std::move(a));
  } else if (kind == "hnn-integer") {
    add_presentation(name, HNNPresentation{std::make_shared<IntegerOracle>(
                               BigInt(j.at("m").get<long long>()),
                               BigInt(j.at("n").get<long long>())),
                           j.value("max_syllables", 64), name});
  } else {
    fail(ErrorCode::ParseError, "unknown kind '" + kind + "'");
  }
  return name;
}

const SelfSimilarAction& Workspace::action(const std::string& name) const {
  auto it = actions_.find(name);
  if (it == actions_.end()) fail(ErrorCode::UnknownName, "no action named '" + name + "'");
  return it->second;
}

BimodulePtr Workspace::bimodule(const std::string& name) const {
  auto it = bimodules_.find(name);
  if (it != bimodules_.end()) return it->second;
  constexpr std::string_view kAtoms = ":atoms";
  if (name.size() > kAtoms.size() &&
      name.compare(name.size() - kAtoms.size(), kAtoms.size(), kAtoms) == 0) {
    auto base = name.substr(0, name.size() - kAtoms.size());
    auto ait = actions_.find(base);
    if (ait != actions_.end()) return atom_bimodule(ait->second);
  }
  fail(ErrorCode::UnknownName, "no bimodule named '" + name + "'");
}

GroupPtr Workspace::group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) fail(ErrorCode::UnknownName, "no group named '" + name + "'");
  return it->second;
}

const GroupData& Workspace::group_data(const std::string& name) const {
  auto it = group_data_.find(name);
  if (it == group_data_.end()) fail(ErrorCode::UnknownName, "no group data named '" + name + "'");
  return it->second;
}

const HNNPresentation& Workspace::presentation(const std::string& name) const {
  auto it = presentations_.find(name);
  if (it == presentations_.end())
    fail(ErrorCode::UnknownName, "no presentation named '" + name + "'");
  return it->second;
}

std::map<std::string, std::string> Workspace::catalog() const {
  std::map<std::string, std::string> out;
  for (const auto& [name, _] : groups_) out[name] = "group";
  for (const auto& [name, _] : bimodules_) out[name] = "bimodule";
  for (const auto& [name, _] : group_data_) out[name] = "group-data";
  for (const auto& [name, _] : actions_) out[name] = "action";
  for (const auto& [name, _] : presentations_) out[name] = "presentation";
  return out;
}

Json Workspace::describe(const std::string& name) const {
  if (auto it = actions_.find(name); it != actions_.end()) return action_to_json(it->second);
  if (auto it = groups_.find(name); it != groups_.end()) return group_to_json(it->second);
  if (auto it = bimodules_.find(name); it != bimodules_.end())
    return bimodule_to_json(it->second);
  if (auto it = group_data_.find(name); it != group_data_.end())
    return group_data_to_json(it->second);
  if (auto it = presentations_.find(name); it != presentations_.end()) {
    Json j;
    j["kind"] = "hnn-integer";
    j["name"] = name;
    if (auto* oracle = dynamic_cast<const IntegerOracle*>(it->second.oracle.get())) {
      j["m"] = oracle->m().convert_to<long long>();
      j["n"] = oracle->n().convert_to<long long>();
    }
    j["max_syllables"] = it->second.max_syllables;
    return j;
  }
  fail(ErrorCode::UnknownName, "nothing named '" + name + "'");
}

}  // namespace levi
