// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxplus/io.hpp"

#include <fstream>
#include <sstream>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

Weight weight_from_json(const Json& v, const std::string& where) {
  if (v.is_string()) return parse_weight(v.get<std::string>());
  if (v.is_number_integer())
    return Weight(static_cast<long long>(v.get<std::int64_t>()));
  if (v.is_number_float())
    throw ParseError(where + ": use a string for non-integer weights");
  throw ParseError(where + ": weight must be a string or an integer");
}

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

}  // namespace

Automaton automaton_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("document is not a JSON object");

  const Json& alphabet = field(doc, "alphabet");
  if (!alphabet.is_array()) throw ParseError("'alphabet' must be an array");
  std::vector<std::string> labels;
  for (const Json& l : alphabet) {
    if (!l.is_string()) throw ParseError("'alphabet' entries must be strings");
    labels.push_back(l.get<std::string>());
  }
  Automaton a(labels);

  const Json& states = field(doc, "states");
  if (!states.is_array()) throw ParseError("'states' must be an array");
  for (const Json& s : states) {
    if (!s.is_string()) throw ParseError("'states' entries must be strings");
    a.add_state(s.get<std::string>());
  }

  for (const char* key : {"initial", "final"}) {
    const Json& map = field(doc, key);
    if (!map.is_object())
      throw ParseError(std::string("'") + key + "' must be an object");
    for (const auto& [name, value] : map.items()) {
      int s = a.state_index(name);
      if (s < 0)
        throw ParseError(std::string("'") + key + "' references unknown state '" +
                         name + "'");
      Weight w = weight_from_json(value, std::string(key) + "." + name);
      if (w.is_bottom()) continue;  // same as omission
      if (key[0] == 'i')
        a.set_initial(s, w);
      else
        a.set_final(s, w);
    }
  }

  const Json& transitions = field(doc, "transitions");
  if (!transitions.is_array()) throw ParseError("'transitions' must be an array");
  int index = 0;
  for (const Json& t : transitions) {
    std::string where = "transitions[" + std::to_string(index++) + "]";
    if (!t.is_object()) throw ParseError(where + " must be an object");
    std::string from = field(t, "from").get<std::string>();
    std::string label = field(t, "label").get<std::string>();
    std::string to = field(t, "to").get<std::string>();
    Weight w = weight_from_json(field(t, "weight"), where);
    if (w.is_bottom())
      throw ParseError(where + ": '-inf' transitions must be omitted");
    try {
      a.add_transition(from, label, w, to);
    } catch (const PreconditionError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return a;
}

Json automaton_to_json(const Automaton& a) {
  Json doc;
  doc["alphabet"] = a.alphabet();
  doc["states"] = a.state_names();
  Json initial = Json::object(), fin = Json::object();
  for (int s = 0; s < a.num_states(); ++s) {
    if (a.is_initial(s)) initial[a.state_name(s)] = to_string(a.alpha(s));
    if (a.is_final(s)) fin[a.state_name(s)] = to_string(a.beta(s));
  }
  doc["initial"] = initial;
  doc["final"] = fin;
  Json transitions = Json::array();
  for (const Transition& t : a.transitions()) {
    Json entry;
    entry["from"] = a.state_name(t.from);
    entry["label"] = a.label_name(t.label);
    entry["weight"] = to_string(t.weight);
    entry["to"] = a.state_name(t.to);
    transitions.push_back(entry);
  }
  doc["transitions"] = transitions;
  return doc;
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return automaton_from_json(doc);
}

void save_automaton(const Automaton& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << automaton_to_json(a).dump(2) << "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string export_dot(const Automaton& a) {
  std::ostringstream out;
  out << "digraph maxplus {\n  rankdir=LR;\n";
  for (int s = 0; s < a.num_states(); ++s)
    out << "  " << dot_quote(a.state_name(s)) << " [shape=circle];\n";
  int anchor = 0;
  for (int s = 0; s < a.num_states(); ++s) {
    if (!a.is_initial(s)) continue;
    std::string node = "__in" + std::to_string(anchor++);
    out << "  " << node << " [shape=none, label=\"\", width=0, height=0];\n";
    out << "  " << node << " -> " << dot_quote(a.state_name(s)) << " [label="
        << dot_quote(to_string(a.alpha(s))) << "];\n";
  }
  anchor = 0;
  for (int s = 0; s < a.num_states(); ++s) {
    if (!a.is_final(s)) continue;
    std::string node = "__out" + std::to_string(anchor++);
    out << "  " << node << " [shape=none, label=\"\", width=0, height=0];\n";
    out << "  " << dot_quote(a.state_name(s)) << " -> " << node << " [label="
        << dot_quote(to_string(a.beta(s))) << "];\n";
  }
  for (const Transition& t : a.transitions())
    out << "  " << dot_quote(a.state_name(t.from)) << " -> "
        << dot_quote(a.state_name(t.to)) << " [label="
        << dot_quote(a.label_name(t.label) + "|" + to_string(t.weight)) << "];\n";
  out << "}\n";
  return out.str();
}

namespace {

Json word_json(const std::vector<std::string>& alphabet, const Word& w) {
  std::string out;
  bool single = true;
  for (const std::string& l : alphabet)
    if (l.size() != 1) single = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += " ";
    out += alphabet[w[i]];
  }
  return Json(out);
}

Json mask_json(std::uint64_t mask, std::size_t n) {
  Json out = Json::array();
  for (std::size_t i : mask_to_indices(mask, n)) out.push_back(i);
  return out;
}

}  // namespace

std::string condensation_dot(const ProductAutomaton& p, const SccReport& report) {
  std::ostringstream out;
  out << "digraph condensation {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < report.sccs.size(); ++i) {
    const SccInfo& info = report.sccs[i];
    std::string label = "scc" + std::to_string(i) + "\\n{";
    for (std::size_t j = 0; j < info.states.size(); ++j) {
      if (j) label += ",";
      label += p.state_names[info.states[j]];
    }
    label += "}\\nvict=";
    auto idx = mask_to_indices(info.victorious, p.family_size);
    label += "{";
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j) label += ",";
      label += std::to_string(idx[j]);
    }
    label += "}";
    out << "  scc" << i << " [shape=box, label=\"" << label << "\"];\n";
  }
  for (const auto& [from, to] : report.condensation_edges)
    out << "  scc" << from << " -> scc" << to << ";\n";
  out << "}\n";
  return out.str();
}

Json scc_report_to_json(const ProductAutomaton& p, const SccReport& report) {
  Json out;
  out["product_states"] = p.states.size();
  out["scc_count"] = report.sccs.size();
  Json sccs = Json::array();
  for (const SccInfo& info : report.sccs) {
    Json entry;
    Json members = Json::array();
    for (int s : info.states) members.push_back(p.state_names[s]);
    entry["states"] = members;
    Json circuits = Json::array();
    for (const Circuit& c : info.circuits) {
      Json cj;
      Word labels;
      for (int arc : c.arcs) labels.push_back(p.arcs[arc].label);
      cj["word"] = word_json(p.alphabet, labels);
      cj["weight"] = to_string(c.total);
      cj["victorious"] = mask_json(c.victorious, p.family_size);
      circuits.push_back(cj);
    }
    entry["circuits"] = circuits;
    entry["victorious"] = mask_json(info.victorious, p.family_size);
    sccs.push_back(entry);
  }
  out["sccs"] = sccs;
  Json edges = Json::array();
  for (const auto& [from, to] : report.condensation_edges)
    edges.push_back(Json::array({from, to}));
  out["condensation_edges"] = edges;
  return out;
}

Json dominance_to_json(const ProductAutomaton& p, const DominanceResult& result) {
  Json out;
  out["satisfied"] = result.satisfied;
  if (!result.satisfied) {
    Json states = Json::array();
    for (int s : result.witness_states) states.push_back(p.state_names[s]);
    out["witness"] = {{"states", states},
                      {"word", word_json(p.alphabet, result.witness_word)}};
  }
  return out;
}

Json twin_report_to_json(const Automaton& a, const TwinReport& report) {
  Json out;
  out["twins"] = report.twins;
  if (!report.twins) {
    out["p"] = report.p_name;
    out["q"] = report.q_name;
    out["u1"] = word_json(a.alphabet(), report.u1);
    out["u2"] = word_json(a.alphabet(), report.u2);
    out["x2"] = to_string(report.x2);
    out["y2"] = to_string(report.y2);
  }
  return out;
}

Json ambiguity_witness_to_json(const Automaton& trimmed, const AmbiguityWitness& w) {
  Json out;
  out["p"] = w.p_name;
  out["q"] = w.q_name;
  out["word"] = word_json(trimmed.alphabet(), w.word);
  return out;
}

Json pipeline_report_to_json(const Automaton& input, const PipelineReport& report) {
  Json out;
  out["infinitely_ambiguous"] = report.infinitely_ambiguous;
  if (report.ambiguity_witness)
    out["ambiguity_witness"] =
        ambiguity_witness_to_json(trim(input), *report.ambiguity_witness);
  if (report.infinitely_ambiguous) {
    out["finitely_ambiguous"] = false;
    out["unambiguous"] = nullptr;
    out["sequential"] = nullptr;
    out["note"] = "undecided: the automaton is infinitely ambiguous";
    return out;
  }
  out["finitely_ambiguous"] = true;
  out["leaf_count"] = report.leaf_count;
  if (report.dominance) out["dominance"] = *report.dominance;
  out["unambiguous"] = report.unambiguous ? Json(*report.unambiguous) : Json(nullptr);
  if (report.twin) out["twin"] = twin_report_to_json(
      report.unambiguous_automaton ? *report.unambiguous_automaton : input,
      *report.twin);
  out["sequential"] = report.sequential ? Json(*report.sequential) : Json(nullptr);
  out["verification_bound"] = report.verification_bound;
  Json artifacts;
  artifacts["leaves"] = report.leaf_count;
  artifacts["unambiguous_automaton"] = report.unambiguous_automaton.has_value();
  artifacts["sequential_automaton"] = report.sequential_automaton.has_value();
  out["artifacts"] = artifacts;
  return out;
}

}  // namespace maxplus
