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

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "maxplus/ambiguity.hpp"
#include "maxplus/covering.hpp"
#include "maxplus/dominance.hpp"
#include "maxplus/errors.hpp"
#include "maxplus/fixtures.hpp"
#include "maxplus/io.hpp"
#include "maxplus/sequentiality.hpp"
#include "maxplus/sweep.hpp"
#include "maxplus/unambiguizer.hpp"

namespace {

using namespace maxplus;

// Family for the product-based commands: several inputs are used directly,
// a single input is decomposed into unambiguous leaves first.
std::vector<Automaton> family_of(const std::vector<std::string>& inputs) {
  std::vector<Automaton> family;
  if (inputs.size() == 1) {
    family = decompose_unambiguous(load_automaton(inputs[0]));
  } else {
    for (const std::string& path : inputs) family.push_back(trim(load_automaton(path)));
  }
  return family;
}

void write_artifact(const Automaton& a, const std::string& dir,
                    const std::string& name, Json* manifest) {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + name;
  save_automaton(a, path);
  if (manifest) manifest->push_back(path);
}

int run(int argc, char** argv) {
  CLI::App app{"max-plus automata toolkit: ambiguity and sequentiality decisions"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::string word_text, output_dir, fixture_name;
  int bound = 6;
  std::size_t cap = 100000;
  bool dot = false;

  auto add_input = [&](CLI::App* cmd, bool multi) {
    auto* opt = cmd->add_option("--input", inputs, "automaton document (JSON)");
    opt->required();
    if (!multi) opt->expected(1);
  };

  auto* cmd_evaluate = app.add_subcommand("evaluate", "coefficient of a word");
  add_input(cmd_evaluate, false);
  cmd_evaluate->add_option("--word", word_text, "input word")->required();

  auto* cmd_paths = app.add_subcommand("paths", "number of successful paths of a word");
  add_input(cmd_paths, false);
  cmd_paths->add_option("--word", word_text, "input word")->required();

  auto* cmd_ambiguity =
      app.add_subcommand("ambiguity", "infinite-ambiguity check and bounded degree");
  add_input(cmd_ambiguity, false);
  cmd_ambiguity->add_option("--bound", bound, "length bound for the degree estimate");

  auto* cmd_decompose =
      app.add_subcommand("decompose", "split into unambiguous automata of equal support");
  add_input(cmd_decompose, false);
  cmd_decompose->add_option("--output", output_dir, "directory for the leaf documents");

  auto* cmd_dominance =
      app.add_subcommand("dominance", "SCC report and dominance verdict of the product");
  add_input(cmd_dominance, true);
  cmd_dominance->add_option("--bound", bound, "guard bound for the family checks");
  cmd_dominance->add_flag("--dot", dot, "emit the condensation graph as DOT");

  auto* cmd_unambiguize =
      app.add_subcommand("unambiguize", "construct the unambiguous automaton");
  add_input(cmd_unambiguize, true);
  cmd_unambiguize->add_option("--bound", bound, "guard bound for the family checks");
  cmd_unambiguize->add_option("--cap", cap, "configuration cap");
  cmd_unambiguize->add_option("--output", output_dir, "directory for the result");

  auto* cmd_twins = app.add_subcommand("twins", "twin property check");
  add_input(cmd_twins, false);

  auto* cmd_sequentialize =
      app.add_subcommand("sequentialize", "weighted determinization");
  add_input(cmd_sequentialize, false);
  cmd_sequentialize->add_option("--cap", cap, "state cap");
  cmd_sequentialize->add_option("--output", output_dir, "directory for the result");

  auto* cmd_decide = app.add_subcommand("decide", "full decision pipeline");
  add_input(cmd_decide, false);
  cmd_decide->add_option("--bound", bound, "cross-validation length bound");
  cmd_decide->add_option("--output", output_dir, "directory for constructed automata");

  auto* cmd_dot = app.add_subcommand("export-dot", "GraphViz rendering");
  add_input(cmd_dot, false);

  auto* cmd_fixture = app.add_subcommand("fixture", "bundled example automata");
  auto* cmd_fixture_list = cmd_fixture->add_subcommand("list", "list fixture names");
  auto* cmd_fixture_get = cmd_fixture->add_subcommand("get", "emit a fixture document");
  cmd_fixture_get->add_option("name", fixture_name, "fixture name")->required();
  cmd_fixture->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (cmd_evaluate->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    std::cout << to_string(evaluate(a, parse_word(a, word_text))) << "\n";
    return 0;
  }

  if (cmd_paths->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    std::cout << count_successful_paths(a, parse_word(a, word_text)) << "\n";
    return 0;
  }

  if (cmd_ambiguity->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    Automaton t = trim(a);
    auto result = is_infinitely_ambiguous(a);
    Json out;
    out["trim_states"] = t.num_states();
    out["infinitely_ambiguous"] = result.infinite;
    if (result.witness)
      out["witness"] = ambiguity_witness_to_json(t, *result.witness);
    out["degree_up_to"] = {{"bound", bound},
                           {"degree", degree_up_to(a, bound).str()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_decompose->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    std::vector<Automaton> leaves = decompose_unambiguous(a);
    Json manifest;
    manifest["source"] = inputs[0];
    manifest["leaf_count"] = leaves.size();
    Json files = Json::array();
    if (!output_dir.empty()) {
      for (std::size_t i = 0; i < leaves.size(); ++i)
        write_artifact(leaves[i], output_dir, "leaf_" + std::to_string(i) + ".json",
                       &files);
      manifest["files"] = files;
      std::ofstream mf(output_dir + "/manifest.json");
      mf << manifest.dump(2) << "\n";
    }
    std::cout << manifest.dump(2) << "\n";
    return 0;
  }

  if (cmd_dominance->parsed() || cmd_unambiguize->parsed()) {
    std::vector<Automaton> family = family_of(inputs);
    ProductAutomaton p = product(family, bound);
    SccReport report = analyze_sccs(p);
    DominanceResult dom = satisfies_dominance(p, report);
    if (cmd_dominance->parsed()) {
      if (dot) {
        std::cout << condensation_dot(p, report);
        return 0;
      }
      Json out = scc_report_to_json(p, report);
      out["dominance"] = dominance_to_json(p, dom);
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    UnambiguizerLog log;
    Automaton ua = build_unambiguous(family, p, report, cap, &log);
    Json out;
    out["configurations"] = log.configurations;
    {
      std::ostringstream spread;
      spread << log.max_residual_spread;
      out["max_residual_spread"] = spread.str();
    }
    out["states"] = ua.num_states();
    if (!output_dir.empty()) {
      Json files = Json::array();
      write_artifact(ua, output_dir, "unambiguous.json", &files);
      out["files"] = files;
    } else {
      out["automaton"] = automaton_to_json(ua);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_twins->parsed()) {
    Automaton a = trim(load_automaton(inputs[0]));
    std::cout << twin_report_to_json(a, twin_property(a)).dump(2) << "\n";
    return 0;
  }

  if (cmd_sequentialize->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    Automaton seq = determinize_weighted(a, cap);
    Json out;
    out["states"] = seq.num_states();
    out["sequential"] = is_sequential(seq);
    if (!output_dir.empty()) {
      Json files = Json::array();
      write_artifact(seq, output_dir, "sequential.json", &files);
      out["files"] = files;
    } else {
      out["automaton"] = automaton_to_json(seq);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_decide->parsed()) {
    Automaton a = load_automaton(inputs[0]);
    PipelineReport report = decide(a, bound);
    Json out = pipeline_report_to_json(a, report);
    if (!output_dir.empty()) {
      Json files = Json::array();
      for (std::size_t i = 0; i < report.leaves.size(); ++i)
        write_artifact(report.leaves[i], output_dir,
                       "leaf_" + std::to_string(i) + ".json", &files);
      if (report.unambiguous_automaton)
        write_artifact(*report.unambiguous_automaton, output_dir,
                       "unambiguous.json", &files);
      if (report.sequential_automaton)
        write_artifact(*report.sequential_automaton, output_dir,
                       "sequential.json", &files);
      out["files"] = files;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (cmd_dot->parsed()) {
    std::cout << export_dot(load_automaton(inputs[0]));
    return 0;
  }

  if (cmd_fixture->parsed()) {
    if (cmd_fixture_list->parsed()) {
      for (const std::string& name : fixture_names()) std::cout << name << "\n";
      return 0;
    }
    std::cout << automaton_to_json(fixture(fixture_name)).dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
