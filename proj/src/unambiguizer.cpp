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

#include "maxplus/unambiguizer.hpp"

#include <deque>
#include <map>

#include "maxplus/errors.hpp"

namespace maxplus {

PipelineConstants constants_NM(std::span<const Automaton> family,
                               const ProductAutomaton& p) {
  if (p.states.empty())
    throw PreconditionError("constants_NM: empty product automaton");
  bool seen = false;
  Rational lo = 0, hi = 0;
  auto feed = [&](const Weight& w) {
    if (w.is_bottom()) return;
    if (!seen) {
      lo = hi = w.value();
      seen = true;
      return;
    }
    lo = std::min(lo, w.value());
    hi = std::max(hi, w.value());
  };
  for (const Automaton& m : family) {
    for (const Transition& t : m.transitions()) feed(t.weight);
    for (int s = 0; s < m.num_states(); ++s) feed(m.beta(s));
  }
  if (!seen)
    throw PreconditionError("constants_NM: family has no non-bottom weight");
  return {p.states.size(), hi - lo};
}

namespace {

using Config = std::pair<std::vector<Weight>, int>;  // (residuals, product state)

std::string config_name(const ProductAutomaton& p, const Config& c) {
  std::string name = "((";
  for (std::size_t i = 0; i < c.first.size(); ++i) {
    if (i) name += ",";
    name += to_string(c.first[i]);
  }
  return name + ")," + p.state_names[c.second] + ")";
}

}  // namespace

Automaton build_unambiguous(std::span<const Automaton> family,
                            const ProductAutomaton& p, const SccReport& report,
                            std::size_t state_cap, UnambiguizerLog* log) {
  DominanceResult dom = satisfies_dominance(p, report);
  if (!dom.satisfied)
    throw PreconditionError(
        "build_unambiguous: the product automaton violates the dominance property");

  PipelineConstants constants = constants_NM(family, p);
  const Weight cutoff(Rational(constants.product_states) * constants.weight_spread);
  const std::size_t n = p.family_size;

  std::vector<std::vector<std::pair<int, int>>> succ(p.states.size());  // (arc, to)
  for (std::size_t i = 0; i < p.arcs.size(); ++i)
    succ[p.arcs[i].from].emplace_back(static_cast<int>(i), p.arcs[i].to);

  Automaton out(std::vector<std::string>(p.alphabet));
  std::map<Config, int> index;
  std::deque<int> queue;
  std::vector<Config> configs;
  Rational max_spread = 0;

  auto intern = [&](Config c) {
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    if (configs.size() >= state_cap)
      throw CapExceededError("build_unambiguous exceeded the configuration cap");
    int id = out.add_state(config_name(p, c));
    for (const Weight& w : c.first)
      if (w.is_finite()) max_spread = std::max(max_spread, w.value());
    configs.push_back(c);
    index.emplace(std::move(c), id);
    queue.push_back(id);
    return id;
  };

  for (std::size_t s = 0; s < p.states.size(); ++s) {
    if (!p.is_initial(static_cast<int>(s))) continue;
    const TupleWeight& alpha = p.alpha[s];
    int id = intern({vnorm(alpha).coords(), static_cast<int>(s)});
    out.set_initial(id, vmin(alpha));
  }

  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    const Config config = configs[id];
    const TupleWeight z{std::vector<Weight>(config.first)};
    int q = config.second;

    if (p.is_final(q)) {
      Weight fin;
      for (std::size_t i = 0; i < n; ++i)
        fin = w_plus(fin, w_times(z[i], p.beta[q][i]));
      out.set_final(id, fin);
    }

    for (const auto& [arc_idx, dest] : succ[q]) {
      const ProductAutomaton::Arc& arc = p.arcs[arc_idx];
      TupleWeight t = tw_times(z, arc.weight);

      // Leading coordinate: the smallest finite one among the victorious
      // coordinates of the destination's SCC (ties to the lowest index).
      std::uint64_t v = report.sccs[report.scc_of[dest]].victorious;
      int leader = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(v & (std::uint64_t(1) << i)) || t[i].is_bottom()) continue;
        if (leader < 0 || t[i] < t[leader]) leader = static_cast<int>(i);
      }
      if (leader < 0)
        throw PreconditionError(
            "build_unambiguous: no finite victorious coordinate (dominance "
            "violated?)");

      Weight threshold = w_minus(t[leader], cutoff);
      std::vector<Weight> y(n);
      for (std::size_t i = 0; i < n; ++i)
        y[i] = (t[i].is_bottom() || t[i] < threshold) ? Weight::bottom() : t[i];
      TupleWeight ty(std::move(y));
      int to = intern({vnorm(ty).coords(), dest});
      out.add_transition(id, arc.label, vmin(ty), to);
    }
  }

  if (log) {
    log->configurations = configs.size();
    log->max_residual_spread = max_spread;
  }
  return out;
}

}  // namespace maxplus
