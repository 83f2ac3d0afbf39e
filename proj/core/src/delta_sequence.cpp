// Copyright 2026 The Strength Authors
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

#include "strength/delta_sequence.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "strength/errors.hpp"

namespace strength {
namespace {

// Mutable residual graph with LIFO undo.
class Residual {
 public:
  explicit Residual(const Graph& g)
      : g_(g), alive_(g.order(), 1), degree_(g.order()), alive_count_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) degree_[v] = g.degree(v);
  }

  bool alive(Vertex v) const { return alive_[v] != 0; }
  int degree(Vertex v) const { return degree_[v]; }
  int alive_count() const { return alive_count_; }
  std::size_t mark() const { return log_.size(); }

  void Remove(Vertex v) {
    alive_[v] = 0;
    --alive_count_;
    for (Vertex w : g_.neighbors(v)) {
      if (alive_[w]) --degree_[w];
    }
    log_.push_back(v);
  }

  void RestoreTo(std::size_t mark) {
    while (log_.size() > mark) {
      const Vertex v = log_.back();
      log_.pop_back();
      for (Vertex w : g_.neighbors(v)) {
        if (alive_[w]) ++degree_[w];
      }
      alive_[v] = 1;
      ++alive_count_;
    }
  }

  std::vector<Vertex> AliveNeighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (Vertex w : g_.neighbors(v)) {
      if (alive_[w]) out.push_back(w);
    }
    return out;
  }

  std::vector<Vertex> Alive() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (alive_[v]) out.push_back(v);
    }
    return out;
  }

  // Removes the isolated vertices and returns them in ascending order.
  std::vector<Vertex> StripIsolated() {
    std::vector<Vertex> isolated;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (alive_[v] && degree_[v] == 0) isolated.push_back(v);
    }
    for (Vertex v : isolated) Remove(v);
    return isolated;
  }

  // After StripIsolated: 0 if nothing is left, r if the rest is K_r, -1
  // otherwise.
  int TerminalClique() const {
    if (alive_count_ == 0) return 0;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (alive_[v] && degree_[v] != alive_count_ - 1) return -1;
    }
    return alive_count_;
  }

  int MinDegree() const {
    int best = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (alive_[v]) best = std::min(best, degree_[v]);
    }
    return best;
  }

  // Eligible choices in (degree, id) order.
  std::vector<Vertex> Candidates(bool min_degree_only) const {
    std::vector<Vertex> out = Alive();
    std::stable_sort(out.begin(), out.end(),
                     [&](Vertex a, Vertex b) { return degree_[a] < degree_[b]; });
    if (min_degree_only && !out.empty()) {
      const int least = degree_[out.front()];
      out.erase(std::find_if(out.begin(), out.end(),
                             [&](Vertex v) { return degree_[v] != least; }),
                out.end());
    }
    return out;
  }

 private:
  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> degree_;
  int alive_count_;
  std::vector<Vertex> log_;
};

DeltaStep TerminalStep(std::vector<Vertex> isolated, const Residual& residual, int r) {
  DeltaStep step;
  step.m = static_cast<int>(isolated.size());
  step.isolated = std::move(isolated);
  if (r >= 2) {
    auto clique = residual.Alive();
    step.chosen = clique.front();
    step.removed_neighbors.assign(clique.begin() + 1, clique.end());
    step.d = r - 1;
  }
  step.y = step.m + 1 - step.d;
  return step;
}

DeltaSequence Assemble(std::vector<DeltaStep> steps, SequenceMode mode) {
  DeltaSequence seq;
  seq.mode = mode;
  seq.steps = std::move(steps);
  const DeltaStep& last = seq.steps.back();
  seq.terminal = last.chosen >= 0 ? TerminalKind::kClique : TerminalKind::kIsolated;
  seq.terminal_m = last.m;
  seq.terminal_r = last.chosen >= 0 ? last.d + 1 : 0;
  int z = 0;
  for (std::size_t i = 1; i < seq.steps.size(); ++i) {
    z += seq.steps[i].y;
    seq.prefix_sums.push_back(z);
  }
  return seq;
}

void CheckSearchable(const Graph& g) {
  if (g.order() == 0 || g.size() == 0) {
    throw PreconditionError("sequence search needs a graph with edges");
  }
  const int delta = min_degree(g);
  if (delta < 1) {
    throw PreconditionError("graph has isolated vertices; strip them first");
  }
  if (g.order() - 2 < delta) {
    throw PreconditionError("sequence search needs p - 2 >= min degree (got p=" +
                            std::to_string(g.order()) + ", min degree " +
                            std::to_string(delta) + ")");
  }
}

class Searcher {
 public:
  Searcher(const Graph& g, const SequenceSearchOptions& options, bool maximize_z)
      : g_(g), options_(options), maximize_z_(maximize_z), residual_(g) {}

  SequenceSearchResult Run() {
    SequenceSearchResult result;
    const bool done = Descend(0, 0, std::numeric_limits<int>::max());
    result.nodes = nodes_;
    if (maximize_z_) {
      result.status = budget_hit_ ? SearchStatus::kBudgetHit : SearchStatus::kFound;
      if (!best_.empty()) result.sequence = Assemble(best_, options_.mode);
      return result;
    }
    if (done && !budget_hit_) {
      result.status = SearchStatus::kFound;
      result.sequence = Assemble(best_, options_.mode);
    } else {
      result.status = budget_hit_ ? SearchStatus::kBudgetHit : SearchStatus::kExhausted;
    }
    return result;
  }

 private:
  // Returns true to stop the whole search: found (find mode) or budget hit.
  bool Descend(int step_index, int z, int running_min) {
    const std::size_t mark = residual_.mark();
    std::vector<Vertex> isolated = residual_.StripIsolated();
    const int m = static_cast<int>(isolated.size());
    const int r = step_index == 0 ? -1 : residual_.TerminalClique();
    bool stop = false;
    if (r >= 0) {
      DeltaStep step = TerminalStep(std::move(isolated), residual_, r);
      const int final_z = z + step.y;
      const int final_min = std::min(running_min, final_z);
      path_.push_back(std::move(step));
      if (maximize_z_) {
        if (best_.empty() || final_min > best_min_) {
          best_ = path_;
          best_min_ = final_min;
        }
      } else if (final_z >= 0) {
        best_ = path_;
        stop = true;
      }
      path_.pop_back();
      residual_.RestoreTo(mark);
      return stop;
    }

    const bool min_only = options_.mode == SequenceMode::kMinDegree ||
                          (step_index == 0 && options_.first_at_min_degree);
    for (Vertex v : residual_.Candidates(min_only)) {
      if (nodes_ >= options_.budget) {
        budget_hit_ = true;
        stop = true;
        break;
      }
      ++nodes_;
      DeltaStep step;
      step.m = m;
      step.isolated = isolated;
      step.chosen = v;
      step.d = residual_.degree(v);
      step.removed_neighbors = residual_.AliveNeighbors(v);
      step.y = m + 1 - step.d;
      const int next_z = step_index == 0 ? 0 : z + step.y;
      const int next_min =
          step_index == 0 ? running_min : std::min(running_min, next_z);
      if (!maximize_z_ && next_z < 0) continue;
      if (maximize_z_ && !best_.empty() && next_min <= best_min_) continue;

      const std::size_t inner = residual_.mark();
      for (Vertex w : step.removed_neighbors) residual_.Remove(w);
      residual_.Remove(v);
      path_.push_back(std::move(step));
      stop = Descend(step_index + 1, next_z, next_min);
      path_.pop_back();
      residual_.RestoreTo(inner);
      if (stop) break;
    }
    residual_.RestoreTo(mark);
    return stop;
  }

  const Graph& g_;
  SequenceSearchOptions options_;
  bool maximize_z_;
  Residual residual_;
  std::vector<DeltaStep> path_;
  std::vector<DeltaStep> best_;
  int best_min_ = std::numeric_limits<int>::min();
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
};

using Chooser = std::function<Vertex(const Residual&, int step_index)>;

DeltaSequence Build(const Graph& g, SequenceMode mode, const Chooser& choose) {
  Residual residual(g);
  std::vector<DeltaStep> steps;
  for (int step_index = 0;; ++step_index) {
    std::vector<Vertex> isolated = residual.StripIsolated();
    const int r = step_index == 0 ? -1 : residual.TerminalClique();
    if (r >= 0) {
      steps.push_back(TerminalStep(std::move(isolated), residual, r));
      return Assemble(std::move(steps), mode);
    }
    const Vertex v = choose(residual, step_index);
    if (v < 0 || v >= g.order() || !residual.alive(v)) {
      throw ParameterError("step " + std::to_string(step_index + 1) +
                           ": chosen vertex is not in the residual graph");
    }
    if (mode == SequenceMode::kMinDegree && residual.degree(v) != residual.MinDegree()) {
      throw ParameterError("step " + std::to_string(step_index + 1) + ": vertex " +
                           std::to_string(v) + " does not have minimum degree");
    }
    DeltaStep step;
    step.m = static_cast<int>(isolated.size());
    step.isolated = std::move(isolated);
    step.chosen = v;
    step.d = residual.degree(v);
    step.removed_neighbors = residual.AliveNeighbors(v);
    step.y = step.m + 1 - step.d;
    for (Vertex w : step.removed_neighbors) residual.Remove(w);
    residual.Remove(v);
    steps.push_back(std::move(step));
  }
}

[[noreturn]] void Mismatch(std::size_t step, const std::string& what) {
  throw IntegrityError("sequence step " + std::to_string(step + 1) + ": " + what);
}

}  // namespace

bool DeltaSequence::satisfies_condition() const {
  return std::all_of(prefix_sums.begin(), prefix_sums.end(),
                     [](int z) { return z >= 0; });
}

int DeltaSequence::min_prefix() const {
  return *std::min_element(prefix_sums.begin(), prefix_sums.end());
}

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "exhausted";
    case SearchStatus::kBudgetHit:
      return "budget-hit";
  }
  return "exhausted";
}

SequenceSearchResult find_delta_sequence(const Graph& g,
                                         const SequenceSearchOptions& options) {
  CheckSearchable(g);
  return Searcher(g, options, /*maximize_z=*/false).Run();
}

SequenceSearchResult best_prefix_sequence(const Graph& g,
                                          const SequenceSearchOptions& options) {
  CheckSearchable(g);
  return Searcher(g, options, /*maximize_z=*/true).Run();
}

DeltaSequence sequence_from_choices(const Graph& g, const std::vector<Vertex>& choices,
                                    SequenceMode mode) {
  CheckSearchable(g);
  DeltaSequence seq = Build(g, mode, [&](const Residual&, int step_index) -> Vertex {
    if (step_index >= static_cast<int>(choices.size())) {
      throw ParameterError("choices ran out before the residual became terminal");
    }
    return choices[step_index];
  });
  if (seq.length() - 1 != static_cast<int>(choices.size())) {
    throw ParameterError("more choices than steps: the residual became terminal after " +
                         std::to_string(seq.length() - 1) + " choices");
  }
  return seq;
}

void validate_sequence(const Graph& g, const DeltaSequence& seq) {
  if (seq.steps.size() < 2) throw IntegrityError("a sequence has at least two steps");
  Residual residual(g);
  int z = 0;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const DeltaStep& step = seq.steps[i];
    const bool last = i + 1 == seq.steps.size();
    std::vector<Vertex> isolated = residual.StripIsolated();
    if (isolated != step.isolated || step.m != static_cast<int>(isolated.size())) {
      Mismatch(i, "isolated vertices differ from the residual graph");
    }
    const int r = i == 0 ? -1 : residual.TerminalClique();
    if (last != (r >= 0)) {
      Mismatch(i, last ? "residual is not terminal at the last step"
                       : "residual is already terminal");
    }
    if (step.y != step.m + 1 - step.d) Mismatch(i, "y != m + 1 - d");
    if (i > 0) {
      z += step.y;
      if (seq.prefix_sums.size() < i || seq.prefix_sums[i - 1] != z) {
        Mismatch(i, "stored prefix sum differs from the recomputed one");
      }
    }
    if (last) {
      const bool clique = r >= 2;
      if (clique != (seq.terminal == TerminalKind::kClique) ||
          seq.terminal_m != step.m || seq.terminal_r != (clique ? r : 0)) {
        Mismatch(i, "terminal description differs from the residual graph");
      }
      if (!clique) {
        if (step.chosen != -1 || step.d != 0) Mismatch(i, "m K1 terminal has a choice");
        break;
      }
      std::vector<Vertex> clique_members{step.chosen};
      clique_members.insert(clique_members.end(), step.removed_neighbors.begin(),
                            step.removed_neighbors.end());
      if (clique_members != residual.Alive() || step.d != r - 1) {
        Mismatch(i, "terminal clique differs from the residual graph");
      }
      break;
    }
    if (step.chosen < 0 || step.chosen >= g.order() || !residual.alive(step.chosen)) {
      Mismatch(i, "chosen vertex is not in the residual graph");
    }
    if (step.d != residual.degree(step.chosen) ||
        step.removed_neighbors != residual.AliveNeighbors(step.chosen)) {
      Mismatch(i, "chosen vertex degree or neighbors differ from the residual graph");
    }
    if (seq.mode == SequenceMode::kMinDegree && step.d != residual.MinDegree()) {
      Mismatch(i, "chosen vertex does not have minimum degree");
    }
    for (Vertex w : step.removed_neighbors) residual.Remove(w);
    residual.Remove(step.chosen);
  }
  if (seq.steps.front().m != 0) Mismatch(0, "the first step removes isolated vertices");
  if (seq.prefix_sums.size() + 1 != seq.steps.size()) {
    throw IntegrityError("prefix sum count does not match the step count");
  }
}

Numbering label_from_sequence(const Graph& g, const DeltaSequence& seq) {
  validate_sequence(g, seq);
  if (!seq.satisfies_condition()) {
    throw PreconditionError("sequence has a negative prefix sum (Z = " +
                            std::to_string(seq.min_prefix()) + ")");
  }
  const int p = g.order();
  std::vector<int> labels(p, 0);
  int high = p;
  int low = 1;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const DeltaStep& step = seq.steps[i];
    for (Vertex v : step.isolated) labels[v] = high--;
    if (step.chosen < 0) continue;
    const bool terminal_clique = i + 1 == seq.steps.size();
    if (terminal_clique) {
      labels[step.chosen] = low++;
      for (Vertex w : step.removed_neighbors) labels[w] = low++;
    } else {
      labels[step.chosen] = high--;
      for (Vertex w : step.removed_neighbors) labels[w] = low++;
    }
  }
  Numbering f(std::move(labels));
  const int s = strength_of(g, f);
  if (s != p + seq.first_degree()) {
    throw IntegrityError("constructed labeling has strength " + std::to_string(s) +
                         ", expected p + d_1 = " + std::to_string(p + seq.first_degree()));
  }
  return f;
}

PendantProfile pendant_profile(const Graph& forest) {
  PendantProfile out;
  std::vector<char> support(forest.order(), 0);
  for (Vertex v = 0; v < forest.order(); ++v) {
    if (forest.degree(v) != 1) continue;
    const Vertex w = forest.neighbors(v).front();
    if (forest.degree(w) >= 2) {
      out.pendants.push_back(v);
      support[w] = 1;
    }
  }
  for (Vertex v = 0; v < forest.order(); ++v) {
    if (support[v]) out.supports.push_back(v);
  }
  return out;
}

DeltaSequence forest_delta_sequence(const Graph& t) {
  if (!is_forest(t)) throw PreconditionError("forest_delta_sequence: input has a cycle");
  if (t.order() < 3) throw PreconditionError("forest_delta_sequence needs order >= 3");
  if (min_degree(t) < 1) {
    throw PreconditionError("forest_delta_sequence: input has isolated vertices");
  }
  return Build(t, SequenceMode::kMinDegree, [](const Residual& residual, int) {
    Vertex fallback = -1;
    for (Vertex v : residual.Alive()) {
      if (residual.degree(v) != 1) continue;
      if (fallback < 0) fallback = v;
      const auto around = residual.AliveNeighbors(v);
      if (residual.degree(around.front()) >= 2) return v;
    }
    return fallback;
  });
}

int composition_deficit(const DeltaSequence& h_seq, const DeltaSequence& t_seq) {
  return h_seq.first_degree() - h_seq.min_prefix() - t_seq.final_prefix();
}

Composition compose_h_plus_t(const Graph& h, const DeltaSequence& h_seq, const Graph& t,
                             const DeltaSequence& t_seq) {
  validate_sequence(h, h_seq);
  validate_sequence(t, t_seq);
  if (!t_seq.satisfies_condition()) {
    throw PreconditionError("the T sequence has a negative prefix sum");
  }
  const int z_min = h_seq.min_prefix();
  if (z_min > 0) {
    throw PreconditionError("Z = " + std::to_string(z_min) +
                            " > 0: the H sequence already satisfies the condition");
  }
  const int deficit = composition_deficit(h_seq, t_seq);
  if (deficit > 0) {
    throw PreconditionError("z_t(T) = " + std::to_string(t_seq.final_prefix()) +
                            " < d_H - Z = " +
                            std::to_string(h_seq.first_degree() - z_min) +
                            " (deficit " + std::to_string(deficit) + ")");
  }

  const std::vector<Graph> parts{h, t};
  Composition out;
  out.graph = disjoint_union(parts);
  const int offset = h.order();
  auto shifted = [offset](DeltaStep step) {
    for (Vertex& v : step.isolated) v += offset;
    for (Vertex& v : step.removed_neighbors) v += offset;
    if (step.chosen >= 0) step.chosen += offset;
    return step;
  };

  std::vector<DeltaStep> steps;
  for (std::size_t i = 0; i + 1 < t_seq.steps.size(); ++i) {
    steps.push_back(shifted(t_seq.steps[i]));
  }
  DeltaStep t_last = shifted(t_seq.steps.back());
  if (t_seq.terminal == TerminalKind::kIsolated) {
    // m K1 + H: drop T's leftover isolated vertices, then take H's first choice.
    DeltaStep joined = h_seq.steps.front();
    joined.m = t_last.m;
    joined.isolated = t_last.isolated;
    joined.y = joined.m + 1 - joined.d;
    steps.push_back(std::move(joined));
  } else {
    // m K1 + K_r + H: delete the clique through one of its vertices, then H.
    steps.push_back(std::move(t_last));
    steps.push_back(h_seq.steps.front());
  }
  for (std::size_t i = 1; i < h_seq.steps.size(); ++i) steps.push_back(h_seq.steps[i]);
  out.sequence = Assemble(std::move(steps), SequenceMode::kAnyDegree);
  validate_sequence(out.graph, out.sequence);
  if (!out.sequence.satisfies_condition()) {
    throw IntegrityError("spliced sequence violates the prefix condition");
  }
  return out;
}

Composition complete_bipartite_with_sequence(int m, int n) {
  if (m < 1 || n < m || n < 2) {
    throw ParameterError("K_{m,n} sequence needs n >= m >= 1 and n >= 2");
  }
  Composition out;
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  }
  out.graph = Graph::FromEdges(m + n, edges);
  out.sequence = sequence_from_choices(out.graph, {m}, SequenceMode::kMinDegree);
  return out;
}

EmbedResult embed_minimal(const Graph& h, const EmbedOptions& options) {
  if (h.order() == 0 || min_degree(h) < 1) {
    throw PreconditionError("embed_minimal needs min degree >= 1");
  }
  const int p = h.order();
  const int delta = min_degree(h);
  EmbedResult out;
  out.graph = h;

  auto certify = [&](const Graph& g, const DeltaSequence& seq, std::string method) {
    StrengthCertificate c;
    c.graph = g;
    c.witness = label_from_sequence(g, seq).labels();
    c.claimed = g.order() + seq.first_degree();
    c.lower_bound_name = "p+delta";
    c.lower_bound_value = g.order() + min_degree(g);
    c.method = std::move(method);
    return c;
  };

  if (delta == p - 1) {
    // K_p: every numbering has strength 2p - 1 = p + δ.
    StrengthCertificate c;
    c.graph = h;
    for (int l = 1; l <= p; ++l) c.witness.push_back(l);
    c.claimed = 2 * p - 1;
    c.lower_bound_name = "p+delta";
    c.lower_bound_value = p + delta;
    c.method = "complete graph";
    out.certificate = std::move(c);
    return out;
  }

  SequenceSearchOptions search;
  search.budget = options.budget;
  search.mode = SequenceMode::kMinDegree;
  auto direct = find_delta_sequence(h, search);
  if (direct.status == SearchStatus::kFound) {
    out.sequence = *direct.sequence;
    out.certificate = certify(h, out.sequence, "delta-sequence");
    return out;
  }
  if (direct.status == SearchStatus::kBudgetHit) {
    out.status = SearchStatus::kBudgetHit;
    return out;
  }
  search.mode = SequenceMode::kAnyDegree;
  search.first_at_min_degree = true;
  auto relaxed = find_delta_sequence(h, search);
  if (relaxed.status == SearchStatus::kFound) {
    out.sequence = *relaxed.sequence;
    out.certificate = certify(h, out.sequence, "d-sequence");
    return out;
  }
  if (relaxed.status == SearchStatus::kBudgetHit) {
    out.status = SearchStatus::kBudgetHit;
    return out;
  }

  const auto best = best_prefix_sequence(h, search);
  const DeltaSequence& h_seq = *best.sequence;
  out.h_min_prefix = h_seq.min_prefix();
  out.attached_m = delta;
  out.attached_n = std::max(h_seq.first_degree() - out.h_min_prefix, delta);
  const auto attached = complete_bipartite_with_sequence(out.attached_m, out.attached_n);
  Composition joined = compose_h_plus_t(h, h_seq, attached.graph, attached.sequence);
  out.extended = true;
  out.graph = joined.graph;
  out.sequence = joined.sequence;
  if (options.connect) {
    const DeltaStep& t_last_choice = attached.sequence.steps[attached.sequence.length() - 2];
    const Vertex v = t_last_choice.removed_neighbors.front() + p;
    const Vertex u = h_seq.steps.front().chosen == 0 ? 1 : 0;
    std::vector<Edge> edges = joined.graph.edges();
    edges.emplace_back(u, v);
    out.graph = Graph::FromEdges(joined.graph.order(), edges);
    validate_sequence(out.graph, out.sequence);
  }
  if (min_degree(out.graph) != delta) {
    throw IntegrityError("extension changed the minimum degree");
  }
  out.certificate = certify(out.graph, out.sequence,
                            "H + K_{" + std::to_string(out.attached_m) + "," +
                                std::to_string(out.attached_n) + "} composition");
  return out;
}

std::string render_arrow_chain(const DeltaSequence& seq) {
  const char* degree_symbol = seq.mode == SequenceMode::kMinDegree ? "δ" : "d";
  std::string out;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const DeltaStep& step = seq.steps[i];
    const bool last = i + 1 == seq.steps.size();
    const std::string index = std::to_string(i + 1);
    if (i) out += " -> ";
    if (last) {
      if (seq.terminal == TerminalKind::kClique) {
        if (step.m > 0) out += std::to_string(step.m) + "K1+";
        out += "K" + std::to_string(seq.terminal_r);
      } else {
        out += std::to_string(step.m) + "K1";
      }
    } else {
      if (step.m > 0) out += std::to_string(step.m) + "K1+";
      out += "G" + index;
    }
    out += "[";
    if (!last || seq.terminal == TerminalKind::kClique) {
      out += std::string(degree_symbol) + "=" + std::to_string(step.d);
      if (i) out += ",";
    }
    if (i) {
      out += "m=" + std::to_string(step.m) + ",z=" + std::to_string(seq.prefix_sums[i - 1]);
    }
    out += "]";
  }
  return out;
}

}  // namespace strength
