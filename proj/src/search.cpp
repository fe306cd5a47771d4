#include "circham/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "circham/errors.hpp"

namespace circham {

bool FeasibleCounts::contains(const std::array<int, 3>& counts) const {
  return std::find(triples.begin(), triples.end(), counts) != triples.end();
}

FeasibleCounts feasible_counts(const CirculantSpec& spec) {
  if (spec.outdegree() != 3) throw InvalidInput("feasible_counts needs an outdegree-3 spec");
  const int n = spec.n();
  const auto& g = spec.gens();
  FeasibleCounts out;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; r + s <= n; ++s) {
      const int t = n - r - s;
      const std::int64_t weighted = static_cast<std::int64_t>(r) * g[0] +
                                    static_cast<std::int64_t>(s) * g[1] +
                                    static_cast<std::int64_t>(t) * g[2];
      if (weighted % n == 0) out.triples.push_back({r, s, t});
    }
  }
  return out;
}

SearchOptions SearchOptions::from_environment() {
  SearchOptions options;
  const char* raw = std::getenv(kNodeBudgetEnv);
  if (raw == nullptr || *raw == '\0') return options;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || raw[0] == '-') {
    throw InvalidInput(std::string(kNodeBudgetEnv) + " must be a nonnegative integer, got '" +
                       raw + "'");
  }
  options.node_budget = value;
  return options;
}

const char* to_string(SearchOutcome::Verdict verdict) {
  switch (verdict) {
    case SearchOutcome::Verdict::found: return "found";
    case SearchOutcome::Verdict::none_exhaustive: return "none_exhaustive";
    case SearchOutcome::Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

namespace {

struct BudgetSignal {};

// Depth-first extension of a path from vertex 0. Besides the visited set it
// keeps, for every vertex, the number of unvisited in- and out-neighbours,
// which gives cheap dead-end tests per node:
//  - an unvisited vertex that can no longer be entered,
//  - more than one unvisited vertex whose only exit is the start,
//  - the start vertex losing its last possible predecessor,
// plus forced moves (an out-neighbour of the endpoint with no other entry).
// On top of that it maintains a perfect matching between the remaining
// sources (unvisited vertices and the endpoint) and the remaining targets
// (unvisited vertices and the start): a path can only be completed to a
// circuit when its successor map can be completed to a bijection.
class CircuitSearch {
 public:
  using Visitor = std::function<bool(const std::vector<int>&)>;

  CircuitSearch(const CirculantSpec& spec, const SearchOptions& options)
      : n_(spec.n()),
        m_(spec.outdegree()),
        gens_(spec.gens()),
        options_(options),
        is_gen_(n_, 0),
        visited_(n_, 0),
        unvisited_in_(n_, 0),
        unvisited_out_(n_, 0),
        exits_to_start_(n_, 0),
        mate_of_source_(n_, -1),
        mate_of_target_(n_, -1),
        stamp_(n_, 0),
        saved_matchings_(static_cast<std::size_t>(2 * n_) * (n_ + 1), -1) {
    for (int g : gens_) is_gen_[g] = 1;
    for (int g : gens_) exits_to_start_[mod(-g, n_)] = 1;
    if (options_.count_pruning) build_return_table();
  }

  std::uint64_t nodes() const { return nodes_; }

  // Runs the search; `visit` receives the generator values of each circuit
  // and returns false to stop.
  void run(const Visitor& visit) {
    visit_ = &visit;
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(unvisited_in_.begin(), unvisited_in_.end(), m_);
    std::fill(unvisited_out_.begin(), unvisited_out_.end(), m_);
    dead_exits_ = 0;
    steps_.clear();
    mark_visited(0);
    pos_ = 0;
    remaining_ = n_ - 1;
    if (!initial_matching()) return;
    extend(1);
  }

 private:
  void build_return_table() {
    // returnable_[r * n + x]: x is a sum of exactly r generators. Equivalent
    // to "some feasible count vector dominates the counts used so far".
    returnable_.assign(static_cast<std::size_t>(n_ + 1) * n_, 0);
    returnable_[0] = 1;
    for (int r = 1; r <= n_; ++r) {
      for (int x = 0; x < n_; ++x) {
        if (!returnable_[static_cast<std::size_t>(r - 1) * n_ + x]) continue;
        for (int g : gens_) returnable_[static_cast<std::size_t>(r) * n_ + mod(x + g, n_)] = 1;
      }
    }
  }

  bool can_return(int pos, int steps_left) const {
    return returnable_[static_cast<std::size_t>(steps_left) * n_ + mod(-pos, n_)] != 0;
  }

  int add(int v, int g) const {
    int w = v + g;
    return w >= n_ ? w - n_ : w;
  }
  int sub(int v, int g) const {
    int w = v - g;
    return w < 0 ? w + n_ : w;
  }

  void mark_visited(int x) {
    visited_[x] = 1;
    if (unvisited_out_[x] == 0) --dead_exits_;
    for (int g : gens_) {
      --unvisited_in_[add(x, g)];
      const int q = sub(x, g);
      if (--unvisited_out_[q] == 0 && !visited_[q]) ++dead_exits_;
    }
  }

  void unmark_visited(int x) {
    for (int g : gens_) {
      ++unvisited_in_[add(x, g)];
      const int q = sub(x, g);
      if (unvisited_out_[q]++ == 0 && !visited_[q]) --dead_exits_;
    }
    if (unvisited_out_[x] == 0) ++dead_exits_;
    visited_[x] = 0;
  }

  // Dead-end tests after the endpoint moved from `from` to `to`; `depth`
  // counts visited vertices including `to`.
  bool consistent(int from, int to, int depth) const {
    if (depth == n_) return true;
    if (dead_exits_ > 1) return false;
    for (int g : gens_) {
      const int q = sub(to, g);
      if (!visited_[q] && unvisited_out_[q] == 0 && !exits_to_start_[q]) return false;
    }
    for (int g : gens_) {
      const int w = add(from, g);
      if (!visited_[w] && unvisited_in_[w] == 0 && !is_gen_[sub(w, to)]) return false;
    }
    if (unvisited_in_[0] == 0 && !exits_to_start_[to]) return false;
    return true;
  }

  // --- successor matching -------------------------------------------------

  bool is_target(int w) const { return !visited_[w] || w == 0; }

  // The endpoint may only return to the start once nothing else is left.
  bool usable(int source, int target) const {
    return is_target(target) && !(target == 0 && source == pos_ && remaining_ > 0);
  }

  bool augment(int source) {
    for (int g : gens_) {
      const int w = add(source, g);
      if (stamp_[w] == epoch_ || !usable(source, w)) continue;
      stamp_[w] = epoch_;
      if (mate_of_target_[w] < 0 || augment(mate_of_target_[w])) {
        mate_of_target_[w] = source;
        mate_of_source_[source] = w;
        return true;
      }
    }
    return false;
  }

  bool augment_from(int source) {
    ++epoch_;
    return augment(source);
  }

  bool initial_matching() {
    std::fill(mate_of_source_.begin(), mate_of_source_.end(), -1);
    std::fill(mate_of_target_.begin(), mate_of_target_.end(), -1);
    for (int v = 0; v < n_; ++v) {
      if (!augment_from(v)) return false;
    }
    return true;
  }

  void save_matching(int depth) {
    auto* slot = &saved_matchings_[static_cast<std::size_t>(2 * n_) * depth];
    std::copy(mate_of_source_.begin(), mate_of_source_.end(), slot);
    std::copy(mate_of_target_.begin(), mate_of_target_.end(), slot + n_);
  }

  void restore_matching(int depth) {
    const auto* slot = &saved_matchings_[static_cast<std::size_t>(2 * n_) * depth];
    std::copy(slot, slot + n_, mate_of_source_.begin());
    std::copy(slot + n_, slot + 2 * n_, mate_of_target_.begin());
  }

  // Commits the arc from -> to (already marked visited, pos_ == to) and
  // repairs the matching. False when no perfect matching survives.
  bool commit_arc(int from, int to) {
    const int old_target = mate_of_source_[from];
    const int old_source = mate_of_target_[to];
    mate_of_source_[from] = to;
    mate_of_target_[to] = from;
    int free_sources[2];
    int free_count = 0;
    if (old_target != to) {
      mate_of_target_[old_target] = -1;
      mate_of_source_[old_source] = -1;
      free_sources[free_count++] = old_source;
    }
    if (remaining_ > 0 && mate_of_source_[to] == 0) {
      mate_of_source_[to] = -1;
      mate_of_target_[0] = -1;
      free_sources[free_count++] = to;
    }
    for (int i = 0; i < free_count; ++i) {
      if (mate_of_source_[free_sources[i]] < 0 && !augment_from(free_sources[i])) return false;
    }
    return true;
  }

  // Returns false when the visitor asked to stop. depth == visited count.
  bool extend(int depth) {
    ++nodes_;
    if (options_.node_budget && nodes_ > *options_.node_budget) throw BudgetSignal{};
    const int pos = pos_;
    if (depth == n_) {
      const int back = mod(-pos, n_);
      if (!is_gen_[back]) return true;
      steps_.push_back(back);
      const bool go_on = (*visit_)(steps_);
      steps_.pop_back();
      return go_on;
    }
    if (options_.count_pruning && !can_return(pos, n_ - depth + 1)) return true;

    int forced = -1;
    for (int g : gens_) {
      const int w = add(pos, g);
      if (!visited_[w] && unvisited_in_[w] == 0) {
        if (forced >= 0) return true;
        forced = g;
      }
    }
    save_matching(depth);
    for (int g : gens_) {
      if (forced >= 0 && g != forced) continue;
      const int next = add(pos, g);
      if (visited_[next]) continue;
      mark_visited(next);
      pos_ = next;
      --remaining_;
      steps_.push_back(g);
      bool go_on = true;
      if (consistent(pos, next, depth + 1) && commit_arc(pos, next)) go_on = extend(depth + 1);
      steps_.pop_back();
      ++remaining_;
      pos_ = pos;
      unmark_visited(next);
      restore_matching(depth);
      if (!go_on) return false;
    }
    return true;
  }

  int n_;
  int m_;
  std::vector<int> gens_;
  SearchOptions options_;
  std::vector<std::uint8_t> is_gen_;
  std::vector<std::uint8_t> visited_;
  std::vector<int> unvisited_in_;
  std::vector<int> unvisited_out_;
  std::vector<std::uint8_t> exits_to_start_;
  std::vector<std::uint8_t> returnable_;
  std::vector<int> mate_of_source_;
  std::vector<int> mate_of_target_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<int> saved_matchings_;
  int dead_exits_ = 0;
  int pos_ = 0;
  int remaining_ = 0;
  std::vector<int> steps_;
  std::uint64_t nodes_ = 0;
  const Visitor* visit_ = nullptr;
};

}  // namespace

SearchOutcome find_hamiltonian(const CirculantSpec& spec, const SearchOptions& options) {
  SearchOutcome outcome;
  if (!is_connected(spec)) {
    outcome.verdict = SearchOutcome::Verdict::none_exhaustive;
    outcome.note = "disconnected";
    return outcome;
  }
  CircuitSearch search(spec, options);
  std::optional<CircuitCert> found;
  try {
    search.run([&](const std::vector<int>& steps) {
      found = CircuitCert{0, steps};
      return false;
    });
  } catch (const BudgetSignal&) {
    outcome.verdict = SearchOutcome::Verdict::budget_exceeded;
    outcome.nodes_expanded = search.nodes();
    return outcome;
  }
  outcome.nodes_expanded = search.nodes();
  if (found) {
    outcome.verdict = SearchOutcome::Verdict::found;
    outcome.cert = std::move(found);
  } else {
    outcome.verdict = SearchOutcome::Verdict::none_exhaustive;
  }
  return outcome;
}

std::vector<CircuitCert> enumerate_hamiltonian(const CirculantSpec& spec, std::size_t limit,
                                               const SearchOptions& options) {
  std::vector<CircuitCert> out;
  if (limit == 0 || !is_connected(spec)) return out;
  CircuitSearch search(spec, options);
  try {
    search.run([&](const std::vector<int>& steps) {
      out.push_back(CircuitCert{0, steps});
      return out.size() < limit;
    });
  } catch (const BudgetSignal&) {
    throw BudgetExceeded("node budget exhausted after " + std::to_string(search.nodes()) +
                         " expansions while enumerating circuits of " + spec.to_string());
  }
  return out;
}

std::vector<int> euler_circuit(int k, int a, int b) {
  if (k < 1) throw InvalidInput("euler_circuit needs a positive modulus");
  const int ar = mod(a, k);
  const int br = mod(b, k);
  if (std::gcd(std::gcd(ar, br), k) != 1 && k > 1) {
    throw InvalidInput("Cay(Z_" + std::to_string(k) + "; " + std::to_string(a) + ", " +
                       std::to_string(b) + ") is disconnected");
  }
  const std::array<int, 2> labels{a, b};
  const std::array<int, 2> shifts{ar, br};
  // Hierholzer: next_arc[v] is the next unused out-arc (0 = a, 1 = b).
  std::vector<int> next_arc(k, 0);
  std::vector<std::pair<int, int>> stack{{0, -1}};  // (vertex, label index of arc into it)
  std::vector<int> circuit;
  while (!stack.empty()) {
    auto [v, via] = stack.back();
    if (next_arc[v] < 2) {
      const int arc = next_arc[v]++;
      stack.emplace_back((v + shifts[arc]) % k, arc);
    } else {
      stack.pop_back();
      if (via >= 0) circuit.push_back(labels[via]);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (static_cast<int>(circuit.size()) != 2 * k) {
    throw ContractViolation("Euler circuit has length " + std::to_string(circuit.size()) +
                            ", expected " + std::to_string(2 * k));
  }
  return circuit;
}

CertCheck verify_cert(const CirculantSpec& spec, const CircuitCert& cert) {
  const int n = spec.n();
  if (static_cast<int>(cert.steps.size()) != n) {
    return {false, "expected " + std::to_string(n) + " steps, got " +
                       std::to_string(cert.steps.size())};
  }
  if (cert.start < 0 || cert.start >= n) {
    return {false, "start vertex " + std::to_string(cert.start) + " outside Z_" +
                       std::to_string(n)};
  }
  std::vector<bool> seen(n, false);
  std::int64_t position = cert.start;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const int step = cert.steps[i];
    if (!spec.contains(step)) {
      return {false, "step " + std::to_string(i) + " uses " + std::to_string(step) +
                         ", which is not a generator"};
    }
    const int v = mod(position, n);
    if (seen[v]) return {false, "vertex " + std::to_string(v) + " visited twice"};
    seen[v] = true;
    position += step;
  }
  if (mod(position, n) != cert.start) return {false, "walk does not close at the start vertex"};
  return {true, {}};
}

}  // namespace circham
