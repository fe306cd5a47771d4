#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circham/cert.hpp"
#include "circham/zmod.hpp"

namespace circham {

/// Generator-use count vectors (r, s, t) that a hamiltonian circuit of an
/// outdegree-3 spec could have: r + s + t == n and r*g0 + s*g1 + t*g2 == 0 mod n.
struct FeasibleCounts {
  std::vector<std::array<int, 3>> triples;

  bool contains(const std::array<int, 3>& counts) const;
};

FeasibleCounts feasible_counts(const CirculantSpec& spec);

/// Name of the environment variable holding the default node budget.
inline constexpr const char* kNodeBudgetEnv = "CIRCHAM_SEARCH_NODE_BUDGET";

struct SearchOptions {
  /// Node-expansion limit; nullopt means unlimited.
  std::optional<std::uint64_t> node_budget;
  /// Count-vector pruning. Off only for cross-checking the pruner.
  bool count_pruning = true;

  /// Budget taken from CIRCHAM_SEARCH_NODE_BUDGET (unset or empty = unlimited).
  /// Throws InvalidInput on a malformed value.
  static SearchOptions from_environment();
};

struct SearchOutcome {
  enum class Verdict { found, none_exhaustive, budget_exceeded };

  Verdict verdict = Verdict::none_exhaustive;
  std::optional<CircuitCert> cert;
  std::uint64_t nodes_expanded = 0;
  /// Free-form remark, e.g. why the search ended before expanding anything.
  std::string note;
};

const char* to_string(SearchOutcome::Verdict verdict);

/// Exact hamiltonian-circuit search anchored at vertex 0. A none_exhaustive
/// verdict is a proof of non-existence.
SearchOutcome find_hamiltonian(const CirculantSpec& spec, const SearchOptions& options = {});

/// Every hamiltonian circuit through vertex 0, in depth-first generator
/// order, stopping after `limit` circuits. Budget exhaustion throws
/// BudgetExceeded.
std::vector<CircuitCert> enumerate_hamiltonian(const CirculantSpec& spec, std::size_t limit,
                                               const SearchOptions& options = {});

/// Euler circuit of the multigraph Cay(Z_k; a, b) (both arcs kept even when
/// a == b mod k) as 2k arc labels, each equal to a or b. Starts at vertex 0.
/// Throws InvalidInput when the multigraph is disconnected.
std::vector<int> euler_circuit(int k, int a, int b);

struct CertCheck {
  bool ok = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Independent certificate checker: every step is a generator, the n
/// partial sums are distinct and the walk closes.
CertCheck verify_cert(const CirculantSpec& spec, const CircuitCert& cert);

}  // namespace circham
