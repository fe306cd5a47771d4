#include <doctest.h>

#include <cstdlib>
#include <map>
#include <random>

#include "circham/errors.hpp"
#include "circham/factor.hpp"
#include "circham/search.hpp"
#include "oracles.hpp"

using namespace circham;

namespace {

std::vector<CirculantSpec> connected_specs(int n, int outdegree) {
  std::vector<CirculantSpec> out;
  std::vector<std::int64_t> pick(outdegree);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == outdegree) {
      const CirculantSpec spec = CirculantSpec::make(n, pick);
      if (is_connected(spec)) out.push_back(spec);
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      choose(v + 1, depth + 1);
    }
  };
  choose(1, 0);
  return out;
}

std::array<int, 3> usage(const CirculantSpec& spec, const CircuitCert& cert) {
  std::array<int, 3> counts{0, 0, 0};
  for (int step : cert.steps) ++counts[spec.index_of(step)];
  return counts;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("feasible_counts examples") {
    const FeasibleCounts fc = feasible_counts(CirculantSpec::make(12, {2, 3, 8}));
    CHECK(fc.contains({3, 6, 3}));
    CHECK(fc.contains({0, 12, 0}));
    for (const auto& t : fc.triples) {
      CHECK(t[0] + t[1] + t[2] == 12);
      CHECK((t[0] * 2 + t[1] * 3 + t[2] * 8) % 12 == 0);
    }
    const FeasibleCounts one = feasible_counts(CirculantSpec::make(6, {1, 2, 3}));
    CHECK(one.contains({6, 0, 0}));
    CHECK_FALSE(one.contains({5, 1, 0}));
    for (const auto& t : feasible_counts(CirculantSpec::make(12, {6, 8, 9})).triples) {
      CHECK((t[0] * 6 + t[1] * 8 + t[2] * 9) % 12 == 0);
    }
    CHECK_THROWS_AS(feasible_counts(CirculantSpec::make(12, {1, 2})), InvalidInput);
  }

  TEST_CASE("find_hamiltonian examples") {
    CHECK(find_hamiltonian(CirculantSpec::make(12, {2, 3, 8})).verdict ==
          SearchOutcome::Verdict::none_exhaustive);
    const CirculantSpec yes = CirculantSpec::make(12, {2, 3, 9});
    const SearchOutcome found = find_hamiltonian(yes);
    REQUIRE(found.verdict == SearchOutcome::Verdict::found);
    CHECK(verify_cert(yes, *found.cert).ok);
    const SearchOutcome cyclic = find_hamiltonian(CirculantSpec::make(6, {1}));
    REQUIRE(cyclic.cert);
    CHECK(cyclic.cert->steps == std::vector<int>(6, 1));
    const SearchOutcome split = find_hamiltonian(CirculantSpec::make(12, {2, 4, 6}));
    CHECK(split.verdict == SearchOutcome::Verdict::none_exhaustive);
    CHECK(split.note == "disconnected");
  }

  TEST_CASE("find_hamiltonian agrees with plain backtracking for n <= 10") {
    int checked = 0;
    for (int n = 2; n <= 10; ++n) {
      for (int d = 1; d <= 3; ++d) {
        for (const auto& spec : connected_specs(n, d)) {
          const SearchOutcome o = find_hamiltonian(spec);
          const bool expected = oracle::naive_hamiltonian(n, spec.gens());
          CHECK_MESSAGE((o.verdict == SearchOutcome::Verdict::found) == expected, spec.to_string());
          if (o.cert) CHECK(verify_cert(spec, *o.cert).ok);
          ++checked;
        }
      }
    }
    CHECK(checked > 300);
  }

  TEST_CASE("verdicts are stable under unit multiplication; found certs use feasible counts") {
    for (int n = 6; n <= 24; n += 3) {
      for (const auto& spec : connected_specs(n, 3)) {
        const SearchOutcome o = find_hamiltonian(spec);
        for (int x : units_of(n)) {
          const SearchOutcome scaled = find_hamiltonian(spec.scaled(x));
          CHECK(scaled.verdict == o.verdict);
        }
        if (o.cert) CHECK(feasible_counts(spec).contains(usage(spec, *o.cert)));
      }
    }
  }

  TEST_CASE("count pruning keeps every circuit for n <= 16") {
    SearchOptions plain;
    plain.count_pruning = false;
    for (int n = 4; n <= 16; ++n) {
      for (const auto& spec : connected_specs(n, 3)) {
        if (canonical_form(spec) != spec) continue;
        const auto pruned = enumerate_hamiltonian(spec, 1u << 20);
        const auto full = enumerate_hamiltonian(spec, 1u << 20, plain);
        CHECK_MESSAGE(pruned == full, spec.to_string());
        for (const auto& cert : pruned) CHECK(feasible_counts(spec).contains(usage(spec, cert)));
      }
    }
  }

  TEST_CASE("enumerate_hamiltonian examples") {
    const HalfSpec h{2, 3, 6};
    const auto circuits = enumerate_hamiltonian(h.spec(), 100000);
    CHECK_FALSE(circuits.empty());
    for (const auto& c : circuits) {
      CHECK(verify_cert(h.spec(), c).ok);
      CHECK(is_in_class_e(factor_from_cert(h.spec(), c), h));
    }
    CHECK(enumerate_hamiltonian(CirculantSpec::make(12, {2, 3, 8}), 100).empty());
    CHECK(enumerate_hamiltonian(CirculantSpec::make(4, {1}), 100).size() == 1);
    CHECK(enumerate_hamiltonian(CirculantSpec::make(12, {1, 2, 3}), 5).size() == 5);
  }

  TEST_CASE("enumerate_hamiltonian matches the one-factor oracle on small digraphs") {
    // Circuits through 0 are the one-factors with a single cycle.
    for (int n = 3; n <= 9; ++n) {
      for (const auto& spec : connected_specs(n, 3)) {
        int single = 0;
        for (const auto& succ : oracle::all_one_factors(n, spec.gens())) {
          single += oracle::cycle_count(succ) == 1 ? 1 : 0;
        }
        CHECK(static_cast<int>(enumerate_hamiltonian(spec, 1u << 20).size()) == single);
      }
    }
  }

  TEST_CASE("node budget") {
    SearchOptions tight;
    tight.node_budget = 5;
    const CirculantSpec hard = CirculantSpec::make(36, {3, 8, 18});
    const SearchOutcome o = find_hamiltonian(hard, tight);
    CHECK(o.verdict == SearchOutcome::Verdict::budget_exceeded);
    CHECK_FALSE(o.cert);
    CHECK_THROWS_AS(enumerate_hamiltonian(hard, 10, tight), BudgetExceeded);

    ::setenv(kNodeBudgetEnv, "1234", 1);
    CHECK(SearchOptions::from_environment().node_budget == 1234u);
    ::setenv(kNodeBudgetEnv, "12x", 1);
    CHECK_THROWS_AS(SearchOptions::from_environment(), InvalidInput);
    ::setenv(kNodeBudgetEnv, "", 1);
    CHECK_FALSE(SearchOptions::from_environment().node_budget);
    ::unsetenv(kNodeBudgetEnv);
    CHECK_FALSE(SearchOptions::from_environment().node_budget);
  }

  TEST_CASE("euler_circuit uses every arc once") {
    const auto check_arcs = [](int k, int a, int b) {
      const std::vector<int> steps = euler_circuit(k, a, b);
      REQUIRE(static_cast<int>(steps.size()) == 2 * k);
      const bool doubled = mod(a, k) == mod(b, k);
      std::map<std::pair<int, int>, int> used;
      int pos = 0;
      for (int s : steps) {
        CHECK((s == a || s == b));
        ++used[{pos, doubled || s == a ? 0 : 1}];
        pos = mod(static_cast<std::int64_t>(pos) + s, k);
      }
      CHECK(pos == 0);
      CHECK(static_cast<int>(used.size()) == (doubled ? k : 2 * k));
      for (const auto& [arc, count] : used) CHECK(count == (doubled ? 2 : 1));
    };
    check_arcs(6, 2, 3);
    check_arcs(1, 1, 2);
    check_arcs(5, 2, 7);
    check_arcs(7, 3, 3);
    for (int k = 2; k <= 25; ++k) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (std::gcd(std::gcd(a, b), k) == 1) check_arcs(k, a, b);
        }
      }
    }
    CHECK_THROWS_AS(euler_circuit(6, 2, 4), InvalidInput);
  }

  TEST_CASE("verify_cert examples") {
    const CirculantSpec spec = CirculantSpec::make(12, {2, 3, 9});
    const CircuitCert good{0, {2, 9, 9, 2, 3, 2, 2, 2, 9, 2, 3, 3}};
    CHECK(verify_cert(spec, good).ok);
    CHECK(good.vertices(12) == std::vector<Vertex>{0, 2, 11, 8, 10, 1, 3, 5, 7, 4, 6, 9});
    CHECK_FALSE(verify_cert(spec, CircuitCert{0, std::vector<int>(12, 2)}).ok);
    CHECK(verify_cert(CirculantSpec::make(6, {1}), CircuitCert{0, std::vector<int>(6, 1)}).ok);
    CHECK_FALSE(verify_cert(spec, CircuitCert{0, {2, 9}}).ok);
    CHECK_FALSE(verify_cert(spec, CircuitCert{0, {2, 9, 9, 2, 3, 2, 2, 2, 9, 2, 3, 1}}).ok);
    CHECK_FALSE(verify_cert(spec, CircuitCert{12, good.steps}).ok);
    CircuitCert shifted = good;
    shifted.start = 5;
    CHECK(verify_cert(spec, shifted).ok);
  }

  TEST_CASE("certificate JSON round trip") {
    const CircuitCert cert{3, {2, 9, 9}};
    const nlohmann::json j = cert;
    CHECK(j.dump() == R"({"start":3,"steps":[2,9,9]})");
    CHECK(j.get<CircuitCert>() == cert);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"start":"x","steps":[]})").get<CircuitCert>(),
                    InvalidInput);
    CHECK_THROWS_AS(nlohmann::json::parse(R"({"steps":[1]})").get<CircuitCert>(), InvalidInput);
    CHECK(cert_from_vertices(12, {0, 2, 11, 8, 10, 1, 3, 5, 7, 4, 6, 9}).steps ==
          std::vector<int>{2, 9, 9, 2, 3, 2, 2, 2, 9, 2, 3, 3});
  }
}
