// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "circham/census.hpp"
#include "circham/constructors.hpp"
#include "circham/criteria.hpp"
#include "circham/errors.hpp"
#include "circham/factor.hpp"
#include "circham/search.hpp"

using namespace circham;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "criterion " << id << ": " << (outcome.pass ? "PASS" : "FAIL") << " ("
       << outcome.detail << "; " << seconds_since(t0) << " s)";
  std::cout << line.str() << std::endl;
  if (!outcome.pass) ++failures;
}

bool found(const CirculantSpec& spec) {
  return find_hamiltonian(spec).verdict == SearchOutcome::Verdict::found;
}

Outcome figure1_census() {
  const auto path = std::filesystem::temp_directory_path() / "circham_acceptance_census.jsonl";
  std::filesystem::remove(path);
  CensusOptions options;
  options.n_min = 3;
  options.n_max = 47;
  options.outdegree = 3;
  options.classify.policy = VerifyPolicy::search;
  options.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  options.out = path.string();
  const auto t0 = Clock::now();
  const CensusSummary summary = run_census(options);
  const double elapsed = seconds_since(t0);

  const CensusFile file = read_census(path.string());
  std::size_t nonham = 0;
  std::size_t bad_certs = 0;
  for (const auto& r : file.records) {
    if (r.status == Status::non_hamiltonian) ++nonham;
    if (r.status == Status::hamiltonian && !(r.cert && verify_cert(r.spec, *r.cert).ok)) {
      ++bad_certs;
    }
  }
  const Figure1Report report = figure1_check(file.records);
  std::ostringstream detail;
  detail << summary.total << " classes, " << nonham << " non-hamiltonian, " << report.matched
         << "/30 matched, " << report.missing.size() << " missing, " << report.extra.size()
         << " extra, " << bad_certs << " bad certificates";
  std::filesystem::remove(path);
  return {report.pass && nonham == 30 && report.extra.empty() && bad_certs == 0 &&
              elapsed <= 600.0,
          detail.str()};
}

Outcome cor14_instances() {
  bool pass = true;
  std::ostringstream detail;
  for (int k = 1; k <= 3; ++k) {
    const CirculantSpec spec = CirculantSpec::make(12 * k, {6 * k, 6 * k + 2, 6 * k + 3});
    const auto t0 = Clock::now();
    const SearchOutcome o = find_hamiltonian(spec);
    const double elapsed = seconds_since(t0);
    const bool ok = o.verdict == SearchOutcome::Verdict::none_exhaustive && elapsed <= 60.0;
    pass = pass && ok;
    detail << (k > 1 ? ", " : "") << spec.to_string() << (ok ? " none" : " NOT none") << " in "
           << elapsed << " s";
  }
  return {pass, detail.str()};
}

Outcome thm46_versus_search() {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  for (int k = 1; k <= 16; ++k) {
    for (const HalfSpec& h : all_half_specs(k)) {
      ++checked;
      if (thm46_ham_bullet(h).has_value() != found(h.spec())) ++disagreements;
    }
  }
  return {disagreements == 0 && checked > 0, std::to_string(checked) + " HalfSpecs, " +
                                                  std::to_string(disagreements) +
                                                  " disagreements"};
}

Outcome rankin_versus_search() {
  std::size_t checked = 0;
  std::size_t disagreements = 0;
  for (int n = 3; n <= 40; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (std::gcd(std::gcd(a, b), n) != 1) continue;
        ++checked;
        if (rankin_hamiltonian(n, a, b).has_value() != found(CirculantSpec::make(n, {a, b}))) {
          ++disagreements;
        }
      }
    }
  }
  return {disagreements == 0 && checked > 0, std::to_string(checked) + " specs, " +
                                                  std::to_string(disagreements) +
                                                  " disagreements"};
}

Outcome constructor_soundness() {
  const auto t0 = Clock::now();
  std::size_t built = 0;
  std::size_t failed = 0;
  for (int k = 1; k <= 30; ++k) {
    for (const HalfSpec& h : all_half_specs(k)) {
      if (!thm46_ham_bullet(h)) continue;
      ++built;
      try {
        if (!verify_cert(h.spec(), build_thm46(h).cert).ok) ++failed;
      } catch (const std::exception&) {
        ++failed;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {failed == 0 && elapsed <= 300.0,
          std::to_string(built) + " constructions, " + std::to_string(failed) + " failures"};
}

Outcome h0_parity() {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  for (int k = 1; k <= 30; ++k) {
    for (const HalfSpec& h : all_half_specs(k)) {
      if (!h.connected()) continue;
      ++checked;
      const bool odd = components(h0_build(h).factor).count % 2 == 1;
      if (odd != lemma44_parity(h)) ++mismatches;
    }
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " HalfSpecs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome class_e_parity() {
  std::size_t specs = 0;
  std::size_t mixed = 0;
  for (int k = 1; k <= 10; ++k) {
    for (const HalfSpec& h : all_half_specs(k)) {
      ++specs;
      int parity = -1;
      bool constant = true;
      for (std::uint32_t mask = 0; mask < (1u << k) && constant; ++mask) {
        TransversalBits bits;
        for (int c = 0; c < k; ++c) bits.bits.push_back((mask >> c) & 1u);
        const int p = components(e_from_transversal(h, bits)).count % 2;
        if (parity < 0) parity = p;
        constant = p == parity;
      }
      if (!constant) ++mixed;
    }
  }
  return {mixed == 0 && specs > 0,
          std::to_string(specs) + " HalfSpecs, " + std::to_string(mixed) + " with mixed parity"};
}

Outcome rewiring_properties() {
  std::mt19937 rng(2024);
  const auto random_member = [&](HalfSpec& h) {
    const int k = std::uniform_int_distribution<int>(2, 30)(rng);
    const auto specs = all_half_specs(k);
    h = specs[std::uniform_int_distribution<std::size_t>(0, specs.size() - 1)(rng)];
    TransversalBits bits;
    for (int c = 0; c < k; ++c) bits.bits.push_back(rng() & 1u);
    return e_from_transversal(h, bits);
  };

  int rotations = 0;
  int parity_breaks = 0;
  while (rotations < 10000) {
    HalfSpec h{};
    const OneFactor f = random_member(h);
    const int n = 2 * h.k;
    const auto gens = h.spec().gens();
    const auto pred = f.predecessors();
    const Vertex u1 = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const Vertex u2 = pred[mod(u1 + gens[rng() % gens.size()], n)];
    const Vertex u3 = pred[mod(u2 + gens[rng() % gens.size()], n)];
    Rotation r{f, {}};
    try {
      r = rotate3(f, u1, u2, u3);
    } catch (const InvalidInput&) {
      continue;
    }
    ++rotations;
    if (components(r.factor).count % 2 != components(f).count % 2) ++parity_breaks;
  }

  // Swaps exchange the arcs out of a coset {w, w+k}; with a+k added every
  // class-E member admits a swap at every coset.
  int swaps = 0;
  int bad_swaps = 0;
  while (swaps < 1000) {
    HalfSpec h{};
    const OneFactor f = random_member(h);
    if (h.a == h.k) continue;
    const int n = 2 * h.k;
    const CirculantSpec wide = CirculantSpec::make(n, {h.a, h.a + h.k, h.b, h.b + h.k});
    std::vector<int> travel(n);
    for (int v = 0; v < n; ++v) travel[v] = f.travel(v);
    const OneFactor g = OneFactor::from_generators(wide, travel);
    const Vertex w = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const OneFactor s = swap_in_arcs(g, w, mod(w + h.k, n));
    ++swaps;
    if (std::abs(components(s).count - components(g).count) != 1) ++bad_swaps;
  }
  return {parity_breaks == 0 && bad_swaps == 0,
          std::to_string(rotations) + " rotations with " + std::to_string(parity_breaks) +
              " parity changes, " + std::to_string(swaps) + " swaps with " +
              std::to_string(bad_swaps) + " count changes other than 1"};
}

Outcome circuits_in_class_e() {
  constexpr std::size_t kLimit = std::size_t{1} << 22;
  std::vector<HalfSpec> specs{HalfSpec{2, 3, 6}};
  for (int k = 1; k <= 8; ++k) {
    for (const HalfSpec& h : all_half_specs(k)) {
      if (std::gcd(mod(h.a - h.b, 2 * k), k) == 1 && std::gcd(h.a, 2 * k) != 1 &&
          std::gcd(h.b, k) != 1) {
        specs.push_back(h);
      }
    }
  }
  std::size_t circuits = 0;
  std::size_t outside = 0;
  bool truncated = false;
  for (const HalfSpec& h : specs) {
    const auto all = enumerate_hamiltonian(h.spec(), kLimit);
    if (all.size() >= kLimit) truncated = true;
    for (const auto& c : all) {
      ++circuits;
      if (!is_in_class_e(factor_from_cert(h.spec(), c), h)) ++outside;
    }
  }
  return {outside == 0 && !truncated && circuits > 0,
          std::to_string(specs.size()) + " digraphs, " + std::to_string(circuits) +
              " circuits, " + std::to_string(outside) + " outside E" +
              (truncated ? ", enumeration truncated" : "")};
}

Outcome euler_lifts() {
  std::mt19937 rng(99);
  int lifted = 0;
  int failed = 0;
  while (lifted < 200) {
    const int k = std::uniform_int_distribution<int>(2, 40)(rng);
    std::uniform_int_distribution<int> residue(1, 2 * k - 1);
    const int a = residue(rng);
    const int b = residue(rng);
    if (a % k == 0 || b % k == 0) continue;
    if (std::gcd(std::gcd(a % k, b % k), k) != 1) continue;
    std::set<std::int64_t> residues;
    for (int g : {a, a + k, b, b + k}) residues.insert(g % (2 * k));
    const CirculantSpec spec =
        CirculantSpec::make(2 * k, std::vector<std::int64_t>(residues.begin(), residues.end()));
    ++lifted;
    try {
      if (!verify_cert(spec, euler_lift(k, a, b, spec)).ok) ++failed;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  return {failed == 0, std::to_string(lifted) + " lifts, " + std::to_string(failed) + " failures"};
}

Outcome outdegree4_classes() {
  std::size_t classes = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> methods;
  for (const auto& spec : enumerate_classes(5, 24, 4)) {
    ++classes;
    try {
      const Classification c = prove_deg4(spec);
      ++methods[to_string(c.method)];
      if (c.status != Status::hamiltonian || !c.cert || !verify_cert(spec, *c.cert).ok) {
        ++failed;
      }
    } catch (const std::exception&) {
      ++failed;
    }
  }
  std::ostringstream detail;
  detail << classes << " classes, " << failed << " failures;";
  for (const auto& [method, count] : methods) detail << " " << method << "=" << count;
  return {failed == 0 && classes > 0, detail.str()};
}

}  // namespace

int main() {
  criterion(1, figure1_census);
  criterion(2, cor14_instances);
  criterion(3, thm46_versus_search);
  criterion(4, rankin_versus_search);
  criterion(5, constructor_soundness);
  criterion(6, h0_parity);
  criterion(7, class_e_parity);
  criterion(8, rewiring_properties);
  criterion(9, circuits_in_class_e);
  criterion(10, euler_lifts);
  criterion(11, outdegree4_classes);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
