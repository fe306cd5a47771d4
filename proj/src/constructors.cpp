#include "circham/constructors.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "circham/criteria.hpp"
#include "circham/errors.hpp"

namespace circham {

namespace {

std::string triple_text(const HalfSpec& h) {
  return "(a=" + std::to_string(h.a) + ", b=" + std::to_string(h.b) + ", k=" +
         std::to_string(h.k) + ")";
}

int gcd3(int a, int b, int c) { return std::gcd(std::gcd(a, b), c); }

void require_connected(const HalfSpec& h) {
  if (!h.connected()) throw InvalidInput(h.spec().to_string() + " is disconnected");
}

}  // namespace

H0 h0_build(const HalfSpec& h) {
  require_connected(h);
  const int k = h.k;
  const int n = 2 * k;
  const int d = element_order(n, h.a);
  CosetCoords coords{d % 2 == 1 ? CoordCase::odd_d : CoordCase::even_d, d,
                     std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, 0)};
  const bool odd = coords.case_tag == CoordCase::odd_d;
  const int y_count = odd ? k / d : n / d;
  const int z_count = odd ? 2 : 1;
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < y_count; ++y) {
      for (int z = 0; z < z_count; ++z) {
        const int v = mod(static_cast<std::int64_t>(x) * h.a + static_cast<std::int64_t>(y) * h.b +
                              static_cast<std::int64_t>(z) * k,
                          n);
        if (coords.x[v] >= 0) {
          throw ContractViolation("coordinates of " + triple_text(h) + " hit vertex " +
                                  std::to_string(v) + " twice");
        }
        coords.x[v] = x;
        coords.y[v] = y;
        coords.z[v] = z;
      }
    }
  }
  if (std::find(coords.x.begin(), coords.x.end(), -1) != coords.x.end()) {
    throw ContractViolation("coordinates of " + triple_text(h) + " miss a vertex");
  }

  const int b = mod(h.b, n);
  const int bk = h.b_plus_k();
  std::vector<int> travel(n);
  for (int v = 0; v < n; ++v) {
    const int next = mod(v + b, n);
    if (odd) {
      if (coords.z[v] == 0) {
        travel[v] = h.a;
      } else {
        travel[v] = coords.z[next] == 1 ? b : bk;
      }
    } else {
      if (coords.x[v] < d / 2) {
        travel[v] = h.a;
      } else {
        const int xn = coords.x[next];
        travel[v] = (1 <= xn && xn <= d / 2) ? bk : b;
      }
    }
  }
  return H0{OneFactor::from_generators(h.spec(), travel), std::move(coords)};
}

bool lemma44_parity(const HalfSpec& h) {
  const bool a_even = h.a % 2 == 0;
  const bool b_even = h.b % 2 == 0;
  const bool k_even = h.k % 2 == 0;
  return (a_even && k_even) || (!a_even && (!b_even || !k_even));
}

CircuitCert build_cyclic(int n, int g) {
  if (n < 2) throw InvalidInput("modulus must be at least 2");
  g = mod(g, n);
  if (std::gcd(g, n) != 1) {
    throw InvalidInput(std::to_string(g) + " is not a unit mod " + std::to_string(n));
  }
  return CircuitCert{0, std::vector<int>(n, g)};
}

CircuitCert build_case3(const HalfSpec& h, std::vector<int>* counts) {
  require_connected(h);
  const int k = h.k;
  const int n = 2 * k;
  const int a = h.a;
  const int b = mod(h.b, n);
  const int s = std::gcd(mod(a - b, n), k);
  if (s == 1) {
    throw InvalidInput("descent needs gcd(a - b, k) != 1, got " + triple_text(h));
  }
  const auto in_s = [s](int v) { return v % s == 0; };

  std::vector<int> travel(n);
  for (int v = 0; v < n; ++v) {
    if (!in_s(v)) {
      travel[v] = b;
    } else if (v < k) {
      travel[v] = a;
    } else {
      const int r = mod(v + b - a, k);
      travel[v] = mod(r + a + k - v, n);
    }
  }
  OneFactor f = OneFactor::from_generators(h.spec(), travel);

  const auto other_end = [&](const Components& c) -> int {
    for (int v = 0; v < n; v += s) {
      if (c.label[v] != c.label[mod(v + k, n)]) return v;
    }
    for (int v = 0; v < n; v += s) {
      if (c.label[v] != c.label[mod(v + a - b, n)]) return v;
    }
    return -1;
  };

  for (int pass = 0;; ++pass) {
    const Components c = components(f);
    if (counts != nullptr) counts->push_back(c.count);
    if (c.count == 1) break;
    if (pass > n) throw ContractViolation("descent on " + triple_text(h) + " did not terminate");
    const int u = other_end(c);
    if (u < 0) {
      throw ContractViolation("descent on " + triple_text(h) + " found no split vertex");
    }
    const Vertex u1 = f.travel(u) == a ? u : mod(u + k, n);
    const Vertex u2 = mod(u1 + k, n);
    const Vertex v3 = mod(u1 + a + k, n);

    OneFactor h1 = f;
    {
      const auto pred = f.predecessors();
      const Permutation3 sigma = reentry_permutation(f, {u1, u2, pred[v3]});
      if (!is_even(sigma)) h1 = swap_in_arcs(f, pred[u1], pred[u2]);
    }
    const Vertex u3 = h1.predecessors()[v3];
    const Permutation3 sigma1 = reentry_permutation(h1, {u1, u2, u3});
    const bool three_cycle = sigma1[0] != 0;
    OneFactor next = three_cycle ? h1 : rotate3(h1, u1, u2, u3).factor;
    if (components(next).count >= c.count) {
      throw ContractViolation("descent pass on " + triple_text(h) + " did not reduce " +
                              std::to_string(c.count) + " components");
    }
    f = std::move(next);
  }
  return cert_from_factor(f);
}

namespace {

void require_case4(const HalfSpec& h) {
  require_connected(h);
  const int n = h.n();
  const int g = std::gcd(h.b, h.k);
  if (!lemma44_parity(h) || std::gcd(h.a, n) == 1 || g < 3 || g % 2 == 0 ||
      std::gcd(mod(h.a - h.b, n), h.k) != 1) {
    throw InvalidInput("amalgamation hypotheses fail for " + triple_text(h));
  }
}

class Amalgamation {
 public:
  Amalgamation(const HalfSpec& h, OneFactor start) : h_(h), f_(std::move(start)) {}

  void merge(std::int64_t u) {
    try {
      f_ = lemma45_merge(f_, h_, mod(u, h_.n()));
    } catch (const InvalidInput& e) {
      fail("merge at u = " + std::to_string(mod(u, h_.n())) + ": " + e.what());
    }
  }

  RewireTriple shift(std::int64_t u) {
    try {
      Rotation r = shift_travel(f_, h_, mod(u, h_.n()));
      f_ = std::move(r.factor);
      return r.triple;
    } catch (const InvalidInput& e) {
      fail("shift at u = " + std::to_string(mod(u, h_.n())) + ": " + e.what());
    }
  }

  void expect(bool holds, const std::string& what) const {
    if (!holds) fail(what);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ContractViolation("amalgamation schedule for " + triple_text(h_) + ": " + what);
  }

  int count() const { return components(f_).count; }
  const OneFactor& factor() const { return f_; }

 private:
  const HalfSpec& h_;
  OneFactor f_;
};

}  // namespace

CircuitCert build_case4(const HalfSpec& h) {
  require_case4(h);
  const int n = h.n();
  const std::int64_t a = h.a;
  const std::int64_t b = h.b;
  const std::int64_t k = h.k;
  const int g = std::gcd(h.b, h.k);
  H0 base = h0_build(h);
  const int d = base.coords.d;
  Amalgamation run(h, std::move(base.factor));

  if (base.coords.case_tag == CoordCase::odd_d) {
    run.merge(0);
    run.merge(a + b);
    const int rounds = h.k / (2 * d);
    for (int i = 2; i <= rounds; ++i) {
      const int before = run.count();
      const RewireTriple first = run.shift((2 * i - 2) * b);
      if (i >= 3) {
        run.expect(first.u[2] == mod(a + (2 * i - 3) * b + k, n),
                   "round " + std::to_string(i) + " first rotation has an unexpected third vertex");
      }
      const RewireTriple second = run.shift((2 * i - 1) * b);
      run.expect(second.u[2] == mod(a + (2 * i - 2) * b + k, n),
                 "round " + std::to_string(i) + " second rotation has an unexpected third vertex");
      if (i < rounds) {
        run.expect(second.v[1] == mod(2 * i * b + k, n),
                   "round " + std::to_string(i) + " second rotation has an unexpected target");
      }
      run.expect(run.count() == before - 2,
                 "round " + std::to_string(i) + " did not absorb two components");
    }
    for (int i = 2; i <= (g - 1) / 2; ++i) run.merge((2 * i - 1) * a);
  } else {
    for (int i = 1; i <= (g - 1) / 2; ++i) run.merge((2 * i - 1) * a);
  }
  run.expect(run.count() == 1, "ended with " + std::to_string(run.count()) + " components");
  return cert_from_factor(run.factor());
}

Thm46Construction build_thm46(const HalfSpec& h) {
  require_connected(h);
  if (!thm46_ham_bullet(h)) {
    throw InvalidInput(h.spec().to_string() + " has no hamiltonian circuit");
  }
  const int n = h.n();
  if (std::gcd(h.a, n) == 1) return {build_cyclic(n, h.a), Method::thm46_case1};
  if (std::gcd(h.b, h.k) == 1) {
    const int unit = std::gcd(mod(h.b, n), n) == 1 ? mod(h.b, n) : h.b_plus_k();
    return {build_cyclic(n, unit), Method::thm46_case2};
  }
  if (std::gcd(mod(h.a - h.b, n), h.k) != 1) return {build_case3(h), Method::thm46_case3};
  return {build_case4(h), Method::thm46_case4};
}

CircuitCert prop51_case1_circuit(int k, const CirculantSpec& spec) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (spec.n() != 12 * k) {
    throw InvalidInput(spec.to_string() + " does not have 12k = " + std::to_string(12 * k) +
                       " vertices");
  }
  for (int g : {2, 6 * k, 6 * k + 2, 6 * k + 3}) {
    if (!spec.contains(mod(g, spec.n()))) {
      throw InvalidInput(spec.to_string() + " lacks the generator " + std::to_string(g));
    }
  }
  std::vector<int> travel(spec.n(), 2);
  travel[2] = 6 * k;
  travel[6 * k] = 6 * k + 2;
  travel[0] = 6 * k + 3;
  travel[6 * k + 1] = 6 * k + 3;
  return cert_from_factor(OneFactor::from_generators(spec, travel));
}

CircuitCert euler_lift(int k, int a, int b, const CirculantSpec& spec) {
  if (k < 1) throw InvalidInput("k must be positive");
  const int n = 2 * k;
  if (spec.n() != n) {
    throw InvalidInput(spec.to_string() + " does not have 2k = " + std::to_string(n) +
                       " vertices");
  }
  for (std::int64_t g : {std::int64_t{a}, std::int64_t{a} + k, std::int64_t{b},
                         std::int64_t{b} + k}) {
    if (!spec.contains(mod(g, n))) {
      throw InvalidInput(spec.to_string() + " lacks the generator " + std::to_string(mod(g, n)));
    }
  }
  if (gcd3(mod(a, k), mod(b, k), k) != 1) {
    throw InvalidInput("Cay(Z_" + std::to_string(k) + "; " + std::to_string(mod(a, k)) + ", " +
                       std::to_string(mod(b, k)) + ") is disconnected");
  }
  const std::vector<int> labels = euler_circuit(k, a, b);
  std::vector<bool> visited(n, false);
  visited[0] = true;
  CircuitCert cert;
  int pos = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int target = mod(static_cast<std::int64_t>(pos) + labels[i], n);
    if (i + 1 == labels.size()) {
      if (target % k != 0) throw ContractViolation("Euler circuit does not close at 0");
      target = 0;
    } else {
      if (visited[target]) target = mod(target + k, n);
      if (visited[target]) {
        throw ContractViolation("lift revisits coset " + std::to_string(target % k));
      }
      visited[target] = true;
    }
    cert.steps.push_back(mod(target - pos, n));
    pos = target;
  }
  return cert;
}

namespace {

std::int64_t millis_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

// Unit x with x * T == {6k, 6k+2, 6k+3}.
std::optional<int> cor14_multiplier(const CirculantSpec& t, int k) {
  const CirculantSpec target = CirculantSpec::make(t.n(), {6 * k, 6 * k + 2, 6 * k + 3});
  for (int x : units_of(t.n())) {
    if (t.scaled(x) == target) return x;
  }
  return std::nullopt;
}

int inverse_unit(int x, int n) {
  for (int y : units_of(n)) {
    if (mod(static_cast<std::int64_t>(x) * y, n) == 1) return y;
  }
  throw ContractViolation(std::to_string(x) + " is not a unit mod " + std::to_string(n));
}

struct SubsetProof {
  CircuitCert cert;
  Method method;
  Witness witness;
};

std::optional<SubsetProof> prove_from_subset(const CirculantSpec& spec, const CirculantSpec& t) {
  const int n = spec.n();
  for (int g : t.gens()) {
    if (std::gcd(g, n) == 1) return SubsetProof{build_cyclic(n, g), Method::cyclic, {}};
  }
  const auto half = half_spec_match(t);
  if (half) {
    if (const auto bullet = thm46_ham_bullet(*half)) {
      Thm46Construction built = build_thm46(*half);
      return SubsetProof{std::move(built.cert), built.method, *bullet};
    }
  }
  if (const auto cor14 = cor14_nonham(t)) {
    if (const auto x = cor14_multiplier(t, cor14->k)) {
      const CirculantSpec scaled = spec.scaled(*x);
      if (scaled.contains(2)) {
        const CircuitCert image = prop51_case1_circuit(cor14->k, scaled);
        const int back = inverse_unit(*x, n);
        CircuitCert cert;
        for (int step : image.steps) cert.steps.push_back(mod(static_cast<std::int64_t>(step) * back, n));
        return SubsetProof{std::move(cert), Method::prop51_case1, *cor14};
      }
    }
  }
  if (half && thm46_nonham(*half).non_hamiltonian &&
      spec.contains(mod(static_cast<std::int64_t>(half->a) + half->k, n))) {
    return SubsetProof{euler_lift(half->k, half->a, half->b, spec), Method::prop51_case2,
                       thm46_breakdown(*half)};
  }
  return std::nullopt;
}

}  // namespace

Classification prove_deg4(const CirculantSpec& spec, const SearchOptions& options) {
  if (spec.outdegree() < 4) {
    throw InvalidInput(spec.to_string() + " has outdegree below 4");
  }
  if (!is_connected(spec)) throw InvalidInput(spec.to_string() + " is disconnected");
  const auto t0 = std::chrono::steady_clock::now();
  Classification out{spec, canonical_form(spec), true, Status::hamiltonian, Method::search, {}, {},
                     0};
  const auto finish = [&](CircuitCert cert, Method method, Witness witness) {
    const CertCheck check = verify_cert(spec, cert);
    if (!check) {
      throw ContractViolation(std::string("certificate for ") + spec.to_string() + " via " +
                              to_string(method) + " fails: " + check.reason);
    }
    out.cert = std::move(cert);
    out.method = method;
    out.witness = std::move(witness);
    out.millis = millis_since(t0);
    return out;
  };

  const auto& gens = spec.gens();
  const int m = spec.outdegree();
  std::vector<CirculantSpec> connected;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int l = j + 1; l < m; ++l) {
        const CirculantSpec t = CirculantSpec::make(spec.n(), {gens[i], gens[j], gens[l]});
        if (is_connected(t)) connected.push_back(t);
      }
    }
  }

  for (const auto& t : connected) {
    if (auto proof = prove_from_subset(spec, t)) {
      return finish(std::move(proof->cert), proof->method, std::move(proof->witness));
    }
  }
  for (const auto& t : connected) {
    const SearchOutcome found = find_hamiltonian(t, options);
    if (found.verdict == SearchOutcome::Verdict::found) {
      return finish(*found.cert, Method::search, {});
    }
  }

  const Method method =
      connected.empty() && curran_witte_sufficient(spec) ? Method::thm13 : Method::search;
  const SearchOutcome found = find_hamiltonian(spec, options);
  switch (found.verdict) {
    case SearchOutcome::Verdict::found:
      return finish(*found.cert, method, {});
    case SearchOutcome::Verdict::budget_exceeded:
      out.status = Status::undecided;
      out.method = method;
      out.millis = millis_since(t0);
      return out;
    case SearchOutcome::Verdict::none_exhaustive:
      out.status = Status::non_hamiltonian;
      out.method = Method::search;
      out.witness = ExhaustiveWitness{found.nodes_expanded};
      out.millis = millis_since(t0);
      return out;
  }
  return out;
}

}  // namespace circham
