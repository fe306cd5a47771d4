#include "circham/factor.hpp"

#include <algorithm>
#include <string>

#include "circham/errors.hpp"

namespace circham {

namespace {

bool is_bijection(const CirculantSpec& spec, const std::vector<std::uint8_t>& travel) {
  const int n = spec.n();
  std::vector<bool> hit(n, false);
  for (int v = 0; v < n; ++v) {
    const int w = mod(static_cast<std::int64_t>(v) + spec.gens()[travel[v]], n);
    if (hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

std::string vertex_list(std::initializer_list<Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : ", ") + std::to_string(v);
  return out;
}

}  // namespace

OneFactor OneFactor::from_indices(const CirculantSpec& spec, std::vector<std::uint8_t> travel) {
  if (static_cast<int>(travel.size()) != spec.n()) {
    throw InvalidInput("factor needs one travel choice per vertex");
  }
  for (auto idx : travel) {
    if (idx >= spec.gens().size()) throw InvalidInput("travel index out of range");
  }
  if (!is_bijection(spec, travel)) {
    throw InvalidInput("travel choices of " + spec.to_string() + " do not form a 1-factor");
  }
  return OneFactor(spec, std::move(travel));
}

OneFactor OneFactor::from_generators(const CirculantSpec& spec, const std::vector<int>& travel) {
  std::vector<std::uint8_t> idx;
  idx.reserve(travel.size());
  for (int g : travel) {
    const int i = spec.index_of(g);
    if (i < 0) throw InvalidInput(std::to_string(g) + " is not a generator of " + spec.to_string());
    idx.push_back(static_cast<std::uint8_t>(i));
  }
  return from_indices(spec, std::move(idx));
}

OneFactor OneFactor::uniform(const CirculantSpec& spec, int generator) {
  return from_generators(spec, std::vector<int>(spec.n(), generator));
}

std::vector<Vertex> OneFactor::successors() const {
  std::vector<Vertex> out(n());
  for (int v = 0; v < n(); ++v) out[v] = successor(v);
  return out;
}

std::vector<Vertex> OneFactor::predecessors() const {
  std::vector<Vertex> out(n());
  for (int v = 0; v < n(); ++v) out[successor(v)] = v;
  return out;
}

OneFactor with_arcs(const OneFactor& h, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  const int n = h.n();
  std::vector<std::uint8_t> travel(n);
  for (int v = 0; v < n; ++v) travel[v] = static_cast<std::uint8_t>(h.travel_index(v));
  for (auto [from, to] : arcs) {
    const int idx = h.spec().index_of(to - from);
    if (idx < 0) {
      throw InvalidInput("arc " + std::to_string(from) + " -> " + std::to_string(to) +
                         " is not an arc of " + h.spec().to_string());
    }
    travel[mod(from, n)] = static_cast<std::uint8_t>(idx);
  }
  return OneFactor::from_indices(h.spec(), std::move(travel));
}

Components components(const OneFactor& h) {
  Components out;
  out.label.assign(h.n(), -1);
  for (int v = 0; v < h.n(); ++v) {
    if (out.label[v] >= 0) continue;
    for (int w = v; out.label[w] < 0; w = h.successor(w)) out.label[w] = out.count;
    ++out.count;
  }
  return out;
}

CircuitCert cert_from_factor(const OneFactor& h, Vertex start) {
  if (components(h).count != 1) throw InvalidInput("factor is not a hamiltonian circuit");
  CircuitCert cert;
  cert.start = mod(start, h.n());
  Vertex v = cert.start;
  for (int i = 0; i < h.n(); ++i) {
    cert.steps.push_back(h.travel(v));
    v = h.successor(v);
  }
  return cert;
}

OneFactor factor_from_cert(const CirculantSpec& spec, const CircuitCert& cert) {
  const int n = spec.n();
  if (static_cast<int>(cert.steps.size()) != n) throw InvalidInput("certificate has wrong length");
  std::vector<int> travel(n, 0);
  std::vector<bool> seen(n, false);
  std::int64_t position = cert.start;
  for (int step : cert.steps) {
    const int v = mod(position, n);
    if (seen[v]) throw InvalidInput("certificate visits vertex " + std::to_string(v) + " twice");
    seen[v] = true;
    travel[v] = step;
    position += step;
  }
  return OneFactor::from_generators(spec, travel);
}

Permutation3 reentry_permutation(const OneFactor& h, const std::array<Vertex, 3>& u) {
  Permutation3 sigma{};
  for (int i = 0; i < 3; ++i) {
    Vertex w = h.successor(u[i]);
    for (;;) {
      const auto it = std::find(u.begin(), u.end(), w);
      if (it != u.end()) {
        sigma[i] = static_cast<int>(it - u.begin());
        break;
      }
      w = h.successor(w);
    }
  }
  return sigma;
}

bool is_even(const Permutation3& p) {
  int inversions = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

Rotation rotate3(const OneFactor& h, Vertex u1, Vertex u2, Vertex u3) {
  const int n = h.n();
  u1 = mod(u1, n);
  u2 = mod(u2, n);
  u3 = mod(u3, n);
  if (u1 == u2 || u2 == u3 || u1 == u3) {
    throw InvalidInput("rotate3 needs three distinct vertices, got " + vertex_list({u1, u2, u3}));
  }
  RewireTriple triple;
  triple.u = {u1, u2, u3};
  triple.v = {h.successor(u1), h.successor(u2), h.successor(u3)};
  triple.sigma = reentry_permutation(h, triple.u);
  for (int i = 0; i < 3; ++i) triple.sigma_prime[i] = triple.sigma[(i + 1) % 3];
  OneFactor rotated = with_arcs(h, {{u1, triple.v[1]}, {u2, triple.v[2]}, {u3, triple.v[0]}});
  return Rotation{std::move(rotated), triple};
}

OneFactor swap_in_arcs(const OneFactor& h, Vertex w1, Vertex w2) {
  const int n = h.n();
  if (n % 2 != 0) throw InvalidInput("swap_in_arcs needs an even modulus");
  w1 = mod(w1, n);
  w2 = mod(w2, n);
  if (w2 != mod(w1 + n / 2, n)) {
    throw InvalidInput("swap_in_arcs needs w2 = w1 + n/2, got " + vertex_list({w1, w2}));
  }
  return with_arcs(h, {{w1, h.successor(w2)}, {w2, h.successor(w1)}});
}

namespace {

void require_spec(const OneFactor& h, const HalfSpec& half) {
  if (!(h.spec() == half.spec())) {
    throw InvalidInput("factor of " + h.spec().to_string() + " does not belong to " +
                       half.spec().to_string());
  }
}

}  // namespace

bool is_in_class_e(const OneFactor& h, const HalfSpec& half) {
  if (!(h.spec() == half.spec())) return false;
  for (int c = 0; c < half.k; ++c) {
    const bool low = h.travel(c) == half.a;
    const bool high = h.travel(c + half.k) == half.a;
    if (low == high) return false;
  }
  return true;
}

OneFactor e_from_transversal(const HalfSpec& half, const TransversalBits& bits) {
  const int k = half.k;
  const int n = 2 * k;
  if (static_cast<int>(bits.bits.size()) != k) {
    throw InvalidInput("transversal needs exactly k = " + std::to_string(k) + " bits");
  }
  const CirculantSpec spec = half.spec();
  std::vector<int> travel(n, 0);
  // landing[c]: the vertex of coset c entered by an a-arc.
  std::vector<Vertex> landing(k);
  for (int c = 0; c < k; ++c) {
    const Vertex a_traveler = bits.bits[c] ? c + k : c;
    travel[a_traveler] = half.a;
    const Vertex lands = mod(a_traveler + half.a, n);
    landing[lands % k] = lands;
  }
  for (int c = 0; c < k; ++c) {
    const Vertex b_traveler = bits.bits[c] ? c : c + k;
    const int target_coset = mod(b_traveler + half.b, k);
    const Vertex target = mod(landing[target_coset] + k, n);
    travel[b_traveler] = mod(target - b_traveler, n);
  }
  return OneFactor::from_generators(spec, travel);
}

TransversalBits transversal_of(const OneFactor& h, const HalfSpec& half) {
  if (!is_in_class_e(h, half)) throw InvalidInput("factor is not in class E");
  TransversalBits out;
  out.bits.resize(half.k);
  for (int c = 0; c < half.k; ++c) out.bits[c] = h.travel(c) != half.a;
  return out;
}

Rotation shift_travel(const OneFactor& h, const HalfSpec& half, Vertex u1) {
  require_spec(h, half);
  const int n = half.n();
  const int k = half.k;
  u1 = mod(u1, n);
  if (!is_in_class_e(h, half)) throw InvalidInput("shift_travel needs a factor in class E");
  if (h.travel(u1) != half.a) {
    throw InvalidInput("vertex " + std::to_string(u1) + " does not travel by a = " +
                       std::to_string(half.a));
  }
  const Vertex u2 = mod(u1 + k, n);
  const Vertex v3 = mod(u1 + half.a + k, n);
  const Vertex u3 = h.predecessors()[v3];
  return rotate3(h, u1, u2, u3);
}

OneFactor lemma45_merge(const OneFactor& h, const HalfSpec& half, Vertex u) {
  require_spec(h, half);
  const int n = half.n();
  u = mod(u, n);
  if (!is_in_class_e(h, half)) throw InvalidInput("lemma45_merge needs a factor in class E");
  if (h.travel(u) != half.a) {
    throw InvalidInput("vertex " + std::to_string(u) + " does not travel by a = " +
                       std::to_string(half.a));
  }
  const Components before = components(h);
  const Vertex partner = mod(u + half.k, n);
  const Vertex landing = mod(u + half.a + half.k, n);
  const int cu = before.label[u];
  const int cp = before.label[partner];
  const int cl = before.label[landing];
  if (cu == cp) {
    throw InvalidInput("vertices " + vertex_list({u, partner}) + " share a component");
  }
  if (cu == cl) {
    throw InvalidInput("vertices " + vertex_list({u, landing}) + " share a component");
  }
  if (cp == cl) {
    throw InvalidInput("vertices " + vertex_list({partner, landing}) + " share a component");
  }
  Rotation merged = shift_travel(h, half, u);
  const Components after = components(merged.factor);
  if (after.count != before.count - 2 || after.label[u] != after.label[partner] ||
      after.label[u] != after.label[landing]) {
    throw ContractViolation("3-rotation at " + std::to_string(u) + " did not merge components");
  }
  return std::move(merged.factor);
}

}  // namespace circham
