#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "circham/cert.hpp"
#include "circham/zmod.hpp"

namespace circham {

/// A spanning subdigraph with indegree and outdegree 1 everywhere, stored as
/// the generator each vertex travels by. Every instance is a valid factor.
class OneFactor {
 public:
  /// travel[v] is an index into spec.gens(). Throws InvalidInput unless the
  /// successor map is a bijection.
  static OneFactor from_indices(const CirculantSpec& spec, std::vector<std::uint8_t> travel);
  /// travel[v] is a generator value (reduced mod n).
  static OneFactor from_generators(const CirculantSpec& spec, const std::vector<int>& travel);
  /// Every vertex travels by the same generator.
  static OneFactor uniform(const CirculantSpec& spec, int generator);

  const CirculantSpec& spec() const { return spec_; }
  int n() const { return spec_.n(); }

  int travel_index(Vertex v) const { return travel_[v]; }
  int travel(Vertex v) const { return spec_.gens()[travel_[v]]; }
  Vertex successor(Vertex v) const { return mod(static_cast<std::int64_t>(v) + travel(v), n()); }
  std::vector<Vertex> successors() const;
  std::vector<Vertex> predecessors() const;

  friend bool operator==(const OneFactor&, const OneFactor&) = default;

 private:
  OneFactor(CirculantSpec spec, std::vector<std::uint8_t> travel)
      : spec_(std::move(spec)), travel_(std::move(travel)) {}

  CirculantSpec spec_;
  std::vector<std::uint8_t> travel_;
};

/// Replaces arcs of a factor by (source, target) pairs. Throws InvalidInput
/// when a displacement is not a generator or the result is not a factor.
OneFactor with_arcs(const OneFactor& h, const std::vector<std::pair<Vertex, Vertex>>& arcs);

struct Components {
  int count = 0;
  /// label[v]: component id, ids assigned in order of least vertex.
  std::vector<int> label;
};

Components components(const OneFactor& h);

/// Certificate of a factor with a single component, starting at `start`.
/// Throws InvalidInput when the factor has several components.
CircuitCert cert_from_factor(const OneFactor& h, Vertex start = 0);

/// The factor a hamiltonian certificate describes. Throws InvalidInput when
/// the certificate does not describe a valid factor of `spec`.
OneFactor factor_from_cert(const CirculantSpec& spec, const CircuitCert& cert);

/// sigma[i] = j when u_j is the first of the three vertices met after u_i
/// along the factor (0-based indices).
using Permutation3 = std::array<int, 3>;

Permutation3 reentry_permutation(const OneFactor& h, const std::array<Vertex, 3>& u);
bool is_even(const Permutation3& p);

struct RewireTriple {
  std::array<Vertex, 3> u;
  std::array<Vertex, 3> v;
  Permutation3 sigma;
  /// sigma composed with the 3-cycle (0 1 2): sigma_prime[i] = sigma[(i + 1) % 3].
  Permutation3 sigma_prime;
};

struct Rotation {
  OneFactor factor;
  RewireTriple triple;
};

/// Replaces u_i -> v_i by u1 -> v2, u2 -> v3, u3 -> v1. Throws InvalidInput
/// (leaving the input untouched) when the vertices are not distinct or a new
/// displacement is not a generator.
Rotation rotate3(const OneFactor& h, Vertex u1, Vertex u2, Vertex u3);

/// Exchanges the targets of w1 and w2 = w1 + n/2. Throws InvalidInput when n
/// is odd, w2 != w1 + n/2, or a new displacement is not a generator.
OneFactor swap_in_arcs(const OneFactor& h, Vertex w1, Vertex w2);

/// bits[c] (c in [0, k)) is true when c + k, not c, travels by a.
struct TransversalBits {
  std::vector<bool> bits;

  friend bool operator==(const TransversalBits&, const TransversalBits&) = default;
};

/// Every coset {c, c + k} has exactly one a-traveler, the other vertex
/// traveling by b or b + k.
bool is_in_class_e(const OneFactor& h, const HalfSpec& half);

/// Member of E with the chosen a-travelers; the b-type arcs are forced.
OneFactor e_from_transversal(const HalfSpec& half, const TransversalBits& bits);

/// Inverse of e_from_transversal. Throws InvalidInput when h is not in E.
TransversalBits transversal_of(const OneFactor& h, const HalfSpec& half);

/// Moves the a-arc of u1's coset from u1 to u1 + k by a 3-rotation at
/// (u1, u1 + k, predecessor of u1 + a + k). Parity of the component count
/// is preserved. Throws InvalidInput unless h is in E and u1 travels by a.
Rotation shift_travel(const OneFactor& h, const HalfSpec& half, Vertex u1);

/// shift_travel when u, u + k and u + a + k lie on three different
/// components; the three are merged and the count drops by two. Throws
/// InvalidInput when any precondition fails.
OneFactor lemma45_merge(const OneFactor& h, const HalfSpec& half, Vertex u);

}  // namespace circham
