#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circham {

using Vertex = int;

/// Least nonnegative residue of value modulo n (n > 0).
constexpr int mod(std::int64_t value, int n) {
  auto r = static_cast<int>(value % n);
  return r < 0 ? r + n : r;
}

/// gcd(a, n) / gcd over a list; gcd(0, 0) == 0.
int gcd_of(std::span<const int> values);

/// Units of Z_n in increasing order.
std::vector<int> units_of(int n);

/// Order of the residue a in the additive group Z_n.
int element_order(int n, int a);

/// Cay(Z_n; gens): modulus plus a strictly increasing list of distinct
/// nonzero residues. Instances are always valid.
class CirculantSpec {
 public:
  /// Reduces residues mod n and validates. Throws InvalidInput on n < 2,
  /// a zero residue (loop) or a repeated residue (multiple arc).
  static CirculantSpec make(int n, std::span<const std::int64_t> gens);
  static CirculantSpec make(int n, std::initializer_list<std::int64_t> gens);

  int n() const { return n_; }
  const std::vector<int>& gens() const { return gens_; }
  int outdegree() const { return static_cast<int>(gens_.size()); }

  bool contains(int residue) const;
  /// Position of a generator value in gens(), or -1.
  int index_of(int residue) const;

  /// x * gens, re-sorted; x must be a unit.
  CirculantSpec scaled(int x) const;

  std::string to_string() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;
  friend std::strong_ordering operator<=>(const CirculantSpec& lhs, const CirculantSpec& rhs) {
    if (auto c = lhs.n_ <=> rhs.n_; c != 0) return c;
    return lhs.gens_ <=> rhs.gens_;
  }

 private:
  CirculantSpec(int n, std::vector<int> gens) : n_(n), gens_(std::move(gens)) {}

  int n_;
  std::vector<int> gens_;
};

/// Equivalent to CirculantSpec::make; named after the operation it performs.
CirculantSpec validate_spec(int n, std::span<const std::int64_t> gens);

/// gcd(gens..., n) == 1.
bool is_connected(const CirculantSpec& spec);

/// Lexicographically least generator tuple over all unit multiples.
CirculantSpec canonical_form(const CirculantSpec& spec);

/// Cay(Z_2k; a, b, b + k). b is stored as given; half_spec_match stores the
/// smaller residue of the pair {b, b + k}.
struct HalfSpec {
  int a;
  int b;
  int k;

  /// Validates that a, b, b + k are pairwise distinct and nonzero mod 2k.
  static HalfSpec make(int a, int b, int k);

  int n() const { return 2 * k; }
  int b_plus_k() const { return mod(static_cast<std::int64_t>(b) + k, 2 * k); }
  CirculantSpec spec() const;
  /// gcd(a, b, k) == 1, i.e. the induced digraph is connected.
  bool connected() const;

  friend bool operator==(const HalfSpec&, const HalfSpec&) = default;
};

/// Detects the form Cay(Z_2k; a, b, b + k) for an outdegree-3 spec.
std::optional<HalfSpec> half_spec_match(const CirculantSpec& spec);

/// All valid HalfSpecs with the given half-modulus, b taken in [1, k) or
/// [k+1, 2k) with b < b + k (mod 2k), i.e. one entry per unordered pair.
std::vector<HalfSpec> all_half_specs(int k);

}  // namespace circham
