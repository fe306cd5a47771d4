#pragma once

#include <array>
#include <optional>
#include <string>

#include "circham/zmod.hpp"

namespace circham {

/// s + t == g == gcd(a - b, n) == gcd(s*a + t*b, n).
struct RankinWitness {
  int s;
  int t;
  int g;

  friend bool operator==(const RankinWitness&, const RankinWitness&) = default;
};

/// Outdegree-2 decision. Throws InvalidInput when Cay(Z_n; a, b) is
/// disconnected or a == b mod n. Returns the witness, nullopt when the
/// digraph has no hamiltonian circuit.
std::optional<RankinWitness> rankin_hamiltonian(int n, int a, int b);

/// Sufficient condition for outdegree >= 3: gcd(a, n) * gcd(A \ {a}) >= n
/// for every generator a. Throws InvalidInput for outdegree < 3.
bool curran_witte_sufficient(const CirculantSpec& spec);

/// Which congruence of the pair matched, with a < b the stored pair.
enum class Cor14Congruence { two_a_minus_three_b, three_a_minus_two_b };

const char* to_string(Cor14Congruence congruence);

/// n == 12k, n/2 a generator, {a, b} the remaining pair with gcd(a - b, n) == 1
/// and 2a - 3b or 3a - 2b congruent to 6k mod 12k.
struct Cor14Witness {
  int k;
  int a;
  int b;
  Cor14Congruence congruence;

  friend bool operator==(const Cor14Witness&, const Cor14Witness&) = default;
};

/// Non-hamiltonian outdegree-3 family containing the element of order two.
std::optional<Cor14Witness> cor14_nonham(const CirculantSpec& spec);

/// Truth values of the conditions on Cay(Z_2k; a, b, b + k).
struct Thm46Breakdown {
  bool disconnected;                // gcd(a, b, k) != 1
  bool difference_coprime;          // gcd(a - b, k) == 1
  bool a_not_unit;                  // gcd(a, 2k) != 1
  bool b_not_coprime_k;             // gcd(b, k) != 1
  bool a_or_k_odd;                  // a odd or k odd
  bool a_even_or_b_and_k_even;      // a even, or b and k both even

  /// All five non-hamiltonian conditions hold.
  bool all_five() const {
    return difference_coprime && a_not_unit && b_not_coprime_k && a_or_k_odd &&
           a_even_or_b_and_k_even;
  }

  friend bool operator==(const Thm46Breakdown&, const Thm46Breakdown&) = default;
};

Thm46Breakdown thm46_breakdown(const HalfSpec& h);

/// Result of the non-hamiltonian characterization.
struct Thm46NonHam {
  bool non_hamiltonian;
  Thm46Breakdown breakdown;
};

Thm46NonHam thm46_nonham(const HalfSpec& h);

/// The hamiltonian bullets, in the order the constructors dispatch on them.
enum class Thm46Bullet {
  difference_not_coprime,  // gcd(a - b, k) != 1
  a_unit,                  // gcd(a, 2k) == 1
  b_coprime_k,             // gcd(b, k) == 1
  a_and_k_even,            // a and k both even
  a_odd_and_b_or_k_odd,    // a odd, and b or k odd
};

const char* to_string(Thm46Bullet bullet);

/// First satisfied bullet when Cay(Z_2k; a, b, b + k) is connected and
/// hamiltonian; nullopt otherwise.
std::optional<Thm46Bullet> thm46_ham_bullet(const HalfSpec& h);

}  // namespace circham
