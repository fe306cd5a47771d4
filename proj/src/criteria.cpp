#include "circham/criteria.hpp"

#include <numeric>

#include "circham/errors.hpp"

namespace circham {

std::optional<RankinWitness> rankin_hamiltonian(int n, int a, int b) {
  if (n < 1) throw InvalidInput("modulus must be positive");
  a = mod(a, n);
  b = mod(b, n);
  if (a == b) throw InvalidInput("Rankin's criterion needs two distinct generators");
  if (std::gcd(std::gcd(a, b), n) != 1) {
    throw InvalidInput("Cay(Z_" + std::to_string(n) + "; " + std::to_string(a) + ", " +
                       std::to_string(b) + ") is disconnected");
  }
  const int g = std::gcd(mod(a - b, n), n);
  // Scan from s = g downwards: the pure-a witness (g, 0) is reported first
  // whenever it exists.
  for (int s = g; s >= 0; --s) {
    const int t = g - s;
    const std::int64_t combo = static_cast<std::int64_t>(s) * a + static_cast<std::int64_t>(t) * b;
    if (std::gcd(mod(combo, n), n) == g) {
      const RankinWitness witness{s, t, g};
      if (witness.s + witness.t != g) throw ContractViolation("Rankin witness does not sum to g");
      return witness;
    }
  }
  return std::nullopt;
}

bool curran_witte_sufficient(const CirculantSpec& spec) {
  if (spec.outdegree() < 3) {
    throw InvalidInput("the Curran-Witte condition needs outdegree at least 3");
  }
  const auto& gens = spec.gens();
  const int n = spec.n();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int others = 0;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others = std::gcd(others, gens[j]);
    }
    if (static_cast<std::int64_t>(std::gcd(gens[i], n)) * others < n) return false;
  }
  return true;
}

const char* to_string(Cor14Congruence congruence) {
  switch (congruence) {
    case Cor14Congruence::two_a_minus_three_b: return "2a-3b";
    case Cor14Congruence::three_a_minus_two_b: return "3a-2b";
  }
  return "?";
}

std::optional<Cor14Witness> cor14_nonham(const CirculantSpec& spec) {
  if (spec.outdegree() != 3) return std::nullopt;
  const int n = spec.n();
  if (n % 12 != 0) return std::nullopt;
  const int half = n / 2;
  const int pos = spec.index_of(half);
  if (pos < 0) return std::nullopt;
  int pair[2];
  int count = 0;
  for (int i = 0; i < 3; ++i) {
    if (i != pos) pair[count++] = spec.gens()[i];
  }
  const int a = pair[0];
  const int b = pair[1];
  if (std::gcd(mod(a - b, n), n) != 1) return std::nullopt;
  std::optional<Cor14Congruence> matched;
  if (mod(2LL * a - 3LL * b, n) == half) {
    matched = Cor14Congruence::two_a_minus_three_b;
  } else if (mod(3LL * a - 2LL * b, n) == half) {
    matched = Cor14Congruence::three_a_minus_two_b;
  }
  if (!matched) return std::nullopt;
  return Cor14Witness{n / 12, a, b, *matched};
}

Thm46Breakdown thm46_breakdown(const HalfSpec& h) {
  const int a = h.a;
  const int b = h.b;
  const int k = h.k;
  Thm46Breakdown out{};
  out.disconnected = !h.connected();
  out.difference_coprime = std::gcd(mod(a - b, 2 * k), k) == 1;
  out.a_not_unit = std::gcd(a, 2 * k) != 1;
  out.b_not_coprime_k = std::gcd(b, k) != 1;
  out.a_or_k_odd = (a % 2 != 0) || (k % 2 != 0);
  out.a_even_or_b_and_k_even = (a % 2 == 0) || (b % 2 == 0 && k % 2 == 0);
  return out;
}

Thm46NonHam thm46_nonham(const HalfSpec& h) {
  const Thm46Breakdown breakdown = thm46_breakdown(h);
  return {breakdown.disconnected || breakdown.all_five(), breakdown};
}

const char* to_string(Thm46Bullet bullet) {
  switch (bullet) {
    case Thm46Bullet::difference_not_coprime: return "gcd(a-b,k)!=1";
    case Thm46Bullet::a_unit: return "gcd(a,2k)=1";
    case Thm46Bullet::b_coprime_k: return "gcd(b,k)=1";
    case Thm46Bullet::a_and_k_even: return "a,k even";
    case Thm46Bullet::a_odd_and_b_or_k_odd: return "a odd, b or k odd";
  }
  return "?";
}

std::optional<Thm46Bullet> thm46_ham_bullet(const HalfSpec& h) {
  if (!h.connected()) return std::nullopt;
  const int a = h.a;
  const int b = h.b;
  const int k = h.k;
  if (std::gcd(mod(a - b, 2 * k), k) != 1) return Thm46Bullet::difference_not_coprime;
  if (std::gcd(a, 2 * k) == 1) return Thm46Bullet::a_unit;
  if (std::gcd(b, k) == 1) return Thm46Bullet::b_coprime_k;
  if (a % 2 == 0 && k % 2 == 0) return Thm46Bullet::a_and_k_even;
  if (a % 2 != 0 && (b % 2 != 0 || k % 2 != 0)) return Thm46Bullet::a_odd_and_b_or_k_odd;
  return std::nullopt;
}

}  // namespace circham
