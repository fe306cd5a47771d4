#pragma once

#include <vector>

#include "circham/cert.hpp"
#include "circham/classification.hpp"
#include "circham/factor.hpp"
#include "circham/search.hpp"
#include "circham/zmod.hpp"

namespace circham {

enum class CoordCase { odd_d, even_d };

/// Coordinates of Z_2k relative to (a, b, k), d the order of a.
/// odd_d:  v = x*a + y*b + z*k with x < d, y < k/d, z < 2.
/// even_d: v = x*a + y*b with x < d, y < 2k/d; z is all zero.
struct CosetCoords {
  CoordCase case_tag;
  int d;
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> z;
};

struct H0 {
  OneFactor factor;
  CosetCoords coords;
};

/// The canonical member of class E. Throws InvalidInput when gcd(a, b, k) != 1
/// and ContractViolation when the coordinates are not a bijection.
H0 h0_build(const HalfSpec& h);

/// True when h0_build(h) has an odd number of components:
/// a and k even, or a odd with b or k odd.
bool lemma44_parity(const HalfSpec& h);

/// n copies of g starting at 0. Throws InvalidInput unless gcd(g, n) == 1.
CircuitCert build_cyclic(int n, int g);

/// Component-count descent over factors whose a-travelers are confined to
/// <a - b, k>. Needs gcd(a, b, k) == 1 and gcd(a - b, k) != 1. When
/// `counts` is given it receives the component count before each pass and
/// the final 1.
CircuitCert build_case3(const HalfSpec& h, std::vector<int>* counts = nullptr);

/// Amalgamates the components of h0_build two at a time. Needs the
/// hypotheses of the construction; a schedule step that does not behave as
/// planned throws ContractViolation.
CircuitCert build_case4(const HalfSpec& h);

struct Thm46Construction {
  CircuitCert cert;
  Method method;
};

/// Dispatches to the cyclic, descent or amalgamation construction. Throws
/// InvalidInput for disconnected or non-hamiltonian input.
Thm46Construction build_thm46(const HalfSpec& h);

/// Explicit circuit on Z_12k using the generators 2, 6k, 6k+2, 6k+3.
/// Throws InvalidInput unless spec has n == 12k and all four generators.
CircuitCert prop51_case1_circuit(int k, const CirculantSpec& spec);

/// Lifts an Euler circuit of Cay(Z_k; a, b) to a hamiltonian circuit of
/// spec on Z_2k, which must contain a, a+k, b and b+k. Throws InvalidInput
/// when the generators are missing or Cay(Z_k; a, b) is disconnected.
CircuitCert euler_lift(int k, int a, int b, const CirculantSpec& spec);

/// Certificate for a connected spec of outdegree at least 4, built from a
/// connected 3-subset when possible and from search otherwise.
Classification prove_deg4(const CirculantSpec& spec, const SearchOptions& options = {});

}  // namespace circham
