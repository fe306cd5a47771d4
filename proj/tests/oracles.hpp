#pragma once

// Deliberately naive reference implementations used as test oracles.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "circham/zmod.hpp"

namespace oracle {

// Plain backtracking from vertex 0 with no pruning at all.
inline bool naive_hamiltonian(int n, const std::vector<int>& gens) {
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::function<bool(int, int)> walk = [&](int v, int depth) {
    for (int g : gens) {
      const int w = (v + g) % n;
      if (depth == n) {
        if (w == 0) return true;
        continue;
      }
      if (seen[w]) continue;
      seen[w] = true;
      if (walk(w, depth + 1)) return true;
      seen[w] = false;
    }
    return false;
  };
  if (n == 1) return true;
  return walk(0, 1);
}

// Every one-factor of Cay(Z_n; gens) as a successor table.
inline std::vector<std::vector<int>> all_one_factors(int n, const std::vector<int>& gens) {
  std::vector<std::vector<int>> out;
  std::vector<int> succ(n, -1);
  std::vector<bool> hit(n, false);
  std::function<void(int)> place = [&](int v) {
    if (v == n) {
      out.push_back(succ);
      return;
    }
    for (int g : gens) {
      const int w = (v + g) % n;
      if (hit[w]) continue;
      hit[w] = true;
      succ[v] = w;
      place(v + 1);
      hit[w] = false;
    }
  };
  place(0);
  return out;
}

inline int cycle_count(const std::vector<int>& succ) {
  std::vector<bool> seen(succ.size(), false);
  int cycles = 0;
  for (std::size_t v = 0; v < succ.size(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (int w = static_cast<int>(v); !seen[w]; w = succ[w]) seen[w] = true;
  }
  return cycles;
}

// Number of multiplier orbits of connected `size`-subsets of Z_n \ {0}.
inline int orbit_count(int n, int size) {
  std::vector<int> units;
  for (int x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) units.push_back(x);
  }
  std::set<std::vector<int>> marked;
  int orbits = 0;
  std::vector<int> pick(size);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == size) {
      int g = n;
      for (int p : pick) g = std::gcd(g, p);
      if (g != 1 || marked.contains(pick)) return;
      ++orbits;
      for (int x : units) {
        std::vector<int> image;
        for (int p : pick) image.push_back(x * p % n);
        std::sort(image.begin(), image.end());
        marked.insert(image);
      }
      return;
    }
    for (int v = start; v < n; ++v) {
      pick[depth] = v;
      choose(v + 1, depth + 1);
    }
  };
  choose(1, 0);
  return orbits;
}

}  // namespace oracle
