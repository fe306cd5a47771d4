#include "circham/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "circham/errors.hpp"

namespace circham {

int gcd_of(std::span<const int> values) {
  int g = 0;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

std::vector<int> units_of(int n) {
  std::vector<int> units;
  for (int x = 1; x < n; ++x) {
    if (std::gcd(x, n) == 1) units.push_back(x);
  }
  if (n == 1) units.push_back(0);
  return units;
}

int element_order(int n, int a) { return n / std::gcd(mod(a, n), n); }

CirculantSpec CirculantSpec::make(int n, std::span<const std::int64_t> gens) {
  if (n < 2) throw InvalidInput("modulus must be at least 2, got " + std::to_string(n));
  std::vector<int> reduced;
  reduced.reserve(gens.size());
  for (auto g : gens) {
    int r = mod(g, n);
    if (r == 0) {
      throw InvalidInput("generator " + std::to_string(g) + " is 0 mod " + std::to_string(n) +
                         " (loop)");
    }
    reduced.push_back(r);
  }
  std::sort(reduced.begin(), reduced.end());
  if (auto dup = std::adjacent_find(reduced.begin(), reduced.end()); dup != reduced.end()) {
    throw InvalidInput("generator residue " + std::to_string(*dup) + " repeated mod " +
                       std::to_string(n) + " (multiple arc)");
  }
  return CirculantSpec(n, std::move(reduced));
}

CirculantSpec CirculantSpec::make(int n, std::initializer_list<std::int64_t> gens) {
  return make(n, std::span<const std::int64_t>(gens.begin(), gens.size()));
}

bool CirculantSpec::contains(int residue) const { return index_of(residue) >= 0; }

int CirculantSpec::index_of(int residue) const {
  int r = mod(residue, n_);
  auto it = std::lower_bound(gens_.begin(), gens_.end(), r);
  if (it == gens_.end() || *it != r) return -1;
  return static_cast<int>(it - gens_.begin());
}

CirculantSpec CirculantSpec::scaled(int x) const {
  std::vector<int> out;
  out.reserve(gens_.size());
  for (int g : gens_) out.push_back(mod(static_cast<std::int64_t>(g) * x, n_));
  std::sort(out.begin(), out.end());
  return CirculantSpec(n_, std::move(out));
}

std::string CirculantSpec::to_string() const {
  std::ostringstream os;
  os << "Cay(Z_" << n_ << ";";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : " ") << gens_[i];
  os << ")";
  return os.str();
}

CirculantSpec validate_spec(int n, std::span<const std::int64_t> gens) {
  return CirculantSpec::make(n, gens);
}

bool is_connected(const CirculantSpec& spec) {
  int g = spec.n();
  for (int a : spec.gens()) g = std::gcd(g, a);
  return g == 1;
}

CirculantSpec canonical_form(const CirculantSpec& spec) {
  CirculantSpec best = spec;
  for (int x : units_of(spec.n())) {
    CirculantSpec candidate = spec.scaled(x);
    if (candidate.gens() < best.gens()) best = std::move(candidate);
  }
  return best;
}

HalfSpec HalfSpec::make(int a, int b, int k) {
  if (k < 1) throw InvalidInput("half-modulus must be positive");
  HalfSpec h{mod(a, 2 * k), mod(b, 2 * k), k};
  // CirculantSpec::make rejects zero and repeated residues.
  (void)h.spec();
  return h;
}

CirculantSpec HalfSpec::spec() const {
  return CirculantSpec::make(2 * k, {a, b, static_cast<std::int64_t>(b) + k});
}

bool HalfSpec::connected() const { return std::gcd(std::gcd(a, b), k) == 1; }

std::optional<HalfSpec> half_spec_match(const CirculantSpec& spec) {
  if (spec.outdegree() != 3 || spec.n() % 2 != 0) return std::nullopt;
  const int k = spec.n() / 2;
  const auto& g = spec.gens();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (g[j] - g[i] == k) {
        const int third = g[3 - i - j];
        return HalfSpec{third, g[i], k};
      }
    }
  }
  return std::nullopt;
}

std::vector<HalfSpec> all_half_specs(int k) {
  std::vector<HalfSpec> out;
  const int n = 2 * k;
  for (int b = 1; b < k; ++b) {
    for (int a = 1; a < n; ++a) {
      if (a == b || a == b + k) continue;
      out.push_back(HalfSpec{a, b, k});
    }
  }
  return out;
}

}  // namespace circham
