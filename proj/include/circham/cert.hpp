#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circham/zmod.hpp"

namespace circham {

/// A hamiltonian circuit written as a start vertex and the generator value
/// used at each of the n steps. Generator values (not indices) keep the
/// certificate self-describing.
struct CircuitCert {
  Vertex start = 0;
  std::vector<int> steps;

  /// Vertices in visiting order, starting at start (length steps.size()).
  std::vector<Vertex> vertices(int n) const;

  friend bool operator==(const CircuitCert&, const CircuitCert&) = default;
};

void to_json(nlohmann::json& j, const CircuitCert& cert);
/// Throws InvalidInput on a malformed document.
void from_json(const nlohmann::json& j, CircuitCert& cert);

/// Builds the certificate of a circuit given in vertex order (closing arc
/// implied), reading step values modulo n.
CircuitCert cert_from_vertices(int n, const std::vector<Vertex>& order);

}  // namespace circham
