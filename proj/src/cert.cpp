#include "circham/cert.hpp"

#include "circham/errors.hpp"

namespace circham {

std::vector<Vertex> CircuitCert::vertices(int n) const {
  std::vector<Vertex> out;
  out.reserve(steps.size());
  Vertex v = mod(start, n);
  for (int step : steps) {
    out.push_back(v);
    v = mod(static_cast<std::int64_t>(v) + step, n);
  }
  return out;
}

void to_json(nlohmann::json& j, const CircuitCert& cert) {
  j = nlohmann::json{{"start", cert.start}, {"steps", cert.steps}};
}

void from_json(const nlohmann::json& j, CircuitCert& cert) {
  if (!j.is_object() || !j.contains("start") || !j.contains("steps") ||
      !j.at("start").is_number_integer() || !j.at("steps").is_array()) {
    throw InvalidInput(R"(certificate must look like {"start": <int>, "steps": [<int>...]})");
  }
  cert.start = j.at("start").get<int>();
  cert.steps.clear();
  for (const auto& s : j.at("steps")) {
    if (!s.is_number_integer()) throw InvalidInput("certificate steps must be integers");
    cert.steps.push_back(s.get<int>());
  }
}

CircuitCert cert_from_vertices(int n, const std::vector<Vertex>& order) {
  CircuitCert cert;
  if (order.empty()) return cert;
  cert.start = order.front();
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex next = order[(i + 1) % order.size()];
    cert.steps.push_back(mod(static_cast<std::int64_t>(next) - order[i], n));
  }
  return cert;
}

}  // namespace circham
