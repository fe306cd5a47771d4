#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "circham/cert.hpp"
#include "circham/criteria.hpp"
#include "circham/zmod.hpp"

namespace circham {

enum class Status { hamiltonian, non_hamiltonian, disconnected, undecided };

/// How a verdict was reached. The thm46_case* and prop51_* tags name the
/// construction that produced the attached certificate.
enum class Method {
  connectivity,
  cyclic,
  rankin,
  thm13,
  cor14,
  thm46,
  thm46_case1,
  thm46_case2,
  thm46_case3,
  thm46_case4,
  prop51_case1,
  prop51_case2,
  search,
};

const char* to_string(Status status);
const char* to_string(Method method);
Status status_from_string(const std::string& text);
Method method_from_string(const std::string& text);

/// The exhaustive search found nothing.
struct ExhaustiveWitness {
  std::uint64_t nodes = 0;

  friend bool operator==(const ExhaustiveWitness&, const ExhaustiveWitness&) = default;
};

using Witness =
    std::variant<std::monostate, RankinWitness, Cor14Witness, Thm46Breakdown, Thm46Bullet,
                 ExhaustiveWitness>;

struct Classification {
  CirculantSpec spec;
  CirculantSpec canonical;
  bool connected = false;
  Status status = Status::undecided;
  Method method = Method::search;
  std::optional<CircuitCert> cert;
  Witness witness;
  std::int64_t millis = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

nlohmann::json witness_to_json(const Witness& witness);
Witness witness_from_json(const nlohmann::json& j);

/// Census record layout: n, gens, canonical, connected, status, method,
/// witness, cert, millis.
void to_json(nlohmann::json& j, const Classification& c);
/// Throws InvalidInput on malformed records.
Classification classification_from_json(const nlohmann::json& j);

}  // namespace circham
