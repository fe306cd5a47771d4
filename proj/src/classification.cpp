#include "circham/classification.hpp"

#include <array>
#include <utility>

#include "circham/errors.hpp"

namespace circham {

namespace {

constexpr std::array<std::pair<Status, const char*>, 4> kStatusNames{{
    {Status::hamiltonian, "ham"},
    {Status::non_hamiltonian, "nonham"},
    {Status::disconnected, "disconnected"},
    {Status::undecided, "undecided"},
}};

constexpr std::array<std::pair<Method, const char*>, 13> kMethodNames{{
    {Method::connectivity, "connectivity"},
    {Method::cyclic, "cyclic"},
    {Method::rankin, "rankin"},
    {Method::thm13, "thm13"},
    {Method::cor14, "cor14"},
    {Method::thm46, "thm46"},
    {Method::thm46_case1, "thm46-case1"},
    {Method::thm46_case2, "thm46-case2"},
    {Method::thm46_case3, "thm46-case3"},
    {Method::thm46_case4, "thm46-case4"},
    {Method::prop51_case1, "prop51-case1"},
    {Method::prop51_case2, "prop51-case2"},
    {Method::search, "search"},
}};

constexpr std::array<Thm46Bullet, 5> kBullets{
    Thm46Bullet::difference_not_coprime, Thm46Bullet::a_unit, Thm46Bullet::b_coprime_k,
    Thm46Bullet::a_and_k_even, Thm46Bullet::a_odd_and_b_or_k_odd};

std::vector<std::int64_t> to_int64(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

const char* to_string(Status status) {
  for (auto [value, name] : kStatusNames) {
    if (value == status) return name;
  }
  return "?";
}

const char* to_string(Method method) {
  for (auto [value, name] : kMethodNames) {
    if (value == method) return name;
  }
  return "?";
}

Status status_from_string(const std::string& text) {
  for (auto [value, name] : kStatusNames) {
    if (text == name) return value;
  }
  throw InvalidInput("unknown status '" + text + "'");
}

Method method_from_string(const std::string& text) {
  for (auto [value, name] : kMethodNames) {
    if (text == name) return value;
  }
  throw InvalidInput("unknown method '" + text + "'");
}

nlohmann::json witness_to_json(const Witness& witness) {
  using nlohmann::json;
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(const RankinWitness& w) const {
      return {{"kind", "rankin"}, {"s", w.s}, {"t", w.t}, {"g", w.g}};
    }
    json operator()(const Cor14Witness& w) const {
      return {{"kind", "cor14"},
              {"k", w.k},
              {"pair", {w.a, w.b}},
              {"congruence", to_string(w.congruence)}};
    }
    json operator()(const Thm46Breakdown& w) const {
      return {{"kind", "thm46"},
              {"disconnected", w.disconnected},
              {"difference_coprime", w.difference_coprime},
              {"a_not_unit", w.a_not_unit},
              {"b_not_coprime_k", w.b_not_coprime_k},
              {"a_or_k_odd", w.a_or_k_odd},
              {"a_even_or_b_and_k_even", w.a_even_or_b_and_k_even}};
    }
    json operator()(Thm46Bullet b) const {
      return {{"kind", "thm46_bullet"}, {"bullet", to_string(b)}};
    }
    json operator()(const ExhaustiveWitness& w) const {
      return {{"kind", "exhaustive"}, {"nodes", w.nodes}};
    }
  };
  return std::visit(Visitor{}, witness);
}

Witness witness_from_json(const nlohmann::json& j) {
  if (j.is_null()) return std::monostate{};
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rankin") {
      return RankinWitness{j.at("s").get<int>(), j.at("t").get<int>(), j.at("g").get<int>()};
    }
    if (kind == "cor14") {
      const std::string congruence = j.at("congruence").get<std::string>();
      Cor14Congruence which = Cor14Congruence::two_a_minus_three_b;
      if (congruence == to_string(Cor14Congruence::three_a_minus_two_b)) {
        which = Cor14Congruence::three_a_minus_two_b;
      } else if (congruence != to_string(Cor14Congruence::two_a_minus_three_b)) {
        throw InvalidInput("unknown congruence '" + congruence + "'");
      }
      return Cor14Witness{j.at("k").get<int>(), j.at("pair").at(0).get<int>(),
                          j.at("pair").at(1).get<int>(), which};
    }
    if (kind == "thm46") {
      return Thm46Breakdown{j.at("disconnected").get<bool>(),
                            j.at("difference_coprime").get<bool>(),
                            j.at("a_not_unit").get<bool>(),
                            j.at("b_not_coprime_k").get<bool>(),
                            j.at("a_or_k_odd").get<bool>(),
                            j.at("a_even_or_b_and_k_even").get<bool>()};
    }
    if (kind == "thm46_bullet") {
      const std::string text = j.at("bullet").get<std::string>();
      for (auto b : kBullets) {
        if (text == to_string(b)) return b;
      }
      throw InvalidInput("unknown bullet '" + text + "'");
    }
    if (kind == "exhaustive") return ExhaustiveWitness{j.at("nodes").get<std::uint64_t>()};
    throw InvalidInput("unknown witness kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed witness: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const Classification& c) {
  j = nlohmann::json{{"n", c.spec.n()},
                     {"gens", c.spec.gens()},
                     {"canonical", c.canonical.gens()},
                     {"connected", c.connected},
                     {"status", to_string(c.status)},
                     {"method", to_string(c.method)},
                     {"witness", witness_to_json(c.witness)},
                     {"cert", c.cert ? nlohmann::json(*c.cert) : nlohmann::json(nullptr)},
                     {"millis", c.millis}};
}

Classification classification_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto gens = to_int64(j.at("gens").get<std::vector<int>>());
    const auto canonical = to_int64(j.at("canonical").get<std::vector<int>>());
    std::optional<CircuitCert> cert;
    if (!j.at("cert").is_null()) cert = j.at("cert").get<CircuitCert>();
    return Classification{CirculantSpec::make(n, gens),
                          CirculantSpec::make(n, canonical),
                          j.at("connected").get<bool>(),
                          status_from_string(j.at("status").get<std::string>()),
                          method_from_string(j.at("method").get<std::string>()),
                          std::move(cert),
                          witness_from_json(j.at("witness")),
                          j.value("millis", std::int64_t{0})};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed census record: ") + e.what());
  }
}

}  // namespace circham
