// circham: check, construct and verify hamiltonian circuits in circulant
// digraphs, and run censuses of small moduli.
//
// Exit codes: 0 ok, 1 invalid input, 2 internal contract failure, 3 search
// budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "circham/census.hpp"
#include "circham/constructors.hpp"
#include "circham/errors.hpp"
#include "circham/search.hpp"

namespace {

using namespace circham;

constexpr int kExitInvalid = 1;
constexpr int kExitContract = 2;
constexpr int kExitBudget = 3;

CirculantSpec parse_spec(int n, const std::string& gens_text) {
  if (n < 2) throw InvalidInput("--n must be at least 2");
  std::vector<std::int64_t> gens;
  std::stringstream in(gens_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("generator '" + item + "' is not an integer");
    }
    if (used != item.size()) throw InvalidInput("generator '" + item + "' is not an integer");
    gens.push_back(value);
  }
  if (gens.empty()) throw InvalidInput("--gens lists no generators");
  for (std::int64_t g : gens) {
    if (g < 0 || g >= n) {
      std::cerr << "warning: generators reduced mod " << n << "\n";
      break;
    }
  }
  return CirculantSpec::make(n, gens);
}

struct SpecFlags {
  int n = 0;
  std::string gens;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "modulus")->required();
    cmd->add_option("--gens", gens, "comma-separated generators")->required();
  }
  CirculantSpec spec() const { return parse_spec(n, gens); }
};

int run_check(const SpecFlags& flags, const std::string& verify) {
  ClassifyOptions options;
  options.policy = policy_from_string(verify);
  options.search = SearchOptions::from_environment();
  const Classification c = classify(flags.spec(), options);
  std::cout << nlohmann::json(c).dump() << "\n";
  return c.status == Status::undecided ? kExitBudget : 0;
}

int run_construct(const SpecFlags& flags) {
  ClassifyOptions options;
  options.search = SearchOptions::from_environment();
  const Classification c = classify(flags.spec(), options);
  if (c.status == Status::hamiltonian) {
    std::cout << nlohmann::json(*c.cert).dump() << "\n";
    return 0;
  }
  if (c.status == Status::undecided) {
    std::cerr << "search budget exhausted before a circuit was found\n";
    return kExitBudget;
  }
  std::cout << nlohmann::json{{"status", to_string(c.status)},
                              {"method", to_string(c.method)},
                              {"witness", witness_to_json(c.witness)}}
                   .dump()
            << "\n";
  return 0;
}

int run_verify(const SpecFlags& flags, const std::string& cert_path) {
  const CirculantSpec spec = flags.spec();
  std::ifstream in(cert_path);
  if (!in) throw InvalidInput("cannot read " + cert_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(cert_path + ": " + e.what());
  }
  const CertCheck check = verify_cert(spec, j.get<CircuitCert>());
  if (!check) std::cerr << check.reason << "\n";
  std::cout << (check ? "true" : "false") << "\n";
  return 0;
}

int run_figure1(const std::string& path) {
  const Figure1Report report = figure1_check(read_census(path).records);
  std::cout << to_json(report).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian circuits in circulant digraphs"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  SpecFlags check_flags;
  std::string check_verify = "none";
  auto* check = app.add_subcommand("check", "classify a spec and print the result as JSON");
  check_flags.attach(check);
  check->add_option("--verify", check_verify, "confirm the verdict by search")
      ->check(CLI::IsMember({"none", "search"}));

  SpecFlags construct_flags;
  auto* construct =
      app.add_subcommand("construct", "print a circuit certificate or a non-hamiltonian witness");
  construct_flags.attach(construct);

  SpecFlags verify_flags;
  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "check a certificate file against a spec");
  verify_flags.attach(verify);
  verify->add_option("--cert", cert_path, "certificate JSON file")->required();

  CensusOptions census_options;
  census_options.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string policy;
  int verify_below = 48;
  bool no_timing = false;
  auto* census = app.add_subcommand("census", "classify every class in a range into a JSONL file");
  census->add_option("--min", census_options.n_min, "smallest modulus")->required();
  census->add_option("--max", census_options.n_max, "largest modulus")->required();
  census->add_option("--outdegree", census_options.outdegree, "generators per spec")
      ->capture_default_str();
  census->add_option("--out", census_options.out, "output JSONL path")->required();
  census->add_option("--jobs", census_options.jobs, "worker threads")->capture_default_str();
  census->add_option("--policy", policy, "verify-none or verify-search")
      ->check(CLI::IsMember({"verify-none", "verify-search"}));
  census->add_option("--verify-below", verify_below,
                     "default policy is verify-search when --max is below this")
      ->capture_default_str();
  census->add_flag("--no-timing", no_timing, "write zero timings and no start time");

  std::string figure1_path;
  auto* figure1 = app.add_subcommand("figure1", "compare a census with the reference table of non-hamiltonian classes");
  figure1->add_option("--census", figure1_path, "census JSONL file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*check) return run_check(check_flags, check_verify);
    if (*construct) return run_construct(construct_flags);
    if (*verify) return run_verify(verify_flags, cert_path);
    if (*census) {
      census_options.classify.policy =
          policy.empty() ? (census_options.n_max < verify_below ? VerifyPolicy::search
                                                                : VerifyPolicy::none)
                         : policy_from_string(policy);
      census_options.classify.search = SearchOptions::from_environment();
      census_options.record_timing = !no_timing;
      std::cout << to_json(run_census(census_options)).dump(2) << "\n";
      return 0;
    }
    if (*figure1) return run_figure1(figure1_path);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitContract;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
