#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "circham/classification.hpp"
#include "circham/search.hpp"
#include "circham/zmod.hpp"

namespace circham {

enum class VerifyPolicy { none, search };

const char* to_string(VerifyPolicy policy);
/// Accepts "verify-none" and "verify-search".
VerifyPolicy policy_from_string(const std::string& text);

struct ClassifyOptions {
  VerifyPolicy policy = VerifyPolicy::none;
  SearchOptions search;
};

/// Outdegree-3 dispatcher: connectivity, the two non-hamiltonian families,
/// the explicit constructions, the sufficient condition, then search.
/// Under VerifyPolicy::search every verdict is re-derived by search and a
/// disagreement throws ContractViolation; running out of budget there throws
/// BudgetExceeded. Without verification an exhausted budget yields
/// Status::undecided.
Classification classify3(const CirculantSpec& spec, const ClassifyOptions& options = {});

/// Any outdegree: cyclic test, Rankin's criterion, classify3 or prove_deg4.
Classification classify(const CirculantSpec& spec, const ClassifyOptions& options = {});

/// One canonical representative per multiplier class of connected specs,
/// ordered by (n, gens). Throws InvalidInput unless outdegree is 2, 3 or 4.
std::vector<CirculantSpec> enumerate_classes(int n_min, int n_max, int outdegree);

struct CensusOptions {
  int n_min = 3;
  int n_max = 47;
  int outdegree = 3;
  ClassifyOptions classify;
  int jobs = 1;
  std::string out;
  /// false writes millis = 0 and omits the start time, making the file
  /// byte-identical across runs and worker counts.
  bool record_timing = true;
};

struct CensusSummary {
  std::size_t total = 0;
  std::size_t resumed = 0;
  std::map<std::string, std::size_t> by_status;
  std::map<std::string, std::size_t> by_method;
  /// Non-hamiltonian records decided by search alone.
  std::size_t unexplained_nonham = 0;
};

nlohmann::json to_json(const CensusSummary& summary);

/// Classifies every class in range and writes a JSONL file: a manifest line,
/// then one record per class sorted by (n, canonical gens). Records already
/// present in `out` from a run with the same parameters are kept and
/// skipped. Throws InvalidInput on bad parameters or a mismatched existing
/// file, std::runtime_error on I/O failure.
CensusSummary run_census(const CensusOptions& options);

struct CensusFile {
  nlohmann::json manifest;
  std::vector<Classification> records;
};

/// Throws InvalidInput when the file is missing or malformed.
CensusFile read_census(const std::string& path);

CensusSummary summarize(const std::vector<Classification>& records);

/// The 30 non-hamiltonian connected outdegree-3 classes below 48 vertices,
/// as reference representatives (not necessarily canonical).
const std::vector<CirculantSpec>& figure1_table();

struct Figure1Report {
  std::size_t matched = 0;
  std::vector<CirculantSpec> missing;
  std::vector<CirculantSpec> extra;
  bool pass = false;
};

nlohmann::json to_json(const Figure1Report& report);

/// Compares the non-hamiltonian records below 48 vertices with the table,
/// class by class. Throws InvalidInput when the records do not cover every
/// outdegree-3 class with 3 <= n <= 47 or a record in that range is
/// undecided.
Figure1Report figure1_check(const std::vector<Classification>& records);

}  // namespace circham
