#include "circham/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "circham/constructors.hpp"
#include "circham/criteria.hpp"
#include "circham/errors.hpp"

namespace circham {

const char* to_string(VerifyPolicy policy) {
  return policy == VerifyPolicy::search ? "verify-search" : "verify-none";
}

VerifyPolicy policy_from_string(const std::string& text) {
  if (text == "verify-search" || text == "search") return VerifyPolicy::search;
  if (text == "verify-none" || text == "none") return VerifyPolicy::none;
  throw InvalidInput("unknown verify policy '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Classification blank(const CirculantSpec& spec) {
  const bool connected = is_connected(spec);
  return Classification{spec,
                        canonical_form(spec),
                        connected,
                        connected ? Status::undecided : Status::disconnected,
                        Method::connectivity,
                        std::nullopt,
                        std::monostate{},
                        0};
}

// Re-derives a verdict with the exact search.
void confirm(const CirculantSpec& spec, bool hamiltonian, Method method,
             const ClassifyOptions& options) {
  if (options.policy != VerifyPolicy::search) return;
  const SearchOutcome oracle = find_hamiltonian(spec, options.search);
  if (oracle.verdict == SearchOutcome::Verdict::budget_exceeded) {
    throw BudgetExceeded("search budget exhausted while verifying " + spec.to_string());
  }
  const bool found = oracle.verdict == SearchOutcome::Verdict::found;
  if (found != hamiltonian) {
    throw ContractViolation(std::string("search disagrees with ") + to_string(method) + " on " +
                            spec.to_string() + ": criterion says " +
                            (hamiltonian ? "hamiltonian" : "non-hamiltonian"));
  }
}

void require_cert(const Classification& c) {
  const CertCheck check = verify_cert(c.spec, *c.cert);
  if (!check) {
    throw ContractViolation(std::string("certificate from ") + to_string(c.method) + " for " +
                            c.spec.to_string() + " fails: " + check.reason);
  }
}

// Settles c by search. `method` is recorded for a hamiltonian verdict; a
// non-hamiltonian verdict is only legal when `method` is search.
void decide_by_search(Classification& c, Method method, const ClassifyOptions& options) {
  const SearchOutcome found = find_hamiltonian(c.spec, options.search);
  c.method = method;
  switch (found.verdict) {
    case SearchOutcome::Verdict::found:
      c.status = Status::hamiltonian;
      c.cert = found.cert;
      return;
    case SearchOutcome::Verdict::none_exhaustive:
      if (method != Method::search) {
        throw ContractViolation(std::string("search finds no circuit in ") + c.spec.to_string() +
                                " although " + to_string(method) + " guarantees one");
      }
      c.status = Status::non_hamiltonian;
      c.witness = ExhaustiveWitness{found.nodes_expanded};
      return;
    case SearchOutcome::Verdict::budget_exceeded:
      if (options.policy == VerifyPolicy::search) {
        throw BudgetExceeded("search budget exhausted on " + c.spec.to_string());
      }
      c.status = Status::undecided;
      return;
  }
}

}  // namespace

Classification classify3(const CirculantSpec& spec, const ClassifyOptions& options) {
  if (spec.outdegree() != 3) {
    throw InvalidInput(spec.to_string() + " does not have outdegree 3");
  }
  const auto t0 = Clock::now();
  Classification c = blank(spec);
  const auto done = [&]() {
    c.millis = millis_since(t0);
    return c;
  };
  if (!c.connected) return done();

  if (const auto cor14 = cor14_nonham(spec)) {
    c.status = Status::non_hamiltonian;
    c.method = Method::cor14;
    c.witness = *cor14;
    confirm(spec, false, c.method, options);
    return done();
  }
  if (const auto half = half_spec_match(spec)) {
    const Thm46NonHam verdict = thm46_nonham(*half);
    if (verdict.non_hamiltonian) {
      c.status = Status::non_hamiltonian;
      c.method = Method::thm46;
      c.witness = verdict.breakdown;
      confirm(spec, false, c.method, options);
      return done();
    }
    if (const auto bullet = thm46_ham_bullet(*half)) {
      Thm46Construction built = build_thm46(*half);
      c.status = Status::hamiltonian;
      c.method = built.method;
      c.cert = std::move(built.cert);
      c.witness = *bullet;
      require_cert(c);
      confirm(spec, true, c.method, options);
      return done();
    }
  }
  if (curran_witte_sufficient(spec)) {
    decide_by_search(c, Method::thm13, options);
    return done();
  }
  decide_by_search(c, Method::search, options);
  return done();
}

Classification classify(const CirculantSpec& spec, const ClassifyOptions& options) {
  const auto t0 = Clock::now();
  switch (spec.outdegree()) {
    case 1: {
      Classification c = blank(spec);
      if (c.connected) {
        c.status = Status::hamiltonian;
        c.method = Method::cyclic;
        c.cert = build_cyclic(spec.n(), spec.gens()[0]);
      }
      c.millis = millis_since(t0);
      return c;
    }
    case 2: {
      Classification c = blank(spec);
      if (c.connected) {
        const auto witness = rankin_hamiltonian(spec.n(), spec.gens()[0], spec.gens()[1]);
        if (witness) {
          c.witness = *witness;
          decide_by_search(c, Method::rankin, options);
        } else {
          c.status = Status::non_hamiltonian;
          c.method = Method::rankin;
          confirm(spec, false, c.method, options);
        }
      }
      c.millis = millis_since(t0);
      return c;
    }
    case 3:
      return classify3(spec, options);
    default: {
      if (!is_connected(spec)) {
        Classification c = blank(spec);
        c.millis = millis_since(t0);
        return c;
      }
      Classification c = prove_deg4(spec, options.search);
      if (c.status == Status::undecided && options.policy == VerifyPolicy::search) {
        throw BudgetExceeded("search budget exhausted on " + spec.to_string());
      }
      return c;
    }
  }
}

std::vector<CirculantSpec> enumerate_classes(int n_min, int n_max, int outdegree) {
  if (outdegree < 2 || outdegree > 4) {
    throw InvalidInput("outdegree must be 2, 3 or 4, got " + std::to_string(outdegree));
  }
  std::vector<CirculantSpec> out;
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    if (n - 1 < outdegree) continue;
    std::vector<std::int64_t> pick(outdegree);
    std::iota(pick.begin(), pick.end(), 1);
    for (;;) {
      const CirculantSpec spec = CirculantSpec::make(n, pick);
      if (is_connected(spec) && canonical_form(spec) == spec) out.push_back(spec);
      int i = outdegree - 1;
      while (i >= 0 && pick[i] == n - outdegree + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < outdegree; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

CensusSummary summarize(const std::vector<Classification>& records) {
  CensusSummary summary;
  summary.total = records.size();
  for (const auto& r : records) {
    ++summary.by_status[to_string(r.status)];
    ++summary.by_method[to_string(r.method)];
    if (r.status == Status::non_hamiltonian && r.method == Method::search) {
      ++summary.unexplained_nonham;
    }
  }
  return summary;
}

nlohmann::json to_json(const CensusSummary& summary) {
  return {{"total", summary.total},
          {"resumed", summary.resumed},
          {"status", summary.by_status},
          {"method", summary.by_method},
          {"unexplained_nonham", summary.unexplained_nonham}};
}

CensusFile read_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read census file " + path);
  CensusFile file;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidInput(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (j.contains("schema")) {
      if (!file.manifest.is_null()) throw InvalidInput(path + ": second manifest line");
      file.manifest = std::move(j);
      continue;
    }
    file.records.push_back(classification_from_json(j));
  }
  if (file.manifest.is_null()) throw InvalidInput(path + ": no manifest line");
  return file;
}

namespace {

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

bool same_run(const nlohmann::json& a, const nlohmann::json& b) {
  for (const char* key : {"schema", "range", "outdegree", "policy"}) {
    if (a.value(key, nlohmann::json()) != b.value(key, nlohmann::json())) return false;
  }
  return true;
}

std::string record_line(const Classification& c) { return nlohmann::json(c).dump(); }

// Classifies `pending` on `jobs` threads; `emit` sees results in input order.
template <typename Emit>
void classify_in_order(const std::vector<CirculantSpec>& pending, const CensusOptions& options,
                       Emit emit) {
  const std::size_t m = pending.size();
  std::vector<std::optional<Classification>> results(m);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr error;

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= m || abort.load()) return;
      try {
        Classification c = classify(pending[i], options.classify);
        if (!options.record_timing) c.millis = 0;
        std::lock_guard lock(mu);
        results[i] = std::move(c);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        abort.store(true);
      }
      ready.notify_all();
    }
  };

  const int jobs = static_cast<int>(std::min<std::size_t>(std::max(options.jobs, 1), std::max<std::size_t>(m, 1)));
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);

  for (std::size_t i = 0; i < m; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value() || abort.load(); });
    if (!results[i]) break;
    Classification c = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    emit(std::move(c));
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

CensusSummary run_census(const CensusOptions& options) {
  if (options.n_min > options.n_max) throw InvalidInput("census range is empty");
  if (options.n_min < 2) throw InvalidInput("census range must start at 2 or above");
  if (options.jobs < 1) throw InvalidInput("jobs must be at least 1");
  if (options.out.empty()) throw InvalidInput("census needs an output path");
  const std::vector<CirculantSpec> classes =
      enumerate_classes(options.n_min, options.n_max, options.outdegree);

  nlohmann::json manifest = {{"schema", 1},
                             {"range", {options.n_min, options.n_max}},
                             {"outdegree", options.outdegree},
                             {"policy", to_string(options.classify.policy)}};
  if (options.record_timing) manifest["started"] = utc_now();

  std::vector<Classification> records;
  namespace fs = std::filesystem;
  const bool resuming = fs::exists(options.out) && fs::file_size(options.out) > 0;
  if (resuming) {
    CensusFile existing = read_census(options.out);
    if (!same_run(existing.manifest, manifest)) {
      throw InvalidInput(options.out + " holds a census with different parameters: " +
                         existing.manifest.dump());
    }
    manifest = std::move(existing.manifest);
    records = std::move(existing.records);
  }
  const std::size_t resumed = records.size();

  std::set<CirculantSpec> done;
  for (const auto& r : records) done.insert(r.canonical);
  std::vector<CirculantSpec> pending;
  for (const auto& spec : classes) {
    if (!done.contains(spec)) pending.push_back(spec);
  }

  {
    std::ofstream log(options.out, resuming ? std::ios::app : std::ios::trunc);
    if (!log) throw std::runtime_error("cannot open " + options.out + " for writing");
    if (!resuming) log << manifest.dump() << '\n' << std::flush;
    classify_in_order(pending, options, [&](Classification c) {
      log << record_line(c) << '\n' << std::flush;
      if (!log) throw std::runtime_error("write to " + options.out + " failed");
      records.push_back(std::move(c));
    });
  }

  std::sort(records.begin(), records.end(),
            [](const Classification& x, const Classification& y) { return x.canonical < y.canonical; });
  const std::string tmp = options.out + ".tmp";
  {
    std::ofstream sorted(tmp, std::ios::trunc);
    if (!sorted) throw std::runtime_error("cannot open " + tmp + " for writing");
    sorted << manifest.dump() << '\n';
    for (const auto& r : records) sorted << record_line(r) << '\n';
    if (!sorted.flush()) throw std::runtime_error("write to " + tmp + " failed");
  }
  fs::rename(tmp, options.out);

  CensusSummary summary = summarize(records);
  summary.resumed = resumed;
  return summary;
}

const std::vector<CirculantSpec>& figure1_table() {
  static const std::vector<CirculantSpec> table = [] {
    const std::vector<std::pair<int, std::array<int, 3>>> rows = {
        {12, {2, 3, 8}},   {12, {3, 4, 6}},   {18, {2, 3, 12}},  {18, {2, 6, 15}},
        {20, {2, 5, 12}},  {24, {2, 3, 14}},  {24, {2, 9, 12}},  {24, {3, 4, 16}},
        {28, {2, 7, 16}},  {30, {2, 3, 18}},  {30, {2, 6, 21}},  {30, {2, 9, 24}},
        {30, {2, 10, 25}}, {30, {3, 10, 18}}, {30, {5, 6, 20}},  {36, {2, 3, 20}},
        {36, {2, 9, 20}},  {36, {2, 15, 20}}, {36, {3, 8, 18}},  {40, {2, 5, 22}},
        {40, {4, 5, 24}},  {42, {2, 3, 24}},  {42, {2, 6, 27}},  {42, {2, 7, 28}},
        {42, {2, 12, 33}}, {42, {2, 15, 36}}, {42, {2, 18, 39}}, {42, {3, 14, 24}},
        {42, {6, 7, 28}},  {44, {2, 11, 24}},
    };
    std::vector<CirculantSpec> out;
    for (const auto& [n, g] : rows) out.push_back(CirculantSpec::make(n, {g[0], g[1], g[2]}));
    return out;
  }();
  return table;
}

namespace {

nlohmann::json spec_json(const CirculantSpec& spec) {
  return {{"n", spec.n()}, {"gens", spec.gens()}};
}

}  // namespace

nlohmann::json to_json(const Figure1Report& report) {
  nlohmann::json missing = nlohmann::json::array();
  nlohmann::json extra = nlohmann::json::array();
  for (const auto& s : report.missing) missing.push_back(spec_json(s));
  for (const auto& s : report.extra) extra.push_back(spec_json(s));
  return {{"pass", report.pass},
          {"matched", report.matched},
          {"table_size", figure1_table().size()},
          {"missing", missing},
          {"extra", extra}};
}

Figure1Report figure1_check(const std::vector<Classification>& records) {
  constexpr int kMin = 3;
  constexpr int kMax = 47;
  std::map<CirculantSpec, const Classification*> by_class;
  for (const auto& r : records) {
    if (r.spec.outdegree() == 3 && r.spec.n() >= kMin && r.spec.n() <= kMax) {
      by_class[r.canonical] = &r;
    }
  }
  std::size_t absent = 0;
  std::string first_absent;
  for (const auto& spec : enumerate_classes(kMin, kMax, 3)) {
    const auto it = by_class.find(spec);
    if (it == by_class.end()) {
      if (absent++ == 0) first_absent = spec.to_string();
      continue;
    }
    if (it->second->status == Status::undecided) {
      throw InvalidInput("census leaves " + spec.to_string() + " undecided");
    }
  }
  if (absent > 0) {
    throw InvalidInput("census does not cover outdegree 3 for 3 <= n <= 47: " +
                       std::to_string(absent) + " classes absent, first " + first_absent);
  }

  std::set<CirculantSpec> table_classes;
  Figure1Report report;
  for (const auto& entry : figure1_table()) {
    const CirculantSpec canonical = canonical_form(entry);
    table_classes.insert(canonical);
    const auto it = by_class.find(canonical);
    if (it != by_class.end() && it->second->connected &&
        it->second->status == Status::non_hamiltonian) {
      ++report.matched;
    } else {
      report.missing.push_back(entry);
    }
  }
  for (const auto& [canonical, r] : by_class) {
    if (r->connected && r->status == Status::non_hamiltonian && !table_classes.contains(canonical)) {
      report.extra.push_back(canonical);
    }
  }
  report.pass = report.missing.empty() && report.extra.empty() &&
                report.matched == figure1_table().size();
  return report;
}

}  // namespace circham
