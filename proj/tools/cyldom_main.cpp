// cyldom: 2-domination numbers of cylinders C_n x P_m from the command line.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or invalid input,
// 3 resource limit, 4 no recurrence within the search bounds.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cyldom/errors.hpp"
#include "cyldom/matrix_cache.hpp"
#include "cyldom/oracle.hpp"
#include "cyldom/transfer.hpp"

namespace {

using cyldom::EngineOptions;
using cyldom::InitialRule;
using cyldom::TransferSystem;
using nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitNotFound = 4;
constexpr std::size_t kDefaultCap = 12;

struct NotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::size_t threads = 1;
  std::uint64_t memory_budget = std::uint64_t{8} << 30;
  std::size_t max_steps = 20;
  std::size_t max_period = 6;
  std::string cache_dir;
  bool allow_large = false;
  bool metrics = false;
  std::string rule = "strict";
  std::string format = "human";
};

InitialRule parse_rule(const std::string& s) {
  if (s == "strict") return InitialRule::kStrict;
  if (s == "pattern") return InitialRule::kPattern;
  return InitialRule::kPatternWithoutAllTwos;
}

class Runner {
 public:
  explicit Runner(const Settings& s) : s_(s) {}

  EngineOptions options() const {
    EngineOptions o;
    o.threads = s_.threads;
    o.memory_budget = s_.memory_budget;
    o.max_word_length = s_.allow_large ? cyldom::kMaxWordLength : kDefaultCap;
    o.initial_rule = parse_rule(s_.rule);
    return o;
  }

  cyldom::RecurrenceSearch search() const { return {s_.max_steps, s_.max_period}; }

  void check_n(std::size_t n) const {
    if (n < 3) throw cyldom::InvalidArgument("n must satisfy n >= 3, got " + std::to_string(n));
    if (n > cyldom::kMaxWordLength)
      throw cyldom::ResourceLimit("n = " + std::to_string(n) + " exceeds the supported maximum of " +
                                  std::to_string(cyldom::kMaxWordLength));
    if (n > kDefaultCap && !s_.allow_large)
      throw cyldom::ResourceLimit("n = " + std::to_string(n) + " exceeds the default cap of " +
                                  std::to_string(kDefaultCap) + "; pass --allow-large");
  }

  const TransferSystem& system(std::size_t n) {
    if (sys_ && sys_->n == n) return *sys_;
    check_n(n);
    const auto start = std::chrono::steady_clock::now();
    const auto opts = options();
    std::optional<std::filesystem::path> path;
    if (!s_.cache_dir.empty()) path = std::filesystem::path(s_.cache_dir) / ("tropmat_n" + std::to_string(n) + ".bin");
    bool loaded = false;
    if (path && std::filesystem::exists(*path)) {
      auto table = cyldom::enumerate_words(n, opts.max_word_length);
      sys_ = TransferSystem::with_matrix(n, cyldom::read_matrix_cache(*path, n, table.size()), opts);
      loaded = true;
    } else {
      sys_ = TransferSystem::build(n, opts);
      if (path) {
        std::filesystem::create_directories(path->parent_path());
        cyldom::write_matrix_cache(*path, n, sys_->transitions);
      }
    }
    if (s_.metrics) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "metrics: n=" << n << " words=" << sys_->table.size() << " nnz=" << sys_->transitions.nonzeros()
                << " matrix_bytes=" << sys_->transitions.memory_bytes() << " build_ms=" << ms
                << (loaded ? " source=cache" : " source=built") << '\n';
    }
    return *sys_;
  }

  cyldom::Recurrence recurrence(std::size_t n) {
    const auto& sys = system(n);
    const auto start = std::chrono::steady_clock::now();
    auto rec = cyldom::find_recurrence(sys, search());
    if (s_.metrics) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      std::cerr << "metrics: n=" << n << " search_ms=" << ms << '\n';
    }
    if (!rec)
      throw NotFound("no recurrence for n = " + std::to_string(n) + " within " + std::to_string(s_.max_steps) +
                     " steps and period <= " + std::to_string(s_.max_period));
    return *rec;
  }

 private:
  Settings s_;
  std::optional<TransferSystem> sys_;
};

std::string join_map(const std::map<std::size_t, std::int64_t>& m) {
  std::string out;
  for (const auto& [k, v] : m) {
    if (!out.empty()) out += ';';
    out += std::to_string(k) + '=' + std::to_string(v);
  }
  return out;
}

void print(const json& j, const std::string& human, const Settings& s) {
  if (s.format == "json") std::cout << j.dump() << '\n';
  else std::cout << human;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-domination numbers of cylinders C_n x P_m via tropical transfer matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--threads", s.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--memory-budget", s.memory_budget, "Bytes allowed for matrix assembly");
  app.add_option("--max-steps", s.max_steps, "Vectors X^1..X^K scanned by the recurrence search")->check(CLI::Range(2, 10000));
  app.add_option("--max-period", s.max_period, "Largest period tried")->check(CLI::Range(1, 1000));
  app.add_option("--cache", s.cache_dir, "Directory for cached transition matrices");
  app.add_flag("--allow-large", s.allow_large, "Allow n above 12 (up to 15)");
  app.add_flag("--metrics", s.metrics, "Report sizes and timings on stderr");
  app.add_option("--initial-rule", s.rule, "First-column rule")
      ->check(CLI::IsMember({"strict", "pattern", "pattern-no-all-twos"}));

  std::size_t n = 0, m = 0, m_min = 0, m_max = 0, n_min = 3, n_max = 10, budget = 16;
  auto* count = app.add_subcommand("count", "Count suitable, initial and final words");
  auto* gamma2 = app.add_subcommand("gamma2", "gamma_2(C_n x P_m) by direct iteration");
  auto* recurrence = app.add_subcommand("recurrence", "Find m0, a, b with gamma_2(m+a) = gamma_2(m) + b for m >= m0");
  auto* formula = app.add_subcommand("formula", "Evaluate the closed form for one m or a range");
  auto* table = app.add_subcommand("table", "Recurrences for a range of n");
  auto* verify = app.add_subcommand("verify", "Compare the transfer value with exhaustive search");
  auto* diff = app.add_subcommand("initial-diff", "Compare recurrences under each first-column rule");
  for (auto* sub : {count, gamma2, recurrence, formula, verify, diff})
    sub->add_option("--n", n, "Cycle length")->required();
  for (auto* sub : {gamma2, verify}) sub->add_option("--m", m, "Path length")->required();
  auto* m_opt = formula->add_option("--m", m, "Path length");
  auto* m_min_opt = formula->add_option("--m-min", m_min, "First path length");
  auto* m_max_opt = formula->add_option("--m-max", m_max, "Last path length");
  m_opt->excludes(m_min_opt)->excludes(m_max_opt);
  m_min_opt->needs(m_max_opt);
  m_max_opt->needs(m_min_opt);
  table->add_option("--n-min", n_min, "First cycle length");
  table->add_option("--n-max", n_max, "Last cycle length");
  verify->add_option("--budget", budget, "Largest n*m searched exhaustively")->check(CLI::Range(1, 63));
  for (auto* sub : {count, gamma2, recurrence, formula, verify, diff})
    sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  table->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Runner run(s);
    if (*count) {
      run.check_n(n);
      const auto t = cyldom::enumerate_words(n, run.options().max_word_length);
      const auto rule = parse_rule(s.rule);
      const json j{{"n", n}, {"suitable", t.size()}, {"initial", t.initial_count(rule)}, {"final", t.final_count()}};
      std::ostringstream h;
      h << "n=" << n << " suitable=" << t.size() << " initial=" << t.initial_count(rule) << " final=" << t.final_count()
        << '\n';
      print(j, h.str(), s);
    } else if (*gamma2) {
      if (m < 2) throw cyldom::InvalidArgument("m must satisfy m >= 2, got " + std::to_string(m));
      const auto v = cyldom::gamma2_fixed(run.system(n), m);
      print(json{{"n", n}, {"m", m}, {"gamma2", v}}, std::to_string(v) + '\n', s);
    } else if (*recurrence) {
      const auto rec = run.recurrence(n);
      std::ostringstream h;
      h << "n=" << n << " m0=" << rec.m0 << " a=" << rec.a << " b=" << rec.b << " boundary=" << join_map(rec.boundary)
        << " remaining=" << join_map(rec.remaining) << '\n';
      print(json(rec), h.str(), s);
    } else if (*formula) {
      if (!*m_opt && !*m_min_opt) throw cyldom::InvalidArgument("formula needs --m or --m-min/--m-max");
      const std::size_t lo = *m_opt ? m : m_min;
      const std::size_t hi = *m_opt ? m : m_max;
      if (lo < 2 || hi < lo) throw cyldom::InvalidArgument("path lengths must satisfy 2 <= m-min <= m-max");
      const cyldom::ClosedForm form(run.recurrence(n));
      json rows = json::array();
      std::ostringstream h;
      for (std::size_t k = lo; k <= hi; ++k) {
        const auto v = form.evaluate(k);
        const bool exc = form.is_exception(k);
        rows.push_back({{"m", k}, {"gamma2", v}, {"exception", exc}});
        if (lo == hi) h << v << (exc ? " (exception)" : "") << '\n';
        else h << "m=" << k << ' ' << v << (exc ? " (exception)" : "") << '\n';
      }
      print(json{{"n", n}, {"recurrence", form.recurrence()}, {"values", rows}}, h.str(), s);
    } else if (*table) {
      if (n_min < 3 || n_max < n_min) throw cyldom::InvalidArgument("table needs 3 <= n-min <= n-max");
      json rows = json::array();
      std::ostringstream h;
      if (s.format == "csv") h << "n,suitable,m0,a,b,boundary,remaining\n";
      for (std::size_t k = n_min; k <= n_max; ++k) {
        Runner per(s);
        const auto rec = per.recurrence(k);
        const auto words = per.system(k).table.size();
        json row = rec;
        row["suitable"] = words;
        rows.push_back(row);
        if (s.format == "csv")
          h << k << ',' << words << ',' << rec.m0 << ',' << rec.a << ',' << rec.b << ',' << join_map(rec.boundary) << ','
            << join_map(rec.remaining) << '\n';
        else
          h << "n=" << k << " suitable=" << words << " m0=" << rec.m0 << " a=" << rec.a << " b=" << rec.b
            << " boundary=" << join_map(rec.boundary) << " remaining=" << join_map(rec.remaining) << '\n';
      }
      if (s.format == "json") std::cout << rows.dump() << '\n';
      else std::cout << h.str();
    } else if (*verify) {
      if (m < 2) throw cyldom::InvalidArgument("m must satisfy m >= 2, got " + std::to_string(m));
      const auto brute = cyldom::brute_minimum_2_dominating(n, m, budget);
      const auto transfer = cyldom::gamma2_fixed(run.system(n), m);
      const bool ok = brute.gamma2 == transfer;
      const auto g = cyldom::build_cylinder(n, m);
      std::ostringstream h;
      h << (ok ? "OK" : "MISMATCH") << " n=" << n << " m=" << m << " transfer=" << transfer
        << " brute_force=" << brute.gamma2 << " witness=" << brute.witness.str(g) << '\n';
      print(json{{"n", n}, {"m", m}, {"transfer", transfer}, {"brute_force", brute.gamma2}, {"match", ok},
                 {"witness", brute.witness.str(g)}},
            h.str(), s);
      if (!ok) return kExitMismatch;
    } else if (*diff) {
      json rows = json::array();
      std::ostringstream h;
      for (const char* rule : {"strict", "pattern", "pattern-no-all-twos"}) {
        Settings per_rule = s;
        per_rule.rule = rule;
        Runner per(per_rule);
        const auto t = per.system(n).table.initial_count(parse_rule(rule));
        const auto rec = cyldom::find_recurrence(per.system(n), per.search());
        json row{{"rule", rule}, {"initial", t}, {"found", rec.has_value()}};
        h << "rule=" << rule << " initial=" << t;
        if (rec) {
          row["recurrence"] = *rec;
          h << " m0=" << rec->m0 << " a=" << rec->a << " b=" << rec->b << " boundary=" << join_map(rec->boundary)
            << " remaining=" << join_map(rec->remaining);
        } else {
          h << " no recurrence";
        }
        h << '\n';
        rows.push_back(row);
      }
      print(json{{"n", n}, {"rules", rows}}, h.str(), s);
    }
  } catch (const cyldom::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cyldom::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const NotFound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotFound;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
  return 0;
}
