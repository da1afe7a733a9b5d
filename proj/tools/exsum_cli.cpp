// Command-line front end: every solver on rational text files.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exsum/constellation.hpp"
#include "exsum/errors.hpp"
#include "exsum/oracle.hpp"
#include "exsum/prony.hpp"
#include "exsum/restricted.hpp"
#include "exsum/subsetsum.hpp"
#include "exsum/sumset.hpp"
#include "exsum/text_io.hpp"
#include "exsum/threesum.hpp"

using namespace exsum;
using json = nlohmann::json;

namespace {

struct RunReport {
  std::string operation;
  std::vector<std::size_t> input_sizes;
  std::size_t output_size = 0;
  double elapsed = 0;
  std::size_t retries = 0;
  std::uint64_t seed = 0;

  json to_json() const {
    return {{"operation", operation}, {"input_sizes", input_sizes}, {"output_size", output_size},
            {"elapsed_seconds", elapsed}, {"retries", retries}, {"seed", std::to_string(seed)}};
  }

  std::string to_plain() const {
    std::ostringstream os;
    os << "operation=" << operation << " inputs=";
    for (std::size_t i = 0; i < input_sizes.size(); ++i) os << (i ? "," : "") << input_sizes[i];
    os << " output=" << output_size << " elapsed=" << elapsed << " retries=" << retries
       << " seed=" << seed;
    return os.str();
  }
};

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "plain";
  bool stats = false;
  unsigned threads = 1;
};

RealSet read_set(const std::string& path) { return RealSet(read_rationals_file(path)); }

Rat parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rat(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what(), 0);
  }
}

// Result payload: a value list, function entries, a count or a boolean.
struct Result {
  std::optional<RealSet> set;
  std::optional<SparseFn> fn;
  std::optional<std::size_t> count;
  std::optional<bool> truth;
};

void emit(const Result& r, RunReport& report, const Globals& g) {
  json values;
  std::ostringstream plain;
  if (r.set) {
    values = json::array();
    for (const Rat& x : *r.set) {
      values.push_back(to_string(x));
      plain << to_string(x) << '\n';
    }
    report.output_size = r.set->size();
  } else if (r.fn) {
    values = json::array();
    for (const auto& [x, v] : r.fn->entries()) {
      values.push_back({to_string(x), to_string(v)});
      plain << to_string(x) << ' ' << to_string(v) << '\n';
    }
    report.output_size = r.fn->size();
  } else if (r.count) {
    values = *r.count;
    plain << *r.count << '\n';
    report.output_size = 1;
  } else if (r.truth) {
    values = *r.truth;
    plain << (*r.truth ? "true" : "false") << '\n';
    report.output_size = 1;
  }
  if (g.format == "json") {
    json doc{{"schema", 1}, {"result", values}, {"report", report.to_json()}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << plain.str();
  }
  if (g.stats) {
    if (g.format == "json") std::cerr << report.to_json().dump() << '\n';
    else std::cerr << report.to_plain() << '\n';
  }
}

int bench(const std::string& suite, const std::vector<std::size_t>& sizes, const Globals& g) {
  using clock = std::chrono::steady_clock;
  Rng rng(g.seed);
  std::cout << "suite " << suite << "\n";
  double prev_fast = 0, prev_brute = 0;
  for (std::size_t n : sizes) {
    std::vector<Rat> a, b;
    if (suite == "ap") {
      for (std::size_t i = 0; i < n; ++i) a.push_back(Rat(static_cast<long>(i)));
      b = a;
    } else if (suite == "random") {
      for (std::size_t i = 0; i < n; ++i) {
        a.push_back(Rat(rng.uniform_int(0, static_cast<std::int64_t>(4 * n))));
        b.push_back(Rat(rng.uniform_int(0, static_cast<std::int64_t>(4 * n))));
      }
    } else {
      throw ContractError("unknown bench suite " + suite + " (ap, random)");
    }
    const RealSet as(a), bs(b);
    SumsetOptions options;
    options.threads = g.threads;
    const auto t0 = clock::now();
    const RealSet fast = compute_sumset(as, bs, rng, options);
    const auto t1 = clock::now();
    const RealSet slow = oracle::brute_sumset(as, bs);
    const auto t2 = clock::now();
    const double tf = std::chrono::duration<double>(t1 - t0).count();
    const double tb = std::chrono::duration<double>(t2 - t1).count();
    std::cout << "n=" << n << " |A+B|=" << fast.size() << " compute_sumset=" << tf
              << "s brute=" << tb << "s";
    if (prev_fast > 0) std::cout << " ratio=" << tf / prev_fast << " brute_ratio=" << tb / prev_brute;
    std::cout << (fast == slow ? "" : " MISMATCH") << "\n";
    prev_fast = tf;
    prev_brute = tb;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact output-sensitive sumsets over the rationals"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->envname("EXACT_SUMSET_SEED");
  app.add_option("--format", g.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  app.add_flag("--stats", g.stats, "print a run report to standard error");
  app.add_option("--threads", g.threads, "worker threads for restriction batches")
      ->check(CLI::PositiveNumber);

  std::string fa, fb, fc, qa, qb, qc, lo_text, hi_text, target_text, suite;
  std::vector<std::string> query_files;
  std::vector<std::size_t> sizes{8, 16, 32, 64};

  auto* sumset = app.add_subcommand("sumset", "A + B");
  sumset->add_option("A", fa)->required();
  sumset->add_option("B", fb)->required();
  auto* conv = app.add_subcommand("convolve", "f ⊛ g of two point/value files");
  conv->add_option("F", fa)->required();
  conv->add_option("G", fb)->required();
  auto* size = app.add_subcommand("size", "|A + B|");
  size->add_option("A", fa)->required();
  size->add_option("B", fb)->required();
  auto* cons = app.add_subcommand("constellation", "all s with A + s ⊆ B");
  cons->add_option("A", fa)->required();
  cons->add_option("B", fb)->required();
  auto* prefix = app.add_subcommand("prefix", "(A + B) ∩ (-∞, u]");
  prefix->add_option("A", fa)->required();
  prefix->add_option("B", fb)->required();
  prefix->add_option("--max", hi_text, "u")->required();
  auto* interval = app.add_subcommand("interval", "(A + B) ∩ [l, u]");
  interval->add_option("A", fa)->required();
  interval->add_option("B", fb)->required();
  interval->add_option("--min", lo_text, "l")->required();
  interval->add_option("--max", hi_text, "u")->required();
  auto* subset = app.add_subcommand("subsetsum", "subset sums, capped at --target when given");
  subset->add_option("X", fa)->required();
  subset->add_option("--target", target_text, "t");
  auto* three = app.add_subcommand("threesum", "a + b = c with a, b, c from the query files");
  three->add_option("A", fa)->required();
  three->add_option("B", fb)->required();
  three->add_option("C", fc)->required();
  three->add_option("--query", query_files, "Aq Bq Cq")->expected(3)->required();
  auto* bench_cmd = app.add_subcommand("bench", "timing suite: ap or random");
  bench_cmd->add_option("suite", suite)->required();
  bench_cmd->add_option("--sizes", sizes, "instance sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  using clock = std::chrono::steady_clock;
  try {
    Rng rng(g.seed);
    SumsetStats sstats;
    SumsetOptions options;
    options.threads = g.threads;
    options.stats = &sstats;
    RunReport report;
    report.seed = g.seed;
    Result result;
    const auto t0 = clock::now();

    if (*sumset) {
      const RealSet a = read_set(fa), b = read_set(fb);
      report = {"sumset", {a.size(), b.size()}};
      if (a.empty() || b.empty()) result.set = RealSet{};
      else result.set = compute_sumset(a, b, rng, options);
      report.retries = sstats.attempts;
    } else if (*conv) {
      const SparseFn f = read_function_file(fa), h = read_function_file(fb);
      report = {"convolve", {f.size(), h.size()}};
      result.fn = convolve(f, h, rng, options);
      report.retries = sstats.attempts;
    } else if (*size) {
      const RealSet a = read_set(fa), b = read_set(fb);
      report = {"size", {a.size(), b.size()}};
      result.count = a.empty() || b.empty() ? 0 : sumset_size(a, b);
    } else if (*cons) {
      const RealSet a = read_set(fa), b = read_set(fb);
      report = {"constellation", {a.size(), b.size()}};
      ConstellationStats cstats;
      ConstellationOptions copt;
      copt.stats = &cstats;
      result.set = constellation(a, b, rng, copt);
      report.retries = cstats.restarts;
    } else if (*prefix) {
      const RealSet a = read_set(fa), b = read_set(fb);
      const Rat u = parse_flag("--max", hi_text);
      report = {"prefix", {a.size(), b.size()}};
      result.set = prefix_sumset(a, b, u, rng);
    } else if (*interval) {
      const RealSet a = read_set(fa), b = read_set(fb);
      const Rat lo = parse_flag("--min", lo_text), hi = parse_flag("--max", hi_text);
      report = {"interval", {a.size(), b.size()}};
      result.set = interval_sumset(a, b, lo, hi, rng);
    } else if (*subset) {
      const RatMultiset x(read_rationals_file(fa));
      report = {"subsetsum", {x.count()}};
      if (target_text.empty()) {
        result.set = all_subset_sums(x, rng);
      } else {
        result.set = capped_subset_sums(x, parse_flag("--target", target_text), rng);
      }
    } else if (*three) {
      const auto& q = query_files;
      const RealSet a = read_set(fa), b = read_set(fb), c = read_set(fc);
      const RealSet aq = read_set(q[0]), bq = read_set(q[1]), cq = read_set(q[2]);
      report = {"threesum", {a.size(), b.size(), c.size()}};
      const ThreeSumIndex idx = preprocess(a, b, c, rng);
      result.truth = query(idx, aq, bq, cq, rng);
    } else if (*bench_cmd) {
      return bench(suite, sizes, g);
    }
    report.seed = g.seed;
    report.elapsed = std::chrono::duration<double>(clock::now() - t0).count();
    emit(result, report, g);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 3;
  } catch (const RetryCapError& e) {
    std::cerr << "retry cap: " << e.what() << '\n';
    return 1;
  }
}
