// Acceptance suite: one PASS/FAIL line per criterion, each under its own
// wall-clock budget. CLI-facing criteria run the real executable.
//
//   acceptance --cli <path to gauss_landau> --golden <dir> [--only <id>]
//
// The slow tier (landau-slow: DP vs brute force for n = 31..60) runs only
// when selected with --only.

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "gauss_landau/factorization.hpp"
#include "gauss_landau/gcd_lcm.hpp"
#include "gauss_landau/landau.hpp"
#include "gauss_landau/permutation.hpp"
#include "gauss_landau/rng.hpp"
#include "gauss_landau/verify.hpp"
#include "oracles.hpp"

using namespace gauss_landau;
using Json = nlohmann::json;

namespace {

std::string g_cli;
std::filesystem::path g_golden;

struct Process {
  int code = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 65536> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// Collects failures; an empty list means the criterion passed.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  std::string summary() const {
    if (failed_ == 0) return {};
    std::string s = std::to_string(failed_) + " check(s) failed: ";
    for (std::size_t i = 0; i < failures_.size(); ++i) s += (i ? "; " : "") + failures_[i];
    return s;
  }

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

Json cli_json(const std::string& args, Checks& c) {
  const Process p = run_cli("--format json " + args);
  c.expect(p.code == 0, "'" + args + "' exited " + std::to_string(p.code));
  try {
    return Json::parse(p.out);
  } catch (const std::exception&) {
    c.expect(false, "'" + args + "' produced invalid JSON");
    return Json::object();
  }
}

// ---- criteria ----------------------------------------------------------------

std::string gcd_60_90() {
  Checks c;
  const Process text = run_cli("gcd 60 90");
  c.expect(text.code == 0 && text.out == "gcd = 30, lcm = 180\n", "text output: " + text.out);
  const Json j = cli_json("gcd 60 90", c);
  c.expect(j["result"]["gcd"] == 30, "json gcd != 30");
  return c.summary();
}

std::string lcm_24_16() {
  Checks c;
  const Json ord = cli_json("order --cycles 24,16", c);
  c.expect(ord["result"]["order"] == "48", "order --cycles 24,16 != 48");
  c.expect(ord["result"]["n"] == 40, "degree != 40");
  const Json lcm = cli_json("lcm 24 16", c);
  c.expect(lcm["result"]["lcm"] == "48", "lcm 24 16 != 48");
  return c.summary();
}

std::string landau_5() {
  Checks c;
  const Json j = cli_json("landau 5 --method both", c);
  c.expect(j["result"]["brute"]["value"] == "6", "brute force value != 6");
  c.expect(j["result"]["dp"]["value"] == "6", "DP value != 6");
  c.expect(j["result"]["brute"]["partitions"] == 7, "brute force did not enumerate 7 partitions");
  c.expect(j["verification"]["values_agree"] == true, "values disagree");
  c.expect(j["verification"]["witness_lcm_verified"]["brute"] == true, "brute witness unverified");
  c.expect(j["verification"]["witness_lcm_verified"]["dp"] == true, "DP witness unverified");
  return c.summary();
}

std::string ratio_examples() {
  Checks c;
  for (const char* args : {"ratio 8 12", "ratio 10 15"}) {
    const Json j = cli_json(args, c);
    c.expect(j["result"]["left"] == 2 && j["result"]["right"] == 3, std::string(args) + " != 2:3");
  }
  return c.summary();
}

std::string sweep(const std::string& kind, std::uint64_t count, std::uint64_t seed, std::uint64_t max) {
  Checks c;
  const Json j = cli_json("verify --kind " + kind + " --count " + std::to_string(count) + " --seed " +
                              std::to_string(seed) + " --max " + std::to_string(max),
                          c);
  c.expect(j["result"]["passed"] == count, "passed = " + j["result"]["passed"].dump());
  c.expect(j["result"]["failed"] == 0, "failed = " + j["result"]["failed"].dump());
  return c.summary();
}

std::string distributive() {
  Checks c;
  const std::string via_cli = sweep("distributive", 1000, 7, 10'000);
  c.expect(via_cli.empty(), via_cli);
  // Same draws, inspected prime by prime.
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng.uniform(1, 10'000), b = rng.uniform(1, 10'000), d = rng.uniform(1, 10'000);
    const auto r = check_distributive_identity(a, b, d);
    c.expect(r.lhs == r.rhs, "integer sides differ");
    for (const auto& row : r.per_prime) c.expect(row.min_of_max == row.max_of_min, "prime row differs");
  }
  return c.summary();
}

std::string landau_range(std::uint32_t lo, std::uint32_t hi) {
  Checks c;
  const LandauTable table(hi);
  for (std::uint32_t n = lo; n <= hi; ++n) {
    const auto brute = landau_bruteforce(n);
    c.expect(table.value(n) == brute.value, "n = " + std::to_string(n));
  }
  return c.summary();
}

std::string permutation_minimality() {
  Checks c;
  SplitMix64 rng(2025);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::uint32_t>(rng.uniform(1, 12));
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 1u);
    for (std::uint32_t k = n; k > 1; --k) std::swap(p[k - 1], p[rng.uniform(0, k - 1)]);
    c.expect(order(cycle_decompose(p)) == oracles::order_by_iteration(p), "permutation " + std::to_string(i));
  }
  return c.summary();
}

std::string landau_link() {
  Checks c;
  for (std::uint32_t n = 1; n <= 7; ++n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 1u);
    BigInt best = 0;
    do {
      best = std::max(best, order(cycle_decompose(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    c.expect(best == landau_bruteforce(n).value, "n = " + std::to_string(n));
  }
  return c.summary();
}

std::string asymptotic() {
  Checks c;
  const Process p = run_cli("table --max 10000 --step 1");
  c.expect(p.code == 0, "table exited " + std::to_string(p.code));
  std::istringstream lines(p.out);
  std::string line;
  std::getline(lines, line);
  c.expect(line == "n,g_n,ratio,witness", "header: " + line);

  std::vector<double> ratios;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string n, g, ratio;
    std::getline(cells, n, ',');
    std::getline(cells, g, ',');
    std::getline(cells, ratio, ',');
    ratios.push_back(std::stod(ratio));
  }
  c.expect(ratios.size() == 9999, "rows = " + std::to_string(ratios.size()));
  const auto out_of_band = std::count_if(ratios.begin(), ratios.end(), [](double r) { return r <= 0 || r >= 1.2; });
  c.expect(out_of_band == 0, std::to_string(out_of_band) + " ratios outside (0, 1.2)");

  // Consecutive windows of 100 rows starting at n = 2.
  std::vector<double> windows;
  for (std::size_t i = 0; i < ratios.size(); i += 100) {
    const std::size_t end = std::min(ratios.size(), i + 100);
    windows.push_back(std::accumulate(ratios.begin() + i, ratios.begin() + end, 0.0) / (end - i));
  }
  std::size_t decreases = 0;
  std::size_t first = 0;
  for (std::size_t w = 1; w < windows.size(); ++w) {
    if (windows[w] < windows[w - 1] && decreases++ == 0) first = w;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "windowed averages decrease %zu times (first at window %zu: %.6f -> %.6f)", decreases, first,
                decreases ? windows[first - 1] : 0.0, decreases ? windows[first] : 0.0);
  c.expect(decreases == 0, detail);
  c.expect(!windows.empty() && windows.back() > 0.8, "final window average " + std::to_string(windows.back()));
  return c.summary();
}

std::string roundtrip() {
  Checks c;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    if (reconstruct(factorize(n)) != n) c.expect(false, "n = " + std::to_string(n));
  }
  const auto report = verify_sweep(SweepKind::kRoundtrip, 10'000, 64, kMaxInput);
  c.expect(report.passed == 10'000, "random 64-bit sweep failures: " + std::to_string(report.failed));

  const std::uint64_t p32 = 4294967291ULL, q32 = 4294967279ULL;
  const std::vector<std::uint64_t> special = {
      18446744073709551557ULL, 9223372036854775783ULL, p32, 1000000007ULL,   // primes
      561, 1105, 1729, 41041, 825265, 3825123056546413051ULL,                // Carmichael / strong pseudoprimes
      p32 * q32, p32 * p32, 1000003ULL * 1000033ULL * 1000037ULL, kMaxInput,  // hard composites
      std::uint64_t{1} << 63};
  for (std::uint64_t n : special) c.expect(reconstruct(factorize(n)) == n, "special n = " + std::to_string(n));
  for (std::uint64_t n : std::vector<std::uint64_t>{18446744073709551557ULL, 9223372036854775783ULL, p32}) {
    const Factorization f = factorize(n);
    c.expect(f.entries().size() == 1, "prime did not stay prime: " + std::to_string(n));
  }
  return c.summary();
}

std::string determinism() {
  Checks c;
  std::ifstream manifest(g_golden / "manifest.txt");
  std::string line;
  int goldens = 0;
  while (std::getline(manifest, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find(" | ");
    const std::string file = line.substr(0, bar);
    const std::string args = line.substr(bar + 3);
    const Process first = run_cli(args);
    const Process second = run_cli(args);
    c.expect(first.code == 0, args + " exited " + std::to_string(first.code));
    c.expect(first.out == second.out, args + " not byte-identical across runs");
    c.expect(first.out == read_file(g_golden / file), args + " differs from " + file);
    ++goldens;
  }
  c.expect(goldens == 7, "expected 7 golden files, found " + std::to_string(goldens));
  for (const char* args : {"verify --kind oracle --count 2000 --seed 99 --max 1000000000",
                           "--format json table --max 300 --step 3", "--format csv landau 40 --method both"}) {
    const Process a = run_cli(args);
    const Process b = run_cli(args);
    c.expect(a.code == 0 && a.out == b.out && !a.out.empty(), std::string(args) + " not deterministic");
  }
  return c.summary();
}

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<std::string()> body;
  bool slow = false;
};

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") g_cli = argv[i + 1];
    else if (flag == "--golden") g_golden = argv[i + 1];
    else if (flag == "--only") only = argv[i + 1];
  }
  if (g_cli.empty() || g_golden.empty()) {
    std::cerr << "usage: acceptance --cli <gauss_landau> --golden <dir> [--only <id>]\n";
    return 1;
  }

  const std::vector<Criterion> criteria = {
      {"gcd-60-90", "gcd 60 90 gives gcd = 30", 1, gcd_60_90},
      {"lcm-24-16", "order --cycles 24,16 and lcm 24 16 give 48", 1, lcm_24_16},
      {"landau-5", "landau 5 --method both gives 6 from both methods over 7 partitions", 1, landau_5},
      {"ratio", "ratio 8 12 and ratio 10 15 reduce to 2:3", 1, ratio_examples},
      {"oracle", "exponent gcd == Euclid gcd on 1e4 pairs in [1, 1e9]", 30,
       [] { return sweep("oracle", 10'000, 1, 1'000'000'000); }},
      {"product", "a*b == gcd*lcm on 1e3 pairs in [1, 1e6]", 30,
       [] { return sweep("product", 1000, 42, 1'000'000); }},
      {"distributive", "three-way gcd/lcm identity on 1e3 triples in [1, 1e4], per prime", 30, distributive},
      {"landau-dp", "Landau DP == brute force for n = 1..30", 120, [] { return landau_range(1, 30); }},
      {"landau-slow", "Landau DP == brute force for n = 31..60", 600, [] { return landau_range(31, 60); }, true},
      {"permutation", "order == minimal identity power for 100 permutations of degree <= 12", 30,
       permutation_minimality},
      {"landau-link", "max order over S_n == g(n) for n = 1..7", 60, landau_link},
      {"asymptotic", "table --max 10000: ratios in (0, 1.2), windowed averages non-decreasing, last > 0.8", 600,
       asymptotic},
      {"roundtrip", "reconstruct(factorize(n)) == n for n <= 1e6 and 1e4 random 64-bit values", 120, roundtrip},
      {"determinism", "repeated CLI runs are byte-identical and match golden files", 60, determinism},
  };

  int failed = 0, ran = 0;
  for (const Criterion& cr : criteria) {
    if (only.empty() ? cr.slow : cr.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = cr.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (failure.empty() && seconds > cr.budget_seconds) {
      failure = "took " + std::to_string(seconds) + " s, budget " + std::to_string(cr.budget_seconds) + " s";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", seconds, cr.budget_seconds);
    std::cout << (failure.empty() ? "[PASS] " : "[FAIL] ") << cr.id << ": " << cr.title << " " << timing;
    if (!failure.empty()) {
      std::cout << "\n       " << failure;
      ++failed;
    }
    std::cout << std::endl;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 && ran > 0 ? 0 : 1;
}
