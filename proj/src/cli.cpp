#include "gauss_landau/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gauss_landau/errors.hpp"
#include "gauss_landau/factorization.hpp"
#include "gauss_landau/gcd_lcm.hpp"
#include "gauss_landau/landau.hpp"
#include "gauss_landau/permutation.hpp"
#include "gauss_landau/sieve.hpp"
#include "gauss_landau/verify.hpp"

namespace gauss_landau::cli {
namespace {

using Json = nlohmann::json;

enum class Format { kText, kJson, kCsv };

// Everything a subcommand reports; rendered once in the requested format.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  Json verification;  // null when the command has no oracle check
  std::string text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::string mismatch;  // nonempty -> exit 2
};

std::uint64_t parse_u64(const std::string& text, const char* what, std::uint64_t min_value) {
  const BigInt v = parse_decimal(text);
  if (v < min_value || v > kMaxInput) {
    throw DomainError(std::string(what) + " must be an integer in [" + std::to_string(min_value) +
                      ", 18446744073709551615], got " + text);
  }
  return v.convert_to<std::uint64_t>();
}

std::uint32_t parse_u32(const std::string& text, const char* what, std::uint32_t min_value) {
  const std::uint64_t v = parse_u64(text, what, min_value);
  if (v > 0xFFFF'FFFFULL) throw DomainError(std::string(what) + " too large: " + text);
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_u32(item, what, 1));
  if (out.empty() || text.back() == ',') throw DomainError(std::string(what) + ": empty list entry");
  return out;
}

template <typename Range>
std::string join(const Range& values, const char* sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

std::string format_ratio(const std::optional<double>& ratio) {
  if (!ratio) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *ratio);
  return buf;
}

Json ratio_json(const std::optional<double>& ratio) {
  if (!ratio) return nullptr;
  return std::stod(format_ratio(ratio));
}

std::string lcm_of(std::span<const std::uint32_t> parts) {
  const std::vector<std::uint64_t> wide(parts.begin(), parts.end());
  return to_decimal(gcd_lcm_set(std::span<const std::uint64_t>(wide)).lcm);
}

// ---- subcommands ----------------------------------------------------------

OutputRecord cmd_factor(const std::string& arg) {
  const BigInt n = parse_decimal(arg);
  const Factorization f = factorize(n);
  OutputRecord out;
  out.command = "factor";
  out.inputs["n"] = to_decimal(n);
  Json factors = Json::array();
  std::string text;
  for (const PrimePower& e : f.entries()) {
    factors.push_back({{"prime", e.prime}, {"exponent", e.exponent}});
    if (!text.empty()) text += " * ";
    text += std::to_string(e.prime);
    if (e.exponent > 1) text += "^" + std::to_string(e.exponent);
    out.csv_rows.push_back({std::to_string(e.prime), std::to_string(e.exponent)});
  }
  out.result["factors"] = factors;
  out.csv_header = {"prime", "exponent"};
  out.text = to_decimal(n) + " = " + (text.empty() ? "1" : text);

  const BigInt back = reconstruct(f);
  out.verification = {{"reconstructed", to_decimal(back)}, {"agrees", back == n}};
  if (back != n) out.mismatch = "reconstruct(factorize(n)) = " + to_decimal(back);
  return out;
}

OutputRecord cmd_gcd_lcm(const std::string& name, const std::vector<std::string>& args) {
  if (args.size() < 2) throw DomainError(name + " needs at least two integers");
  std::vector<BigInt> values;
  for (const auto& a : args) values.push_back(parse_decimal(a));
  const GcdLcmResult r = gcd_lcm_set(values);

  OutputRecord out;
  out.command = name;
  Json echo = Json::array();
  for (const auto& v : values) echo.push_back(to_decimal(v));
  out.inputs["values"] = echo;
  out.result["support"] = std::vector<std::uint64_t>(r.support.primes().begin(), r.support.primes().end());
  out.result["max_exponents"] = std::vector<std::uint32_t>(r.max_exponents.exponents().begin(),
                                                           r.max_exponents.exponents().end());
  out.result["lcm"] = to_decimal(r.lcm);
  if (name == "gcd") {
    out.result["gcd"] = r.gcd;
    out.result["min_exponents"] = std::vector<std::uint32_t>(r.min_exponents.exponents().begin(),
                                                             r.min_exponents.exponents().end());
    out.text = "gcd = " + std::to_string(r.gcd) + ", lcm = " + to_decimal(r.lcm);
    out.csv_header = {"gcd", "lcm"};
    out.csv_rows = {{std::to_string(r.gcd), to_decimal(r.lcm)}};
  } else {
    out.text = "lcm = " + to_decimal(r.lcm);
    out.csv_header = {"lcm"};
    out.csv_rows = {{to_decimal(r.lcm)}};
  }

  // Independent route: fold Euclid's gcd and a*b/gcd(a, b).
  BigInt euclid_gcd = abs(values[0]);
  BigInt euclid_lcm = abs(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    const BigInt v = abs(values[i]);
    euclid_gcd = gcd_euclid(euclid_gcd, v);
    euclid_lcm = euclid_lcm * v / gcd_euclid(euclid_lcm, v);
  }
  const bool agrees = euclid_gcd == r.gcd && euclid_lcm == r.lcm;
  out.verification = {{"euclid_gcd", to_decimal(euclid_gcd)},
                      {"euclid_lcm", to_decimal(euclid_lcm)},
                      {"agrees", agrees}};
  if (!agrees) out.mismatch = "exponent route disagrees with Euclid's algorithm";
  return out;
}

OutputRecord cmd_ratio(const std::string& a_text, const std::string& b_text) {
  const BigInt a = parse_decimal(a_text);
  const BigInt b = parse_decimal(b_text);
  const ReducedRatio r = reduce_ratio(a, b);
  OutputRecord out;
  out.command = "ratio";
  out.inputs = {{"a", to_decimal(a)}, {"b", to_decimal(b)}};
  out.result = {{"left", r.left}, {"right", r.right}};
  out.text = to_decimal(a) + ":" + to_decimal(b) + " = " + std::to_string(r.left) + ":" +
             std::to_string(r.right);
  out.csv_header = {"left", "right"};
  out.csv_rows = {{std::to_string(r.left), std::to_string(r.right)}};

  const BigInt g = gcd_euclid(a, b);
  const bool agrees = BigInt(r.left) * g == abs(a) && BigInt(r.right) * g == abs(b) &&
                      gcd_euclid(r.left, r.right) == 1;
  out.verification = {{"euclid_gcd", to_decimal(g)}, {"agrees", agrees}};
  if (!agrees) out.mismatch = "reduced ratio is not the Euclidean reduction";
  return out;
}

OutputRecord cmd_order(const std::string& cycles, const std::string& perm) {
  OutputRecord out;
  out.command = "order";
  CycleDecomposition d;
  std::vector<std::uint32_t> images;
  if (!cycles.empty()) {
    const auto lengths = parse_list(cycles, "cycle length");
    out.inputs["cycles"] = lengths;
    d = CycleDecomposition::from_lengths(lengths);
  } else {
    images = parse_list(perm, "permutation image");
    out.inputs["perm"] = images;
    d = cycle_decompose(images);
  }
  const BigInt ord = order(d);
  out.result = {{"n", d.n()},
                {"cycle_lengths", std::vector<std::uint32_t>(d.cycle_lengths().begin(), d.cycle_lengths().end())},
                {"order", to_decimal(ord)}};
  out.text = "order = " + to_decimal(ord);
  out.csv_header = {"n", "cycle_lengths", "order"};
  out.csv_rows = {{std::to_string(d.n()), join(d.cycle_lengths(), "+"), to_decimal(ord)}};
  if (!images.empty()) {
    const bool identity = verify_order(images, ord);
    out.verification = {{"power_is_identity", identity}};
    if (!identity) out.mismatch = "perm^order is not the identity";
  }
  return out;
}

OutputRecord cmd_landau(const std::string& n_text, const std::string& method) {
  const std::uint32_t n = parse_u32(n_text, "n", 1);
  OutputRecord out;
  out.command = "landau";
  out.inputs = {{"n", n}, {"method", method}};
  out.csv_header = {"n", "method", "g_n", "ratio", "witness"};

  std::vector<std::pair<std::string, LandauRecord>> runs;
  if (method == "brute" || method == "both") runs.emplace_back("brute", landau_bruteforce(n));
  if (method == "dp" || method == "both") runs.emplace_back("dp", landau_dp(n));

  Json witnesses_ok = Json::object();
  std::vector<std::string> lines;
  bool all_ok = true;
  for (const auto& [name, rec] : runs) {
    Json entry = {{"value", to_decimal(rec.value)},
                  {"witness", std::vector<std::uint32_t>(rec.witness.parts().begin(), rec.witness.parts().end())}};
    std::string line = name + ": g(" + std::to_string(n) + ") = " + to_decimal(rec.value) +
                       ", witness = " + join(rec.witness.parts(), "+");
    if (rec.partitions_enumerated) {
      entry["partitions"] = *rec.partitions_enumerated;
      line += ", partitions = " + std::to_string(*rec.partitions_enumerated);
    }
    out.result[name] = entry;
    lines.push_back(line);
    out.csv_rows.push_back({std::to_string(n), name, to_decimal(rec.value), format_ratio(rec.ratio),
                            join(rec.witness.parts(), "+")});
    const bool ok = rec.witness.n() == n && lcm_of(rec.witness.parts()) == to_decimal(rec.value);
    witnesses_ok[name] = ok;
    all_ok = all_ok && ok;
  }
  out.result["ratio"] = ratio_json(runs.front().second.ratio);
  if (const auto& ratio = runs.front().second.ratio) lines.push_back("ratio = " + format_ratio(ratio));

  out.verification["witness_lcm_verified"] = witnesses_ok;
  if (!all_ok) out.mismatch = "a witness partition does not attain the reported value";
  if (runs.size() == 2) {
    const bool agree = runs[0].second.value == runs[1].second.value;
    out.verification["values_agree"] = agree;
    if (!agree) out.mismatch = "brute force and DP disagree";
  }
  for (const auto& l : lines) out.text += (out.text.empty() ? "" : "\n") + l;
  return out;
}

OutputRecord cmd_table(const std::string& max_text, const std::string& step_text) {
  const std::uint32_t n_max = parse_u32(max_text, "max", 2);
  const std::uint32_t step = parse_u32(step_text, "step", 1);
  const auto rows = asymptotic_table(n_max, step);

  OutputRecord out;
  out.command = "table";
  out.inputs = {{"max", n_max}, {"step", step}};
  out.csv_header = {"n", "g_n", "ratio", "witness"};
  Json json_rows = Json::array();
  std::uint64_t checked = 0;
  for (const LandauRecord& r : rows) {
    const std::vector<std::uint32_t> parts(r.witness.parts().begin(), r.witness.parts().end());
    json_rows.push_back({{"n", r.n}, {"g_n", to_decimal(r.value)}, {"ratio", ratio_json(r.ratio)}, {"witness", parts}});
    out.csv_rows.push_back({std::to_string(r.n), to_decimal(r.value), format_ratio(r.ratio), join(parts, "+")});
    if (r.witness.n() == r.n && lcm_of(parts) == to_decimal(r.value)) {
      ++checked;
    } else if (out.mismatch.empty()) {
      out.mismatch = "witness for n = " + std::to_string(r.n) + " does not attain g(n)";
    }
  }
  out.result["rows"] = json_rows;
  out.verification = {{"witnesses_checked", checked}, {"rows", rows.size()}};
  return out;
}

OutputRecord cmd_verify(const std::string& kind_text, const std::string& count_text,
                        const std::string& seed_text, const std::string& max_text) {
  const auto kind = parse_sweep_kind(kind_text);
  if (!kind) throw DomainError("unknown verify kind '" + kind_text + "'");
  const std::uint64_t count = parse_u64(count_text, "count", 1);
  const std::uint64_t seed = parse_u64(seed_text, "seed", 0);
  const std::uint64_t max = parse_u64(max_text, "max", 2);
  const SweepReport rep = verify_sweep(*kind, count, seed, max);

  OutputRecord out;
  out.command = "verify";
  out.inputs = {{"kind", kind_text}, {"count", count}, {"seed", seed}, {"max", max}};
  out.result = {{"passed", rep.passed}, {"failed", rep.failed}};
  out.text = "verify " + kind_text + ": " + std::to_string(rep.passed) + "/" + std::to_string(count) +
             " passed (seed " + std::to_string(seed) + ", max " + std::to_string(max) + ")";
  out.csv_header = {"kind", "count", "seed", "max", "passed", "failed"};
  out.csv_rows = {{kind_text, std::to_string(count), std::to_string(seed), std::to_string(max),
                   std::to_string(rep.passed), std::to_string(rep.failed)}};
  if (rep.first_failure) {
    out.verification = {{"counterexample", {{"inputs", rep.first_failure->inputs},
                                            {"detail", rep.first_failure->detail}}}};
    out.text += "\nfirst counterexample: " + join(rep.first_failure->inputs, ", ") + ": " +
                rep.first_failure->detail;
    out.mismatch = "verification sweep found a counterexample";
  }
  return out;
}

// ---- rendering --------------------------------------------------------------

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) line += ',';
    line += cells[i];
  }
  return line + '\n';
}

std::string render(const OutputRecord& rec, Format format) {
  switch (format) {
    case Format::kJson: {
      Json doc = {{"command", rec.command}, {"inputs", rec.inputs}, {"result", rec.result}};
      if (!rec.verification.is_null()) doc["verification"] = rec.verification;
      return doc.dump(2) + '\n';
    }
    case Format::kCsv: {
      std::string text = csv_line(rec.csv_header);
      for (const auto& row : rec.csv_rows) text += csv_line(row);
      return text;
    }
    case Format::kText:
      break;
  }
  // The table is CSV by nature; its text form is the CSV.
  if (rec.command == "table") return render(rec, Format::kCsv);
  return rec.text + '\n';
}

void load_sieve_cache(const std::string& path) {
  if (auto cached = read_sieve_cache(path)) {
    PrimeSieve::global().install(std::make_shared<const SieveSnapshot>(std::move(*cached)));
  }
}

void store_sieve_cache(const std::string& path) {
  const auto current = PrimeSieve::global().current();
  const auto on_disk = read_sieve_cache(path);
  if (current->limit >= 2 && (!on_disk || on_disk->limit < current->limit)) {
    write_sieve_cache(path, *current);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss-Landau number theory toolkit: gcd/lcm from prime exponents, "
               "Landau's function and permutation orders",
               "gauss_landau"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::string sieve_cache;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--sieve-cache", sieve_cache, "Binary prime cache file (read, and refreshed when grown)");

  std::string factor_n;
  auto* factor = app.add_subcommand("factor", "Prime factorization of a positive integer");
  factor->add_option("n", factor_n)->required();

  std::vector<std::string> gcd_values;
  auto* gcd = app.add_subcommand("gcd", "gcd and lcm of nonzero integers via min/max exponents");
  gcd->add_option("values", gcd_values)->required();
  std::vector<std::string> lcm_values;
  auto* lcm = app.add_subcommand("lcm", "lcm of nonzero integers via max exponents");
  lcm->add_option("values", lcm_values)->required();

  std::string ratio_a, ratio_b;
  auto* ratio = app.add_subcommand("ratio", "Reduce a:b to least terms");
  ratio->add_option("a", ratio_a)->required();
  ratio->add_option("b", ratio_b)->required();

  std::string cycles, perm;
  auto* ord = app.add_subcommand("order", "Order of a permutation");
  auto* cycles_opt = ord->add_option("--cycles", cycles, "Comma-separated cycle lengths");
  auto* perm_opt = ord->add_option("--perm", perm, "Comma-separated 1-based images (one-line notation)");
  cycles_opt->excludes(perm_opt);
  ord->require_option(1);

  std::string landau_n, method = "dp";
  auto* landau = app.add_subcommand("landau", "Landau's function g(n): maximum lcm over partitions of n");
  landau->add_option("n", landau_n)->required();
  landau->add_option("--method", method, "dp, brute or both")->check(CLI::IsMember({"dp", "brute", "both"}));

  std::string table_max, table_step = "1", table_out;
  auto* table = app.add_subcommand("table", "Tabulate g(n) and ln g(n) / sqrt(n ln n)");
  table->add_option("--max", table_max)->required();
  table->add_option("--step", table_step);
  table->add_option("--out", table_out, "Write the table here instead of standard output");

  std::string kind, count, seed, max;
  auto* verify = app.add_subcommand("verify", "Seeded randomized identity and oracle sweeps");
  verify->add_option("--kind", kind, "product, distributive, oracle or roundtrip")->required();
  verify->add_option("--count", count)->required();
  verify->add_option("--seed", seed)->required();
  verify->add_option("--max", max)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Format format = format_name == "json" ? Format::kJson
                        : format_name == "csv" ? Format::kCsv
                                               : Format::kText;
  try {
    if (!sieve_cache.empty()) load_sieve_cache(sieve_cache);

    OutputRecord rec;
    if (factor->parsed()) rec = cmd_factor(factor_n);
    else if (gcd->parsed()) rec = cmd_gcd_lcm("gcd", gcd_values);
    else if (lcm->parsed()) rec = cmd_gcd_lcm("lcm", lcm_values);
    else if (ratio->parsed()) rec = cmd_ratio(ratio_a, ratio_b);
    else if (ord->parsed()) rec = cmd_order(cycles, perm);
    else if (landau->parsed()) rec = cmd_landau(landau_n, method);
    else if (table->parsed()) rec = cmd_table(table_max, table_step);
    else rec = cmd_verify(kind, count, seed, max);

    const std::string rendered = render(rec, format);
    if (table->parsed() && !table_out.empty()) {
      std::ofstream file(table_out, std::ios::binary | std::ios::trunc);
      if (!file || !(file << rendered)) throw DomainError("cannot write " + table_out);
    } else {
      out << rendered;
    }

    if (!sieve_cache.empty()) store_sieve_cache(sieve_cache);
    if (!rec.mismatch.empty()) {
      err << "verification mismatch: " << rec.mismatch << '\n';
      return kExitMismatch;
    }
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gauss_landau::cli
