// Command line front end: orbit, verify, export and sweep over the move
// diagrams.  Exit codes: 0 success, 1 bad input, 2 budget exceeded,
// 3 internal failure.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rauzy/rauzy.hpp"

namespace {

constexpr uint64_t kCacheVertexCap = 200000;

struct CacheOptions {
  std::string dir;
  bool disabled = false;
};

void add_cache_flags(CLI::App* cmd, CacheOptions& opts) {
  cmd->add_option("--cache-dir", opts.dir, "Directory for the diagram cache");
  cmd->add_flag("--no-cache", opts.disabled, "Skip the cache entirely");
}

rauzy::LabeledPermutation parse_seed(const std::string& text) {
  return rauzy::parse_labeled(text);
}

std::string seed_cache_id(const rauzy::LabeledPermutation& seed,
                          rauzy::Mode mode) {
  if (mode == rauzy::Mode::Labeled) return seed.canonical_key();
  return rauzy::reduce(seed).canonical_key();
}

// Cache wrapper around enumerate_class.  The budget stays out of the cache
// key: a hit larger than the current budget behaves exactly like a fresh
// enumeration would, and only modest diagrams are stored at all.
rauzy::RauzyDiagram cached_enumerate(const rauzy::LabeledPermutation& seed,
                                     rauzy::Mode mode, uint64_t budget,
                                     const rauzy::DiskCache& cache) {
  std::string key = rauzy::diagram_cache_key(rauzy::mode_name(mode),
                                             seed_cache_id(seed, mode));
  if (auto hit = cache.get(key)) {
    try {
      rauzy::RauzyDiagram dia = rauzy::diagram_from_json(*hit);
      if (dia.size() > budget) throw rauzy::BudgetExceeded(budget);
      return dia;
    } catch (const rauzy::BudgetExceeded&) {
      throw;
    } catch (const rauzy::Error&) {
      // corrupt entry: fall through to a clean enumeration
    }
  }
  rauzy::RauzyDiagram dia = rauzy::enumerate_class(seed, mode, budget);
  if (dia.size() <= kCacheVertexCap) cache.put(key, rauzy::diagram_to_json(dia));
  return dia;
}

// Labeled cardinality with its own small cache entry; the labeled diagram
// itself is often too big to be worth storing.
uint64_t cached_labeled_size(const rauzy::LabeledPermutation& seed,
                             uint64_t budget, const rauzy::DiskCache& cache) {
  std::string vkey = rauzy::verify_cache_key(
      seed_cache_id(seed, rauzy::Mode::Reduced));
  if (auto hit = cache.get(vkey)) {
    if (hit->is_object() && hit->contains("labeled_size")) {
      uint64_t n = (*hit)["labeled_size"].get<uint64_t>();
      if (n > budget) throw rauzy::BudgetExceeded(budget);
      return n;
    }
  }
  rauzy::RauzyDiagram labeled =
      rauzy::enumerate_class(seed, rauzy::Mode::Labeled, budget);
  cache.put(vkey, nlohmann::json{{"labeled_size", labeled.size()}});
  return labeled.size();
}

rauzy::RatioReport cached_verify(const rauzy::LabeledPermutation& seed,
                                 const rauzy::RauzyDiagram& reduced,
                                 uint64_t budget,
                                 const rauzy::DiskCache& cache) {
  return rauzy::make_report(seed, reduced,
                            cached_labeled_size(seed, budget, cache));
}

int run_orbit(const std::string& perm_text, const std::string& mode_text,
              uint64_t budget, const CacheOptions& copts) {
  rauzy::LabeledPermutation seed = parse_seed(perm_text);
  rauzy::Mode mode = rauzy::mode_from_name(mode_text);
  rauzy::DiskCache cache = rauzy::resolve_cache(copts.dir, copts.disabled);
  rauzy::RauzyDiagram dia = cached_enumerate(seed, mode, budget, cache);
  rauzy::MarkedProfile prof = rauzy::profile(seed);
  std::cout << dia.size() << "\n";
  std::cout << "d=" << seed.size() << " mode=" << rauzy::mode_name(mode)
            << " stratum=" << rauzy::stratum_text(prof)
            << " marked=" << prof.marked_degree << " genus=" << prof.genus
            << "\n";
  return 0;
}

int run_verify(const std::string& perm_text, uint64_t budget,
               const CacheOptions& copts) {
  rauzy::LabeledPermutation seed = parse_seed(perm_text);
  rauzy::DiskCache cache = rauzy::resolve_cache(copts.dir, copts.disabled);
  rauzy::RauzyDiagram reduced =
      cached_enumerate(seed, rauzy::Mode::Reduced, budget, cache);
  rauzy::RatioReport rep = cached_verify(seed, reduced, budget, cache);
  std::cout << rauzy::report_json(rep).dump(2) << "\n";
  return 0;
}

int run_export(const std::string& perm_text, const std::string& mode_text,
               const std::string& format, const std::string& out_path,
               uint64_t budget, const CacheOptions& copts) {
  rauzy::LabeledPermutation seed = parse_seed(perm_text);
  rauzy::Mode mode = rauzy::mode_from_name(mode_text);
  if (format != "dot" && format != "json")
    throw rauzy::ParseError("unknown format: " + format);
  rauzy::DiskCache cache = rauzy::resolve_cache(copts.dir, copts.disabled);
  rauzy::RauzyDiagram dia = cached_enumerate(seed, mode, budget, cache);
  std::string body = format == "dot" ? rauzy::export_dot(dia)
                                     : rauzy::export_json(dia);
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
  } else {
    std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
    if (!out) throw rauzy::ParseError("cannot open output file: " + out_path);
    out << body;
    if (!out) throw rauzy::InternalError("failed writing " + out_path);
  }
  return 0;
}

int run_sweep(int max_d, const std::string& report_path, uint64_t budget,
              const CacheOptions& copts) {
  if (max_d < 2 || max_d > 8)
    throw rauzy::ParseError("sweep supports 2 <= max-d <= 8");
  rauzy::DiskCache cache = rauzy::resolve_cache(copts.dir, copts.disabled);
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  uint64_t total_classes = 0, total_matches = 0, total_mismatches = 0,
           total_unclassifiable = 0;

  for (int d = 2; d <= max_d; ++d) {
    std::map<std::string, bool> seen;  // reduced key -> already classified
    uint64_t d_classes = 0, d_perms = 0;
    std::vector<uint8_t> word(d);
    for (int j = 0; j < d; ++j) word[j] = static_cast<uint8_t>(j + 1);
    do {
      rauzy::ReducedPermutation seed{rauzy::Word(word.begin(), word.end())};
      if (!rauzy::is_irreducible(seed)) continue;
      ++d_perms;
      if (seen.count(seed.canonical_key())) continue;
      rauzy::LabeledPermutation lifted = rauzy::embed(seed);
      rauzy::RauzyDiagram dia =
          cached_enumerate(lifted, rauzy::Mode::Reduced, budget, cache);
      rauzy::RatioReport rep = cached_verify(lifted, dia, budget, cache);
      for (const auto& key : dia.keys) seen[key] = true;
      ++d_classes;
      ++total_classes;
      if (rep.verdict == "match") ++total_matches;
      else if (rep.verdict == "mismatch") ++total_mismatches;
      else ++total_unclassifiable;
      classes.push_back(rauzy::report_json(rep));
    } while (std::next_permutation(word.begin(), word.end()));
    std::cout << "d=" << d << " irreducible=" << d_perms
              << " classes=" << d_classes << "\n";
  }

  nlohmann::ordered_json report;
  report["max_d"] = max_d;
  report["classes"] = std::move(classes);
  nlohmann::ordered_json summary;
  summary["classes"] = total_classes;
  summary["match"] = total_matches;
  summary["mismatch"] = total_mismatches;
  summary["unclassifiable"] = total_unclassifiable;
  report["summary"] = std::move(summary);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::trunc | std::ios::binary);
    if (!out)
      throw rauzy::ParseError("cannot open report file: " + report_path);
    out << report.dump(2) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  std::cout << "classes=" << total_classes << " match=" << total_matches
            << " mismatch=" << total_mismatches
            << " unclassifiable=" << total_unclassifiable << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rauzy class explorer"};
  app.require_subcommand(1);

  std::string perm_text, mode_text = "reduced", format = "json", out_path;
  std::string report_path;
  uint64_t budget = 10000000;
  int max_d = 4;
  CacheOptions copts;

  CLI::App* orbit = app.add_subcommand("orbit", "Count one move class");
  orbit->add_option("perm", perm_text, "Permutation, e.g. \"1 2 3 / 3 2 1\"")
      ->required();
  orbit->add_option("--mode", mode_text, "reduced or labeled")
      ->check(CLI::IsMember({"reduced", "labeled"}));
  orbit->add_option("--budget", budget, "Vertex budget");
  add_cache_flags(orbit, copts);

  CLI::App* verify = app.add_subcommand(
      "verify", "Compare the enumerated cardinality ratio to the predicted one");
  verify->add_option("perm", perm_text, "Permutation seed")->required();
  verify->add_option("--budget", budget, "Vertex budget");
  add_cache_flags(verify, copts);

  CLI::App* exp = app.add_subcommand("export", "Write a diagram to dot or json");
  exp->add_option("perm", perm_text, "Permutation seed")->required();
  exp->add_option("--mode", mode_text, "reduced or labeled")
      ->check(CLI::IsMember({"reduced", "labeled"}));
  exp->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--out", out_path, "Output path, - for stdout");
  exp->add_option("--budget", budget, "Vertex budget");
  add_cache_flags(exp, copts);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Verify every class up to a symbol count");
  sweep->add_option("--max-d", max_d, "Largest symbol count")->required();
  sweep->add_option("--report", report_path, "Report file path");
  sweep->add_option("--budget", budget, "Vertex budget");
  add_cache_flags(sweep, copts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 1;
  }

  try {
    if (orbit->parsed())
      return run_orbit(perm_text, mode_text, budget, copts);
    if (verify->parsed()) return run_verify(perm_text, budget, copts);
    if (exp->parsed())
      return run_export(perm_text, mode_text, format, out_path, budget, copts);
    if (sweep->parsed()) return run_sweep(max_d, report_path, budget, copts);
  } catch (const rauzy::BudgetExceeded& e) {
    std::cerr << "error: budget exceeded after " << e.discovered
              << " vertices\n";
    return 2;
  } catch (const rauzy::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const rauzy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
