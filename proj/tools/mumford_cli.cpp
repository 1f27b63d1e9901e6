#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mumford/cache.hpp"
#include "mumford/expand.hpp"
#include "mumford/localization.hpp"
#include "mumford/serialize.hpp"
#include "mumford/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    out << text << "\n";
  }
}

std::string render_class(const mumford::TautClass& c, const std::string& format) {
  if (format == "json") return mumford::class_to_json(c).dump(2);
  if (format == "latex") return mumford::class_to_latex(c);
  return mumford::class_to_text(c);
}

int cmd_relation(int genus, const std::string& format, const std::string& out) {
  write_output(render_class(mumford::boundary_formula(genus), format), out);
  return kExitOk;
}

int cmd_verify(const std::string& suite, int gmax, int jmax, const std::string& out) {
  using mumford::RelationReport;
  std::vector<RelationReport> reports;
  bool failed = false;

  auto run = [&](const std::string& name) {
    if (name == "cprime") {
      for (int g = 1; g <= gmax; ++g)
        for (int h = 1; h <= g; ++h) reports.push_back(mumford::verify_cprime(g, h));
    } else if (name == "replay") {
      for (int g = 1; g <= gmax; ++g) reports.push_back(mumford::replay_derivation(g));
    } else if (name == "remark1") {
      for (int g = 1; g <= std::min(gmax, 4); ++g)
        for (int j = 1; j <= jmax; ++j) reports.push_back(mumford::higher_coefficient_extract(g, j));
    } else if (name == "remark3") {
      for (int g = 2; g <= gmax; ++g) reports.push_back(mumford::kappa_relation(g));
    }
  };
  if (suite == "all") {
    run("cprime");
    run("replay");
    run("remark1");
    run("remark3");
  } else {
    run(suite);
  }

  mumford::json doc = mumford::json::array();
  for (const auto& rep : reports) {
    doc.push_back(mumford::relation_report_to_json(rep));
    std::string tag = rep.variant + " g=" + std::to_string(rep.genus) +
                      (rep.h ? " h=" + std::to_string(rep.h) : "") +
                      (rep.j ? " j=" + std::to_string(rep.j) : "");
    if (!rep.checked) {
      std::cout << "REPORT " << tag << (rep.ok ? "" : " (consistency FAILED)") << "\n";
      // Report-only relations never fail the run.
    } else if (rep.ok) {
      std::cout << "OK     " << tag << "\n";
    } else {
      std::cout << "FAIL   " << tag << "\n";
      for (const auto& note : rep.notes)
        if (note.rfind("MISMATCH", 0) == 0) std::cout << "       " << note << "\n";
      failed = true;
    }
  }
  if (!out.empty()) {
    std::ofstream f(out);
    f << doc.dump(2) << "\n";
  }
  return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_expand(int genus, long max_steps, int depth, const std::string& format,
               const std::string& out, const std::string& cache_dir, bool no_cache) {
  mumford::Cache cache(cache_dir);  // every use below is gated on !no_cache
  std::string variant = (depth == 0) ? "depth0" : "full";
  std::string key = mumford::Cache::make_key("expand", genus, variant);

  if (!no_cache && cache.enabled()) {
    if (auto hit = cache.lookup(key)) {
      if (format == "json") {
        write_output(hit->dump(2), out);
        return kExitOk;
      }
      // Other formats re-render from the cached normal form.
      mumford::TautClass nf = mumford::class_from_json(hit->at("normal_form"));
      write_output(render_class(nf, format), out);
      return kExitOk;
    }
  }

  mumford::ExpansionReport rep;
  if (depth == 0) {
    rep = mumford::analyze_expansion(mumford::boundary_formula(genus), genus, 0, true);
  } else {
    mumford::Expander ex(max_steps);
    rep = ex.expand_full(genus);
  }
  mumford::json doc = mumford::expansion_report_to_json(rep);
  if (!no_cache && cache.enabled() && rep.fixpoint) cache.store(key, doc);

  if (format == "json")
    write_output(doc.dump(2), out);
  else if (format == "latex")
    write_output(render_class(rep.normal_form, "latex"), out);
  else
    write_output(mumford::summarize(rep) + render_class(rep.normal_form, "text"), out);

  if (!rep.fixpoint) {
    std::cerr << "step budget exceeded after " << rep.steps
              << " steps; partial state " << (out.empty() ? "printed" : "written") << "\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boundary-strata calculus for Mumford-type classes on the "
               "moduli of 1-pointed stable curves"};
  app.set_version_flag("--version", mumford::kEngineVersion);
  app.require_subcommand(1);

  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 "cache directory (overrides MUMFORD_CACHE_DIR)");

  int genus = 1;
  std::string format = "text";
  std::string out;

  auto* relation = app.add_subcommand("relation", "print the boundary formula");
  relation->add_option("--genus", genus, "ambient genus")->required()
      ->check(CLI::PositiveNumber);
  relation->add_option("--format", format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  relation->add_option("--out", out, "write to a file instead of stdout");

  std::string suite = "all";
  int gmax = 6, jmax = 3;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--suite", suite, "cprime | replay | remark1 | remark3 | all")
      ->check(CLI::IsMember({"cprime", "replay", "remark1", "remark3", "all"}));
  verify->add_option("--gmax", gmax, "largest genus")->check(CLI::Range(1, 8));
  verify->add_option("--jmax", jmax, "largest coefficient shift (remark1)")
      ->check(CLI::Range(1, 3));
  verify->add_option("--out", out, "write the JSON report here");

  long max_steps = 1000000;
  int depth = -1;
  bool no_cache = false;
  auto* expand = app.add_subcommand("expand", "recursively simplify the formula");
  expand->add_option("--genus", genus, "ambient genus")->required()
      ->check(CLI::PositiveNumber);
  expand->add_option("--max-steps", max_steps, "rewrite step budget");
  expand->add_option("--depth", depth, "0 stops at the raw boundary formula");
  expand->add_option("--format", format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  expand->add_option("--out", out, "write to a file instead of stdout");
  expand->add_flag("--no-cache", no_cache, "bypass the result cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (relation->parsed()) return cmd_relation(genus, format, out);
    if (verify->parsed()) return cmd_verify(suite, gmax, jmax, out);
    if (expand->parsed())
      return cmd_expand(genus, max_steps, depth, format, out, cache_dir, no_cache);
  } catch (const mumford::ExpandBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
