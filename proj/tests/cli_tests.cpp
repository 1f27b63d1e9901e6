// End-to-end checks of the command-line tool: output formats, exit codes,
// and cache behavior. Runs the real binary.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

int failures = 0;

#define CHECK_MSG(cond, msg)                                         \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::cerr << "FAIL (" << __LINE__ << "): " << (msg) << "\n";   \
      ++failures;                                                    \
    }                                                                \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(MUMFORD_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main() {
  // relation: the genus-1 boundary formula is empty.
  {
    RunResult r = run("relation --genus 1 --format text");
    CHECK_MSG(r.exit_code == 0, "relation g1 exit code");
    CHECK_MSG(strip(r.output) == "0", "relation g1 prints 0, got: " + r.output);
  }
  // relation: genus 2 JSON has two strata with coefficients +-1/2.
  {
    RunResult r = run("relation --genus 2 --format json");
    CHECK_MSG(r.exit_code == 0, "relation g2 exit code");
    auto j = nlohmann::json::parse(r.output);
    CHECK_MSG(j.at("terms").size() == 2, "relation g2 term count");
    for (const auto& t : j.at("terms")) {
      std::string c = t.at("coeff");
      CHECK_MSG(c == "1/2" || c == "-1/2", "relation g2 coefficients");
    }
  }
  // relation: genus 3 LaTeX is nonempty and balanced.
  {
    RunResult r = run("relation --genus 3 --format latex");
    CHECK_MSG(r.exit_code == 0, "relation g3 latex exit code");
    long depth = 0;
    for (char ch : r.output) {
      if (ch == '{') ++depth;
      if (ch == '}') --depth;
    }
    CHECK_MSG(depth == 0, "relation g3 latex braces balanced");
    CHECK_MSG(r.output.find("\\lambda") != std::string::npos, "latex uses lambda");
  }
  // relation: genus 2 LaTeX golden file.
  {
    RunResult r = run("relation --genus 2 --format latex");
    CHECK_MSG(r.exit_code == 0, "relation g2 latex exit code");
    std::string expect =
        "-\\tfrac{1}{2}\\,\\Bigl[g_{1}^{\\bullet_{1}}\\bigl(g_{1}^{\\bigl(\\psi_{e_{0}}"
        "-\\lambda_{1}\\bigr)}\\bigr)\\Bigr] + \\tfrac{1}{2}\\,\\Bigl[g_{1}^{\\bullet_{1}"
        "\\,\\bigl(\\psi_{e_{0}}-\\lambda_{1}\\bigr)}\\bigl(g_{1}\\bigr)\\Bigr]";
    CHECK_MSG(strip(r.output) == expect, "relation g2 latex golden, got: " + r.output);
  }
  // expand: genus 3 summary names both normal-form shapes.
  {
    RunResult r = run("expand --genus 3 --no-cache");
    CHECK_MSG(r.exit_code == 0, "expand g3 exit 0");
    CHECK_MSG(r.output.find("shape 0*-1-2") != std::string::npos, "expand g3 chain shape");
    CHECK_MSG(r.output.find("shape 0*-1-1-1") != std::string::npos, "expand g3 star shape");
    CHECK_MSG(r.output.find("normal form") != std::string::npos, "expand g3 reaches fixpoint");
  }
  // usage errors exit 64.
  {
    CHECK_MSG(run("relation --genus 0").exit_code == 64, "genus 0 rejected with 64");
    CHECK_MSG(run("relation").exit_code == 64, "missing genus rejected with 64");
    CHECK_MSG(run("bogus").exit_code == 64, "unknown subcommand rejected with 64");
    CHECK_MSG(run("verify --suite nope").exit_code == 64, "unknown suite rejected with 64");
  }
  // verify: small sweeps pass.
  {
    RunResult r = run("verify --suite cprime --gmax 3");
    CHECK_MSG(r.exit_code == 0, "verify cprime exit 0");
    CHECK_MSG(r.output.find("OK") != std::string::npos, "verify prints OK lines");
  }
  {
    RunResult r = run("verify --suite replay --gmax 3");
    CHECK_MSG(r.exit_code == 0, "verify replay exit 0");
  }
  {
    RunResult r = run("verify --suite remark3 --gmax 3");
    CHECK_MSG(r.exit_code == 0, "verify remark3 exit 0 (report-only)");
    CHECK_MSG(r.output.find("REPORT") != std::string::npos, "remark3 lines are REPORT");
  }
  // expand: genus 2 normal form.
  {
    RunResult r = run("expand --genus 2 --format json --no-cache");
    CHECK_MSG(r.exit_code == 0, "expand g2 exit 0");
    auto j = nlohmann::json::parse(r.output);
    CHECK_MSG(j.at("strata").size() == 1, "expand g2 stratum count");
    CHECK_MSG(j.at("summary").at("all_marked_on_genus0") == true, "expand g2 flags");
  }
  // expand: --depth 0 returns the raw formula.
  {
    RunResult r = run("expand --genus 2 --depth 0 --format json --no-cache");
    auto j = nlohmann::json::parse(r.output);
    CHECK_MSG(j.at("normal_form").at("terms").size() == 2, "depth 0 keeps both strata");
    CHECK_MSG(j.at("steps") == 0, "depth 0 takes no steps");
  }
  // expand: budget exhaustion exits 2.
  {
    RunResult r = run("expand --genus 3 --max-steps 1 --no-cache");
    CHECK_MSG(r.exit_code == 2, "budget exceeded exits 2");
  }
  // cache: hits are byte-identical.
  {
    std::string dir = "/tmp/mumford-cli-cache-XXXXXX";
    CHECK_MSG(mkdtemp(dir.data()) != nullptr, "mkdtemp");
    std::string base = "--cache-dir " + dir + " expand --genus 3 --format json";
    RunResult first = run(base);
    CHECK_MSG(first.exit_code == 0, "cached expand exit 0");
    std::string entry;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      entry = e.path().string();
    CHECK_MSG(!entry.empty(), "cache entry written");
    std::string bytes_before = read_file(entry);
    RunResult second = run(base);
    CHECK_MSG(second.output == first.output, "cache hit reproduces output");
    CHECK_MSG(read_file(entry) == bytes_before, "cache entry untouched on hit");
    std::filesystem::remove_all(dir);
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " failure(s)\n";
  return 1;
}
