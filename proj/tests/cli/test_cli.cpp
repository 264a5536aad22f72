// CLI contract tests: exit codes, output grammar, determinism.
// argv[1] = path to the fraczeta binary.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

struct RunResult {
  int code;
  std::string out;
};

std::string g_cli;
int g_failures = 0;

RunResult run(const std::string& args) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  while (fgets(buf.data(), int(buf.size()), p)) out += buf.data();
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-fraczeta>\n";
    return 2;
  }
  g_cli = argv[1];

  {  // classical value through the CLI, JSON shape
    RunResult r = run("eval --method zeta --s 2");
    expect(r.code == 0, "eval zeta s=2 exits 0");
    expect(contains(r.out, "1.64493406684822"), "zeta(2) value");
    expect(contains(r.out, "\"re\":"), "complex JSON encoding");
  }
  {  // theta golden
    RunResult r = run("eval --method theta --s 1");
    expect(r.code == 0 && contains(r.out, "1.0864348112"), "theta(1)");
  }
  {  // domain guard surfaces as exit 2 with machine-readable kind
    RunResult r = run("eval --method frac-zeta-series --s 1.2 --alpha 0.5");
    expect(r.code == 2, "gap-strip eval exits 2");
    expect(contains(r.out, "DomainError"), "error record names the kind");
  }
  {  // malformed arguments exit 1
    RunResult r = run("eval --method no-such-thing --s 2");
    expect(r.code == 2 && contains(r.out, "unknown method"),
           "unknown method is an evaluation error");
    RunResult r2 = run("scan --method theta --axis re_s --range 0.5,5,1");
    expect(r2.code == 1, "scan with n=1 exits 1");
    RunResult r3 = run("compare --method zeta");
    expect(r3.code == 1, "compare with one method exits 1");
    RunResult r4 = run("definitely-not-a-subcommand");
    expect(r4.code == 1, "bad subcommand exits 1");
  }
  {  // scan grammar and monotone theta column
    RunResult r = run("scan --method theta --axis re_s --range 0.5,5,5");
    expect(r.code == 0, "theta scan exits 0");
    expect(contains(r.out, "coord,value_re,value_im,err_estimate,terms_used,converged"),
           "scan CSV header");
    double prev = 1e300;
    size_t pos = r.out.find('\n') + 1;
    int rows = 0;
    bool monotone = true;
    while (pos < r.out.size()) {
      size_t e = r.out.find('\n', pos);
      if (e == std::string::npos) break;
      std::string row = r.out.substr(pos, e - pos);
      pos = e + 1;
      double coord, re;
      if (std::sscanf(row.c_str(), "%lf,%lf", &coord, &re) == 2) {
        ++rows;
        if (re >= prev) monotone = false;
        prev = re;
      }
    }
    expect(rows == 5, "scan emits 5 rows");
    expect(monotone, "theta scan column strictly decreasing");
  }
  {  // scan with errors: more than half the points out of domain
    RunResult r = run("scan --method frac-zeta-series --axis re_s --range 0.2,1.4,4 --alpha 0.5");
    expect(r.code == 2, "scan with majority errors exits 2");
    expect(contains(r.out, "DomainError"), "per-point error column");
  }
  {  // compare: cross-method deltas small
    RunResult r = run("compare --method frac-zeta-fe-triple --method frac-zeta-fe-trig "
                      "--s -2.5 --a 0.7 --alpha 0.4");
    expect(r.code == 0, "compare exits 0");
    expect(contains(r.out, "pair,abs_delta"), "pairwise table present");
    size_t pos = r.out.find("pair,abs_delta");
    double delta = 1.0;
    std::sscanf(r.out.c_str() + r.out.find(',', r.out.find('|', pos)) + 1, "%lf", &delta);
    expect(delta < 1e-8, "triple/trig delta below 1e-8");
  }
  {  // determinism: identical args give byte-identical value fields
    RunResult a = run("eval --method frac-zeta-fe-triple --s -2.5 --a 0.7 --alpha 0.4");
    RunResult b = run("eval --method frac-zeta-fe-triple --s -2.5 --a 0.7 --alpha 0.4");
    expect(a.out == b.out, "deterministic output");
  }
  {  // csv eval format
    RunResult r = run("eval --method zeta --s 2 --format csv");
    expect(contains(r.out, "value_re,value_im"), "csv eval header");
  }
  {  // verify a small suite end to end
    RunResult r = run("verify --suite convolution --budget-terms 200000");
    expect(r.code == 0, "verify convolution exits 0");
    expect(contains(r.out, "thm1-convolution-a1"), "report identity ids");
    expect(contains(r.out, "documented-discrepancy"), "documented verdicts present");
  }

  if (g_failures == 0) {
    std::cout << "cli contract: all checks passed\n";
    return 0;
  }
  std::cout << "cli contract: " << g_failures << " failures\n";
  return 1;
}
