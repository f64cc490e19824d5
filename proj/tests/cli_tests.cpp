#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "propcon/graph.hpp"

namespace {

const std::string kCli = PROPCON_CLI_PATH;

struct CmdResult {
  int status = -1;
  std::string out;
};

// Run a shell command, capturing stdout+stderr and the exit code.
CmdResult sh(const std::string& cmd) {
  CmdResult r;
  std::string full = "{ " + cmd + " ; } 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

CmdResult cli(const std::string& args) { return sh(kCli + " " + args); }

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& text) : path(name) {
    std::ofstream out(path);
    out << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("gen emits the named families") {
  CmdResult r = cli("gen --family g1");
  CHECK(r.status == 0);
  CHECK(r.out == "F{eCG\n");
  r = cli("gen --family g-n --n 8");
  CHECK(r.status == 0);
  CHECK(r.out.size() > 1);
  r = cli("gen --family cycle --n 5 --edgelist");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "n 5"));
  CHECK(contains(r.out, "0 1"));
}

TEST_CASE("pc reads stdin and pipes compose") {
  CmdResult r = sh(kCli + " gen --family g1 | " + kCli + " pc");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "pc = 3 (method: search)"));
  r = sh("printf 'F{eCG\\n' | " + kCli + " pc");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "pc = 3"));
}

TEST_CASE("pc json output") {
  CmdResult r = cli("pc --graph6 F{eCG --json");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("pc") == 3);
  CHECK(j.at("n") == 7);
  CHECK(j.at("method") == "search");
  CHECK(j.at("witness").at("colors") == 3);
  CHECK(j.at("witness").at("edges").size() == 9);
}

TEST_CASE("pc accepts edge lists") {
  TempFile f("cli_p4.txt", "n 4\n0 1\n1 2\n2 3\n");
  CmdResult r = cli("pc --file " + f.path + " --edgelist");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "pc = 2"));
}

TEST_CASE("bounds values and formats") {
  CmdResult r = cli("bounds --variant thm34 --n 9");
  CHECK(r.status == 0);
  CHECK(r.out == "13\n");
  r = cli("bounds --variant g-nk --n 14 --k 2");
  CHECK(r.out == "59\n");
  r = cli("bounds --variant woodall --n 10 --m-part 2");
  CHECK(r.status == 0);
  CHECK(r.out == "t = 4, r = 2, threshold = 13\n");
  r = cli("bounds --variant erdos-gallai --n 9 --c 4 --json");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out).at("value") == 17);
  r = cli("bounds --variant main-thm --n 20 --k 3 --delta 2 --json");
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("value") == 99);
  CHECK(j.at("m") == 3);
}

TEST_CASE("verify replay with the known exception") {
  CmdResult r = cli("verify --theorem thm-small-order --n 7 --jobs 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "task = thm-small-order, n = 7, source = builtin"));
  CHECK(contains(r.out, "scanned = 853"));
  CHECK(contains(r.out, "violators: 1 (matches expected exception set)"));
  CHECK(contains(r.out, "expected exception F@QFw"));
  CHECK(contains(r.out, "undecided = 0 (exhaustive)"));
  CHECK(contains(r.out, "wall time = "));
}

TEST_CASE("verify exits nonzero when the expected exception never shows up") {
  // An order-7 corpus without the exceptional graph: the replay finds no
  // violators, but the expected-exception set goes unmatched.
  CmdResult gen = sh(kCli + " gen --family cycle --n 7 > cli_c7.g6");
  REQUIRE(gen.status == 0);
  CmdResult r = cli("verify --theorem thm-small-order --n 7 --source cli_c7.g6");
  CHECK(r.status == 1);
  CHECK(contains(r.out, "MISMATCH: expected 1 exception(s), matched 0"));
  std::remove("cli_c7.g6");
}

TEST_CASE("verify structured formats") {
  CmdResult r = cli("verify --theorem thm-gnk --n 5 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("graph6,n,m,delta,bridges,pc,predicted,observed,violation\n", 0) == 0);
  r = cli("verify --theorem thm-gnk --n 5 --format jsonl");
  CHECK(r.status == 0);
  std::size_t cut = r.out.find_last_of('\n', r.out.size() - 2);
  std::string last = r.out.substr(cut + 1);
  nlohmann::json j = nlohmann::json::parse(last);
  CHECK(j.at("type") == "summary");
  CHECK(j.at("scanned") == 21);
  CHECK(j.at("exceptions_match_expected") == true);
}

TEST_CASE("verify can save records while printing the human summary") {
  CmdResult r = cli("verify --theorem thm-gnk --n 5 --records cli_rec.jsonl");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "task = thm-gnk"));
  std::ifstream f("cli_rec.jsonl");
  REQUIRE(f.good());
  std::string line;
  long long lines = 0;
  while (std::getline(f, line)) {
    ++lines;
    CHECK_NOTHROW(nlohmann::json::parse(line));
  }
  CHECK(lines == 22);  // 21 graph records + summary
  std::remove("cli_rec.jsonl");
}

TEST_CASE("check validates colorings") {
  std::string c5 = propcon::emit_graph6(propcon::Graph::cycle(5));
  TempFile g("cli_c5.g6", c5 + "\n");
  // C5 = 0-1-2-3-4-0; colors 1,2,1,2 around the cycle and 1 on the closing edge.
  TempFile good("cli_good.col", "k 2\n0 1 1\n1 2 2\n2 3 1\n3 4 2\n0 4 1\n");
  TempFile bad("cli_bad.col", "k 1\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n");

  CmdResult probe = sh(kCli + " gen --family cycle --n 5");
  REQUIRE(probe.out == c5 + "\n");  // the CLI and the library must agree

  CmdResult r = cli("check --file " + g.path + " --coloring " + good.path);
  CHECK(r.status == 0);
  CHECK(r.out == "properly connected\n");

  r = cli("check --file " + g.path + " --coloring " + bad.path);
  CHECK(r.status == 1);
  CHECK(contains(r.out, "not properly connected: no proper path between"));

  r = cli("check --file " + g.path + " --coloring " + good.path + " --pair 1 4");
  CHECK(r.status == 0);
  CHECK(r.out == "proper path: 1 2 3 4\n");

  r = cli("check --file " + g.path + " --coloring " + bad.path + " --pair 0 2");
  CHECK(r.status == 1);
  CHECK(r.out == "no proper path between 0 and 2\n");

  r = cli("check --file " + g.path + " --coloring " + good.path + " --pair 1 4 --json");
  CHECK(r.status == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("proper_path") == nlohmann::json({1, 2, 3, 4}));
}

TEST_CASE("gstar reports the bridge decomposition") {
  CmdResult r = sh(kCli + " gen --family g-k --n 10 --k 2 --delta 2 | " + kCli + " gstar");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "bridges (3):"));
  CHECK(contains(r.out, "max node degree = 3"));
  CHECK(contains(r.out, "pc upper bound = 3"));
}

TEST_CASE("search probes the conjecture corpus") {
  CmdResult r = cli("search --n 7 --delta 3");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "conjecture probe: n = 7, min degree = 3"));
  CHECK(contains(r.out, "counterexamples found: 0 (exhaustive over this corpus)"));
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli("").status == 2);                                  // no subcommand
  CHECK(cli("pc --bogus").status == 2);                        // unknown flag
  CHECK(cli("bounds --n 9").status == 2);                      // missing --variant
  CHECK(cli("bounds --variant nope --n 9").status == 2);       // bad variant
  CHECK(cli("verify --theorem nope --n 5").status == 2);       // unknown theorem
  CHECK(cli("verify --theorem thm-gnk").status == 2);          // missing --n
  CHECK(cli("verify --theorem thm-gnk --n 5 --format xml").status == 2);
  CHECK(cli("pc --file no_such_input.g6").status == 2);        // unreadable file
  CHECK(cli("gen --family g-n").status == 2);                  // family needs --n >= 8
  CHECK(cli("gen --family nope --n 5").status == 2);           // unknown family
  std::string c5 = propcon::emit_graph6(propcon::Graph::cycle(5));
  CHECK(sh("printf '" + c5 + "\\n' | " + kCli + " check --coloring -").status == 2);
  CHECK(sh("printf 'bad!!\\n' | " + kCli + " pc").status == 2);  // graph6 parse error
  CmdResult r = cli("verify --theorem nope --n 5");
  CHECK(contains(r.out, "error: unknown theorem tag 'nope'"));
}

TEST_CASE("help exits cleanly") {
  CHECK(cli("--help").status == 0);
  CmdResult r = cli("verify --help");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "--theorem"));
}
