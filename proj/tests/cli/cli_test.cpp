// SPDX-License-Identifier: Apache-2.0
// Runs the command-line tool and checks output and exit status.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#ifndef PREDABS_CLI_PATH
#error "PREDABS_CLI_PATH must be defined"
#endif
#ifndef PREDABS_SCENARIO_DIR
#error "PREDABS_SCENARIO_DIR must be defined"
#endif

namespace {

struct Result {
  int status = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result run(const std::string& args) {
  std::string cmd = std::string(PREDABS_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string scen(const char* file) { return quote(std::string(PREDABS_SCENARIO_DIR) + "/" + file); }

const std::string kBlames = "-s " + scen("blames20.pred");
const std::string kGivens = " -g " + quote("forall x. exists y. Blames(x,y)") + " -g " + quote("forall y. exists x. Blames(x,y)");
const std::string kThird = " -g " + quote("exists x. forall y. Blames(x,y)");

}  // namespace

TEST_CASE("prob prints an exact fraction") {
  Result r = run("prob " + kBlames + " -f " + quote("forall x. (exists y. Blames(x,y)) -> Blames(alice,x)") + " --mu 1");
  CHECK(r.status == 0);
  CHECK(r.out == "13/20\n");
  Result s = run("prob " + kBlames + " -f " + quote("forall x. (exists y. Blames(x,y)) -> Blames(alice,x)") + " --symbolic");
  CHECK(s.out == "(6*mu + 7)/20\n");
  Result h = run("prob " + kBlames + " -f " + quote("Blames(alice,bob)") + " --mu 1/2");
  CHECK(h.out == "1/2\n");
}

TEST_CASE("query under both regimes") {
  Result r = run("query " + kBlames + " -f " + quote("Blames(alice,bob)") + kGivens + " --mu 1");
  CHECK(r.status == 0);
  CHECK(r.out == "2/3\n");
  Result e = run("query " + kBlames + " -f " + quote("Blames(alice,bob)") + kGivens + kThird + " --mu 1");
  CHECK(e.status == 1);
  CHECK(e.out.find("use --mu limit") != std::string::npos);
  Result l = run("query " + kBlames + " -f " + quote("Blames(alice,bob)") + kGivens + kThird + " --mu limit");
  CHECK(l.status == 0);
  CHECK(l.out == "5/6\n");
}

TEST_CASE("marginal, posterior and joint") {
  Result m = run("marginal " + kBlames);
  CHECK(m.out == "M1 7/20\nM4 1/5\nM7 3/10\nM11 1/20\nM13 1/10\n");
  Result all = run("marginal " + kBlames + " --all");
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 32);
  Result p = run("posterior " + kBlames + " -m M4 -g " + quote("Blames(alice,bob) & !Blames(alice,bob)") + " --mu limit");
  CHECK(p.out == "1/5\n");
  Result j = run("joint " + kBlames + " -f " + quote("forall x. exists y. Blames(x,y)") + " -f " +
                 quote("forall y. exists x. Blames(x,y)"));
  CHECK(j.out == "3/10\n");
}

TEST_CASE("models, eval and consequence") {
  Result c = run("models " + kBlames + " -f " + quote("forall x. exists y. Blames(x,y)") + " --count");
  CHECK(c.out == "18\n");
  Result p = run("models " + kBlames + " -f " + quote("forall x. exists y. Blames(x,y)") + " --possible");
  CHECK(p.out == "M4\nM11\nM13\n");
  Result e = run("eval " + kBlames + " -m M7 -f " + quote("exists x. forall y. Blames(x,y)"));
  CHECK(e.out == "1\n");
  Result l = run("consequence --mode logical " + kBlames + " -g " + quote("Blames(bob,alice)") + " -f " +
                 quote("Blames(alice,bob)"));
  CHECK(l.out == "false\n");
  Result em = run("consequence --mode empirical " + kBlames + " -g " + quote("Blames(bob,alice)") + " -f " +
                  quote("Blames(alice,bob)"));
  CHECK(em.out == "true\n");
}

TEST_CASE("maximal subsets") {
  Result r = run("mps " + kBlames + kGivens + kThird);
  CHECK(r.out ==
        "{forall x. exists y. Blames(x,y); forall y. exists x. Blames(x,y)}\n"
        "{forall y. exists x. Blames(x,y); exists x. forall y. Blames(x,y)}\n");
  Result c = run("mcs -s " + scen("sprinkler.pred") +
                 " -g rain -g sprinkler -g 'sprinkler -> wet' -g hot -g wet -g '!wet'");
  CHECK(c.out == "{rain; sprinkler; sprinkler -> wet; hot; wet}\n");
}

TEST_CASE("hypothesize and select") {
  Result h = run("hypothesize -s " + scen("arith_train.pred") + " --grammar arith-equation --max-ops 2 --top 1");
  CHECK(h.status == 0);
  CHECK(h.out == "1\tleft*top+right = bottom\n");
  Result s = run("select -s " + scen("arith_query.pred") + " -g " + quote("top*left+right = bottom") +
                 " -f 'bottom = 17' -f 'bottom = 18' -f 'bottom = 19'");
  CHECK(s.out == "1\tbottom = 18\n0\tbottom = 17\n0\tbottom = 19\n");
}

TEST_CASE("user errors exit with status 1") {
  CHECK(run("prob " + kBlames + " -f " + quote("Blames(alice,")).status == 1);
  CHECK(run("prob -s /nonexistent.pred -f x").status == 1);
  CHECK(run("prob " + kBlames).status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("prob " + kBlames + " -f " + quote("Blames(alice,bob)") + " --mu 0.1").status == 1);
  CHECK(run("consequence --mode sideways " + kBlames + " -f " + quote("Blames(alice,bob)")).status == 1);
  Result u = run("prob " + kBlames + " -f " + quote("Loves(alice,bob)"));
  CHECK(u.status == 1);
  CHECK(u.out.rfind("error: ", 0) == 0);
}

TEST_CASE("help and version exit cleanly") {
  CHECK(run("--help").status == 0);
  CHECK(run("--version").status == 0);
}
