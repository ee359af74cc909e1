#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cli.h"
#include "thompson/element.h"
#include "thompson/word.h"

using namespace thompson;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "thompson");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string valueOf(const std::string& text, const std::string& key) {
  const auto at = text.find(key);
  if (at == std::string::npos) return {};
  const auto start = at + key.size();
  return text.substr(start, text.find('\n', start) - start);
}

}  // namespace

TEST_CASE("element commands") {
  CHECK(run({"reduce", "(.,.)|(.,.)|[1,2]"}).out == ".|.|[1]\n");
  CHECK(run({"mul", "(.,.)|(.,.)|[2,1]", "(.,.)|(.,.)|[2,1]"}).out == ".|.|[1]\n");
  CHECK(run({"inv", "(.,(.,.))|((.,.),.)|[1,2,3]"}).out == "((.,.),.)|(.,(.,.))|[1,2,3]\n");
  CHECK(run({"eq", "(.,.)|(.,.)|[1,2]", ".|.|[1]"}).out == "true\n");
  CHECK(run({"eq", "(.,.)|(.,.)|[2,1]", ".|.|[1]"}).out == "false\n");
  CHECK(run({"stats", "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]"}).out ==
        "N=3 B=4 inF=false inT=false\n");
}

TEST_CASE("map and collapse") {
  const Result m = run({"map", "(.,.)|(.,.)|[2,1]"});
  CHECK(m.code == cli::kExitOk);
  CHECK(m.out == "[0,1/2) -> [1/2,1)\n[1/2,1) -> [0,1/2)\ncomponents=2\n");
  const Result c = run({"collapse", "(.,(.,.))|(.,(.,.))|[2,3,1]"});
  CHECK(valueOf(c.out, "collapsed=") == "(.,.)|(.,.)|[2,1]");
  CHECK(valueOf(c.out, "y_carets=") == "2");
  CHECK_NOTHROW(Element::parse(valueOf(c.out, "y=")));
  CHECK_NOTHROW(Element::parse(valueOf(c.out, "z=")));
}

TEST_CASE("words") {
  const Result s = run({"word", "synth", "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]"});
  REQUIRE(s.code == cli::kExitOk);
  const std::string w = s.out.substr(0, s.out.size() - 1);
  CHECK(run({"word", "eval", w}).out == "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]\n");
  CHECK(run({"word", "eval", "x0"}).out == "(.,(.,.))|((.,.),.)|[1,2,3]\n");
  CHECK(run({"word", "eval", "x7"}).code == cli::kExitUsage);
}

TEST_CASE("lengths and balls") {
  const Result l = run({"length", "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]", "--radius", "5"});
  CHECK(valueOf(l.out, "length=") == "4");
  CHECK(Element::parse("(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]") ==
        evaluateWord(parseWord(valueOf(l.out, "witness="))));
  const Result u = run({"length", "(.,(.,(.,.)))|(.,(.,(.,.)))|[1,3,2,4]", "--radius", "2"});
  CHECK(u.out == "length=unknown\nradius=2\n");
  const Result b = run({"ball", "--radius", "3"});
  CHECK(valueOf(b.out, "sphere_3: ") == "167");
}

TEST_CASE("bounds and counterexample reports") {
  CHECK(run({"bounds", "--n", "3", "--b", "1"}).out ==
        "birget_upper=4.754888\nnew_upper=3.000000\n");
  CHECK(run({"bounds", "--n", "3", "--b", "9"}).code == cli::kExitUsage);
  const Result c = run({"counterexample", "--n", "2", "--radius", "0"});
  CHECK(c.code == cli::kExitOk);
  CHECK(valueOf(c.out, "convention: ") == "mirrored");
  CHECK(valueOf(c.out, "product_N: ") == "5");
  CHECK(valueOf(c.out, "product_B: ") == "6");
  CHECK(valueOf(c.out, "product_word_matches: ") == "true");
}

TEST_CASE("survey and constants are deterministic") {
  const std::vector<std::string> survey{"survey", "--count", "5", "--carets", "3",
                                        "--radius", "3", "--seed", "1"};
  const Result a = run(survey);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == run(survey).out);
  CHECK(a.out.rfind("element,N,B,exact_length,birget_upper,new_upper\n", 0) == 0);
  const Result k = run({"constants", "--radius", "3"});
  CHECK(k.code == cli::kExitOk);
  CHECK(valueOf(k.out, "sphere_1: ") == "7");
  CHECK(k.out == run({"constants", "--radius", "3"}).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).err.find("unknown subcommand") != std::string::npos);
  const Result bad = run({"reduce", "(.,.|(.,.)|[1,2]"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("malformed input") != std::string::npos);
  CHECK(run({"reduce", "(.,.)|(.,.)|[1,3]"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);

  ::setenv("THOMPSON_MEM_BUDGET_MB", "1", 1);
  const Result r = run({"ball", "--radius", "7"});
  ::unsetenv("THOMPSON_MEM_BUDGET_MB");
  CHECK(r.code == cli::kExitResource);
  CHECK(r.err.find("radius") != std::string::npos);
}
