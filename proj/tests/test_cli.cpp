/* Copyright 2026 The modarith Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "modarith/cli.hpp"
#include "support/common.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "modarith");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "modarith_cli_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check the even proof") {
  Run r = run({"check", golden("even4.prf").string(), "--theory", "ha-mod"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "theorem even4: ok"));
  Run a = run({"check", golden("even4_axiomatic.prf").string()});
  CHECK(a.code == kExitOk);
}

TEST_CASE("check reports failures and undecided results") {
  auto bad = temp_file("bad.prf", "theory ha-mod.\ntheorem wrong : 0 = 1 :=\n"
                                  "  all (p : kappa). lam (a : 0 in p). a.\n");
  Run r = run({"check", bad.string()});
  CHECK(r.code == kExitFail);
  CHECK(contains(r.out, "wrong"));
  CHECK(contains(r.out, "fail"));
  Run u = run({"--fuel", "0", "check", golden("even4.prf").string()});
  CHECK(u.code == kExitUndecided);
  CHECK(contains(u.out, "undecided"));
}

TEST_CASE("malformed input is an input error") {
  auto garbage = temp_file("garbage.prf", "theory ha-mod.\ntheorem ( := ).\n");
  CHECK(run({"check", garbage.string()}).code == kExitInputError);
  CHECK(run({"check", "/nonexistent/file.prf"}).code == kExitInputError);
  CHECK(run({"--theory", "nope", "congruent", "A", "A"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
}

TEST_CASE("congruent subcommand") {
  Run yes = run({"congruent", "2*2 = 4", "4 = 4", "--theory", "ha-mod"});
  CHECK(yes.code == kExitOk);
  CHECK(contains(yes.out, "congruent"));
  Run no = run({"congruent", "0 = 0", "0 = S(0)"});
  CHECK(no.code == kExitFail);
  CHECK(contains(no.out, "not congruent"));
  Run undecided = run({"--fuel", "0", "congruent", "N(0)",
                       "forall p:kappa. 0 in p => (forall y:iota. N(y) => y in p => S(y) in p) "
                       "=> 0 in p"});
  CHECK(undecided.code == kExitUndecided);
  CHECK(contains(undecided.out, "undecided"));
}

TEST_CASE("countermodel subcommand") {
  Run lem = run({"countermodel", "P \\/ ~P"});
  CHECK(lem.code == kExitFail);
  Run id = run({"countermodel", "P => P"});
  CHECK(id.code == kExitOk);
  CHECK(run({"countermodel", "P", "--max-size", "9"}).code == kExitInputError);
}

TEST_CASE("relativize subcommand") {
  Run r = run({"relativize", "exists x. 2 * x = 4"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "exists x:iota. N(x) /\\ 2 * x = 4"));
  CHECK(run({"relativize", "N(0)"}).code == kExitInputError);
}

TEST_CASE("normalize trace round trip") {
  std::string prf = golden("logic.prf").string();
  Run t = run({"normalize", prf, "--theorem", "cut_nested", "--trace"});
  REQUIRE(t.code == kExitOk);
  CHECK(contains(t.out, "step 1 beta @ 0.0"));
  std::string trace;
  std::istringstream in(t.out);
  for (std::string line; std::getline(in, line);)
    if (contains(line, "step ") && !contains(line, "steps:")) trace += line + "\n";
  auto file = temp_file("cut_nested.trace", trace);
  Run r = run({"normalize", prf, "--theorem", "cut_nested", "--replay", file.string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "replayed: lam (f : A => B). lam (a : A). f a"));

  auto wrong = temp_file("wrong.trace", "step 1 fst-pair @ root\n");
  CHECK(run({"normalize", prf, "--theorem", "cut_nested", "--replay", wrong.string()}).code ==
        kExitInputError);
  CHECK(run({"--steps", "1", "normalize", prf, "--theorem", "cut_nested"}).code ==
        kExitUndecided);
}

TEST_CASE("t-check subcommand") {
  Run r = run({"t-check", golden("t_examples.t").string()});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "translation: ok"));
  CHECK(contains(r.out, "simulated"));
  auto bad = temp_file("bad.t", "tdef a : nat := lam (x : nat). x.\n");
  CHECK(run({"t-check", bad.string()}).code == kExitInputError);
}

TEST_CASE("theory-info subcommand") {
  Run r = run({"--theory", "t", "theory-info"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "eps_nat"));
  CHECK(contains(r.out, "eps_arrow"));
}
