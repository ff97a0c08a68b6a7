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

#include <set>
#include <thread>

#include "doctest.h"
#include "modarith/comprehension.hpp"
#include "modarith/parser.hpp"
#include "modarith/theory.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace modarith;
using namespace modarith::testing;

namespace {

Prop in(const Term& t, const std::string& p) { return mk_atom("in", {t, mk_var(p, kKappa)}); }

}  // namespace

TEST_CASE("substituting a numeral into an equation") {
  Theory th = theory_ha_mod();
  Parsing ps(th);
  Prop a = ps.prop("2 * x = 4");
  Prop b = substitute(numeral(2), "x", a);
  CHECK(alpha_eq(b, ps.prop("2 * 2 = 4")));
  CHECK(to_string(b) == "2 * 2 = 4");
}

TEST_CASE("substitution for an absent variable is the identity") {
  Theory th = theory_ha_mod();
  Prop a = th.parse("forall y:iota. y + 0 = y");
  CHECK(alpha_eq(substitute(numeral(3), "x", a), a));
  CHECK(canonical_key(substitute(numeral(3), "x", a)) == canonical_key(a));
}

TEST_CASE("substitution renames a capturing binder") {
  Term x = mk_var("x", kIota), y = mk_var("y", kIota);
  Prop a = mk_forall("y", kIota, in(x, "p"));
  Prop b = substitute(y, "x", a);
  REQUIRE(b->kind == PropKind::ForAll);
  CHECK(b->symbol != "y");
  CHECK(alpha_eq(b, mk_forall("w", kIota, in(y, "p"))));
  CHECK(free_vars(b) == VarSet{"p", "y"});

  // The binder also has to move when it is used in the body.
  Prop c = mk_forall("y", kIota, mk_atom("=", {x, y}));
  Prop d = substitute(y, "x", c);
  CHECK(alpha_eq(d, mk_forall("w", kIota, mk_atom("=", {y, mk_var("w", kIota)}))));
  CHECK_FALSE(alpha_eq(d, mk_forall("w", kIota, mk_atom("=", {mk_var("w", kIota), mk_var("w", kIota)}))));
}

TEST_CASE("alpha equivalence examples") {
  Term x = mk_var("x", kIota);
  Prop a = mk_forall("p", kKappa, mk_implies(in(x, "p"), in(x, "p")));
  Prop b = mk_forall("q", kKappa, mk_implies(in(x, "q"), in(x, "q")));
  CHECK(alpha_eq(a, b));
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(alpha_eq(a, a));
  Prop c = mk_forall("p", kKappa, in(x, "p"));
  Prop d = mk_forall("p", kKappa, in(mk_var("y", kIota), "p"));
  CHECK_FALSE(alpha_eq(c, d));
}

TEST_CASE("alpha equivalence is an equivalence on random propositions") {
  ProofGen gen(logic_language(), 11);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({"v0"}, 4);
    Prop b = gen.prop({"v0"}, 4);
    CHECK(alpha_eq(a, a));
    CHECK(alpha_eq(a, b) == alpha_eq(b, a));
    CHECK(alpha_eq(a, b) == (canonical_key(a) == canonical_key(b)));
  }
}

TEST_CASE("renaming bound variables preserves alpha class") {
  ProofGen gen(logic_language(), 12);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({}, 4);
    // Close an open body under a binder, then rename the binder.
    Prop body = gen.prop({"z"}, 3);
    Prop one = mk_forall("z", kIota, body);
    Prop two = mk_forall("z2", kIota, substitute(mk_var("z2", kIota), "z", body));
    CHECK(alpha_eq(one, two));
    CHECK(alpha_eq(substitute(mk_app("c", {}, kIota), "q", a), a));
  }
}

TEST_CASE("free variables of a substitution") {
  ProofGen gen(logic_language(), 13);
  Term t = mk_var("w", kIota);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({"v0", "v00"}, 4);
    VarSet before = free_vars(a);
    VarSet after = free_vars(substitute(t, "v0", a));
    VarSet expected = before;
    if (expected.erase("v0")) expected.insert("w");
    CHECK(after == expected);
  }
}

TEST_CASE("printing and parsing round trip") {
  Theory th = logic_theory();
  ProofGen gen(logic_language(), 14);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({}, 4);
    Parsing ps(th);
    Prop b = ps.prop(to_string(a));
    INFO(to_string(a));
    CHECK(alpha_eq(a, b));
  }
}

TEST_CASE("arithmetic printing and parsing round trip") {
  Theory th = theory_ha_mod();
  ProofGen gen(arith_language(th.rules), 15);
  for (int i = 0; i < 300; ++i) {
    Prop a = gen.prop({}, 4);
    Parsing ps(th);
    INFO(to_string(a));
    CHECK(alpha_eq(a, ps.prop(to_string(a))));
  }
}

TEST_CASE("numerals") {
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK(term_eq(numeral(n), oracle_numeral(n)));
    REQUIRE(as_numeral(numeral(n)).has_value());
    CHECK(*as_numeral(numeral(n)) == n);
  }
  CHECK_FALSE(as_numeral(mk_app("S", {mk_var("x", kIota)}, kIota)).has_value());
}

TEST_CASE("sort errors are reported") {
  Theory th = theory_ha_mod();
  CHECK_THROWS_AS(th.parse("0 in 0"), Error);
  CHECK_THROWS_AS(th.parse("forall p:kappa. p = 0"), Error);
  CHECK_THROWS_AS(th.parse("2 * = 4"), ParseError);
}

TEST_CASE("comprehension symbol for the naturals") {
  Theory th = theory_ha_class();
  ComprehensionRegistry reg(ComprehensionMode::Class, th.signature);
  ComprehensionKey key{"x", {}, mk_atom("N", {mk_var("x", kIota)})};
  auto sym = reg.register_key(key);
  CHECK(sym.name == "nat");
  CHECK(sym.rank.args.empty());
  CHECK(sym.rank.result == kKappa);
}

TEST_CASE("membership bodies depend on the registry mode") {
  Theory th = theory_ha_mod();
  Term x = mk_var("x", kIota);
  ComprehensionKey key{"x", {"y", "z"}, mk_implies(in(x, "y"), in(x, "z"))};
  ComprehensionRegistry cls(ComprehensionMode::Class, theory_ha_class().signature);
  CHECK_THROWS_AS(cls.register_key(key), Error);
  ComprehensionRegistry mem(ComprehensionMode::Membership, th.signature);
  auto sym = mem.register_key(key);
  CHECK(sym.name == "->");
  CHECK(sym.rank.args == std::vector<std::string>{kKappa, kKappa});
  CHECK(sym.rank.result == kKappa);
}

TEST_CASE("registering a key twice is idempotent") {
  Theory th = theory_ha_class();
  ComprehensionRegistry reg(ComprehensionMode::Class, th.signature);
  Term x = mk_var("x", kIota), y = mk_var("y", kIota);
  ComprehensionKey key{"x", {"y"}, mk_atom("=", {mk_app("+", {x, y}, kIota), numeral(2)})};
  auto [s1, sig1] = comprehension_symbol(reg, key, th.signature);
  auto [s2, sig2] = comprehension_symbol(reg, key, sig1);
  CHECK(s1.name == s2.name);
  CHECK(reg.entries().size() == 1);
  REQUIRE(sig2.function(s1.name) != nullptr);
  CHECK(*sig2.function(s1.name) == *sig1.function(s1.name));

  // Alpha-renamed keys share the symbol.
  Term u = mk_var("u", kIota), v = mk_var("v", kIota);
  ComprehensionKey renamed{"u", {"v"}, mk_atom("=", {mk_app("+", {u, v}, kIota), numeral(2)})};
  CHECK(reg.register_key(renamed).name == s1.name);
  CHECK(reg.entries().size() == 1);
}

TEST_CASE("comprehension names do not depend on registration order") {
  Theory th = theory_ha_class();
  std::vector<ComprehensionKey> keys;
  Term x = mk_var("x", kIota), y = mk_var("y", kIota);
  keys.push_back({"x", {}, mk_atom("=", {x, numeral(0)})});
  keys.push_back({"x", {"y"}, mk_atom("=", {x, y})});
  keys.push_back({"x", {}, mk_atom("Null", {x})});
  ComprehensionRegistry a(ComprehensionMode::Class, th.signature);
  ComprehensionRegistry b(ComprehensionMode::Class, th.signature);
  std::vector<std::string> na, nb(keys.size());
  for (const auto& k : keys) na.push_back(a.register_key(k).name);
  for (std::size_t i = keys.size(); i-- > 0;) nb[i] = b.register_key(keys[i]).name;
  CHECK(na == nb);
  CHECK(std::set<std::string>(na.begin(), na.end()).size() == keys.size());
}

TEST_CASE("comprehension parameters follow first occurrence") {
  Theory th = theory_ha_class();
  ComprehensionRegistry reg(ComprehensionMode::Class, th.signature);
  Term x = mk_var("x", kIota), y = mk_var("y", kIota), z = mk_var("z", kIota);
  ComprehensionKey key{"x", {"y", "z"}, mk_atom("=", {mk_app("+", {z, x}, kIota), y})};
  auto sym = reg.register_key(key);
  CHECK(sym.argument_order == std::vector<std::string>{"z", "y"});
  Prop unfolded = reg.unfold(sym.name, numeral(1), {numeral(2), numeral(3)});
  REQUIRE(unfolded);
  CHECK(alpha_eq(unfolded, mk_atom("=", {mk_app("+", {numeral(2), numeral(1)}, kIota), numeral(3)})));
}

TEST_CASE("comprehension keys with stray free variables are rejected") {
  Theory th = theory_ha_class();
  ComprehensionRegistry reg(ComprehensionMode::Class, th.signature);
  ComprehensionKey key{"x", {}, mk_atom("=", {mk_var("x", kIota), mk_var("w", kIota)})};
  CHECK_THROWS_AS(reg.register_key(key), Error);
}

TEST_CASE("concurrent registration agrees with sequential registration") {
  Theory th = theory_ha_class();
  std::vector<ComprehensionKey> keys;
  for (unsigned n = 0; n < 16; ++n)
    keys.push_back({"x", {}, mk_atom("=", {mk_var("x", kIota), numeral(n % 8)})});
  ComprehensionRegistry seq(ComprehensionMode::Class, th.signature);
  std::vector<std::string> expected;
  for (const auto& k : keys) expected.push_back(seq.register_key(k).name);

  ComprehensionRegistry shared(ComprehensionMode::Class, th.signature);
  std::vector<std::string> got(keys.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < keys.size(); i += 4) got[i] = shared.register_key(keys[i]).name;
    });
  for (auto& t : threads) t.join();
  CHECK(got == expected);
  CHECK(shared.entries().size() == 8);
}
