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

#include "modarith/heyting.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace modarith {

//------------------------------------------------------------------------------
// Posets

Poset Poset::chain(int n) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) p.leq[i][j] = true;
  return p;
}

Poset Poset::antichain(int n) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;
  return p;
}

bool Poset::valid() const {
  for (int i = 0; i < n; ++i) {
    if (!leq[i][i]) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      for (int k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
    }
  }
  return true;
}

namespace {

std::uint32_t canonical_code(const Poset& p) {
  std::vector<int> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    std::uint32_t code = 0;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        code = (code << 1) | (p.leq[perm[i]][perm[j]] ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Poset> all_posets(int max_points) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_points; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) pairs.emplace_back(i, j);
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      Poset p = Poset::antichain(n);
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if (mask & (1u << b)) p.leq[pairs[b].first][pairs[b].second] = true;
      if (!p.valid()) continue;
      if (seen.insert(canonical_code(p)).second) out.push_back(std::move(p));
    }
  }
  return out;
}

//------------------------------------------------------------------------------
// Algebras

HeytingAlgebra::HeytingAlgebra(std::vector<std::vector<bool>> leq,
                               std::vector<std::vector<int>> meet,
                               std::vector<std::vector<int>> join,
                               std::vector<std::vector<int>> imp, int bottom,
                               int top, std::string name)
    : leq_(std::move(leq)), meet_(std::move(meet)), join_(std::move(join)),
      imp_(std::move(imp)), bottom_(bottom), top_(top), name_(std::move(name)) {}

int HeytingAlgebra::big_meet(const std::vector<int>& a) const {
  int r = top_;
  for (int x : a) r = meet(r, x);
  return r;
}

int HeytingAlgebra::big_join(const std::vector<int>& a) const {
  int r = bottom_;
  for (int x : a) r = join(r, x);
  return r;
}

std::vector<Law> HeytingAlgebra::verify_laws() const {
  const int n = size();
  std::vector<Law> laws;
  auto law = [&](const std::string& name, auto&& holds_for) {
    Law l{name, true, ""};
    for (int x = 0; x < n && l.holds; ++x)
      for (int y = 0; y < n && l.holds; ++y)
        for (int z = 0; z < n && l.holds; ++z)
          if (!holds_for(x, y, z)) {
            l.holds = false;
            l.counterexample = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               " z=" + std::to_string(z);
          }
    laws.push_back(std::move(l));
  };
  auto implies = [](bool a, bool b) { return !a || b; };

  law("reflexivity", [&](int x, int, int) { return le(x, x); });
  law("antisymmetry",
      [&](int x, int y, int) { return implies(le(x, y) && le(y, x), x == y); });
  law("transitivity",
      [&](int x, int y, int z) { return implies(le(x, y) && le(y, z), le(x, z)); });
  law("min", [&](int x, int, int) { return le(bottom_, x); });
  law("max", [&](int x, int, int) { return le(x, top_); });
  law("meet-lower-left", [&](int x, int y, int) { return le(meet(x, y), x); });
  law("meet-lower-right", [&](int x, int y, int) { return le(meet(x, y), y); });
  law("meet-greatest", [&](int x, int y, int z) {
    return implies(le(z, x) && le(z, y), le(z, meet(x, y)));
  });
  law("join-upper-left", [&](int x, int y, int) { return le(x, join(x, y)); });
  law("join-upper-right", [&](int x, int y, int) { return le(y, join(x, y)); });
  law("join-least", [&](int x, int y, int z) {
    return implies(le(x, z) && le(y, z), le(join(x, y), z));
  });

  // Arbitrary meets and joins, over every subset of the carrier.
  Law bm_lower{"big-meet-lower", true, ""}, bm_greatest{"big-meet-greatest", true, ""};
  Law bj_upper{"big-join-upper", true, ""}, bj_least{"big-join-least", true, ""};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<int> members;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    members.clear();
    for (int x = 0; x < n; ++x)
      if (s & (std::uint64_t{1} << x)) members.push_back(x);
    int m = big_meet(members);
    int j = big_join(members);
    for (int x : members) {
      if (!le(m, x) && bm_lower.holds) {
        bm_lower.holds = false;
        bm_lower.counterexample = "subset " + std::to_string(s);
      }
      if (!le(x, j) && bj_upper.holds) {
        bj_upper.holds = false;
        bj_upper.counterexample = "subset " + std::to_string(s);
      }
    }
    for (int c = 0; c < n; ++c) {
      bool below_all = true, above_all = true;
      for (int x : members) {
        below_all = below_all && le(c, x);
        above_all = above_all && le(x, c);
      }
      if (below_all && !le(c, m) && bm_greatest.holds) {
        bm_greatest.holds = false;
        bm_greatest.counterexample = "subset " + std::to_string(s);
      }
      if (above_all && !le(j, c) && bj_least.holds) {
        bj_least.holds = false;
        bj_least.counterexample = "subset " + std::to_string(s);
      }
    }
  }
  laws.push_back(bm_lower);
  laws.push_back(bm_greatest);
  laws.push_back(bj_upper);
  laws.push_back(bj_least);

  law("residuation",
      [&](int x, int y, int z) { return le(x, imp(y, z)) == le(meet(x, y), z); });
  return laws;
}

bool HeytingAlgebra::laws_hold() const {
  for (const auto& l : verify_laws())
    if (!l.holds) return false;
  return true;
}

std::string HeytingAlgebra::order_matrix() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < size(); ++j) os << (le(i, j) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

namespace {

std::string poset_name(const Poset& p) {
  std::string out = std::to_string(p.n) + "-point poset {";
  bool first = true;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.leq[i][j]) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(i) + "<" + std::to_string(j);
      }
  return out + "}";
}

}  // namespace

HeytingAlgebra algebra_from_poset(const Poset& p) {
  std::vector<std::uint32_t> downs;
  for (std::uint32_t s = 0; s < (1u << p.n); ++s) {
    bool closed = true;
    for (int j = 0; j < p.n && closed; ++j)
      if (s & (1u << j))
        for (int i = 0; i < p.n && closed; ++i)
          if (p.leq[i][j] && !(s & (1u << i))) closed = false;
    if (closed) downs.push_back(s);
  }
  std::stable_sort(downs.begin(), downs.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  const int n = static_cast<int>(downs.size());
  auto index_of = [&](std::uint32_t s) {
    return static_cast<int>(std::find(downs.begin(), downs.end(), s) - downs.begin());
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<int>> meet(n, std::vector<int>(n)), join = meet, imp = meet;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      leq[a][b] = (downs[a] & ~downs[b]) == 0;
      meet[a][b] = index_of(downs[a] & downs[b]);
      join[a][b] = index_of(downs[a] | downs[b]);
      std::uint32_t largest = 0;
      for (std::uint32_t c : downs)
        if ((c & downs[a] & ~downs[b]) == 0) largest |= c;
      imp[a][b] = index_of(largest);
    }
  return HeytingAlgebra(std::move(leq), std::move(meet), std::move(join),
                        std::move(imp), 0, n - 1, "downsets of " + poset_name(p));
}

std::vector<HeytingAlgebra> all_algebras(int max_points) {
  std::vector<HeytingAlgebra> out;
  for (const auto& p : all_posets(max_points)) out.push_back(algebra_from_poset(p));
  std::stable_sort(out.begin(), out.end(),
                   [](const HeytingAlgebra& a, const HeytingAlgebra& b) {
                     return a.size() < b.size();
                   });
  return out;
}

HeytingAlgebra chain_algebra(int n) { return algebra_from_poset(Poset::chain(n - 1)); }

//------------------------------------------------------------------------------
// Models

int IntuitionisticModel::domain_size(const std::string& sort) const {
  auto it = domain.find(sort);
  if (it == domain.end()) throw EvalError("model has no domain for sort " + sort);
  return it->second;
}

std::string IntuitionisticModel::describe() const {
  std::ostringstream os;
  os << "algebra: " << algebra.name() << " (" << algebra.size()
     << " elements, min=" << algebra.bottom() << ", max=" << algebra.top() << ")\n";
  os << "order:\n" << algebra.order_matrix();
  for (const auto& [sort, n] : domain) os << "domain " << sort << ": " << n << '\n';
  auto table = [&](const char* what, const std::string& name, const std::vector<int>& t) {
    os << what << ' ' << name << ':';
    for (int v : t) os << ' ' << v;
    os << '\n';
  };
  for (const auto& [f, t] : functions) table("function", f, t);
  for (const auto& [p, t] : predicates) table("predicate", p, t);
  return os.str();
}

namespace {

std::size_t table_index(const IntuitionisticModel& m, const Rank& r,
                        const std::vector<int>& values) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    idx = idx * static_cast<std::size_t>(m.domain_size(r.args[i])) +
          static_cast<std::size_t>(values[i]);
  return idx;
}

std::size_t table_size(const IntuitionisticModel& m, const Rank& r) {
  std::size_t n = 1;
  for (const auto& s : r.args) n *= static_cast<std::size_t>(m.domain_size(s));
  return n;
}

const Rank& rank_of(const IntuitionisticModel& m, const std::string& name, bool fn) {
  const Rank* r = fn ? m.signature.function(name) : m.signature.predicate(name);
  if (!r) throw EvalError("model does not interpret " + name);
  return *r;
}

int eval_prop(const Prop& a, const IntuitionisticModel& m, Assignment& phi) {
  const HeytingAlgebra& b = m.algebra;
  switch (a->kind) {
    case PropKind::Atom: {
      const Rank& r = rank_of(m, a->symbol, false);
      auto it = m.predicates.find(a->symbol);
      if (it == m.predicates.end()) throw EvalError("no table for " + a->symbol);
      std::vector<int> vals;
      for (const auto& t : a->args) vals.push_back(eval(t, m, phi));
      return it->second.at(table_index(m, r, vals));
    }
    case PropKind::Top:
      return b.top();
    case PropKind::Bottom:
      return b.bottom();
    case PropKind::Implies:
      return b.imp(eval_prop(a->left, m, phi), eval_prop(a->right, m, phi));
    case PropKind::And:
      return b.meet(eval_prop(a->left, m, phi), eval_prop(a->right, m, phi));
    case PropKind::Or:
      return b.join(eval_prop(a->left, m, phi), eval_prop(a->right, m, phi));
    case PropKind::ForAll:
    case PropKind::Exists: {
      bool all = a->kind == PropKind::ForAll;
      int n = m.domain_size(a->sort);
      auto saved = phi.find(a->symbol);
      std::optional<int> old;
      if (saved != phi.end()) old = saved->second;
      int acc = all ? b.top() : b.bottom();
      for (int v = 0; v < n; ++v) {
        phi[a->symbol] = v;
        int x = eval_prop(a->left, m, phi);
        acc = all ? b.meet(acc, x) : b.join(acc, x);
      }
      if (old) phi[a->symbol] = *old;
      else phi.erase(a->symbol);
      return acc;
    }
  }
  throw EvalError("bad proposition");
}

}  // namespace

int eval(const Term& t, const IntuitionisticModel& m, const Assignment& phi) {
  if (t->kind == TermKind::Var) {
    auto it = phi.find(t->name);
    if (it == phi.end()) throw EvalError("unassigned variable " + t->name);
    return it->second;
  }
  const Rank& r = rank_of(m, t->name, true);
  auto it = m.functions.find(t->name);
  if (it == m.functions.end()) throw EvalError("no table for " + t->name);
  std::vector<int> vals;
  for (const auto& a : t->args) vals.push_back(eval(a, m, phi));
  return it->second.at(table_index(m, r, vals));
}

int eval(const Prop& a, const IntuitionisticModel& m, const Assignment& phi) {
  Assignment local = phi;
  return eval_prop(a, m, local);
}

namespace {

// Calls f on every assignment of `vars`; stops when f returns false.
template <typename F>
bool for_each_assignment(const std::vector<std::pair<std::string, std::string>>& vars,
                         const IntuitionisticModel& m, F&& f) {
  Assignment phi;
  std::vector<int> sizes;
  for (const auto& [v, s] : vars) {
    sizes.push_back(m.domain_size(s));
    phi[v] = 0;
  }
  for (;;) {
    if (!f(phi)) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      int& d = phi[vars[i].first];
      if (++d < sizes[i]) break;
      d = 0;
    }
    if (i == vars.size()) return true;
  }
}

}  // namespace

bool is_valid(const Prop& a, const IntuitionisticModel& m) {
  return for_each_assignment(free_vars_ordered(a), m, [&](Assignment& phi) {
    return eval_prop(a, m, phi) == m.algebra.top();
  });
}

IntuitionisticModel random_model(const Signature& sig, const HeytingAlgebra& b,
                                 int domain_size, std::mt19937_64& rng) {
  IntuitionisticModel m{sig, b, {}, {}, {}};
  for (const auto& s : sig.sorts()) m.domain[s] = domain_size;
  std::uniform_int_distribution<int> elem(0, domain_size - 1);
  std::uniform_int_distribution<int> truth(0, b.size() - 1);
  for (const auto& [f, r] : sig.functions()) {
    std::vector<int> t(table_size(m, r));
    for (int& v : t) v = elem(rng);
    m.functions[f] = std::move(t);
  }
  for (const auto& [p, r] : sig.predicates()) {
    std::vector<int> t(table_size(m, r));
    for (int& v : t) v = truth(rng);
    m.predicates[p] = std::move(t);
  }
  return m;
}

std::optional<Countermodel> find_countermodel(const Prop& a, const Signature& sig,
                                              int max_domain, int max_algebra,
                                              std::size_t model_cap) {
  if (max_domain < 1 || max_algebra < 1)
    throw Error("countermodel bounds must be at least 1");
  // Restrict the language to the symbols of A.
  Signature used;
  std::set<std::string> sorts;
  for (const auto& s : sig.sorts()) sorts.insert(s);
  for (const auto& s : sorts) used.add_sort(s);
  for (const auto& f : functions_of(a)) {
    const Rank* r = sig.function(f);
    if (!r) throw EvalError("undeclared function " + f);
    used.add_function(f, r->args, r->result);
  }
  for (const auto& p : predicates_of(a)) {
    const Rank* r = sig.predicate(p);
    if (!r) throw EvalError("undeclared predicate " + p);
    used.add_predicate(p, r->args);
  }
  auto vars = free_vars_ordered(a);
  std::vector<HeytingAlgebra> algebras = all_algebras(max_algebra);
  std::size_t tried = 0;

  for (int d = 1; d <= max_domain; ++d) {
    for (const auto& b : algebras) {
      IntuitionisticModel m{used, b, {}, {}, {}};
      for (const auto& s : used.sorts()) m.domain[s] = d;
      // Digits of the odometer: (table, entry, radix).
      struct Digit {
        std::vector<int>* table;
        std::size_t entry;
        int radix;
      };
      for (const auto& [f, r] : used.functions())
        m.functions[f].assign(table_size(m, r), 0);
      for (const auto& [p, r] : used.predicates())
        m.predicates[p].assign(table_size(m, r), 0);
      std::vector<Digit> digits;
      for (auto& [f, t] : m.functions)
        for (std::size_t i = 0; i < t.size(); ++i) digits.push_back({&t, i, d});
      for (auto& [p, t] : m.predicates)
        for (std::size_t i = 0; i < t.size(); ++i) digits.push_back({&t, i, b.size()});

      for (;;) {
        if (tried++ >= model_cap) return std::nullopt;
        std::optional<Countermodel> found;
        for_each_assignment(vars, m, [&](Assignment& phi) {
          int v = eval_prop(a, m, phi);
          if (v != b.top()) {
            found = Countermodel{m, phi, v};
            return false;
          }
          return true;
        });
        if (found) return found;
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
          int& cell = (*digits[i].table)[digits[i].entry];
          if (++cell < digits[i].radix) break;
          cell = 0;
        }
        if (i == digits.size()) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace modarith
