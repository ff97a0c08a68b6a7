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

#include "modarith/comprehension.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <mutex>

namespace modarith {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Normalized {
  std::string canonical;
  std::vector<std::string> order;  // caller parameter names, symbol order
  std::vector<std::string> sorts;  // parallel to order
  Prop body;                       // over "x", "y1".."yn"
};

Normalized normalize_key(const ComprehensionKey& key, const std::string& x_sort) {
  std::vector<std::string> order;
  std::vector<std::string> sorts;
  auto fvs = free_vars_ordered(key.body);
  std::map<std::string, std::string> fv_sort(fvs.begin(), fvs.end());
  for (const auto& [name, sort] : fvs)
    if (std::find(key.params.begin(), key.params.end(), name) != key.params.end()) {
      order.push_back(name);
      sorts.push_back(sort);
    }
  // Unused parameters are interchangeable; keep the caller's order.
  for (const auto& p : key.params)
    if (!fv_sort.count(p)) {
      order.push_back(p);
      sorts.push_back(kIota);
    }

  TermSubst rename;
  rename[key.var] = mk_var("%x", x_sort);
  for (std::size_t i = 0; i < order.size(); ++i)
    rename[order[i]] = mk_var("%y" + std::to_string(i + 1), sorts[i]);
  Prop renamed = substitute(rename, key.body);

  Normalized n;
  n.canonical = canonical_key(renamed);
  n.canonical += "|";
  for (const auto& s : sorts) n.canonical += s + ",";
  n.order = std::move(order);
  n.sorts = std::move(sorts);

  TermSubst readable;
  readable["%x"] = mk_var("x", x_sort);
  for (std::size_t i = 0; i < n.order.size(); ++i)
    readable["%y" + std::to_string(i + 1)] =
        mk_var("y" + std::to_string(i + 1), n.sorts[i]);
  n.body = substitute(readable, renamed);
  return n;
}

// Human names for the classes the typed theory is built from.
std::string alias_for(const std::string& canonical) {
  static const std::map<std::string, std::string> aliases = [] {
    std::map<std::string, std::string> m;
    ComprehensionKey nat{"x", {}, mk_atom("N", {mk_var("x", kIota)})};
    m[normalize_key(nat, kIota).canonical] = "nat";
    Term x = mk_var("x", kIota);
    ComprehensionKey arrow{
        "x",
        {"y", "z"},
        mk_implies(mk_atom("in", {x, mk_var("y", kKappa)}),
                   mk_atom("in", {x, mk_var("z", kKappa)}))};
    m[normalize_key(arrow, kIota).canonical] = "->";
    return m;
  }();
  auto it = aliases.find(canonical);
  return it == aliases.end() ? std::string() : it->second;
}

}  // namespace

ComprehensionRegistry::ComprehensionRegistry(ComprehensionMode mode,
                                             Signature base)
    : mode_(mode), base_(std::move(base)) {}

ComprehensionSymbol ComprehensionRegistry::register_key(
    const ComprehensionKey& key) {
  if (!key.body) throw SortError("comprehension key without a body");
  if (std::find(key.params.begin(), key.params.end(), key.var) != key.params.end())
    throw SortError("comprehension variable " + key.var +
                    " also listed as a parameter");
  {
    VarSet seen;
    for (const auto& p : key.params)
      if (!seen.insert(p).second)
        throw SortError("duplicate comprehension parameter " + p);
  }
  for (const auto& [name, sort] : free_vars_ordered(key.body)) {
    if (name == key.var) {
      if (sort != kIota)
        throw SortError("comprehension variable " + name + " must have sort iota");
      continue;
    }
    if (std::find(key.params.begin(), key.params.end(), name) == key.params.end())
      throw SortError("free variable " + name +
                      " of comprehension body is not a parameter");
    if (mode_ == ComprehensionMode::Class && sort != kIota)
      throw SortError("comprehension parameter " + name + " must have sort iota");
  }
  if (mode_ == ComprehensionMode::Class && predicates_of(key.body).count("in"))
    throw SortError("comprehension body may not mention 'in': " +
                    to_string(key.body));

  // The body must be in the base language (plus registered symbols in
  // membership mode).
  class BodyTable : public SymbolTable {
   public:
    BodyTable(const ComprehensionRegistry& r, bool allow_registered)
        : r_(r), allow_(allow_registered) {}
    const Rank* function(const std::string& n) const override {
      if (const Rank* rk = r_.base_.function(n)) return rk;
      if (!allow_) return nullptr;
      auto it = r_.by_name_.find(n);
      return it == r_.by_name_.end() ? nullptr : &it->second.rank;
    }
    const Rank* predicate(const std::string& n) const override {
      return r_.base_.predicate(n);
    }
    bool has_sort(const std::string& s) const override {
      return r_.base_.has_sort(s);
    }

   private:
    const ComprehensionRegistry& r_;
    bool allow_;
  };

  Normalized n = normalize_key(key, kIota);

  std::unique_lock lock(mutex_);
  check_sorts(BodyTable(*this, mode_ == ComprehensionMode::Membership), key.body);

  auto known = by_canonical_.find(n.canonical);
  if (known != by_canonical_.end()) {
    const auto& entry = by_name_.at(known->second);
    return {entry.name, n.order, entry.rank};
  }
  std::string name = alias_for(n.canonical);
  if (name.empty() || by_name_.count(name) || base_.function(name))
    name = "f_" + hex(fnv1a(n.canonical));

  ComprehensionEntry entry;
  entry.name = name;
  entry.var = "x";
  for (std::size_t i = 0; i < n.order.size(); ++i)
    entry.params.emplace_back("y" + std::to_string(i + 1), n.sorts[i]);
  entry.body = n.body;
  entry.rank = Rank{n.sorts, kKappa};
  entry.canonical = n.canonical;
  by_canonical_.emplace(n.canonical, name);
  by_name_.emplace(name, entry);
  return {name, n.order, entry.rank};
}

std::optional<ComprehensionEntry> ComprehensionRegistry::find(
    const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Rank* ComprehensionRegistry::rank(const std::string& name) const {
  std::shared_lock lock(mutex_);
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &it->second.rank;
}

Prop ComprehensionRegistry::unfold(const std::string& name, const Term& member,
                                   const std::vector<Term>& args) const {
  std::shared_lock lock(mutex_);
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return nullptr;
  const auto& e = it->second;
  if (args.size() != e.params.size()) return nullptr;
  TermSubst s;
  s[e.var] = member;
  for (std::size_t i = 0; i < args.size(); ++i) s[e.params[i].first] = args[i];
  return substitute(s, e.body);
}

std::vector<ComprehensionEntry> ComprehensionRegistry::entries() const {
  std::shared_lock lock(mutex_);
  std::vector<ComprehensionEntry> out;
  for (const auto& [_, e] : by_name_) out.push_back(e);
  return out;
}

std::pair<ComprehensionSymbol, Signature> comprehension_symbol(
    ComprehensionRegistry& registry, const ComprehensionKey& key, Signature sig) {
  ComprehensionSymbol sym = registry.register_key(key);
  if (!sig.function(sym.name)) {
    sig.add_sort(kKappa);
    sig.add_function(sym.name, sym.rank.args, sym.rank.result);
  }
  return {std::move(sym), std::move(sig)};
}

}  // namespace modarith
