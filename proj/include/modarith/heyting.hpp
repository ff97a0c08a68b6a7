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

#ifndef MODARITH_HEYTING_HPP
#define MODARITH_HEYTING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "modarith/syntax.hpp"

namespace modarith {

// A finite partial order on points 0..n-1; leq[i][j] means i <= j.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> leq;

  static Poset chain(int n);
  static Poset antichain(int n);
  bool valid() const;
};

// All posets with 1..max_points points, one per isomorphism class.
std::vector<Poset> all_posets(int max_points);

struct Law {
  std::string name;
  bool holds;
  std::string counterexample;
};

// A finite Heyting algebra on elements 0..size()-1 given by its tables.
// Finite, hence complete: arbitrary meets and joins fold the binary ones.
class HeytingAlgebra {
 public:
  HeytingAlgebra(std::vector<std::vector<bool>> leq,
                 std::vector<std::vector<int>> meet,
                 std::vector<std::vector<int>> join,
                 std::vector<std::vector<int>> imp, int bottom, int top,
                 std::string name = "");

  int size() const { return static_cast<int>(leq_.size()); }
  bool le(int a, int b) const { return leq_[a][b]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int imp(int a, int b) const { return imp_[a][b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int big_meet(const std::vector<int>& a) const;
  int big_join(const std::vector<int>& a) const;
  const std::string& name() const { return name_; }

  // The order, bound, binary and arbitrary meet/join laws and residuation,
  // each checked on every tuple of elements and every subset.
  std::vector<Law> verify_laws() const;
  bool laws_hold() const;

  std::string order_matrix() const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> meet_, join_, imp_;
  int bottom_, top_;
  std::string name_;
};

// Downsets of `p` ordered by inclusion. Elements are sorted by size, so 0 is
// the empty downset and size()-1 the whole poset.
HeytingAlgebra algebra_from_poset(const Poset& p);
// The algebras of all posets with up to `max_points` points, smallest first.
std::vector<HeytingAlgebra> all_algebras(int max_points = 4);
// The n-element chain (n >= 2).
HeytingAlgebra chain_algebra(int n);

// Domain sizes per sort, and tables indexed in row-major order of the
// argument values.
struct IntuitionisticModel {
  Signature signature;
  HeytingAlgebra algebra;
  std::map<std::string, int> domain;
  std::map<std::string, std::vector<int>> functions;
  std::map<std::string, std::vector<int>> predicates;

  int domain_size(const std::string& sort) const;
  std::string describe() const;
};

using Assignment = std::map<std::string, int>;

class EvalError : public Error {
 public:
  using Error::Error;
};

int eval(const Term& t, const IntuitionisticModel& m, const Assignment& phi);
int eval(const Prop& a, const IntuitionisticModel& m, const Assignment& phi);
// eval is max under every assignment of the free variables.
bool is_valid(const Prop& a, const IntuitionisticModel& m);

// Every table entry uniformly random.
IntuitionisticModel random_model(const Signature& sig, const HeytingAlgebra& b,
                                 int domain_size, std::mt19937_64& rng);

struct Countermodel {
  IntuitionisticModel model;
  Assignment assignment;
  int value;
};

// Searches algebras from posets of up to `max_algebra` points and domains of
// 1..max_domain elements, enumerating the tables of the symbols of A. At most
// `model_cap` models are tried. nullopt proves nothing.
std::optional<Countermodel> find_countermodel(const Prop& a, const Signature& sig,
                                              int max_domain, int max_algebra,
                                              std::size_t model_cap = 200000);

}  // namespace modarith

#endif  // MODARITH_HEYTING_HPP
