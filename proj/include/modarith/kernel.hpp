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

#ifndef MODARITH_KERNEL_HPP
#define MODARITH_KERNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "modarith/proof.hpp"
#include "modarith/rewrite.hpp"
#include "modarith/theory.hpp"

namespace modarith {

enum class Verdict { Ok, Fail, Undecided };

const char* to_string(Verdict v);

struct Hypothesis {
  std::string name;
  Prop prop;
};

// Later entries shadow earlier ones with the same name.
using Context = std::vector<Hypothesis>;

struct CheckReport {
  Verdict verdict = Verdict::Ok;
  // Rule and position (child indices from the root) of the first problem.
  std::string rule;
  std::vector<int> path;
  Prop expected;
  Prop actual;
  std::string message;
  std::size_t fuel_consumed = 0;
  // The proposition inferred for the whole proof, when inferring.
  Prop proved;

  bool ok() const { return verdict == Verdict::Ok; }
  std::string describe() const;
};

std::string path_to_string(const std::vector<int>& path);

// Gamma |- pi : A modulo the theory's rewrite rules.
CheckReport check(const Theory& theory, const Context& gamma, const Proof& pi,
                  const Prop& a, std::size_t fuel = Fuel::kDefault);

// Computes a proposition proved by pi; report.proved holds it when ok.
CheckReport infer(const Theory& theory, const Context& gamma, const Proof& pi,
                  std::size_t fuel = Fuel::kDefault);

// One axiom made available to a proof as a hypothesis named `alias`.
struct AxiomUse {
  std::string alias;
  std::string axiom;
  std::optional<SchemeInstanceRequest> request;
};

// Throws TheoryError for unknown axioms or bad scheme instances.
Context axiom_context(const Theory& theory, const std::vector<AxiomUse>& uses);

CheckReport check_with_axioms(const Theory& theory, const std::vector<AxiomUse>& uses,
                              const Proof& pi, const Prop& a,
                              std::size_t fuel = Fuel::kDefault);

}  // namespace modarith

#endif  // MODARITH_KERNEL_HPP
