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

#ifndef MODARITH_NORMALIZER_HPP
#define MODARITH_NORMALIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "modarith/kernel.hpp"
#include "modarith/proof.hpp"

namespace modarith {

enum class RedexTag {
  Beta,          // (lam a. p) q
  BetaForall,    // (all x. p) [t]
  FstPair,       // fst(<p, q>)
  SndPair,       // snd(<p, q>)
  CaseInl,       // case(inl(p); a. q; b. r)
  CaseInr,       // case(inr(p); a. q; b. r)
  ExistsUnpack,  // unpack(pack(t, p); x. a. q)
};

inline constexpr RedexTag kAllRedexTags[] = {
    RedexTag::Beta,    RedexTag::BetaForall, RedexTag::FstPair,
    RedexTag::SndPair, RedexTag::CaseInl,    RedexTag::CaseInr,
    RedexTag::ExistsUnpack};

const char* to_string(RedexTag tag);
std::optional<RedexTag> parse_redex_tag(const std::string& text);

struct ReductionStep {
  std::vector<int> path;  // child indices from the root
  RedexTag tag;
};

struct Reduct {
  ReductionStep step;
  Proof result;
};

class StepBudgetExhausted : public Error {
 public:
  using Error::Error;
};

// The redex tag if `p` itself is a redex.
std::optional<RedexTag> redex_at_root(const Proof& p);
// Contracts the redex at the root. Throws Error if there is none.
Proof contract(const Proof& p);

// Every one-step reduct, in preorder (leftmost-outermost first).
std::vector<Reduct> step(const Proof& p);
bool is_normal(const Proof& p);
// A variable or an elimination; never an introduction.
bool is_neutral(const Proof& p);

// Rewrites the redex at `s.path`, checking its tag. Throws Error on mismatch.
Proof apply_step(const Proof& p, const ReductionStep& s);

struct NormalizeResult {
  Proof normal_form;
  std::size_t steps = 0;
  std::vector<ReductionStep> trace;
};

inline constexpr std::size_t kDefaultMaxSteps = 100000;

// Leftmost-outermost normalization. Throws StepBudgetExhausted.
NormalizeResult normalize(const Proof& p, std::size_t max_steps = kDefaultMaxSteps,
                          bool record_trace = false);

// One line per step: "step <n> <tag> @ <path>".
std::string format_trace(const std::vector<ReductionStep>& trace);
std::vector<ReductionStep> parse_trace(const std::string& text);
// Replays a trace from `start`; throws Error if a step does not apply.
Proof replay_trace(const Proof& start, const std::vector<ReductionStep>& trace);

struct SubjectReductionReport {
  bool ok = true;
  Verdict verdict = Verdict::Ok;
  std::size_t steps = 0;        // leftmost-outermost steps taken
  std::size_t reducts_checked = 0;
  std::string message;
  Proof offending;
};

// Along the leftmost-outermost path from pi, re-checks every one-step reduct
// of every visited proof against A.
SubjectReductionReport check_subject_reduction(const Theory& theory,
                                               const Context& gamma, const Proof& pi,
                                               const Prop& a,
                                               std::size_t fuel = Fuel::kDefault,
                                               std::size_t max_steps = kDefaultMaxSteps);

}  // namespace modarith

#endif  // MODARITH_NORMALIZER_HPP
