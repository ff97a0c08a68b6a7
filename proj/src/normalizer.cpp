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

#include "modarith/normalizer.hpp"

#include <charconv>
#include <sstream>

namespace modarith {

const char* to_string(RedexTag tag) {
  switch (tag) {
    case RedexTag::Beta: return "beta";
    case RedexTag::BetaForall: return "beta-forall";
    case RedexTag::FstPair: return "fst-pair";
    case RedexTag::SndPair: return "snd-pair";
    case RedexTag::CaseInl: return "case-inl";
    case RedexTag::CaseInr: return "case-inr";
    case RedexTag::ExistsUnpack: return "exists-unpack";
  }
  return "?";
}

std::optional<RedexTag> parse_redex_tag(const std::string& text) {
  for (RedexTag t : kAllRedexTags)
    if (text == to_string(t)) return t;
  return std::nullopt;
}

std::optional<RedexTag> redex_at_root(const Proof& p) {
  if (p->kids.empty()) return std::nullopt;
  ProofKind k0 = p->kids[0]->kind;
  switch (p->kind) {
    case ProofKind::App:
      if (k0 == ProofKind::Lam) return RedexTag::Beta;
      break;
    case ProofKind::TApp:
      if (k0 == ProofKind::TLam) return RedexTag::BetaForall;
      break;
    case ProofKind::Fst:
      if (k0 == ProofKind::Pair) return RedexTag::FstPair;
      break;
    case ProofKind::Snd:
      if (k0 == ProofKind::Pair) return RedexTag::SndPair;
      break;
    case ProofKind::Case:
      if (k0 == ProofKind::InL) return RedexTag::CaseInl;
      if (k0 == ProofKind::InR) return RedexTag::CaseInr;
      break;
    case ProofKind::ExElim:
      if (k0 == ProofKind::ExIntro) return RedexTag::ExistsUnpack;
      break;
    default:
      break;
  }
  return std::nullopt;
}

Proof contract(const Proof& p) {
  auto tag = redex_at_root(p);
  if (!tag) throw Error("no redex at root of " + to_string(p));
  const Proof& head = p->kids[0];
  switch (*tag) {
    case RedexTag::Beta:
      return substitute_proof(head->kids[0], head->var, p->kids[1]);
    case RedexTag::BetaForall:
      return substitute_term(head->kids[0], head->var, p->term);
    case RedexTag::FstPair:
      return head->kids[0];
    case RedexTag::SndPair:
      return head->kids[1];
    case RedexTag::CaseInl:
      return substitute_proof(p->kids[1], p->var, head->kids[0]);
    case RedexTag::CaseInr:
      return substitute_proof(p->kids[2], p->var2, head->kids[0]);
    case RedexTag::ExistsUnpack: {
      // (t/x) first: the packed proof is inserted afterwards, so its own free
      // term variables are left alone.
      Proof body = substitute_term(p->kids[1], p->var, head->term);
      return substitute_proof(body, p->var2, head->kids[0]);
    }
  }
  throw Error("unknown redex");
}

namespace {

void collect(const Proof& p, std::vector<int>& path, std::vector<Reduct>& out,
             const std::vector<Proof>& spine) {
  if (auto tag = redex_at_root(p)) {
    Proof r = contract(p);
    // Rebuild the ancestors along `spine`.
    for (std::size_t i = spine.size(); i-- > 0;) {
      std::vector<Proof> kids = spine[i]->kids;
      kids[static_cast<std::size_t>(path[i])] = r;
      r = with_kids(spine[i], std::move(kids));
    }
    out.push_back({{path, *tag}, r});
  }
  std::vector<Proof> down = spine;
  down.push_back(p);
  for (std::size_t i = 0; i < p->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect(p->kids[i], path, out, down);
    path.pop_back();
  }
}

// Leftmost-outermost single step; nullptr when normal.
Proof lo_step(const Proof& p, std::vector<int>& path, RedexTag& tag) {
  if (auto t = redex_at_root(p)) {
    tag = *t;
    return contract(p);
  }
  for (std::size_t i = 0; i < p->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (Proof r = lo_step(p->kids[i], path, tag)) {
      std::vector<Proof> kids = p->kids;
      kids[i] = r;
      return with_kids(p, std::move(kids));
    }
    path.pop_back();
  }
  return nullptr;
}

}  // namespace

std::vector<Reduct> step(const Proof& p) {
  std::vector<Reduct> out;
  std::vector<int> path;
  collect(p, path, out, {});
  return out;
}

bool is_normal(const Proof& p) {
  if (redex_at_root(p)) return false;
  for (const auto& k : p->kids)
    if (!is_normal(k)) return false;
  return true;
}

bool is_neutral(const Proof& p) {
  return p->kind == ProofKind::Var || is_elimination(p->kind);
}

Proof apply_step(const Proof& p, const ReductionStep& s) {
  std::vector<Proof> spine;
  Proof cur = p;
  for (int i : s.path) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->kids.size())
      throw Error("path " + path_to_string(s.path) + " does not exist");
    spine.push_back(cur);
    cur = cur->kids[static_cast<std::size_t>(i)];
  }
  auto tag = redex_at_root(cur);
  if (!tag || *tag != s.tag)
    throw Error("no " + std::string(to_string(s.tag)) + " redex at " +
                path_to_string(s.path));
  Proof r = contract(cur);
  for (std::size_t i = spine.size(); i-- > 0;) {
    std::vector<Proof> kids = spine[i]->kids;
    kids[static_cast<std::size_t>(s.path[i])] = r;
    r = with_kids(spine[i], std::move(kids));
  }
  return r;
}

NormalizeResult normalize(const Proof& p, std::size_t max_steps, bool record_trace) {
  NormalizeResult res;
  Proof cur = p;
  for (;;) {
    std::vector<int> path;
    RedexTag tag{};
    Proof next = lo_step(cur, path, tag);
    if (!next) break;
    if (res.steps == max_steps)
      throw StepBudgetExhausted("no normal form within " + std::to_string(max_steps) +
                                " steps");
    ++res.steps;
    if (record_trace) res.trace.push_back({std::move(path), tag});
    cur = next;
  }
  res.normal_form = cur;
  return res;
}

std::string format_trace(const std::vector<ReductionStep>& trace) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << "step " << i + 1 << ' ' << to_string(trace[i].tag) << " @ "
       << path_to_string(trace[i].path) << '\n';
  return os.str();
}

std::vector<ReductionStep> parse_trace(const std::string& text) {
  std::vector<ReductionStep> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word, number, tag, at, path;
    if (!(ls >> word) || word != "step") continue;
    if (!(ls >> number >> tag >> at >> path) || at != "@")
      throw Error("malformed trace line: " + line);
    auto t = parse_redex_tag(tag);
    if (!t) throw Error("unknown redex tag in trace: " + tag);
    ReductionStep s{{}, *t};
    if (path != "root") {
      std::istringstream ps(path);
      std::string part;
      while (std::getline(ps, part, '.')) {
        int k = 0;
        auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), k);
        if (ec != std::errc() || end != part.data() + part.size() || k < 0)
          throw Error("malformed path in trace: " + path);
        s.path.push_back(k);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

Proof replay_trace(const Proof& start, const std::vector<ReductionStep>& trace) {
  Proof cur = start;
  for (const auto& s : trace) cur = apply_step(cur, s);
  return cur;
}

SubjectReductionReport check_subject_reduction(const Theory& theory,
                                               const Context& gamma, const Proof& pi,
                                               const Prop& a, std::size_t fuel,
                                               std::size_t max_steps) {
  SubjectReductionReport rep;
  CheckReport first = check(theory, gamma, pi, a, fuel);
  if (!first.ok()) {
    rep.ok = false;
    rep.verdict = first.verdict;
    rep.message = "input does not check: " + first.describe();
    rep.offending = pi;
    return rep;
  }
  Proof cur = pi;
  for (;;) {
    std::vector<Reduct> reducts = step(cur);
    if (reducts.empty()) return rep;
    for (const auto& r : reducts) {
      ++rep.reducts_checked;
      CheckReport c = check(theory, gamma, r.result, a, fuel);
      if (!c.ok()) {
        rep.ok = false;
        rep.verdict = c.verdict;
        rep.message = std::string(to_string(r.step.tag)) + " at " +
                      path_to_string(r.step.path) + " breaks typing: " + c.describe();
        rep.offending = r.result;
        return rep;
      }
    }
    if (rep.steps == max_steps)
      throw StepBudgetExhausted("no normal form within " + std::to_string(max_steps) +
                                " steps");
    ++rep.steps;
    cur = reducts.front().result;
  }
}

}  // namespace modarith
