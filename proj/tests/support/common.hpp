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

#ifndef MODARITH_TESTS_COMMON_HPP
#define MODARITH_TESTS_COMMON_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "modarith/parser.hpp"
#include "modarith/script.hpp"
#include "modarith/theory.hpp"

namespace modarith::testing {

inline std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(MODARITH_GOLDEN_DIR) / name;
}

inline Theory logic_theory() { return load_theory(golden("logic.thy")); }

// Parses with a context shared across calls, so free variables keep their
// sorts between a proposition and the proof that mentions it.
class Parsing {
 public:
  explicit Parsing(Theory& th) : ctx_(th.parse_context()) {}

  Prop prop(std::string_view text) { return parse_prop(text, ctx_); }
  Term term(std::string_view text) { return parse_term(text, ctx_); }
  Proof proof(std::string_view text) { return parse_proof(text, ctx_); }
  ParseContext& context() { return ctx_; }

 private:
  ParseContext ctx_;
};

}  // namespace modarith::testing

#endif  // MODARITH_TESTS_COMMON_HPP
