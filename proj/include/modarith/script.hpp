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

#ifndef MODARITH_SCRIPT_HPP
#define MODARITH_SCRIPT_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "modarith/kernel.hpp"
#include "modarith/theory.hpp"
#include "modarith/translations.hpp"

namespace modarith {

// Script files. Every statement ends with '.'; '#' starts a comment.
//
// .thy
//   theory <name>.            extends <builtin>.
//   sort <s>.
//   function <f> : [<s1>, ..., <sn> ->] <s>.
//   predicate <P> [: <s1>, ..., <sn>].
//   rule [<name> :] <term> --> <term>.
//   prop-rule [<name> :] <atom> --> <prop>.
//   axiom <name> : <prop>.
//
// .prf
//   theory <builtin> | theory "<file.thy>".
//   use axiom <name> [as <alias>] [with P := <prop>, x := <var>, params := <y1> ...].
//   theorem <name> : <prop> := <proof>.
//
// .t
//   tdef <name> : <type> := <term>.

// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Builds a theory. `extends` copies a built-in; without it the theory starts
// empty. Throws ParseError, SortError or TheoryError.
Theory parse_theory_script(std::string_view text, const std::string& default_name = "user");
Theory load_theory(const std::filesystem::path& path);

// A built-in name, or a path to a .thy file relative to `base_dir`.
Theory resolve_theory(const std::string& name_or_path, const std::filesystem::path& base_dir = {});

struct TheoremEntry {
  std::string name;
  Prop statement;
  Proof proof;
  int line = 0;
  // Axiom aliases and earlier theorems in scope.
  Context context;
};

struct ProofScript {
  std::shared_ptr<Theory> theory;
  std::vector<AxiomUse> uses;
  std::vector<TheoremEntry> theorems;
};

// `fallback` is used when the script names no theory; without either the
// script is rejected.
ProofScript parse_proof_script(std::string_view text,
                               const std::filesystem::path& base_dir = {},
                               const std::string& fallback = "");
ProofScript load_proof_script(const std::filesystem::path& path,
                              const std::string& fallback = "");

struct TDefinition {
  std::string name;
  TType declared;
  TTerm term;
  int line = 0;
};

// Later definitions may refer to earlier ones by name.
std::vector<TDefinition> parse_t_script(std::string_view text);

}  // namespace modarith

#endif  // MODARITH_SCRIPT_HPP
