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

#include "modarith/script.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "modarith/parser.hpp"

namespace modarith {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

struct Header {
  std::string keyword;
  std::string value;
  int line = 0;
};

// Pulls `theory X.` / `extends X.` lines out of the text, blanking them so
// token positions stay put. X is a name, a path, or a quoted path.
std::vector<Header> extract_headers(std::string& text) {
  static const std::regex re(
      R"re(^[ \t]*(theory|extends)[ \t]+("([^"]*)"|[A-Za-z0-9_\-./]+)[ \t]*\.[ \t]*(#.*)?$)re");
  std::vector<Header> out;
  std::size_t start = 0;
  int line = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string row = text.substr(start, end - start);
    std::smatch m;
    if (std::regex_match(row, m, re)) {
      std::string value = m[3].matched ? m[3].str() : m[2].str();
      out.push_back({m[1].str(), value, line});
      for (std::size_t i = start; i < end; ++i) text[i] = ' ';
    }
    start = end + 1;
    ++line;
  }
  return out;
}

std::string symbol_name(Parser& p) {
  if (p.at_end()) p.fail("expected a symbol name");
  return p.advance().text;
}

// `name :` prefix on rules.
std::string optional_label(Parser& p, const std::string& fallback) {
  if (p.peek().kind == TokenKind::Ident && p.peek(1).text == ":" &&
      p.peek(1).kind == TokenKind::Symbol) {
    std::string name = p.ident();
    p.expect(":");
    return name;
  }
  return fallback;
}

}  // namespace

Theory parse_theory_script(std::string_view input, const std::string& default_name) {
  std::string text(input);
  Theory th;
  th.name = default_name;
  for (const auto& h : extract_headers(text)) {
    if (h.keyword == "extends") {
      std::string name = th.name;
      th = theory_by_name(h.value);
      th.name = name;
    } else {
      th.name = h.value;
    }
  }
  ParseContext ctx = th.parse_context();
  ctx.declare_unknown = false;
  Parser p(text, ctx);
  while (!p.at_end()) {
    ctx.var_sorts.clear();
    std::string kw = p.ident();
    if (kw == "sort") {
      th.signature.add_sort(p.ident());
    } else if (kw == "function") {
      std::string name = symbol_name(p);
      p.expect(":");
      std::vector<std::string> sorts{p.sort_name()};
      while (p.accept(",")) sorts.push_back(p.sort_name());
      std::string result = sorts.back();
      if (p.accept("->")) {
        result = p.sort_name();
      } else {
        if (sorts.size() != 1) p.fail("expected '->' before the result sort");
        sorts.clear();
      }
      th.signature.add_function(name, sorts, result);
    } else if (kw == "predicate") {
      std::string name = symbol_name(p);
      std::vector<std::string> sorts;
      if (p.accept(":")) {
        sorts.push_back(p.sort_name());
        while (p.accept(",")) sorts.push_back(p.sort_name());
      }
      th.signature.add_predicate(name, sorts);
    } else if (kw == "rule") {
      std::string name = optional_label(p, "rule" + std::to_string(th.rules.term_rules.size() + 1));
      Term lhs = p.term();
      p.expect("-->");
      Term rhs = p.term(lhs->sort);
      th.rules.add_term_rule({name, lhs, rhs});
    } else if (kw == "prop-rule") {
      std::string name =
          optional_label(p, "prop_rule" + std::to_string(th.rules.prop_rules.size() + 1));
      Prop lhs = p.prop();
      p.expect("-->");
      Prop rhs = p.prop();
      th.rules.add_prop_rule({name, lhs, rhs});
    } else if (kw == "axiom") {
      std::string name = p.ident();
      p.expect(":");
      Prop a = close_over(p.prop());
      check_sorts(th, a);
      th.axioms.push_back({name, a, {}});
    } else {
      p.fail("unknown statement '" + kw + "'");
    }
    p.expect(".");
  }
  th.validate();
  return th;
}

Theory load_theory(const std::filesystem::path& path) {
  return parse_theory_script(read_file(path), path.stem().string());
}

Theory resolve_theory(const std::string& name_or_path, const std::filesystem::path& base_dir) {
  std::filesystem::path path(name_or_path);
  if (path.extension() == ".thy") {
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    return load_theory(path);
  }
  return theory_by_name(name_or_path);
}

ProofScript parse_proof_script(std::string_view input, const std::filesystem::path& base_dir,
                               const std::string& fallback) {
  std::string text(input);
  ProofScript script;
  std::string theory_name = fallback;
  for (const auto& h : extract_headers(text)) {
    if (h.keyword != "theory")
      throw ParseError("'extends' belongs in a .thy file", h.line, 1);
    theory_name = h.value;
  }
  if (theory_name.empty()) throw ParseError("script names no theory", 1, 1);
  script.theory = std::make_shared<Theory>(resolve_theory(theory_name, base_dir));
  Theory& th = *script.theory;

  ParseContext ctx = th.parse_context();
  Parser p(text, ctx);
  Context scope;
  auto in_scope = [&](const std::string& name) {
    for (const auto& h : scope)
      if (h.name == name) return true;
    return false;
  };
  while (!p.at_end()) {
    ctx.var_sorts.clear();
    int line = p.peek().line;
    std::string kw = p.ident();
    if (kw == "use") {
      if (p.ident() != "axiom") p.fail("expected 'use axiom'");
      AxiomUse use;
      use.axiom = p.ident();
      use.alias = use.axiom;
      if (p.accept("as")) use.alias = p.ident();
      if (p.accept("with")) {
        SchemeInstanceRequest req;
        req.scheme = use.axiom;
        do {
          std::string key = p.ident();
          p.expect(":=");
          if (key == "P") {
            req.P = p.prop();
          } else if (key == "x") {
            req.var = p.ident();
          } else if (key == "params") {
            while (p.peek().kind == TokenKind::Ident) req.params.push_back(p.ident());
          } else {
            p.fail("unknown instance key '" + key + "'");
          }
        } while (p.accept(","));
        use.request = req;
      }
      if (in_scope(use.alias)) p.fail("'" + use.alias + "' is already in scope");
      Prop stmt;
      try {
        stmt = th.axiom_instance(use.axiom, use.request ? &*use.request : nullptr);
      } catch (const TheoryError& e) {
        throw ParseError(e.what(), line, 1);
      }
      scope.push_back({use.alias, stmt});
      script.uses.push_back(std::move(use));
    } else if (kw == "theorem") {
      TheoremEntry thm;
      thm.line = line;
      thm.name = p.ident();
      p.expect(":");
      thm.statement = p.prop();
      p.expect(":=");
      thm.proof = p.proof();
      thm.context = scope;
      if (in_scope(thm.name)) p.fail("'" + thm.name + "' is already in scope");
      scope.push_back({thm.name, thm.statement});
      script.theorems.push_back(std::move(thm));
    } else {
      p.fail("unknown statement '" + kw + "'");
    }
    p.expect(".");
  }
  return script;
}

ProofScript load_proof_script(const std::filesystem::path& path, const std::string& fallback) {
  return parse_proof_script(read_file(path), path.parent_path(), fallback);
}

std::vector<TDefinition> parse_t_script(std::string_view input) {
  std::string text(input);
  // Drop comments, keeping line structure.
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '#')
      while (i < text.size() && text[i] != '\n') text[i++] = ' ';

  // A definition runs from one `tdef` to the next; the term is the text
  // between `:=` and the final '.'.
  static const std::regex start(R"((^|\n)[ \t]*tdef\b)");
  std::vector<std::size_t> starts;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), start);
       it != std::sregex_iterator(); ++it)
    starts.push_back(static_cast<std::size_t>(it->position() + it->length()) - 4);

  auto line_of = [&](std::size_t pos) {
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
  };
  std::string leading = text.substr(0, starts.empty() ? text.size() : starts.front());
  if (leading.find_first_not_of(" \t\r\n") != std::string::npos)
    throw ParseError("expected 'tdef'", line_of(leading.find_first_not_of(" \t\r\n")), 1);

  static const std::regex def(R"(^tdef\s+([A-Za-z_][A-Za-z0-9_']*)\s*:([\s\S]*?):=([\s\S]*)\.\s*$)");
  std::map<std::string, TTerm> env;
  std::vector<TDefinition> out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    std::size_t end = i + 1 < starts.size() ? starts[i + 1] : text.size();
    std::string chunk = text.substr(starts[i], end - starts[i]);
    int line = line_of(starts[i]);
    std::smatch m;
    if (!std::regex_match(chunk, m, def))
      throw ParseError("malformed definition, expected 'tdef name : type := term.'", line, 1);
    TDefinition d;
    d.name = m[1].str();
    d.line = line;
    try {
      d.declared = parse_ttype(m[2].str());
      d.term = parse_tterm(m[3].str(), env);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()) + " in definition of " + d.name, line, 1);
    }
    TType actual;
    try {
      actual = type_of(d.term);
    } catch (const TranslationError& e) {
      throw SortError("definition " + d.name + ": " + e.what());
    }
    if (!type_eq(actual, d.declared))
      throw SortError("definition " + d.name + " has type " + to_string(actual) +
                      ", declared " + to_string(d.declared));
    if (env.count(d.name)) throw ParseError("duplicate definition " + d.name, line, 1);
    env[d.name] = d.term;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace modarith
