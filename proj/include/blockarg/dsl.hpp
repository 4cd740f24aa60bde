#pragma once

// Compact text form for framework documents:
//
//   # comment
//   arg a_1 : atom "x1"
//   arg a_6 : block { args: a_1, a_2; supports: (a_1, a_2) }
//   root a_6
//
// Whitespace-insensitive; section order inside a block is free and attack or
// support sections may be omitted.

#include <cctype>
#include <string>
#include <vector>

#include "blockarg/errors.hpp"
#include "blockarg/model.hpp"

namespace blockarg {

namespace dsl_detail {

struct Cursor {
  const std::string& text;
  size_t i = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg);
  }

  bool eof() const { return i >= text.size(); }
  char peek() const { return text[i]; }

  void advance() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }

  void skip_ws() {
    while (!eof()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool try_punct(char c) {
    skip_ws();
    if (eof() || peek() != c) return false;
    advance();
    return true;
  }

  void expect_punct(char c) {
    if (!try_punct(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    if (eof()) fail("expected a name");
    auto head = [](char c) {
      return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(peek())) fail("expected a name");
    std::string s;
    while (!eof() && tail(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  std::string quoted() {
    skip_ws();
    if (eof() || peek() != '"') fail("expected a quoted id");
    advance();
    std::string s;
    while (!eof() && peek() != '"') {
      s += peek();
      advance();
    }
    if (eof()) fail("unterminated quoted id");
    advance();
    if (s.empty()) fail("empty quoted id");
    return s;
  }
};

}  // namespace dsl_detail

inline FrameworkDoc parse_dsl(const std::string& text) {
  dsl_detail::Cursor c{text};
  FrameworkDoc doc;
  bool have_root = false;
  while (true) {
    c.skip_ws();
    if (c.eof()) break;
    std::string kw = c.ident();
    if (kw == "root") {
      doc.root = c.ident();
      have_root = true;
      continue;
    }
    if (kw != "arg") c.fail("expected 'arg' or 'root', got '" + kw + "'");
    std::string name = c.ident();
    if (doc.definitions.count(name)) c.fail("'" + name + "' defined twice");
    c.expect_punct(':');
    std::string kind = c.ident();
    if (kind == "atom") {
      doc.definitions[name] = ContentAtom{c.quoted()};
    } else if (kind == "block") {
      c.expect_punct('{');
      BlockDoc blk;
      bool saw_args = false;
      while (!c.try_punct('}')) {
        std::string section = c.ident();
        c.expect_punct(':');
        if (section == "args") {
          if (saw_args) c.fail("duplicate args section");
          saw_args = true;
          do {
            blk.args.push_back(c.ident());
          } while (c.try_punct(','));
        } else if (section == "attacks" || section == "supports") {
          auto& edges = section == "attacks" ? blk.attacks : blk.supports;
          c.skip_ws();
          if (!c.eof() && c.peek() == '(') {
            do {
              c.expect_punct('(');
              std::string from = c.ident();
              c.expect_punct(',');
              std::string to = c.ident();
              c.expect_punct(')');
              edges.emplace_back(from, to);
            } while (c.try_punct(','));
          }
        } else {
          c.fail("unknown section '" + section + "'");
        }
        c.try_punct(';');
      }
      if (!saw_args) c.fail("block '" + name + "' has no args section");
      doc.definitions[name] = std::move(blk);
    } else {
      c.fail("expected 'atom' or 'block', got '" + kind + "'");
    }
  }
  if (!have_root) c.fail("missing root declaration");
  return doc;
}

}  // namespace blockarg
