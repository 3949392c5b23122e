// Formula ASTs over and/or/not, the constants, and the two modal
// operators, hash-consed in an arena so saturation can work on dense
// integer ids. Grammar: prefix ~ box dia bind tightest, then &, then |,
// both left-associative; tokens T F and identifiers.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fundlog/core.hpp"

namespace fundlog {

enum class FKind : std::uint8_t { Bot, Top, Var, Neg, And, Or, Box, Dia };

using FormulaId = int;

class FormulaArena {
public:
  FormulaArena() {
    bot_ = intern({FKind::Bot, -1, -1, -1});
    top_ = intern({FKind::Top, -1, -1, -1});
  }

  FormulaId bot() const { return bot_; }
  FormulaId top() const { return top_; }
  FormulaId var(const std::string& name) {
    auto it = letter_ids_.find(name);
    int lid;
    if (it == letter_ids_.end()) {
      lid = static_cast<int>(letter_names_.size());
      letter_names_.push_back(name);
      letter_ids_.emplace(name, lid);
    } else {
      lid = it->second;
    }
    return intern({FKind::Var, lid, -1, -1});
  }
  FormulaId neg(FormulaId a) { return intern({FKind::Neg, -1, a, -1}); }
  FormulaId conj(FormulaId a, FormulaId b) { return intern({FKind::And, -1, a, b}); }
  FormulaId disj(FormulaId a, FormulaId b) { return intern({FKind::Or, -1, a, b}); }
  FormulaId box(FormulaId a) { return intern({FKind::Box, -1, a, -1}); }
  FormulaId dia(FormulaId a) { return intern({FKind::Dia, -1, a, -1}); }

  FKind kind(FormulaId f) const { return nodes_[f].kind; }
  int letter(FormulaId f) const { return nodes_[f].letter; }
  FormulaId left(FormulaId f) const { return nodes_[f].a; }
  FormulaId right(FormulaId f) const { return nodes_[f].b; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const std::string& letter_name(int lid) const { return letter_names_[lid]; }
  int letter_count() const { return static_cast<int>(letter_names_.size()); }

  bool has_modal(FormulaId f) const {
    switch (kind(f)) {
      case FKind::Box:
      case FKind::Dia: return true;
      case FKind::Neg: return has_modal(left(f));
      case FKind::And:
      case FKind::Or: return has_modal(left(f)) || has_modal(right(f));
      default: return false;
    }
  }

  // letter ids occurring in f, ascending
  std::vector<int> letters_of(FormulaId f) const {
    std::vector<int> out;
    collect_letters(f, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<FormulaId> subformulas(FormulaId f) const {
    std::vector<FormulaId> out;
    collect_sub(f, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string to_string(FormulaId f) const { return print(f, 0); }

  FormulaId parse(const std::string& text) {
    Parser p{*this, text, 0};
    FormulaId f = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "end of input");
    return f;
  }

  // "LHS |- RHS"
  std::pair<FormulaId, FormulaId> parse_sequent(const std::string& text) {
    auto k = text.find("|-");
    if (k == std::string::npos) throw ParseError(text.size(), "\"|-\"");
    FormulaId lhs = parse(text.substr(0, k));
    Parser p{*this, text, k + 2};
    FormulaId rhs = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError(p.pos, "end of input");
    return {lhs, rhs};
  }

private:
  struct Node {
    FKind kind;
    int letter;
    FormulaId a, b;
  };

  FormulaId intern(Node n) {
    auto key = std::tuple<int, int, int, int>(static_cast<int>(n.kind), n.letter, n.a, n.b);
    auto it = intern_.find(key);
    if (it != intern_.end()) return it->second;
    FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(n);
    intern_.emplace(key, id);
    return id;
  }

  void collect_letters(FormulaId f, std::vector<int>& out) const {
    switch (kind(f)) {
      case FKind::Var: out.push_back(letter(f)); break;
      case FKind::Neg:
      case FKind::Box:
      case FKind::Dia: collect_letters(left(f), out); break;
      case FKind::And:
      case FKind::Or:
        collect_letters(left(f), out);
        collect_letters(right(f), out);
        break;
      default: break;
    }
  }

  void collect_sub(FormulaId f, std::vector<FormulaId>& out) const {
    out.push_back(f);
    switch (kind(f)) {
      case FKind::Neg:
      case FKind::Box:
      case FKind::Dia: collect_sub(left(f), out); break;
      case FKind::And:
      case FKind::Or:
        collect_sub(left(f), out);
        collect_sub(right(f), out);
        break;
      default: break;
    }
  }

  // precedence levels: 0 = or, 1 = and, 2 = prefix
  std::string print(FormulaId f, int level) const {
    auto wrap = [&](const std::string& s, int mine) {
      return (mine < level) ? "(" + s + ")" : s;
    };
    switch (kind(f)) {
      case FKind::Bot: return "F";
      case FKind::Top: return "T";
      case FKind::Var: return letter_names_[letter(f)];
      case FKind::Neg: return "~" + print(left(f), 2);
      case FKind::Box: return "box " + print(left(f), 2);
      case FKind::Dia: return "dia " + print(left(f), 2);
      case FKind::And:
        return wrap(print(left(f), 1) + " & " + print(right(f), 2), 1);
      case FKind::Or:
        return wrap(print(left(f), 0) + " | " + print(right(f), 1), 0);
    }
    return "?";
  }

  struct Parser {
    FormulaArena& arena;
    const std::string& text;
    std::size_t pos;

    void skip_ws() {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' ||
                                   text[pos] == '\n' || text[pos] == '\r'))
        ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    static bool ident_char(char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
             (c >= '0' && c <= '9') || c == '_';
    }
    std::string ident() {
      skip_ws();
      std::size_t start = pos;
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      return text.substr(start, pos - start);
    }

    FormulaId parse_or() {
      FormulaId f = parse_and();
      while (eat('|')) f = arena.disj(f, parse_and());
      return f;
    }
    FormulaId parse_and() {
      FormulaId f = parse_prefix();
      while (eat('&')) f = arena.conj(f, parse_prefix());
      return f;
    }
    FormulaId parse_prefix() {
      skip_ws();
      if (eat('~')) return arena.neg(parse_prefix());
      if (eat('(')) {
        FormulaId f = parse_or();
        if (!eat(')')) throw ParseError(pos, "\")\"");
        return f;
      }
      std::size_t at = pos;
      std::string word = ident();
      if (word.empty()) throw ParseError(at, "formula");
      if (word == "T") return arena.top();
      if (word == "F") return arena.bot();
      if (word == "box") return arena.box(parse_prefix());
      if (word == "dia") return arena.dia(parse_prefix());
      return arena.var(word);
    }
  };

  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int, int>, FormulaId> intern_;
  std::vector<std::string> letter_names_;
  std::map<std::string, int> letter_ids_;
  FormulaId bot_ = 0, top_ = 1;
};

struct Sequent {
  FormulaId lhs;
  FormulaId rhs;
};

} // namespace fundlog
