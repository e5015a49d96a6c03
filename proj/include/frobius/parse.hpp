#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "frobius/error.hpp"
#include "frobius/term.hpp"

namespace frobius {

namespace detail {

inline constexpr std::size_t kMaxParenDepth = 10000;

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parseAll() {
    Term t = parseComposite(0);
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  // term := tensorExpr ("." tensorExpr)*
  Term parseComposite(std::size_t depth) {
    Term acc = parseTensor(depth);
    while (peekChar('.')) {
      ++pos_;
      acc = Term::comp(std::move(acc), parseTensor(depth));
    }
    return acc;
  }

  // tensorExpr := primary ("x" primary)*
  Term parseTensor(std::size_t depth) {
    Term acc = parsePrimary(depth);
    while (peekChar('x')) {
      ++pos_;
      acc = Term::tensor(std::move(acc), parsePrimary(depth));
    }
    return acc;
  }

  Term parsePrimary(std::size_t depth) {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a term");
    if (text_[pos_] == '(') {
      if (depth >= kMaxParenDepth) fail("parentheses nested too deeply");
      ++pos_;
      Term inner = parseComposite(depth + 1);
      expect(')');
      return inner;
    }
    // Generators are matched as prefixes so that spacing never matters:
    // no generator name is a prefix of another, and none starts with 'x'.
    const std::size_t start = pos_;
    if (acceptKeyword("mu")) return Term::mu();
    if (acceptKeyword("eta")) return Term::eta();
    if (acceptKeyword("delta")) return Term::delta();
    if (acceptKeyword("eps")) return Term::eps();
    if (acceptKeyword("id")) return Term::id(readNat("id"));
    if (acceptKeyword("tau")) {
      expect('(');
      std::uint32_t n = readNat("tau");
      expect(',');
      std::uint32_t m = readNat("tau");
      expect(')');
      return Term::tau(n, m);
    }
    std::size_t end = start;
    while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == start) fail("expected a term");
    fail("unknown generator '" + std::string(text_.substr(start, end - start)) + "'");
  }

  bool acceptKeyword(std::string_view kw) {
    if (text_.substr(pos_, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  std::uint32_t readNat(std::string_view what) {
    skipSpace();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > kMaxArity) {
        throw ParseError(Errc::Arity, start,
                         std::string(what) + " argument exceeds " + std::to_string(kMaxArity));
      }
      ++pos_;
    }
    if (pos_ == start) {
      throw ParseError(Errc::Arity, start, std::string(what) + " expects a natural number");
    }
    return static_cast<std::uint32_t>(value);
  }

  bool peekChar(char c) {
    skipSpace();
    return pos_ < text_.size() && text_[pos_] == c;
  }


  void expect(char c) {
    if (!peekChar(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(Errc::Syntax, pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII term syntax: mu, eta, delta, eps, id<n>, tau(<n>,<m>),
/// infix "x" (tensor) binding tighter than infix "." (composition). Both
/// operators associate to the left.
inline Term parse(std::string_view text) {
  Term t = detail::TermParser(text).parseAll();
  if (t.size() > kMaxTermNodes) {
    throw ParseError(Errc::SizeLimit, 0, "term exceeds " + std::to_string(kMaxTermNodes) + " nodes");
  }
  return t;
}

enum class PrintMode { Minimal, FullParens };

inline std::string generatorName(const Term& g) {
  switch (g.kind()) {
    case Kind::Id: return "id" + std::to_string(g.n());
    case Kind::Tau: return "tau(" + std::to_string(g.n()) + "," + std::to_string(g.m()) + ")";
    case Kind::Mu: return "mu";
    case Kind::Eta: return "eta";
    case Kind::Delta: return "delta";
    case Kind::Eps: return "eps";
    default: return "?";
  }
}

/// Minimal mode emits only the parentheses that parse() needs to rebuild the
/// same tree; FullParens wraps every compound operand.
inline std::string print(const Term& t, PrintMode mode = PrintMode::Minimal) {
  const bool full = mode == PrintMode::FullParens;
  struct Item {
    const Term* term;  // null for literal text
    const char* text;
    bool parens;
  };
  std::string out;
  std::vector<Item> stack{{&t, nullptr, false}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (!it.term) {
      out += it.text;
      continue;
    }
    const Term& u = *it.term;
    if (isGenerator(u.kind())) {
      out += generatorName(u);
      continue;
    }
    if (it.parens) {
      out += '(';
      stack.push_back({nullptr, ")", false});
    }
    const Term& l = u.lhs();
    const Term& r = u.rhs();
    bool lCompound = !isGenerator(l.kind());
    bool rCompound = !isGenerator(r.kind());
    bool lParens, rParens;
    const char* op;
    if (u.kind() == Kind::Comp) {
      op = " . ";
      lParens = full && lCompound;
      rParens = r.kind() == Kind::Comp || (full && rCompound);
    } else {
      op = " x ";
      lParens = l.kind() == Kind::Comp || (full && lCompound);
      rParens = rCompound;
    }
    stack.push_back({&r, nullptr, rParens});
    stack.push_back({nullptr, op, false});
    stack.push_back({&l, nullptr, lParens});
  }
  return out;
}

}  // namespace frobius
