#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "frobius/error.hpp"

namespace frobius {

/// Largest wire count accepted for id/tau arguments and for any type.
inline constexpr std::uint64_t kMaxArity = std::uint64_t{1} << 16;
/// Largest number of AST nodes a term may have.
inline constexpr std::size_t kMaxTermNodes = 100000;

enum class Kind : std::uint8_t { Id, Tau, Mu, Eta, Delta, Eps, Comp, Tensor };

inline bool isGenerator(Kind k) { return k != Kind::Comp && k != Kind::Tensor; }

/// A term of the free commutative Frobenius PROP.
///
/// Immutable and cheaply copyable; subterms are shared. Comp(g, f) is g . f,
/// i.e. f is applied first. All traversals are iterative, so deep chains
/// (up to kMaxTermNodes) do not exhaust the stack.
class Term {
 public:
  static Term id(std::uint32_t n) { return Term(Kind::Id, n, 0); }
  static Term tau(std::uint32_t n, std::uint32_t m) { return Term(Kind::Tau, n, m); }
  static Term mu() { return Term(Kind::Mu, 0, 0); }
  static Term eta() { return Term(Kind::Eta, 0, 0); }
  static Term delta() { return Term(Kind::Delta, 0, 0); }
  static Term eps() { return Term(Kind::Eps, 0, 0); }
  static Term comp(Term g, Term f) { return Term(Kind::Comp, std::move(g), std::move(f)); }
  static Term tensor(Term left, Term right) {
    return Term(Kind::Tensor, std::move(left), std::move(right));
  }

  Term();

  Kind kind() const;
  /// Argument of id, first argument of tau.
  std::uint32_t n() const;
  /// Second argument of tau.
  std::uint32_t m() const;
  /// g of Comp(g, f); left of Tensor.
  const Term& lhs() const;
  /// f of Comp(g, f); right of Tensor.
  const Term& rhs() const;
  std::size_t size() const;

  bool sameNode(const Term& o) const { return node_ == o.node_; }
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;

  explicit Term(std::nullptr_t) {}
  Term(Kind k, std::uint32_t a, std::uint32_t b);
  Term(Kind k, Term l, Term r);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::size_t size = 1;
  Term lhs;
  Term rhs;

  Node(Kind k, std::uint32_t a, std::uint32_t b) : kind(k), n(a), m(b), lhs(nullptr), rhs(nullptr) {}
  Node(Kind k, Term l, Term r)
      : kind(k), size(1 + l.size() + r.size()), lhs(std::move(l)), rhs(std::move(r)) {}
  ~Node();
};

inline Term::Term() : Term(Kind::Id, 0, 0) {}
inline Term::Term(Kind k, std::uint32_t a, std::uint32_t b)
    : node_(std::make_shared<const Node>(k, a, b)) {}
inline Term::Term(Kind k, Term l, Term r)
    : node_(std::make_shared<const Node>(k, std::move(l), std::move(r))) {}

inline Kind Term::kind() const { return node_->kind; }
inline std::uint32_t Term::n() const { return node_->n; }
inline std::uint32_t Term::m() const { return node_->m; }
inline const Term& Term::lhs() const { return node_->lhs; }
inline const Term& Term::rhs() const { return node_->rhs; }
inline std::size_t Term::size() const { return node_->size; }

// Tear subtrees down with an explicit stack instead of recursive destructors.
inline Term::Node::~Node() {
  std::vector<std::shared_ptr<const Node>> pending;
  if (lhs.node_) pending.push_back(std::move(lhs.node_));
  if (rhs.node_) pending.push_back(std::move(rhs.node_));
  while (!pending.empty()) {
    std::shared_ptr<const Node> p = std::move(pending.back());
    pending.pop_back();
    if (p.use_count() == 1) {
      auto& owned = const_cast<Node&>(*p);
      if (owned.lhs.node_) pending.push_back(std::move(owned.lhs.node_));
      if (owned.rhs.node_) pending.push_back(std::move(owned.rhs.node_));
    }
  }
}

inline bool operator==(const Term& a, const Term& b) {
  std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->sameNode(*y)) continue;
    if (x->kind() != y->kind() || x->size() != y->size()) return false;
    if (isGenerator(x->kind())) {
      if (x->n() != y->n() || x->m() != y->m()) return false;
      continue;
    }
    stack.emplace_back(&x->lhs(), &y->lhs());
    stack.emplace_back(&x->rhs(), &y->rhs());
  }
  return true;
}

/// Post-order fold. `leaf(t)` handles generators; `comp(t, g, f)` and
/// `tensor(t, left, right)` receive the folded children.
template <class R, class Leaf, class Comp, class Tensor>
R foldTerm(const Term& root, Leaf&& leaf, Comp&& comp, Tensor&& tensor) {
  struct Frame {
    const Term* t;
    bool expanded;
  };
  std::vector<Frame> stack{{&root, false}};
  std::vector<R> results;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const Term* t = fr.t;
    if (isGenerator(t->kind())) {
      stack.pop_back();
      results.push_back(leaf(*t));
      continue;
    }
    if (!fr.expanded) {
      fr.expanded = true;
      stack.push_back({&t->rhs(), false});
      stack.push_back({&t->lhs(), false});
      continue;
    }
    stack.pop_back();
    R right = std::move(results.back());
    results.pop_back();
    R left = std::move(results.back());
    results.pop_back();
    if (t->kind() == Kind::Comp) {
      results.push_back(comp(*t, std::move(left), std::move(right)));
    } else {
      results.push_back(tensor(*t, std::move(left), std::move(right)));
    }
  }
  return std::move(results.back());
}

struct TermType {
  std::uint64_t source = 0;
  std::uint64_t target = 0;

  friend bool operator==(const TermType&, const TermType&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TermType& t) {
  return os << t.source << " -> " << t.target;
}

inline TermType generatorType(const Term& t) {
  switch (t.kind()) {
    case Kind::Id: return {t.n(), t.n()};
    case Kind::Tau: return {std::uint64_t{t.n()} + t.m(), std::uint64_t{t.m()} + t.n()};
    case Kind::Mu: return {2, 1};
    case Kind::Eta: return {0, 1};
    case Kind::Delta: return {1, 2};
    case Kind::Eps: return {1, 0};
    default: break;
  }
  throw Error(Errc::BadInput, "not a generator");
}

/// Path from `root` to the node `target` (by identity), e.g. "root.f.left".
inline std::string subtermPath(const Term& root, const Term& target) {
  struct Frame {
    const Term* t;
    std::string path;
  };
  std::vector<Frame> stack{{&root, "root"}};
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.t->identity() == target.identity()) return fr.path;
    if (isGenerator(fr.t->kind())) continue;
    bool c = fr.t->kind() == Kind::Comp;
    stack.push_back({&fr.t->rhs(), fr.path + (c ? ".f" : ".right")});
    stack.push_back({&fr.t->lhs(), fr.path + (c ? ".g" : ".left")});
  }
  return "root";
}

/// The unique type n -> m of a term.
inline TermType typecheck(const Term& t) {
  if (t.size() > kMaxTermNodes) {
    throw Error(Errc::SizeLimit, "term has " + std::to_string(t.size()) + " nodes, limit is " +
                                     std::to_string(kMaxTermNodes));
  }
  auto guard = [](TermType ty) {
    if (ty.source > kMaxArity || ty.target > kMaxArity) {
      throw Error(Errc::SizeLimit, "arity exceeds " + std::to_string(kMaxArity));
    }
    return ty;
  };
  return foldTerm<TermType>(
      t, [&](const Term& g) { return guard(generatorType(g)); },
      [&](const Term& node, TermType g, TermType f) {
        if (f.target != g.source) {
          throw TypeMismatchError(g.source, f.target, subtermPath(t, node));
        }
        return TermType{f.source, g.target};
      },
      [&](const Term&, TermType l, TermType r) {
        return guard(TermType{l.source + r.source, l.target + r.target});
      });
}

/// True when no mu, eta, delta or eps occurs.
inline bool isTauTerm(const Term& t) {
  return foldTerm<bool>(
      t, [](const Term& g) { return g.kind() == Kind::Id || g.kind() == Kind::Tau; },
      [](const Term&, bool a, bool b) { return a && b; },
      [](const Term&, bool a, bool b) { return a && b; });
}

}  // namespace frobius
