#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frobius/perm.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// A connected block E(p, m, n): n inputs, genus m, p outputs.
struct EBlock {
  std::uint32_t outs = 0;
  std::uint32_t genus = 0;
  std::uint32_t ins = 0;

  friend bool operator==(const EBlock&, const EBlock&) = default;
  friend auto operator<=>(const EBlock&, const EBlock&) = default;
};

/// tail . (block_1 x ... x block_k) . head, with head and tail permutations.
struct Shaped {
  Perm tail;
  std::vector<EBlock> center;
  Perm head;

  friend bool operator==(const Shaped&, const Shaped&) = default;
};

/// Either a bare permutation or a head/center/tail decomposition.
struct SpecialTerm {
  std::variant<Perm, Shaped> form;

  bool isPureTau() const { return std::holds_alternative<Perm>(form); }
  const Perm& pureTau() const { return std::get<Perm>(form); }
  const Shaped& shaped() const { return std::get<Shaped>(form); }

  friend bool operator==(const SpecialTerm&, const SpecialTerm&) = default;
};

struct InputOnlyBlock {
  std::uint32_t genus = 0;
  std::uint32_t ins = 0;
  friend bool operator==(const InputOnlyBlock&, const InputOnlyBlock&) = default;
};

struct OutputOnlyBlock {
  std::uint32_t genus = 0;
  std::uint32_t outs = 0;
  friend bool operator==(const OutputOnlyBlock&, const OutputOnlyBlock&) = default;
};

/// The canonical representative of an arrow n -> m.
///
/// The center is, in this order: closed blocks E(0,g,0), input-only blocks
/// E(0,g,n), output-only blocks E(q,g,0), mixed blocks E(s,g,u). head maps
/// source wires to center inputs, tail maps center outputs to target wires.
struct NormalForm {
  std::vector<std::uint32_t> closed;
  std::vector<InputOnlyBlock> inputOnly;
  std::vector<OutputOnlyBlock> outputOnly;
  std::vector<EBlock> mixed;
  Perm head;
  Perm tail;

  std::size_t source() const { return head.size(); }
  std::size_t target() const { return tail.size(); }

  /// Blocks in center order.
  std::vector<EBlock> center() const {
    std::vector<EBlock> c;
    for (auto g : closed) c.push_back({0, g, 0});
    for (auto b : inputOnly) c.push_back({0, b.genus, b.ins});
    for (auto b : outputOnly) c.push_back({b.outs, b.genus, 0});
    for (auto b : mixed) c.push_back(b);
    return c;
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Lists every way `nf` breaks the normal-form ordering rules; empty when valid.
inline std::vector<std::string> normalFormViolations(const NormalForm& nf) {
  std::vector<std::string> v;
  std::size_t ins = 0, outs = 0;
  for (auto b : nf.inputOnly) {
    if (b.ins == 0) v.push_back("input-only block without inputs");
    ins += b.ins;
  }
  for (auto b : nf.outputOnly) {
    if (b.outs == 0) v.push_back("output-only block without outputs");
    outs += b.outs;
  }
  for (auto b : nf.mixed) {
    if (b.ins == 0 || b.outs == 0) v.push_back("mixed block missing inputs or outputs");
    ins += b.ins;
    outs += b.outs;
  }
  if (ins != nf.head.size()) v.push_back("head size differs from total block inputs");
  if (outs != nf.tail.size()) v.push_back("tail size differs from total block outputs");
  if (!v.empty()) return v;

  for (std::size_t i = 1; i < nf.closed.size(); ++i) {
    if (nf.closed[i - 1] > nf.closed[i]) v.push_back("closed genera not weakly increasing");
  }
  const Perm chiInv = nf.head.inverse();
  const Perm& pi = nf.tail;

  auto increasingRun = [&](const Perm& p, std::size_t start, std::size_t len, const char* what) {
    for (std::size_t k = 1; k < len; ++k) {
      if (p(start + k - 1) >= p(start + k)) {
        v.push_back(std::string(what) + " not increasing inside block starting at " +
                    std::to_string(start));
        return;
      }
    }
  };

  // input-only blocks: beta offsets
  std::size_t beta = 0;
  std::optional<std::uint32_t> prev;
  for (auto b : nf.inputOnly) {
    if (prev && *prev >= chiInv(beta)) v.push_back("input-only blocks out of order");
    prev = chiInv(beta);
    increasingRun(chiInv, beta, b.ins, "head inverse");
    beta += b.ins;
  }
  // output-only blocks: gamma offsets
  std::size_t gamma = 0;
  prev.reset();
  for (auto b : nf.outputOnly) {
    if (prev && *prev >= pi(gamma)) v.push_back("output-only blocks out of order");
    prev = pi(gamma);
    increasingRun(pi, gamma, b.outs, "tail");
    gamma += b.outs;
  }
  // mixed blocks: delta offsets continue after the one-sided blocks
  std::size_t deltaIn = beta, deltaOut = gamma;
  prev.reset();
  for (auto b : nf.mixed) {
    if (prev && *prev >= pi(deltaOut)) v.push_back("mixed blocks out of order");
    prev = pi(deltaOut);
    increasingRun(chiInv, deltaIn, b.ins, "head inverse");
    increasingRun(pi, deltaOut, b.outs, "tail");
    deltaIn += b.ins;
    deltaOut += b.outs;
  }
  return v;
}

namespace detail {

inline Term rightNested(const std::vector<Term>& factors, std::uint32_t wires) {
  if (factors.empty()) return Term::id(wires);
  Term acc = factors.back();
  for (std::size_t k = factors.size() - 1; k-- > 0;) acc = Term::comp(factors[k], std::move(acc));
  return acc;
}

inline Term leftTensor(const std::vector<Term>& parts) {
  if (parts.empty()) return Term::id(0);
  Term acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) acc = Term::tensor(std::move(acc), parts[k]);
  return acc;
}

inline Term withRightId(Term t, std::uint32_t k) {
  return k == 0 ? t : Term::tensor(std::move(t), Term::id(k));
}

// Factors of Lambda_{n}, outermost first: (delta x id_{n-1}) . ... . (delta x id_1) . delta.
inline void appendLambda(std::vector<Term>& out, int n) {
  if (n == -1) {
    out.push_back(Term::eps());
    return;
  }
  for (int k = n - 1; k >= 0; --k) out.push_back(withRightId(Term::delta(), static_cast<std::uint32_t>(k)));
}

inline void appendHandles(std::vector<Term>& out, std::uint32_t m) {
  for (std::uint32_t k = 0; k < m; ++k) {
    out.push_back(Term::mu());
    out.push_back(Term::delta());
  }
}

// Factors of V_{n}, outermost first: mu . (mu x id_1) . ... . (mu x id_{n-1}).
inline void appendV(std::vector<Term>& out, int n) {
  if (n == -1) {
    out.push_back(Term::eta());
    return;
  }
  for (int k = 0; k < n; ++k) out.push_back(withRightId(Term::mu(), static_cast<std::uint32_t>(k)));
}

}  // namespace detail

/// Lambda_{p-1} . H_m . V_{n-1} as a right-nested chain of its factors;
/// identity factors are dropped, so E(1,0,1) expands to id1.
inline Term expandToTerm(const EBlock& b) {
  std::vector<Term> factors;
  detail::appendLambda(factors, static_cast<int>(b.outs) - 1);
  detail::appendHandles(factors, b.genus);
  detail::appendV(factors, static_cast<int>(b.ins) - 1);
  return detail::rightNested(factors, 1);
}

inline Term expandCenter(const std::vector<EBlock>& center) {
  std::vector<Term> parts;
  for (const auto& b : center) parts.push_back(expandToTerm(b));
  return detail::leftTensor(parts);
}

namespace detail {

inline Term sandwich(const Perm& tail, Term center, const Perm& head) {
  std::vector<Term> factors;
  if (!tail.isIdentity()) factors.push_back(tauTermOfPerm(tail));
  factors.push_back(std::move(center));
  if (!head.isIdentity()) factors.push_back(tauTermOfPerm(head));
  return rightNested(factors, 0);
}

}  // namespace detail

inline Term expandToTerm(const SpecialTerm& s) {
  if (s.isPureTau()) return tauTermOfPerm(s.pureTau());
  const Shaped& sh = s.shaped();
  return detail::sandwich(sh.tail, expandCenter(sh.center), sh.head);
}

inline Term expandToTerm(const NormalForm& nf) {
  return detail::sandwich(nf.tail, expandCenter(nf.center()), nf.head);
}

}  // namespace frobius
