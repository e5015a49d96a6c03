#pragma once

#include <algorithm>
#include <cstdint>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "frobius/onecob.hpp"
#include "frobius/term.hpp"

namespace frobius {

inline bool coinFlip(std::mt19937_64& rng) { return std::bernoulli_distribution(0.5)(rng); }

struct RandomTermConfig {
  std::size_t maxNodes = 25;
  std::uint32_t maxWires = 4;  // bound on every intermediate arity
};

/// Seeded generator of well-typed terms. Every subterm has source and target
/// at most maxWires, and the whole term has at most maxNodes nodes.
class TermGenerator {
 public:
  TermGenerator(std::uint64_t seed, RandomTermConfig config = {}) : rng_(seed), cfg_(config) {}

  Term next() {
    const auto n = pick(0, cfg_.maxWires);
    const auto budget = pick(1, static_cast<std::uint32_t>(cfg_.maxNodes));
    return withSource(n, budget).term;
  }

  Term next(std::uint32_t source, std::size_t budget) { return withSource(source, budget).term; }

  std::mt19937_64& engine() { return rng_; }

 private:
  struct Typed {
    Term term;
    std::uint32_t target;
  };

  std::uint32_t pick(std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng_);
  }

  Typed leaf(std::uint32_t n) {
    std::vector<Typed> options{{Term::id(n), n}};
    for (std::uint32_t a = 0; a <= n; ++a) options.push_back({Term::tau(a, n - a), n});
    if (n == 2) options.push_back({Term::mu(), 1});
    if (n == 0) options.push_back({Term::eta(), 1});
    if (n == 1) {
      options.push_back({Term::eps(), 0});
      if (cfg_.maxWires >= 2) options.push_back({Term::delta(), 2});
    }
    // Weight the Frobenius generators up so that terms are not mostly permutations.
    const std::size_t structural = options.size() - (n + 2);
    if (structural > 0 && pick(0, 1) == 0) return options[n + 2 + pick(0, static_cast<std::uint32_t>(structural - 1))];
    return options[pick(0, static_cast<std::uint32_t>(options.size() - 1))];
  }

  Typed withSource(std::uint32_t n, std::size_t budget) {
    if (budget < 3 || pick(0, 3) == 0) return leaf(n);
    const auto inner = static_cast<std::uint32_t>(budget - 1);
    const auto b1 = pick(1, inner - 1);
    const auto b2 = pick(1, inner - b1);
    for (int attempt = 0; attempt < 4; ++attempt) {
      if (pick(0, 1) == 0) {
        Typed f = withSource(n, b1);
        Typed g = withSource(f.target, b2);
        return {Term::comp(std::move(g.term), std::move(f.term)), g.target};
      }
      const auto n1 = pick(0, n);
      Typed l = withSource(n1, b1);
      Typed r = withSource(n - n1, b2);
      if (l.target + r.target <= cfg_.maxWires) {
        return {Term::tensor(std::move(l.term), std::move(r.term)), l.target + r.target};
      }
    }
    return leaf(n);
  }

  std::mt19937_64 rng_;
  RandomTermConfig cfg_;
};

/// Rebuilds t with a few randomly placed rewrites that preserve equality:
/// identity padding, unit and counit insertions, commutativity twists and
/// naturality of the symmetry.
inline Term perturb(const Term& t, std::mt19937_64& rng, double rate = 0.15) {
  std::bernoulli_distribution fire(rate);
  std::uniform_int_distribution<int> choice(0, 4);
  struct Typed {
    Term term;
    TermType type;
  };
  auto rewrite = [&](Typed x) -> Typed {
    if (!fire(rng)) return x;
    const auto src = static_cast<std::uint32_t>(x.type.source);
    const auto tgt = static_cast<std::uint32_t>(x.type.target);
    const Term& s = x.term;
    switch (choice(rng)) {
      case 0: return {Term::comp(Term::id(tgt), s), x.type};
      case 1: return {Term::comp(s, Term::id(src)), x.type};
      case 2: return {coinFlip(rng) ? Term::tensor(s, Term::id(0)) : Term::tensor(Term::id(0), s), x.type};
      case 3:
        if (s.kind() == Kind::Mu) return {Term::comp(Term::mu(), Term::tau(1, 1)), x.type};
        if (s.kind() == Kind::Delta) return {Term::comp(Term::tau(1, 1), Term::delta()), x.type};
        if (s.kind() == Kind::Id && s.n() == 1) {
          return {coinFlip(rng) ? Term::comp(Term::mu(), Term::tensor(Term::eta(), Term::id(1)))
                             : Term::comp(Term::tensor(Term::id(1), Term::eps()), Term::delta()),
                  x.type};
        }
        return x;
      default: return x;
    }
  };
  return foldTerm<Typed>(
             t, [&](const Term& g) { return rewrite({g, generatorType(g)}); },
             [&](const Term&, Typed g, Typed f) {
               return rewrite({Term::comp(g.term, f.term), {f.type.source, g.type.target}});
             },
             [&](const Term&, Typed l, Typed r) {
               Typed plain{Term::tensor(l.term, r.term),
                           {l.type.source + r.type.source, l.type.target + r.type.target}};
               if (fire(rng)) {
                 // naturality: l x r = tau . (r x l) . tau
                 const auto n1 = static_cast<std::uint32_t>(l.type.source), n2 = static_cast<std::uint32_t>(r.type.source);
                 const auto m1 = static_cast<std::uint32_t>(l.type.target), m2 = static_cast<std::uint32_t>(r.type.target);
                 plain.term = Term::comp(Term::tau(m2, m1), Term::comp(Term::tensor(r.term, l.term), Term::tau(n1, n2)));
                 return plain;
               }
               return rewrite(std::move(plain));
             })
      .term;
}

inline Signs randomSigns(std::mt19937_64& rng, std::size_t len) {
  Signs s(len);
  for (auto& x : s) x = coinFlip(rng) ? Sign::Plus : Sign::Minus;
  return s;
}

/// A uniformly random admissible matching between the given boundaries, or
/// nothing when the boundary is unbalanced. An input point behaves like its
/// sign and an output point like the opposite sign; pairs join opposite
/// behaviours.
inline std::optional<OneCobDiagram> randomDiagram(std::mt19937_64& rng, const Signs& in, const Signs& out,
                                                  std::uint64_t maxCircles = 2) {
  std::vector<Endpoint> pos, neg;
  for (std::uint32_t i = 0; i < in.size(); ++i) (in[i] == Sign::Plus ? pos : neg).push_back({i, 0});
  for (std::uint32_t i = 0; i < out.size(); ++i) (out[i] == Sign::Plus ? neg : pos).push_back({i, 1});
  if (pos.size() != neg.size()) return std::nullopt;
  std::shuffle(neg.begin(), neg.end(), rng);
  std::vector<EndpointPair> pairs;
  for (std::size_t k = 0; k < pos.size(); ++k) pairs.push_back({pos[k], neg[k]});
  const auto circles = std::uniform_int_distribution<std::uint64_t>(0, maxCircles)(rng);
  return makeDiagram(in, out, pairs, circles);
}

/// A random diagram with the given input boundary, at most maxPairs pairs and
/// at most maxOut output points. Output signs are drawn so that the boundary
/// balances: the surplus of output pluses must equal that of input pluses.
inline OneCobDiagram randomDiagramFrom(std::mt19937_64& rng, const Signs& in, std::size_t maxPairs = 4,
                                       std::size_t maxOut = SIZE_MAX) {
  const std::size_t budget = 2 * maxPairs;
  const std::size_t room = std::min(budget > in.size() ? budget - in.size() : 0, maxOut);
  const auto plus = static_cast<std::ptrdiff_t>(std::count(in.begin(), in.end(), Sign::Plus));
  const std::ptrdiff_t surplus = 2 * plus - static_cast<std::ptrdiff_t>(in.size());
  std::vector<std::size_t> lengths;
  for (std::size_t len = static_cast<std::size_t>(std::abs(surplus)); len <= room; len += 2) lengths.push_back(len);
  if (lengths.empty()) {
    throw Error(Errc::BadInput, "no admissible diagram found for input boundary " + signsToString(in));
  }
  const std::size_t len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
  const auto outPlus = static_cast<std::size_t>((static_cast<std::ptrdiff_t>(len) + surplus) / 2);
  Signs out(len, Sign::Minus);
  std::fill_n(out.begin(), outPlus, Sign::Plus);
  std::shuffle(out.begin(), out.end(), rng);
  return *randomDiagram(rng, in, out);
}

/// A random pair (g, f) with g . f defined. f, g and the composite each have
/// at most maxPairs pairs, which keeps every matrix involved small.
inline std::pair<OneCobDiagram, OneCobDiagram> randomComposable(std::mt19937_64& rng, std::size_t maxPairs = 4) {
  const std::size_t budget = 2 * maxPairs;
  for (;;) {
    const auto len = std::uniform_int_distribution<std::size_t>(0, budget)(rng);
    try {
      OneCobDiagram f = randomDiagramFrom(rng, randomSigns(rng, len), maxPairs);
      OneCobDiagram g = randomDiagramFrom(rng, f.outSigns(), maxPairs, budget - f.nIn());
      return {std::move(g), std::move(f)};
    } catch (const Error&) {
      continue;
    }
  }
}

/// A random diagram to place beside f, keeping f (x) h within maxPairs pairs.
inline OneCobDiagram randomDiagramBeside(std::mt19937_64& rng, const OneCobDiagram& f, std::size_t maxPairs = 4) {
  const std::size_t used = (f.nIn() + f.nOut()) / 2;
  const std::size_t spare = used < maxPairs ? maxPairs - used : 0;
  const auto len = std::uniform_int_distribution<std::size_t>(0, spare)(rng);
  return randomDiagramFrom(rng, randomSigns(rng, len), spare);
}

}  // namespace frobius
