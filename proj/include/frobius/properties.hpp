#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "frobius/brauer.hpp"
#include "frobius/normalizer.hpp"
#include "frobius/onecob.hpp"
#include "frobius/parse.hpp"
#include "frobius/random.hpp"
#include "frobius/skeleton.hpp"
#include "frobius/tqft.hpp"

namespace frobius {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return failures == 0; }
};

/// The two-dimensional algebra with coordinatewise product and unit (1,1);
/// commutative and cocommutative.
inline AlgebraData diagonalAlgebra() {
  AlgebraData a;
  a.dim = 2;
  a.mul = RationalMatrix(2, 4, {1, 0, 0, 0, 0, 0, 0, 1});
  a.unit = RationalMatrix(2, 1, {1, 1});
  a.comul = RationalMatrix(4, 2, {1, 0, 0, 0, 0, 0, 0, 1});
  a.counit = RationalMatrix(1, 2, {1, 1});
  return a;
}

/// The matrix algebra M_p carried by the zero-sphere: the images of its
/// four structure diagrams, dimension p^2.
inline AlgebraData matrixAlgebra(std::uint32_t p) {
  AlgebraData a;
  a.dim = static_cast<std::size_t>(p) * p;
  a.mul = toRational(brauerB(s0::mu(), p));
  a.unit = toRational(brauerB(s0::eta(), p));
  a.comul = toRational(brauerB(s0::delta(), p));
  a.counit = toRational(brauerB(s0::eps(), p));
  return a;
}

namespace detail {

inline PropertyOutcome runCases(std::string name, std::size_t cases,
                                const std::function<std::optional<std::string>(std::size_t)>& body) {
  PropertyOutcome out{std::move(name), cases, 0, std::nullopt};
  for (std::size_t i = 0; i < cases; ++i) {
    std::optional<std::string> failure;
    try {
      failure = body(i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      if (out.failures++ == 0) out.counterexample = "case " + std::to_string(i) + ": " + *failure;
    }
  }
  return out;
}

}  // namespace detail

/// Every property suite with its default case count, driven by one seed.
inline std::vector<PropertyOutcome> runPropertySuites(std::uint64_t seed, std::size_t scale = 1) {
  std::vector<PropertyOutcome> results;
  std::mt19937_64 rng(seed);

  {
    TermGenerator gen(seed);
    results.push_back(detail::runCases("normalizer agrees with skeleton", 1000 * scale, [&](std::size_t) {
      const Term t = gen.next();
      if (normalize(t) == normalizeSemantic(t)) return std::optional<std::string>{};
      return std::optional<std::string>{print(t)};
    }));
  }
  {
    TermGenerator gen(seed + 1);
    results.push_back(detail::runCases("normal form is idempotent", 500 * scale, [&](std::size_t) {
      const NormalForm nf = normalize(gen.next());
      if (normalize(expandToTerm(nf)) == nf && normalFormViolations(nf).empty()) return std::optional<std::string>{};
      return std::optional<std::string>{print(expandToTerm(nf))};
    }));
  }
  {
    TermGenerator gen(seed + 2);
    results.push_back(detail::runCases("equality survives rewrites", 500 * scale, [&](std::size_t) {
      const Term t = gen.next();
      const Term u = perturb(t, gen.engine());
      if (equal(t, u)) return std::optional<std::string>{};
      return std::optional<std::string>{print(t) + "  vs  " + print(u)};
    }));
  }
  {
    TermGenerator gen(seed + 3);
    results.push_back(detail::runCases("Euler characteristic is additive", 1000 * scale, [&](std::size_t) {
      const Term f = gen.next();
      const auto ty = typecheck(f);
      const Term g = gen.next(static_cast<std::uint32_t>(ty.target), 12);
      const Term h = gen.next();
      const auto sf = cobSkeleton(f), sg = cobSkeleton(g), sh = cobSkeleton(h);
      const bool ok = eulerCharacteristic(composeSkeleton(sg, sf)) == eulerCharacteristic(sg) + eulerCharacteristic(sf) &&
                      eulerCharacteristic(tensorSkeleton(sf, sh)) == eulerCharacteristic(sf) + eulerCharacteristic(sh);
      if (ok) return std::optional<std::string>{};
      return std::optional<std::string>{print(f) + " ; " + print(g) + " ; " + print(h)};
    }));
  }
  for (std::uint32_t p : {2u, 3u}) {
    results.push_back(detail::runCases("Brauer functor laws, p=" + std::to_string(p), 100 * scale, [&](std::size_t) {
      auto [g, f] = randomComposable(rng, 4);
      const OneCobDiagram h = randomDiagramBeside(rng, f);
      const auto bf = brauerB(f, p), bg = brauerB(g, p);
      if (brauerB(composeDiagram(g, f), p) != matMul(bg, bf)) {
        return std::optional<std::string>{"composition: " + printDiagram(g) + " after " + printDiagram(f)};
      }
      if (brauerB(tensorDiagram(f, h), p) != kron(bf, brauerB(h, p))) {
        return std::optional<std::string>{"tensor: " + printDiagram(f) + " beside " + printDiagram(h)};
      }
      const Signs s1 = randomSigns(rng, 2), s2 = randomSigns(rng, 1);
      const std::size_t n1 = static_cast<std::size_t>(checkedPow(p, s1.size(), 1u << 20));
      const std::size_t n2 = static_cast<std::size_t>(checkedPow(p, s2.size(), 1u << 20));
      if (brauerB(symmetryDiagram(s1, s2), p) != symMatrix<BigInt>(n1, n2)) {
        return std::optional<std::string>{"symmetry: " + signsToString(s1) + " , " + signsToString(s2)};
      }
      return std::optional<std::string>{};
    }));
  }
  {
    TermGenerator gen(seed + 4, {.maxNodes = 25, .maxWires = 3});
    const Evaluator diag(diagonalAlgebra());
    results.push_back(detail::runCases("TQFT evaluation agrees with normal form", 200 * scale, [&](std::size_t) {
      const Term t = gen.next();
      if (diag.normal(normalize(t)) == diag.matrix(t)) return std::optional<std::string>{};
      return std::optional<std::string>{print(t)};
    }));
  }
  return results;
}

}  // namespace frobius
