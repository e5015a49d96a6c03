#pragma once

#include <string>
#include <vector>

#include "frobius/parse.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// One instance `lhs = rhs` of an axiom schema of the equational theory.
struct AxiomInstance {
  std::string schema;
  Term lhs;
  Term rhs;
};

/// Small well-typed terms with source and target at most 3, used to fill in
/// the term variables of the schemata.
inline std::vector<Term> sampleTerms() {
  static const char* const kSources[] = {
      "id0",        "id1",           "id2",        "id3",          "tau(1,1)",        "tau(1,2)",
      "tau(2,1)",   "mu",            "eta",        "delta",        "eps",             "mu x id1",
      "id1 x delta", "delta . mu",   "eps . eta",  "eta x eps",    "tau(1,1) . delta", "eps x eps",
  };
  std::vector<Term> out;
  for (const char* s : kSources) out.push_back(parse(s));
  return out;
}

namespace detail {

inline std::vector<Term> smallSample() {
  return {parse("id1"), parse("mu"), parse("eta"), parse("delta"), parse("eps"), parse("tau(1,1)")};
}

}  // namespace detail

/// Instances of all thirteen schemata. Indices range over 0..maxArity and
/// term variables over sampleTerms(); multi-variable schemata use a smaller
/// sample to keep the count moderate.
inline std::vector<AxiomInstance> axiomInstances(std::uint32_t maxArity = 3) {
  std::vector<AxiomInstance> out;
  auto add = [&](const char* schema, Term l, Term r) { out.push_back({schema, std::move(l), std::move(r)}); };
  const auto pool = sampleTerms();
  const auto small = detail::smallSample();
  auto typeOf = [](const Term& t) { return typecheck(t); };

  // str
  for (const auto& f : pool) {
    add("str", Term::tensor(f, Term::id(0)), f);
    add("str", Term::tensor(Term::id(0), f), f);
  }
  for (const auto& a : small) {
    for (const auto& b : small) {
      for (const auto& c : small) {
        add("str", Term::tensor(Term::tensor(a, b), c), Term::tensor(a, Term::tensor(b, c)));
      }
    }
  }

  // cat
  for (const auto& f : pool) {
    const auto ty = typeOf(f);
    add("cat", Term::comp(f, Term::id(static_cast<std::uint32_t>(ty.source))), f);
    add("cat", Term::comp(Term::id(static_cast<std::uint32_t>(ty.target)), f), f);
  }
  for (const auto& f : pool) {
    for (const auto& g : pool) {
      if (typeOf(f).target != typeOf(g).source) continue;
      for (const auto& h : pool) {
        if (typeOf(g).target != typeOf(h).source) continue;
        add("cat", Term::comp(Term::comp(h, g), f), Term::comp(h, Term::comp(g, f)));
      }
    }
  }

  // fun
  for (std::uint32_t n = 0; n <= maxArity; ++n) {
    for (std::uint32_t m = 0; m <= maxArity; ++m) {
      add("fun", Term::tensor(Term::id(n), Term::id(m)), Term::id(n + m));
    }
  }
  std::vector<std::pair<Term, Term>> composable;  // (g, f) with g . f defined
  for (const auto& f : small) {
    for (const auto& g : small) {
      if (typeOf(f).target == typeOf(g).source) composable.emplace_back(g, f);
    }
  }
  for (const auto& [g1, f1] : composable) {
    for (const auto& [g2, f2] : composable) {
      add("fun", Term::tensor(Term::comp(g1, f1), Term::comp(g2, f2)),
          Term::comp(Term::tensor(g1, g2), Term::tensor(f1, f2)));
    }
  }

  // nat
  for (const auto& f1 : pool) {
    for (const auto& f2 : pool) {
      const auto t1 = typeOf(f1), t2 = typeOf(f2);
      const auto m1 = static_cast<std::uint32_t>(t1.target), m2 = static_cast<std::uint32_t>(t2.target);
      const auto n1 = static_cast<std::uint32_t>(t1.source), n2 = static_cast<std::uint32_t>(t2.source);
      add("nat", Term::comp(Term::tau(m1, m2), Term::tensor(f1, f2)),
          Term::comp(Term::tensor(f2, f1), Term::tau(n1, n2)));
    }
  }

  // inv, hex
  for (std::uint32_t n = 0; n <= maxArity; ++n) {
    for (std::uint32_t m = 0; m <= maxArity; ++m) {
      add("inv", Term::comp(Term::tau(m, n), Term::tau(n, m)), Term::id(n + m));
      for (std::uint32_t p = 0; p <= maxArity; ++p) {
        add("hex", Term::tau(n + m, p),
            Term::comp(Term::tensor(Term::tau(n, p), Term::id(m)), Term::tensor(Term::id(n), Term::tau(m, p))));
      }
    }
  }

  auto addParsed = [&](const char* schema, const char* l, const char* r) { add(schema, parse(l), parse(r)); };
  addParsed("assoc", "mu . (mu x id1)", "mu . (id1 x mu)");
  addParsed("unit", "mu . (eta x id1)", "id1");
  addParsed("unit", "mu . (id1 x eta)", "id1");
  addParsed("coass", "(delta x id1) . delta", "(id1 x delta) . delta");
  addParsed("counit", "(eps x id1) . delta", "id1");
  addParsed("counit", "(id1 x eps) . delta", "id1");
  addParsed("Frob", "(mu x id1) . (id1 x delta)", "delta . mu");
  addParsed("Frob", "(id1 x mu) . (delta x id1)", "delta . mu");
  addParsed("com", "mu . tau(1,1)", "mu");
  addParsed("cocom", "tau(1,1) . delta", "delta");
  return out;
}

}  // namespace frobius
