#include <gtest/gtest.h>

#include <map>

#include "enumerate.hpp"
#include "frobius/frobius.hpp"
#include "oracles.hpp"

using namespace frobius;

namespace {

Shaped shapedOf(const char* text) {
  const SpecialTerm s = toSpecial(parse(text));
  EXPECT_FALSE(s.isPureTau());
  return s.shaped();
}

}  // namespace

TEST(ToSpecial, Examples) {
  auto s = shapedOf("mu . delta");
  EXPECT_EQ(s.center, (std::vector<EBlock>{{1, 1, 1}}));
  EXPECT_EQ(s.head, Perm::identity(1));
  EXPECT_EQ(s.tail, Perm::identity(1));

  s = shapedOf("(mu x id1) . (id1 x delta)");
  EXPECT_EQ(s.center, (std::vector<EBlock>{{2, 0, 2}}));
  EXPECT_EQ(s.head, Perm::identity(2));
  EXPECT_EQ(s.tail, Perm::identity(2));

  const SpecialTerm t = toSpecial(parse("tau(1,1)"));
  ASSERT_TRUE(t.isPureTau());
  EXPECT_EQ(t.pureTau(), Perm({1, 0}));
}

TEST(ToSpecial, ExpansionHasSameSkeleton) {
  TermGenerator gen(31);
  for (int i = 0; i < 2000; ++i) {
    const Term t = gen.next();
    ASSERT_EQ(cobSkeleton(expandToTerm(toSpecial(t))), cobSkeleton(t)) << print(t);
  }
}

TEST(ToNormal, Examples) {
  NormalForm nf = toNormal(SpecialTerm{Perm::identity(1)});
  EXPECT_EQ(nf.mixed, (std::vector<EBlock>{{1, 0, 1}}));
  EXPECT_EQ(nf.head, Perm::identity(1));

  nf = toNormal(SpecialTerm{Shaped{Perm::identity(0), {{0, 2, 0}, {0, 1, 0}}, Perm::identity(0)}});
  EXPECT_EQ(nf.closed, (std::vector<std::uint32_t>{1, 2}));

  nf = toNormal(SpecialTerm{Shaped{Perm::identity(1), {{1, 0, 2}}, Perm({1, 0})}});
  EXPECT_EQ(nf.head, Perm::identity(2));
  EXPECT_EQ(nf.mixed, (std::vector<EBlock>{{1, 0, 2}}));
}

TEST(Normalize, Examples) {
  NormalForm nf = normalize(parse("eps . mu . delta . eta"));
  EXPECT_EQ(nf.closed, (std::vector<std::uint32_t>{1}));
  EXPECT_TRUE(nf.inputOnly.empty() && nf.outputOnly.empty() && nf.mixed.empty());
  EXPECT_EQ(nf.head.size(), 0u);
  EXPECT_EQ(nf.tail.size(), 0u);

  EXPECT_EQ(normalize(parse("eps . eta")).closed, (std::vector<std::uint32_t>{0}));
  EXPECT_EQ(normalize(parse("mu . tau(1,1)")), normalize(parse("mu")));
  EXPECT_EQ(normalize(parse("mu")).mixed, (std::vector<EBlock>{{1, 0, 2}}));

  nf = normalize(parse("tau(1,1)"));
  EXPECT_EQ(nf.mixed, (std::vector<EBlock>{{1, 0, 1}, {1, 0, 1}}));
  EXPECT_EQ(nf.head, Perm({1, 0}));
  EXPECT_EQ(nf.tail, Perm::identity(2));
}

TEST(Normalize, ClassifiesOneSidedBlocks) {
  const NormalForm nf = normalize(parse("(eps x eta x delta) . (id1 x mu) . (id1 x eta x id1)"));
  EXPECT_TRUE(normalFormViolations(nf).empty());
  EXPECT_EQ(nf.inputOnly.size(), 1u);
  EXPECT_EQ(nf.outputOnly.size(), 1u);
  EXPECT_EQ(nf.mixed, (std::vector<EBlock>{{2, 0, 1}}));
}

TEST(ExpandToTerm, BlockExamples) {
  EXPECT_EQ(expandToTerm(EBlock{1, 0, 2}), Term::mu());
  EXPECT_EQ(expandToTerm(EBlock{0, 0, 0}), Term::comp(Term::eps(), Term::eta()));
  EXPECT_EQ(expandToTerm(EBlock{2, 1, 1}), Term::comp(Term::delta(), Term::comp(Term::mu(), Term::delta())));
  EXPECT_EQ(expandToTerm(EBlock{1, 0, 1}), Term::id(1));
  EXPECT_EQ(print(expandToTerm(EBlock{3, 0, 3})), "delta x id1 . (delta . (mu . mu x id1))");
}

TEST(Equal, Examples) {
  EXPECT_TRUE(equal(parse("delta . mu"), parse("(mu x id1) . (id1 x delta)")));
  EXPECT_FALSE(equal(parse("mu . delta"), parse("id1")));
  EXPECT_FALSE(equal(parse("eps . mu . delta . eta"), parse("eps . eta")));
  std::string note;
  EXPECT_FALSE(equal(parse("mu"), parse("delta"), &note));
  EXPECT_NE(note.find("type"), std::string::npos);
}

TEST(Equal, TauTermsAgreeWithPermutations) {
  TermGenerator gen(77);
  std::vector<Term> taus;
  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    do {
      taus.push_back(tauTermOfPerm(Perm(img)));
      taus.push_back(Term::comp(tauTermOfPerm(Perm(img)), Term::id(static_cast<std::uint32_t>(n))));
    } while (std::next_permutation(img.begin(), img.end()));
  }
  for (std::uint32_t a = 0; a <= 2; ++a) {
    for (std::uint32_t b = 0; b <= 2; ++b) taus.push_back(Term::tau(a, b));
  }
  for (const auto& f : taus) {
    for (const auto& g : taus) {
      if (typecheck(f) != typecheck(g)) continue;
      ASSERT_EQ(equal(f, g), permOfTauTerm(f) == permOfTauTerm(g)) << print(f) << " vs " << print(g);
    }
  }
}

TEST(Normalize, AxiomInstancesHold) {
  for (const auto& ax : axiomInstances()) {
    ASSERT_TRUE(equal(ax.lhs, ax.rhs)) << ax.schema << ": " << print(ax.lhs) << " = " << print(ax.rhs);
  }
}

TEST(Normalize, AgreesWithSemanticPathAndIsIdempotent) {
  TermGenerator gen(4242, {.maxNodes = 40, .maxWires = 5});
  for (int i = 0; i < 3000; ++i) {
    const Term t = gen.next();
    const NormalForm nf = normalize(t);
    ASSERT_EQ(nf, normalizeSemantic(t)) << print(t);
    ASSERT_TRUE(normalFormViolations(nf).empty()) << print(t);
    ASSERT_EQ(normalize(expandToTerm(nf)), nf) << print(t);
    ASSERT_EQ(cobSkeleton(expandToTerm(nf)), cobSkeleton(t)) << print(t);
  }
}

TEST(Normalize, RewritesPreserveEquality) {
  TermGenerator gen(8);
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen.next();
    const Term u = perturb(t, gen.engine(), 0.3);
    ASSERT_TRUE(equal(t, u)) << print(t) << "  vs  " << print(u);
  }
}

TEST(Normalize, Congruence) {
  TermGenerator gen(9);
  for (int i = 0; i < 500; ++i) {
    const Term f1 = gen.next();
    const Term g1 = gen.next(static_cast<std::uint32_t>(typecheck(f1).target), 10);
    const Term f2 = perturb(f1, gen.engine(), 0.3), g2 = perturb(g1, gen.engine(), 0.3);
    ASSERT_TRUE(equal(Term::comp(g1, f1), Term::comp(g2, f2)));
    ASSERT_TRUE(equal(Term::tensor(f1, g1), Term::tensor(f2, g2)));
  }
}

TEST(Normalize, ExhaustiveSmallTermsMatchSkeletons) {
  const auto terms = enumerate::allUpTo(5);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<std::pair<NormalForm, CobSkeleton>>> byType;
  for (const auto& t : terms) {
    const NormalForm nf = normalize(t.term);
    const CobSkeleton s = cobSkeleton(t.term);
    ASSERT_EQ(nf, normalOfSkeleton(s)) << print(t.term);
    ASSERT_EQ(skeletonOfNormal(nf), s) << print(t.term);
    byType[{t.type.source, t.type.target}].emplace_back(nf, s);
  }
  std::size_t pairs = 0;
  for (const auto& [type, group] : byType) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size() && j < i + 64; ++j) {
        ++pairs;
        ASSERT_EQ(group[i].first == group[j].first, group[i].second == group[j].second);
      }
    }
  }
  EXPECT_GT(pairs, 1000u);
}

TEST(Validator, FlagsBrokenOrderings) {
  NormalForm nf = normalize(parse("eta x eta x (eps . eta) x (eps . mu . delta . eta)"));
  EXPECT_TRUE(normalFormViolations(nf).empty());
  ASSERT_EQ(nf.closed.size(), 2u);
  std::swap(nf.closed[0], nf.closed[1]);
  EXPECT_FALSE(normalFormViolations(nf).empty());

  nf = normalize(parse("mu x mu"));
  EXPECT_TRUE(normalFormViolations(nf).empty());
  nf.tail = Perm({1, 0});
  EXPECT_FALSE(normalFormViolations(nf).empty());

  nf = normalize(parse("delta"));
  nf.tail = Perm({1, 0});
  EXPECT_FALSE(normalFormViolations(nf).empty());

  nf = normalize(parse("mu"));
  nf.head = Perm::identity(3);
  EXPECT_FALSE(normalFormViolations(nf).empty());
}

TEST(Normalize, LongChains) {
  std::string text = "id1";
  for (int i = 0; i < 20000; ++i) text += " . mu . delta";
  const NormalForm nf = normalize(parse(text));
  EXPECT_EQ(nf.mixed, (std::vector<EBlock>{{1, 20000, 1}}));

  std::string wide = "id1";
  for (int i = 0; i < 2000; ++i) wide += " x id1";
  EXPECT_EQ(normalize(parse(wide)).mixed.size(), 2001u);
}
