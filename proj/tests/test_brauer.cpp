#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "frobius/frobius.hpp"
#include "oracles.hpp"

using namespace frobius;

namespace {

std::string rowsOf(const ExactMatrix& m) {
  std::ostringstream os;
  printMatrix(os, m);
  return os.str();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FROBIUS_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExactMatrix randomSquare(std::mt19937_64& rng, std::size_t p) {
  std::uniform_int_distribution<int> entry(-9, 9);
  ExactMatrix x(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) x(i, j) = entry(rng);
  }
  return x;
}

// The five-to-three diagram with its left and right factors.
OneCobDiagram worked() { return parseDiagram("--++- ; --+ ; (i0 o1)(i1 o0)(i3 o2)(i2 i4) ; 0"); }
OneCobDiagram workedLeft() { return parseDiagram("-- ; -- ; (i0 o1)(i1 o0) ; 0"); }
OneCobDiagram workedRight() { return parseDiagram("++- ; + ; (i1 o0)(i0 i2) ; 0"); }

}  // namespace

TEST(Digits, MostSignificantFirst) {
  EXPECT_EQ(digits(10, 2, 5), (std::vector<std::uint32_t>{0, 1, 0, 1, 0}));
  EXPECT_EQ(digits(5, 2, 3), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(digits(0, 7, 4), (std::vector<std::uint32_t>(4, 0)));
  EXPECT_EQ(digits(0, 3, 0), (std::vector<std::uint32_t>{}));
  EXPECT_THROW(digits(8, 2, 3), Error);
  EXPECT_THROW(digits(1, 1, 3), Error);
  for (std::uint64_t a = 0; a < 81; ++a) EXPECT_EQ(digits(a, 3, 4), oracle::baseDigits(a, 3, 4));
}

TEST(Brauer, GoldenMatrices) {
  EXPECT_EQ(rowsOf(brauerB(s0::mu(), 2)), golden("brauer_mu_p2.txt"));
  EXPECT_EQ(rowsOf(brauerB(s0::eps(), 2)), golden("brauer_eps_p2.txt"));
  EXPECT_EQ(rowsOf(symMatrix<BigInt>(3, 2)), golden("sym_3_2.txt"));
}

TEST(Brauer, SmallCases) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    EXPECT_EQ(brauerB(identityDiagram(signsFromString("+")), p), ExactMatrix::identity(p));
    EXPECT_EQ(matMul(brauerB(s0::eps(), p), brauerB(s0::eta(), p)), ExactMatrix(1, 1, {BigInt(p)}));
    EXPECT_EQ(brauerB(composeDiagram(s0::eps(), s0::eta()), p), ExactMatrix(1, 1, {BigInt(p)}));
    EXPECT_EQ(brauerB(symmetryDiagram(signsFromString("+"), signsFromString("+")), p), symMatrix<BigInt>(p, p));
  }
  EXPECT_EQ(brauerB(parseDiagram(" ; ; ; 1"), 2), ExactMatrix(1, 1, {BigInt(2)}));
  EXPECT_EQ(brauerB(parseDiagram(" ; ; ; 70"), 2)(0, 0), pow(BigInt(2), 70));
  EXPECT_EQ(matrixA(parseDiagram(" ; ; ; 70"), 2)(0, 0), 1);
}

TEST(Brauer, AgreesWithEntrywiseOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto d = randomDiagramFrom(rng, randomSigns(rng, rng() % 5), 4);
    for (std::uint32_t p : {2u, 3u}) ASSERT_EQ(brauerB(d, p), oracle::bruteForceB(d, p)) << printDiagram(d);
  }
}

TEST(Brauer, SizeGuardRejectsHugeShapes) {
  const auto big = identityDiagram(signsFromString("+-+-+-+-+-+-+-"));
  try {
    brauerB(big, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SizeGuard);
  }
  EXPECT_THROW(brauerB(s0::mu(), 2, SizeGuard{63}), Error);
  EXPECT_NO_THROW(brauerB(s0::mu(), 2, SizeGuard{64}));
  EXPECT_THROW(brauerB(s0::mu(), 1), Error);
}

TEST(Brauer, WorkedEntryAndKroneckerSplit) {
  const auto k = worked();
  EXPECT_EQ(tensorDiagram(workedLeft(), workedRight()), k);
  const auto a = matrixA(k, 2);
  EXPECT_EQ(a(5, 10), 1);
  const auto x = matrixA(workedLeft(), 2), y = matrixA(workedRight(), 2);
  EXPECT_EQ(x(2, 1), 1);
  EXPECT_EQ(y(1, 2), 1);
  EXPECT_EQ(a(5, 10), x(2, 1) * y(1, 2));
  EXPECT_EQ(a, kron(x, y));
}

TEST(Kron, IndexLaw) {
  EXPECT_EQ(kron(ExactMatrix(1, 1, {2}), ExactMatrix(1, 1, {3})), ExactMatrix(1, 1, {6}));
  EXPECT_EQ(kron(ExactMatrix::identity(2), ExactMatrix::identity(2)), ExactMatrix::identity(4));
  // [a; b] (2x1) times [c d] (1x2): z(i*1+q, j*2+r) = x(i,j) y(q,r).
  EXPECT_EQ(kron(ExactMatrix(2, 1, {2, 3}), ExactMatrix(1, 2, {5, 7})), ExactMatrix(2, 2, {10, 14, 15, 21}));
  std::mt19937_64 rng(1);
  const ExactMatrix x = randomSquare(rng, 3), y(2, 3, {1, -2, 3, 4, 0, 6});
  const ExactMatrix z = kron(x, y);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t r = 0; r < 3; ++r) ASSERT_EQ(z(i * 2 + q, j * 3 + r), x(i, j) * y(q, r));
}

TEST(SymMatrix, InverseAndSmallCases) {
  EXPECT_EQ(symMatrix<BigInt>(1, 1), ExactMatrix::identity(1));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 1; m <= 4; ++m) {
      EXPECT_EQ(matMul(symMatrix<BigInt>(m, n), symMatrix<BigInt>(n, m)), ExactMatrix::identity(n * m));
    }
  }
}

TEST(Reshape, HIsomorphisms) {
  const ExactMatrix v(4, 1, {1, 2, 3, 4});
  EXPECT_EQ(hIso(v, 2), ExactMatrix(2, 2, {1, 2, 3, 4}));
  EXPECT_EQ(hIsoInv(hIso(v, 2), 2), v);
  EXPECT_THROW(hIso(v, 3), Error);
  std::mt19937_64 rng(5);
  const ExactMatrix x = randomSquare(rng, 2), y = randomSquare(rng, 2);
  const ExactMatrix z = kron(x, y);
  EXPECT_EQ(h2Iso(h2IsoInv(z, 2), 2), z);
  const ExactMatrix v16 = h2IsoInv(z, 2);
  ASSERT_EQ(v16.rows(), 16u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(v16(i * 4 + j, 0), z(i, j));
}

TEST(Brauer, MultiplicationAndTraceIdentities) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    const auto bmu = brauerB(s0::mu(), p), beps = brauerB(s0::eps(), p);
    for (int i = 0; i < 50; ++i) {
      const ExactMatrix x = randomSquare(rng, p), y = randomSquare(rng, p);
      ASSERT_EQ(hIso(matMul(bmu, h2IsoInv(kron(x, y), p)), p), matMul(x, y));
      ASSERT_EQ(matMul(beps, hIsoInv(x, p)), ExactMatrix(1, 1, {trace(x)}));
    }
  }
}

TEST(Brauer, FunctorLaws) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto [g, f] = randomComposable(rng);
    const auto h = randomDiagramBeside(rng, f);
    for (std::uint32_t p : {2u, 3u}) {
      ASSERT_EQ(brauerB(composeDiagram(g, f), p), matMul(brauerB(g, p), brauerB(f, p)))
          << printDiagram(g) << " after " << printDiagram(f);
      ASSERT_EQ(brauerB(tensorDiagram(f, h), p), kron(brauerB(f, p), brauerB(h, p)));
    }
  }
  for (const char* s1 : {"+", "-", "+-", "--"}) {
    for (const char* s2 : {"", "+", "-+"}) {
      for (std::uint32_t p : {2u, 3u}) {
        const auto a = signsFromString(s1), b = signsFromString(s2);
        EXPECT_EQ(brauerB(symmetryDiagram(a, b), p),
                  symMatrix<BigInt>(checkedPow(p, a.size(), 1u << 20), checkedPow(p, b.size(), 1u << 20)));
      }
    }
  }
}

TEST(Brauer, MatrixFrobeniusAlgebra) {
  for (std::uint32_t p : {2u, 3u}) {
    const FrobeniusReport r = checkFrobenius(matrixAlgebra(p));
    EXPECT_TRUE(r.assoc && r.unit && r.coass && r.counit && r.frob);
    EXPECT_TRUE(r.symmetric);
    EXPECT_FALSE(r.com);
    EXPECT_FALSE(r.cocom);
    const auto bmu = brauerB(s0::mu(), p);
    const auto s = symMatrix<BigInt>(p * p, p * p);
    EXPECT_NE(matMul(bmu, s), bmu);
    EXPECT_EQ(matMul(matMul(brauerB(s0::eps(), p), bmu), s), matMul(brauerB(s0::eps(), p), bmu));
  }
}
