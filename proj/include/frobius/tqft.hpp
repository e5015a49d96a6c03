#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobius/error.hpp"
#include "frobius/matrix.hpp"
#include "frobius/normal_form.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// Linear data for a candidate Frobenius algebra of dimension `dim`,
/// given as matrices acting on column vectors.
struct AlgebraData {
  std::size_t dim = 1;
  RationalMatrix mul;     // dim x dim^2
  RationalMatrix unit;    // dim x 1
  RationalMatrix comul;   // dim^2 x dim
  RationalMatrix counit;  // 1 x dim
};

inline void validateShapes(const AlgebraData& a) {
  const std::size_t d = a.dim;
  auto want = [](const RationalMatrix& m, std::size_t r, std::size_t c, const char* name) {
    if (m.rows() != r || m.cols() != c) {
      throw Error(Errc::ShapeMismatch, std::string(name) + " must be " + std::to_string(r) + "x" + std::to_string(c) +
                                           ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  };
  if (d == 0) throw Error(Errc::ShapeMismatch, "dimension must be positive");
  want(a.mul, d, d * d, "mul");
  want(a.unit, d, 1, "unit");
  want(a.comul, d * d, d, "comul");
  want(a.counit, 1, d, "counit");
}

struct FrobeniusReport {
  bool assoc = false;
  bool unit = false;
  bool coass = false;
  bool counit = false;
  bool frob = false;
  bool com = false;
  bool cocom = false;
  bool symmetric = false;

  /// The axioms every Frobenius algebra must satisfy, commutativity aside.
  bool frobenius() const { return assoc && unit && coass && counit && frob; }
  bool commutative() const { return com && cocom; }
};

inline FrobeniusReport checkFrobenius(const AlgebraData& a) {
  validateShapes(a);
  const auto I = RationalMatrix::identity(a.dim);
  const auto S = symMatrix<Rational>(a.dim, a.dim);
  const auto& M = a.mul;
  const auto& U = a.unit;
  const auto& D = a.comul;
  const auto& E = a.counit;
  auto mm = [](const RationalMatrix& x, const RationalMatrix& y) { return matMul(x, y); };
  auto kr = [](const RationalMatrix& x, const RationalMatrix& y) { return kron(x, y); };

  FrobeniusReport r;
  r.assoc = mm(M, kr(M, I)) == mm(M, kr(I, M));
  r.unit = mm(M, kr(U, I)) == I && mm(M, kr(I, U)) == I;
  r.coass = mm(kr(D, I), D) == mm(kr(I, D), D);
  r.counit = mm(kr(E, I), D) == I && mm(kr(I, E), D) == I;
  const auto middle = mm(D, M);
  r.frob = mm(kr(M, I), kr(I, D)) == middle && mm(kr(I, M), kr(D, I)) == middle;
  r.com = mm(M, S) == M;
  r.cocom = mm(S, D) == D;
  r.symmetric = mm(mm(E, M), S) == mm(E, M);
  return r;
}

inline constexpr const char* kNonFrobeniusWarning = "non-Frobenius data";

struct EvalResult {
  RationalMatrix matrix;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::size_t dimPower(std::size_t d, std::uint64_t n, const SizeGuard& guard) {
  return static_cast<std::size_t>(checkedPow(d, n, guard.maxEntries));
}

inline RationalMatrix evalGenerator(const Term& g, const AlgebraData& a, const SizeGuard& guard) {
  switch (g.kind()) {
    case Kind::Id: return RationalMatrix::identity(dimPower(a.dim, g.n(), guard), guard);
    case Kind::Tau:
      return symMatrix<Rational>(dimPower(a.dim, g.n(), guard), dimPower(a.dim, g.m(), guard), guard);
    case Kind::Mu: return a.mul;
    case Kind::Eta: return a.unit;
    case Kind::Delta: return a.comul;
    case Kind::Eps: return a.counit;
    default: break;
  }
  throw Error(Errc::BadInput, "not a generator");
}

// The n-fold product mu . (mu x id) . ... as a D x D^n matrix; unit when n = 0.
inline RationalMatrix foldedProduct(const AlgebraData& a, std::uint32_t n, const SizeGuard& guard) {
  if (n == 0) return a.unit;
  auto acc = RationalMatrix::identity(a.dim);
  const auto I = RationalMatrix::identity(a.dim);
  for (std::uint32_t k = 1; k < n; ++k) acc = matMul(a.mul, kron(acc, I, guard), guard);
  return acc;
}

// The n-fold coproduct ... . (delta x id) . delta as a D^n x D matrix; counit when n = 0.
inline RationalMatrix foldedCoproduct(const AlgebraData& a, std::uint32_t n, const SizeGuard& guard) {
  if (n == 0) return a.counit;
  auto acc = RationalMatrix::identity(a.dim);
  const auto I = RationalMatrix::identity(a.dim);
  for (std::uint32_t k = 1; k < n; ++k) acc = matMul(kron(acc, I, guard), a.comul, guard);
  return acc;
}

inline RationalMatrix evalBlock(const EBlock& b, const AlgebraData& a, const SizeGuard& guard) {
  RationalMatrix m = foldedProduct(a, b.ins, guard);
  if (b.genus > 0) {
    const auto handle = matMul(a.mul, a.comul, guard);
    for (std::uint32_t k = 0; k < b.genus; ++k) m = matMul(handle, m, guard);
  }
  return matMul(foldedCoproduct(a, b.outs, guard), m, guard);
}

// Index of the word obtained by moving digit i of `word` to position q(i).
inline std::vector<std::size_t> wordPermutation(const Perm& q, std::size_t d, const SizeGuard& guard) {
  const std::size_t n = q.size();
  const std::size_t words = dimPower(d, n, guard);
  std::vector<std::size_t> weight(n, 1);
  for (std::size_t i = n; i-- > 1;) weight[i - 1] = weight[i] * d;
  std::vector<std::size_t> image(words, 0);
  for (std::size_t w = 0; w < words; ++w) {
    std::size_t rest = w, v = 0;
    for (std::size_t i = n; i-- > 0;) {
      v += (rest % d) * weight[q(i)];
      rest /= d;
    }
    image[w] = v;
  }
  return image;
}

}  // namespace detail

/// Interprets terms as D^target x D^source matrices: composition is matrix
/// product, tensor is the Kronecker product and tau(n,m) is the swap of
/// D^n and D^m. The axiom report is computed once per algebra.
class Evaluator {
 public:
  explicit Evaluator(AlgebraData a, const SizeGuard& guard = {})
      : algebra_(std::move(a)), guard_(guard), report_(checkFrobenius(algebra_)) {}

  const AlgebraData& algebra() const { return algebra_; }
  const FrobeniusReport& report() const { return report_; }

  RationalMatrix matrix(const Term& t) const {
    typecheck(t);
    return foldTerm<RationalMatrix>(
        t, [&](const Term& g) { return detail::evalGenerator(g, algebra_, guard_); },
        [&](const Term&, RationalMatrix g, RationalMatrix f) { return matMul(g, f, guard_); },
        [&](const Term&, RationalMatrix l, RationalMatrix r) { return kron(l, r, guard_); });
  }

  EvalResult eval(const Term& t) const {
    EvalResult r{matrix(t), {}};
    if (!report_.frobenius()) r.warnings.emplace_back(kNonFrobeniusWarning);
    return r;
  }

  /// Evaluates a normal form block by block; only sound for commutative data,
  /// since the normal form forgets the wire order inside each component.
  RationalMatrix normal(const NormalForm& nf) const {
    if (!report_.commutative()) {
      throw Error(Errc::NonCommutativeData, "normal-form evaluation needs commutative and cocommutative data");
    }
    RationalMatrix center = RationalMatrix::identity(1);
    for (const EBlock& b : nf.center()) center = kron(center, detail::evalBlock(b, algebra_, guard_), guard_);

    const auto rowMap = detail::wordPermutation(nf.tail, algebra_.dim, guard_);
    const auto colMap = detail::wordPermutation(nf.head, algebra_.dim, guard_);
    RationalMatrix out(center.rows(), center.cols(), guard_);
    for (std::size_t r = 0; r < center.rows(); ++r) {
      for (std::size_t c = 0; c < center.cols(); ++c) out(rowMap[r], c) = center(r, colMap[c]);
    }
    return out;
  }

 private:
  AlgebraData algebra_;
  SizeGuard guard_;
  FrobeniusReport report_;
};

inline EvalResult evalTerm(const Term& t, const AlgebraData& a, const SizeGuard& guard = {}) {
  return Evaluator(a, guard).eval(t);
}

inline RationalMatrix evalNormal(const NormalForm& nf, const AlgebraData& a, const SizeGuard& guard = {}) {
  return Evaluator(a, guard).normal(nf);
}

/// The scalar assigned to the closed surface of genus g.
inline Rational closedInvariant(std::uint32_t g, const AlgebraData& a) {
  validateShapes(a);
  return detail::evalBlock({0, g, 0}, a, SizeGuard{})(0, 0);
}

}  // namespace frobius
