#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobius/error.hpp"
#include "frobius/matrix.hpp"
#include "frobius/onecob.hpp"

namespace frobius {

/// Base-p expansion of a with n digits, most significant first.
inline std::vector<std::uint32_t> digits(std::uint64_t a, std::uint32_t p, std::uint32_t n) {
  if (p < 2) throw Error(Errc::OutOfRange, "base must be at least 2");
  std::vector<std::uint32_t> d(n, 0);
  for (std::uint32_t i = n; i-- > 0;) {
    d[i] = static_cast<std::uint32_t>(a % p);
    a /= p;
  }
  if (a != 0) throw Error(Errc::OutOfRange, "value does not fit in " + std::to_string(n) + " base-" + std::to_string(p) + " digits");
  return d;
}

/// The 0-1 matrix of a diagram: entry (row word, column word) is 1 exactly
/// when every matched pair of endpoints carries equal digits.
///
/// Each endpoint lies in exactly one pair, so the nonzero entries are in
/// bijection with digit assignments to the pairs and are enumerated directly.
inline ExactMatrix matrixA(const OneCobDiagram& k, std::uint32_t p, const SizeGuard& guard = {}) {
  if (p < 2) throw Error(Errc::OutOfRange, "p must be at least 2");
  const std::uint64_t rows = checkedPow(p, k.nOut(), guard.maxEntries);
  const std::uint64_t cols = checkedPow(p, k.nIn(), guard.maxEntries);
  ExactMatrix a(rows, cols, guard);

  // Positional weight of each endpoint within its word.
  auto weight = [&](Endpoint e) {
    const std::size_t len = e.side == 0 ? k.nIn() : k.nOut();
    std::uint64_t w = 1;
    for (std::size_t i = e.index + 1; i < len; ++i) w *= p;
    return w;
  };
  struct PairWeights {
    std::uint64_t row = 0, col = 0;
  };
  std::vector<PairWeights> pw;
  for (auto [x, y] : k.pairs()) {
    PairWeights w;
    for (Endpoint e : {x, y}) (e.side == 0 ? w.col : w.row) += weight(e);
    pw.push_back(w);
  }

  std::vector<std::uint32_t> digit(pw.size(), 0);
  std::uint64_t row = 0, col = 0;
  while (true) {
    a(row, col) = 1;
    std::size_t i = 0;
    for (; i < pw.size(); ++i) {
      if (++digit[i] < p) {
        row += pw[i].row;
        col += pw[i].col;
        break;
      }
      digit[i] = 0;
      row -= (p - 1) * pw[i].row;
      col -= (p - 1) * pw[i].col;
    }
    if (i == pw.size()) break;
  }
  return a;
}

/// p^(circles) times matrixA.
inline ExactMatrix brauerB(const OneCobDiagram& k, std::uint32_t p, const SizeGuard& guard = {}) {
  ExactMatrix a = matrixA(k, p, guard);
  if (k.circles() == 0) return a;
  return scalarMul(BigInt(pow(BigInt(p), static_cast<unsigned>(k.circles()))), std::move(a));
}

}  // namespace frobius
