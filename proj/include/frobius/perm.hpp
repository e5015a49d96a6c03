#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "frobius/error.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// A permutation of {0, ..., n-1} in one-line form: wire i goes to image[i].
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::uint32_t v : image_) {
      if (v >= image_.size() || seen[v]) {
        throw Error(Errc::BadInput, "image is not a bijection of " + std::to_string(image_.size()));
      }
      seen[v] = true;
    }
  }

  static Perm identity(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    return Perm(std::move(img), Unchecked{});
  }

  std::size_t size() const { return image_.size(); }
  std::uint32_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::uint32_t>& image() const { return image_; }

  bool isIdentity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  Perm inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<std::uint32_t>(i);
    return Perm(std::move(inv), Unchecked{});
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  friend Perm compose(const Perm& g, const Perm& f);
  friend Perm blockSum(const Perm& a, const Perm& b);
  friend Perm blockTau(std::size_t n, std::size_t m);

 private:
  struct Unchecked {};
  Perm(std::vector<std::uint32_t> image, Unchecked) : image_(std::move(image)) {}

  std::vector<std::uint32_t> image_;
};

/// g . f (apply f first).
inline Perm compose(const Perm& g, const Perm& f) {
  if (g.size() != f.size()) {
    throw Error(Errc::SizeMismatch, "cannot compose permutations of sizes " +
                                        std::to_string(g.size()) + " and " + std::to_string(f.size()));
  }
  std::vector<std::uint32_t> img(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) img[i] = g(f(i));
  return Perm(std::move(img), Perm::Unchecked{});
}

/// a (+) b, the permutation of a tensor of wires.
inline Perm blockSum(const Perm& a, const Perm& b) {
  std::vector<std::uint32_t> img(a.image_);
  const auto shift = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t v : b.image_) img.push_back(v + shift);
  return Perm(std::move(img), Perm::Unchecked{});
}

/// The permutation of tau(n,m): input i < n goes to i + m, input n + j to j.
inline Perm blockTau(std::size_t n, std::size_t m) {
  std::vector<std::uint32_t> img(n + m);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i + m);
  for (std::size_t j = 0; j < m; ++j) img[n + j] = static_cast<std::uint32_t>(j);
  return Perm(std::move(img), Perm::Unchecked{});
}

/// id_left (+) p (+) id_right.
inline Perm padded(std::size_t left, const Perm& p, std::size_t right) {
  return blockSum(blockSum(Perm::identity(left), p), Perm::identity(right));
}

/// The permutation denoted by a tau-term.
inline Perm permOfTauTerm(const Term& t) {
  return foldTerm<Perm>(
      t,
      [](const Term& g) {
        switch (g.kind()) {
          case Kind::Id: return Perm::identity(g.n());
          case Kind::Tau: return blockTau(g.n(), g.m());
          default:
            throw Error(Errc::NotTauTerm, "generator '" + std::string(g.kind() == Kind::Mu      ? "mu"
                                                                   : g.kind() == Kind::Eta   ? "eta"
                                                                   : g.kind() == Kind::Delta ? "delta"
                                                                                             : "eps") +
                                              "' occurs in a tau-term");
        }
      },
      [&](const Term& node, Perm g, Perm f) {
        if (g.size() != f.size()) {
          throw TypeMismatchError(g.size(), f.size(), subtermPath(t, node));
        }
        return compose(g, f);
      },
      [](const Term&, Perm l, Perm r) { return blockSum(l, r); });
}

/// id_i x tau(1,1) x id_(n-i-2), dropping id0 factors.
inline Term adjacentTransposition(std::size_t i, std::size_t n) {
  Term t = Term::tau(1, 1);
  if (i > 0) t = Term::tensor(Term::id(static_cast<std::uint32_t>(i)), t);
  if (n > i + 2) t = Term::tensor(t, Term::id(static_cast<std::uint32_t>(n - i - 2)));
  return t;
}

/// Adjacent-transposition positions s_{i_1}, ..., s_{i_k} with
/// p = s_{i_k} . ... . s_{i_1}, found by bubble-sorting the image.
inline std::vector<std::size_t> bubbleDecomposition(const Perm& p) {
  std::vector<std::uint32_t> img = p.image();
  std::vector<std::size_t> swaps;
  for (std::size_t pass = 0; pass + 1 < img.size(); ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < img.size() - pass; ++i) {
      if (img[i] > img[i + 1]) {
        std::swap(img[i], img[i + 1]);
        swaps.push_back(i);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return swaps;
}

/// Canonical tau-term for p: id_n for the identity, otherwise the left-nested
/// composite of adjacent transpositions from bubbleDecomposition, last swap
/// outermost.
inline Term tauTermOfPerm(const Perm& p) {
  const auto n = p.size();
  std::vector<std::size_t> swaps = bubbleDecomposition(p);
  if (swaps.empty()) return Term::id(static_cast<std::uint32_t>(n));
  std::reverse(swaps.begin(), swaps.end());
  Term acc = adjacentTransposition(swaps.front(), n);
  for (std::size_t k = 1; k < swaps.size(); ++k) {
    acc = Term::comp(std::move(acc), adjacentTransposition(swaps[k], n));
  }
  return acc;
}

struct Factored {
  std::size_t j;  // p^-1(l)
  Perm rest;
};

/// Splits p so that p = (tau(1,l) x id) . (id_1 x rest) . (tau(j,1) x id)
/// with j = p^-1(l).
inline Factored factorOut(const Perm& p, std::size_t l) {
  const std::size_t n = p.size();
  if (l >= n) {
    throw Error(Errc::IndexOutOfRange,
                "wire " + std::to_string(l) + " outside permutation of size " + std::to_string(n));
  }
  const std::size_t j = p.inverse()(l);
  Perm conj = compose(padded(0, blockTau(l, 1), n - l - 1),
                      compose(p, padded(0, blockTau(1, j), n - j - 1)));
  std::vector<std::uint32_t> rest(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) rest[i] = conj(i + 1) - 1;
  return {j, Perm(std::move(rest))};
}

/// l and l+1 are parallel when p^-1(l+1) = p^-1(l) + 1.
inline bool parallelIn(const Perm& p, std::size_t l) {
  if (l + 1 >= p.size()) return false;
  Perm inv = p.inverse();
  return inv(l + 1) == inv(l) + 1;
}

/// Pair version of factorOut:
/// p = (tau(2,l) x id) . (id_2 x rest) . (tau(j,2) x id) with j = p^-1(l).
inline Factored factorOutPair(const Perm& p, std::size_t l) {
  const std::size_t n = p.size();
  if (l + 1 >= n) {
    throw Error(Errc::IndexOutOfRange,
                "wires " + std::to_string(l) + "," + std::to_string(l + 1) +
                    " outside permutation of size " + std::to_string(n));
  }
  if (!parallelIn(p, l)) {
    throw Error(Errc::NotParallel,
                "wires " + std::to_string(l) + " and " + std::to_string(l + 1) + " are not parallel");
  }
  const std::size_t j = p.inverse()(l);
  Perm conj = compose(padded(0, blockTau(l, 2), n - l - 2),
                      compose(p, padded(0, blockTau(2, j), n - j - 2)));
  std::vector<std::uint32_t> rest(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) rest[i] = conj(i + 2) - 2;
  return {j, Perm(std::move(rest))};
}

}  // namespace frobius
