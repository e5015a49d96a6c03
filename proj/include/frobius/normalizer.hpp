#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frobius/normal_form.hpp"
#include "frobius/perm.hpp"
#include "frobius/skeleton.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// One layer id_l x beta x id_r of a term cut into slices. For tau layers
/// `perm` holds the whole padded permutation.
struct Slice {
  Kind kind;
  std::uint32_t left = 0;
  Perm perm;
};

/// Cuts a well-typed term into slices, innermost (applied first) first.
inline std::vector<Slice> slices(const Term& t) {
  typecheck(t);
  std::unordered_map<const void*, TermType> types;
  foldTerm<TermType>(
      t,
      [&](const Term& g) {
        TermType ty = generatorType(g);
        types.emplace(g.identity(), ty);
        return ty;
      },
      [&](const Term& node, TermType g, TermType f) {
        TermType ty{f.source, g.target};
        types.emplace(node.identity(), ty);
        return ty;
      },
      [&](const Term& node, TermType l, TermType r) {
        TermType ty{l.source + r.source, l.target + r.target};
        types.emplace(node.identity(), ty);
        return ty;
      });

  struct Task {
    const Term* term;
    std::uint64_t left;
    std::uint64_t right;
  };
  std::vector<Slice> out;
  std::vector<Task> stack{{&t, 0, 0}};
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    const Term& u = *task.term;
    switch (u.kind()) {
      case Kind::Id: break;
      case Kind::Tau:
        if (u.n() != 0 && u.m() != 0) {
          out.push_back({Kind::Tau, static_cast<std::uint32_t>(task.left),
                         padded(task.left, blockTau(u.n(), u.m()), task.right)});
        }
        break;
      case Kind::Comp:
        // f runs first, so it is popped first
        stack.push_back({&u.lhs(), task.left, task.right});
        stack.push_back({&u.rhs(), task.left, task.right});
        break;
      case Kind::Tensor: {
        // f1 x f2 = (f1 x id) . (id x f2)
        const TermType l = types.at(u.lhs().identity());
        const TermType r = types.at(u.rhs().identity());
        stack.push_back({&u.lhs(), task.left, task.right + r.target});
        stack.push_back({&u.rhs(), task.left + l.source, task.right});
        break;
      }
      default: out.push_back({u.kind(), static_cast<std::uint32_t>(task.left), Perm{}}); break;
    }
  }
  return out;
}

namespace detail {

/// Absorbs slices one at a time into a special term, following the
/// case analysis on the outermost slice: tau joins the tail; delta, eps and
/// eta are pushed through the tail and absorbed by one block; mu first makes
/// its two wires parallel in the tail, then either adds a handle to one block
/// or merges two adjacent blocks.
class SpecialBuilder {
 public:
  explicit SpecialBuilder(std::size_t sourceWires) : pure_(Perm::identity(sourceWires)) {}

  void absorb(const Slice& s) {
    if (s.kind == Kind::Tau) {
      if (isPure_) {
        pure_ = compose(s.perm, pure_);
      } else {
        tail_ = compose(s.perm, tail_);
      }
      return;
    }
    leavePure();
    switch (s.kind) {
      case Kind::Delta: absorbDelta(s.left); break;
      case Kind::Eps: absorbEps(s.left); break;
      case Kind::Eta: absorbEta(s.left); break;
      case Kind::Mu: absorbMu(s.left); break;
      default: break;
    }
  }

  SpecialTerm result() const {
    if (isPure_) return {pure_};
    return {Shaped{tail_, center_, head_}};
  }

 private:
  // A permutation on n wires is tail . (E(1,0,1) x ... x E(1,0,1)) . id.
  void leavePure() {
    if (!isPure_) return;
    isPure_ = false;
    tail_ = pure_;
    center_.assign(pure_.size(), EBlock{1, 0, 1});
    head_ = Perm::identity(pure_.size());
  }

  std::size_t outputStart(std::size_t block) const {
    std::size_t s = 0;
    for (std::size_t k = 0; k < block; ++k) s += center_[k].outs;
    return s;
  }

  std::size_t blockOfOutput(std::size_t pos) const {
    std::size_t s = 0;
    for (std::size_t k = 0; k < center_.size(); ++k) {
      s += center_[k].outs;
      if (pos < s) return k;
    }
    throw Error(Errc::IndexOutOfRange, "center output " + std::to_string(pos) + " has no block");
  }

  void absorbDelta(std::size_t l) {
    const std::size_t p = tail_.size();
    Factored f = factorOut(tail_, l);
    const std::size_t u = blockOfOutput(f.j);
    tail_ = compose(padded(0, blockTau(2, l), p - l - 1),
                    compose(blockSum(Perm::identity(2), f.rest), padded(0, blockTau(f.j, 2), p - f.j - 1)));
    center_[u].outs += 1;
  }

  void absorbEps(std::size_t l) {
    Factored f = factorOut(tail_, l);
    const std::size_t u = blockOfOutput(f.j);
    tail_ = std::move(f.rest);
    center_[u].outs -= 1;
  }

  void absorbEta(std::size_t l) {
    const std::size_t p = tail_.size();
    tail_ = compose(padded(0, blockTau(1, l), p - l), blockSum(Perm::identity(1), tail_));
    center_.insert(center_.begin(), EBlock{1, 0, 0});
  }

  void absorbMu(std::size_t l) {
    const std::size_t p = tail_.size();
    makeParallel(l);
    Factored f = factorOutPair(tail_, l);
    const std::size_t u = blockOfOutput(f.j);
    const std::size_t v = blockOfOutput(f.j + 1);
    tail_ = compose(padded(0, blockTau(1, l), p - l - 2),
                    compose(blockSum(Perm::identity(1), f.rest), padded(0, blockTau(f.j, 1), p - f.j - 2)));
    if (u == v) {
      center_[u].outs -= 1;
      center_[u].genus += 1;
    } else {
      EBlock merged{center_[u].outs + center_[v].outs - 1, center_[u].genus + center_[v].genus,
                    center_[u].ins + center_[v].ins};
      center_[u] = merged;
      center_.erase(center_.begin() + static_cast<std::ptrdiff_t>(v));
    }
  }

  // Reorders block outputs (absorbed by the block) and, when the two wires
  // come from different blocks, moves the second block next to the first, so
  // that l and l+1 end up parallel in the tail.
  void makeParallel(std::size_t l) {
    const Perm inv = tail_.inverse();
    const std::size_t u = blockOfOutput(inv(l));
    std::size_t v = blockOfOutput(inv(l + 1));
    if (u == v) {
      reorderOutputs(u, [](std::vector<std::uint32_t>& targets) { std::sort(targets.begin(), targets.end()); });
      return;
    }
    std::size_t uNow = u;
    if (v != u + 1) {
      std::vector<std::size_t> order;
      for (std::size_t k = 0; k < center_.size(); ++k) {
        if (k == v) continue;
        order.push_back(k);
        if (k == u) order.push_back(v);
      }
      permuteBlocks(order);
      uNow = static_cast<std::size_t>(std::find(order.begin(), order.end(), u) - order.begin());
    }
    const auto lt = static_cast<std::uint32_t>(l);
    reorderOutputs(uNow, [lt](std::vector<std::uint32_t>& targets) {
      std::sort(targets.begin(), targets.end());
      std::rotate(std::find(targets.begin(), targets.end(), lt), std::find(targets.begin(), targets.end(), lt) + 1,
                  targets.end());
    });
    reorderOutputs(uNow + 1, [lt](std::vector<std::uint32_t>& targets) {
      std::sort(targets.begin(), targets.end());
      auto it = std::find(targets.begin(), targets.end(), lt + 1);
      std::rotate(targets.begin(), it, it + 1);
    });
  }

  template <class F>
  void reorderOutputs(std::size_t block, F&& arrange) {
    const std::size_t s = outputStart(block);
    std::vector<std::uint32_t> targets;
    for (std::size_t k = 0; k < center_[block].outs; ++k) targets.push_back(tail_(s + k));
    arrange(targets);
    std::vector<std::uint32_t> img = tail_.image();
    std::copy(targets.begin(), targets.end(), img.begin() + static_cast<std::ptrdiff_t>(s));
    tail_ = Perm(std::move(img));
  }

  // f1 x f2 = tau . (f2 x f1) . tau, applied to reorder the whole center.
  void permuteBlocks(const std::vector<std::size_t>& order) {
    std::vector<std::size_t> inStart(center_.size()), outStart(center_.size());
    std::size_t in = 0, out = 0;
    for (std::size_t k = 0; k < center_.size(); ++k) {
      inStart[k] = in;
      outStart[k] = out;
      in += center_[k].ins;
      out += center_[k].outs;
    }
    std::vector<std::uint32_t> inMove(in), outMove(out);  // old position -> new position
    std::vector<EBlock> reordered;
    std::uint32_t newIn = 0, newOut = 0;
    for (std::size_t k : order) {
      const EBlock& b = center_[k];
      for (std::uint32_t i = 0; i < b.ins; ++i) inMove[inStart[k] + i] = newIn++;
      for (std::uint32_t o = 0; o < b.outs; ++o) outMove[outStart[k] + o] = newOut++;
      reordered.push_back(b);
    }
    const Perm sigmaIn(std::move(inMove));
    const Perm sigmaOut(std::move(outMove));
    center_ = std::move(reordered);
    head_ = compose(sigmaIn, head_);
    tail_ = compose(tail_, sigmaOut.inverse());
  }

  bool isPure_ = true;
  Perm pure_;
  Perm tail_;
  std::vector<EBlock> center_;
  Perm head_;
};

}  // namespace detail

/// Rewrites a well-typed term into an equal special term.
inline SpecialTerm toSpecial(const Term& t) {
  const TermType ty = typecheck(t);
  detail::SpecialBuilder builder(ty.source);
  for (const Slice& s : slices(t)) builder.absorb(s);
  return builder.result();
}

/// Sorts the blocks of a special term into the canonical order and wires
/// each block's ports in increasing order.
inline NormalForm toNormal(const SpecialTerm& s) {
  Shaped sh = s.isPureTau()
                  ? Shaped{s.pureTau(), std::vector<EBlock>(s.pureTau().size(), EBlock{1, 0, 1}),
                           Perm::identity(s.pureTau().size())}
                  : s.shaped();

  struct Placed {
    EBlock block;
    std::vector<std::uint32_t> sources;
    std::vector<std::uint32_t> targets;
  };
  const Perm chiInv = sh.head.inverse();
  std::vector<Placed> closed, inputOnly, outputOnly, mixed;
  std::uint32_t in = 0, out = 0;
  for (const EBlock& b : sh.center) {
    Placed pl{b, {}, {}};
    for (std::uint32_t k = 0; k < b.ins; ++k) pl.sources.push_back(chiInv(in++));
    for (std::uint32_t k = 0; k < b.outs; ++k) pl.targets.push_back(sh.tail(out++));
    std::sort(pl.sources.begin(), pl.sources.end());
    std::sort(pl.targets.begin(), pl.targets.end());
    if (b.ins == 0 && b.outs == 0) {
      closed.push_back(std::move(pl));
    } else if (b.outs == 0) {
      inputOnly.push_back(std::move(pl));
    } else if (b.ins == 0) {
      outputOnly.push_back(std::move(pl));
    } else {
      mixed.push_back(std::move(pl));
    }
  }
  std::stable_sort(closed.begin(), closed.end(),
                   [](const Placed& a, const Placed& b) { return a.block.genus < b.block.genus; });
  auto firstSource = [](const Placed& a, const Placed& b) { return a.sources.front() < b.sources.front(); };
  auto firstTarget = [](const Placed& a, const Placed& b) { return a.targets.front() < b.targets.front(); };
  std::sort(inputOnly.begin(), inputOnly.end(), firstSource);
  std::sort(outputOnly.begin(), outputOnly.end(), firstTarget);
  std::sort(mixed.begin(), mixed.end(), firstTarget);

  NormalForm nf;
  std::vector<std::uint32_t> chi(sh.head.size()), pi(sh.tail.size());
  std::uint32_t inPos = 0, outPos = 0;
  auto wire = [&](const Placed& pl) {
    for (auto w : pl.sources) chi[w] = inPos++;
    for (auto w : pl.targets) pi[outPos++] = w;
  };
  for (const auto& pl : closed) nf.closed.push_back(pl.block.genus);
  for (const auto& pl : inputOnly) {
    nf.inputOnly.push_back({pl.block.genus, pl.block.ins});
    wire(pl);
  }
  for (const auto& pl : outputOnly) {
    nf.outputOnly.push_back({pl.block.genus, pl.block.outs});
    wire(pl);
  }
  for (const auto& pl : mixed) {
    nf.mixed.push_back(pl.block);
    wire(pl);
  }
  nf.head = Perm(std::move(chi));
  nf.tail = Perm(std::move(pi));
  return nf;
}

/// Normal form by syntactic rewriting.
inline NormalForm normalize(const Term& t) { return toNormal(toSpecial(t)); }

/// Normal form read off the cobordism interpretation; independent of the rewriter.
inline NormalForm normalizeSemantic(const Term& t) { return normalOfSkeleton(cobSkeleton(t)); }

/// Equality of arrows: same type and identical normal forms. Terms of
/// different types are unequal and `note` (when given) says why.
inline bool equal(const Term& f, const Term& g, std::string* note = nullptr) {
  const TermType tf = typecheck(f);
  const TermType tg = typecheck(g);
  if (!(tf == tg)) {
    if (note) {
      *note = "type mismatch: " + std::to_string(tf.source) + " -> " + std::to_string(tf.target) + " vs " +
              std::to_string(tg.source) + " -> " + std::to_string(tg.target);
    }
    return false;
  }
  return normalize(f) == normalize(g);
}

}  // namespace frobius
