#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "frobius/error.hpp"
#include "frobius/normal_form.hpp"
#include "frobius/perm.hpp"
#include "frobius/term.hpp"

namespace frobius {

/// A connected surface with boundary circles at the listed ports.
struct Component {
  std::vector<std::uint32_t> in;
  std::vector<std::uint32_t> out;
  std::uint32_t genus = 0;

  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Arrow of the 2-dimensional cobordism category up to homeomorphism:
/// components keyed by their boundary ports, plus the genera of closed pieces.
///
/// Values are kept canonical (ports sorted, components sorted, closed sorted)
/// so that equality of arrows is structural equality.
struct CobSkeleton {
  std::uint32_t nIn = 0;
  std::uint32_t nOut = 0;
  std::vector<Component> components;
  std::vector<std::uint32_t> closed;

  friend bool operator==(const CobSkeleton&, const CobSkeleton&) = default;
};

inline void canonicalize(CobSkeleton& s) {
  for (auto& c : s.components) {
    std::sort(c.in.begin(), c.in.end());
    std::sort(c.out.begin(), c.out.end());
  }
  std::sort(s.components.begin(), s.components.end());
  std::sort(s.closed.begin(), s.closed.end());
}

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

inline CobSkeleton identitySkeleton(std::uint32_t n) {
  CobSkeleton s{n, n, {}, {}};
  for (std::uint32_t i = 0; i < n; ++i) s.components.push_back({{i}, {i}, 0});
  return s;
}

inline CobSkeleton generatorSkeleton(const Term& g) {
  switch (g.kind()) {
    case Kind::Id: return identitySkeleton(g.n());
    case Kind::Tau: {
      Perm p = blockTau(g.n(), g.m());
      const auto n = static_cast<std::uint32_t>(p.size());
      CobSkeleton s{n, n, {}, {}};
      for (std::uint32_t i = 0; i < n; ++i) s.components.push_back({{i}, {p(i)}, 0});
      canonicalize(s);
      return s;
    }
    case Kind::Mu: return {2, 1, {{{0, 1}, {0}, 0}}, {}};
    case Kind::Eta: return {0, 1, {{{}, {0}, 0}}, {}};
    case Kind::Delta: return {1, 2, {{{0}, {0, 1}, 0}}, {}};
    case Kind::Eps: return {1, 0, {{{0}, {}, 0}}, {}};
    default: break;
  }
  throw Error(Errc::BadInput, "not a generator");
}

/// Glues g on top of f along f's outputs. A merged cluster of V pieces joined
/// by E circles gains E - V + 1 handles.
inline CobSkeleton composeSkeleton(const CobSkeleton& g, const CobSkeleton& f) {
  if (f.nOut != g.nIn) {
    throw Error(Errc::ArityMismatch, "cannot glue " + std::to_string(f.nOut) + " outputs onto " +
                                         std::to_string(g.nIn) + " inputs");
  }
  const std::size_t nf = f.components.size();
  const std::size_t ng = g.components.size();
  std::vector<std::size_t> fOwner(f.nOut), gOwner(g.nIn);
  for (std::size_t c = 0; c < nf; ++c) {
    for (auto j : f.components[c].out) fOwner[j] = c;
  }
  for (std::size_t c = 0; c < ng; ++c) {
    for (auto j : g.components[c].in) gOwner[j] = nf + c;
  }
  UnionFind uf(nf + ng);
  for (std::uint32_t j = 0; j < f.nOut; ++j) uf.unite(fOwner[j], gOwner[j]);

  struct Cluster {
    std::uint64_t genus = 0;
    std::int64_t edges = 0;
    std::int64_t members = 0;
    Component merged;
    bool used = false;
  };
  std::vector<Cluster> clusters(nf + ng);
  for (std::uint32_t j = 0; j < f.nOut; ++j) clusters[uf.find(fOwner[j])].edges += 1;
  for (std::size_t c = 0; c < nf + ng; ++c) {
    Cluster& cl = clusters[uf.find(c)];
    cl.used = true;
    cl.members += 1;
    if (c < nf) {
      const Component& comp = f.components[c];
      cl.genus += comp.genus;
      cl.merged.in.insert(cl.merged.in.end(), comp.in.begin(), comp.in.end());
    } else {
      const Component& comp = g.components[c - nf];
      cl.genus += comp.genus;
      cl.merged.out.insert(cl.merged.out.end(), comp.out.begin(), comp.out.end());
    }
  }
  CobSkeleton r{f.nIn, g.nOut, {}, f.closed};
  r.closed.insert(r.closed.end(), g.closed.begin(), g.closed.end());
  for (auto& cl : clusters) {
    if (!cl.used) continue;
    cl.merged.genus = static_cast<std::uint32_t>(cl.genus + static_cast<std::uint64_t>(cl.edges - cl.members + 1));
    if (cl.merged.in.empty() && cl.merged.out.empty()) {
      r.closed.push_back(cl.merged.genus);
    } else {
      r.components.push_back(std::move(cl.merged));
    }
  }
  canonicalize(r);
  return r;
}

/// Places g to the right of f.
inline CobSkeleton tensorSkeleton(const CobSkeleton& f, const CobSkeleton& g) {
  CobSkeleton r{f.nIn + g.nIn, f.nOut + g.nOut, f.components, f.closed};
  for (Component c : g.components) {
    for (auto& i : c.in) i += f.nIn;
    for (auto& o : c.out) o += f.nOut;
    r.components.push_back(std::move(c));
  }
  r.closed.insert(r.closed.end(), g.closed.begin(), g.closed.end());
  canonicalize(r);
  return r;
}

/// The interpretation of a term as a cobordism skeleton.
inline CobSkeleton cobSkeleton(const Term& t) {
  return foldTerm<CobSkeleton>(
      t, [](const Term& g) { return generatorSkeleton(g); },
      [&](const Term& node, CobSkeleton g, CobSkeleton f) {
        if (f.nOut != g.nIn) throw TypeMismatchError(g.nIn, f.nOut, subtermPath(t, node));
        return composeSkeleton(g, f);
      },
      [](const Term&, CobSkeleton l, CobSkeleton r) { return tensorSkeleton(l, r); });
}

/// Sum over pieces of 2 - 2g - (boundary circles).
inline std::int64_t eulerCharacteristic(const CobSkeleton& s) {
  std::int64_t chi = 0;
  for (const auto& c : s.components) {
    chi += 2 - 2 * static_cast<std::int64_t>(c.genus) - static_cast<std::int64_t>(c.in.size() + c.out.size());
  }
  for (auto g : s.closed) chi += 2 - 2 * static_cast<std::int64_t>(g);
  return chi;
}

struct Port {
  std::uint32_t index;
  std::uint32_t side;  // 0 input, 1 output

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// Ports grouped by the component they bound; genus and closed pieces forgotten.
inline std::vector<std::vector<Port>> rho(const CobSkeleton& s) {
  std::vector<std::vector<Port>> classes;
  for (const auto& c : s.components) {
    std::vector<Port> cls;
    for (auto i : c.in) cls.push_back({i, 0});
    for (auto o : c.out) cls.push_back({o, 1});
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// True when s is the skeleton of a symmetry: no closed pieces and every
/// component a genus-0 cylinder.
inline bool isIsomorphismShape(const CobSkeleton& s) {
  if (!s.closed.empty()) return false;
  return std::all_of(s.components.begin(), s.components.end(), [](const Component& c) {
    return c.in.size() == 1 && c.out.size() == 1 && c.genus == 0;
  });
}

/// Reads the port partition and genera back off a normal form.
inline CobSkeleton skeletonOfNormal(const NormalForm& nf) {
  const Perm chiInv = nf.head.inverse();
  CobSkeleton s{static_cast<std::uint32_t>(nf.source()), static_cast<std::uint32_t>(nf.target()), {},
                nf.closed};
  std::uint32_t inPos = 0, outPos = 0;
  for (const EBlock& b : nf.center()) {
    Component c;
    c.genus = b.genus;
    for (std::uint32_t k = 0; k < b.ins; ++k) c.in.push_back(chiInv(inPos++));
    for (std::uint32_t k = 0; k < b.outs; ++k) c.out.push_back(nf.tail(outPos++));
    if (b.ins == 0 && b.outs == 0) continue;  // already in closed
    s.components.push_back(std::move(c));
  }
  canonicalize(s);
  return s;
}

/// The unique normal form with skeleton s.
inline NormalForm normalOfSkeleton(const CobSkeleton& s) {
  std::vector<const Component*> inputOnly, outputOnly, mixed;
  for (const auto& c : s.components) {
    if (c.out.empty()) {
      inputOnly.push_back(&c);
    } else if (c.in.empty()) {
      outputOnly.push_back(&c);
    } else {
      mixed.push_back(&c);
    }
  }
  auto byLeastIn = [](const Component* a, const Component* b) { return a->in.front() < b->in.front(); };
  auto byLeastOut = [](const Component* a, const Component* b) { return a->out.front() < b->out.front(); };
  std::sort(inputOnly.begin(), inputOnly.end(), byLeastIn);
  std::sort(outputOnly.begin(), outputOnly.end(), byLeastOut);
  std::sort(mixed.begin(), mixed.end(), byLeastOut);

  NormalForm nf;
  nf.closed = s.closed;
  std::sort(nf.closed.begin(), nf.closed.end());
  std::vector<std::uint32_t> chi(s.nIn), pi(s.nOut);
  std::uint32_t inPos = 0, outPos = 0;
  auto wire = [&](const Component& c) {
    for (auto i : c.in) chi[i] = inPos++;  // ports are sorted
    for (auto o : c.out) pi[outPos++] = o;
  };
  for (auto* c : inputOnly) {
    nf.inputOnly.push_back({c->genus, static_cast<std::uint32_t>(c->in.size())});
    wire(*c);
  }
  for (auto* c : outputOnly) {
    nf.outputOnly.push_back({c->genus, static_cast<std::uint32_t>(c->out.size())});
    wire(*c);
  }
  for (auto* c : mixed) {
    nf.mixed.push_back({static_cast<std::uint32_t>(c->out.size()), c->genus,
                        static_cast<std::uint32_t>(c->in.size())});
    wire(*c);
  }
  nf.head = Perm(std::move(chi));
  nf.tail = Perm(std::move(pi));
  return nf;
}

}  // namespace frobius
