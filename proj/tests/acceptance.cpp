// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "enumerate.hpp"
#include "frobius/frobius.hpp"

using namespace frobius;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string rowsOf(const ExactMatrix& m) {
  std::ostringstream os;
  printMatrix(os, m);
  return os.str();
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FROBIUS_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExactMatrix randomSquare(std::mt19937_64& rng, std::size_t p) {
  std::uniform_int_distribution<int> entry(-50, 50);
  ExactMatrix x(p, p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) x(i, j) = entry(rng);
  return x;
}

Outcome goldenMatrices() {
  Outcome o;
  o.require(rowsOf(brauerB(s0::mu(), 2)) == golden("brauer_mu_p2.txt"), "B(mu) at p=2");
  o.require(rowsOf(brauerB(s0::eps(), 2)) == golden("brauer_eps_p2.txt"), "B(eps) at p=2");
  o.require(rowsOf(symMatrix<BigInt>(3, 2)) == golden("sym_3_2.txt"), "S(3,2)");
  o.require(!golden("brauer_mu_p2.txt").empty(), "golden files missing");
  return o;
}

Outcome matrixIdentities() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u}) {
    const auto bmu = brauerB(s0::mu(), p), beps = brauerB(s0::eps(), p);
    for (int i = 0; i < 100; ++i) {
      const ExactMatrix x = randomSquare(rng, p), y = randomSquare(rng, p);
      o.require(hIso(matMul(bmu, h2IsoInv(kron(x, y), p)), p) == matMul(x, y), "product identity, p=" + std::to_string(p));
      o.require(matMul(beps, hIsoInv(x, p)) == ExactMatrix(1, 1, {trace(x)}), "trace identity, p=" + std::to_string(p));
    }
  }
  return o;
}

Outcome workedEntry() {
  Outcome o;
  const auto k = parseDiagram("--++- ; --+ ; (i0 o1)(i1 o0)(i3 o2)(i2 i4) ; 0");
  const auto k1 = parseDiagram("-- ; -- ; (i0 o1)(i1 o0) ; 0");
  const auto k2 = parseDiagram("++- ; + ; (i1 o0)(i0 i2) ; 0");
  const auto a = matrixA(k, 2), x = matrixA(k1, 2), y = matrixA(k2, 2);
  o.require(a(5, 10) == 1, "entry (5,10)");
  o.require(tensorDiagram(k1, k2) == k, "split reassembles the diagram");
  o.require(a(5, 10) == x(2, 1) * y(1, 2) && x(2, 1) == 1 && y(1, 2) == 1, "Kronecker cross-check");
  o.require(a == kron(x, y), "full Kronecker agreement");
  return o;
}

Outcome functorLaws() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto [g, f] = randomComposable(rng, 4);
    const auto h = randomDiagramBeside(rng, f);
    const Signs s1 = randomSigns(rng, 1 + rng() % 2), s2 = randomSigns(rng, 1 + rng() % 2);
    for (std::uint32_t p : {2u, 3u}) {
      const auto bf = brauerB(f, p);
      o.require(brauerB(composeDiagram(g, f), p) == matMul(brauerB(g, p), bf),
                "composition: " + printDiagram(g) + " after " + printDiagram(f));
      o.require(brauerB(tensorDiagram(f, h), p) == kron(bf, brauerB(h, p)), "tensor: " + printDiagram(f));
      o.require(brauerB(symmetryDiagram(s1, s2), p) ==
                    symMatrix<BigInt>(checkedPow(p, s1.size(), 1u << 20), checkedPow(p, s2.size(), 1u << 20)),
                "symmetry: " + signsToString(s1) + "," + signsToString(s2));
    }
  }
  return o;
}

Outcome zeroSphere() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u}) {
    const FrobeniusReport r = checkFrobenius(matrixAlgebra(p));
    const std::string at = " at p=" + std::to_string(p);
    o.require(r.assoc && r.unit && r.coass && r.counit && r.frob, "Frobenius axioms" + at);
    o.require(r.symmetric, "symmetric law" + at);
    o.require(!r.com, "commutativity should fail" + at);
  }
  return o;
}

Outcome axiomSuite() {
  Outcome o;
  std::set<std::string> schemas;
  for (const auto& ax : axiomInstances(3)) {
    schemas.insert(ax.schema);
    o.require(equal(ax.lhs, ax.rhs), ax.schema + ": " + print(ax.lhs) + " = " + print(ax.rhs));
  }
  o.require(schemas.size() == 13, "expected 13 schemata, found " + std::to_string(schemas.size()));
  return o;
}

// equal(f,g) holds exactly when the normal forms agree, so the biconditional
// over all pairs is that the term -> normal form and term -> skeleton maps
// induce the same partition.
struct PartitionCheck {
  std::unordered_map<std::string, std::string> skeletonOfNf, nfOfSkeleton;
  std::unordered_map<std::string, Term> witness;

  void add(const Term& t, Outcome& o) {
    const NormalForm nf = normalize(t);
    const CobSkeleton s = cobSkeleton(t);
    const TermType ty = typecheck(t);
    const std::string type = std::to_string(ty.source) + ">" + std::to_string(ty.target) + ":";
    const std::string nfKey = type + toJson(nf).dump(), sKey = type + toJson(s).dump();
    if (skeletonOfNf.emplace(nfKey, sKey).first->second != sKey) {
      o.require(false, "equal normal forms, different skeletons: " + print(t));
    }
    auto [b, newS] = nfOfSkeleton.emplace(sKey, nfKey);
    if (b->second != nfKey) o.require(false, "equal skeletons, different normal forms: " + print(t));
    if (newS) {
      witness.emplace(sKey, t);
    } else if (!equal(witness.at(sKey), t)) {
      o.require(false, "equal() disagrees on " + print(t));
    }
    if (normalOfSkeleton(cobSkeleton(expandToTerm(nf))) != nf) o.require(false, "round trip: " + print(t));
  }
};

Outcome faithfulness() {
  Outcome o;
  PartitionCheck small;
  std::size_t count = 0;
  const auto groups = enumerate::bySize(7);
  o.require(!groups[7].empty(), "no seven-node terms enumerated");
  for (const auto& group : groups) {
    for (const auto& t : group) {
      small.add(t.term, o);
      ++count;
    }
  }
  o.require(count > 50000, "enumeration too small: " + std::to_string(count));

  // Terms of the same type with different skeletons must compare unequal.
  std::map<std::string, std::vector<Term>> byType;
  for (const auto& [sKey, t] : small.witness) byType[sKey.substr(0, sKey.find(':'))].push_back(t);
  for (const auto& [type, reps] : byType) {
    for (std::size_t i = 0; i + 1 < reps.size() && i < 200; ++i) {
      o.require(!equal(reps[i], reps[i + 1]), "distinct skeletons compared equal: " + print(reps[i]));
    }
  }

  PartitionCheck random;
  TermGenerator gen(7, {.maxNodes = 25, .maxWires = 4});
  for (int i = 0; i < 10000; ++i) {
    const Term t = gen.next();
    o.require(t.size() <= 25, "generator exceeded 25 nodes");
    random.add(t, o);
  }
  if (o.ok) o.detail = std::to_string(count) + " enumerated terms";
  return o;
}

Outcome eulerAdditivity() {
  Outcome o;
  TermGenerator gen(8);
  for (int i = 0; i < 10000; ++i) {
    const Term f = gen.next();
    const Term g = gen.next(static_cast<std::uint32_t>(typecheck(f).target), 12);
    const auto sf = cobSkeleton(f), sg = cobSkeleton(g);
    const auto sum = eulerCharacteristic(sf) + eulerCharacteristic(sg);
    o.require(eulerCharacteristic(composeSkeleton(sg, sf)) == sum, "composition: " + print(g) + " after " + print(f));
    o.require(eulerCharacteristic(tensorSkeleton(sf, sg)) == sum, "tensor: " + print(f));
  }
  return o;
}

Outcome tqftAgreement() {
  Outcome o;
  const AlgebraData diag = loadAlgebra(std::string(FROBIUS_DATA_DIR) + "/diagonal-D2.json");
  const Evaluator ev(diag);
  TermGenerator gen(9, {.maxNodes = 25, .maxWires = 3});
  for (int i = 0; i < 200; ++i) {
    const Term t = gen.next();
    o.require(ev.normal(normalize(t)) == ev.matrix(t), "evaluation paths differ: " + print(t));
  }
  o.require(closedInvariant(0, diag) == 2, "sphere value");
  for (std::uint32_t g = 0; g <= 3; ++g) {
    std::string word = "eps";
    for (std::uint32_t k = 0; k < g; ++k) word += " . mu . delta";
    word += " . eta";
    o.require(RationalMatrix(1, 1, {closedInvariant(g, diag)}) == ev.matrix(parse(word)),
              "closed invariant, genus " + std::to_string(g));
  }
  return o;
}

Outcome separation() {
  Outcome o;
  o.require(!equal(parse("mu . delta"), parse("id1")), "mu . delta = id1");
  o.require(!equal(parse("eps . mu . delta . eta"), parse("eps . eta")), "torus = sphere");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budgetSeconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "golden matrices", 1, goldenMatrices},
      {2, "product and trace identities", 5, matrixIdentities},
      {3, "worked entry and Kronecker split", 1, workedEntry},
      {4, "Brauer functor laws", 30, functorLaws},
      {5, "zero-sphere Frobenius structure", 5, zeroSphere},
      {6, "axiom schemata", 10, axiomSuite},
      {7, "faithfulness at small scale", 120, faithfulness},
      {8, "Euler characteristic additivity", 30, eulerAdditivity},
      {9, "TQFT evaluation agreement", 30, tqftAgreement},
      {10, "distinct surfaces separated", 1, separation},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.budgetSeconds) {
      o.ok = false;
      o.detail = "over time budget of " + std::to_string(static_cast<int>(c.budgetSeconds)) + " s";
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!o.detail.empty()) std::cout << " - " << o.detail;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
