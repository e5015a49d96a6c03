#include "commands.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include "frobius/frobius.hpp"

namespace frobius::cli {

namespace {

template <class T>
void printRows(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << entryToString(m(i, j));
    os << '\n';
  }
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string typeString(const TermType& t) { return std::to_string(t.source) + " -> " + std::to_string(t.target); }

}  // namespace

std::string readArg(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

int runCheck(const Config& cfg, const std::string& text) {
  const Term t = parse(readArg(text));
  const TermType ty = typecheck(t);
  if (cfg.json()) {
    emit(Json{{"term", print(t)}, {"source", ty.source}, {"target", ty.target}});
  } else {
    std::cout << typeString(ty) << '\n';
  }
  return 0;
}

int runNormalize(const Config& cfg, const std::string& text) {
  const NormalForm nf = normalize(parse(readArg(text)));
  const std::string printed = print(expandToTerm(nf));
  if (cfg.json()) {
    emit(Json{{"term", printed}, {"normalForm", toJson(nf)}});
    return 0;
  }
  auto blocks = [](const std::vector<EBlock>& bs) {
    std::string out;
    for (const auto& b : bs) {
      out += " E(" + std::to_string(b.outs) + "," + std::to_string(b.genus) + "," + std::to_string(b.ins) + ")";
    }
    return out;
  };
  auto images = [](const Perm& q) {
    std::string out;
    for (auto x : q.image()) out += " " + std::to_string(x);
    return out;
  };
  std::vector<EBlock> closed, inputOnly, outputOnly;
  for (auto g : nf.closed) closed.push_back({0, g, 0});
  for (auto b : nf.inputOnly) inputOnly.push_back({0, b.genus, b.ins});
  for (auto b : nf.outputOnly) outputOnly.push_back({b.outs, b.genus, 0});
  std::cout << "type " << nf.source() << " -> " << nf.target() << '\n'
            << "closed" << blocks(closed) << '\n'
            << "input-only" << blocks(inputOnly) << '\n'
            << "output-only" << blocks(outputOnly) << '\n'
            << "mixed" << blocks(nf.mixed) << '\n'
            << "head" << images(nf.head) << '\n'
            << "tail" << images(nf.tail) << '\n'
            << "term " << printed << '\n';
  return 0;
}

int runEq(const Config& cfg, const std::string& a, const std::string& b) {
  std::string note;
  const bool same = equal(parse(readArg(a)), parse(readArg(b)), &note);
  if (cfg.json()) {
    Json j{{"equal", same}};
    if (!note.empty()) j["note"] = note;
    emit(j);
  } else {
    std::cout << (same ? "equal" : "not equal") << (note.empty() ? "" : " (" + note + ")") << '\n';
  }
  return 0;
}

int runSkeleton(const Config& cfg, const std::string& text) {
  const CobSkeleton s = cobSkeleton(parse(readArg(text)));
  if (cfg.json()) {
    emit(toJson(s));
    return 0;
  }
  auto list = [](const std::vector<std::uint32_t>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
  };
  std::cout << s.nIn << " -> " << s.nOut << '\n';
  for (const auto& c : s.components) {
    std::cout << "component in=" << list(c.in) << " out=" << list(c.out) << " genus=" << c.genus << '\n';
  }
  std::cout << "closed " << list(s.closed) << '\n';
  std::cout << "euler " << eulerCharacteristic(s) << '\n';
  return 0;
}

int runCompose(const Config& cfg, const std::string& g, const std::string& f) {
  const OneCobDiagram d = composeDiagram(parseDiagram(readArg(g)), parseDiagram(readArg(f)));
  if (cfg.json()) {
    emit(Json{{"diagram", printDiagram(d)}, {"circles", d.circles()}});
  } else {
    std::cout << printDiagram(d) << '\n';
  }
  return 0;
}

int runBrauer(const Config& cfg, std::uint32_t p, const std::string& diagram, bool parts) {
  const OneCobDiagram k = parseDiagram(readArg(diagram));
  const ExactMatrix b = brauerB(k, p, cfg.guard());
  if (cfg.json()) {
    Json j{{"p", p}, {"matrix", toJson(b)}};
    if (parts) {
      j["c"] = k.circles();
      j["A"] = toJson(matrixA(k, p, cfg.guard()));
    }
    emit(j);
    return 0;
  }
  if (parts) {
    std::cout << "c = " << k.circles() << "\nA =\n";
    printRows(std::cout, matrixA(k, p, cfg.guard()));
    std::cout << "B =\n";
  }
  printRows(std::cout, b);
  return 0;
}

int runEval(const Config& cfg, const std::string& algebraPath, const std::string& termText, const std::string& via) {
  const Evaluator ev(loadAlgebra(algebraPath), cfg.guard());
  const Term t = parse(readArg(termText));
  const FrobeniusReport& report = ev.report();
  const bool wantTerm = via != "normal";
  const bool wantNormal = via == "normal" || (via == "both" && report.commutative());

  std::optional<EvalResult> byTerm;
  std::optional<RationalMatrix> byNormal;
  if (wantTerm) byTerm = ev.eval(t);
  if (wantNormal) byNormal = ev.normal(normalize(t));
  if (byTerm && byNormal && byTerm->matrix != *byNormal) {
    throw Error(Errc::BadInput, "term and normal-form evaluations disagree");
  }
  const RationalMatrix& m = byTerm ? byTerm->matrix : *byNormal;
  std::vector<std::string> warnings = byTerm ? byTerm->warnings : std::vector<std::string>{};
  if (!byTerm && !report.frobenius()) warnings.emplace_back(kNonFrobeniusWarning);

  if (cfg.json()) {
    // Agreement is null when only one path ran.
    Json j{{"matrix", toJson(m)}, {"checks", toJson(report)}, {"agreement", nullptr}};
    if (byTerm && byNormal) j["agreement"] = true;
    j["warnings"] = warnings;
    emit(j);
    return 0;
  }
  for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
  printRows(std::cout, m);
  if (byTerm && byNormal) std::cout << "term and normal-form evaluations agree\n";
  return 0;
}

int runFuzz(const Config& cfg, std::size_t scale) {
  const auto results = runPropertySuites(cfg.seed, scale);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    Json j{{"property", r.name}, {"cases", r.cases}, {"failures", r.failures}};
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    arr.push_back(j);
  }
  if (cfg.json()) {
    emit(Json{{"seed", cfg.seed}, {"results", arr}});
  } else {
    std::cout << "seed " << cfg.seed << '\n';
    for (const auto& r : results) {
      std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases";
      if (!r.ok()) std::cout << ", " << r.failures << " failures; " << *r.counterexample;
      std::cout << ")\n";
    }
  }
  return ok ? 0 : 1;
}

void reportError(const Config& cfg, const Error& e) {
  if (cfg.json()) {
    std::cout << Json{{"error", std::string(errcName(e.code()))}, {"message", e.what()}}.dump(2) << '\n';
  } else {
    std::cerr << "error: " << e.what() << '\n';
  }
}

}  // namespace frobius::cli
