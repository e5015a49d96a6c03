#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobius/error.hpp"
#include "frobius/matrix.hpp"
#include "frobius/normal_form.hpp"
#include "frobius/skeleton.hpp"
#include "frobius/tqft.hpp"

// JSON records use insertion-ordered objects so that output is byte-stable.
//
//   NormalForm: {closed:[g], inputOnly:[{genus,ins}], outputOnly:[{genus,outs}],
//                mixed:[{outs,genus,ins}], head:[image], tail:[image]}
//   CobSkeleton: {nIn, nOut, components:[{in:[..], out:[..], genus}], closed:[g]}
//   Matrix: {rows, cols, entries:[string]} with entries row-major, integers as
//           decimal strings and rationals as "num/den" (or "num" when den = 1)
//   AlgebraData: {dim, mul, unit, comul, counit}, each a row-major entry array

namespace frobius {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::BadInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::uint32_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw Error(Errc::BadInput, std::string(what) + " must be a natural number");
  }
  return j.get<std::uint32_t>();
}

inline std::vector<std::uint32_t> naturals(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(Errc::BadInput, std::string(what) + " must be an array");
  std::vector<std::uint32_t> v;
  for (const auto& x : j) v.push_back(natural(x, what));
  return v;
}

inline Perm permFromJson(const Json& j, const char* what) {
  try {
    return Perm(naturals(j, what));
  } catch (const Error& e) {
    throw Error(Errc::BadInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace detail

inline Json toJson(const NormalForm& nf) {
  Json j;
  j["closed"] = nf.closed;
  j["inputOnly"] = Json::array();
  for (auto b : nf.inputOnly) j["inputOnly"].push_back({{"genus", b.genus}, {"ins", b.ins}});
  j["outputOnly"] = Json::array();
  for (auto b : nf.outputOnly) j["outputOnly"].push_back({{"genus", b.genus}, {"outs", b.outs}});
  j["mixed"] = Json::array();
  for (auto b : nf.mixed) j["mixed"].push_back({{"outs", b.outs}, {"genus", b.genus}, {"ins", b.ins}});
  j["head"] = nf.head.image();
  j["tail"] = nf.tail.image();
  return j;
}

inline NormalForm normalFormFromJson(const Json& j) {
  using namespace detail;
  NormalForm nf;
  nf.closed = naturals(member(j, "closed"), "closed");
  for (const auto& b : member(j, "inputOnly")) {
    nf.inputOnly.push_back({natural(member(b, "genus"), "genus"), natural(member(b, "ins"), "ins")});
  }
  for (const auto& b : member(j, "outputOnly")) {
    nf.outputOnly.push_back({natural(member(b, "genus"), "genus"), natural(member(b, "outs"), "outs")});
  }
  for (const auto& b : member(j, "mixed")) {
    nf.mixed.push_back(
        {natural(member(b, "outs"), "outs"), natural(member(b, "genus"), "genus"), natural(member(b, "ins"), "ins")});
  }
  nf.head = permFromJson(member(j, "head"), "head");
  nf.tail = permFromJson(member(j, "tail"), "tail");
  if (auto v = normalFormViolations(nf); !v.empty()) throw Error(Errc::BadInput, "not a normal form: " + v.front());
  return nf;
}

inline Json toJson(const CobSkeleton& s) {
  Json j;
  j["nIn"] = s.nIn;
  j["nOut"] = s.nOut;
  j["components"] = Json::array();
  for (const auto& c : s.components) j["components"].push_back({{"in", c.in}, {"out", c.out}, {"genus", c.genus}});
  j["closed"] = s.closed;
  return j;
}

inline CobSkeleton skeletonFromJson(const Json& j) {
  using namespace detail;
  CobSkeleton s{natural(member(j, "nIn"), "nIn"), natural(member(j, "nOut"), "nOut"), {}, {}};
  for (const auto& c : member(j, "components")) {
    s.components.push_back(
        {naturals(member(c, "in"), "in"), naturals(member(c, "out"), "out"), natural(member(c, "genus"), "genus")});
  }
  s.closed = naturals(member(j, "closed"), "closed");
  canonicalize(s);
  return s;
}

inline std::string entryToString(const BigInt& x) { return x.str(); }

inline std::string entryToString(const Rational& x) {
  const BigInt num = numerator(x), den = denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline Rational parseRational(std::string_view text) {
  auto parseInt = [&](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string_view::npos) {
      throw Error(Errc::BadInput, "malformed rational '" + std::string(text) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parseInt(text));
  const BigInt den = parseInt(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::BadInput, "zero denominator in '" + std::string(text) + "'");
  return Rational(parseInt(text.substr(0, slash)), den);
}

template <class T>
Json toJson(const Matrix<T>& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(entryToString(x));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline RationalMatrix rationalEntries(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows * cols) {
    throw Error(Errc::ShapeMismatch, std::string(what) + " must list " + std::to_string(rows * cols) + " entries");
  }
  std::vector<Rational> v;
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(parseRational(x.get<std::string>()));
    } else if (x.is_number_integer()) {
      v.push_back(Rational(x.get<std::int64_t>()));
    } else {
      throw Error(Errc::BadInput, std::string(what) + " entries must be integers or \"num/den\" strings");
    }
  }
  return RationalMatrix(rows, cols, std::move(v));
}

inline AlgebraData algebraFromJson(const Json& j) {
  AlgebraData a;
  a.dim = detail::natural(detail::member(j, "dim"), "dim");
  const std::size_t d = a.dim;
  a.mul = rationalEntries(detail::member(j, "mul"), d, d * d, "mul");
  a.unit = rationalEntries(detail::member(j, "unit"), d, 1, "unit");
  a.comul = rationalEntries(detail::member(j, "comul"), d * d, d, "comul");
  a.counit = rationalEntries(detail::member(j, "counit"), 1, d, "counit");
  validateShapes(a);
  return a;
}

inline Json toJson(const AlgebraData& a) {
  auto flat = [](const RationalMatrix& m) {
    Json e = Json::array();
    for (const auto& x : m.entries()) e.push_back(entryToString(x));
    return e;
  };
  return Json{{"dim", a.dim}, {"mul", flat(a.mul)}, {"unit", flat(a.unit)}, {"comul", flat(a.comul)},
              {"counit", flat(a.counit)}};
}

inline AlgebraData loadAlgebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open algebra file '" + path + "'");
  try {
    return algebraFromJson(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(Errc::BadInput, "algebra file '" + path + "': " + e.what());
  }
}

inline Json toJson(const FrobeniusReport& r) {
  return Json{{"assoc", r.assoc},   {"unit", r.unit}, {"coass", r.coass}, {"counit", r.counit},
              {"frob", r.frob},     {"com", r.com},   {"cocom", r.cocom}, {"symmetric", r.symmetric}};
}

}  // namespace frobius
