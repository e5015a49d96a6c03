#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frobius/error.hpp"

namespace frobius {

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

using Signs = std::vector<Sign>;

inline Signs signsFromString(std::string_view s) {
  Signs out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else if (s.substr(i, 3) == "\xE2\x88\x92") {  // U+2212 minus sign
      out.push_back(Sign::Minus);
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(Errc::BadInput, std::string("bad sign character '") + c + "'");
    }
  }
  return out;
}

inline std::string signsToString(const Signs& s) {
  std::string out;
  for (Sign x : s) out += x == Sign::Plus ? '+' : '-';
  return out;
}

/// Boundary point of a 1-cobordism: side 0 is ingoing, side 1 outgoing.
struct Endpoint {
  std::uint32_t index = 0;
  std::uint32_t side = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

using EndpointPair = std::pair<Endpoint, Endpoint>;

/// An arrow of 1Cob: matched signed points plus a count of circular components.
///
/// Matching is stored as a partner table over endpoints numbered
/// in_0..in_{n-1}, out_0..out_{m-1}, which makes equality structural.
class OneCobDiagram {
 public:
  OneCobDiagram() = default;

  std::size_t nIn() const { return in_.size(); }
  std::size_t nOut() const { return out_.size(); }
  const Signs& inSigns() const { return in_; }
  const Signs& outSigns() const { return out_; }
  std::uint64_t circles() const { return circles_; }

  Endpoint partner(Endpoint e) const { return toEndpoint(partner_[flat(e)]); }

  /// Each matched pair once, smaller endpoint first, sorted.
  std::vector<EndpointPair> pairs() const {
    std::vector<EndpointPair> out;
    for (std::size_t e = 0; e < partner_.size(); ++e) {
      if (e < partner_[e]) out.emplace_back(toEndpoint(e), toEndpoint(partner_[e]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const OneCobDiagram&, const OneCobDiagram&) = default;

  friend OneCobDiagram makeDiagram(Signs, Signs, const std::vector<EndpointPair>&, std::uint64_t);
  friend OneCobDiagram composeDiagram(const OneCobDiagram&, const OneCobDiagram&);
  friend OneCobDiagram tensorDiagram(const OneCobDiagram&, const OneCobDiagram&);

 private:
  std::size_t flat(Endpoint e) const { return e.side == 0 ? e.index : in_.size() + e.index; }
  Endpoint toEndpoint(std::size_t f) const {
    return f < in_.size() ? Endpoint{static_cast<std::uint32_t>(f), 0}
                          : Endpoint{static_cast<std::uint32_t>(f - in_.size()), 1};
  }

  Signs in_;
  Signs out_;
  std::vector<std::size_t> partner_;
  std::uint64_t circles_ = 0;
};

/// Validates and builds a diagram. Ingoing points matched to each other carry
/// opposite signs, likewise outgoing ones; a through-strand keeps its sign.
inline OneCobDiagram makeDiagram(Signs inSigns, Signs outSigns, const std::vector<EndpointPair>& matching,
                                 std::uint64_t circles) {
  OneCobDiagram d;
  d.in_ = std::move(inSigns);
  d.out_ = std::move(outSigns);
  d.circles_ = circles;
  const std::size_t total = d.in_.size() + d.out_.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  d.partner_.assign(total, kUnset);
  auto check = [&](Endpoint e) {
    const std::size_t limit = e.side == 0 ? d.in_.size() : d.out_.size();
    if (e.side > 1 || e.index >= limit) {
      throw Error(Errc::BadMatching, "endpoint " + std::string(e.side == 0 ? "i" : "o") +
                                         std::to_string(e.index) + " does not exist");
    }
    return d.flat(e);
  };
  for (const auto& [a, b] : matching) {
    const std::size_t fa = check(a), fb = check(b);
    if (fa == fb || d.partner_[fa] != kUnset || d.partner_[fb] != kUnset) {
      throw Error(Errc::BadMatching, "endpoint matched more than once");
    }
    d.partner_[fa] = fb;
    d.partner_[fb] = fa;
    const Sign sa = a.side == 0 ? d.in_[a.index] : d.out_[a.index];
    const Sign sb = b.side == 0 ? d.in_[b.index] : d.out_[b.index];
    const bool sameSide = a.side == b.side;
    if (sameSide == (sa == sb)) {
      throw Error(Errc::SignClash, sameSide ? "cup or cap joins equal signs" : "through-strand changes sign");
    }
  }
  for (std::size_t e = 0; e < total; ++e) {
    if (d.partner_[e] == kUnset) throw Error(Errc::BadMatching, "endpoint left unmatched");
  }
  return d;
}

inline OneCobDiagram identityDiagram(const Signs& s) {
  std::vector<EndpointPair> m;
  for (std::uint32_t i = 0; i < s.size(); ++i) m.push_back({{i, 0}, {i, 1}});
  return makeDiagram(s, s, m, 0);
}

/// The block crossing s1 s2 -> s2 s1.
inline OneCobDiagram symmetryDiagram(const Signs& s1, const Signs& s2) {
  Signs in = s1, out = s2;
  in.insert(in.end(), s2.begin(), s2.end());
  out.insert(out.end(), s1.begin(), s1.end());
  const auto n1 = static_cast<std::uint32_t>(s1.size());
  const auto n2 = static_cast<std::uint32_t>(s2.size());
  std::vector<EndpointPair> m;
  for (std::uint32_t i = 0; i < n1; ++i) m.push_back({{i, 0}, {n2 + i, 1}});
  for (std::uint32_t j = 0; j < n2; ++j) m.push_back({{n1 + j, 0}, {j, 1}});
  return makeDiagram(std::move(in), std::move(out), m, 0);
}

/// g . f: glue f's outgoing points to g's ingoing points and follow strands.
inline OneCobDiagram composeDiagram(const OneCobDiagram& g, const OneCobDiagram& f) {
  if (f.nOut() != g.nIn()) {
    throw Error(Errc::ArityMismatch, std::to_string(f.nOut()) + " outgoing points glued to " +
                                         std::to_string(g.nIn()) + " ingoing points");
  }
  if (f.outSigns() != g.inSigns()) {
    throw Error(Errc::SignMismatch, "outgoing signs " + signsToString(f.outSigns()) +
                                        " do not match ingoing signs " + signsToString(g.inSigns()));
  }
  const std::size_t mid = f.nOut();
  std::vector<bool> visited(mid, false);
  std::vector<EndpointPair> pairs;

  // Walk from an outer endpoint until another outer endpoint is reached.
  // Positions: in f (side 0 of f = outer in), middle, in g (side 1 of g = outer out).
  auto walk = [&](bool inF, Endpoint start) -> Endpoint {
    Endpoint cur = start;
    bool onF = inF;
    while (true) {
      Endpoint nxt = onF ? f.partner(cur) : g.partner(cur);
      if (onF && nxt.side == 0) return {nxt.index, 0};
      if (!onF && nxt.side == 1) return {nxt.index, 1};
      visited[nxt.index] = true;
      // crossing the middle: f's out k is g's in k
      cur = onF ? Endpoint{nxt.index, 0} : Endpoint{nxt.index, 1};
      onF = !onF;
    }
  };
  for (std::uint32_t i = 0; i < f.nIn(); ++i) {
    Endpoint e{i, 0};
    Endpoint other = walk(true, e);
    if (e < other) pairs.push_back({e, other});
  }
  for (std::uint32_t k = 0; k < g.nOut(); ++k) {
    Endpoint e{k, 1};
    Endpoint other = walk(false, e);
    if (e < other) pairs.push_back({e, other});
  }
  std::uint64_t loops = 0;
  for (std::size_t k = 0; k < mid; ++k) {
    if (visited[k]) continue;
    ++loops;
    // trace the closed loop through middle point k
    Endpoint cur{static_cast<std::uint32_t>(k), 1};  // as f's outgoing point
    bool onF = true;
    do {
      visited[cur.index] = true;
      Endpoint nxt = onF ? f.partner(cur) : g.partner(cur);
      visited[nxt.index] = true;
      cur = onF ? Endpoint{nxt.index, 0} : Endpoint{nxt.index, 1};
      onF = !onF;
    } while (!(onF && cur.index == k));
  }
  return makeDiagram(f.inSigns(), g.outSigns(), pairs, f.circles() + g.circles() + loops);
}

/// f beside g: signs concatenate, g's points shift past f's.
inline OneCobDiagram tensorDiagram(const OneCobDiagram& f, const OneCobDiagram& g) {
  Signs in = f.inSigns(), out = f.outSigns();
  in.insert(in.end(), g.inSigns().begin(), g.inSigns().end());
  out.insert(out.end(), g.outSigns().begin(), g.outSigns().end());
  std::vector<EndpointPair> m = f.pairs();
  auto shift = [&](Endpoint e) {
    return Endpoint{e.index + static_cast<std::uint32_t>(e.side == 0 ? f.nIn() : f.nOut()), e.side};
  };
  for (auto [a, b] : g.pairs()) m.push_back({shift(a), shift(b)});
  return makeDiagram(std::move(in), std::move(out), m, f.circles() + g.circles());
}

/// The Frobenius structure of the 0-sphere, whose object is the sign pair "+-".
namespace s0 {

inline const Signs& object() {
  static const Signs s{Sign::Plus, Sign::Minus};
  return s;
}

/// Strand, cup, strand: +-+- -> +-.
inline OneCobDiagram mu() {
  return makeDiagram(signsFromString("+-+-"), signsFromString("+-"),
                     {{{0, 0}, {0, 1}}, {{1, 0}, {2, 0}}, {{3, 0}, {1, 1}}}, 0);
}

/// Mirror image of mu: +- -> +-+-.
inline OneCobDiagram delta() {
  return makeDiagram(signsFromString("+-"), signsFromString("+-+-"),
                     {{{0, 0}, {0, 1}}, {{1, 1}, {2, 1}}, {{1, 0}, {3, 1}}}, 0);
}

/// A cap: nothing -> +-.
inline OneCobDiagram eta() { return makeDiagram({}, signsFromString("+-"), {{{0, 1}, {1, 1}}}, 0); }

/// A cup: +- -> nothing.
inline OneCobDiagram eps() { return makeDiagram(signsFromString("+-"), {}, {{{0, 0}, {1, 0}}}, 0); }

inline OneCobDiagram id() { return identityDiagram(object()); }

inline OneCobDiagram tau() { return symmetryDiagram(object(), object()); }

}  // namespace s0

/// Text form: `signs_in ; signs_out ; pairs ; circles`, e.g.
/// `+-+- ; +- ; (i0 o0)(i1 i2)(i3 o1) ; 0`.
inline OneCobDiagram parseDiagram(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      fields.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (fields.size() != 4) throw Error(Errc::BadInput, "diagram needs 4 ';'-separated fields");
  Signs in = signsFromString(fields[0]);
  Signs out = signsFromString(fields[1]);

  std::vector<EndpointPair> pairs;
  std::string_view p = fields[2];
  std::size_t i = 0;
  auto skip = [&] {
    while (i < p.size() && std::isspace(static_cast<unsigned char>(p[i]))) ++i;
  };
  auto endpoint = [&]() -> Endpoint {
    skip();
    if (i >= p.size() || (p[i] != 'i' && p[i] != 'o')) throw Error(Errc::BadInput, "expected i<k> or o<k>");
    const std::uint32_t side = p[i] == 'i' ? 0 : 1;
    ++i;
    std::size_t digits = i;
    std::uint64_t v = 0;
    while (i < p.size() && std::isdigit(static_cast<unsigned char>(p[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(p[i] - '0');
      if (v > 1u << 20) throw Error(Errc::BadInput, "endpoint index too large");
      ++i;
    }
    if (digits == i) throw Error(Errc::BadInput, "endpoint index missing");
    return {static_cast<std::uint32_t>(v), side};
  };
  skip();
  while (i < p.size()) {
    if (p[i] != '(') throw Error(Errc::BadInput, "expected '(' in pair list");
    ++i;
    Endpoint a = endpoint();
    Endpoint b = endpoint();
    skip();
    if (i >= p.size() || p[i] != ')') throw Error(Errc::BadInput, "expected ')' in pair list");
    ++i;
    pairs.push_back({a, b});
    skip();
  }
  std::string c(fields[3]);
  c.erase(std::remove_if(c.begin(), c.end(), [](unsigned char ch) { return std::isspace(ch); }), c.end());
  if (c.empty() || !std::all_of(c.begin(), c.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw Error(Errc::BadInput, "circle count must be a natural number");
  }
  return makeDiagram(std::move(in), std::move(out), pairs, std::stoull(c));
}

inline std::string printDiagram(const OneCobDiagram& d) {
  std::string s = signsToString(d.inSigns()) + " ; " + signsToString(d.outSigns()) + " ; ";
  for (auto [a, b] : d.pairs()) {
    s += "(" + std::string(a.side == 0 ? "i" : "o") + std::to_string(a.index) + " " +
         std::string(b.side == 0 ? "i" : "o") + std::to_string(b.index) + ")";
  }
  return s + " ; " + std::to_string(d.circles());
}

}  // namespace frobius
