#pragma once
// Mod-2 cohomology of the hyperoctahedral groups as one bigraded ring with
// three interacting operations: cup product within a component, transfer
// product across components, and the diagonal coproduct.
//
// Basis: a gathered block (n, a0, {k: ak}) is the cup product inside
// component n of w(n)^a0 and g(k, n/2^k)^ak; it requires 2^k | n for every
// gamma level k. A basis monomial is a transfer product of blocks with
// pairwise distinct profiles (a0, {k: ak}); equal profiles merge with
// binomial parity on the components.

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfoct/gf2.hpp"

// Structural invariants stay armed in release builds; violations mean a bug
// in the calling algebra, not recoverable user input.
#define HOPFOCT_REQUIRE(cond, msg)                                    \
  do {                                                                \
    if (!(cond)) throw std::logic_error(std::string("hopfoct: ") + (msg)); \
  } while (0)

namespace hopfoct {

struct Bidegree {
  long comp = 0;
  long deg = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

using GammaMap = std::map<int, long>;                 // level k -> exponent
using Profile = std::pair<long, GammaMap>;            // (a0, gamma)

struct GatheredBlock {
  long comp = 0;
  long w = 0;
  GammaMap gamma;

  Profile profile() const { return {w, gamma}; }
  int maxLevel() const { return gamma.empty() ? 0 : gamma.rbegin()->first; }
  bool valid() const {
    if (comp < 1 || w < 0) return false;
    for (auto [k, a] : gamma)
      if (k < 1 || a < 1 || comp % (1L << k) != 0) return false;
    return true;
  }
  bool isUnit() const { return w == 0 && gamma.empty(); }

  friend bool operator==(const GatheredBlock&, const GatheredBlock&) = default;
  friend bool operator<(const GatheredBlock& x, const GatheredBlock& y) {
    if (x.gamma != y.gamma) return x.gamma < y.gamma;
    if (x.w != y.w) return x.w < y.w;
    return x.comp < y.comp;
  }
};

inline Bidegree blockBidegree(const GatheredBlock& b) {
  long d = b.w * b.comp;
  for (auto [k, a] : b.gamma) d += a * (b.comp - (b.comp >> k));
  return {b.comp, d};
}

// Sorted block list with pairwise distinct profiles; empty = the component-0
// unit.
using Monomial = std::vector<GatheredBlock>;

inline Bidegree monomialBidegree(const Monomial& m) {
  Bidegree t{0, 0};
  for (const auto& b : m) {
    Bidegree bb = blockBidegree(b);
    t.comp += bb.comp;
    t.deg += bb.deg;
  }
  return t;
}

inline bool monomialValid(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].valid()) return false;
    if (i && !(m[i - 1] < m[i])) return false;
    if (i && m[i - 1].profile() == m[i].profile()) return false;
  }
  return true;
}

class Element;

// ---------------------------------------------------------------------------
// Element: a GF(2) sum of monomials.

class Element {
public:
  Element() = default;
  static Element zero() { return Element(); }
  static Element monomial(Monomial m) {
    HOPFOCT_REQUIRE(monomialValid(m), "malformed monomial");
    Element e;
    e.terms_.insert(std::move(m));
    return e;
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::set<Monomial>& terms() const& { return terms_; }
  // Iterating a temporary's terms would dangle; force a named binding.
  const std::set<Monomial>& terms() && = delete;

  void toggle(const Monomial& m) {
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.insert(m);
    else
      terms_.erase(it);
  }

  Element& operator+=(const Element& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms_.clear();
      return *this;
    }
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return a.terms_ < b.terms_;
  }

  bool homogeneous(Bidegree* out = nullptr) const {
    if (terms_.empty()) return true;
    Bidegree d = monomialBidegree(*terms_.begin());
    for (const auto& m : terms_)
      if (monomialBidegree(m) != d) return false;
    if (out) *out = d;
    return true;
  }

private:
  std::set<Monomial> terms_;
};

// Generators.
inline Element unitB(long n) {
  if (n < 0) throw std::invalid_argument("unit component must be >= 0");
  if (n == 0) return Element::monomial({});
  return Element::monomial({GatheredBlock{n, 0, {}}});
}
inline Element wGen(long r, long exp = 1) {
  if (r < 1 || exp < 0) throw std::invalid_argument("w(r) needs r >= 1");
  if (exp == 0) return unitB(r);
  return Element::monomial({GatheredBlock{r, exp, {}}});
}
inline Element gammaGen(int k, long m, long exp = 1) {
  if (k < 1 || m < 1 || exp < 0 || k > 60)
    throw std::invalid_argument("g(k,m) needs k >= 1, m >= 1");
  if (exp == 0) return unitB(m << k);
  return Element::monomial({GatheredBlock{m << k, 0, {{k, exp}}}});
}

// ---------------------------------------------------------------------------
// Transfer product.

// Merge one block into a profile-keyed accumulator; false kills the monomial
// (even binomial coefficient).
inline bool mergeBlock(std::map<Profile, long>& acc, const GatheredBlock& b) {
  auto [it, fresh] = acc.try_emplace(b.profile(), b.comp);
  if (fresh) return true;
  if (!binomialOdd(static_cast<std::uint64_t>(it->second + b.comp),
                   static_cast<std::uint64_t>(b.comp)))
    return false;
  it->second += b.comp;
  return true;
}

inline Element transferMonomials(const Monomial& a, const Monomial& b) {
  std::map<Profile, long> acc;
  for (const auto& blk : a)
    if (!mergeBlock(acc, blk)) return Element::zero();
  for (const auto& blk : b)
    if (!mergeBlock(acc, blk)) return Element::zero();
  Monomial out;
  for (const auto& [prof, comp] : acc)
    out.push_back(GatheredBlock{comp, prof.first, prof.second});
  std::sort(out.begin(), out.end());
  return Element::monomial(std::move(out));
}

inline Element transfer(const Element& a, const Element& b) {
  Element out;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) out += transferMonomials(ma, mb);
  return out;
}

// ---------------------------------------------------------------------------
// Tensors (for the coproduct).

struct TensorB {
  std::set<std::pair<Monomial, Monomial>> terms;

  void toggle(const std::pair<Monomial, Monomial>& t) {
    auto it = terms.find(t);
    if (it == terms.end())
      terms.insert(t);
    else
      terms.erase(it);
  }
  TensorB& operator+=(const TensorB& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms.clear();
      return *this;
    }
    for (const auto& t : o.terms) toggle(t);
    return *this;
  }
  friend TensorB operator+(TensorB a, const TensorB& b) { return a += b; }
  friend bool operator==(const TensorB&, const TensorB&) = default;
};

inline TensorB tensorOf(const Element& a, const Element& b) {
  TensorB t;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) t.toggle({ma, mb});
  return t;
}

// ---------------------------------------------------------------------------
// Coproduct: on a block it deconcatenates the component in steps of
// 2^(max level); on a monomial it does so blockwise (profiles stay distinct,
// so no merge coefficients arise).

inline long blockSplitStep(const GatheredBlock& b) {
  return 1L << b.maxLevel();
}

namespace detail {
// DFS over per-block left sizes; left component constrained to `want` when
// want >= 0, otherwise all splits.
inline void coproductRec(const Monomial& m, std::size_t i, long want,
                         Monomial& left, Monomial& right, TensorB& out) {
  if (i == m.size()) {
    if (want > 0) return;
    out.toggle({left, right});
    return;
  }
  const GatheredBlock& b = m[i];
  long step = blockSplitStep(b);
  for (long s = 0; s <= b.comp; s += step) {
    if (want >= 0 && s > want) break;
    if (s > 0) left.push_back(GatheredBlock{s, b.w, b.gamma});
    if (s < b.comp) right.push_back(GatheredBlock{b.comp - s, b.w, b.gamma});
    coproductRec(m, i + 1, want >= 0 ? want - s : want, left, right, out);
    if (s > 0) left.pop_back();
    if (s < b.comp) right.pop_back();
  }
}
}  // namespace detail

inline TensorB coproductMonomial(const Monomial& m, long leftComp = -1) {
  TensorB out;
  Monomial left, right;
  detail::coproductRec(m, 0, leftComp, left, right, out);
  return out;
}

inline TensorB coproduct(const Element& e, long leftComp = -1) {
  TensorB out;
  for (const auto& m : e.terms()) out += coproductMonomial(m, leftComp);
  return out;
}

// Ordered split of one block into pieces of prescribed sizes (iterated
// coproduct component); empty sizes are omitted from the result.
inline std::optional<std::vector<GatheredBlock>> blockSplit(
    const GatheredBlock& b, const std::vector<long>& sizes) {
  long total = 0;
  long step = blockSplitStep(b);
  std::vector<GatheredBlock> out;
  for (long s : sizes) {
    if (s < 0 || s % step != 0) return std::nullopt;
    total += s;
    if (s > 0) out.push_back(GatheredBlock{s, b.w, b.gamma});
  }
  if (total != b.comp) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Cup product. Same-component blocks gather exponents; otherwise the
// Hopf-distributivity x.(y o z) = sum (x' . y) o (x'' . z) recurses with the
// coproduct, which strictly reduces the total block count.

inline Element cup(const Element& a, const Element& b);

namespace detail {

inline Element cupMonomials(const Monomial& a, const Monomial& b);

inline Element& cupCacheLookup(const Monomial& a, const Monomial& b,
                               bool& hit) {
  static std::map<std::pair<Monomial, Monomial>, Element> cache;
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto [it, fresh] = cache.try_emplace(std::move(key));
  hit = !fresh;
  return it->second;
}

inline Element cupMonomialsUncached(const Monomial& a, const Monomial& b) {
  if (monomialBidegree(a).comp != monomialBidegree(b).comp)
    return Element::zero();
  if (a.size() <= 1 && b.size() <= 1) {
    if (a.empty() && b.empty()) return Element::monomial({});
    // Single blocks on a common component: gather.
    GatheredBlock r = a[0];
    r.w += b[0].w;
    for (auto [k, e] : b[0].gamma) r.gamma[k] += e;
    assert(r.valid());
    return Element::monomial({r});
  }
  const Monomial& x = b.size() >= 2 ? a : b;  // distributes
  const Monomial& y = b.size() >= 2 ? b : a;  // gets split
  Monomial first{y[0]};
  Monomial rest(y.begin() + 1, y.end());
  long cf = y[0].comp;
  Element out;
  for (const auto& [xl, xr] : coproductMonomial(x, cf).terms)
    out += transfer(cupMonomials(xl, first), cupMonomials(xr, rest));
  return out;
}

inline Element cupMonomials(const Monomial& a, const Monomial& b) {
  bool hit = false;
  Element& slot = cupCacheLookup(a, b, hit);
  if (!hit) slot = cupMonomialsUncached(a, b);
  return slot;
}

}  // namespace detail

inline Element cup(const Element& a, const Element& b) {
  Element out;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) out += detail::cupMonomials(ma, mb);
  return out;
}

// ---------------------------------------------------------------------------
// Basis enumeration.

namespace detail {

inline void enumerateBlocksAt(long c, long dmax, GatheredBlock& cur, int k,
                              long degSoFar,
                              std::vector<GatheredBlock>& out) {
  if ((1L << k) > c || c % (1L << k) != 0) {
    out.push_back(cur);
    return;
  }
  // levels >= k with 2^k | c; exponent 0 first, then grow while degree fits
  enumerateBlocksAt(c, dmax, cur, k + 1, degSoFar, out);
  long unit = c - (c >> k);
  for (long a = 1; degSoFar + a * unit <= dmax; ++a) {
    cur.gamma[k] = a;
    enumerateBlocksAt(c, dmax, cur, k + 1, degSoFar + a * unit, out);
  }
  cur.gamma.erase(k);
}

inline std::vector<GatheredBlock> blocksWithin(long c, long dmax) {
  std::vector<GatheredBlock> out;
  for (long a0 = 0; a0 * c <= dmax; ++a0) {
    GatheredBlock cur{c, a0, {}};
    enumerateBlocksAt(c, dmax, cur, 1, a0 * c, out);
  }
  return out;
}

inline void basisRec(
    const std::vector<std::pair<Profile, std::vector<GatheredBlock>>>& groups,
    std::size_t gi, long n, long d, Monomial& cur,
    std::vector<Monomial>& out) {
  if (n == 0 && d == 0) {
    Monomial m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  if (gi == groups.size() || n <= 0 || d < 0) return;
  basisRec(groups, gi + 1, n, d, cur, out);  // skip this profile
  for (const auto& b : groups[gi].second) {
    if (b.comp > n) continue;
    Bidegree bd = blockBidegree(b);
    if (bd.deg > d) continue;
    cur.push_back(b);
    basisRec(groups, gi + 1, n - bd.comp, d - bd.deg, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<Monomial> basisMonomials(long n, long d) {
  assert(n >= 0 && d >= 0);
  if (n == 0) {
    if (d == 0) return {Monomial{}};
    return {};
  }
  std::map<Profile, std::vector<GatheredBlock>> grouped;
  for (long c = 1; c <= n; ++c)
    for (auto& b : detail::blocksWithin(c, d)) grouped[b.profile()].push_back(b);
  std::vector<std::pair<Profile, std::vector<GatheredBlock>>> groups(
      grouped.begin(), grouped.end());
  std::vector<Monomial> out;
  Monomial cur;
  detail::basisRec(groups, 0, n, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> poincareRow(long n, long dmax) {
  std::vector<std::size_t> dims;
  for (long d = 0; d <= dmax; ++d) dims.push_back(basisMonomials(n, d).size());
  return dims;
}

// ---------------------------------------------------------------------------
// Printing. Blocks print as cup products of generators, so every printed
// element is valid input syntax.

inline std::string blockStr(const GatheredBlock& b) {
  if (b.isUnit()) return "1(" + std::to_string(b.comp) + ")";
  std::string s;
  auto emit = [&s](std::string f, long e) {
    if (!s.empty()) s += ".";
    s += std::move(f);
    if (e != 1) s += "^" + std::to_string(e);
  };
  if (b.w > 0) emit("w(" + std::to_string(b.comp) + ")", b.w);
  for (auto [k, a] : b.gamma)
    emit("g(" + std::to_string(k) + "," + std::to_string(b.comp >> k) + ")",
         a);
  return s;
}

inline std::string monomialStr(const Monomial& m) {
  if (m.empty()) return "1(0)";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += " o ";
    s += blockStr(m[i]);
  }
  return s;
}

inline std::string elementStr(const Element& e) {
  if (e.isZero()) return "0";
  std::string s;
  for (const auto& m : e.terms()) {
    if (!s.empty()) s += " + ";
    s += monomialStr(m);
  }
  return s;
}

inline std::string tensorStr(const TensorB& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  for (const auto& [l, r] : t.terms) {
    if (!s.empty()) s += " + ";
    s += "{" + monomialStr(l) + "} (x) {" + monomialStr(r) + "}";
  }
  return s;
}

}  // namespace hopfoct
