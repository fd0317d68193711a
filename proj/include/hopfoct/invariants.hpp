#pragma once

// Restriction to elementary abelian 2-subgroups.
//
// A subgroup of B_n of diagonal sign matrices permuted blockwise is indexed
// by a partition of n into powers of two. Its cohomology is polynomial on
// degree-1 classes: a part of size 2^k carries x (the diagonal sign) and
// y_1..y_k (the translation coordinates). The even subgroup imposes one
// linear relation L = sum of x over 1-parts + sum of y_1 over 2-parts.
// Restriction from B_n is the iterated coproduct with one block per part;
// restriction from B+_n routes signed classes through words and the
// generator value table, with a double coset sum for products of blocks.

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <hopfoct/charged.hpp>
#include <hopfoct/f2poly.hpp>
#include <hopfoct/gf2.hpp>

namespace hopfoct {

// ---------------------------------------------------------------------------
// Partitions into powers of two.

struct Partition2 {
  std::map<int, long> mult;  // level k -> number of parts of size 2^k, > 0

  long total() const {
    long n = 0;
    for (auto [k, c] : mult) n += c << k;
    return n;
  }
  long partCount() const {
    long n = 0;
    for (auto [k, c] : mult) n += c;
    return n;
  }
  long multiplicity(int k) const {
    auto it = mult.find(k);
    return it == mult.end() ? 0 : it->second;
  }
  // No odd permutation of coordinates: the subgroup lies in B+_n and both
  // restriction flavors are genuinely distinct.
  bool allEven() const { return multiplicity(0) == 0 && multiplicity(1) == 0; }
  // (1,1,rest) and (2,rest) span the same diagonal subgroup, so the first
  // shape repeats data the second already provides.
  bool redundant() const {
    return multiplicity(0) == 2 && multiplicity(1) == 0;
  }

  std::string str() const {
    std::string out = "(";
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
      for (long c = 0; c < it->second; ++c) {
        if (!first) out += ",";
        out += std::to_string(1L << it->first);
        first = false;
      }
    return out + ")";
  }

  friend bool operator==(const Partition2&, const Partition2&) = default;
  friend bool operator<(const Partition2& a, const Partition2& b) {
    return a.mult < b.mult;
  }
};

inline std::vector<Partition2> admissiblePartitions(long n) {
  HOPFOCT_REQUIRE(n >= 0, "partitions need n >= 0");
  std::vector<Partition2> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  int top = 0;
  while ((2L << top) <= n) ++top;
  Partition2 cur;
  // Largest parts first, larger counts first: (8) before (4,4) before ...
  auto rec = [&](auto&& self, int k, long rem) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (k < 0) return;
    for (long c = rem >> k; c >= 0; --c) {
      if (c > 0)
        cur.mult[k] = c;
      else
        cur.mult.erase(k);
      self(self, k - 1, rem - (c << k));
    }
    cur.mult.erase(k);
  };
  rec(rec, top, n);
  return out;
}

// ---------------------------------------------------------------------------
// The polynomial cohomology ring of one subgroup.

class PartitionRing {
 public:
  explicit PartitionRing(Partition2 pi) : pi_(std::move(pi)) {
    for (auto it = pi_.mult.rbegin(); it != pi_.mult.rend(); ++it)
      for (long c = 0; c < it->second; ++c) levels_.push_back(it->first);
    base_.resize(levels_.size());
    int v = 0;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      base_[i] = v;
      v += 1 + levels_[i];
    }
    vars_ = v;

    f_.resize(levels_.size());
    d_.resize(levels_.size());
    h_.resize(levels_.size(), F2Poly::zero());
    hperp_.resize(levels_.size(), F2Poly::zero());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      int k = levels_[i];
      // Product of T + v over the span of the y's, tracked in a sentinel
      // variable with id vars_. Coefficients of T^{2^(k-l)} are the Dickson
      // classes, T -> x gives the top class f.
      F2Poly p = F2Poly::one();
      for (std::uint32_t m = 0; m < (1u << k); ++m) {
        F2Poly factor = F2Poly::var(vars_);
        for (int j = 1; j <= k; ++j)
          if (m >> (j - 1) & 1) factor += F2Poly::var(yVar(i, j));
        p *= factor;
      }
      d_[i].assign(k + 1, F2Poly::zero());
      for (const auto& mono : p.terms()) {
        long te = 0;
        F2Monomial rest;
        for (auto [id, e] : mono) {
          if (id == vars_)
            te = e;
          else
            rest.push_back({id, e});
        }
        bool placed = te == (1L << k);
        for (int l = 1; l <= k; ++l)
          if (te == (1L << (k - l))) {
            d_[i][l].toggle(rest);
            placed = true;
          }
        HOPFOCT_REQUIRE(placed, "span product must be additive in T");
      }
      F2Poly xv = F2Poly::var(xVar(i));
      f_[i] = p.substitute(
          [&](int id) { return id == vars_ ? &xv : nullptr; });
      if (k == 2) {
        F2Poly y1 = F2Poly::var(yVar(i, 1));
        F2Poly y2 = F2Poly::var(yVar(i, 2));
        h_[i] = y1.pow(3) + y1.pow(2) * y2 + y2.pow(3);
        hperp_[i] = d_[i][2] + h_[i];
      }
    }

    L_ = F2Poly::zero();
    elim_ = -1;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (levels_[i] == 0) L_ += F2Poly::var(xVar(i));
      if (levels_[i] == 1) L_ += F2Poly::var(yVar(i, 1));
    }
    for (std::size_t i = 0; i < levels_.size() && elim_ < 0; ++i)
      if (levels_[i] == 0) elim_ = xVar(i);
    for (std::size_t i = 0; i < levels_.size() && elim_ < 0; ++i)
      if (levels_[i] == 1) elim_ = yVar(i, 1);
  }

  const Partition2& partition() const { return pi_; }
  std::size_t parts() const { return levels_.size(); }
  int level(std::size_t i) const { return levels_[i]; }
  int varCount() const { return vars_; }

  int xVar(std::size_t i) const { return base_[i]; }
  int yVar(std::size_t i, int j) const {
    HOPFOCT_REQUIRE(j >= 1 && j <= levels_[i], "no such translation variable");
    return base_[i] + j;
  }
  std::string varName(int id) const {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (id == base_[i]) return "x" + std::to_string(i + 1);
      if (id > base_[i] && id <= base_[i] + levels_[i])
        return "y" + std::to_string(i + 1) + "_" +
               std::to_string(id - base_[i]);
    }
    HOPFOCT_REQUIRE(false, "variable id out of range");
    return {};
  }
  std::string str(const F2Poly& p) const {
    return p.str([&](int id) { return varName(id); });
  }

  // Top class of part i: product of x + v over the whole y-span.
  const F2Poly& fClass(std::size_t i) const { return f_[i]; }
  // Dickson class of degree 2^k - 2^(k-l) on part i, 1 <= l <= k.
  const F2Poly& dickson(std::size_t i, int l) const {
    HOPFOCT_REQUIRE(l >= 1 && l <= levels_[i], "no such Dickson class");
    return d_[i][l];
  }
  // Degree-3 halves of d_3 on a size-4 part: h + hperp = dickson(i, 2).
  const F2Poly& hTop(std::size_t i) const {
    HOPFOCT_REQUIRE(levels_[i] == 2, "h lives on size-4 parts");
    return h_[i];
  }
  const F2Poly& hTopPerp(std::size_t i) const {
    HOPFOCT_REQUIRE(levels_[i] == 2, "h lives on size-4 parts");
    return hperp_[i];
  }
  // Sum over subsets of the size-4 parts of even (odd when perp) size of
  // hperp on the subset and h elsewhere. With no size-4 parts: 1 and 0.
  F2Poly hSum(bool perp) const {
    std::vector<std::size_t> twos;
    for (std::size_t i = 0; i < levels_.size(); ++i)
      if (levels_[i] == 2) twos.push_back(i);
    HOPFOCT_REQUIRE(twos.size() < 20, "too many size-4 parts");
    F2Poly out = F2Poly::zero();
    for (std::uint32_t m = 0; m < (1u << twos.size()); ++m) {
      if ((std::popcount(m) & 1) != (perp ? 1 : 0)) continue;
      F2Poly t = F2Poly::one();
      for (std::size_t j = 0; j < twos.size(); ++j)
        t *= (m >> j & 1) ? hperp_[twos[j]] : h_[twos[j]];
      out += t;
    }
    return out;
  }

  // The even subgroup's one linear relation; zero when all parts are even.
  const F2Poly& linearRelation() const { return L_; }

  // Normal form mod L: eliminate the first 1-part x, else the first 2-part
  // y_1. Identity when L = 0.
  F2Poly reduce(F2Poly p) const {
    if (elim_ < 0) return p;
    F2Poly img = L_ + F2Poly::var(elim_);
    return p.substitute(
        [&](int id) { return id == elim_ ? &img : nullptr; });
  }

 private:
  Partition2 pi_;
  std::vector<int> levels_;  // descending
  std::vector<int> base_;
  int vars_ = 0;
  std::vector<F2Poly> f_;
  std::vector<std::vector<F2Poly>> d_;
  std::vector<F2Poly> h_, hperp_;
  F2Poly L_;
  int elim_ = -1;
};

inline const PartitionRing& partitionRing(const Partition2& pi) {
  static std::map<Partition2, PartitionRing> cache;
  auto it = cache.find(pi);
  if (it == cache.end()) it = cache.emplace(pi, PartitionRing(pi)).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Restriction from B_n.

namespace detail {

// Value of a single block filling part i: f^w times Dickson classes per
// gamma level.
inline F2Poly subgroupPartValue(const PartitionRing& R, std::size_t i,
                                const GatheredBlock& b) {
  HOPFOCT_REQUIRE(b.comp == (1L << R.level(i)),
                  "block does not fill the part");
  F2Poly v = R.fClass(i).pow(static_cast<int>(b.w));
  for (auto [l, a] : b.gamma) v *= R.dickson(i, l).pow(static_cast<int>(a));
  return v;
}

// Peel off one part at a time; only splits whose left factor is a single
// block survive (anything else restricts through a proper subgroup of the
// part and dies).
inline F2Poly restrictBParts(const PartitionRing& R, std::size_t i,
                             const Monomial& m) {
  if (i == R.parts())
    return m.empty() ? F2Poly::one() : F2Poly::zero();
  F2Poly acc = F2Poly::zero();
  TensorB t = coproductMonomial(m, 1L << R.level(i));
  for (const auto& [l, r] : t.terms) {
    if (l.size() != 1) continue;
    F2Poly v = subgroupPartValue(R, i, l[0]);
    if (v.isZero()) continue;
    F2Poly rest = restrictBParts(R, i + 1, r);
    if (rest.isZero()) continue;
    acc += v * rest;
  }
  return acc;
}

}  // namespace detail

// Restriction of H^*(B_n) to the subgroup of pi, in the full polynomial
// ring (no linear relation imposed).
inline F2Poly restrictB(const Partition2& pi, const Monomial& m) {
  HOPFOCT_REQUIRE(monomialBidegree(m).comp == pi.total(),
                  "restriction needs matching components");
  static std::map<std::pair<Partition2, Monomial>, F2Poly> cache;
  auto key = std::make_pair(pi, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const PartitionRing& R = partitionRing(pi);
  F2Poly out = detail::restrictBParts(R, 0, m);
  if (!out.isZero()) {
    HOPFOCT_REQUIRE(out.isHomogeneous([](int) { return 1; }) &&
                        out.degree([](int) { return 1; }) ==
                            monomialBidegree(m).deg,
                    "restriction must preserve degree");
  }
  cache.emplace(std::move(key), out);
  return out;
}

inline F2Poly restrictB(const Partition2& pi, const Element& e) {
  F2Poly out = F2Poly::zero();
  for (const auto& m : e.terms()) out += restrictB(pi, m);
  return out;
}

// ---------------------------------------------------------------------------
// Splitting a partition in two (one summand per choice of part positions).

struct PartitionSplit {
  Partition2 left, right;
  std::vector<std::size_t> leftParts, rightParts;  // positions in the whole
};

inline std::vector<PartitionSplit> partitionSplits(const Partition2& pi,
                                                   long leftTotal) {
  const PartitionRing& R = partitionRing(pi);
  std::size_t np = R.parts();
  HOPFOCT_REQUIRE(np < 20, "too many parts to split");
  std::vector<PartitionSplit> out;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    long sum = 0;
    for (std::size_t i = 0; i < np; ++i)
      if (mask >> i & 1) sum += 1L << R.level(i);
    if (sum != leftTotal) continue;
    PartitionSplit s;
    for (std::size_t i = 0; i < np; ++i) {
      if (mask >> i & 1) {
        ++s.left.mult[R.level(i)];
        s.leftParts.push_back(i);
      } else {
        ++s.right.mult[R.level(i)];
        s.rightParts.push_back(i);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Rename the variables of a subpartition's ring onto chosen parts of the
// whole ring. dest[i] is the whole-ring part receiving sub part i.
inline F2Poly embedParts(const PartitionRing& sub, const PartitionRing& full,
                         const std::vector<std::size_t>& dest,
                         const F2Poly& p) {
  HOPFOCT_REQUIRE(dest.size() == sub.parts(), "one destination per part");
  std::vector<F2Poly> image(sub.varCount());
  for (std::size_t i = 0; i < sub.parts(); ++i) {
    HOPFOCT_REQUIRE(sub.level(i) == full.level(dest[i]),
                    "destination part has the wrong size");
    image[sub.xVar(i)] = F2Poly::var(full.xVar(dest[i]));
    for (int j = 1; j <= sub.level(i); ++j)
      image[sub.yVar(i, j)] = F2Poly::var(full.yVar(dest[i], j));
  }
  return p.substitute([&](int id) { return &image[id]; });
}

// Canonical part positions for the two halves of a disjoint union: per
// level, a's parts take the first slots.
inline Partition2 unionPartition(const Partition2& a, const Partition2& b) {
  Partition2 u = a;
  for (auto [k, c] : b.mult) u.mult[k] += c;
  return u;
}

inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
unionDest(const Partition2& a, const Partition2& b) {
  const PartitionRing& R = partitionRing(unionPartition(a, b));
  std::vector<std::size_t> da, db;
  std::map<int, long> seen;
  for (std::size_t i = 0; i < R.parts(); ++i) {
    int k = R.level(i);
    if (seen[k]++ < a.multiplicity(k))
      da.push_back(i);
    else
      db.push_back(i);
  }
  return {da, db};
}

// ---------------------------------------------------------------------------
// Restriction from B+_n.

// Value of the signed generator of the given level on the even subgroup of
// pi: zero if some part is smaller than the generator level; a product of
// Dickson classes, one per part, for level >= 3 (plus sign only); at level 2
// the h-sum over size-4 parts times Dickson classes on larger parts.
inline F2Poly generatorValue(const Partition2& pi, int level, Charge sign) {
  HOPFOCT_REQUIRE(level >= 2 && sign != Charge::Zero,
                  "signed generators live at level >= 2");
  static std::map<std::tuple<Partition2, int, Charge>, F2Poly> cache;
  auto key = std::make_tuple(pi, level, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const PartitionRing& R = partitionRing(pi);
  F2Poly out = F2Poly::zero();
  bool lowPart = false;
  for (auto [k, c] : pi.mult)
    if (k < level) lowPart = true;
  if (!lowPart) {
    if (level >= 3) {
      if (sign == Charge::Plus) {
        out = F2Poly::one();
        for (std::size_t i = 0; i < R.parts(); ++i)
          out *= R.dickson(i, level);
      }
    } else {
      out = F2Poly::one();
      for (std::size_t i = 0; i < R.parts(); ++i)
        if (R.level(i) >= 3) out *= R.dickson(i, 2);
      out *= R.hSum(sign == Charge::Minus);
    }
  }
  cache.emplace(std::move(key), out);
  return out;
}

inline F2Poly restrictCharged(const Partition2& pi, const ChargedMonomial& x);

namespace detail {

inline F2Poly restrictChargedUncached(const Partition2& pi,
                                      const ChargedMonomial& x) {
  const PartitionRing& R = partitionRing(pi);
  if (x.charge == Charge::Zero) return R.reduce(restrictB(pi, x.mono));
  if (x.mono.empty())
    return x.charge == Charge::Plus ? F2Poly::one() : F2Poly::zero();
  if (x.mono.size() == 1) {
    // One signed block: expand into words; each word restricts to the value
    // of its gathered low part times generator values per signed cup factor.
    F2Poly acc = F2Poly::zero();
    for (const Word& w : blockToWords(x.mono[0], x.charge)) {
      F2Poly term = restrictB(pi, Monomial{lowBlock(w.comp, w.a0, w.a1)});
      for (auto [k, pq] : w.gam) {
        if (term.isZero()) break;
        if (pq.first > 0)
          term *= generatorValue(pi, k, Charge::Plus)
                      .pow(static_cast<int>(pq.first));
        if (pq.second > 0)
          term *= generatorValue(pi, k, Charge::Minus)
                      .pow(static_cast<int>(pq.second));
      }
      acc += term;
    }
    return R.reduce(acc);
  }
  // Several blocks: x = u o v with u the leading signed block. Sum over the
  // double cosets: choices of parts for u against parts for v, each
  // contributing both sign flavors. Splits where both sides contain a 1- or
  // 2-part factor through a proper subgroup and vanish; the surviving ones
  // put the linear relation entirely on one side, so multiplying reduced
  // representatives is well defined after the final reduce.
  ChargedMonomial u{Monomial{x.mono[0]}, x.charge};
  ChargedMonomial v{Monomial(x.mono.begin() + 1, x.mono.end()), Charge::Plus};
  long uc = monomialBidegree(u.mono).comp;
  F2Poly acc = F2Poly::zero();
  for (const PartitionSplit& s : partitionSplits(pi, uc)) {
    if (!s.left.allEven() && !s.right.allEven()) continue;
    const PartitionRing& RL = partitionRing(s.left);
    const PartitionRing& RR = partitionRing(s.right);
    acc += embedParts(RL, R, s.leftParts, restrictCharged(s.left, u)) *
           embedParts(RR, R, s.rightParts, restrictCharged(s.right, v));
    acc += embedParts(RL, R, s.leftParts, restrictCharged(s.left, iota(u))) *
           embedParts(RR, R, s.rightParts, restrictCharged(s.right, iota(v)));
  }
  return R.reduce(acc);
}

}  // namespace detail

// Restriction of the charged ring to the even subgroup of pi, reduced mod
// the linear relation. The twisted flavor is restrictCharged of iota.
inline F2Poly restrictCharged(const Partition2& pi, const ChargedMonomial& x) {
  HOPFOCT_REQUIRE(x.bidegree().comp == pi.total(),
                  "restriction needs matching components");
  static std::map<std::pair<Partition2, ChargedMonomial>, F2Poly> cache;
  auto key = std::make_pair(pi, x);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  F2Poly out = detail::restrictChargedUncached(pi, x);
  if (!out.isZero()) {
    HOPFOCT_REQUIRE(out.isHomogeneous([](int) { return 1; }) &&
                        out.degree([](int) { return 1; }) ==
                            x.bidegree().deg,
                    "restriction must preserve degree");
  }
  cache.emplace(std::move(key), out);
  return out;
}

inline F2Poly restrictCharged(const Partition2& pi, const ChargedElement& e) {
  F2Poly out = F2Poly::zero();
  for (const auto& m : e.terms()) out += restrictCharged(pi, m);
  return out;
}

// ---------------------------------------------------------------------------
// Detection.

// Stacked restriction matrix on the charged basis of (n, d): one row per
// polynomial monomial per subgroup per flavor (the twisted flavor only where
// it differs, i.e. on all-even partitions). Full column rank means the
// subgroups jointly detect the bidegree.
inline GF2Matrix detectionMatrix(long n, long d,
                                 std::vector<ChargedMonomial>* colsOut =
                                     nullptr) {
  std::vector<ChargedMonomial> cols = chargedBasis(n, d);
  if (colsOut) *colsOut = cols;
  std::vector<std::vector<F2Poly>> groups;
  for (const Partition2& pi : admissiblePartitions(n)) {
    std::vector<F2Poly> plain, twist;
    for (const ChargedMonomial& c : cols) {
      plain.push_back(restrictCharged(pi, c));
      if (pi.allEven()) twist.push_back(restrictCharged(pi, iota(c)));
    }
    groups.push_back(std::move(plain));
    if (pi.allEven()) groups.push_back(std::move(twist));
  }
  std::size_t rows = 0;
  std::vector<std::set<F2Monomial>> monos(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const F2Poly& p : groups[g])
      for (const auto& m : p.terms()) monos[g].insert(m);
    rows += monos[g].size();
  }
  GF2Matrix mat(rows, cols.size());
  std::size_t r = 0;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (const F2Monomial& m : monos[g]) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (groups[g][c].terms().count(m)) mat.set(r, c, true);
      ++r;
    }
  return mat;
}

}  // namespace hopfoct
