// Charged classes: cohomology of the alternating subgroups of the
// hyperoctahedral groups, organized as an almost-Hopf ring over the
// hyperoctahedral Hopf ring.
//
// Basis ("charged monomials"): for an annihilator monomial x (every block
// carries some gamma_{k>=2}) there are two lifts x^+, x^-; for a quotient
// monomial that is not an annihilator there is the restriction image x^0.
// The empty monomial is an annihilator, so the two units are 1^+ and 1^-.
//
// All products are computed by rewriting into this basis:
//   - transfer products merge on the B-side and track the sign rule,
//   - cup products are driven down to "words"
//       res(w^{a0} g(1,n/2)^{a1}) * prod_k (g(k,n/2^k)^+)^{p_k} (g^-)^{q_k}
//     which multiply by merging exponents; converting a word back to basis
//     is a direct lookup except for sign-mixing confined to level 2, where
//     a linear system over GF(2) (the V-system below) resolves it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "gysin.hpp"
#include "hopfring.hpp"

namespace hopfoct {

// ---------------------------------------------------------------------------
// Charges.

enum class Charge : std::uint8_t { Plus, Minus, Zero };

inline Charge chargeMul(Charge a, Charge b) {
  HOPFOCT_REQUIRE(a != Charge::Zero && b != Charge::Zero,
                  "charge product is only defined for signs");
  return a == b ? Charge::Plus : Charge::Minus;
}

inline Charge chargeFlip(Charge c) {
  if (c == Charge::Plus) return Charge::Minus;
  if (c == Charge::Minus) return Charge::Plus;
  return Charge::Zero;
}

inline std::string chargeStr(Charge c) {
  return c == Charge::Plus ? "+" : c == Charge::Minus ? "-" : "0";
}

// ---------------------------------------------------------------------------
// Charged monomials and elements.

struct ChargedMonomial {
  Monomial mono;
  Charge charge = Charge::Plus;

  Bidegree bidegree() const { return monomialBidegree(mono); }

  friend bool operator==(const ChargedMonomial&,
                         const ChargedMonomial&) = default;
  friend bool operator<(const ChargedMonomial& a, const ChargedMonomial& b) {
    if (a.charge != b.charge) return a.charge < b.charge;
    return a.mono < b.mono;
  }
};

// Signs label lifts of annihilator classes, charge 0 the image of res on the
// quotient-only classes; anything else is not in normal form.
inline bool isChargedBasis(const ChargedMonomial& x) {
  if (!monomialValid(x.mono)) return false;
  bool ann = isAnnMonomial(x.mono);
  if (x.charge == Charge::Zero) return isQuotMonomial(x.mono) && !ann;
  return ann;
}

class ChargedElement {
public:
  ChargedElement() = default;
  static ChargedElement zero() { return ChargedElement(); }
  static ChargedElement monomial(ChargedMonomial m) {
    HOPFOCT_REQUIRE(isChargedBasis(m), "charged monomial not in normal form");
    ChargedElement e;
    e.terms_.insert(std::move(m));
    return e;
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::set<ChargedMonomial>& terms() const& { return terms_; }
  const std::set<ChargedMonomial>& terms() && = delete;

  void toggle(const ChargedMonomial& m) {
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.insert(m);
    else
      terms_.erase(it);
  }

  ChargedElement& operator+=(const ChargedElement& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms_.clear();
      return *this;
    }
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  friend ChargedElement operator+(ChargedElement a, const ChargedElement& b) {
    return a += b;
  }
  friend bool operator==(const ChargedElement&,
                         const ChargedElement&) = default;
  friend bool operator<(const ChargedElement& a, const ChargedElement& b) {
    return a.terms_ < b.terms_;
  }

  bool homogeneous(Bidegree* out = nullptr) const {
    if (terms_.empty()) return true;
    Bidegree d = terms_.begin()->bidegree();
    for (const auto& m : terms_)
      if (m.bidegree() != d) return false;
    if (out) *out = d;
    return true;
  }

private:
  std::set<ChargedMonomial> terms_;
};

inline ChargedElement chargedUnit(Charge c) {
  return ChargedElement::monomial({Monomial{}, c});
}

inline ChargedMonomial iota(const ChargedMonomial& m) {
  return {m.mono, chargeFlip(m.charge)};
}

inline ChargedElement iota(const ChargedElement& e) {
  ChargedElement out;
  for (const auto& m : e.terms()) out.toggle(iota(m));
  return out;
}

// Charged generators g(k,m)^sign for k >= 2; g(k,0)^sign is the unit 1^sign.
inline ChargedElement gammaCharged(int k, long m, Charge sign) {
  HOPFOCT_REQUIRE(sign != Charge::Zero, "generator charge must be a sign");
  if (m == 0) return chargedUnit(sign);
  HOPFOCT_REQUIRE(k >= 2, "charged generators need level >= 2");
  GatheredBlock b{m << k, 0, GammaMap{{k, 1}}};
  return ChargedElement::monomial({Monomial{b}, sign});
}

// ---------------------------------------------------------------------------
// Tensors of charged monomials (coproduct values).

struct ChargedTensor {
  std::set<std::pair<ChargedMonomial, ChargedMonomial>> terms;

  void toggle(std::pair<ChargedMonomial, ChargedMonomial> t) {
    auto it = terms.find(t);
    if (it == terms.end())
      terms.insert(std::move(t));
    else
      terms.erase(it);
  }
  ChargedTensor& operator+=(const ChargedTensor& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms.clear();
      return *this;
    }
    for (const auto& t : o.terms) toggle(t);
    return *this;
  }
  friend bool operator==(const ChargedTensor&,
                         const ChargedTensor&) = default;
};

inline ChargedTensor tensorOf(const ChargedElement& a,
                              const ChargedElement& b) {
  ChargedTensor t;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) t.toggle({ma, mb});
  return t;
}

// ---------------------------------------------------------------------------
// res and tr.

// Restriction to the alternating subgroup: reduce modulo the Euler ideal,
// then send each annihilator monomial to x^+ + x^-, the rest to x^0.
inline ChargedElement res(const Element& x) {
  ChargedElement out;
  for (const auto& m : x.terms()) {
    Element red = reduceModEuler(Element::monomial(m));
    for (const auto& q : red.terms()) {
      if (isAnnMonomial(q)) {
        out.toggle({q, Charge::Plus});
        out.toggle({q, Charge::Minus});
      } else {
        out.toggle({q, Charge::Zero});
      }
    }
  }
  return out;
}

// Transfer back to the hyperoctahedral group: both signed lifts map to the
// underlying monomial, the restriction images to zero.
inline Element tr(const ChargedElement& x) {
  Element out;
  for (const auto& m : x.terms())
    if (m.charge != Charge::Zero) out.toggle(m.mono);
  return out;
}

// ---------------------------------------------------------------------------
// Charged transfer product.

// x^e o y^d = (x o y)^{ed}; a charge-0 factor absorbs signs through
// x^e o y^0 = res(x o y); two charge-0 factors multiply to zero.
inline ChargedElement transferCharged(const ChargedMonomial& a,
                                      const ChargedMonomial& b) {
  if (a.charge == Charge::Zero && b.charge == Charge::Zero)
    return ChargedElement::zero();
  Element prod =
      transfer(Element::monomial(a.mono), Element::monomial(b.mono));
  if (a.charge == Charge::Zero || b.charge == Charge::Zero) return res(prod);
  Charge c = chargeMul(a.charge, b.charge);
  ChargedElement out;
  for (const auto& m : prod.terms()) out.toggle({m, c});
  return out;
}

inline ChargedElement transferCharged(const ChargedElement& a,
                                      const ChargedElement& b) {
  ChargedElement out;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) out += transferCharged(ma, mb);
  return out;
}

// ---------------------------------------------------------------------------
// Charged basis enumeration: M_0 from quot-only monomials, M_+- from ann.

inline std::vector<ChargedMonomial> chargedBasis(long n, long d) {
  std::vector<ChargedMonomial> out;
  for (const auto& q : quotBasis(n, d))
    if (!isAnnMonomial(q)) out.push_back({q, Charge::Zero});
  for (const auto& a : annBasis(n, d)) {
    out.push_back({a, Charge::Plus});
    out.push_back({a, Charge::Minus});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Words.
//
// A word in component n is the cup product
//   res(w^{a0} g(1,n/2)^{a1}) * prod_{k>=2} (g(k,n/2^k)^+)^{p_k} (g^-)^{q_k}.
// Words in one component form a monoid under cup: exponents merge.

struct Word {
  long comp = 0;
  long a0 = 0, a1 = 0;
  std::map<int, std::pair<long, long>> gam;  // level k>=2 -> (p_k, q_k)

  bool valid() const {
    if (comp < 1 || a0 < 0 || a1 < 0) return false;
    if (a1 > 0 && comp % 2 != 0) return false;
    for (auto [k, pq] : gam) {
      if (k < 2 || pq.first < 0 || pq.second < 0) return false;
      if (pq.first + pq.second < 1) return false;
      if (comp % (1L << k) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& x, const Word& y) {
    if (x.comp != y.comp) return x.comp < y.comp;
    if (x.a0 != y.a0) return x.a0 < y.a0;
    if (x.a1 != y.a1) return x.a1 < y.a1;
    return x.gam < y.gam;
  }
};

inline Word wordMul(const Word& x, const Word& y) {
  HOPFOCT_REQUIRE(x.comp == y.comp, "word product needs equal components");
  Word out = x;
  out.a0 += y.a0;
  out.a1 += y.a1;
  for (auto [k, pq] : y.gam) {
    auto& t = out.gam[k];
    t.first += pq.first;
    t.second += pq.second;
  }
  return out;
}

namespace detail {

inline GatheredBlock lowBlock(long comp, long a0, long a1) {
  GammaMap g;
  if (a1 > 0) g[1] = a1;
  return GatheredBlock{comp, a0, std::move(g)};
}

}  // namespace detail

inline ChargedElement wordToBasis(const Word& w);

namespace detail {

// Formal coproduct of a word at the proper split (c, comp-c): every cup
// factor splits at the same component. The low part keeps its profile on
// both sides; a power (g^s)^e splits into sign patterns with binomial
// multiplicities, the two slots matching as s = (left sign)*(right sign).
inline std::map<std::pair<Word, Word>, bool> wordDeltaAt(const Word& w,
                                                         long c) {
  std::map<std::pair<Word, Word>, bool> out;
  HOPFOCT_REQUIRE(c > 0 && c < w.comp, "word split must be proper");
  long step = w.a1 > 0 ? 2 : 1;
  if (c % step != 0) return out;
  for (auto [k, pq] : w.gam)
    if (c % (1L << k) != 0) return out;

  Word left{c, w.a0, w.a1, {}};
  Word right{w.comp - c, w.a0, w.a1, {}};
  std::vector<std::pair<Word, Word>> acc{{left, right}};
  for (auto [k, pq] : w.gam) {
    std::vector<std::pair<Word, Word>> next;
    for (long jp = 0; jp <= pq.first; ++jp) {
      if (!binomialOdd(pq.first, jp)) continue;
      for (long jq = 0; jq <= pq.second; ++jq) {
        if (!binomialOdd(pq.second, jq)) continue;
        long lp = jp + jq, lq = (pq.first - jp) + (pq.second - jq);
        long rp = jp + (pq.second - jq), rq = (pq.first - jp) + jq;
        for (auto [l, r] : acc) {
          if (lp + lq > 0) l.gam[k] = {lp, lq};
          if (rp + rq > 0) r.gam[k] = {rp, rq};
          next.emplace_back(std::move(l), std::move(r));
        }
      }
    }
    acc = std::move(next);
  }
  for (auto& t : acc) {
    auto it = out.find(t);
    if (it == out.end())
      out.emplace(std::move(t), true);
    else
      out.erase(it);
  }
  return out;
}

// W_j right-hand sides of the V-system: the product of a word with
// g(2,m)^+ * g(2,m)^- = (g(2,m-1)^+)^2 o (g(1,2)^3)^0 in component n = 4m.
// For m = 1 the left transfer factor is the unit and the product merges into
// the word; otherwise distribute over the formal coproduct at (n-4, 4), where
// both slots reduce to word merges again.
inline ChargedElement wordTimesGammaCross(const Word& w) {
  long n = w.comp;
  HOPFOCT_REQUIRE(n % 4 == 0 && n >= 4, "level-2 word component");
  if (n == 4) {
    Word merged = w;
    merged.a1 += 3;
    return wordToBasis(merged);
  }
  ChargedElement out;
  for (const auto& [pair, on] : wordDeltaAt(w, n - 4)) {
    (void)on;
    Word l = pair.first;
    auto& lp = l.gam[2];
    lp.first += 2;
    Word r = pair.second;
    r.a1 += 3;
    out += transferCharged(wordToBasis(l), wordToBasis(r));
  }
  return out;
}

// V-system: in component n = 4m with low part (a0, a1) and total level-2
// exponent a, the words V_j carrying j minus factors satisfy
//   m odd:  V_{j-1} + V_j + V_{j+1} = W_j          (1 <= j <= a-1)
//   m even: V_j = W_j                              (1 <= j <= a-1)
// together with the two expansions of the signed lifts of the gathered block
// b = w^{a0} g(1,n/2)^{a1} g(2,m)^a:
//   b^+ = sum_{t <= a/2} C(a,t) V_t,   b^- = sum_{t <= a/2} C(a,t) V_{a-t}.
// The (a+1) x (a+1) system over GF(2) is invertible; solve and cache.
inline const std::vector<ChargedElement>& vSystem(long n, long a0, long a1,
                                                  long a) {
  static std::map<std::tuple<long, long, long, long>,
                  std::vector<ChargedElement>>
      cache;
  auto key = std::make_tuple(n, a0, a1, a);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  long m = n / 4;
  std::size_t dim = static_cast<std::size_t>(a) + 1;
  GF2Matrix mat(dim, dim);
  std::vector<ChargedElement> rhs(dim);
  std::size_t row = 0;
  for (long j = 1; j <= a - 1; ++j, ++row) {
    Word wj{n, a0, a1, {}};
    if (a - j - 1 + j - 1 > 0) wj.gam[2] = {a - j - 1, j - 1};
    rhs[row] = wordTimesGammaCross(wj);
    if (m % 2 == 1) {
      mat.flip(row, static_cast<std::size_t>(j - 1));
      mat.flip(row, static_cast<std::size_t>(j));
      mat.flip(row, static_cast<std::size_t>(j + 1));
    } else {
      mat.flip(row, static_cast<std::size_t>(j));
    }
  }
  GammaMap g;
  if (a1 > 0) g[1] = a1;
  g[2] = a;
  GatheredBlock blk{n, a0, std::move(g)};
  HOPFOCT_REQUIRE(blk.valid(), "V-system block");
  for (long t = 0; 2 * t <= a; ++t) {
    if (!binomialOdd(a, t)) continue;
    mat.flip(row, static_cast<std::size_t>(t));
    mat.flip(row + 1, static_cast<std::size_t>(a - t));
  }
  rhs[row] = ChargedElement::monomial({Monomial{blk}, Charge::Plus});
  rhs[row + 1] = ChargedElement::monomial({Monomial{blk}, Charge::Minus});

  // Gauss-Jordan with element-valued right-hand sides.
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t sel = dim;
    for (std::size_t i = r; i < dim; ++i)
      if (mat.get(i, col)) {
        sel = i;
        break;
      }
    HOPFOCT_REQUIRE(sel != dim, "V-system is singular");
    mat.swapRows(sel, r);
    std::swap(rhs[sel], rhs[r]);
    for (std::size_t i = 0; i < dim; ++i)
      if (i != r && mat.get(i, col)) {
        mat.xorRow(i, r);
        rhs[i] += rhs[r];
      }
    ++r;
  }
  return cache.emplace(key, std::move(rhs)).first->second;
}

}  // namespace detail

// Normal form of a word:
//  - no signed factors: restriction of the low gathered block;
//  - sign mixing that touches a level other than 2: zero;
//  - pure sign with top level >= 3: the matching signed lift of the gathered
//    block, on the nose;
//  - level-2 factors only: resolved by the V-system.
inline ChargedElement wordToBasis(const Word& w) {
  HOPFOCT_REQUIRE(w.valid(), "malformed word");
  if (w.gam.empty())
    return res(Element::monomial(Monomial{detail::lowBlock(w.comp, w.a0, w.a1)}));
  bool plus = false, minus = false, highPlus = false, highMinus = false;
  for (auto [k, pq] : w.gam) {
    if (pq.first > 0) plus = true, highPlus |= k >= 3;
    if (pq.second > 0) minus = true, highMinus |= k >= 3;
  }
  if (plus && minus && (highPlus || highMinus)) return ChargedElement::zero();
  if (!(plus && minus) && (highPlus || highMinus)) {
    GammaMap g;
    if (w.a1 > 0) g[1] = w.a1;
    for (auto [k, pq] : w.gam) g[k] = pq.first + pq.second;
    GatheredBlock b{w.comp, w.a0, std::move(g)};
    HOPFOCT_REQUIRE(b.valid(), "word block");
    return ChargedElement::monomial(
        {Monomial{b}, plus ? Charge::Plus : Charge::Minus});
  }
  // Level 2 only.
  auto pq = w.gam.at(2);
  long a = pq.first + pq.second;
  const auto& v = detail::vSystem(w.comp, w.a0, w.a1, a);
  return v[static_cast<std::size_t>(pq.second)];
}

// ---------------------------------------------------------------------------
// Signed lifts of a single annihilator block as sums of words.
//
// For b = w^{a0} g(1,-)^{a1} prod_{i=2}^t g(i,-)^{a_i} with top level t >= 2:
//   b^+ = res(w^{a0} g(1,-)^{a1}) *
//         sum prod_i C(a_i, k_i) (g(i,-)^-)^{k_i} (g(i,-)^+)^{a_i - k_i},
// the sum over 0 <= k_i <= a_i for 2 <= i <= t-1 and 0 <= k_t <= a_t / 2.
// b^- is the sign swap of every word.

inline std::vector<Word> blockToWords(const GatheredBlock& b,
                                      Charge sign = Charge::Plus) {
  HOPFOCT_REQUIRE(b.valid() && blockHasHighGamma(b), "not an ann block");
  HOPFOCT_REQUIRE(sign != Charge::Zero, "lift sign");
  int t = b.maxLevel();
  std::vector<int> levels;
  for (auto [k, a] : b.gamma)
    if (k >= 2) levels.push_back(k);
  long a1 = b.gamma.count(1) ? b.gamma.at(1) : 0;

  std::vector<Word> out;
  Word base{b.comp, b.w, a1, {}};
  std::vector<long> choice(levels.size(), 0);
  // Depth-first over the k_i choices, parity-filtered.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == levels.size()) {
      Word w = base;
      for (std::size_t j = 0; j < levels.size(); ++j) {
        long ai = b.gamma.at(levels[j]);
        long ki = choice[j];
        long p = ai - ki, q = ki;
        if (sign == Charge::Minus) std::swap(p, q);
        w.gam[levels[j]] = {p, q};
      }
      out.push_back(std::move(w));
      return;
    }
    int k = levels[i];
    long ai = b.gamma.at(k);
    long hi = k == t ? ai / 2 : ai;
    for (long ki = 0; ki <= hi; ++ki) {
      if (!binomialOdd(ai, ki)) continue;
      choice[i] = ki;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Coproduct.

namespace detail {

inline const ChargedTensor& coproductChargedMono(const ChargedMonomial& x);

}  // namespace detail

inline ChargedTensor coproductCharged(const ChargedElement& e) {
  ChargedTensor out;
  for (const auto& m : e.terms()) out += detail::coproductChargedMono(m);
  return out;
}

namespace detail {

inline ChargedTensor coproductChargedUncached(const ChargedMonomial& x) {
  ChargedTensor out;
  long n = monomialBidegree(x.mono).comp;

  if (n == 0) {
    // Delta(1^+) = 1^+ (x) 1^+ + 1^- (x) 1^-, and the sign swap of one slot
    // for 1^-.
    ChargedMonomial up{Monomial{}, Charge::Plus};
    ChargedMonomial um{Monomial{}, Charge::Minus};
    if (x.charge == Charge::Plus) {
      out.toggle({up, up});
      out.toggle({um, um});
    } else {
      out.toggle({up, um});
      out.toggle({um, up});
    }
    return out;
  }

  if (x.charge == Charge::Zero) {
    // res is a coalgebra map: push the B-side coproduct through res.
    TensorB t = coproductMonomial(x.mono);
    for (const auto& [l, r] : t.terms)
      out += tensorOf(res(Element::monomial(l)), res(Element::monomial(r)));
    return out;
  }

  if (x.charge == Charge::Minus) {
    ChargedTensor plus = coproductChargedMono({x.mono, Charge::Plus});
    for (const auto& [l, r] : plus.terms) out.toggle({iota(l), r});
    return out;
  }

  if (x.mono.size() == 1) {
    // Single block: proper splits through the word expansion, ends from the
    // unit rule Delta(y) += 1^+ (x) y + 1^- (x) iota(y) + y (x) 1^+ +
    // iota(y) (x) 1^-.
    for (const Word& w : blockToWords(x.mono[0])) {
      for (long c = 1; c < n; ++c)
        for (const auto& [pair, on] : wordDeltaAt(w, c)) {
          (void)on;
          out += tensorOf(wordToBasis(pair.first), wordToBasis(pair.second));
        }
    }
    ChargedMonomial up{Monomial{}, Charge::Plus};
    ChargedMonomial um{Monomial{}, Charge::Minus};
    out.toggle({up, x});
    out.toggle({um, iota(x)});
    out.toggle({x, up});
    out.toggle({iota(x), um});
    return out;
  }

  // Transfer product of blocks: Delta(u o v) twists by the projection that
  // keeps a left pair (s, t) only when s has charge + or s has charge 0 and
  // t has charge +.
  ChargedMonomial first{Monomial{x.mono[0]}, Charge::Plus};
  ChargedMonomial rest{Monomial(x.mono.begin() + 1, x.mono.end()),
                       Charge::Plus};
  const ChargedTensor& du = coproductChargedMono(first);
  const ChargedTensor& dv = coproductChargedMono(rest);
  for (const auto& [u1, u2] : du.terms)
    for (const auto& [v1, v2] : dv.terms) {
      bool keep = u1.charge == Charge::Plus ||
                  (u1.charge == Charge::Zero && v1.charge == Charge::Plus);
      if (!keep) continue;
      out += tensorOf(transferCharged(u1, v1), transferCharged(u2, v2));
    }
  return out;
}

inline const ChargedTensor& coproductChargedMono(const ChargedMonomial& x) {
  static std::map<ChargedMonomial, ChargedTensor> cache;
  auto it = cache.find(x);
  if (it == cache.end())
    it = cache.emplace(x, coproductChargedUncached(x)).first;
  return it->second;
}

}  // namespace detail

inline ChargedTensor coproductCharged(const ChargedMonomial& x) {
  return detail::coproductChargedMono(x);
}

// ---------------------------------------------------------------------------
// Cup product.

namespace detail {

inline const ChargedElement& cupChargedMono(const ChargedMonomial& a,
                                            const ChargedMonomial& b);

}  // namespace detail

inline ChargedElement cupCharged(const ChargedElement& a,
                                 const ChargedElement& b) {
  ChargedElement out;
  for (const auto& ma : a.terms())
    for (const auto& mb : b.terms()) out += detail::cupChargedMono(ma, mb);
  return out;
}

inline ChargedElement cupCharged(const ChargedMonomial& a,
                                 const ChargedMonomial& b) {
  return detail::cupChargedMono(a, b);
}

namespace detail {

// gamma^sign * E for a single charged generator factor, one monomial at a
// time; the workhorse of the word-peeling strategy.
inline ChargedElement gammaTimesMonomial(int k, Charge sign,
                                         const ChargedMonomial& m);

inline ChargedElement gammaTimesElement(int k, Charge sign,
                                        const ChargedElement& e) {
  ChargedElement out;
  for (const auto& m : e.terms()) out += gammaTimesMonomial(k, sign, m);
  return out;
}

// Multiply res(u) * prod (g^s)^e (the signed factors of a word) into an
// element supported in the same component, peeling one generator at a time.
inline ChargedElement peelGammas(
    const std::map<int, std::pair<long, long>>& gam, ChargedElement e) {
  for (auto [k, pq] : gam) {
    for (long i = 0; i < pq.first && !e.isZero(); ++i)
      e = gammaTimesElement(k, Charge::Plus, e);
    for (long i = 0; i < pq.second && !e.isZero(); ++i)
      e = gammaTimesElement(k, Charge::Minus, e);
  }
  return e;
}

// Index of some annihilator block of m, or npos.
inline std::size_t annBlockIndex(const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (blockHasHighGamma(m[i])) return i;
  return static_cast<std::size_t>(-1);
}

inline ChargedElement gammaTimesMonomial(int k, Charge sign,
                                         const ChargedMonomial& m) {
  long n = monomialBidegree(m.mono).comp;
  HOPFOCT_REQUIRE(n >= 1 && n % (1L << k) == 0, "generator component");
  long l = n >> k;

  if (m.charge != Charge::Zero) {
    if (m.mono.size() == 1) {
      ChargedElement out;
      for (Word w : blockToWords(m.mono[0], m.charge)) {
        auto& t = w.gam[k];
        (sign == Charge::Plus ? t.first : t.second) += 1;
        out += wordToBasis(w);
      }
      return out;
    }
    // Split off the first block and distribute over the coproduct of the
    // generator, which has a single piece in each matching component pair.
    ChargedMonomial b1{Monomial{m.mono[0]}, m.charge};
    ChargedMonomial rest{Monomial(m.mono.begin() + 1, m.mono.end()),
                         Charge::Plus};
    long c = monomialBidegree(b1.mono).comp;
    if (c % (1L << k) != 0) return ChargedElement::zero();
    long i = c >> k;
    ChargedElement out;
    for (Charge t1 : {Charge::Plus, Charge::Minus}) {
      Charge t2 = sign == Charge::Plus ? t1 : chargeFlip(t1);
      out += transferCharged(
          cupCharged(gammaCharged(k, i, t1), ChargedElement::monomial(b1)),
          cupCharged(gammaCharged(k, l - i, t2),
                     ChargedElement::monomial(rest)));
    }
    return out;
  }

  // Charge 0.
  if (m.mono.size() == 1) {
    // Single quotient-only block is level <= 1: the product is one word.
    const GatheredBlock& b = m.mono[0];
    HOPFOCT_REQUIRE(!blockHasHighGamma(b), "ann block with charge 0");
    Word w{b.comp, b.w, b.gamma.count(1) ? b.gamma.at(1) : 0, {}};
    w.gam[k] = sign == Charge::Plus ? std::make_pair(1L, 0L)
                                    : std::make_pair(0L, 1L);
    return wordToBasis(w);
  }
  std::size_t ai = annBlockIndex(m.mono);
  if (ai != static_cast<std::size_t>(-1)) {
    // m^0 = c^+ o res(z): distribute as in the signed multi-block case.
    ChargedMonomial c{Monomial{m.mono[ai]}, Charge::Plus};
    Monomial zm = m.mono;
    zm.erase(zm.begin() + static_cast<std::ptrdiff_t>(ai));
    ChargedElement z = res(Element::monomial(zm));
    long cc = monomialBidegree(c.mono).comp;
    if (cc % (1L << k) != 0) return ChargedElement::zero();
    long i = cc >> k;
    ChargedElement out;
    for (Charge t1 : {Charge::Plus, Charge::Minus}) {
      Charge t2 = sign == Charge::Plus ? t1 : chargeFlip(t1);
      out += transferCharged(
          cupCharged(gammaCharged(k, i, t1), ChargedElement::monomial(c)),
          cupCharged(gammaCharged(k, l - i, t2), z));
    }
    return out;
  }
  // All blocks of level <= 1: the product is a transfer product of
  // single-block answers, one signed generator factor per block.
  if (sign == Charge::Minus)
    return iota(gammaTimesMonomial(k, Charge::Plus, m));
  ChargedElement out = chargedUnit(Charge::Plus);
  for (const GatheredBlock& b : m.mono) {
    if (b.comp % (1L << k) != 0) return ChargedElement::zero();
    Word w{b.comp, b.w, b.gamma.count(1) ? b.gamma.at(1) : 0, {}};
    w.gam[k] = {1, 0};
    out = transferCharged(out, wordToBasis(w));
    if (out.isZero()) return out;
  }
  return out;
}

inline ChargedElement cupChargedUncached(const ChargedMonomial& a,
                                         const ChargedMonomial& b) {
  long n = monomialBidegree(a.mono).comp;

  if (n == 0) {
    // 1^+ 1^+ = 1^+, 1^- 1^- = 1^-, 1^+ 1^- = 0.
    if (a.charge == b.charge) return ChargedElement::monomial(a);
    return ChargedElement::zero();
  }

  if (a.charge == Charge::Minus)
    return iota(cupChargedMono(iota(a), iota(b)));

  if (a.charge == Charge::Zero)
    // Both charge 0 after sorting: res is a ring map.
    return res(cup(Element::monomial(a.mono), Element::monomial(b.mono)));

  // a has charge +.
  if (b.charge == Charge::Zero) {
    std::size_t ai = annBlockIndex(b.mono);
    if (ai != static_cast<std::size_t>(-1)) {
      // b^0 = c^+ o res(z); distribute over Delta(a).
      ChargedMonomial c{Monomial{b.mono[ai]}, Charge::Plus};
      Monomial zm = b.mono;
      zm.erase(zm.begin() + static_cast<std::ptrdiff_t>(ai));
      ChargedElement z = res(Element::monomial(zm));
      long cc = monomialBidegree(c.mono).comp;
      ChargedElement out;
      for (const auto& [u, v] : coproductChargedMono(a).terms) {
        if (monomialBidegree(u.mono).comp != cc) continue;
        out += transferCharged(cupChargedMono(u, c),
                               cupCharged(ChargedElement::monomial(v), z));
      }
      return out;
    }
    if (a.mono.size() >= 2) {
      // Split a and distribute over Delta(b^0).
      ChargedMonomial b1{Monomial{a.mono[0]}, Charge::Plus};
      ChargedMonomial rest{Monomial(a.mono.begin() + 1, a.mono.end()),
                           Charge::Plus};
      long c1 = monomialBidegree(b1.mono).comp;
      ChargedElement out;
      for (const auto& [u, v] : coproductChargedMono(b).terms) {
        if (monomialBidegree(u.mono).comp != c1) continue;
        out += transferCharged(cupChargedMono(b1, u), cupChargedMono(rest, v));
      }
      return out;
    }
    // Single ann block times an all-low monomial: per word, fold the low
    // part into the B-side cup and peel the signed factors back in.
    ChargedElement out;
    for (const Word& w : blockToWords(a.mono[0])) {
      Element uy = cup(Element::monomial(Monomial{lowBlock(n, w.a0, w.a1)}),
                       Element::monomial(b.mono));
      out += peelGammas(w.gam, res(uy));
    }
    return out;
  }

  // Signed times signed.
  if (a.mono.size() == 1 && b.mono.size() == 1) {
    ChargedElement out;
    std::vector<Word> wb = blockToWords(b.mono[0], b.charge);
    for (const Word& wa : blockToWords(a.mono[0]))
      for (const Word& w : wb) out += wordToBasis(wordMul(wa, w));
    return out;
  }
  // Split the multi-block side (a if possible) and distribute over the
  // other side's coproduct.
  const ChargedMonomial& s = a.mono.size() >= 2 ? a : b;
  const ChargedMonomial& o = a.mono.size() >= 2 ? b : a;
  ChargedMonomial s1{Monomial{s.mono[0]}, s.charge};
  ChargedMonomial rest{Monomial(s.mono.begin() + 1, s.mono.end()),
                       Charge::Plus};
  long c1 = monomialBidegree(s1.mono).comp;
  ChargedElement out;
  for (const auto& [u, v] : coproductChargedMono(o).terms) {
    if (monomialBidegree(u.mono).comp != c1) continue;
    out += transferCharged(cupChargedMono(u, s1), cupChargedMono(v, rest));
  }
  return out;
}

inline const ChargedElement& cupChargedMono(const ChargedMonomial& a,
                                            const ChargedMonomial& b) {
  static std::map<std::pair<ChargedMonomial, ChargedMonomial>, ChargedElement>
      cache;
  static const ChargedElement zeroElt;
  if (monomialBidegree(a.mono).comp != monomialBidegree(b.mono).comp)
    return zeroElt;
  std::pair<ChargedMonomial, ChargedMonomial> key =
      b < a ? std::make_pair(b, a) : std::make_pair(a, b);
  auto it = cache.find(key);
  if (it == cache.end()) {
    ChargedElement val = cupChargedUncached(key.first, key.second);
    it = cache.emplace(std::move(key), std::move(val)).first;
  }
  return it->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Printing.

inline std::string chargedStr(const ChargedMonomial& m) {
  std::string body = monomialStr(m.mono);
  if (m.mono.size() > 1) body = "(" + body + ")";
  return body + "^" + chargeStr(m.charge);
}

inline std::string chargedStr(const ChargedElement& e) {
  if (e.isZero()) return "0";
  std::string s;
  for (const auto& m : e.terms()) {
    if (!s.empty()) s += " + ";
    s += chargedStr(m);
  }
  return s;
}

inline std::string chargedStr(const ChargedTensor& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  for (const auto& [l, r] : t.terms) {
    if (!s.empty()) s += " + ";
    s += chargedStr(l) + " (x) " + chargedStr(r);
  }
  return s;
}

}  // namespace hopfoct
