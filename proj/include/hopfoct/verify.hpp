#pragma once
// Acceptance checks. Each criterion re-verifies one structural statement
// with both sides computed independently and returns a pass flag plus a
// one-line summary. Criterion 8 carries a known defect set: it reports the
// exact failing cells and counts as acceptable only when the observed
// defects equal the documented ones.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"
#include "foxneuwirth.hpp"

namespace hopfoct {

struct Criterion {
  int number = 0;
  std::string name;
  bool pass = false;        // the stated bound holds
  bool documented = false;  // red, but exactly the recorded defect set
  std::string detail;
  double seconds = 0.0;

  bool acceptable() const { return pass || documented; }
};

namespace detail {

// Failure bookkeeping: counts checks, keeps the first counterexample.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
  std::string summary(const std::string& scope) const {
    std::ostringstream os;
    if (failures == 0) {
      os << checks << " checks, " << scope;
    } else {
      os << failures << "/" << checks << " failed (" << scope
         << "); first: " << first;
    }
    return os.str();
  }
};

inline double seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Slotwise products of coproduct values.
inline TensorB cupTensor(const TensorB& s, const TensorB& t) {
  TensorB out;
  for (const auto& [l1, r1] : s.terms)
    for (const auto& [l2, r2] : t.terms) {
      Element l = cup(Element::monomial(l1), Element::monomial(l2));
      Element r = cup(Element::monomial(r1), Element::monomial(r2));
      for (const auto& ml : l.terms())
        for (const auto& mr : r.terms()) out.toggle({ml, mr});
    }
  return out;
}

inline TensorB transferTensor(const TensorB& s, const TensorB& t) {
  TensorB out;
  for (const auto& [l1, r1] : s.terms)
    for (const auto& [l2, r2] : t.terms) {
      Element l = transferMonomials(l1, l2);
      Element r = transferMonomials(r1, r2);
      for (const auto& ml : l.terms())
        for (const auto& mr : r.terms()) out.toggle({ml, mr});
    }
  return out;
}

// Coassociativity comparison via triples, splitting either slot.
using SplitTriple = std::tuple<Monomial, Monomial, Monomial>;

inline std::set<SplitTriple> splitAgain(const TensorB& t, bool left) {
  std::set<SplitTriple> out;
  auto toggle = [&out](SplitTriple tr) {
    auto it = out.find(tr);
    if (it == out.end())
      out.insert(std::move(tr));
    else
      out.erase(it);
  };
  for (const auto& [l, r] : t.terms) {
    TensorB inner = coproductMonomial(left ? l : r);
    for (const auto& [x, y] : inner.terms)
      toggle(left ? SplitTriple{x, y, r} : SplitTriple{l, x, y});
  }
  return out;
}

// Coordinate vector of an element in a fixed monomial list.
inline bool elementRow(const Element& e, const std::map<Monomial, std::size_t>& idx,
                       GF2Matrix& m, std::size_t row) {
  for (const auto& t : e.terms()) {
    auto it = idx.find(t);
    if (it == idx.end()) return false;
    m.set(row, it->second, true);
  }
  return true;
}

// Rank of the row span of a list of elements.
inline std::size_t spanRank(const std::vector<Element>& rows,
                            const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  GF2Matrix m(rows.size(), basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!elementRow(rows[r], idx, m, r)) return static_cast<std::size_t>(-1);
  return m.rank();
}

// Normal form in a product of two even subgroups: reduce by both linear
// relations (disjoint variables after embedding).
inline F2Poly reduceBothRelations(const PartitionRing& full,
                                  const PartitionRing& subA,
                                  const PartitionRing& subB,
                                  const std::vector<std::size_t>& da,
                                  const std::vector<std::size_t>& db,
                                  F2Poly p) {
  F2Poly la = embedParts(subA, full, da, subA.linearRelation());
  F2Poly lb = embedParts(subB, full, db, subB.linearRelation());
  for (const F2Poly* l : {&la, &lb}) {
    if (l->isZero()) continue;
    int id = l->terms().begin()->front().first;
    F2Poly img = *l + F2Poly::var(id);
    p = p.substitute([&](int v) -> const F2Poly* {
      return v == id ? &img : nullptr;
    });
  }
  return p;
}

inline F2Poly substMap(const F2Poly& p, const std::map<int, F2Poly>& images) {
  return p.substitute([&](int id) -> const F2Poly* {
    auto it = images.find(id);
    return it == images.end() ? nullptr : &it->second;
  });
}

inline Partition2 partsOf(std::initializer_list<long> sizes) {
  Partition2 p;
  for (long s : sizes) {
    int k = 0;
    while ((1L << k) < s) ++k;
    HOPFOCT_REQUIRE((1L << k) == s, "parts must be powers of two");
    ++p.mult[k];
  }
  return p;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Product/coproduct axioms: associativity, commutativity,
// coassociativity, the (transfer, coproduct) bialgebra law, and literal
// distributivity. Single elements range over component <= 6, dimension <= 6;
// pairs and triples are bounded by total component and total dimension <= 6.

inline Criterion criterionHopfAxioms() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  std::vector<std::vector<std::vector<Monomial>>> bas(7);
  for (long n = 0; n <= 6; ++n) {
    bas[n].resize(7);
    for (long d = 0; d <= 6; ++d) bas[n][d] = basisMonomials(n, d);
  }

  // Coassociativity and counit.
  for (long n = 0; n <= 6; ++n)
    for (long d = 0; d <= 6; ++d)
      for (const auto& m : bas[n][d]) {
        TensorB dm = coproductMonomial(m);
        t.expect(detail::splitAgain(dm, true) == detail::splitAgain(dm, false),
                 "coassociativity at " + canonicalMonomialStr(m));
        Element counit;
        for (const auto& [l, r] : dm.terms)
          if (l.empty()) counit += Element::monomial(r);
        t.expect(counit == Element::monomial(m),
                 "counit at " + canonicalMonomialStr(m));
      }

  // Cup: unit, commutativity (pairs d1+d2 <= 6), associativity (triples).
  for (long n = 0; n <= 6; ++n) {
    for (long d = 0; d <= 6; ++d)
      for (const auto& m : bas[n][d])
        t.expect(cup(unitB(n), Element::monomial(m)) == Element::monomial(m),
                 "cup unit at " + canonicalMonomialStr(m));
    for (long d1 = 1; d1 <= 5; ++d1)
      for (long d2 = d1; d1 + d2 <= 6; ++d2)
        for (const auto& x : bas[n][d1])
          for (const auto& y : bas[n][d2]) {
            Element ex = Element::monomial(x), ey = Element::monomial(y);
            t.expect(cup(ex, ey) == cup(ey, ex),
                     "cup commutativity at " + canonicalMonomialStr(x) +
                         " , " + canonicalMonomialStr(y));
            for (long d3 = 1; d1 + d2 + d3 <= 6; ++d3)
              for (const auto& z : bas[n][d3]) {
                Element ez = Element::monomial(z);
                t.expect(cup(cup(ex, ey), ez) == cup(ex, cup(ey, ez)),
                         "cup associativity at " + canonicalMonomialStr(x) +
                             " , " + canonicalMonomialStr(y) + " , " +
                             canonicalMonomialStr(z));
              }
          }
  }

  // Transfer: commutativity, associativity, bialgebra compatibility.
  for (long n1 = 0; n1 <= 6; ++n1)
    for (long n2 = n1; n1 + n2 <= 6; ++n2)
      for (long d1 = 0; d1 <= 6; ++d1)
        for (long d2 = 0; d1 + d2 <= 6; ++d2)
          for (const auto& x : bas[n1][d1])
            for (const auto& y : bas[n2][d2]) {
              Element ex = Element::monomial(x), ey = Element::monomial(y);
              t.expect(transfer(ex, ey) == transfer(ey, ex),
                       "transfer commutativity at " +
                           canonicalMonomialStr(x) + " , " +
                           canonicalMonomialStr(y));
              t.expect(coproduct(transfer(ex, ey)) ==
                           detail::transferTensor(coproductMonomial(x),
                                                  coproductMonomial(y)),
                       "bialgebra law at " + canonicalMonomialStr(x) + " , " +
                           canonicalMonomialStr(y));
              for (long n3 = n2; n1 + n2 + n3 <= 6; ++n3)
                for (long d3 = 0; d1 + d2 + d3 <= 6; ++d3)
                  for (const auto& z : bas[n3][d3]) {
                    Element ez = Element::monomial(z);
                    t.expect(
                        transfer(transfer(ex, ey), ez) ==
                            transfer(ex, transfer(ey, ez)),
                        "transfer associativity at " +
                            canonicalMonomialStr(x) + " , " +
                            canonicalMonomialStr(y) + " , " +
                            canonicalMonomialStr(z));
                  }
            }

  // Distributivity: x * (y o z) = sum (x' * y) o (x'' * z) over Delta(x)
  // split at the component of y.
  for (long ny = 0; ny <= 6; ++ny)
    for (long nz = 0; ny + nz <= 6; ++nz)
      for (long dy = 0; dy <= 6; ++dy)
        for (long dz = 0; dy + dz <= 6; ++dz)
          for (const auto& y : bas[ny][dy])
            for (const auto& z : bas[nz][dz]) {
              Element ey = Element::monomial(y), ez = Element::monomial(z);
              Element yz = transfer(ey, ez);
              for (long dx = 0; dy + dz + dx <= 6; ++dx)
                for (const auto& x : bas[ny + nz][dx]) {
                  Element lhs = cup(Element::monomial(x), yz);
                  Element rhs;
                  for (const auto& [l, r] : coproductMonomial(x, ny).terms)
                    rhs += transfer(cup(Element::monomial(l), ey),
                                    cup(Element::monomial(r), ez));
                  t.expect(lhs == rhs,
                           "distributivity at x=" + canonicalMonomialStr(x) +
                               " y=" + canonicalMonomialStr(y) +
                               " z=" + canonicalMonomialStr(z));
                }
            }

  Criterion c{1, "hopf-axioms", false, false, "", detail::seconds(t0)};
  bool inBudget = c.seconds < 120.0;
  c.pass = t.failures == 0 && inBudget;
  c.detail = t.summary("component <= 6, total dimension <= 6") +
             (inBudget ? "" : "; over the 120 s budget");
  return c;
}

// ---------------------------------------------------------------------------
// 2. Euler-multiplication oracle: for n <= 8, d <= 8 the kernel and
// cokernel of cup-by-e_n, computed by Gaussian elimination, match the
// annihilator/quotient classifier, and kernel and image intersect trivially.

inline Criterion criterionGysinOracle() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  for (long n = 0; n <= 8; ++n) {
    std::vector<std::size_t> imageRank(10, 0);
    std::vector<std::vector<Element>> imageRows(10);
    for (long d = 0; d <= 8; ++d) {
      auto src = basisMonomials(n, d);
      auto dst = basisMonomials(n, d + 1);
      std::map<Monomial, std::size_t> idx;
      for (std::size_t i = 0; i < dst.size(); ++i) idx[dst[i]] = i;
      GF2Matrix m(dst.size(), src.size());
      std::vector<Element> image;
      for (std::size_t cidx = 0; cidx < src.size(); ++cidx) {
        Element img = eulerTimes(Element::monomial(src[cidx]));
        for (const auto& term : img.terms()) m.set(idx.at(term), cidx, true);
        if (!img.isZero()) image.push_back(img);
      }
      std::size_t rank = m.rank();
      std::size_t kerDim = src.size() - rank;
      imageRank[d + 1] = rank;
      imageRows[d + 1] = std::move(image);

      auto ann = annBasis(n, d);
      auto quot = quotBasis(n, d);
      char cell[64];
      std::snprintf(cell, sizeof cell, " at (%ld,%ld)", n, d);

      // Kernel: every classifier pick dies, and the counts agree, so the
      // spans coincide.
      t.expect(ann.size() == kerDim, "kernel dimension" + std::string(cell));
      for (const auto& am : ann)
        t.expect(eulerTimes(Element::monomial(am)).isZero(),
                 "annihilator not in the kernel" + std::string(cell));

      // Cokernel: the quotient picks complement the image.
      std::vector<Element> stacked = imageRows[d];
      for (const auto& qm : quot) stacked.push_back(Element::monomial(qm));
      t.expect(quot.size() + imageRank[d] == src.size(),
               "cokernel dimension" + std::string(cell));
      t.expect(detail::spanRank(stacked, src) == src.size(),
               "quotient picks meet the image" + std::string(cell));

      // Kernel and image are complementary, not just of matching size.
      std::vector<Element> kerAndIm = imageRows[d];
      for (const auto& am : ann) kerAndIm.push_back(Element::monomial(am));
      t.expect(detail::spanRank(kerAndIm, src) == imageRank[d] + ann.size(),
               "kernel meets the image" + std::string(cell));
    }
  }

  // Classifier spot check at (10,10): the dominant level-1-only block makes
  // the three-block monomial a quotient pick, not an annihilator.
  Monomial big{GatheredBlock{2, 1, {{1, 1}}}, GatheredBlock{4, 0, {{1, 2}}},
               GatheredBlock{4, 0, {{2, 1}}}};
  std::sort(big.begin(), big.end());
  t.expect(monomialBidegree(big) == Bidegree{10, 10}, "pinned (10,10) bidegree");
  t.expect(isQuotMonomial(big) && !isAnnMonomial(big),
           "pinned (10,10) classification");
  t.expect(!eulerTimes(Element::monomial(big)).isZero(),
           "pinned (10,10) euler product");

  Criterion c{2, "gysin-oracle", t.failures == 0, false, "", detail::seconds(t0)};
  c.detail = t.summary("n <= 8, d <= 8");
  return c;
}

// ---------------------------------------------------------------------------
// 3. Basis bookkeeping: the signed-side dimension is |quot| + |ann| (quot
// picks survive once, ann picks split into a signed pair while staying
// inside quot), res is onto away from components divisible by 4, and the
// component-2 table matches an independent minimal resolution of the cyclic
// group of order 4.

inline Criterion criterionBasisBookkeeping() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  for (long n = 0; n <= 8; ++n)
    for (long d = 0; d <= 8; ++d) {
      char cell[64];
      std::snprintf(cell, sizeof cell, " at (%ld,%ld)", n, d);
      auto ann = annBasis(n, d);
      t.expect(chargedBasis(n, d).size() ==
                   quotBasis(n, d).size() + ann.size(),
               "dimension bookkeeping" + std::string(cell));
      for (const auto& m : ann)
        t.expect(isQuotMonomial(m), "ann pick outside quot" + std::string(cell));
    }

  // res surjectivity for n not divisible by 4: rank of res on the basis.
  for (long n = 1; n <= 8; ++n) {
    if (n % 4 == 0) continue;
    for (long d = 0; d <= 8; ++d) {
      auto src = basisMonomials(n, d);
      auto dst = chargedBasis(n, d);
      std::map<ChargedMonomial, std::size_t> idx;
      for (std::size_t i = 0; i < dst.size(); ++i) idx[dst[i]] = i;
      GF2Matrix m(dst.size(), src.size());
      bool ok = true;
      for (std::size_t cidx = 0; cidx < src.size(); ++cidx) {
        ChargedElement r = res(Element::monomial(src[cidx]));
        for (const auto& term : r.terms()) {
          auto it = idx.find(term);
          if (it == idx.end()) {
            ok = false;
            break;
          }
          m.set(it->second, cidx, true);
        }
      }
      char cell[64];
      std::snprintf(cell, sizeof cell, " at (%ld,%ld)", n, d);
      t.expect(ok && m.rank() == dst.size(),
               "res surjectivity" + std::string(cell));
    }
  }

  // Component 2 against the cyclic group of order 4, from scratch: the
  // regular representation, the two boundary maps s and s^3, exactness,
  // and the induced maps on Hom(-, F2) all computed by elimination.
  {
    GF2Matrix g(4, 4);  // generator permutation on the group basis
    for (std::size_t i = 0; i < 4; ++i) g.set((i + 1) % 4, i, true);
    auto matMul = [](const GF2Matrix& a, const GF2Matrix& b) {
      GF2Matrix r(a.rows(), b.cols());
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
          if (a.get(i, k))
            for (std::size_t j = 0; j < b.cols(); ++j)
              if (b.get(k, j)) r.set(i, j, r.get(i, j) ^ true);
      return r;
    };
    auto matAdd = [](GF2Matrix a, const GF2Matrix& b) {
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          if (b.get(i, j)) a.set(i, j, a.get(i, j) ^ true);
      return a;
    };
    GF2Matrix id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.set(i, i, true);
    GF2Matrix s = matAdd(g, id);                       // g + 1
    GF2Matrix s3 = matMul(s, matMul(s, s));            // (g + 1)^3 = norm
    bool zero = true;
    GF2Matrix ss3 = matMul(s, s3);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (ss3.get(i, j)) zero = false;
    t.expect(zero, "boundary composition s s^3");
    // Exactness of ... -> R -s3-> R -s-> R -aug-> F2.
    t.expect(s.rank() == 3 && s3.rank() == 1, "boundary ranks");
    t.expect(s.rank() + s3.rank() == 4, "exactness of the resolution");
    // Module maps R -> F2 satisfy phi g = phi: kernel of (g - 1) acting on
    // row functionals; the induced differentials phi -> phi s vanish.
    GF2Matrix gt(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) gt.set(i, j, g.get(j, i));
    GF2Matrix constraint = matAdd(gt, id);
    auto homBasis = constraint.kernelBasis();
    t.expect(homBasis.size() == 1, "Hom(R, F2) is one-dimensional");
    for (const auto& phi : homBasis)
      for (const GF2Matrix* bd : {&s, &s3}) {
        bool vanish = true;
        for (std::size_t j = 0; j < 4; ++j) {
          bool acc = false;
          for (std::size_t i = 0; i < 4; ++i)
            if (phi[i] && bd->get(i, j)) acc = !acc;
          if (acc) vanish = false;
        }
        t.expect(vanish, "induced differential vanishes");
      }
    // All differentials vanish on a rank-1 term: one class per degree.
    for (long d = 0; d <= 8; ++d) {
      char cell[48];
      std::snprintf(cell, sizeof cell, "component-2 table at d=%ld", d);
      t.expect(chargedBasis(2, d).size() == 1, cell);
    }
  }

  Criterion c{3, "basis-bookkeeping", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("n <= 8, d <= 8");
  return c;
}

// ---------------------------------------------------------------------------
// 4. res/tr identities on the bases: res tr = 1 + iota, tr res = 0,
// res o res = 0, the projection formula, and the tr product rule.
// Single elements at n <= 6, d <= 6; pairs bounded by the same totals.

inline Criterion criterionResTrIdentities() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  for (long n = 0; n <= 6; ++n)
    for (long d = 0; d <= 6; ++d) {
      for (const auto& m : basisMonomials(n, d))
        t.expect(tr(res(Element::monomial(m))).isZero(),
                 "tr res at " + canonicalMonomialStr(m));
      for (const auto& x : chargedBasis(n, d)) {
        ChargedElement lhs = res(tr(ChargedElement::monomial(x)));
        ChargedElement rhs = ChargedElement::monomial(x);
        rhs.toggle(iota(x));
        t.expect(lhs == rhs, "res tr at " + canonicalChargedStr(x));
      }
    }

  for (long n1 = 0; n1 <= 6; ++n1)
    for (long n2 = 0; n1 + n2 <= 6; ++n2)
      for (long d1 = 0; d1 <= 6; ++d1)
        for (long d2 = 0; d1 + d2 <= 6; ++d2) {
          // res(x) o res(y) = 0 and the projection formula
          // res(tr(x) o y) = x o res(y).
          for (const auto& xm : basisMonomials(n1, d1))
            for (const auto& ym : basisMonomials(n2, d2)) {
              Element ex = Element::monomial(xm), ey = Element::monomial(ym);
              t.expect(transferCharged(res(ex), res(ey)).isZero(),
                       "res o res at " + canonicalMonomialStr(xm) + " , " +
                           canonicalMonomialStr(ym));
            }
          for (const auto& x : chargedBasis(n1, d1))
            for (const auto& ym : basisMonomials(n2, d2)) {
              ChargedElement cx = ChargedElement::monomial(x);
              Element ey = Element::monomial(ym);
              t.expect(res(transfer(tr(cx), ey)) ==
                           transferCharged(cx, res(ey)),
                       "projection formula at " + canonicalChargedStr(x) +
                           " , " + canonicalMonomialStr(ym));
            }
        }

  // tr(x) tr(x') = tr(x x' + iota(x) x') within one component.
  for (long n = 0; n <= 6; ++n)
    for (long d1 = 0; d1 <= 6; ++d1)
      for (long d2 = d1; d1 + d2 <= 6; ++d2)
        for (const auto& x : chargedBasis(n, d1))
          for (const auto& y : chargedBasis(n, d2)) {
            ChargedElement cx = ChargedElement::monomial(x);
            ChargedElement cy = ChargedElement::monomial(y);
            Element lhs = cup(tr(cx), tr(cy));
            Element rhs = tr(cupCharged(cx, cy) + cupCharged(iota(cx), cy));
            t.expect(lhs == rhs, "tr product rule at " +
                                     canonicalChargedStr(x) + " , " +
                                     canonicalChargedStr(y));
          }

  Criterion c{4, "res-tr-identities", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("n <= 6, d <= 6");
  return c;
}

// ---------------------------------------------------------------------------
// 5. The nine presentation relations for k <= 3, l,m <= 3 (components
// capped at 24), plus cross-engine agreement between the normal-form
// products and the word-level expansion on annihilator blocks.

inline Criterion criterionPresentation() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;
  ChargedElement up = chargedUnit(Charge::Plus);
  ChargedElement um = chargedUnit(Charge::Minus);

  // (1) 1^+ + 1^- = res(1).
  t.expect(res(unitB(0)) == up + um, "relation 1");

  // (2) 1^+ is the transfer unit.
  for (long n = 0; n <= 8; ++n)
    for (long d = 0; d <= 6; ++d)
      for (const auto& x : chargedBasis(n, d))
        t.expect(transferCharged(up, ChargedElement::monomial(x)) ==
                     ChargedElement::monomial(x),
                 "relation 2 at " + canonicalChargedStr(x));

  // (3) 1^- o 1^- = 1^+.
  t.expect(transferCharged(um, um) == up, "relation 3");

  // (4) gamma transfer powers with binomial parity, all four sign pairs.
  for (int k = 2; k <= 3; ++k)
    for (long l = 1; l <= 3; ++l)
      for (long m = 1; m <= 3; ++m) {
        if ((l + m) << k > 24) continue;
        for (Charge e : {Charge::Plus, Charge::Minus})
          for (Charge f : {Charge::Plus, Charge::Minus}) {
            ChargedElement lhs = transferCharged(gammaCharged(k, l, e),
                                                 gammaCharged(k, m, f));
            ChargedElement rhs =
                binomialOdd(static_cast<std::uint64_t>(l + m),
                            static_cast<std::uint64_t>(l))
                    ? gammaCharged(k, l + m, chargeMul(e, f))
                    : ChargedElement::zero();
            char what[64];
            std::snprintf(what, sizeof what, "relation 4 at k=%d l=%ld m=%ld",
                          k, l, m);
            t.expect(lhs == rhs, what);
          }
      }

  // (5) mixed-charge cup vanishes unless both levels are 2.
  for (int k = 2; k <= 3; ++k)
    for (int k2 = 2; k2 <= 3; ++k2)
      for (long l = 1; l <= 3; ++l)
        for (long l2 = 1; l2 <= 3; ++l2) {
          if (k == 2 && k2 == 2) continue;
          if (l << k != l2 << k2 || (l << k) > 24) continue;
          char what[64];
          std::snprintf(what, sizeof what,
                        "relation 5 at k=%d l=%ld k'=%d l'=%ld", k, l, k2, l2);
          t.expect(cupCharged(gammaCharged(k, l, Charge::Plus),
                              gammaCharged(k2, l2, Charge::Minus))
                       .isZero(),
                   what);
        }

  // (6) the level-2 mixed square, odd and even m.
  for (long m = 1; m <= 3; ++m) {
    ChargedElement lhs = cupCharged(gammaCharged(2, m, Charge::Plus),
                                    gammaCharged(2, m, Charge::Minus));
    ChargedElement sqLow =
        m == 1 ? up
               : cupCharged(gammaCharged(2, m - 1, Charge::Plus),
                            gammaCharged(2, m - 1, Charge::Plus));
    ChargedElement rhs = transferCharged(sqLow, res(gammaGen(1, 2, 3)));
    if (m % 2 == 1) {
      ChargedElement sq = cupCharged(gammaCharged(2, m, Charge::Plus),
                                     gammaCharged(2, m, Charge::Plus));
      rhs += sq + iota(sq);
    }
    char what[32];
    std::snprintf(what, sizeof what, "relation 6 at m=%ld", m);
    t.expect(lhs == rhs, what);
  }

  // (7) generator cup an all-low class factors blockwise.
  for (int k = 2; k <= 3; ++k)
    for (long l = 1; l <= 3; ++l) {
      long comp = l << k;
      if (comp > 16) continue;
      long dcap = comp <= 8 ? 6 : 4;
      for (long d = 0; d <= dcap; ++d)
        for (const auto& x : basisMonomials(comp, d)) {
          bool allLow = true;
          for (const auto& b : x)
            if (b.maxLevel() > 1) allLow = false;
          if (!allLow) continue;
          ChargedElement lhs =
              cupCharged(gammaCharged(k, l, Charge::Plus),
                         res(Element::monomial(x)));
          bool divisible = true;
          for (const auto& b : x)
            if (b.comp % (1L << k) != 0) divisible = false;
          ChargedElement rhs;
          if (divisible) {
            rhs = up;
            for (const auto& b : x)
              rhs = transferCharged(
                  rhs, cupCharged(gammaCharged(k, b.comp >> k, Charge::Plus),
                                  res(Element::monomial(Monomial{b}))));
          }
          t.expect(lhs == rhs,
                   "relation 7 at k=" + std::to_string(k) +
                       " x=" + canonicalMonomialStr(x));
        }
    }

  // (8) twisted coproduct compatibility with the transfer product.
  auto twisted = [&t](const ChargedMonomial& u, const ChargedMonomial& v) {
    ChargedElement uv = transferCharged(ChargedElement::monomial(u),
                                        ChargedElement::monomial(v));
    ChargedTensor lhs;
    for (const auto& m : uv.terms()) lhs += coproductCharged(m);
    ChargedTensor rhs;
    for (const auto& [u1, u2] : coproductCharged(u).terms)
      for (const auto& [v1, v2] : coproductCharged(v).terms) {
        bool keep = u1.charge == Charge::Plus ||
                    (u1.charge == Charge::Zero && v1.charge == Charge::Plus);
        if (!keep) continue;
        rhs += tensorOf(transferCharged(u1, v1), transferCharged(u2, v2));
      }
    t.expect(lhs == rhs, "relation 8 at " + canonicalChargedStr(u) + " , " +
                             canonicalChargedStr(v));
  };
  for (long n1 = 0; n1 <= 6; ++n1)
    for (long n2 = n1; n1 + n2 <= 6; ++n2)
      for (long d1 = 0; d1 <= 4; ++d1)
        for (long d2 = 0; d1 + d2 <= 4; ++d2)
          for (const auto& u : chargedBasis(n1, d1))
            for (const auto& v : chargedBasis(n2, d2)) twisted(u, v);
  for (long d1 = 0; d1 <= 4; ++d1)
    for (long d2 = 0; d1 + d2 <= 4; ++d2)
      for (const auto& u : chargedBasis(4, d1))
        for (const auto& v : chargedBasis(4, d2)) twisted(u, v);
  twisted({Monomial{GatheredBlock{4, 0, {{2, 1}}}}, Charge::Plus},
          {Monomial{GatheredBlock{4, 0, {{1, 2}}}}, Charge::Zero});
  twisted({Monomial{GatheredBlock{4, 0, {{2, 1}}}}, Charge::Minus},
          {Monomial{GatheredBlock{2, 0, {{1, 1}}}}, Charge::Zero});
  twisted({Monomial{GatheredBlock{4, 0, {{2, 1}}}}, Charge::Plus},
          {Monomial{GatheredBlock{8, 0, {{1, 1}, {2, 1}}}}, Charge::Plus});

  // (9) coproduct of the charged generators, gamma_{k,0}^± read as 1^±.
  for (int k = 2; k <= 3; ++k)
    for (long l = 1; l <= 3; ++l) {
      if ((l << k) > 24) continue;
      auto gammaOrUnit = [&](long i, Charge c) {
        return i == 0 ? chargedUnit(c) : gammaCharged(k, i, c);
      };
      ChargedTensor rhs;
      for (long i = 0; i <= l; ++i)
        for (Charge c : {Charge::Plus, Charge::Minus})
          rhs += tensorOf(gammaOrUnit(i, c), gammaOrUnit(l - i, c));
      char what[48];
      std::snprintf(what, sizeof what, "relation 9 at k=%d l=%ld", k, l);
      t.expect(coproductCharged(gammaCharged(k, l, Charge::Plus)) == rhs,
               what);
    }

  // Cross-engine: for every single-block annihilator monomial the word
  // expansion renormalizes to the block lift itself.
  long blocks = 0;
  for (long n = 4; n <= 16; n += 4)
    for (long d = 0; d <= 15; ++d)
      for (const auto& m : annBasis(n, d)) {
        if (m.size() != 1) continue;
        ++blocks;
        for (Charge s : {Charge::Plus, Charge::Minus}) {
          ChargedElement sum;
          for (const Word& w : blockToWords(m[0], s)) sum += wordToBasis(w);
          t.expect(sum == ChargedElement::monomial({m, s}),
                   "cross-engine at " + canonicalChargedStr({m, s}));
        }
      }

  Criterion c{5, "presentation", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("k <= 3, l,m <= 3; " + std::to_string(blocks) +
                       " annihilator blocks to component 16");
  return c;
}

// ---------------------------------------------------------------------------
// 6. Invariant-theory identities: h h-perp, the h-sum complement products,
// the quartic factorization, and Weyl-generator invariance.

inline Criterion criterionInvariantTheory() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  // h * h-perp = d_2^3 + d_3^2 on a size-4 part, h + h-perp = d_3.
  {
    const PartitionRing& R = partitionRing(detail::partsOf({4}));
    t.expect(R.hTop(0) + R.hTopPerp(0) == R.dickson(0, 2), "h split of d_3");
    t.expect(R.hTop(0) * R.hTopPerp(0) ==
                 R.dickson(0, 1).pow(3) + R.dickson(0, 2).pow(2),
             "h h-perp product");
  }

  // h-sum times its complement for m parts of size 4.
  for (int m : {1, 2, 3}) {
    std::initializer_list<long> shapes[] = {{4}, {4, 4}, {4, 4, 4}};
    const PartitionRing& R = partitionRing(detail::partsOf(shapes[m - 1]));
    F2Poly dAll = F2Poly::one();
    for (int i = 0; i < m; ++i) dAll *= R.dickson(i, 2);
    t.expect(R.hSum(false) + R.hSum(true) == dAll, "h-sum pair sums to d_3");
    F2Poly lhs = R.hSum(false) * (dAll + R.hSum(false));
    F2Poly rhs = F2Poly::zero();
    if (m % 2 == 1) {
      F2Poly sq = F2Poly::one();
      for (int i = 0; i < m; ++i) sq *= R.dickson(i, 2).pow(2);
      rhs += sq;
    }
    for (int i = 0; i < m; ++i) {
      F2Poly term = F2Poly::one();
      for (int j = 0; j < m; ++j)
        term *= j == i ? R.dickson(j, 1).pow(3) : R.dickson(j, 2).pow(2);
      rhs += term;
    }
    char what[40];
    std::snprintf(what, sizeof what, "h-sum complement at m=%d", m);
    t.expect(lhs == rhs, what);
  }

  // Quartic factorization: prod over the span of (t + x + v)
  // = t^4 + d_2 t^2 + d_3 t + f_4.
  {
    const PartitionRing& R = partitionRing(detail::partsOf({4}));
    F2Poly tv = F2Poly::var(R.varCount());
    F2Poly x = F2Poly::var(R.xVar(0));
    F2Poly lhs = F2Poly::one();
    for (int m = 0; m < 4; ++m) {
      F2Poly v = tv + x;
      for (int j = 1; j <= 2; ++j)
        if (m >> (j - 1) & 1) v += F2Poly::var(R.yVar(0, j));
      lhs *= v;
    }
    t.expect(lhs == tv.pow(4) + R.dickson(0, 1) * tv.pow(2) +
                        R.dickson(0, 2) * tv + R.fClass(0),
             "quartic factorization");
  }

  // Weyl invariance of f and Dickson classes for part sizes 2, 4, 8.
  {
    const PartitionRing& R = partitionRing(detail::partsOf({2}));
    std::map<int, F2Poly> g = {
        {R.xVar(0), F2Poly::var(R.xVar(0)) + F2Poly::var(R.yVar(0, 1))}};
    t.expect(detail::substMap(R.fClass(0), g) == R.fClass(0) &&
                 detail::substMap(R.dickson(0, 1), g) == R.dickson(0, 1),
             "invariance on a size-2 part");
  }
  {
    const PartitionRing& R = partitionRing(detail::partsOf({4}));
    F2Poly x = F2Poly::var(R.xVar(0));
    F2Poly y1 = F2Poly::var(R.yVar(0, 1));
    F2Poly y2 = F2Poly::var(R.yVar(0, 2));
    std::vector<std::map<int, F2Poly>> gens = {
        {{R.yVar(0, 1), y2}, {R.yVar(0, 2), y1}},
        {{R.yVar(0, 2), y1 + y2}},
        {{R.xVar(0), x + y1}},
        {{R.xVar(0), x + y2}}};
    for (const auto& g : gens) {
      bool ok = detail::substMap(R.fClass(0), g) == R.fClass(0);
      for (int l = 1; l <= 2; ++l)
        ok = ok && detail::substMap(R.dickson(0, l), g) == R.dickson(0, l);
      t.expect(ok, "invariance on a size-4 part");
    }
    // Even generators fix the h classes, odd ones exchange them.
    std::vector<std::map<int, F2Poly>> even = {
        {{R.yVar(0, 1), y2}, {R.yVar(0, 2), y1 + y2}},
        {{R.xVar(0), x + y1}}};
    for (const auto& g : even)
      t.expect(detail::substMap(R.hTop(0), g) == R.hTop(0) &&
                   detail::substMap(R.hTopPerp(0), g) == R.hTopPerp(0),
               "even invariance of h");
    std::vector<std::map<int, F2Poly>> odd = {
        {{R.yVar(0, 1), y2}, {R.yVar(0, 2), y1}},
        {{R.yVar(0, 2), y1 + y2}}};
    for (const auto& g : odd)
      t.expect(detail::substMap(R.hTop(0), g) == R.hTopPerp(0) &&
                   detail::substMap(R.hTopPerp(0), g) == R.hTop(0),
               "odd swap of h");
  }
  {
    const PartitionRing& R = partitionRing(detail::partsOf({8}));
    F2Poly x = F2Poly::var(R.xVar(0));
    F2Poly y1 = F2Poly::var(R.yVar(0, 1));
    F2Poly y2 = F2Poly::var(R.yVar(0, 2));
    F2Poly y3 = F2Poly::var(R.yVar(0, 3));
    std::vector<std::map<int, F2Poly>> gens = {
        {{R.yVar(0, 1), y2}, {R.yVar(0, 2), y1}},
        {{R.yVar(0, 2), y3}, {R.yVar(0, 3), y2}},
        {{R.yVar(0, 3), y1 + y3}},
        {{R.xVar(0), x + y1}}};
    for (const auto& g : gens) {
      bool ok = detail::substMap(R.fClass(0), g) == R.fClass(0);
      for (int l = 1; l <= 3; ++l)
        ok = ok && detail::substMap(R.dickson(0, l), g) == R.dickson(0, l);
      t.expect(ok, "invariance on a size-8 part");
    }
  }

  // h-sums over several parts: swap invariance and partwise parity.
  {
    const PartitionRing& R = partitionRing(detail::partsOf({4, 4}));
    std::map<int, F2Poly> swap;
    swap[R.xVar(0)] = F2Poly::var(R.xVar(1));
    swap[R.xVar(1)] = F2Poly::var(R.xVar(0));
    for (int j = 1; j <= 2; ++j) {
      swap[R.yVar(0, j)] = F2Poly::var(R.yVar(1, j));
      swap[R.yVar(1, j)] = F2Poly::var(R.yVar(0, j));
    }
    t.expect(detail::substMap(R.hSum(false), swap) == R.hSum(false) &&
                 detail::substMap(R.hSum(true), swap) == R.hSum(true),
             "h-sum part swap");
    std::map<int, F2Poly> t0m = {{R.yVar(0, 1), F2Poly::var(R.yVar(0, 2))},
                                 {R.yVar(0, 2), F2Poly::var(R.yVar(0, 1))}};
    std::map<int, F2Poly> t01 = t0m;
    t01[R.yVar(1, 1)] = F2Poly::var(R.yVar(1, 2));
    t01[R.yVar(1, 2)] = F2Poly::var(R.yVar(1, 1));
    t.expect(detail::substMap(R.hSum(false), t0m) == R.hSum(true) &&
                 detail::substMap(R.hSum(false), t01) == R.hSum(false),
             "h-sum partwise parity");
  }

  Criterion c{6, "invariant-theory", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("part sizes to 8, m <= 3");
  return c;
}

// ---------------------------------------------------------------------------
// 7. Restriction compatibility: the coproduct square over disjoint unions,
// the transfer double-coset formula, and vanishing on the Euler ideal.

inline Criterion criterionRestrictionCompat() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  // Coproduct square, plain side: all union splits for n <= 8.
  for (long n = 2; n <= 8; ++n) {
    long dmax = n <= 6 ? 4 : 3;
    for (long d = 1; d <= dmax; ++d)
      for (const auto& m : basisMonomials(n, d))
        for (long nl = 1; nl < n; ++nl)
          for (const auto& a : admissiblePartitions(nl))
            for (const auto& b : admissiblePartitions(n - nl)) {
              Partition2 u = unionPartition(a, b);
              const PartitionRing& RU = partitionRing(u);
              const PartitionRing& RA = partitionRing(a);
              const PartitionRing& RB = partitionRing(b);
              auto [da, db] = unionDest(a, b);
              F2Poly direct = restrictB(u, m);
              F2Poly viaSplit = F2Poly::zero();
              for (const auto& [l, r] : coproductMonomial(m, nl).terms)
                viaSplit += embedParts(RA, RU, da, restrictB(a, l)) *
                            embedParts(RB, RU, db, restrictB(b, r));
              t.expect(direct == viaSplit,
                       "plain square at " + canonicalMonomialStr(m) + " , " +
                           a.str() + "+" + b.str());
            }
  }

  // Coproduct square, charged side, with both linear relations reduced.
  auto chargedSquare = [&t](const Partition2& a, const Partition2& b,
                            const ChargedMonomial& x) {
    Partition2 u = unionPartition(a, b);
    const PartitionRing& RU = partitionRing(u);
    const PartitionRing& RA = partitionRing(a);
    const PartitionRing& RB = partitionRing(b);
    auto [da, db] = unionDest(a, b);
    F2Poly direct = detail::reduceBothRelations(RU, RA, RB, da, db,
                                                restrictCharged(u, x));
    F2Poly viaSplit = F2Poly::zero();
    for (const auto& [l, r] :
         coproductCharged(ChargedElement::monomial(x)).terms) {
      if (l.bidegree().comp != a.total()) continue;
      viaSplit += embedParts(RA, RU, da, restrictCharged(a, l)) *
                  embedParts(RB, RU, db, restrictCharged(b, r));
    }
    t.expect(direct ==
                 detail::reduceBothRelations(RU, RA, RB, da, db, viaSplit),
             "charged square at " + canonicalChargedStr(x) + " , " + a.str() +
                 "+" + b.str());
  };
  for (long n : {4L, 6L})
    for (long d = 1; d <= 4; ++d)
      for (const auto& x : chargedBasis(n, d))
        for (long nl = 0; nl <= n; ++nl)
          for (const auto& a : admissiblePartitions(nl))
            for (const auto& b : admissiblePartitions(n - nl))
              chargedSquare(a, b, x);
  Monomial g22{GatheredBlock{8, 0, {{2, 1}}}};
  for (Charge cgs : {Charge::Plus, Charge::Minus}) {
    chargedSquare(detail::partsOf({4}), detail::partsOf({4}), {g22, cgs});
    chargedSquare(detail::partsOf({4, 2, 2}), detail::partsOf({}), {g22, cgs});
    chargedSquare(detail::partsOf({2, 2}), detail::partsOf({4}), {g22, cgs});
  }

  // Transfer formula over double cosets.
  auto doubleCoset = [](const Partition2& pi, const ChargedMonomial& x,
                        const ChargedMonomial& y) {
    const PartitionRing& R = partitionRing(pi);
    long cx = x.bidegree().comp;
    F2Poly acc = F2Poly::zero();
    for (const auto& s : partitionSplits(pi, cx)) {
      if (!s.left.allEven() && !s.right.allEven()) continue;
      const PartitionRing& RL = partitionRing(s.left);
      const PartitionRing& RR = partitionRing(s.right);
      acc += embedParts(RL, R, s.leftParts, restrictCharged(s.left, x)) *
             embedParts(RR, R, s.rightParts, restrictCharged(s.right, y));
      acc +=
          embedParts(RL, R, s.leftParts, restrictCharged(s.left, iota(x))) *
          embedParts(RR, R, s.rightParts, restrictCharged(s.right, iota(y)));
    }
    return R.reduce(acc);
  };
  Monomial g21{GatheredBlock{4, 0, {{2, 1}}}};
  Monomial wg21{GatheredBlock{4, 1, {{2, 1}}}};
  std::vector<std::pair<ChargedMonomial, ChargedMonomial>> cases = {
      {{g21, Charge::Plus}, {g21, Charge::Plus}},
      {{g21, Charge::Plus}, {g21, Charge::Minus}},
      {{g21, Charge::Minus}, {g21, Charge::Minus}},
      {{g21, Charge::Plus}, {wg21, Charge::Plus}},
      {{g21, Charge::Minus}, {wg21, Charge::Plus}},
      {{wg21, Charge::Plus}, {wg21, Charge::Minus}}};
  for (const auto& pi : admissiblePartitions(8))
    for (const auto& [x, y] : cases) {
      ChargedElement prod = transferCharged(ChargedElement::monomial(x),
                                            ChargedElement::monomial(y));
      t.expect(restrictCharged(pi, prod) == doubleCoset(pi, x, y),
               "transfer formula at " + pi.str());
    }
  for (const auto& pi : admissiblePartitions(12))
    for (Charge cgs : {Charge::Plus, Charge::Minus}) {
      ChargedMonomial x{g21, cgs};
      ChargedMonomial y{g22, Charge::Plus};
      ChargedElement prod = transferCharged(ChargedElement::monomial(x),
                                            ChargedElement::monomial(y));
      t.expect(restrictCharged(pi, prod) == doubleCoset(pi, x, y),
               "transfer formula at " + pi.str());
    }

  // The Euler ideal dies under every partition restriction, on both paths.
  for (long n = 2; n <= 8; ++n)
    for (long d = 0; d <= 3; ++d)
      for (const auto& x : basisMonomials(n, d)) {
        Element ex = eulerTimes(Element::monomial(x));
        for (const auto& pi : admissiblePartitions(n)) {
          const PartitionRing& R = partitionRing(pi);
          bool dead = R.reduce(restrictB(pi, ex)).isZero();
          F2Poly viaCharge = F2Poly::zero();
          for (const auto& m : ex.terms())
            viaCharge += restrictCharged(pi, {m, Charge::Zero});
          t.expect(dead && viaCharge.isZero(),
                   "euler ideal at " + canonicalMonomialStr(x) + " , " +
                       pi.str());
        }
      }

  Criterion c{7, "restriction-compat", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("all partition splits, n <= 8");
  return c;
}

// ---------------------------------------------------------------------------
// 8. Detection: stacked restriction matrices on the charged basis. The
// components congruent to 2 mod 4 carry recorded defects. At component 2
// the positive part is cyclic of order 4 and the only admissible subgroup
// restrictions kill its odd-degree classes. At component 6 the classes
// (g(2,1) o y)^0 with y of component 2 die in every maximal elementary
// abelian: g(2,1) restricts to zero off a full size-4 part, and on the
// remaining partitions (4,2) and (4,1,1) the component-2 factor restricts
// into the ideal of the sign relation. The criterion is acceptable exactly
// when the observed defect cells match the recorded ones, every defect
// kernel class verifiably restricts to zero under all admissible subgroups
// in both flavors, and everything else has full rank.

inline Criterion criterionDetection() {
  auto t0 = std::chrono::steady_clock::now();
  const std::set<std::pair<long, long>> recorded = {
      {2, 1}, {2, 3}, {2, 5}, {6, 4}, {6, 6}};
  std::set<std::pair<long, long>> observed;
  long cells = 0;
  bool invisible = true;  // defect kernels restrict to zero everywhere
  std::string visible;
  for (long n : {2L, 3L, 4L, 5L, 6L, 8L})
    for (long d = 0; d <= 6; ++d) {
      ++cells;
      std::vector<ChargedMonomial> cols;
      GF2Matrix m = detectionMatrix(n, d, &cols);
      if (m.rank() == cols.size()) continue;
      observed.insert({n, d});
      for (const auto& v : m.kernelBasis()) {
        ChargedElement e;
        for (std::size_t j = 0; j < v.size(); ++j)
          if (v[j]) e.toggle(cols[j]);
        for (const auto& pi : admissiblePartitions(n))
          for (bool twist : {false, true}) {
            F2Poly r = restrictCharged(pi, twist ? iota(e) : e);
            if (!r.isZero() && invisible) {
              invisible = false;
              visible = " at (" + std::to_string(n) + "," +
                        std::to_string(d) + ") under " + pi.str();
            }
          }
      }
    }

  Criterion c{8, "detection", false, false, "", detail::seconds(t0)};
  bool inBudget = c.seconds < 300.0;
  std::ostringstream os;
  if (observed.empty()) {
    c.pass = inBudget;
    os << cells << " cells full rank";
  } else if (observed == recorded && invisible && inBudget) {
    c.documented = true;
    os << "rank deficit exactly at the recorded cells (2,1) (2,3) (2,5) "
          "(6,4) (6,6); every kernel class there restricts to zero under "
          "all admissible subgroups in both flavors, so no detection "
          "matrix can separate it; the other "
       << (cells - static_cast<long>(observed.size()))
       << " cells have full column rank";
  } else {
    for (auto [n, d] : observed) os << " (" << n << "," << d << ")";
    std::string list = os.str();
    os.str("");
    os << "unexpected defect cells:" << list;
    if (!invisible) os << "; kernel class visible" << visible;
  }
  if (!inBudget) os << "; over the 300 s budget";
  c.detail = os.str();
  return c;
}

// ---------------------------------------------------------------------------
// 9. Signed tuple differential: shuffle class sizes, boundary cancellation
// on runs of ones, the four-addend collapse on the cochain witnesses, and
// the pruning-pairing report with both closed sign formulas checked against
// brute-force inversion counts.

inline Criterion criterionFoxNeuwirth() {
  auto t0 = std::chrono::steady_clock::now();
  detail::Tally t;

  for (int r = 2; r <= 6; ++r) {
    ShuffleSet s = symmetricShuffles(r);
    char what[48];
    std::snprintf(what, sizeof what, "shuffle class sizes at r=%d", r);
    t.expect(s.plus.size() == (1u << (r - 1)) &&
                 s.minus.size() == (1u << (r - 1)),
             what);

    // d0 on a run of r-1 ones: 2^r addends on one underlying tuple, split
    // evenly between the charges, so the sum cancels.
    SignedTuple run;
    run.entries.assign(r, 1);
    run.entries[0] = 0;
    auto addends = d0Addends(run);
    std::snprintf(what, sizeof what, "addend count at r=%d", r);
    t.expect(addends.size() == (1u << r), what);
    long plus = 0;
    for (const auto& a : addends)
      if (a.charge == Charge::Plus) ++plus;
    std::snprintf(what, sizeof what, "charge split at r=%d", r);
    t.expect(plus == (1L << (r - 1)), what);
    std::snprintf(what, sizeof what, "cancellation at r=%d", r);
    t.expect(d0(run).isZero(), what);
  }

  // Four-addend collapse: the two-leaf chain block of beta(1,j) produces
  // two addends per charge whose multiset doubles two values.
  for (int l : {2, 3})
    for (long m = 1; m <= 3; ++m) {
      for (long j = 2; j <= m + 1; ++j) {
        FNElement pair = d0(FNElement::monomial(gammaBetaTuple(l, m, 1, j,
                                                               Charge::Plus)) +
                            FNElement::monomial(gammaBetaTuple(l, m, 1, j,
                                                               Charge::Minus)));
        char what[64];
        std::snprintf(what, sizeof what,
                      "four-addend collapse at l=%d m=%ld j=%ld", l, m, j);
        t.expect(pair.isZero(), what);
      }
      for (long i = 2; i <= m; ++i)
        for (long j = i + 1; j <= m + 1; ++j)
          for (Charge cgs : {Charge::Plus, Charge::Minus}) {
            char what[80];
            std::snprintf(what, sizeof what,
                          "corolla vanishing at l=%d m=%ld i=%ld j=%ld", l, m,
                          i, j);
            t.expect(
                d0(FNElement::monomial(gammaBetaTuple(l, m, i, j, cgs)))
                    .isZero(),
                what);
          }
      for (Charge cgs : {Charge::Plus, Charge::Minus}) {
        char what[48];
        std::snprintf(what, sizeof what, "cocycle at l=%d m=%ld", l, m);
        t.expect(d0(gammaCochain(l, m, cgs)).isZero(), what);
      }
    }

  // Pruning pairing: every block-size list with sum of (r_m - 1) up to 8.
  for (const std::vector<long>& sizes :
       {std::vector<long>{9}, {4, 4}, {3, 5}, {5, 5}, {3, 3, 3}, {2, 2, 4},
        {2, 2, 2, 2}, {3, 3, 2, 2}}) {
    PruningReport r = pruningCancellation(sizes);
    std::string what = "pruning at {";
    for (long s : sizes) what += std::to_string(s) + ",";
    what.back() = '}';
    t.expect(r.sgnBarFormula, what + " reversal sign formula");
    t.expect(r.ratioFormula, what + " ratio formula");
    t.expect(r.involution, what + " involution");
    t.expect(r.oddStrataSizeMod4, what + " odd strata size");
    t.expect(r.cancellation, what + " cancellation");
  }

  Criterion c{9, "fox-neuwirth", t.failures == 0, false, "",
              detail::seconds(t0)};
  c.detail = t.summary("r <= 6, strata sum <= 8");
  return c;
}

// ---------------------------------------------------------------------------
// Dispatch.

inline Criterion runCriterion(int k) {
  switch (k) {
    case 1: return criterionHopfAxioms();
    case 2: return criterionGysinOracle();
    case 3: return criterionBasisBookkeeping();
    case 4: return criterionResTrIdentities();
    case 5: return criterionPresentation();
    case 6: return criterionInvariantTheory();
    case 7: return criterionRestrictionCompat();
    case 8: return criterionDetection();
    case 9: return criterionFoxNeuwirth();
  }
  HOPFOCT_REQUIRE(false, "criterion number out of range");
  return {};
}

inline const std::vector<std::pair<std::string, std::vector<int>>>&
verifySuites() {
  static const std::vector<std::pair<std::string, std::vector<int>>> suites = {
      {"hopf-axioms", {1}}, {"gysin", {2, 3}},      {"relations", {4, 5}},
      {"invariants", {6}},  {"detection", {7, 8}},  {"fn", {9}},
  };
  return suites;
}

}  // namespace hopfoct
