#pragma once
// Euler classes of the hyperoctahedral sign representations and the
// combinatorial classifier for the long exact sequence they drive.
//
// Multiplication by the component-n Euler class e_n has kernel spanned by the
// basis monomials in which every block carries a gamma of level >= 2, and
// cokernel based by the monomials the quot predicate below accepts. Both
// facts are enforced at runtime: reduceModEuler eliminates exactly the
// non-quot monomials and asserts the elimination succeeds.

#include <cassert>
#include <map>
#include <vector>

#include "hopfoct/gf2.hpp"
#include "hopfoct/hopfring.hpp"

namespace hopfoct {

inline Element eulerClass(long n) {
  if (n < 0) throw std::invalid_argument("euler class needs component >= 0");
  if (n == 0) return Element::zero();
  if (n == 1) return wGen(1);
  return transfer(gammaGen(1, 1), unitB(n - 2)) +
         transfer(wGen(1), unitB(n - 1));
}

// Cup with the Euler class of each monomial's own component.
inline Element eulerTimes(const Element& x) {
  Element out;
  for (const auto& m : x.terms()) {
    long n = monomialBidegree(m).comp;
    out += cup(eulerClass(n), Element::monomial(m));
  }
  return out;
}

inline bool blockHasHighGamma(const GatheredBlock& b) {
  return !b.gamma.empty() && b.gamma.rbegin()->first >= 2;
}

// Kernel side: every block needs a gamma of level >= 2 (vacuous for the
// component-0 unit).
inline bool isAnnMonomial(const Monomial& m) {
  for (const auto& b : m)
    if (!blockHasHighGamma(b)) return false;
  return true;
}

// Cokernel side. With W the gamma-free blocks (w powers and units): when W
// is nonempty, the monomial survives unless W's top decoration sits on
// component 1 with positive exponent; when W is empty, it survives unless
// its dominant level-1-only block (max by (decoration, gamma-1 exponent))
// has component 2 and gamma-1 exponent >= 2.
inline bool isQuotMonomial(const Monomial& m) {
  const GatheredBlock* wTop = nullptr;
  for (const auto& b : m)
    if (b.gamma.empty())
      if (!wTop || b.w > wTop->w) wTop = &b;
  if (wTop) return !(wTop->w >= 1 && wTop->comp == 1);
  const GatheredBlock* gTop = nullptr;
  for (const auto& b : m)
    if (b.maxLevel() == 1)
      if (!gTop || std::pair(b.w, b.gamma.at(1)) >
                       std::pair(gTop->w, gTop->gamma.at(1)))
        gTop = &b;
  if (!gTop) return true;
  return gTop->comp >= 4 || gTop->gamma.at(1) == 1;
}

inline std::vector<Monomial> annBasis(long n, long d) {
  std::vector<Monomial> out;
  for (auto& m : basisMonomials(n, d))
    if (isAnnMonomial(m)) out.push_back(std::move(m));
  return out;
}

inline std::vector<Monomial> quotBasis(long n, long d) {
  std::vector<Monomial> out;
  for (auto& m : basisMonomials(n, d))
    if (isQuotMonomial(m)) out.push_back(std::move(m));
  return out;
}

namespace detail {

// Echelon basis of e_n * A(n, d-1), rows pivoted on non-quot monomials.
// Row vectors are indexed with non-quot columns first so RREF pivots land
// there; the assertion is the structural theorem this module implements.
struct EulerReducer {
  std::vector<Monomial> cols;          // non-quot first, then quot
  std::map<Monomial, std::size_t> idx;
  std::size_t numNonQuot = 0;
  GF2Matrix rows;                      // RREF of the image

  EulerReducer(long n, long d) {
    std::vector<Monomial> basis = basisMonomials(n, d);
    for (const auto& m : basis)
      if (!isQuotMonomial(m)) cols.push_back(m);
    numNonQuot = cols.size();
    for (const auto& m : basis)
      if (isQuotMonomial(m)) cols.push_back(m);
    for (std::size_t i = 0; i < cols.size(); ++i) idx[cols[i]] = i;

    std::vector<Monomial> src = d >= 1 ? basisMonomials(n, d - 1)
                                       : std::vector<Monomial>{};
    GF2Matrix img(src.size(), cols.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
      Element e = eulerTimes(Element::monomial(src[r]));
      for (const auto& t : e.terms()) img.set(r, idx.at(t), true);
    }
    std::vector<std::size_t> pivots = img.rref();
    // Image must be eliminable by non-quot monomials alone, and use all of
    // them: quot monomials form a basis of the cokernel.
    HOPFOCT_REQUIRE(pivots.size() == numNonQuot,
                    "euler image rank differs from non-quot count");
    for (std::size_t p : pivots)
      HOPFOCT_REQUIRE(p < numNonQuot, "euler image pivot on a quot monomial");
    rows = img;
  }

  Element reduce(const Element& x) const {
    std::vector<bool> v(cols.size(), false);
    for (const auto& m : x.terms()) v[idx.at(m)] = !v[idx.at(m)];
    for (std::size_t r = 0; r < numNonQuot; ++r) {
      std::size_t piv = 0;
      while (!rows.get(r, piv)) ++piv;
      if (v[piv])
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (rows.get(r, c)) v[c] = !v[c];
    }
    Element out;
    for (std::size_t c = numNonQuot; c < cols.size(); ++c)
      if (v[c]) out.toggle(cols[c]);
    for (std::size_t c = 0; c < numNonQuot; ++c)
      HOPFOCT_REQUIRE(!v[c], "non-quot residue after euler reduction");
    return out;
  }
};

inline const EulerReducer& eulerReducer(long n, long d) {
  static std::map<std::pair<long, long>, EulerReducer> cache;
  auto it = cache.find({n, d});
  if (it == cache.end())
    it = cache.emplace(std::piecewise_construct,
                       std::forward_as_tuple(n, d),
                       std::forward_as_tuple(n, d)).first;
  return it->second;
}

}  // namespace detail

// Canonical representative modulo the Euler ideal piece e_n * A(n, d-1):
// the result is supported on quot monomials only. Requires x homogeneous.
inline Element reduceModEuler(const Element& x) {
  if (x.isZero()) return x;
  Bidegree bd;
  HOPFOCT_REQUIRE(x.homogeneous(&bd), "euler reduction needs a bidegree");
  return detail::eulerReducer(bd.comp, bd.deg).reduce(x);
}

}  // namespace hopfoct
