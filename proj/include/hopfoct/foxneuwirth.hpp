#pragma once

// Cochain-level sign algebra for the alternating hyperoctahedral groups:
// signed cochain tuples, the height-zero differential piece d0, the charged
// cocycle representatives of the gamma generators, and the cancellation
// bookkeeping for symmetric prunings of corolla blocks.
//
// A signed tuple [a_0,...,a_{n-1}]^(+/-) encodes an antisymmetric planar
// level tree on leaves -n..n: a_i is the height at which leaves i and i+1
// diverge (mirrored on the negative side).  Charges distinguish the two
// orientation classes; flipping every leaf sign exchanges them.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "charged.hpp"

namespace hopfoct {

// ---------------------------------------------------------------------------
// signed tuples

struct SignedTuple {
  std::vector<long> entries;
  Charge charge = Charge::Plus;

  bool valid() const {
    if (charge == Charge::Zero) return false;
    for (long a : entries)
      if (a < 0) return false;
    return true;
  }
  long size() const { return static_cast<long>(entries.size()); }
  long degree() const {
    return std::accumulate(entries.begin(), entries.end(), 0L);
  }
  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) os << ',';
      os << entries[i];
    }
    os << "]^" << chargeStr(charge);
    return os.str();
  }
};

inline bool operator==(const SignedTuple& a, const SignedTuple& b) {
  return a.charge == b.charge && a.entries == b.entries;
}
inline bool operator!=(const SignedTuple& a, const SignedTuple& b) {
  return !(a == b);
}
inline bool operator<(const SignedTuple& a, const SignedTuple& b) {
  if (a.entries != b.entries) return a.entries < b.entries;
  return a.charge < b.charge;
}

inline SignedTuple iota(SignedTuple t) {
  t.charge = chargeFlip(t.charge);
  return t;
}

// ---------------------------------------------------------------------------
// mod-2 formal sums of signed tuples

class FNElement {
public:
  FNElement() = default;
  static FNElement zero() { return FNElement(); }
  static FNElement monomial(SignedTuple t) {
    HOPFOCT_REQUIRE(t.valid(), "signed tuple must have +/- charge and entries >= 0");
    FNElement e;
    e.terms_.insert(std::move(t));
    return e;
  }

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::set<SignedTuple>& terms() const& { return terms_; }
  const std::set<SignedTuple>& terms() && = delete;

  void toggle(const SignedTuple& t) {
    HOPFOCT_REQUIRE(t.valid(), "signed tuple must have +/- charge and entries >= 0");
    auto it = terms_.find(t);
    if (it == terms_.end())
      terms_.insert(t);
    else
      terms_.erase(it);
  }

  FNElement& operator+=(const FNElement& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms_.clear();
      return *this;
    }
    for (const auto& t : o.terms_) toggle(t);
    return *this;
  }
  friend FNElement operator+(FNElement a, const FNElement& b) { return a += b; }

  friend bool operator==(const FNElement& a, const FNElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FNElement& a, const FNElement& b) {
    return !(a == b);
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += t.str();
    }
    return s;
  }

private:
  std::set<SignedTuple> terms_;
};

inline FNElement iota(const FNElement& e) {
  FNElement out;
  for (const auto& t : e.terms()) out.toggle(iota(t));
  return out;
}

// ---------------------------------------------------------------------------
// signed permutations of {-r..-1, 1..r}

class SignedPermutation {
public:
  // images[i-1] = sigma(i); the negative side is determined by antisymmetry.
  explicit SignedPermutation(std::vector<long> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (long v : img_) {
      long a = v < 0 ? -v : v;
      HOPFOCT_REQUIRE(a >= 1 && a <= size() && !seen[a - 1],
                      "images must hit each absolute value once");
      seen[a - 1] = 1;
    }
  }

  static SignedPermutation identity(long r) {
    HOPFOCT_REQUIRE(r >= 0, "size must be non-negative");
    std::vector<long> img(static_cast<std::size_t>(r));
    std::iota(img.begin(), img.end(), 1L);
    return SignedPermutation(std::move(img));
  }

  long size() const { return static_cast<long>(img_.size()); }
  const std::vector<long>& images() const { return img_; }

  long operator()(long v) const {
    if (v == 0) return 0;
    long a = v < 0 ? -v : v;
    HOPFOCT_REQUIRE(a <= size(), "value out of range");
    return v < 0 ? -img_[static_cast<std::size_t>(a - 1)]
                 : img_[static_cast<std::size_t>(a - 1)];
  }

  // Determinant of the signed permutation matrix: the parity of the
  // underlying permutation times (-1)^(number of negative images).
  int sgn() const {
    int s = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] < 0) s = -s;
      for (std::size_t k = i + 1; k < img_.size(); ++k)
        if (std::labs(img_[i]) > std::labs(img_[k])) s = -s;
    }
    return s;
  }

  // Coxeter length: inversions of the signed image word plus the sum of the
  // absolute values of the negative images.  (-1)^lengthB() equals sgn().
  long lengthB() const {
    long len = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] < 0) len += -img_[i];
      for (std::size_t k = i + 1; k < img_.size(); ++k)
        if (img_[i] > img_[k]) ++len;
    }
    return len;
  }

  // this \circ o (apply o first).
  SignedPermutation after(const SignedPermutation& o) const {
    HOPFOCT_REQUIRE(size() == o.size(), "composition needs equal sizes");
    std::vector<long> img(img_.size());
    for (long i = 1; i <= size(); ++i)
      img[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
    return SignedPermutation(std::move(img));
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) {
    return !(a == b);
  }
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ < b.img_;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (i) os << ',';
      os << img_[i];
    }
    os << ')';
    return os.str();
  }

private:
  std::vector<long> img_;
};

// ---------------------------------------------------------------------------
// symmetric shuffles of the blocks {-r..-1}, {0}, {1..r}

// Each shuffle keeps both blocks in increasing order and is antisymmetric,
// so it is determined by a sign pattern: choose eps_j in {+,-} for every j
// and send 1..r increasingly onto the sorted set {eps_j * j}.  There are 2^r
// shuffles; the determinant splits them into halves of size 2^(r-1).
struct ShuffleSet {
  std::vector<SignedPermutation> plus, minus;
};

inline ShuffleSet symmetricShuffles(long r) {
  HOPFOCT_REQUIRE(r >= 1 && r <= 20, "shuffle block size out of range");
  ShuffleSet out;
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    std::vector<long> vals;
    vals.reserve(static_cast<std::size_t>(r));
    for (long j = 1; j <= r; ++j)
      vals.push_back((mask >> (j - 1)) & 1UL ? -j : j);
    std::sort(vals.begin(), vals.end());
    SignedPermutation sp(std::move(vals));
    (sp.sgn() > 0 ? out.plus : out.minus).push_back(std::move(sp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// the differential piece d0

// d0 contracts the root separation between the central leaf and the block of
// leaves 1..t immediately to its right (t = first zero entry after a_0, or
// the tuple end), then sums over the symmetric rearrangements of the merged
// children.  Supported shapes, with b = input tuple with a_0 replaced by 1:
//   * interior a_1..a_{t-1} all equal to 1 (or empty): the block is a corolla
//     of t leaves; addends are b^(charge * det) over symmetricShuffles(t).
//   * interior all >= 2: the block hangs as a single chain child; the crossed
//     arrangement reverses the block interior and multiplies the charge by
//     (-1)^(t(t+1)/2).
// Mixed interiors are rejected: their rearrangements do not collapse to a
// tuple relabeling.
inline std::vector<SignedTuple> d0Addends(const SignedTuple& t) {
  HOPFOCT_REQUIRE(t.valid(), "signed tuple must have +/- charge and entries >= 0");
  const std::vector<long>& a = t.entries;
  const long n = t.size();
  HOPFOCT_REQUIRE(n >= 1, "d0 needs a non-empty tuple");
  HOPFOCT_REQUIRE(a[0] == 0, "d0 needs a tuple starting with 0");
  long tEnd = 1;
  while (tEnd < n && a[static_cast<std::size_t>(tEnd)] != 0) ++tEnd;

  bool onesInterior = true, chainInterior = true;
  for (long i = 1; i < tEnd; ++i) {
    if (a[static_cast<std::size_t>(i)] != 1) onesInterior = false;
    if (a[static_cast<std::size_t>(i)] < 2) chainInterior = false;
  }

  std::vector<long> b = a;
  b[0] = 1;
  std::vector<SignedTuple> out;
  if (onesInterior) {
    ShuffleSet sh = symmetricShuffles(tEnd);
    for (std::size_t q = 0; q < sh.plus.size(); ++q)
      out.push_back(SignedTuple{b, t.charge});
    for (std::size_t q = 0; q < sh.minus.size(); ++q)
      out.push_back(SignedTuple{b, chargeFlip(t.charge)});
  } else if (chainInterior) {
    out.push_back(SignedTuple{b, t.charge});
    std::vector<long> rev = b;
    std::reverse(rev.begin() + 1, rev.begin() + tEnd);
    bool flip = ((tEnd * (tEnd + 1) / 2) % 2) != 0;
    out.push_back(SignedTuple{std::move(rev), flip ? chargeFlip(t.charge) : t.charge});
  } else {
    HOPFOCT_REQUIRE(false, "tuple shape not supported by d0");
  }
  return out;
}

inline FNElement d0(const SignedTuple& t) {
  FNElement out;
  for (const auto& s : d0Addends(t)) out.toggle(s);
  return out;
}

inline FNElement d0(const FNElement& e) {
  FNElement out;
  for (const auto& t : e.terms()) out += d0(t);
  return out;
}

// ---------------------------------------------------------------------------
// cocycle representatives of the charged gamma generators

// All tuples below have length m * 2^l, degree m * (2^l - 1), and start with
// a 0: they are the 0-symmetrizations of cochains on the plain alternating
// group, made of m + (separators) blocks.

// m blocks [1]^(2^l - 1) separated by single zeros.
inline SignedTuple gammaAlphaTuple(long l, long m, Charge c) {
  HOPFOCT_REQUIRE(l >= 2 && m >= 1, "gamma cochains need l >= 2, m >= 1");
  HOPFOCT_REQUIRE(c != Charge::Zero, "gamma cochain charge must be a sign");
  std::vector<long> e{0};
  const long ones = (1L << l) - 1;
  for (long k = 1; k <= m; ++k) {
    if (k > 1) e.push_back(0);
    e.insert(e.end(), static_cast<std::size_t>(ones), 1L);
  }
  return SignedTuple{std::move(e), c};
}

// m+1 blocks separated by single zeros: block i shrinks to [2], block j to
// [1]^(2^l - 3), every other block is [1]^(2^l - 1).
inline SignedTuple gammaBetaTuple(long l, long m, long i, long j, Charge c) {
  HOPFOCT_REQUIRE(l >= 2 && m >= 1, "gamma cochains need l >= 2, m >= 1");
  HOPFOCT_REQUIRE(1 <= i && i < j && j <= m + 1, "need 1 <= i < j <= m+1");
  HOPFOCT_REQUIRE(c != Charge::Zero, "gamma cochain charge must be a sign");
  std::vector<long> e{0};
  for (long k = 1; k <= m + 1; ++k) {
    if (k > 1) e.push_back(0);
    if (k == i)
      e.push_back(2);
    else if (k == j)
      e.insert(e.end(), static_cast<std::size_t>((1L << l) - 3), 1L);
    else
      e.insert(e.end(), static_cast<std::size_t>((1L << l) - 1), 1L);
  }
  return SignedTuple{std::move(e), c};
}

// The full cocycle: the alpha tuple carries the requested charge, every beta
// pair (i,j) enters with both charges.  d0 kills each alpha and each i >= 2
// beta termwise, and kills the i = 1 beta pairs jointly.
inline FNElement gammaCochain(long l, long m, Charge c) {
  FNElement out = FNElement::monomial(gammaAlphaTuple(l, m, c));
  for (long i = 1; i <= m; ++i)
    for (long j = i + 1; j <= m + 1; ++j) {
      out.toggle(gammaBetaTuple(l, m, i, j, Charge::Plus));
      out.toggle(gammaBetaTuple(l, m, i, j, Charge::Minus));
    }
  return out;
}

// ---------------------------------------------------------------------------
// pruning cancellation

namespace detail {

// All permutations of {1..N} that are increasing on each consecutive domain
// block of the given sizes, as image vectors.  Count = multinomial(N; sizes).
inline std::vector<std::vector<long>> blockShuffles(const std::vector<long>& sizes) {
  long total = 0;
  for (long b : sizes) {
    HOPFOCT_REQUIRE(b >= 0, "block sizes must be non-negative");
    total += b;
  }
  HOPFOCT_REQUIRE(total <= 12, "shuffle enumeration bound exceeded");

  std::vector<long> starts(sizes.size(), 0);
  for (std::size_t t = 1; t < sizes.size(); ++t)
    starts[t] = starts[t - 1] + sizes[t - 1];

  std::vector<std::vector<long>> out;
  std::vector<long> used(sizes.size(), 0);
  std::vector<long> img(static_cast<std::size_t>(total), 0);
  auto rec = [&](auto&& self, long pos) -> void {
    if (pos > total) {
      out.push_back(img);
      return;
    }
    for (std::size_t t = 0; t < sizes.size(); ++t) {
      if (used[t] == sizes[t]) continue;
      img[static_cast<std::size_t>(starts[t] + used[t])] = pos;
      ++used[t];
      self(self, pos + 1);
      --used[t];
    }
  };
  rec(rec, 1);
  return out;
}

inline bool isBlockIncreasing(const SignedPermutation& p, const std::vector<long>& sizes) {
  std::size_t at = 0;
  for (long b : sizes) {
    for (long q = 1; q < b; ++q)
      if (p.images()[at + static_cast<std::size_t>(q - 1)] >
          p.images()[at + static_cast<std::size_t>(q)])
        return false;
    at += static_cast<std::size_t>(b);
  }
  return true;
}

}  // namespace detail

// Verification report for the sign algebra of symmetric prunings at corolla
// blocks.  The input tree is a row of l corollas with blockSizes[m] leaves
// each (tuple: runs of 1's separated by zeros, with a leading 0).  A pruning
// removes i_m leaves from the left and j_m from the right of block m with
// i_m + j_m < blockSizes[m] and shuffles the removed leaves; the index set
//   X = { (i, j, sigma) : sigma a shuffle of blocks sized (i_l..i_1, j_1..j_l) }
// carries the sign
//   eps(i, j, sigma) = (-1)^(sum_{a<b}(i_a j_b + j_a j_b)
//                            + sum_m (i_m^2 + i_m j_m + (i_m^2 + i_m)/2))
//                      * sgn(sigma),
// and each x in X contributes the two addends
//   (pruned tuple)^(+/-) (x) (ones row)^(eps(x))   and   flipped charges.
// The involution Phi(i, j, sigma) = (j, i, sigma  o  blockReversal(i, j))
// pairs the addends; the report checks the closed sign formulas and that the
// whole sum cancels mod 2.
struct PruningReport {
  long strata = 0;       // non-trivial (s_1..s_l) strata enumerated
  long indexSize = 0;    // |X|
  long oddStrata = 0;    // strata where the eps-ratio exponent is odd
  long sizeFormulaMismatches = 0;  // strata with |X_s| != prod 2^(s_m)
  bool sgnBarFormula = true;   // closed form for sgn(blockReversal) vs inversions
  bool ratioFormula = true;    // eps(Phi x) * eps(x) matches the closed form
  bool involution = true;      // Phi maps X_s to X_s, Phi^2 = id, no fixed points
  bool oddStrataSizeMod4 = true;  // |X_s| divisible by 4 on odd strata
  bool cancellation = true;    // the full signed sum vanishes mod 2
  bool ok() const {
    return sgnBarFormula && ratioFormula && involution && oddStrataSizeMod4 &&
           cancellation;
  }
};

inline PruningReport pruningCancellation(const std::vector<long>& blockSizes) {
  const long l = static_cast<long>(blockSizes.size());
  HOPFOCT_REQUIRE(l >= 1 && l <= 4, "need between 1 and 4 blocks");
  long maxSum = 0;
  for (long r : blockSizes) {
    HOPFOCT_REQUIRE(r >= 1, "block sizes must be positive");
    maxSum += r - 1;
  }
  HOPFOCT_REQUIRE(maxSum <= 8, "enumeration bound: sum of (size - 1) at most 8");

  // shuffle domain profile for (i, j): (i_l, ..., i_1, j_1, ..., j_l)
  auto profile = [l](const std::vector<long>& i, const std::vector<long>& j) {
    std::vector<long> p;
    p.reserve(static_cast<std::size_t>(2 * l));
    for (long m = l; m >= 1; --m) p.push_back(i[static_cast<std::size_t>(m - 1)]);
    for (long m = 1; m <= l; ++m) p.push_back(j[static_cast<std::size_t>(m - 1)]);
    return p;
  };
  // block reversal of the intervals sized profile(j, i); its image has the
  // blocks arranged in profile(i, j) order
  auto blockReversal = [&](const std::vector<long>& i, const std::vector<long>& j) {
    std::vector<long> sizes = profile(j, i);
    long total = std::accumulate(sizes.begin(), sizes.end(), 0L);
    std::vector<long> img(static_cast<std::size_t>(total));
    long at = 0;
    long placed = total;
    for (long b : sizes) {
      placed -= b;
      for (long q = 0; q < b; ++q)
        img[static_cast<std::size_t>(at + q)] = placed + q + 1;
      at += b;
    }
    return SignedPermutation(std::move(img));
  };
  auto epsSign = [l](const std::vector<long>& i, const std::vector<long>& j,
                     const SignedPermutation& sigma) {
    long e = 0;
    for (long a = 0; a < l; ++a)
      for (long b = a + 1; b < l; ++b)
        e += i[static_cast<std::size_t>(a)] * j[static_cast<std::size_t>(b)] +
             j[static_cast<std::size_t>(a)] * j[static_cast<std::size_t>(b)];
    for (long m = 0; m < l; ++m) {
      long im = i[static_cast<std::size_t>(m)], jm = j[static_cast<std::size_t>(m)];
      e += im * im + im * jm + (im * im + im) / 2;
    }
    return (e % 2 == 0 ? 1 : -1) * sigma.sgn();
  };
  // pruned left factor: leading 0, then runs of (blockSizes[m] - s_m - 1)
  // ones separated by zeros
  auto prunedTuple = [&](const std::vector<long>& s, Charge c) {
    std::vector<long> e{0};
    for (long m = 0; m < l; ++m) {
      if (m > 0) e.push_back(0);
      e.insert(e.end(),
               static_cast<std::size_t>(blockSizes[static_cast<std::size_t>(m)] -
                                        s[static_cast<std::size_t>(m)] - 1),
               1L);
    }
    return SignedTuple{std::move(e), c};
  };

  PruningReport rep;
  std::map<std::pair<SignedTuple, SignedTuple>, long> addends;

  // enumerate strata s with 0 <= s_m < blockSizes[m], skipping all zero
  std::vector<long> s(static_cast<std::size_t>(l), 0);
  auto nextStratum = [&]() {
    for (long m = 0; m < l; ++m) {
      if (++s[static_cast<std::size_t>(m)] < blockSizes[static_cast<std::size_t>(m)])
        return true;
      s[static_cast<std::size_t>(m)] = 0;
    }
    return false;
  };
  while (nextStratum()) {
    ++rep.strata;
    long ratioExp = 0;
    long twoPow = 1;
    for (long m = 0; m < l; ++m) {
      long sm = s[static_cast<std::size_t>(m)];
      ratioExp += sm * sm + (sm * sm + sm) / 2;
      twoPow <<= sm;
    }
    const bool odd = (ratioExp % 2) != 0;
    if (odd) ++rep.oddStrata;
    const int ratioClosed = odd ? -1 : 1;
    const long total = std::accumulate(s.begin(), s.end(), 0L);
    const SignedTuple rightPlus{std::vector<long>(static_cast<std::size_t>(total), 1L),
                                Charge::Plus};
    const SignedTuple rightMinus{rightPlus.entries, Charge::Minus};

    long stratumSize = 0;
    // split each s_m into i_m + j_m
    std::vector<long> iv(static_cast<std::size_t>(l), 0);
    auto walkSplits = [&](auto&& self, long m) -> void {
      if (m == l) {
        std::vector<long> jv(static_cast<std::size_t>(l));
        for (long q = 0; q < l; ++q)
          jv[static_cast<std::size_t>(q)] =
              s[static_cast<std::size_t>(q)] - iv[static_cast<std::size_t>(q)];
        const SignedPermutation bar = blockReversal(iv, jv);
        const SignedPermutation barBack = blockReversal(jv, iv);
        // closed form for the reversal sign
        long barExp = 0;
        for (long a = 0; a < l; ++a)
          for (long b = a + 1; b < l; ++b)
            barExp += s[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)];
        for (long q = 0; q < l; ++q)
          barExp += iv[static_cast<std::size_t>(q)] * jv[static_cast<std::size_t>(q)];
        if (bar.sgn() != (barExp % 2 == 0 ? 1 : -1)) rep.sgnBarFormula = false;
        if ((bar.sgn() < 0) != (bar.lengthB() % 2 != 0)) rep.sgnBarFormula = false;

        for (const auto& img : detail::blockShuffles(profile(iv, jv))) {
          ++stratumSize;
          SignedPermutation sigma(img);
          const int eps = epsSign(iv, jv, sigma);

          // involution: Phi(i,j,sigma) = (j,i,sigma o bar), stratum preserved
          SignedPermutation phiSigma = sigma.after(bar);
          if (!detail::isBlockIncreasing(phiSigma, profile(jv, iv)))
            rep.involution = false;
          if (phiSigma.after(barBack) != sigma) rep.involution = false;
          if (jv == iv && phiSigma == sigma) rep.involution = false;
          const int phiEps = epsSign(jv, iv, phiSigma);
          if (phiEps * eps != ratioClosed) rep.ratioFormula = false;

          ++addends[{prunedTuple(s, Charge::Plus),
                     eps > 0 ? rightPlus : rightMinus}];
          ++addends[{prunedTuple(s, Charge::Minus),
                     eps > 0 ? rightMinus : rightPlus}];
        }
        return;
      }
      for (iv[static_cast<std::size_t>(m)] = 0;
           iv[static_cast<std::size_t>(m)] <= s[static_cast<std::size_t>(m)];
           ++iv[static_cast<std::size_t>(m)])
        self(self, m + 1);
      iv[static_cast<std::size_t>(m)] = 0;
    };
    walkSplits(walkSplits, 0);

    rep.indexSize += stratumSize;
    if (stratumSize != twoPow) ++rep.sizeFormulaMismatches;
    if (odd && stratumSize % 4 != 0) rep.oddStrataSizeMod4 = false;
  }

  for (const auto& [key, count] : addends)
    if (count % 2 != 0) rep.cancellation = false;
  return rep;
}

}  // namespace hopfoct
