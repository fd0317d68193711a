#pragma once
// Sparse multivariate polynomials over GF(2).
// A monomial is a sorted (var id, exponent>0) list; a polynomial is the set
// of monomials with coefficient 1, so addition is symmetric difference.

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hopfoct {

using F2Monomial = std::vector<std::pair<int, int>>;

inline F2Monomial monomialMul(const F2Monomial& a, const F2Monomial& b) {
  F2Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i, ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

class F2Poly {
public:
  F2Poly() = default;
  static F2Poly zero() { return F2Poly(); }
  static F2Poly one() {
    F2Poly p;
    p.terms_.insert(F2Monomial{});
    return p;
  }
  static F2Poly var(int id, int exp = 1) {
    assert(exp >= 0);
    if (exp == 0) return one();
    F2Poly p;
    p.terms_.insert(F2Monomial{{id, exp}});
    return p;
  }
  static F2Poly monomial(F2Monomial m) {
    F2Poly p;
    p.terms_.insert(std::move(m));
    return p;
  }

  bool isZero() const { return terms_.empty(); }
  bool isOne() const {
    return terms_.size() == 1 && terms_.begin()->empty();
  }
  std::size_t termCount() const { return terms_.size(); }
  const std::set<F2Monomial>& terms() const& { return terms_; }
  // Iterating a temporary's terms would dangle; force a named binding.
  const std::set<F2Monomial>& terms() && = delete;

  void toggle(const F2Monomial& m) {
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_.insert(m);
    else
      terms_.erase(it);
  }

  F2Poly operator+(const F2Poly& o) const {
    F2Poly r = *this;
    for (const auto& m : o.terms_) r.toggle(m);
    return r;
  }
  F2Poly& operator+=(const F2Poly& o) {
    if (&o == this) {  // x + x = 0 over F2
      terms_.clear();
      return *this;
    }
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  F2Poly operator*(const F2Poly& o) const {
    F2Poly r;
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) r.toggle(monomialMul(a, b));
    return r;
  }
  F2Poly& operator*=(const F2Poly& o) { return *this = *this * o; }

  F2Poly pow(int e) const {
    assert(e >= 0);
    F2Poly r = one(), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const F2Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const F2Poly& o) const { return terms_ != o.terms_; }
  bool operator<(const F2Poly& o) const { return terms_ < o.terms_; }

  // Substitute image(id) for every variable that imageFor reports; variables
  // with no image stay fixed.
  F2Poly substitute(
      const std::function<const F2Poly*(int)>& imageFor) const {
    F2Poly out;
    for (const auto& m : terms_) {
      F2Poly term = one();
      for (auto [id, exp] : m) {
        const F2Poly* img = imageFor(id);
        term *= img ? img->pow(exp) : var(id, exp);
      }
      out += term;
    }
    return out;
  }

  // Total degree with per-variable weights (cohomological degrees).
  int degree(const std::function<int(int)>& weight) const {
    int best = isZero() ? -1 : 0;
    for (const auto& m : terms_) {
      int d = 0;
      for (auto [id, exp] : m) d += weight(id) * exp;
      best = std::max(best, d);
    }
    return best;
  }

  bool isHomogeneous(const std::function<int(int)>& weight) const {
    int d = -2;
    for (const auto& m : terms_) {
      int t = 0;
      for (auto [id, exp] : m) t += weight(id) * exp;
      if (d == -2)
        d = t;
      else if (d != t)
        return false;
    }
    return true;
  }

  std::string str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    // Descending lexicographic on exponent vectors (highest term first).
    std::vector<F2Monomial> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(),
              [](const F2Monomial& a, const F2Monomial& b) {
                std::size_t i = 0;
                while (i < a.size() && i < b.size()) {
                  if (a[i].first != b[i].first) return a[i].first < b[i].first;
                  if (a[i].second != b[i].second)
                    return a[i].second > b[i].second;
                  ++i;
                }
                return i < a.size();
              });
    std::string s;
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (t) s += " + ";
      if (order[t].empty()) {
        s += "1";
        continue;
      }
      for (std::size_t f = 0; f < order[t].size(); ++f) {
        if (f) s += "*";
        s += name(order[t][f].first);
        if (order[t][f].second != 1)
          s += "^" + std::to_string(order[t][f].second);
      }
    }
    return s;
  }

private:
  std::set<F2Monomial> terms_;
};

}  // namespace hopfoct
