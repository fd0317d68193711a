#include <catch2/catch_amalgamated.hpp>

#include "hopfoct/f2poly.hpp"

using namespace hopfoct;

namespace {
std::string plain(int id) { return "v" + std::to_string(id); }
}

TEST_CASE("addition is symmetric difference") {
  F2Poly a = F2Poly::var(0) + F2Poly::var(1);
  F2Poly b = F2Poly::var(1) + F2Poly::var(2);
  F2Poly s = a + b;
  CHECK(s == F2Poly::var(0) + F2Poly::var(2));
  CHECK((a + a).isZero());
}

TEST_CASE("multiplication collects exponents") {
  F2Poly x = F2Poly::var(0);
  F2Poly p = (x + F2Poly::one()) * (x + F2Poly::one());
  // Freshman's dream over GF(2).
  CHECK(p == x.pow(2) + F2Poly::one());
  CHECK(x.pow(5) == F2Poly::var(0, 5));
}

TEST_CASE("pow matches repeated multiplication") {
  F2Poly p = F2Poly::var(0) + F2Poly::var(1);
  F2Poly q = F2Poly::one();
  for (int i = 0; i < 6; ++i) q *= p;
  CHECK(p.pow(6) == q);
  CHECK(p.pow(0) == F2Poly::one());
}

TEST_CASE("substitution replaces variables simultaneously") {
  F2Poly p = F2Poly::var(0, 2) + F2Poly::var(1);
  F2Poly img0 = F2Poly::var(1) + F2Poly::var(2);
  F2Poly q = p.substitute([&](int id) -> const F2Poly* {
    return id == 0 ? &img0 : nullptr;
  });
  // (y+z)^2 + y
  CHECK(q == F2Poly::var(1, 2) + F2Poly::var(2, 2) + F2Poly::var(1));
}

TEST_CASE("degree uses per-variable weights") {
  F2Poly p = F2Poly::var(0, 3) + F2Poly::var(1);
  auto w = [](int id) { return id == 1 ? 2 : 1; };
  CHECK(p.degree(w) == 3);
  CHECK_FALSE(p.isHomogeneous(w));
  F2Poly h = F2Poly::var(0, 2) + F2Poly::var(1);
  CHECK(h.isHomogeneous(w));
  CHECK(F2Poly::zero().degree(w) == -1);
}

TEST_CASE("printing orders terms descending") {
  F2Poly p = F2Poly::var(0, 3) + F2Poly::var(0, 2) * F2Poly::var(1) +
             F2Poly::var(1, 3);
  CHECK(p.str(plain) == "v0^3 + v0^2*v1 + v1^3");
  CHECK(F2Poly::zero().str(plain) == "0");
  CHECK(F2Poly::one().str(plain) == "1");
}
