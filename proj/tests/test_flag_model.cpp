#include <algorithm>

#include "doctest.h"
#include "flagbkk/flag_model.hpp"

using namespace flagbkk;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FlagParams::make(1, 2, 2), InvalidParams);
  CHECK_NOTHROW(FlagParams::make(2, 2, 2));
}

TEST_CASE("dimensions against the group-dimension oracle") {
  auto d = dimensions({2, 2, 2});
  CHECK(d.N == std::array<long, 6>{2, 2, 8, 8, 20, 20});
  CHECK(d.total() == 60);
  CHECK(isotropy_dimension_from_groups({2, 2, 2}) == 78 - 18);
  auto e = dimensions({2, 3, 2});
  CHECK(e.N == std::array<long, 6>{2, 6, 12, 12, 20, 30});
  CHECK(e.total() == 105 - 23);
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b)
      for (int c = 2; c <= 12; ++c) CHECK(dimensions({a, b, c}).total() == isotropy_dimension_from_groups({a, b, c}));
}

TEST_CASE("structure constants") {
  auto sc = structure_constants({2, 3, 2});
  CHECK(sc.b134 == Rational(6, 13));
  CHECK(sc.b234 == Rational(12, 13));
  CHECK(sc.b356 == Rational(30, 13));
  CHECK(sc.b456 == Rational(30, 13));
  CHECK(sc.b155 == Rational(10, 13));
  CHECK(sc.b266 == Rational(30, 13));
  CHECK(structure_constants({2, 2, 2}).b134 == Rational(4, 11));
  CHECK(bracket(sc, 5, 1, 5) == sc.b155);
  CHECK(bracket(sc, 1, 2, 3) == 0);
}

TEST_CASE("structure constants agree with the submersion-derived forms") {
  for (int a = 2; a <= 8; ++a)
    for (int b = 2; b <= 8; ++b)
      for (int c = 2; c <= 8; ++c) {
        FlagParams p{a, b, c};
        auto sc = structure_constants(p);
        auto N = dimensions(p).N;
        Rational n[6];
        for (int i = 0; i < 6; ++i) n[i] = N[i];
        CHECK(sc.b456 == Rational(1, 2) * n[3] * (n[4] + n[5]) / (n[4] + n[5] + 4 * (n[0] + n[1] + n[3])));
        CHECK(sc.b234 == n[1] * n[2] / (n[2] + n[3] + n[5] + 4 * n[1]));
        CHECK(sc.b266 == n[1] * n[5] / (n[2] + n[3] + n[5] + 4 * n[1]));
        CHECK(sc.b356 > 0);
        CHECK(sc.b155 > 0);
      }
}

TEST_CASE("curvature coefficients") {
  auto c = curvature_coefficients({2, 3, 2});
  CHECK(c.a == std::array<BigInt, 5>{32, 96, 312, 520, 780});
  CHECK(c.b == std::array<BigInt, 5>{12, 24, 60, 10, 30});
  auto d = curvature_coefficients({2, 2, 2});
  CHECK(d.a1() == 24);
  CHECK(d.a2() == 24);
  CHECK(d.b1() == 8);
  CHECK(d.b2() == 8);
}

TEST_CASE("a1 equals the folded expansion of the scalar curvature") {
  for (int a = 2; a <= 7; ++a)
    for (int b = 2; b <= 7; ++b)
      for (int c = 2; c <= 7; ++c) {
        FlagParams p{a, b, c};
        auto cc = curvature_coefficients(p);
        Rational d = p.denominator();
        auto sc = structure_constants(p);
        CHECK(Rational(cc.a1()) == 2 * d * dimensions(p).N[0] - 2 * d * sc.b155);
      }
}

TEST_CASE("closed-form identities on a grid") {
  for (int a = 2; a <= 9; ++a)
    for (int b = 2; b <= 9; ++b)
      for (int c = 2; c <= 9; ++c) {
        auto cc = curvature_coefficients({a, b, c});
        BigInt n1 = a, n2 = b;
        CHECK(cc.a1() * cc.b2() - cc.a2() * cc.b1() ==
              8 * n1 * n2 * (n1 - 1) * (n2 - 1) * (n1 + n2 - 1) * (n1 - n2));
        auto sw = curvature_coefficients({b, a, c});
        CHECK(sw.a1() == cc.a2());
        CHECK(sw.a2() == cc.a1());
        CHECK(sw.b1() == cc.b2());
        CHECK(sw.b2() == cc.b1());
        CHECK(sw.b4() == cc.b5());
        CHECK(sw.b5() == cc.b4());
        CHECK(sw.a3() == cc.a3());
        CHECK(sw.b3() == cc.b3());
      }
}

TEST_CASE("Siebenthal triples from sign enumeration") {
  auto t = siebenthal_triples(TRootSystem::bc2());
  CHECK(t == bc2_siebenthal_triples());
  CHECK(std::find(t.begin(), t.end(), IndexTriple{1, 2, 3}) == t.end());
  CHECK(std::find(t.begin(), t.end(), IndexTriple{1, 5, 5}) != t.end());
}

TEST_CASE("T-root relations") {
  auto w = TRootSystem::bc2().positive_roots;
  auto lin = [&](std::initializer_list<std::pair<int, int>> terms) {
    Root2 s{0, 0};
    for (auto [i, c] : terms) {
      s[0] += c * w[i - 1][0];
      s[1] += c * w[i - 1][1];
    }
    return s == Root2{0, 0};
  };
  CHECK(lin({{1, 1}, {3, -1}, {4, -1}}));
  CHECK(lin({{2, 1}, {3, 1}, {4, -1}}));
  CHECK(lin({{3, 1}, {5, -1}, {6, 1}}));
  CHECK(lin({{4, 1}, {5, -1}, {6, -1}}));
  CHECK(lin({{1, 1}, {5, -2}}));
  CHECK(lin({{2, 1}, {6, -2}}));
}

TEST_CASE("degeneracy equations") {
  auto e = degeneracy_equations({2, 2, 2});
  CHECK(e.at("rank_difference") == 0);
  auto f = degeneracy_equations({2, 7, 4});
  CHECK(f.at("determinant_12") == 168 * 378 - 252 * 252);
  CHECK(f.at("determinant_12") == 0);
  CHECK(f.at("rank_condition_12") != 0);
  auto g = degeneracy_equations({2, 3, 2});
  CHECK(g.at("rank_difference") == -1);
  CHECK(g.at("determinant_12") == -2880);
  CHECK(g.at("branch_balance") == 672 - 3456);
  for (const auto& [name, value] : g) CHECK_MESSAGE(value != 0, name);
  auto m = degeneracy_equations({7, 2, 4});
  CHECK(m.at("determinant_21") == 0);
  CHECK(m.at("determinant_12") != 0);
}

TEST_CASE("mirror certificates swap under n1 <-> n2") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 6; ++c) {
        auto e = degeneracy_equations({a, b, c});
        auto s = degeneracy_equations({b, a, c});
        CHECK(e.at("determinant_12") == s.at("determinant_21"));
        CHECK(e.at("quartic_12") == s.at("quartic_21"));
        CHECK(e.at("quartic_closed_12") == s.at("quartic_closed_21"));
        CHECK(e.at("branch_balance") == -s.at("branch_balance"));
      }
}

TEST_CASE("parallelogram determinant factors as the factor-two condition") {
  for (int a = 2; a <= 12; ++a)
    for (int b = 2; b <= 12; ++b)
      for (int c = 2; c <= 12; ++c) {
        auto e = degeneracy_equations({a, b, c});
        BigInt n1 = a, n2 = b, n3 = c;
        Rational expected(2 * n1 * n2 * n2 * (2 * n3 + 1) * ((n2 - 1) * (n2 - 1) - 2 * n1 * (2 * n3 + 1)));
        CHECK(e.at("determinant_12") == expected);
      }
}
