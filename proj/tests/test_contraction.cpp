#include <algorithm>
#include <random>

#include "doctest.h"
#include "flagbkk/contraction.hpp"
#include "flagbkk/curvature.hpp"

using namespace flagbkk;

namespace {

const FlagParams kFirstPair{2, 7, 4};
const FlagParams kSecondPair{7, 2, 4};
const FlagParams kGeneric{2, 3, 2};

ComplexPoint random_torus_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> mod(0.3, 3.0), arg(-3.0, 3.0);
  ComplexPoint t;
  for (std::size_t v = 0; v < kSummands; ++v) t.push_back(std::polar(mod(rng), arg(rng)));
  return t;
}

FamilyVariant variant_of(const std::string& id) { return family_variant_from_string(id); }

}  // namespace

TEST_CASE("contraction curvature is the face restriction") {
  const auto m = contract(kFirstPair, "G1_11");
  CHECK(m.face_id == "G1_11");
  CHECK(m.curvature == face_restriction(scaled_scalar_curvature(kFirstPair), m.face.normal));
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : m.curvature.terms()) coeffs.push_back(c);
  std::sort(coeffs.begin(), coeffs.end());
  const auto c = curvature_coefficients(kFirstPair);
  std::vector<Rational> expected{Rational(-c.b2()), Rational(-c.b3()), Rational(-c.b3()), Rational(-c.b5())};
  std::sort(expected.begin(), expected.end());
  CHECK(coeffs == expected);
}

TEST_CASE("contraction rejects unknown and improper faces") {
  CHECK_THROWS_AS(contract(kGeneric, "G99"), std::invalid_argument);
  FaceDescriptor whole;
  whole.points = (PointMask{1} << 20) - 1;
  whole.dim = 5;
  CHECK_THROWS_AS(contract(kGeneric, whole), std::invalid_argument);
}

TEST_CASE("vertex contractions are never flat") {
  const auto& geo = bc2_geometry();
  std::mt19937 rng(3);
  int vertices = 0;
  for (const auto& f : geo.lattice) {
    if (f.dim != 0) continue;
    ++vertices;
    const auto m = contract(kGeneric, f);
    CHECK(m.curvature.size() == 1);
    CHECK_FALSE(is_ricci_flat(m, random_torus_point(rng)).flat);
    CHECK_FALSE(is_ricci_flat_exact(m, {1, 2, 3, 4, 5, 6}));
  }
  CHECK(vertices == 14);
}

TEST_CASE("flatness checks reject zero coordinates") {
  const auto m = contract(kGeneric, "G2");
  CHECK_THROWS_AS(is_ricci_flat(m, {1.0, 1.0, 0.0, 1.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(is_ricci_flat_exact(m, {1, 1, 0, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("numeric flatness at nondegenerate parameters fails") {
  std::mt19937 rng(11);
  for (const auto& id : {"G1_11", "G1_12", "G1_21", "G1_22", "G2"}) {
    const auto m = contract(kGeneric, id);
    for (int k = 0; k < 20; ++k) CHECK_FALSE(is_ricci_flat(m, random_torus_point(rng)).flat);
  }
}

TEST_CASE("family example values") {
  const Metric g = ricci_flat_family(kFirstPair, FamilyVariant::G1_11, 1, 1, 1);
  CHECK(g == Metric{1, 1, 1, Rational(9, 4), Rational(3, 2), -1});
  const Metric h = ricci_flat_family(kFirstPair, FamilyVariant::G1_12, 1, 2, 1);
  CHECK(h[3] == Rational(1, 9));
  CHECK(h[4] == Rational(1, 3));
  CHECK(is_ricci_flat_exact(contract(kFirstPair, "G1_11"), std::vector<Rational>(g.begin(), g.end())));
}

TEST_CASE("families are exactly Ricci-flat on the determinant locus") {
  for (const auto& [params, ids] : {std::pair{kFirstPair, std::vector<std::string>{"G1_11", "G1_12"}},
                                    std::pair{kSecondPair, std::vector<std::string>{"G1_21", "G1_22"}}}) {
    for (const auto& id : ids) {
      const auto r = verify_family(params, variant_of(id), 100, 5);
      CHECK(r.applicable);
      CHECK(r.flat_samples == 100);
      CHECK(r.lorentzian);
      CHECK(r.verified);
    }
  }
}

TEST_CASE("families are refused where the certificate is nonzero") {
  CHECK_THROWS_AS(ricci_flat_family(kGeneric, FamilyVariant::G1_11, 1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(ricci_flat_family(kFirstPair, FamilyVariant::G1_21, 1, 1, 1), std::domain_error);
  CHECK_THROWS_AS(ricci_flat_family(kFirstPair, FamilyVariant::G1_11, 0, 1, 1), std::invalid_argument);
  CHECK(family_certificate(kGeneric, FamilyVariant::G1_11) == -2880);
}

TEST_CASE("the stated condition locus carries no flat family") {
  const FlagParams stated{2, 13, 4};
  for (auto v : {FamilyVariant::G1_11, FamilyVariant::G1_12}) {
    const auto r = verify_family(stated, v, 20, 1);
    CHECK(r.stated_condition == 0);
    CHECK(r.certificate != 0);
    CHECK(r.flat_samples == 0);
    CHECK_FALSE(r.verified);
  }
}

TEST_CASE("the fourth family needs t1 in its fifth component") {
  const auto m = contract(kSecondPair, "G1_22");
  const Rational t1(3, 2), t2(5, 3), t3(7, 4), k(6, 4);
  std::vector<Rational> with_t2{t1, t2, t3, 1 / t3, k * t2 / t3, -1};
  for (auto& x : with_t2) x.canonicalize();
  CHECK_FALSE(is_ricci_flat_exact(m, with_t2));
  const Metric g = ricci_flat_family(kSecondPair, FamilyVariant::G1_22, t1, t2, t3);
  CHECK(is_ricci_flat_exact(m, std::vector<Rational>(g.begin(), g.end())));
}

TEST_CASE("flat family points agree with probe witnesses") {
  for (const auto& [params, id] : {std::pair{kFirstPair, "G1_11"}, std::pair{kSecondPair, "G1_21"}}) {
    const auto m = contract(params, id);
    const auto w = numeric_singularity_probe(truncated_system(params, m.face));
    REQUIRE(w.has_value());
    CHECK(is_ricci_flat(m, w->torus).flat);
    const Metric g = ricci_flat_family(params, variant_of(id), 2, 3, 5);
    ComplexPoint t;
    for (const auto& x : g) t.emplace_back(x.get_d());
    CHECK(is_ricci_flat(m, t).flat);
  }
}

TEST_CASE("degenerate parameter search") {
  const auto found = search_degenerate_parameters(7);
  auto has = [&](const FlagParams& p) {
    return std::any_of(found.begin(), found.end(), [&](const DegenerateTriple& d) { return d.params == p; });
  };
  for (int a = 2; a <= 7; ++a)
    for (int c = 2; c <= 7; ++c) CHECK(has({a, a, c}));
  CHECK(has(kFirstPair));
  CHECK(has(kSecondPair));
  CHECK_FALSE(has(kGeneric));
  for (const auto& d : search_degenerate_parameters(4))
    for (const auto& f : d.firing) CHECK(f.find("parallelogram") == std::string::npos);
  CHECK_THROWS(search_degenerate_parameters(1));
}

TEST_CASE("variant names round-trip") {
  for (auto v : all_family_variants()) CHECK(family_variant_from_string(to_string(v)) == v);
  CHECK_THROWS(family_variant_from_string("G1_33"));
}
