#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "flagbkk/curvature.hpp"
#include "flagbkk/polytope.hpp"

using namespace flagbkk;

namespace {

const NewtonPolytope& bc2_polytope() {
  static const NewtonPolytope p = build_polytope(bc2_support());
  return p;
}

const std::vector<FaceDescriptor>& bc2_lattice() {
  static const std::vector<FaceDescriptor> l = face_lattice(bc2_polytope());
  return l;
}

}  // namespace

TEST_CASE("support is the curvature support for every parameter choice") {
  auto sup = bc2_support();
  CHECK(sup.size() == 20);
  for (FlagParams p : {FlagParams{2, 3, 2}, FlagParams{6, 2, 9}}) {
    auto s = support(scalar_curvature(p));
    CHECK(s == sup);
  }
}

TEST_CASE("basic polytope shape") {
  const auto& p = bc2_polytope();
  CHECK(p.dim == 5);
  CHECK(p.full_dimensional);
  CHECK(p.facets.size() == 11);
  CHECK(p.vertices.size() == 14);
  for (const auto& q : p.points) CHECK(std::accumulate(q.begin(), q.end(), 0) == -1);
}

TEST_CASE("vertices agree with a random-direction oracle") {
  const auto& p = bc2_polytope();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> comp(-1000, 1000);
  std::set<int> seen;
  for (int trial = 0; trial < 20000; ++trial) {
    ExponentVector f(6);
    for (auto& x : f) x = comp(rng);
    PointMask m = argmax_face(p, f);
    if (popcount(m) == 1) seen.insert(mask_indices(m)[0]);
  }
  CHECK(std::vector<int>(seen.begin(), seen.end()) == p.vertices);
  // The six -e_i are midpoints of pairs of support points, hence not vertices.
  for (int i = 0; i < 6; ++i) {
    ExponentVector e(6, 0);
    e[i] = -1;
    CHECK(std::find(p.vertices.begin(), p.vertices.end(), p.index_of(e)) == p.vertices.end());
  }
}

TEST_CASE("face lattice satisfies the Euler relation") {
  auto f = f_vector(bc2_polytope(), bc2_lattice());
  CHECK(f == std::vector<int>{14, 49, 67, 41, 11});
  int euler = 0;
  for (std::size_t k = 0; k < f.size(); ++k) euler += (k % 2 ? -1 : 1) * f[k];
  CHECK(euler == 2);
}

TEST_CASE("normalized volume") {
  const auto& p = bc2_polytope();
  CHECK(normalized_volume(p) == 132);
  CHECK(normalized_volume(p, VolumeStrategy::PullLastVertex) == 132);
  CHECK(normalized_volume(p, VolumeStrategy::CentroidCone) == 132);

  std::vector<ExponentVector> simplex;
  for (int i = 0; i < 6; ++i) {
    ExponentVector e(6, 0);
    e[i] = -1;
    simplex.push_back(e);
  }
  auto s = build_polytope(simplex);
  CHECK(s.vertices.size() == 6);
  CHECK(s.facets.size() == 6);
  CHECK(normalized_volume(s) == 1);

  auto square = build_polytope({{0, 0, 0}, {1, 0, -1}, {0, 1, -1}, {1, 1, -2}});
  CHECK(square.dim == 2);
  CHECK(square.vertices.size() == 4);
  // Two unimodular triangles.
  CHECK(normalized_volume(square) == 2);
  CHECK(normalized_volume(square, VolumeStrategy::CentroidCone) == 2);
}

TEST_CASE("volume is invariant under coordinate permutations") {
  auto sup = bc2_support();
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  std::mt19937 rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ExponentVector> moved;
    for (const auto& q : sup) {
      ExponentVector w(6);
      for (int k = 0; k < 6; ++k) w[perm[k]] = q[k];
      moved.push_back(w);
    }
    CHECK(normalized_volume(build_polytope(moved)) == 132);
  }
}

TEST_CASE("degenerate support is reported") {
  auto line = build_polytope({{-1, 0, 0}, {0, -1, 0}});
  CHECK(line.dim == 1);
  CHECK_FALSE(line.full_dimensional);
  CHECK_THROWS(build_polytope({{-1, 0}, {0, 0}}));
}

TEST_CASE("faces selected by reference normals") {
  const auto& p = bc2_polytope();
  const auto& l = bc2_lattice();
  auto g2 = find_face(l, argmax_face(p, {0, 0, 1, 1, 1, 1}));
  REQUIRE(g2 != nullptr);
  CHECK(g2->dim == 2);
  CHECK(popcount(g2->points) == 6);
  auto g1 = find_face(l, argmax_face(p, {4, 2, 2, 4, 3, 1}));
  REQUIRE(g1 != nullptr);
  CHECK(g1->dim == 2);
  CHECK(popcount(g1->points) == 4);
  CHECK(g1->klass == FaceClass::Parallelogram);
  for (const auto& f : l) CHECK(argmax_face(p, f.normal) == f.points);
}

TEST_CASE("classification of small faces") {
  for (const auto& f : bc2_lattice()) {
    if (f.dim == 0) CHECK(f.klass == FaceClass::Vertex);
    if (f.dim == 1) CHECK(f.klass == FaceClass::Pyramidal);
    if (f.dim == 2 && f.vertices.size() == 3) CHECK(f.klass == FaceClass::Pyramidal);
    if (f.klass == FaceClass::Octahedral) {
      CHECK(f.vertices.size() == static_cast<std::size_t>(2 * f.dim));
      CHECK(f.octahedral_center >= 0);
    }
  }
}

TEST_CASE("marked-face census") {
  const auto& p = bc2_polytope();
  const auto& l = bc2_lattice();
  auto census = marked_faces(p, l, SymmetryGroup::bc2());
  REQUIRE(census.orbits.size() == 13);
  std::vector<int> dims, sizes;
  for (const auto& o : census.orbits) {
    dims.push_back(o.dim);
    sizes.push_back(static_cast<int>(o.members.size()));
    CHECK(o.label > 0);
  }
  CHECK(dims == std::vector<int>{2, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4});
  CHECK(sizes == std::vector<int>{4, 1, 2, 2, 2, 1, 4, 2, 2, 2, 2, 2, 1});
  CHECK(census.total_faces() == 27);
  int marked = 0;
  for (const auto& f : l) marked += f.marked();
  CHECK(marked == 27);

  const CensusOrbit* orbit = nullptr;
  auto m = find_member(census, "G1_12", &orbit);
  REQUIRE(m);
  CHECK(m->normal == ExponentVector{4, 2, 4, 2, 3, 1});
  CHECK(find_member(census, "G1_21")->normal == ExponentVector{2, 4, 2, 4, 1, 3});
  CHECK(find_member(census, "G1_22")->normal == ExponentVector{2, 4, 4, 2, 1, 3});
  CHECK(find_member(census, "G13")->normal == ExponentVector{0, 0, 0, 0, 1, 1});
  CHECK(find_member(census, "G2")->normal == ExponentVector{0, 0, 1, 1, 1, 1});
  CHECK_FALSE(find_member(census, "G14"));
  for (const auto& o : census.orbits)
    for (const auto& mem : o.members) CHECK(argmax_face(p, mem.normal) == mem.points);
}

TEST_CASE("symmetry group preserves the support") {
  const auto& p = bc2_polytope();
  auto g = SymmetryGroup::bc2();
  CHECK(g.elements.size() == 4);
  for (std::size_t e = 0; e < 4; ++e) CHECK(g.apply(p, e, p.all_points()) == p.all_points());
  CHECK(g.apply(1, ExponentVector{0, 0, 1, 1, 1, 1}) == ExponentVector{0, 0, 1, 1, 1, 1});
}
