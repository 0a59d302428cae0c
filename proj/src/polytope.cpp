#include "flagbkk/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagbkk/flag_model.hpp"
#include "flagbkk/univariate.hpp"

namespace flagbkk {

int popcount(PointMask m) { return std::popcount(m); }

std::vector<int> mask_indices(PointMask m) {
  std::vector<int> out;
  for (int k = 0; m != 0; ++k, m >>= 1) {
    if (m & 1) out.push_back(k);
  }
  return out;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

int rational_rank(RationalMatrix m) {
  int rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& prow = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / prow[col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * prow[c];
    }
    ++rank;
  }
  return rank;
}

Rational rational_determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::vector<BigInt> chart_point(const NewtonPolytope& p, int index) {
  std::vector<BigInt> q;
  q.reserve(p.chart.size());
  for (int c : p.chart) q.emplace_back(p.points[static_cast<std::size_t>(index)][static_cast<std::size_t>(c)]);
  return q;
}

BigInt simplex_det(const NewtonPolytope& p, const std::vector<int>& simplex) {
  const auto base = chart_point(p, simplex[0]);
  std::vector<std::vector<BigInt>> m;
  for (std::size_t k = 1; k < simplex.size(); ++k) {
    auto q = chart_point(p, simplex[k]);
    for (std::size_t c = 0; c < q.size(); ++c) q[c] -= base[c];
    m.push_back(std::move(q));
  }
  return bareiss_determinant(std::move(m));
}

void normalize_ambient(ExponentVector& w) {
  const int lo = *std::min_element(w.begin(), w.end());
  for (auto& x : w) x -= lo;
  int g = 0;
  for (int x : w) g = std::gcd(g, x);
  if (g > 1) {
    for (auto& x : w) x /= g;
  }
}

long dot(const ExponentVector& a, const ExponentVector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

}  // namespace

int NewtonPolytope::index_of(const ExponentVector& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return -1;
  return static_cast<int>(it - points.begin());
}

PointMask NewtonPolytope::all_points() const {
  return points.size() == 64 ? ~PointMask{0} : (PointMask{1} << points.size()) - 1;
}

int affine_dimension(const NewtonPolytope& p, PointMask mask) {
  const auto idx = mask_indices(mask);
  if (idx.size() <= 1) return 0;
  RationalMatrix m;
  const auto& base = p.points[static_cast<std::size_t>(idx[0])];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const auto& q = p.points[static_cast<std::size_t>(idx[k])];
    std::vector<Rational> row;
    for (std::size_t c = 0; c < q.size(); ++c) row.emplace_back(q[c] - base[c]);
    m.push_back(std::move(row));
  }
  return rational_rank(std::move(m));
}

PointMask argmax_face(const NewtonPolytope& p, const ExponentVector& normal) {
  if (normal.size() != static_cast<std::size_t>(p.arity)) throw ArityError("normal length differs from arity");
  long best = 0;
  bool first = true;
  for (const auto& q : p.points) {
    long v = dot(normal, q);
    if (first || v > best) best = v;
    first = false;
  }
  PointMask mask = 0;
  for (std::size_t k = 0; k < p.points.size(); ++k) {
    if (dot(normal, p.points[k]) == best) mask |= PointMask{1} << k;
  }
  return mask;
}

NewtonPolytope build_polytope(std::vector<ExponentVector> support) {
  if (support.empty()) throw std::invalid_argument("empty support");
  if (support.size() > 64) throw std::invalid_argument("support larger than 64 points");
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  NewtonPolytope p;
  p.arity = static_cast<int>(support[0].size());
  const int level = std::accumulate(support[0].begin(), support[0].end(), 0);
  for (const auto& q : support) {
    if (static_cast<int>(q.size()) != p.arity) throw ArityError("support points of differing arity");
    if (std::accumulate(q.begin(), q.end(), 0) != level) {
      throw std::invalid_argument("support points do not share one coordinate sum");
    }
  }
  p.points = std::move(support);
  p.dim = affine_dimension(p, p.all_points());
  p.full_dimensional = p.dim == p.arity - 1;

  // Greedy choice of chart coordinates on which the projection keeps full rank.
  std::vector<int> chart;
  for (int c = 0; c < p.arity - 1 && static_cast<int>(chart.size()) < p.dim; ++c) {
    auto trial = chart;
    trial.push_back(c);
    RationalMatrix m;
    for (std::size_t k = 1; k < p.points.size(); ++k) {
      std::vector<Rational> row;
      for (int t : trial) row.emplace_back(p.points[k][static_cast<std::size_t>(t)] - p.points[0][static_cast<std::size_t>(t)]);
      m.push_back(std::move(row));
    }
    if (rational_rank(std::move(m)) == static_cast<int>(trial.size())) chart = std::move(trial);
  }
  p.chart = chart;
  const int d = p.dim;
  const std::size_t n = p.points.size();

  if (d == 0) {
    p.vertices = {0};
    return p;
  }

  std::vector<std::vector<BigInt>> q(n);
  for (std::size_t k = 0; k < n; ++k) q[k] = chart_point(p, static_cast<int>(k));

  std::map<PointMask, Facet> facets;
  std::vector<int> comb(static_cast<std::size_t>(d));
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    // Normal to the d points in the d-dimensional chart via signed cofactors.
    std::vector<std::vector<BigInt>> diff;
    for (int k = 1; k < d; ++k) {
      std::vector<BigInt> row(static_cast<std::size_t>(d));
      for (int c = 0; c < d; ++c) row[c] = q[comb[k]][c] - q[comb[0]][c];
      diff.push_back(std::move(row));
    }
    std::vector<BigInt> normal(static_cast<std::size_t>(d));
    bool nonzero = false;
    for (int col = 0; col < d; ++col) {
      std::vector<std::vector<BigInt>> minor;
      for (const auto& row : diff) {
        std::vector<BigInt> r;
        for (int c = 0; c < d; ++c) {
          if (c != col) r.push_back(row[c]);
        }
        minor.push_back(std::move(r));
      }
      normal[col] = bareiss_determinant(std::move(minor));
      if (col % 2) normal[col] = -normal[col];
      if (normal[col] != 0) nonzero = true;
    }
    if (nonzero) {
      std::vector<BigInt> vals(n);
      for (std::size_t k = 0; k < n; ++k) {
        BigInt s = 0;
        for (int c = 0; c < d; ++c) s += normal[c] * q[k][c];
        vals[k] = s;
      }
      const BigInt& ref = vals[comb[0]];
      bool le = true, ge = true;
      for (const auto& v : vals) {
        if (v > ref) le = false;
        if (v < ref) ge = false;
      }
      if (le || ge) {
        PointMask on = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (vals[k] == ref) on |= PointMask{1} << k;
        }
        if (!facets.count(on)) {
          BigInt g = 0;
          for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
          ExponentVector w(static_cast<std::size_t>(p.arity), 0);
          for (int c = 0; c < d; ++c) {
            BigInt v = normal[c] / g;
            if (!le) v = -v;
            w[static_cast<std::size_t>(chart[c])] = static_cast<int>(v.get_si());
          }
          normalize_ambient(w);
          Facet f{w, 0, on};
          f.offset = dot(w, p.points[static_cast<std::size_t>(comb[0])]);
          facets.emplace(on, std::move(f));
        }
      }
    }
    int pos = d - 1;
    while (pos >= 0 && comb[pos] == static_cast<int>(n) - d + pos) --pos;
    if (pos < 0) break;
    ++comb[pos];
    for (int k = pos + 1; k < d; ++k) comb[k] = comb[k - 1] + 1;
  }
  for (auto& [mask, f] : facets) p.facets.push_back(std::move(f));

  for (std::size_t k = 0; k < n; ++k) {
    PointMask meet = p.all_points();
    for (const auto& f : p.facets) {
      if (f.points >> k & 1) meet &= f.points;
    }
    if (meet == PointMask{1} << k) p.vertices.push_back(static_cast<int>(k));
  }
  return p;
}

std::vector<FaceDescriptor> face_lattice(const NewtonPolytope& p) {
  std::set<PointMask> faces;
  for (const auto& f : p.facets) faces.insert(f.points);
  std::set<PointMask> frontier = faces;
  while (!frontier.empty()) {
    std::set<PointMask> next;
    for (PointMask a : frontier) {
      for (const auto& f : p.facets) {
        PointMask c = a & f.points;
        if (c != 0 && !faces.count(c)) next.insert(c);
      }
    }
    faces.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  PointMask vertex_mask = 0;
  for (int v : p.vertices) vertex_mask |= PointMask{1} << v;

  std::vector<FaceDescriptor> out;
  for (PointMask m : faces) {
    FaceDescriptor fd;
    fd.points = m;
    fd.vertices = mask_indices(m & vertex_mask);
    fd.dim = affine_dimension(p, m);
    ExponentVector w(static_cast<std::size_t>(p.arity), 0);
    for (const auto& f : p.facets) {
      if ((f.points & m) == m) {
        for (std::size_t c = 0; c < w.size(); ++c) w[c] += f.normal[c];
      }
    }
    normalize_ambient(w);
    fd.normal = w;
    out.push_back(std::move(fd));
  }
  std::sort(out.begin(), out.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return mask_indices(a.points) < mask_indices(b.points);
  });
  for (auto& fd : out) {
    int center = -1;
    fd.klass = classify_face(p, out, fd, &center);
    fd.octahedral_center = center;
  }
  return out;
}

const FaceDescriptor* find_face(const std::vector<FaceDescriptor>& lattice, PointMask points) {
  for (const auto& f : lattice) {
    if (f.points == points) return &f;
  }
  return nullptr;
}

FaceClass classify_face(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice,
                        const FaceDescriptor& face, int* octahedral_center) {
  if (octahedral_center) *octahedral_center = -1;
  if (face.dim == 0) return FaceClass::Vertex;

  PointMask vmask = 0;
  for (int v : face.vertices) vmask |= PointMask{1} << v;
  for (int v : face.vertices) {
    const PointMask rest = vmask & ~(PointMask{1} << v);
    for (const auto& g : lattice) {
      if (g.dim != face.dim - 1 || (g.points & face.points) != g.points) continue;
      PointMask gv = 0;
      for (int u : g.vertices) gv |= PointMask{1} << u;
      if (gv == rest) return FaceClass::Pyramidal;
    }
  }

  const std::size_t nv = face.vertices.size();
  if (nv == static_cast<std::size_t>(2 * face.dim)) {
    std::vector<Rational> center(static_cast<std::size_t>(p.arity), 0);
    for (int v : face.vertices) {
      for (int c = 0; c < p.arity; ++c) center[c] += p.points[static_cast<std::size_t>(v)][c];
    }
    for (auto& x : center) x /= static_cast<long>(nv);
    bool antipodal = true;
    for (int v : face.vertices) {
      ExponentVector opp(static_cast<std::size_t>(p.arity));
      for (int c = 0; c < p.arity; ++c) {
        Rational o = 2 * center[c] - p.points[static_cast<std::size_t>(v)][c];
        if (o.get_den() != 1) antipodal = false;
        opp[c] = static_cast<int>(o.get_num().get_si());
      }
      const int idx = p.index_of(opp);
      if (idx < 0 || std::find(face.vertices.begin(), face.vertices.end(), idx) == face.vertices.end()) {
        antipodal = false;
      }
    }
    if (antipodal) {
      int center_index = -1;
      for (int i = 0; i < p.arity; ++i) {
        bool is_unit = true;
        for (int c = 0; c < p.arity; ++c) {
          if (center[c] != (c == i ? -1 : 0)) is_unit = false;
        }
        if (is_unit) center_index = i;
      }
      if (center_index >= 0) {
        bool other_unit = false;
        for (int i = 0; i < p.arity; ++i) {
          if (i == center_index) continue;
          ExponentVector e(static_cast<std::size_t>(p.arity), 0);
          e[i] = -1;
          const int idx = p.index_of(e);
          if (idx >= 0 && (face.points >> idx & 1)) other_unit = true;
        }
        if (!other_unit) {
          if (octahedral_center) *octahedral_center = center_index;
          return FaceClass::Octahedral;
        }
      }
    }
  }

  if (face.dim == 2 && popcount(face.points) == 4 && nv == 4) {
    const auto& v = face.vertices;
    auto sum = [&](int a, int b) {
      ExponentVector s(static_cast<std::size_t>(p.arity));
      for (int c = 0; c < p.arity; ++c) s[c] = p.points[static_cast<std::size_t>(a)][c] + p.points[static_cast<std::size_t>(b)][c];
      return s;
    };
    if (sum(v[0], v[1]) == sum(v[2], v[3]) || sum(v[0], v[2]) == sum(v[1], v[3]) ||
        sum(v[0], v[3]) == sum(v[1], v[2])) {
      return FaceClass::Parallelogram;
    }
  }
  return FaceClass::MarkedOther;
}

namespace {

struct Triangulator {
  const NewtonPolytope& p;
  const std::vector<FaceDescriptor>& lattice;
  bool pull_last;

  std::vector<std::vector<int>> run(PointMask face, int dim, const std::vector<int>& vertices) const {
    if (dim == 0) return {{vertices.front()}};
    const int apex = pull_last ? vertices.back() : vertices.front();
    std::vector<std::vector<int>> out;
    for (const auto& g : lattice) {
      if (g.dim != dim - 1 || (g.points & face) != g.points || (g.points >> apex & 1)) continue;
      for (auto s : run(g.points, g.dim, g.vertices)) {
        s.insert(s.begin(), apex);
        out.push_back(std::move(s));
      }
    }
    return out;
  }
};

}  // namespace

BigInt normalized_volume(const NewtonPolytope& p, VolumeStrategy strategy) {
  if (p.dim == 0) return 0;
  const auto lattice = face_lattice(p);
  if (strategy == VolumeStrategy::CentroidCone) {
    std::vector<Rational> centroid(p.chart.size(), 0);
    for (int v : p.vertices) {
      auto q = chart_point(p, v);
      for (std::size_t c = 0; c < q.size(); ++c) centroid[c] += Rational(q[c]);
    }
    for (auto& x : centroid) x /= static_cast<long>(p.vertices.size());
    Rational total = 0;
    Triangulator tri{p, lattice, false};
    for (const auto& f : p.facets) {
      const FaceDescriptor* fd = find_face(lattice, f.points);
      for (const auto& s : tri.run(fd->points, fd->dim, fd->vertices)) {
        RationalMatrix m;
        for (int idx : s) {
          auto q = chart_point(p, idx);
          std::vector<Rational> row;
          for (std::size_t c = 0; c < q.size(); ++c) row.push_back(Rational(q[c]) - centroid[c]);
          m.push_back(std::move(row));
        }
        total += abs(rational_determinant(std::move(m)));
      }
    }
    if (total.get_den() != 1) throw std::logic_error("non-integral normalized volume");
    return total.get_num();
  }
  Triangulator tri{p, lattice, strategy == VolumeStrategy::PullLastVertex};
  BigInt total = 0;
  for (const auto& s : tri.run(p.all_points(), p.dim, p.vertices)) total += abs(simplex_det(p, s));
  return total;
}

std::string to_string(FaceClass c) {
  switch (c) {
    case FaceClass::Vertex: return "vertex";
    case FaceClass::Pyramidal: return "pyramidal";
    case FaceClass::Octahedral: return "octahedral";
    case FaceClass::Parallelogram: return "parallelogram";
    case FaceClass::MarkedOther: return "marked-other";
  }
  return "marked-other";
}

FaceClass face_class_from_string(const std::string& s) {
  for (auto c : {FaceClass::Vertex, FaceClass::Pyramidal, FaceClass::Octahedral, FaceClass::Parallelogram,
                 FaceClass::MarkedOther}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown face class: " + s);
}

SymmetryGroup SymmetryGroup::bc2() {
  SymmetryGroup g;
  g.elements = {{0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {1, 0, 2, 3, 5, 4}, {1, 0, 3, 2, 5, 4}};
  g.names = {"id", "(34)", "(12)(56)", "(12)(56)(34)"};
  g.swaps_params = {false, false, true, true};
  return g;
}

ExponentVector SymmetryGroup::apply(std::size_t element, const ExponentVector& v) const {
  const auto& perm = elements.at(element);
  ExponentVector w(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) w[static_cast<std::size_t>(perm[k])] = v[k];
  return w;
}

PointMask SymmetryGroup::apply(const NewtonPolytope& p, std::size_t element, PointMask points) const {
  PointMask out = 0;
  for (int k : mask_indices(points)) {
    const int idx = p.index_of(apply(element, p.points[static_cast<std::size_t>(k)]));
    if (idx < 0) throw std::invalid_argument("permutation does not preserve the support");
    out |= PointMask{1} << idx;
  }
  return out;
}

const std::vector<MarkedFaceRow>& marked_face_table() {
  static const std::vector<MarkedFaceRow> table{
      {1, {4, 2, 2, 4, 3, 1}, 2, 4},  {2, {0, 0, 1, 1, 1, 1}, 2, 1},  {3, {2, 0, 3, 3, 2, 1}, 2, 2},
      {4, {2, 0, 2, 2, 3, 1}, 2, 2},  {5, {0, 1, 1, 1, 2, 1}, 2, 2},  {6, {0, 0, 2, 2, 1, 1}, 3, 1},
      {7, {4, 2, 1, 3, 2, 1}, 3, 4},  {8, {0, 0, 1, 1, 2, 1}, 3, 2},  {9, {1, 0, 1, 1, 1, 0}, 3, 2},
      {10, {2, 0, 1, 1, 1, 0}, 4, 2}, {11, {0, 0, 1, 1, 1, 0}, 4, 2}, {12, {2, 2, 0, 2, 1, 1}, 4, 2},
      {13, {0, 0, 0, 0, 1, 1}, 4, 1},
  };
  return table;
}

int MarkedFaceCensus::total_faces() const {
  int total = 0;
  for (const auto& o : orbits) total += static_cast<int>(o.members.size());
  return total;
}

namespace {

std::string member_id(const std::string& stem, std::size_t orbit_size, std::size_t position,
                      std::size_t element) {
  if (orbit_size == 1) return stem;
  if (orbit_size == 4) {
    static const char* suffix[] = {"_11", "_12", "_21", "_22"};
    return stem + suffix[element];
  }
  return stem + "_" + std::to_string(position + 1);
}

}  // namespace

MarkedFaceCensus marked_faces(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice,
                              const SymmetryGroup& group) {
  std::vector<const FaceDescriptor*> marked;
  for (const auto& f : lattice) {
    if (f.marked()) marked.push_back(&f);
  }
  std::set<PointMask> assigned;
  MarkedFaceCensus census;

  auto build_orbit = [&](PointMask rep, const ExponentVector& normal, int label) {
    CensusOrbit orbit;
    orbit.label = label;
    orbit.normal = normal;
    const FaceDescriptor* fd = find_face(lattice, rep);
    orbit.dim = fd->dim;
    orbit.klass = fd->klass;
    orbit.point_count = popcount(rep);
    std::vector<std::pair<PointMask, std::size_t>> images;
    for (std::size_t g = 0; g < group.elements.size(); ++g) {
      PointMask img = group.apply(p, g, rep);
      bool seen = false;
      for (const auto& [m, e] : images) seen = seen || m == img;
      if (!seen) images.emplace_back(img, g);
    }
    const std::string stem = label > 0 ? "G" + std::to_string(label) : "U" + std::to_string(census.orbits.size() + 1);
    for (std::size_t k = 0; k < images.size(); ++k) {
      CensusMember m;
      m.points = images[k].first;
      m.group_element = images[k].second;
      m.normal = group.apply(images[k].second, normal);
      m.id = member_id(stem, images.size(), k, images[k].second);
      assigned.insert(m.points);
      orbit.members.push_back(std::move(m));
    }
    census.orbits.push_back(std::move(orbit));
  };

  for (const auto& row : marked_face_table()) {
    const PointMask rep = argmax_face(p, row.normal);
    const FaceDescriptor* fd = find_face(lattice, rep);
    if (fd == nullptr || !fd->marked() || assigned.count(rep)) continue;
    build_orbit(rep, row.normal, row.label);
  }
  for (const FaceDescriptor* f : marked) {
    if (!assigned.count(f->points)) build_orbit(f->points, f->normal, 0);
  }
  return census;
}

std::vector<int> f_vector(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(p.dim, 0)), 0);
  for (const auto& f : lattice) {
    if (f.dim < p.dim) ++counts[static_cast<std::size_t>(f.dim)];
  }
  return counts;
}

std::optional<CensusMember> find_member(const MarkedFaceCensus& census, const std::string& id,
                                        const CensusOrbit** orbit) {
  for (const auto& o : census.orbits) {
    for (const auto& m : o.members) {
      if (m.id == id) {
        if (orbit) *orbit = &o;
        return m;
      }
    }
    if (o.label > 0 && id == "G" + std::to_string(o.label)) {
      if (orbit) *orbit = &o;
      return o.members.front();
    }
  }
  return std::nullopt;
}

std::vector<ExponentVector> bc2_support() {
  std::set<ExponentVector> pts;
  for (std::size_t i = 0; i < kSummands; ++i) {
    ExponentVector e(kSummands, 0);
    e[i] = -1;
    pts.insert(e);
  }
  for (const auto& t : siebenthal_triples(TRootSystem::bc2())) {
    for (int r = 0; r < 3; ++r) {
      ExponentVector e(kSummands, 0);
      e[static_cast<std::size_t>(t[r] - 1)] += 1;
      e[static_cast<std::size_t>(t[(r + 1) % 3] - 1)] -= 1;
      e[static_cast<std::size_t>(t[(r + 2) % 3] - 1)] -= 1;
      pts.insert(e);
    }
  }
  return {pts.begin(), pts.end()};
}

}  // namespace flagbkk
