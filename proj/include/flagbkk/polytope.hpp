#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagbkk/laurent.hpp"

namespace flagbkk {

/// Subset of the support points, bit k standing for point k.
using PointMask = std::uint64_t;

int popcount(PointMask m);
std::vector<int> mask_indices(PointMask m);

struct Facet {
  /// Primitive integer normal in the ambient lattice; nonnegative with a zero entry.
  ExponentVector normal;
  /// max of <normal, p> over the support.
  long offset = 0;
  PointMask points = 0;
};

/// Convex hull of a support lying in one hyperplane sum(x) = const.
///
/// Coordinates are handled in the chart that drops the last ambient
/// coordinate; all arithmetic is exact.
struct NewtonPolytope {
  std::vector<ExponentVector> points;
  std::vector<int> vertices;
  std::vector<Facet> facets;
  int arity = 0;
  int dim = 0;
  /// False when the support spans less than the full hyperplane.
  bool full_dimensional = false;
  /// Chart coordinates kept for the hull computation.
  std::vector<int> chart;

  int index_of(const ExponentVector& p) const;
  PointMask all_points() const;
};

/// Throws std::invalid_argument for an empty support, unequal coordinate
/// sums or more than 64 points.
NewtonPolytope build_polytope(std::vector<ExponentVector> support);

/// Affine dimension of a point subset.
int affine_dimension(const NewtonPolytope& p, PointMask points);

/// Points maximizing <normal, .>.
PointMask argmax_face(const NewtonPolytope& p, const ExponentVector& normal);

enum class VolumeStrategy { PullFirstVertex, PullLastVertex, CentroidCone };

/// Lattice volume scaled so the unimodular simplex has volume 1.
BigInt normalized_volume(const NewtonPolytope& p,
                         VolumeStrategy strategy = VolumeStrategy::PullFirstVertex);

enum class FaceClass { Vertex, Pyramidal, Octahedral, Parallelogram, MarkedOther };

std::string to_string(FaceClass c);
FaceClass face_class_from_string(const std::string& s);

struct FaceDescriptor {
  PointMask points = 0;
  std::vector<int> vertices;
  /// Sum of the normals of the incident facets, shifted to a zero minimum.
  ExponentVector normal;
  int dim = 0;
  FaceClass klass = FaceClass::MarkedOther;
  /// For octahedral faces, the 0-based index i0 with center -e_{i0}.
  int octahedral_center = -1;

  bool marked() const { return klass == FaceClass::Parallelogram || klass == FaceClass::MarkedOther; }
};

/// All proper faces, sorted by dimension then by point set; classes filled in.
std::vector<FaceDescriptor> face_lattice(const NewtonPolytope& p);

/// Looks up a proper face by its point set.
const FaceDescriptor* find_face(const std::vector<FaceDescriptor>& lattice, PointMask points);

/// Classification given the lattice that contains `face`.
FaceClass classify_face(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice,
                        const FaceDescriptor& face, int* octahedral_center = nullptr);

/// Coordinate permutations preserving the support.
struct SymmetryGroup {
  /// Each entry sends coordinate k to perm[k]; element 0 is the identity.
  std::vector<std::vector<int>> elements;
  std::vector<std::string> names;
  /// Whether the element exchanges the roles of n1 and n2.
  std::vector<bool> swaps_params;

  /// {id, (34), (12)(56), (12)(56)(34)} in 0-based coordinates.
  static SymmetryGroup bc2();

  ExponentVector apply(std::size_t element, const ExponentVector& v) const;
  /// Image of a point set; throws if the support is not preserved.
  PointMask apply(const NewtonPolytope& p, std::size_t element, PointMask points) const;
};

/// One row of the reference table of marked orbits.
struct MarkedFaceRow {
  int label;
  ExponentVector normal;
  int dim;
  int orbit_size;
};

const std::vector<MarkedFaceRow>& marked_face_table();

struct CensusMember {
  std::string id;
  PointMask points = 0;
  ExponentVector normal;
  /// Group element carrying the representative to this member.
  std::size_t group_element = 0;
};

struct CensusOrbit {
  /// Row label k of the reference table, or 0 when no row selects this orbit.
  int label = 0;
  ExponentVector normal;
  int dim = 0;
  FaceClass klass = FaceClass::MarkedOther;
  int point_count = 0;
  std::vector<CensusMember> members;
};

struct MarkedFaceCensus {
  std::vector<CensusOrbit> orbits;
  int total_faces() const;
};

/// Marked faces grouped into orbits, labeled against the reference table.
MarkedFaceCensus marked_faces(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice,
                              const SymmetryGroup& group);

/// Face counts by dimension 0..dim-1.
std::vector<int> f_vector(const NewtonPolytope& p, const std::vector<FaceDescriptor>& lattice);

/// Member lookup by id such as "G1_11", "G2" or "G13".
std::optional<CensusMember> find_member(const MarkedFaceCensus& census, const std::string& id,
                                        const CensusOrbit** orbit = nullptr);

/// The 20-point support of the scalar curvature, from the T-root data.
std::vector<ExponentVector> bc2_support();

}  // namespace flagbkk
