#pragma once

// Bell-diagonal states rho = 1/4 (I⊗I + sum_i l_i s_i⊗s_i) and the
// geometry of the hierarchy inside the cube [-1,1]^3: the physical
// tetrahedron, the separable octahedron and the zero-discord axes.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lazyq/fano.hpp"

namespace lazyq {

struct BellDiagPoint {
  Vec3 lambda{};
};

/// Mutually exclusive labels covering the cube. Precedence when several
/// conditions hold: unphysical > pure_vertex > zero_discord > the
/// separable/entangled split.
enum class RegionLabel {
  unphysical,
  zero_discord,
  lazy_separable_discordant,
  lazy_entangled,
  pure_vertex,
};

inline constexpr std::array<RegionLabel, 5> kAllRegionLabels = {
    RegionLabel::unphysical, RegionLabel::zero_discord, RegionLabel::lazy_separable_discordant,
    RegionLabel::lazy_entangled, RegionLabel::pure_vertex};

std::string_view to_string(RegionLabel label);

/// Vertices of the physical tetrahedron.
inline constexpr std::array<Vec3, 4> kTetrahedronVertices = {
    Vec3{-1.0, -1.0, -1.0}, Vec3{-1.0, 1.0, 1.0}, Vec3{1.0, -1.0, 1.0}, Vec3{1.0, 1.0, -1.0}};

TwoQubitState bd_compose(const BellDiagPoint& p);

/// Closed-form eigenvalues, in the fixed order
/// 1/4 {1-l1+l2+l3, 1+l1-l2+l3, 1+l1+l2-l3, 1-l1-l2-l3}.
std::array<double, 4> bd_spectrum(const BellDiagPoint& p);

RegionLabel bd_region(const BellDiagPoint& p, double tol = 1e-9);

/// True when the point lies within tol of a face of the tetrahedron or of
/// the octahedron, i.e. its label could flip under a tol perturbation.
bool bd_on_boundary(const BellDiagPoint& p, double tol = 1e-9);

/// Uniform point in [-1,1]^3 for sample `index` of the run seeded by
/// `seed`. Independent of how samples are distributed over workers.
BellDiagPoint bd_sample(std::uint64_t seed, std::uint64_t index);

struct CensusReport {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 5> counts{};  ///< indexed by RegionLabel
  std::uint64_t boundary_hits = 0;

  std::uint64_t count(RegionLabel l) const { return counts[static_cast<std::size_t>(l)]; }
  double fraction(RegionLabel l) const;
  /// Binomial standard error sqrt(f (1 - f) / samples).
  double stderr_of(RegionLabel l) const;
  std::uint64_t physical() const;
  std::uint64_t separable() const;  ///< zero_discord + lazy_separable_discordant

  /// Associative merge of two partial reports over disjoint sample ranges.
  CensusReport& merge(const CensusReport& other);
};

/// Label samples [begin, end) of the run (one shard of a census).
CensusReport bd_census_range(std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                             double tol = 1e-9);

/// Full census, split over `threads` workers (0 = hardware concurrency).
/// Results do not depend on the thread count.
CensusReport bd_census(std::uint64_t samples, std::uint64_t seed, unsigned threads = 0,
                       double tol = 1e-9);

struct SliceCell {
  std::size_t i = 0;
  std::size_t j = 0;
  double free1 = 0.0;
  double free2 = 0.0;
  RegionLabel label = RegionLabel::unphysical;
};

/// grid x grid labels over the plane lambda_axis = value (axis in 1..3),
/// row-major in (i, j); the free coordinates run uniformly over [-1, 1] in
/// increasing axis order.
std::vector<SliceCell> bd_slice(int axis, double value, std::size_t grid, double tol = 1e-9);

/// CSV writers. `version` goes into the '#' provenance line of the census.
void write_census_csv(std::ostream& os, const CensusReport& r, std::string_view version);
void write_slice_csv(std::ostream& os, const std::vector<SliceCell>& cells);

}  // namespace lazyq
