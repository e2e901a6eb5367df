#include "lazyq/belldiag.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lazyq/random.hpp"

namespace lazyq {

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::unphysical: return "unphysical";
    case RegionLabel::zero_discord: return "zero_discord";
    case RegionLabel::lazy_separable_discordant: return "lazy_separable_discordant";
    case RegionLabel::lazy_entangled: return "lazy_entangled";
    case RegionLabel::pure_vertex: return "pure_vertex";
  }
  return "unknown";
}

TwoQubitState bd_compose(const BellDiagPoint& p) {
  FanoParams f;
  f.t = RealMatrix3::diagonal(p.lambda[0], p.lambda[1], p.lambda[2]);
  return compose(f);
}

std::array<double, 4> bd_spectrum(const BellDiagPoint& p) {
  const auto [l1, l2, l3] = p.lambda;
  return {0.25 * (1.0 - l1 + l2 + l3), 0.25 * (1.0 + l1 - l2 + l3), 0.25 * (1.0 + l1 + l2 - l3),
          0.25 * (1.0 - l1 - l2 - l3)};
}

namespace {

double l1_norm(const Vec3& v) { return std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]); }

double min_eigenvalue(const BellDiagPoint& p) {
  const auto s = bd_spectrum(p);
  return *std::min_element(s.begin(), s.end());
}

}  // namespace

RegionLabel bd_region(const BellDiagPoint& p, double tol) {
  if (min_eigenvalue(p) < -tol) return RegionLabel::unphysical;
  for (const Vec3& v : kTetrahedronVertices) {
    const double dist = std::max({std::abs(p.lambda[0] - v[0]), std::abs(p.lambda[1] - v[1]),
                                  std::abs(p.lambda[2] - v[2])});
    if (dist <= tol) return RegionLabel::pure_vertex;
  }
  const auto nonzero = std::count_if(p.lambda.begin(), p.lambda.end(),
                                     [&](double l) { return std::abs(l) > tol; });
  if (nonzero <= 1) return RegionLabel::zero_discord;
  return l1_norm(p.lambda) <= 1.0 + tol ? RegionLabel::lazy_separable_discordant
                                        : RegionLabel::lazy_entangled;
}

bool bd_on_boundary(const BellDiagPoint& p, double tol) {
  return std::abs(min_eigenvalue(p)) <= tol || std::abs(l1_norm(p.lambda) - 1.0) <= tol;
}

BellDiagPoint bd_sample(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = stream_seed(seed, index);
  BellDiagPoint p;
  for (std::uint64_t k = 0; k < 3; ++k) {
    const std::uint64_t bits = mix64(s + 0x9e3779b97f4a7c15ULL * (k + 1));
    const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    p.lambda[k] = 2.0 * u - 1.0;
  }
  return p;
}

double CensusReport::fraction(RegionLabel l) const {
  return samples == 0 ? 0.0 : static_cast<double>(count(l)) / static_cast<double>(samples);
}

double CensusReport::stderr_of(RegionLabel l) const {
  if (samples == 0) return 0.0;
  const double f = fraction(l);
  return std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
}

std::uint64_t CensusReport::physical() const { return samples - count(RegionLabel::unphysical); }

std::uint64_t CensusReport::separable() const {
  return count(RegionLabel::zero_discord) + count(RegionLabel::lazy_separable_discordant);
}

CensusReport& CensusReport::merge(const CensusReport& other) {
  samples += other.samples;
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
  boundary_hits += other.boundary_hits;
  return *this;
}

CensusReport bd_census_range(std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                             double tol) {
  CensusReport r;
  r.seed = seed;
  for (std::uint64_t i = begin; i < end; ++i) {
    const BellDiagPoint p = bd_sample(seed, i);
    ++r.counts[static_cast<std::size_t>(bd_region(p, tol))];
    if (bd_on_boundary(p, tol)) ++r.boundary_hits;
    ++r.samples;
  }
  return r;
}

CensusReport bd_census(std::uint64_t samples, std::uint64_t seed, unsigned threads, double tol) {
  if (samples == 0) throw std::invalid_argument("bd_census: samples must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, samples));

  std::vector<CensusReport> parts(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = samples * w / threads;
    const std::uint64_t end = samples * (w + 1) / threads;
    workers.emplace_back([&parts, w, seed, begin, end, tol] {
      parts[w] = bd_census_range(seed, begin, end, tol);
    });
  }
  for (auto& t : workers) t.join();

  CensusReport total;
  total.seed = seed;
  for (const auto& part : parts) total.merge(part);
  return total;
}

std::vector<SliceCell> bd_slice(int axis, double value, std::size_t grid, double tol) {
  if (axis < 1 || axis > 3) throw std::invalid_argument("bd_slice: axis must be 1, 2 or 3");
  if (!(std::abs(value) <= 1.0)) throw std::invalid_argument("bd_slice: |value| must be <= 1");
  if (grid < 2) throw std::invalid_argument("bd_slice: grid must be >= 2");

  int free[2];
  for (int k = 0, n = 0; k < 3; ++k)
    if (k != axis - 1) free[n++] = k;

  std::vector<SliceCell> cells;
  cells.reserve(grid * grid);
  const double step = 2.0 / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    for (std::size_t j = 0; j < grid; ++j) {
      // Evaluate symmetrically about 0 so mirrored cells are exact negatives.
      auto coord = [&](std::size_t k) {
        const double c = -1.0 + step * static_cast<double>(k);
        const double mirror = 1.0 - step * static_cast<double>(grid - 1 - k);
        return 2 * k + 1 < grid ? c : (2 * k + 1 == grid ? 0.0 : mirror);
      };
      BellDiagPoint p;
      p.lambda[axis - 1] = value;
      p.lambda[free[0]] = coord(i);
      p.lambda[free[1]] = coord(j);
      cells.push_back({i, j, p.lambda[free[0]], p.lambda[free[1]], bd_region(p, tol)});
    }
  }
  return cells;
}

void write_census_csv(std::ostream& os, const CensusReport& r, std::string_view version) {
  fmt::print(os, "# lazyq bd census samples={} seed={} version={} boundary_hits={}\n", r.samples,
             r.seed, version, r.boundary_hits);
  os << "label,count,fraction,stderr\n";
  for (RegionLabel l : kAllRegionLabels) {
    fmt::print(os, "{},{},{:.9f},{:.9f}\n", to_string(l), r.count(l), r.fraction(l), r.stderr_of(l));
  }
}

void write_slice_csv(std::ostream& os, const std::vector<SliceCell>& cells) {
  os << "i,j,l_free1,l_free2,label\n";
  for (const auto& c : cells) {
    fmt::print(os, "{},{},{:.6f},{:.6f},{}\n", c.i, c.j, c.free1 + 0.0, c.free2 + 0.0, to_string(c.label));
  }
}

}  // namespace lazyq
