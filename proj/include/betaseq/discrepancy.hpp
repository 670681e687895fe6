#pragma once

// Exact star discrepancy D_N* = sup over anchored boxes [0,a) of
// |count/N - vol|.  The supremum is attained on the critical grid built from
// the point coordinates and 1, provided both box closures are considered:
// at a grid corner g the one-sided limits are (vol - strict_count/N) and
// (closed_count/N - vol).
//
// Three routes: exact_1d (sorted-order formula), exact_grid (sweep / prefix
// counting over the critical grid), brute_force (per-corner rescan, the
// reference oracle).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sequence.hpp"

namespace betaseq {

enum class DiscrepancyMethod { Exact1D, ExactGrid, BruteForce };

inline std::string to_string(DiscrepancyMethod m) {
  switch (m) {
    case DiscrepancyMethod::Exact1D: return "exact_1d";
    case DiscrepancyMethod::ExactGrid: return "exact_grid";
    case DiscrepancyMethod::BruteForce: return "brute_force";
  }
  return "?";
}

inline DiscrepancyMethod discrepancy_method_from_string(const std::string& s) {
  if (s == "exact_1d") return DiscrepancyMethod::Exact1D;
  if (s == "exact_grid") return DiscrepancyMethod::ExactGrid;
  if (s == "brute_force") return DiscrepancyMethod::BruteForce;
  throw std::invalid_argument("unknown discrepancy method: " + s);
}

struct DiscrepancyReport {
  std::int64_t n = 0;
  int dimension = 1;
  double d_star = 0.0;
  DiscrepancyMethod method = DiscrepancyMethod::Exact1D;
  bool exact = true;
};

namespace detail {

inline double dstar_exact_1d(const PointSet& ps) {
  std::vector<double> xs(ps.coords);
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double best = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    best = std::max(best, xs[i] - static_cast<double>(i) / n);
    best = std::max(best, static_cast<double>(i + 1) / n - xs[i]);
  }
  return best;
}

inline std::vector<double> grid_values(const PointSet& ps, int dim) {
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(ps.size()) + 1);
  for (std::int64_t i = 0; i < ps.size(); ++i) g.push_back(ps.at(i, dim));
  g.push_back(1.0);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

// reference: enumerate critical corners, rescan all points per corner
inline double dstar_brute(const PointSet& ps, std::int64_t budget) {
  const int s = ps.dimension;
  const std::int64_t N = ps.size();
  std::vector<std::vector<double>> grids;
  std::int64_t corners = 1;
  for (int d = 0; d < s; ++d) {
    grids.push_back(grid_values(ps, d));
    corners *= static_cast<std::int64_t>(grids.back().size());
  }
  if (corners * N * s > budget) throw std::invalid_argument("brute_force work budget exceeded");

  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  std::vector<double> corner(static_cast<std::size_t>(s));
  double best = 0.0;
  while (true) {
    double vol = 1.0;
    for (int d = 0; d < s; ++d) {
      corner[static_cast<std::size_t>(d)] = grids[static_cast<std::size_t>(d)][idx[static_cast<std::size_t>(d)]];
      vol *= corner[static_cast<std::size_t>(d)];
    }
    std::int64_t strict = 0, closed = 0;
    for (std::int64_t i = 0; i < N; ++i) {
      bool in_strict = true, in_closed = true;
      for (int d = 0; d < s && in_closed; ++d) {
        double x = ps.at(i, d), c = corner[static_cast<std::size_t>(d)];
        if (x >= c) in_strict = false;
        if (x > c) in_closed = false;
      }
      if (in_strict) ++strict;
      if (in_closed) ++closed;
    }
    best = std::max(best, vol - static_cast<double>(strict) / static_cast<double>(N));
    best = std::max(best, static_cast<double>(closed) / static_cast<double>(N) - vol);
    int d = 0;
    for (; d < s; ++d) {
      if (++idx[static_cast<std::size_t>(d)] < grids[static_cast<std::size_t>(d)].size()) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d == s) break;
  }
  return best;
}

// grid route, s = 1: prefix counts along the sorted coordinate grid
inline double dstar_grid_1d(const PointSet& ps) {
  std::vector<double> xs(ps.coords);
  std::sort(xs.begin(), xs.end());
  std::vector<double> g = grid_values(ps, 0);
  const double n = static_cast<double>(xs.size());
  double best = 0.0;
  for (double c : g) {
    auto strict = std::lower_bound(xs.begin(), xs.end(), c) - xs.begin();
    auto closed = std::upper_bound(xs.begin(), xs.end(), c) - xs.begin();
    best = std::max(best, c - static_cast<double>(strict) / n);
    best = std::max(best, static_cast<double>(closed) / n - c);
  }
  return best;
}

// grid route, s = 2: sweep the x-grid, maintain per-y-rank counts, prefix-sum
// per column.  O(Nx * Ny) after sorting.
inline double dstar_grid_2d(const PointSet& ps) {
  const std::int64_t N = ps.size();
  std::vector<double> gx = grid_values(ps, 0), gy = grid_values(ps, 1);
  const std::size_t ny = gy.size();

  struct Pt { double x, y; };
  std::vector<Pt> pts(static_cast<std::size_t>(N));
  for (std::int64_t i = 0; i < N; ++i) pts[static_cast<std::size_t>(i)] = {ps.at(i, 0), ps.at(i, 1)};
  std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });

  auto yrank = [&](double y) {
    return static_cast<std::size_t>(std::lower_bound(gy.begin(), gy.end(), y) - gy.begin());
  };

  std::vector<std::int64_t> cnt_strict(ny, 0), cnt_closed(ny, 0);
  std::vector<std::int64_t> pre_strict(ny + 1, 0), pre_closed(ny + 1, 0);
  std::size_t next_strict = 0, next_closed = 0;
  const double n = static_cast<double>(N);
  double best = 0.0;

  for (double cx : gx) {
    while (next_strict < pts.size() && pts[next_strict].x < cx)
      ++cnt_strict[yrank(pts[next_strict++].y)];
    while (next_closed < pts.size() && pts[next_closed].x <= cx)
      ++cnt_closed[yrank(pts[next_closed++].y)];
    for (std::size_t r = 0; r < ny; ++r) {
      pre_strict[r + 1] = pre_strict[r] + cnt_strict[r];
      pre_closed[r + 1] = pre_closed[r] + cnt_closed[r];
    }
    for (std::size_t r = 0; r < ny; ++r) {
      double cy = gy[r];
      double vol = cx * cy;
      // strictly below cy: ranks < r; closed: ranks <= r
      best = std::max(best, vol - static_cast<double>(pre_strict[r]) / n);
      best = std::max(best, static_cast<double>(pre_closed[r + 1]) / n - vol);
    }
  }
  return best;
}

// grid route, s = 3: bin points into grid cells, 3-D prefix sums
inline double dstar_grid_3d(const PointSet& ps, std::int64_t budget) {
  const std::int64_t N = ps.size();
  std::vector<double> g0 = grid_values(ps, 0), g1 = grid_values(ps, 1), g2 = grid_values(ps, 2);
  const std::size_t n0 = g0.size(), n1 = g1.size(), n2 = g2.size();
  if (static_cast<std::int64_t>(n0) * static_cast<std::int64_t>(n1) *
          static_cast<std::int64_t>(n2) > budget)
    throw std::invalid_argument("exact_grid work budget exceeded");

  auto rank = [](const std::vector<double>& g, double v) {
    return static_cast<std::size_t>(std::lower_bound(g.begin(), g.end(), v) - g.begin());
  };
  std::vector<std::int64_t> cube(n0 * n1 * n2, 0);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> std::int64_t& {
    return cube[(i * n1 + j) * n2 + k];
  };
  for (std::int64_t p = 0; p < N; ++p)
    ++at(rank(g0, ps.at(p, 0)), rank(g1, ps.at(p, 1)), rank(g2, ps.at(p, 2)));
  // prefix sums along each axis -> closed counts at cell corners
  for (std::size_t i = 1; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k) at(i, j, k) += at(i - 1, j, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 1; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k) at(i, j, k) += at(i, j - 1, k);
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 1; k < n2; ++k) at(i, j, k) += at(i, j, k - 1);

  auto closed = [&](std::size_t i, std::size_t j, std::size_t k) { return at(i, j, k); };
  auto strict = [&](std::size_t i, std::size_t j, std::size_t k) -> std::int64_t {
    if (i == 0 || j == 0 || k == 0) return 0;
    return at(i - 1, j - 1, k - 1);
  };
  const double n = static_cast<double>(N);
  double best = 0.0;
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n2; ++k) {
        double vol = g0[i] * g1[j] * g2[k];
        best = std::max(best, vol - static_cast<double>(strict(i, j, k)) / n);
        best = std::max(best, static_cast<double>(closed(i, j, k)) / n - vol);
      }
  return best;
}

}  // namespace detail

inline DiscrepancyReport star_discrepancy(const PointSet& ps, DiscrepancyMethod method,
                                          std::int64_t work_budget = 200'000'000) {
  if (ps.coords.empty()) throw std::invalid_argument("empty point set");
  DiscrepancyReport report;
  report.n = ps.size();
  report.dimension = ps.dimension;
  report.method = method;
  report.exact = true;

  switch (method) {
    case DiscrepancyMethod::Exact1D:
      if (ps.dimension != 1) throw std::invalid_argument("exact_1d requires dimension 1");
      report.d_star = detail::dstar_exact_1d(ps);
      break;
    case DiscrepancyMethod::ExactGrid:
      if (ps.dimension == 1)
        report.d_star = detail::dstar_grid_1d(ps);
      else if (ps.dimension == 2) {
        if (ps.size() > 4096) throw std::invalid_argument("exact_grid work budget exceeded");
        report.d_star = detail::dstar_grid_2d(ps);
      } else if (ps.dimension == 3)
        report.d_star = detail::dstar_grid_3d(ps, work_budget);
      else
        throw std::invalid_argument("exact_grid supports dimensions 1..3");
      break;
    case DiscrepancyMethod::BruteForce:
      if (ps.size() > 1000) throw std::invalid_argument("brute_force requires N <= 1000");
      report.d_star = detail::dstar_brute(ps, work_budget);
      break;
  }
  return report;
}

}  // namespace betaseq
