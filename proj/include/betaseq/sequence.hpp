#pragma once

// beta-adic van der Corput and Halton point generation plus the product
// compatibility checks of the unique-ergodicity criterion: pairwise coprime
// constant coefficients (decisive) and bounded-range evidence that
// beta_i^k / beta_j^l avoids small rationals (heuristic only).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "monna.hpp"
#include "numeration.hpp"

namespace betaseq {

inline double vdc_point(std::int64_t n, const NumerationSystem& sys) {
  if (n < 1) throw std::invalid_argument("sequence index starts at 1");
  return monna_map(greedy_expansion(n, sys), sys);
}

enum class CompatStatus { Pass, Warn, Fail, OutsideHypotheses };

inline std::string to_string(CompatStatus s) {
  switch (s) {
    case CompatStatus::Pass: return "PASS";
    case CompatStatus::Warn: return "WARN";
    case CompatStatus::Fail: return "FAIL";
    case CompatStatus::OutsideHypotheses: return "OUTSIDE_HYPOTHESES";
  }
  return "?";
}

struct PairCompat {
  std::size_t i = 0, j = 0;
  bool constant_pair = false;   // both systems have constant coefficients
  int b_i = 0, b_j = 0;
  bool coprime = false;
  bool rational_hit = false;    // some beta_i^k/beta_j^l within tol of p/q, q <= 10^4
  double min_rational_gap = 0.0;
  int hit_k = 0, hit_l = 0;
  CompatStatus status = CompatStatus::OutsideHypotheses;
};

struct CompatReport {
  CompatStatus overall = CompatStatus::Pass;
  std::vector<PairCompat> pairs;
};

namespace detail {

inline int constant_coefficient(const NumerationSystem& sys) {
  const auto& a = sys.coeffs();
  for (int v : a)
    if (v != a[0]) return 0;
  return a[0];
}

// distance from x to the nearest rational with denominator <= qmax
inline double nearest_rational_gap(double x, int qmax) {
  double best = std::abs(x - std::round(x));
  for (int q = 2; q <= qmax; ++q) {
    double g = std::abs(x - std::round(x * q) / q);
    if (g < best) best = g;
  }
  return best;
}

inline PairCompat check_pair(std::size_t i, std::size_t j, const NumerationSystem& si,
                             const NumerationSystem& sj, int k_max, double tol) {
  PairCompat pc;
  pc.i = i;
  pc.j = j;
  pc.b_i = constant_coefficient(si);
  pc.b_j = constant_coefficient(sj);
  pc.constant_pair = pc.b_i > 0 && pc.b_j > 0;
  pc.coprime = pc.constant_pair && std::gcd(pc.b_i, pc.b_j) == 1;

  pc.min_rational_gap = 1.0;
  // powers in 50-digit arithmetic; the gap scan itself is double precision
  for (int k = 1; k <= k_max; ++k) {
    BigFloat num = 1;
    for (int t = 0; t < k; ++t) num *= si.beta_precise();
    for (int l = 1; l <= k_max; ++l) {
      BigFloat den = 1;
      for (int t = 0; t < l; ++t) den *= sj.beta_precise();
      double ratio = static_cast<double>(num / den);
      double gap = nearest_rational_gap(ratio, 10'000);
      if (gap < pc.min_rational_gap) {
        pc.min_rational_gap = gap;
        pc.hit_k = k;
        pc.hit_l = l;
      }
    }
  }
  pc.rational_hit = pc.min_rational_gap <= tol;

  if (!pc.constant_pair)
    pc.status = CompatStatus::OutsideHypotheses;
  else if (!pc.coprime)
    pc.status = CompatStatus::Fail;
  else if (pc.rational_hit)
    pc.status = CompatStatus::Warn;
  else
    pc.status = CompatStatus::Pass;
  return pc;
}

inline CompatStatus worst(CompatStatus a, CompatStatus b) {
  auto rank = [](CompatStatus s) {
    switch (s) {
      case CompatStatus::Pass: return 0;
      case CompatStatus::OutsideHypotheses: return 1;
      case CompatStatus::Warn: return 2;
      case CompatStatus::Fail: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

// Relaxed variant for config assembly: non-constant pairs are reported as
// OutsideHypotheses instead of rejected, so constructions like (1,0,1) x (2)
// stay available.
inline CompatReport compatibility_report(const std::vector<const NumerationSystem*>& systems,
                                         int k_max, double tol) {
  CompatReport report;
  for (std::size_t i = 0; i < systems.size(); ++i)
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      report.pairs.push_back(check_pair(i, j, *systems[i], *systems[j], k_max, tol));
      report.overall = worst(report.overall, report.pairs.back().status);
    }
  return report;
}

}  // namespace detail

// Theorem 2 setting: every system must have constant coefficients (degree-1
// classical bases included).  Coprimality is decisive; the rational scan over
// beta_i^k/beta_j^l for k,l <= k_max against denominators <= 10^4 is labeled
// evidence, never proof.
inline CompatReport compatibility_check(const std::vector<const NumerationSystem*>& systems,
                                        int k_max = 5, double tol = 1e-9) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
  for (const NumerationSystem* s : systems)
    if (detail::constant_coefficient(*s) == 0)
      throw std::domain_error("system " + s->name() +
                              " outside Theorem 2 hypotheses (constant coefficients required)");
  return detail::compatibility_report(systems, k_max, tol);
}

struct HaltonConfig {
  std::vector<NumerationSystem> systems;
  CompatReport compat;

  std::size_t dimension() const { return systems.size(); }
};

// Builds the product configuration; rejects NotUnitIntervalOrNotDense
// coordinates and decisively incompatible (non-coprime) pairs.
inline HaltonConfig make_halton_config(std::vector<NumerationSystem> systems, int k_max = 5,
                                       double tol = 1e-9) {
  if (systems.empty()) throw std::invalid_argument("need at least one system");
  for (const NumerationSystem& s : systems) require_unit_interval(s);
  HaltonConfig cfg;
  cfg.systems = std::move(systems);
  std::vector<const NumerationSystem*> ptrs;
  for (const NumerationSystem& s : cfg.systems) ptrs.push_back(&s);
  cfg.compat = detail::compatibility_report(ptrs, k_max, tol);
  if (cfg.compat.overall == CompatStatus::Fail) {
    std::ostringstream os;
    os << "incompatible system pair:";
    for (const PairCompat& p : cfg.compat.pairs)
      if (p.status == CompatStatus::Fail)
        os << ' ' << cfg.systems[p.i].name() << 'x' << cfg.systems[p.j].name() << " gcd("
           << p.b_i << ',' << p.b_j << ")!=1";
    throw std::invalid_argument(os.str());
  }
  return cfg;
}

inline std::vector<double> halton_point(std::int64_t n, const HaltonConfig& cfg) {
  std::vector<double> x;
  x.reserve(cfg.dimension());
  for (const NumerationSystem& sys : cfg.systems) x.push_back(vdc_point(n, sys));
  return x;
}

// Flat row-major point storage.
struct PointSet {
  int dimension = 1;
  std::vector<double> coords;
  std::string provenance;

  std::int64_t size() const {
    return static_cast<std::int64_t>(coords.size()) / dimension;
  }
  double at(std::int64_t i, int dim) const {
    return coords[static_cast<std::size_t>(i) * dimension + dim];
  }
};

namespace detail {

// index-sharded parallel fill; each worker writes its own slice so the output
// order is the index order regardless of scheduling
template <typename Fill>
inline void sharded_fill(std::int64_t count, Fill&& fill) {
  unsigned hw = std::thread::hardware_concurrency();
  if (count < 16'384 || hw < 2) {
    fill(0, count);
    return;
  }
  unsigned workers = std::min<unsigned>(hw, 8);
  std::vector<std::thread> pool;
  std::int64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::int64_t lo = w * chunk, hi = std::min<std::int64_t>(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] { fill(lo, hi); });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

// Points phi_beta(first), ..., phi_beta(first+count-1); the sequence proper
// starts at n = 1 (phi(0) = 0 is index 0).
inline PointSet generate_vdc(const NumerationSystem& sys, std::int64_t first, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (first < 0) throw std::invalid_argument("first index must be >= 0");
  require_unit_interval(sys);
  if (first + count - 1 >= sys.base_values().back())
    throw std::out_of_range("index range exceeds precomputed base sequence");
  PointSet ps;
  ps.dimension = 1;
  ps.coords.resize(static_cast<std::size_t>(count));
  detail::sharded_fill(count, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i)
      ps.coords[static_cast<std::size_t>(i)] = monna_map(greedy_expansion(first + i, sys), sys);
  });
  ps.provenance = "vdc " + sys.name() + " n=" + std::to_string(first) + ".." +
                  std::to_string(first + count - 1);
  return ps;
}

inline PointSet generate_halton(const HaltonConfig& cfg, std::int64_t first, std::int64_t count) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (first < 0) throw std::invalid_argument("first index must be >= 0");
  for (const NumerationSystem& sys : cfg.systems)
    if (first + count - 1 >= sys.base_values().back())
      throw std::out_of_range("index range exceeds precomputed base sequence");
  const int s = static_cast<int>(cfg.dimension());
  PointSet ps;
  ps.dimension = s;
  ps.coords.resize(static_cast<std::size_t>(count) * s);
  detail::sharded_fill(count, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i)
      for (int dim = 0; dim < s; ++dim)
        ps.coords[static_cast<std::size_t>(i) * s + dim] =
            monna_map(greedy_expansion(first + i, cfg.systems[static_cast<std::size_t>(dim)]),
                      cfg.systems[static_cast<std::size_t>(dim)]);
  });
  std::string names;
  for (const NumerationSystem& sys : cfg.systems) names += sys.name();
  ps.provenance = "halton " + names + " n=" + std::to_string(first) + ".." +
                  std::to_string(first + count - 1);
  return ps;
}

// Orbit of `start` under T = phi o tau o phi^+ (inherently sequential).
inline PointSet generate_orbit(const NumerationSystem& sys, double start, std::int64_t count,
                               int depth) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  PointSet ps;
  ps.dimension = 1;
  ps.coords.reserve(static_cast<std::size_t>(count));
  double x = start;
  for (std::int64_t i = 0; i < count; ++i) {
    ps.coords.push_back(x);
    if (i + 1 < count) x = interval_transform(x, sys, depth);
  }
  std::ostringstream os;
  os << "orbit " << sys.name() << " start=" << start << " count=" << count;
  ps.provenance = os.str();
  return ps;
}

}  // namespace betaseq
