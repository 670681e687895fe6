#pragma once

// Cylinder sets, the odometer's invariant measure
//
//   mu(Z) = [F_K b^{d-1} + (F_{K+1} - a_0 F_K) b^{d-2} + ...
//            + (F_{K+d-1} - a_0 F_{K+d-2} - ... - a_{d-2} F_K)]
//           / (b^K (b^{d-1} + ... + 1)),        F_J = #{n < G_J : n in Z},
//
// numeric verification that the Monna map transports mu to Lebesgue measure,
// and nearest-integer probes of the eigenvalue set {z : z^{G_n} -> 1}.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monna.hpp"
#include "numeration.hpp"

namespace betaseq {

// A fixed digit prefix eps_0..eps_{K-1}; K = 0 is the full space.  Unlike
// DigitString values, trailing zeros in the prefix are significant: they pin
// those positions to zero.
struct CylinderSet {
  const NumerationSystem* sys = nullptr;
  DigitString prefix;

  CylinderSet(const NumerationSystem& s, DigitString p) : sys(&s), prefix(std::move(p)) {
    if (!is_admissible(prefix, *sys))
      throw std::invalid_argument("cylinder prefix must be admissible");
  }

  int depth() const { return static_cast<int>(prefix.size()); }
};

// Oracle path: walk every n < G_M and compare greedy digits against the
// prefix.  Exponential in M, so capped.
inline std::int64_t count_prefix_enumerate(const CylinderSet& Z, int M,
                                           std::int64_t limit = 2'000'000) {
  const NumerationSystem& sys = *Z.sys;
  const int K = Z.depth();
  if (M < K) throw std::invalid_argument("M must be >= cylinder depth");
  if (M > sys.max_index()) throw std::out_of_range("M out of precomputed range");
  const std::int64_t GM = sys.G(M);
  if (GM > limit) throw std::invalid_argument("enumeration bound exceeded");
  std::int64_t count = 0;
  for (std::int64_t n = 0; n < GM; ++n) {
    DigitString ds = greedy_expansion(n, sys);
    bool match = true;
    for (int j = 0; j < K && match; ++j) match = ds.at(static_cast<std::size_t>(j)) == Z.prefix.digits[j];
    if (match) ++count;
  }
  return count;
}

// Exact count of n < G_M whose expansion starts with the prefix.  Counts
// length-M strings digit by digit from the most significant position with the
// tight-window automaton; the fixed prefix is replayed at the end.  Falls
// back to enumeration when the word machinery does not apply.
inline std::int64_t count_prefix(const CylinderSet& Z, int M) {
  const NumerationSystem& sys = *Z.sys;
  const int K = Z.depth();
  if (M < K) throw std::invalid_argument("M must be >= cylinder depth");
  if (M > sys.max_index()) throw std::out_of_range("M out of precomputed range");
  if (!sys.bounded_digits()) return count_prefix_enumerate(Z, M);

  detail::AdmissibilityAutomaton aut(sys);
  const int a0 = sys.coeffs()[0];
  std::map<detail::AdmissibilityAutomaton::State, std::int64_t> dist{{aut.start(), 1}};
  for (int pos = M - 1; pos >= K; --pos) {
    std::map<detail::AdmissibilityAutomaton::State, std::int64_t> next;
    for (const auto& [state, cnt] : dist)
      for (int e = 0; e <= a0; ++e)
        if (auto ns = aut.step(state, e)) next[*ns] = detail::checked_add(next[*ns], cnt);
    dist = std::move(next);
  }
  std::int64_t total = 0;
  for (const auto& [state, cnt] : dist) {
    auto s = std::optional<detail::AdmissibilityAutomaton::State>(state);
    for (int j = K - 1; j >= 0 && s; --j) s = aut.step(*s, Z.prefix.digits[j]);
    if (s) total = detail::checked_add(total, cnt);
  }
  return total;
}

// Eq. "mu" with exact integer F counts assembled before a single division in
// 50-digit arithmetic (the cancellations F_{K+1} - a_0 F_K etc. are exact).
inline double mu(const CylinderSet& Z) {
  const NumerationSystem& sys = *Z.sys;
  const int d = sys.degree();
  const int K = Z.depth();
  if (K + d - 1 > sys.max_index())
    throw std::out_of_range("K + d - 1 out of precomputed range");

  std::vector<std::int64_t> F(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) F[static_cast<std::size_t>(i)] = count_prefix(Z, K + i);

  const auto& a = sys.coeffs();
  const BigFloat& beta = sys.beta_precise();
  BigFloat num = 0;
  for (int i = 0; i < d; ++i) {
    std::int64_t c = F[static_cast<std::size_t>(i)];
    for (int t = 0; t < i; ++t)
      c -= detail::checked_mul(a[static_cast<std::size_t>(t)],
                               F[static_cast<std::size_t>(i - 1 - t)]);
    BigFloat pw = 1;
    for (int e = 0; e < d - 1 - i; ++e) pw *= beta;
    num += BigFloat(c) * pw;
  }
  BigFloat den = 0, pw = 1;
  for (int j = 0; j < d; ++j) {
    den += pw;
    pw *= beta;
  }
  BigFloat bK = 1;
  for (int e = 0; e < K; ++e) bK *= beta;
  return static_cast<double>(num / (bK * den));
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

namespace detail {

// Lexicographic comparison of the descending word (prefix read downward, then
// zeros) against the j-th rotation of the periodic quasi-greedy word.  Never
// equal: the word carries a_0 >= 1 in every period while the tail is zero.
inline bool descending_word_less(const std::vector<int>& prefix_le, const std::vector<int>& w,
                                 int j) {
  const int K = static_cast<int>(prefix_le.size());
  const int d = static_cast<int>(w.size());
  for (int i = 0; i < K + d + 1; ++i) {
    int sym = i < K ? prefix_le[static_cast<std::size_t>(K - 1 - i)] : 0;
    int ref = w[static_cast<std::size_t>((j + i) % d)];
    if (sym != ref) return sym < ref;
  }
  throw NumericError("rotation comparison did not terminate");
}

}  // namespace detail

// phi_beta(Z) as the half-open interval [phi(prefix), phi(prefix) + sup_tail).
// The supremum of the admissible tail above the prefix is built by upward
// greedy digit maximization; the choice at each height depends only on how
// the written word compares against every rotation of the quasi-greedy word,
// so the digits become eventually periodic and the tail sums to an exact
// geometric closed form.
inline Interval cylinder_image(const CylinderSet& Z) {
  const NumerationSystem& sys = *Z.sys;
  require_unit_interval(sys);
  if (!sys.bounded_digits())
    throw std::domain_error("cylinder_image requires digits bounded by a_0");

  const std::vector<int> w = sys.quasi_greedy_word();
  const int d = static_cast<int>(w.size());
  const int a0 = sys.coeffs()[0];
  const int K = Z.depth();

  // R[j] = (current descending word) < sigma^j w
  std::vector<bool> R(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j)
    R[static_cast<std::size_t>(j)] = detail::descending_word_less(Z.prefix.digits, w, j);

  auto encode = [&](const std::vector<bool>& r) {
    std::uint64_t m = 0;
    for (int j = 0; j < d; ++j)
      if (r[static_cast<std::size_t>(j)]) m |= std::uint64_t{1} << j;
    return m;
  };

  std::map<std::uint64_t, int> seen;
  std::vector<int> deltas;
  int cycle_start = -1;
  while (true) {
    auto [it, fresh] = seen.emplace(encode(R), static_cast<int>(deltas.size()));
    if (!fresh) {
      cycle_start = it->second;
      break;
    }
    int delta = -1;
    for (int e = a0; e >= 0; --e) {
      if (e < w[0] || (e == w[0] && R[static_cast<std::size_t>(1 % d)])) {
        delta = e;
        break;
      }
    }
    if (delta < 0) throw NumericError("no admissible digit above cylinder prefix");
    std::vector<bool> Rn(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      int ref = w[static_cast<std::size_t>(j)];
      Rn[static_cast<std::size_t>(j)] =
          delta < ref || (delta == ref && R[static_cast<std::size_t>((j + 1) % d)]);
    }
    R = std::move(Rn);
    deltas.push_back(delta);
  }

  const BigFloat& beta = sys.beta_precise();
  const BigFloat inv = BigFloat(1) / beta;
  BigFloat lo = 0;
  for (int j = K - 1; j >= 0; --j) lo = (lo + Z.prefix.digits[j]) * inv;

  const int period = static_cast<int>(deltas.size()) - cycle_start;
  BigFloat scale = 1;
  for (int e = 0; e < K; ++e) scale *= inv;
  BigFloat tail = 0;
  for (int i = 0; i < cycle_start; ++i) {
    scale *= inv;
    tail += deltas[static_cast<std::size_t>(i)] * scale;
  }
  BigFloat cyc = 0, cs = scale;
  for (int i = cycle_start; i < static_cast<int>(deltas.size()); ++i) {
    cs *= inv;
    cyc += deltas[static_cast<std::size_t>(i)] * cs;
  }
  BigFloat invp = 1;
  for (int e = 0; e < period; ++e) invp *= inv;
  tail += cyc / (1 - invp);

  Interval out;
  out.lo = static_cast<double>(lo);
  out.hi = static_cast<double>(lo + tail);
  if (out.hi > 1.0) out.hi = 1.0;
  return out;
}

struct TransportReport {
  double max_deviation = 0.0;       // worst |mu(Z) - lambda(phi(Z))|
  DigitString worst_prefix;
  int worst_depth = 0;
  double max_sum_deviation = 0.0;   // worst per-depth |sum_Z mu(Z) - 1|
  std::int64_t cylinders = 0;
};

// Enumerates every admissible cylinder of depth 1..depth (partial-sum-pruned
// DFS, independent of the counting DP) and compares mu against the image
// length; also checks that mu sums to 1 at each depth.
inline TransportReport verify_transport(const NumerationSystem& sys, int depth) {
  require_unit_interval(sys);
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (depth + sys.degree() - 1 > sys.max_index())
    throw std::out_of_range("depth + d - 1 out of precomputed range");

  TransportReport report;
  std::vector<double> depth_sum(static_cast<std::size_t>(depth + 1), 0.0);
  std::vector<int> digits;

  auto visit = [&](auto&& self, std::int64_t partial) -> void {
    const int k = static_cast<int>(digits.size());
    if (k > 0) {
      CylinderSet Z(sys, DigitString(std::vector<int>(digits)));
      double m = mu(Z);
      double img = cylinder_image(Z).length();
      double dev = std::abs(m - img);
      depth_sum[static_cast<std::size_t>(k)] += m;
      ++report.cylinders;
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        report.worst_prefix = Z.prefix;
        report.worst_depth = k;
      }
    }
    if (k == depth) return;
    for (int e = 0;; ++e) {
      std::int64_t p = partial + static_cast<std::int64_t>(e) * sys.G(k);
      if (p >= sys.G(k + 1)) break;  // Eq. (2) prune
      digits.push_back(e);
      self(self, p);
      digits.pop_back();
    }
  };
  visit(visit, 0);

  for (int k = 1; k <= depth; ++k)
    report.max_sum_deviation = std::max(report.max_sum_deviation,
                                        std::abs(depth_sum[static_cast<std::size_t>(k)] - 1.0));
  return report;
}

struct SpectrumProbe {
  std::int64_t c = 0;
  int m = 0;
  int l = 0;
  std::vector<double> values;  // values[n] = dist(G_n c / (b^m beta^l), Z)
};

// Probes z = exp(2 pi i c/(b^m beta^l)) for membership in the eigenvalue set:
// z^{G_n} -> 1 iff the fractional distance of G_n c/(b^m beta^l) to the
// nearest integer tends to 0 (|z^{G_n} - 1| <= 2 pi times that distance).
// Theorem 2 setting: constant coefficients a_j = b.
inline SpectrumProbe eigenvalue_limit_check(const NumerationSystem& sys, std::int64_t c, int m,
                                            int l, int n_max) {
  if (sys.classification().tag != SystemClass::UniformCase)
    throw std::domain_error("spectrum probe outside Theorem 2 hypotheses "
                            "(constant coefficients required)");
  if (c < 0 || m < 0 || l < 0) throw std::invalid_argument("c, m, l must be non-negative");
  if (n_max > sys.max_index()) throw std::out_of_range("n_max out of precomputed range");

  const int b = sys.coeffs()[0];
  BigFloat den = 1;
  for (int i = 0; i < m; ++i) den *= b;
  for (int i = 0; i < l; ++i) den *= sys.beta_precise();

  SpectrumProbe probe;
  probe.c = c;
  probe.m = m;
  probe.l = l;
  probe.values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    BigFloat x = BigFloat(sys.G(n)) * c / den;
    BigFloat dist = abs(x - round(x));
    probe.values.push_back(static_cast<double>(dist));
  }
  return probe;
}

}  // namespace betaseq
