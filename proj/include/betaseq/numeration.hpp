#pragma once

// Linear-recurrence numeration systems: base sequences G_n, characteristic
// roots, greedy integer expansions and digit admissibility.
//
// A system is defined by non-negative coefficients a = (a_0, ..., a_{d-1})
// with a_0 >= 1 and a_{d-1} >= 1.  The base sequence starts with G_0 = 1,
// G_k = a_0 G_{k-1} + ... + a_{k-1} G_0 + 1 for k < d, and follows
// G_{n+d} = a_0 G_{n+d-1} + ... + a_{d-1} G_n afterwards.  Every n >= 0 has
// a unique greedy expansion n = sum eps_k G_k whose partial sums satisfy
// sum_{k<K} eps_k G_k < G_K for all K; those digit strings are the
// admissible ones.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace betaseq {

// >= 30 significant decimal digits, enough that beta^l and G_n up to ~1e7
// keep the Pisot decay signal visible.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Internal numeric failures (non-convergence, lost precision).  Input and
// range problems use the std exception types instead.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in base-sequence arithmetic");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in base-sequence arithmetic");
  return r;
}

}  // namespace detail

// Digit string of a G-expansion, little-endian: digits[j] carries weight G_j
// (or beta^{-j-1} under the Monna map).  Trailing zeros are insignificant;
// equality compares stripped strings.
struct DigitString {
  std::vector<int> digits;

  DigitString() = default;
  explicit DigitString(std::vector<int> d) : digits(std::move(d)) {}
  DigitString(std::initializer_list<int> d) : digits(d) {}

  int at(std::size_t j) const { return j < digits.size() ? digits[j] : 0; }
  std::size_t size() const { return digits.size(); }

  bool is_zero() const { return top_index() < 0; }

  // index of the highest nonzero digit, -1 for the zero string
  int top_index() const {
    for (int j = static_cast<int>(digits.size()) - 1; j >= 0; --j)
      if (digits[j] != 0) return j;
    return -1;
  }

  DigitString& strip() {
    while (!digits.empty() && digits.back() == 0) digits.pop_back();
    return *this;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < digits.size(); ++j) {
      if (j) os << ',';
      os << digits[j];
    }
    os << ')';
    return os.str();
  }

  friend bool operator==(const DigitString& a, const DigitString& b) {
    int t = a.top_index();
    if (t != b.top_index()) return false;
    for (int j = 0; j <= t; ++j)
      if (a.digits[j] != b.digits[j]) return false;
    return true;
  }
  friend bool operator!=(const DigitString& a, const DigitString& b) { return !(a == b); }
};

enum class SystemClass {
  UniformCase,                // (a_0, ..., a_0)
  SandwichCase,               // (a_0, a_0-1, ..., a_0-1, a_0)
  BAdicEquivalentCase,        // (a_0, ..., a_0, a_0+1), same as base a_0+1
  CompositeCase,              // (a', ..., a', a''), re-coding of the a'' system
  NotUnitIntervalOrNotDense,  // Monna image leaves [0,1) or is not dense
};

struct CompositeDetail {
  std::vector<int> head;  // a'
  std::vector<int> tail;  // a''
  int repetitions = 0;    // number of a' copies
};

struct Classification {
  SystemClass tag = SystemClass::NotUnitIntervalOrNotDense;
  std::optional<CompositeDetail> composite;
  std::optional<int> equivalent_base;

  bool unit_interval() const { return tag != SystemClass::NotUnitIntervalOrNotDense; }
};

inline std::string coeff_string(const std::vector<int>& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

inline std::string to_string(const Classification& c) {
  switch (c.tag) {
    case SystemClass::UniformCase:
      return "UniformCase";
    case SystemClass::SandwichCase:
      return "SandwichCase";
    case SystemClass::BAdicEquivalentCase:
      return "BAdicEquivalentCase equivalent_base=" + std::to_string(*c.equivalent_base);
    case SystemClass::CompositeCase: {
      const CompositeDetail& det = *c.composite;
      return "CompositeCase a'=" + coeff_string(det.head) + " a''=" + coeff_string(det.tail) +
             " equivalent to " + coeff_string(det.tail);
    }
    case SystemClass::NotUnitIntervalOrNotDense:
      return "NotUnitIntervalOrNotDense";
  }
  return "?";
}

inline void validate_coefficients(const std::vector<int>& a) {
  if (a.empty()) throw std::invalid_argument("coefficient vector must be non-empty");
  if (a.front() < 1) throw std::invalid_argument("a_0 must be >= 1");
  if (a.back() < 1) throw std::invalid_argument("a_{d-1} must be >= 1 (trailing zero lowers the order)");
  for (int v : a)
    if (v < 0) throw std::invalid_argument("coefficients must be non-negative");
}

// Case analysis for which systems the Monna map sends N into a dense subset
// of [0,1).  First matching case wins; anything else is out.
inline Classification classify_coefficients(const std::vector<int>& a) {
  validate_coefficients(a);
  const int d = static_cast<int>(a.size());
  const int a0 = a.front();
  Classification out;

  auto all_equal = [&](int from, int to, int value) {
    for (int i = from; i < to; ++i)
      if (a[i] != value) return false;
    return true;
  };

  if (all_equal(0, d, a0)) {
    out.tag = SystemClass::UniformCase;
    return out;
  }
  if (d >= 2 && a.back() == a0 && all_equal(1, d - 1, a0 - 1)) {
    out.tag = SystemClass::SandwichCase;
    return out;
  }
  if (d >= 2 && a.back() == a0 + 1 && all_equal(0, d - 1, a0)) {
    out.tag = SystemClass::BAdicEquivalentCase;
    out.equivalent_base = a0 + 1;  // the system reproduces base a_0+1
    return out;
  }
  // composite: r >= 1 copies of a' followed by a'' of the same length m
  for (int m = 1; 2 * m <= d; ++m) {
    if (d % m != 0) continue;
    const int reps = d / m - 1;
    auto matches = [&](const std::vector<int>& head, const std::vector<int>& tail) {
      for (int r = 0; r < reps; ++r)
        for (int i = 0; i < m; ++i)
          if (a[r * m + i] != head[i]) return false;
      for (int i = 0; i < m; ++i)
        if (a[reps * m + i] != tail[i]) return false;
      return true;
    };
    // a' = (a_0,...,a_0,a_0-1), a'' = (a_0,...,a_0)
    {
      std::vector<int> head(m, a0), tail(m, a0);
      head[m - 1] = a0 - 1;
      if (matches(head, tail)) {
        out.tag = SystemClass::CompositeCase;
        out.composite = CompositeDetail{head, tail, reps};
        return out;
      }
    }
    // a' = (a_0,a_0-1,...,a_0-1), a'' = (a_0,a_0-1,...,a_0-1,a_0)
    {
      std::vector<int> head(m, a0 - 1), tail(m, a0 - 1);
      head[0] = a0;
      tail[0] = a0;
      tail[m - 1] = a0;
      if (matches(head, tail)) {
        out.tag = SystemClass::CompositeCase;
        out.composite = CompositeDetail{head, tail, reps};
        return out;
      }
    }
  }
  out.tag = SystemClass::NotUnitIntervalOrNotDense;
  return out;
}

namespace detail {

inline BigFloat char_poly(const std::vector<int>& a, const BigFloat& x) {
  const int d = static_cast<int>(a.size());
  BigFloat q = 0;
  for (int i = 0; i < d; ++i) q = q * x + a[i];
  BigFloat p = 1;
  for (int i = 0; i < d; ++i) p *= x;
  return p - q;
}

inline BigFloat char_poly_deriv(const std::vector<int>& a, const BigFloat& x) {
  const int d = static_cast<int>(a.size());
  BigFloat q = 0;
  for (int i = 0; i + 1 < d; ++i) q = q * x + a[i] * (d - 1 - i);
  BigFloat p = d;
  for (int i = 0; i + 1 < d; ++i) p *= x;
  return p - q;
}

// all eigenvalues of the companion matrix except the one matching beta
inline bool other_roots_inside_unit_disc(const std::vector<int>& a, double beta, double tol) {
  const int d = static_cast<int>(a.size());
  if (d == 1) return true;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) m(0, i) = a[i];
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw NumericError("companion eigensolver failed");
  const auto& ev = es.eigenvalues();
  int skip = 0;
  double best = std::abs(ev(0).real() - beta) + std::abs(ev(0).imag());
  for (int i = 1; i < d; ++i) {
    double dist = std::abs(ev(i).real() - beta) + std::abs(ev(i).imag());
    if (dist < best) {
      best = dist;
      skip = i;
    }
  }
  for (int i = 0; i < d; ++i) {
    if (i == skip) continue;
    if (std::abs(ev(i)) >= 1.0 - tol) return false;
  }
  return true;
}

}  // namespace detail

struct RootResult {
  BigFloat beta;
  bool pisot = false;
};

// The unique root > 1 of x^d = a_0 x^{d-1} + ... + a_{d-1} (there is exactly
// one positive root by Descartes' rule), bisected on [1, 1+sum a_i] and
// polished by Newton in 50-digit arithmetic.  `pisot` reports whether every
// other root of the degree-d polynomial has modulus < 1 - tol.
inline RootResult characteristic_root(const std::vector<int>& a, double tol = 1e-9) {
  validate_coefficients(a);
  if (!(tol > 0.0 && tol <= 1e-6)) throw std::invalid_argument("tol must lie in (0, 1e-6]");
  std::int64_t coeff_sum = 0;
  for (int v : a) coeff_sum += v;
  if (coeff_sum < 2)
    throw std::invalid_argument("sum of coefficients must be >= 2 (a=(1) has no root > 1)");

  BigFloat lo = 1, hi = BigFloat(1) + coeff_sum;
  for (int it = 0; it < 120; ++it) {
    BigFloat mid = (lo + hi) / 2;
    if (detail::char_poly(a, mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  BigFloat x = (lo + hi) / 2;
  const BigFloat eps = BigFloat("1e-45");
  bool converged = false;
  for (int it = 0; it < 60; ++it) {
    BigFloat p = detail::char_poly(a, x);
    BigFloat dp = detail::char_poly_deriv(a, x);
    if (dp == 0) break;
    BigFloat step = p / dp;
    x -= step;
    if (abs(step) < eps * x) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericError("characteristic root refinement did not converge");

  BigFloat betad = 1;
  for (std::size_t i = 0; i < a.size(); ++i) betad *= x;
  if (abs(detail::char_poly(a, x)) >= BigFloat("1e-12") * betad)
    throw NumericError("characteristic root residual too large");

  RootResult r;
  r.beta = x;
  r.pisot = detail::other_roots_inside_unit_disc(a, static_cast<double>(x), tol);
  return r;
}

// Immutable after construction; safe to share across threads.
class NumerationSystem {
 public:
  static NumerationSystem build(std::vector<int> coeffs, int max_index) {
    validate_coefficients(coeffs);
    const int d = static_cast<int>(coeffs.size());
    if (max_index < d) throw std::invalid_argument("max_index must be >= d");

    NumerationSystem sys;
    sys.coeffs_ = std::move(coeffs);
    sys.classification_ = classify_coefficients(sys.coeffs_);
    RootResult root = characteristic_root(sys.coeffs_);
    sys.beta50_ = root.beta;
    sys.beta_ = static_cast<double>(root.beta);
    sys.pisot_ = root.pisot;

    sys.G_.reserve(max_index + 1);
    sys.G_.push_back(1);
    for (int k = 1; k < d; ++k) {
      std::int64_t g = 1;
      for (int i = 0; i < k; ++i)
        g = detail::checked_add(g, detail::checked_mul(sys.coeffs_[i], sys.G_[k - 1 - i]));
      sys.G_.push_back(g);
    }
    for (int n = d; n <= max_index; ++n) {
      std::int64_t g = 0;
      for (int i = 0; i < d; ++i)
        g = detail::checked_add(g, detail::checked_mul(sys.coeffs_[i], sys.G_[n - 1 - i]));
      sys.G_.push_back(g);
    }
    for (std::size_t k = 0; k + 1 < sys.G_.size(); ++k)
      if (sys.G_[k + 1] <= sys.G_[k]) throw NumericError("base sequence is not strictly increasing");

    BigFloat bp = 1;
    for (int n = 0; n < max_index; ++n) bp *= sys.beta50_;
    sys.growth_constant_ = static_cast<double>(BigFloat(sys.G_.back()) / bp);

    // greedy digits stay <= a_0 iff G_{k+1}-1 < (a_0+1) G_k everywhere; that
    // is the gate for the quasi-greedy-word machinery (lex fast path, DP)
    sys.bounded_digits_ = true;
    for (std::size_t k = 0; k + 1 < sys.G_.size(); ++k) {
      if (sys.G_[k + 1] - 1 >= detail::checked_mul(sys.coeffs_[0] + 1, sys.G_[k])) {
        sys.bounded_digits_ = false;
        break;
      }
    }
    sys.parry_compatible_ = (floor(sys.beta50_) == BigFloat(sys.coeffs_[0]));
    return sys;
  }

  // smallest range whose top base value exceeds `value` (plus slack so the
  // odometer can carry past it)
  static NumerationSystem build_to_cover(std::vector<int> coeffs, std::int64_t value) {
    validate_coefficients(coeffs);
    if (value < 0) throw std::invalid_argument("value must be >= 0");
    const int d = static_cast<int>(coeffs.size());
    // grow a scratch sequence until it clears value
    std::vector<std::int64_t> g{1};
    auto next = [&](int n) {
      std::int64_t v = n < d ? 1 : 0;
      for (int i = 0; i < std::min(n, d); ++i)
        v = detail::checked_add(v, detail::checked_mul(coeffs[i], g[n - 1 - i]));
      return v;
    };
    int n = 0;
    while (g.back() <= value + 1) {
      ++n;
      g.push_back(next(n));
    }
    return build(std::move(coeffs), std::max(n + 2, d));
  }

  const std::vector<int>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  int max_index() const { return static_cast<int>(G_.size()) - 1; }

  std::int64_t G(int k) const {
    if (k < 0 || k >= static_cast<int>(G_.size()))
      throw std::out_of_range("base-sequence index out of precomputed range");
    return G_[static_cast<std::size_t>(k)];
  }
  const std::vector<std::int64_t>& base_values() const { return G_; }

  const BigFloat& beta_precise() const { return beta50_; }
  double beta() const { return beta_; }
  double growth_constant() const { return growth_constant_; }
  const Classification& classification() const { return classification_; }
  bool pisot_verified() const { return pisot_; }

  // floor(beta) == a_0, i.e. Parry's expansion of 1 is the coefficient word
  bool parry_compatible() const { return parry_compatible_; }
  // greedy digits provably bounded by a_0 over the precomputed range; gates
  // the lexicographic fast path and the counting DP
  bool bounded_digits() const { return bounded_digits_; }

  // (a_0, ..., a_{d-2}, a_{d-1} - 1), repeated periodically it is the
  // supremum word for admissibility comparisons
  std::vector<int> quasi_greedy_word() const {
    std::vector<int> w = coeffs_;
    w.back() -= 1;
    return w;
  }

  std::string name() const { return coeff_string(coeffs_); }

 private:
  NumerationSystem() = default;

  std::vector<int> coeffs_;
  std::vector<std::int64_t> G_;
  BigFloat beta50_;
  double beta_ = 0.0;
  double growth_constant_ = 0.0;
  Classification classification_;
  bool pisot_ = false;
  bool parry_compatible_ = false;
  bool bounded_digits_ = false;
};

inline DigitString greedy_expansion(std::int64_t n, const NumerationSystem& sys) {
  if (n < 0) throw std::invalid_argument("greedy_expansion requires n >= 0");
  if (n >= sys.base_values().back())
    throw std::out_of_range("n out of precomputed base-sequence range");
  if (n == 0) return DigitString{};

  const auto& G = sys.base_values();
  int top = static_cast<int>(std::upper_bound(G.begin(), G.end(), n) - G.begin()) - 1;
  DigitString out;
  out.digits.assign(top + 1, 0);
  std::int64_t r = n;
  for (int j = top; j >= 0; --j) {
    out.digits[j] = static_cast<int>(r / G[j]);
    r -= static_cast<std::int64_t>(out.digits[j]) * G[j];
  }
  return out;
}

inline std::int64_t expansion_value(const DigitString& ds, const NumerationSystem& sys) {
  if (ds.top_index() >= static_cast<int>(sys.base_values().size()))
    throw std::out_of_range("digit string exceeds precomputed base-sequence range");
  std::int64_t v = 0;
  for (int j = 0; j <= ds.top_index(); ++j) {
    if (ds.digits[j] < 0) throw std::invalid_argument("digits must be non-negative");
    v = detail::checked_add(v, detail::checked_mul(ds.digits[j], sys.G(j)));
  }
  return v;
}

// Normative admissibility test: every partial sum sum_{k<K} eps_k G_k < G_K.
inline bool is_admissible(const DigitString& ds, const NumerationSystem& sys) {
  int top = ds.top_index();
  if (top < 0) return true;
  if (top + 1 > sys.max_index())
    throw std::out_of_range("digit string exceeds precomputed base-sequence range");
  std::int64_t partial = 0;
  for (int K = 1; K <= top + 1; ++K) {
    int e = ds.digits[K - 1];
    if (e < 0) throw std::invalid_argument("digits must be non-negative");
    partial = detail::checked_add(partial, detail::checked_mul(e, sys.G(K - 1)));
    if (partial >= sys.G(K)) return false;
  }
  return true;
}

namespace detail {

// Tight-window tracker for the lexicographic admissibility condition: a digit
// string (read most-significant-first) is admissible iff every window
// (eps_k, eps_{k-1}, ..., eps_0, 0^inf) is lexicographically smaller than the
// periodic quasi-greedy word w = (a_0, ..., a_{d-2}, a_{d-1}-1)^inf.  The
// state is the set of residues q mod d at which some window read so far still
// equals a prefix of w; bit 0 (the window opening at the next symbol) is
// always live.
class AdmissibilityAutomaton {
 public:
  using State = std::uint64_t;

  explicit AdmissibilityAutomaton(const NumerationSystem& sys)
      : word_(sys.quasi_greedy_word()), d_(static_cast<int>(word_.size())) {
    if (!sys.bounded_digits())
      throw std::logic_error("lexicographic machinery requires digits bounded by a_0");
    if (d_ > 63) throw std::invalid_argument("degree too large for window bitmask");
  }

  static constexpr State start() { return 1; }
  int period() const { return d_; }
  int word_at(int q) const { return word_[static_cast<std::size_t>(q)]; }

  // returns the follow state, or nullopt when some window turns >= w
  std::optional<State> step(State s, int digit) const {
    State next = 1;  // fresh window at the following symbol
    for (int q = 0; q < d_; ++q) {
      if (!(s >> q & 1)) continue;
      if (digit > word_[q]) return std::nullopt;
      if (digit == word_[q]) next |= State{1} << ((q + 1) % d_);
    }
    return next;
  }

 private:
  std::vector<int> word_;
  int d_;
};

}  // namespace detail

// Lexicographic fast path; agrees with is_admissible on every system whose
// greedy digits are bounded by a_0 (property-tested).
inline bool is_admissible_lex(const DigitString& ds, const NumerationSystem& sys) {
  detail::AdmissibilityAutomaton aut(sys);
  auto s = aut.start();
  for (int j = ds.top_index(); j >= 0; --j) {
    if (ds.digits[j] < 0) throw std::invalid_argument("digits must be non-negative");
    auto nxt = aut.step(s, ds.digits[j]);
    if (!nxt) return false;
    s = *nxt;
  }
  return true;
}

}  // namespace betaseq
