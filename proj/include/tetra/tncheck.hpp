#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tetra/errors.hpp"
#include "tetra/matrix.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

inline constexpr std::size_t kMinorEnumerationCap = 8;
inline constexpr std::size_t kPowerOracleCap = 6;

/// A minor of a matrix; index sets are 0-based and sorted.
template <Scalar T>
struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  T value;
};

template <Scalar T>
struct TNReport {
  bool is_tn = false;
  std::optional<MinorWitness<T>> witness;  // first negative minor, when not TN
  bool is_nonsingular = false;
  bool is_irreducible = false;
  bool is_oscillatory_gk = false;
  std::optional<bool> is_oscillatory_power;
};

namespace detail {

// Calls f on every k-subset of {0..n-1} in lexicographic order; stops when f returns false.
inline bool for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visits minors by order, then row set, then column set (all lexicographic).
// Stops at the first minor for which `stop` holds and returns it.
template <Scalar T>
std::optional<MinorWitness<T>> first_minor_where(const DenseMatrix<T>& m, const std::function<bool(const T&)>& stop) {
  std::optional<MinorWitness<T>> found;
  const std::size_t n = m.size();
  for (std::size_t k = 1; k <= n && !found; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        T v = m.submatrix(rows, cols).determinant();
        if (!stop(v)) return true;
        found = MinorWitness<T>{rows, cols, v};
        return false;
      });
    });
  }
  return found;
}

template <Scalar T>
bool strongly_connected(const DenseMatrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return true;
  auto reaches_all = [&](bool transpose) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const T& e = transpose ? m(j, i) : m(i, j);
        if (!seen[j] && !is_zero(e)) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    for (bool s : seen)
      if (!s) return false;
    return true;
  };
  return reaches_all(false) && reaches_all(true);
}

inline void check_cap(std::size_t dim, std::size_t cap) {
  if (dim > cap) throw DimensionCapExceeded(dim, cap);
}

}  // namespace detail

/// Brute-force enumeration of every minor. The witness is the first negative
/// minor in (order, rows, cols) lexicographic order.
template <Scalar T>
TNReport<T> is_totally_nonnegative(const DenseMatrix<T>& m, std::size_t cap = kMinorEnumerationCap) {
  detail::check_cap(m.size(), cap);
  TNReport<T> r;
  r.witness = detail::first_minor_where<T>(m, [](const T& v) { return sign_of(v) < 0; });
  r.is_tn = !r.witness;
  r.is_nonsingular = !is_zero(m.determinant());
  r.is_irreducible = detail::strongly_connected(m);
  return r;
}

/// All minors strictly positive.
template <Scalar T>
bool is_totally_positive(const DenseMatrix<T>& m, std::size_t cap = kMinorEnumerationCap) {
  detail::check_cap(m.size(), cap);
  return !detail::first_minor_where<T>(m, [](const T& v) { return sign_of(v) <= 0; });
}

/// Gantmacher-Krein: oscillatory iff TN, nonsingular, and the first sub- and
/// superdiagonals are positive.
template <Scalar T>
TNReport<T> is_oscillatory(const DenseMatrix<T>& m, std::size_t cap = kMinorEnumerationCap) {
  auto r = is_totally_nonnegative(m, cap);
  bool off = true;
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    off = off && sign_of(m(i + 1, i)) > 0 && sign_of(m(i, i + 1)) > 0;
  r.is_oscillatory_gk = r.is_tn && r.is_nonsingular && off;
  return r;
}

/// Definition-level oracle: TN and some power A^k, 1 <= k <= max(1, dim-1), is TP.
template <Scalar T>
bool is_oscillatory_power_oracle(const DenseMatrix<T>& m, std::size_t cap = kPowerOracleCap) {
  detail::check_cap(m.size(), cap);
  if (!is_totally_nonnegative(m, cap).is_tn) return false;
  const std::size_t top = m.size() > 2 ? m.size() - 1 : 1;
  DenseMatrix<T> p = m;
  for (std::size_t k = 1; k <= top; ++k) {
    if (is_totally_positive(p, cap)) return true;
    p = p * m;
  }
  return false;
}

/// GK verdict plus the power oracle, which is only evaluated within its cap.
template <Scalar T>
TNReport<T> oscillatory_report(const DenseMatrix<T>& m) {
  auto r = is_oscillatory(m);
  if (m.size() <= kPowerOracleCap) r.is_oscillatory_power = is_oscillatory_power_oracle(m);
  return r;
}

enum class SampledVerdict { NOT_TN, INCONCLUSIVE };

template <Scalar T>
struct SampledTNReport {
  SampledVerdict verdict = SampledVerdict::INCONCLUSIVE;
  std::optional<MinorWitness<T>> witness;
  std::size_t minors_checked = 0;
};

/// For matrices above the enumeration cap: random minors only. A negative minor
/// proves the matrix is not TN; otherwise the verdict is INCONCLUSIVE.
template <Scalar T>
SampledTNReport<T> sample_total_nonnegativity(const DenseMatrix<T>& m, std::size_t samples, std::uint64_t seed) {
  SampledTNReport<T> r;
  const std::size_t n = m.size();
  if (n == 0) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order(1, n);
  auto pick = [&](std::size_t k) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::vector<std::size_t> out;
    std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
    return out;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    auto k = order(rng);
    auto rows = pick(k), cols = pick(k);
    T v = m.submatrix(rows, cols).determinant();
    ++r.minors_checked;
    if (sign_of(v) < 0) {
      r.verdict = SampledVerdict::NOT_TN;
      r.witness = MinorWitness<T>{rows, cols, v};
      break;
    }
  }
  return r;
}

}  // namespace tetra
