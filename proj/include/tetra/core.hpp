#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetra/band.hpp"
#include "tetra/errors.hpp"
#include "tetra/matrix.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

/// Sign structure of a finite stretch of bidiagonal parameters.
enum class Positivity {
  PBF,        // every alpha strictly positive
  TN,         // every alpha nonnegative, at least one zero
  INDEFINITE  // some alpha negative
};

inline const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::PBF: return "PBF";
    case Positivity::TN: return "TN";
    case Positivity::INDEFINITE: return "INDEFINITE";
  }
  return "?";
}

/// Bidiagonal factorization parameters alpha_1, alpha_2, ... of T = L1 L2 U.
/// alpha_j reads as 0 for j <= 0.
template <Scalar T>
class AlphaSequence {
 public:
  AlphaSequence() : alpha_("alpha", 1, std::vector<T>{}) {}
  explicit AlphaSequence(std::vector<T> values) : alpha_("alpha", 1, std::move(values)) {}
  explicit AlphaSequence(typename Band<T>::Generator gen) : alpha_("alpha", 1, std::move(gen)) {}

  T operator()(Index j) const { return j <= 0 ? T(0) : alpha_.at(j); }
  T operator[](Index j) const { return (*this)(j); }

  /// Number of explicit entries; empty when generator-backed.
  std::optional<Index> size() const { return alpha_.last(); }
  bool has(Index j) const { return j <= 0 || alpha_.has(j); }
  const Band<T>& band() const { return alpha_; }

  std::vector<T> first(Index count) const { return alpha_.materialize(count); }

  /// Classification of alpha_1..alpha_count. With `exempt_alpha2`, alpha_2 is
  /// ignored (families whose alpha_2 vanishes identically).
  Positivity classify(Index count, bool exempt_alpha2 = false) const {
    bool zero = false;
    for (Index j = 1; j <= count; ++j) {
      if (exempt_alpha2 && j == 2) continue;
      int s = sign_of((*this)(j));
      if (s < 0) return Positivity::INDEFINITE;
      if (s == 0) zero = true;
    }
    return zero ? Positivity::TN : Positivity::PBF;
  }

 private:
  Band<T> alpha_;
};

/// Semi-infinite tetradiagonal lower Hessenberg matrix with unit superdiagonal:
/// diagonal c_n (n >= 0), subdiagonal b_n (n >= 1), second subdiagonal a_n (n >= 2).
template <Scalar T>
class TetraHessenberg {
 public:
  TetraHessenberg(Band<T> a, Band<T> b, Band<T> c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.start() != 2 || b_.start() != 1 || c_.start() != 0)
      throw PreconditionViolation("bands must start at a:2, b:1, c:0");
    if (auto last = a_.last())
      for (Index n = 2; n <= *last; ++n) check_a(n, a_.at(n));
  }

  T a(Index n) const {
    T v = a_.at(n);
    if (a_.is_generated()) check_a(n, v);
    return v;
  }
  T b(Index n) const { return b_.at(n); }
  T c(Index n) const { return c_.at(n); }

  /// a_n with the convention a_n = 0 for n < 2 (used by recurrences).
  T a_or_zero(Index n) const { return n < 2 ? T(0) : a(n); }
  T b_or_zero(Index n) const { return n < 1 ? T(0) : b(n); }

  const Band<T>& a_band() const { return a_; }
  const Band<T>& b_band() const { return b_; }
  const Band<T>& c_band() const { return c_; }

  /// Largest N for which T^{[N]} can be materialized; empty when unbounded.
  std::optional<Index> last_row() const {
    auto lc = c_.last(), lb = b_.last(), la = a_.last();
    if (!lc && !lb && !la) return std::nullopt;
    Index n = lc ? *lc : std::numeric_limits<Index>::max();
    if (lb && n >= 1) n = std::min(n, std::max<Index>(*lb, 0));
    if (la && n >= 2) n = std::min(n, std::max<Index>(*la, 1));
    return n;
  }

  /// Entry (i, j) of the semi-infinite matrix, 0-based.
  T entry(Index i, Index j) const {
    if (j == i + 1) return T(1);
    if (j == i) return c(i);
    if (j == i - 1) return b(i);
    if (j == i - 2) return a(i);
    return T(0);
  }

  /// The bands re-indexed from k: (a_{k+2},...), (b_{k+1},...), (c_k,...).
  TetraHessenberg drop_leading(Index k) const {
    return TetraHessenberg(a_.drop_front(k), b_.drop_front(k), c_.drop_front(k), unchecked{});
  }

 private:
  struct unchecked {};
  TetraHessenberg(Band<T> a, Band<T> b, Band<T> c, unchecked)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  static void check_a(Index n, const T& v) {
    if (sign_of(v) <= 0) throw NonPositiveSubSubDiagonal(n, to_string(v));
  }

  Band<T> a_, b_, c_;
};

template <Scalar T>
TetraHessenberg<T> tetra_from_bands(std::vector<T> a, std::vector<T> b, std::vector<T> c) {
  return TetraHessenberg<T>(Band<T>("a", 2, std::move(a)), Band<T>("b", 1, std::move(b)),
                            Band<T>("c", 0, std::move(c)));
}

template <Scalar T>
TetraHessenberg<T> tetra_from_bands(Band<T> a, Band<T> b, Band<T> c) {
  return TetraHessenberg<T>(std::move(a), std::move(b), std::move(c));
}

/// T^{[N]}: the (N+1)x(N+1) leading principal submatrix.
template <Scalar T>
DenseMatrix<T> leading_principal(const TetraHessenberg<T>& t, Index n) {
  if (n < 0) throw IndexOutOfRange("truncation index must be nonnegative");
  auto size = static_cast<std::size_t>(n + 1);
  DenseMatrix<T> m(size);
  for (Index i = 0; i <= n; ++i) {
    auto r = static_cast<std::size_t>(i);
    m(r, r) = t.c(i);
    if (i + 1 <= n) m(r, r + 1) = T(1);
    if (i >= 1) m(r, r - 1) = t.b(i);
    if (i >= 2) m(r, r - 2) = t.a(i);
  }
  return m;
}

/// T^{[N,k]}: T^{[N]} with its first k rows and columns removed; k = N+1 gives [1].
template <Scalar T>
DenseMatrix<T> trailing_truncation(const TetraHessenberg<T>& t, Index n, Index k) {
  if (k < 0 || k > n + 1)
    throw IndexOutOfRange("trailing truncation needs 0 <= k <= N+1 (k = " + std::to_string(k) +
                          ", N = " + std::to_string(n) + ")");
  if (k == n + 1) return DenseMatrix<T>::identity(1);
  auto size = static_cast<std::size_t>(n + 1 - k);
  DenseMatrix<T> m(size);
  for (Index i = k; i <= n; ++i) {
    auto r = static_cast<std::size_t>(i - k);
    m(r, r) = t.c(i);
    if (i + 1 <= n) m(r, r + 1) = T(1);
    if (i - 1 >= k) m(r, r - 1) = t.b(i);
    if (i - 2 >= k) m(r, r - 2) = t.a(i);
  }
  return m;
}

namespace detail {

// Bands of the cyclic products of the three bidiagonal factors. shift = 0 gives
// L1 L2 U, shift = 1 gives L2 U L1 and shift = 2 gives U L1 L2: each cyclic
// permutation advances every alpha index by one.
template <Scalar T>
T band_c(const AlphaSequence<T>& al, Index n, Index s) {
  return al(3 * n + 1 + s) + al(3 * n + s) + al(3 * n - 1 + s);
}
template <Scalar T>
T band_b(const AlphaSequence<T>& al, Index n, Index s) {
  return al(3 * n + s) * al(3 * n - 2 + s) + al(3 * n - 1 + s) * al(3 * n - 2 + s) +
         al(3 * n - 1 + s) * al(3 * n - 3 + s);
}
template <Scalar T>
T band_a(const AlphaSequence<T>& al, Index n, Index s) {
  return al(3 * n - 1 + s) * al(3 * n - 3 + s) * al(3 * n - 5 + s);
}

template <Scalar T>
TetraHessenberg<T> tetra_from_alphas_shifted(const AlphaSequence<T>& alphas, Index s) {
  if (auto len = alphas.size()) {
    // Highest alpha index needed: c_n -> 3n+1+s, b_n -> 3n+s, a_n -> 3n-1+s.
    auto top = [&](Index offset) { return (*len - offset - s) >= 0 ? (*len - offset - s) / 3 : -1; };
    std::vector<T> a, b, c;
    for (Index n = 0; n <= top(1); ++n) c.push_back(band_c(alphas, n, s));
    for (Index n = 1; n <= top(0); ++n) b.push_back(band_b(alphas, n, s));
    for (Index n = 2; n <= (*len + 1 - s) / 3; ++n) a.push_back(band_a(alphas, n, s));
    return tetra_from_bands<T>(std::move(a), std::move(b), std::move(c));
  }
  return TetraHessenberg<T>(
      Band<T>("a", 2, typename Band<T>::Generator([alphas, s](Index n) { return band_a(alphas, n, s); })),
      Band<T>("b", 1, typename Band<T>::Generator([alphas, s](Index n) { return band_b(alphas, n, s); })),
      Band<T>("c", 0, typename Band<T>::Generator([alphas, s](Index n) { return band_c(alphas, n, s); })));
}

}  // namespace detail

/// T = L1 L2 U multiplied out band by band.
template <Scalar T>
TetraHessenberg<T> tetra_from_alphas(const AlphaSequence<T>& alphas) {
  return detail::tetra_from_alphas_shifted(alphas, 0);
}

/// Truncated bidiagonal factors L1^{[N]}, L2^{[N]}, U^{[N]} as dense matrices.
template <Scalar T>
struct BidiagonalFactors {
  DenseMatrix<T> l1, l2, u;
};

template <Scalar T>
BidiagonalFactors<T> dense_factors(const AlphaSequence<T>& alphas, Index n) {
  auto size = static_cast<std::size_t>(n + 1);
  BidiagonalFactors<T> f{DenseMatrix<T>::identity(size), DenseMatrix<T>::identity(size), DenseMatrix<T>(size)};
  for (Index i = 0; i <= n; ++i) {
    auto r = static_cast<std::size_t>(i);
    f.u(r, r) = alphas(3 * i + 1);
    if (i < n) {
      f.u(r, r + 1) = T(1);
      f.l1(r + 1, r) = alphas(3 * i + 2);
      f.l2(r + 1, r) = alphas(3 * i + 3);
    }
  }
  return f;
}

/// Bands of two matrices agree for every index up to N.
template <Scalar T>
bool bands_equal(const TetraHessenberg<T>& x, const TetraHessenberg<T>& y, Index n) {
  for (Index i = 0; i <= n; ++i) {
    if (!approx_equal(x.c(i), y.c(i))) return false;
    if (i >= 1 && !approx_equal(x.b(i), y.b(i))) return false;
    if (i >= 2 && !approx_equal(x.a(i), y.a(i))) return false;
  }
  return true;
}

}  // namespace tetra
