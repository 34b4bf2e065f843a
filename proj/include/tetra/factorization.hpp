#pragma once

#include <vector>

#include "tetra/core.hpp"

namespace tetra {

/// LU factors of T^{[N]}: L unit lower triangular with subdiagonals m_n (n >= 1)
/// and ell_n (n >= 2); U upper bidiagonal with unit superdiagonal and diagonal
/// alpha_{3n+1}. delta holds the leading principal minors delta^{[0..N]}
/// (delta^{[-1]} = 1 is implicit).
template <Scalar T>
struct GaussBorelFactors {
  Index n = 0;
  std::vector<T> ell;     // ell[i] = ell_{i+2}
  std::vector<T> m;       // m[i] = m_{i+1}
  std::vector<T> u_diag;  // u_diag[i] = alpha_{3i+1}
  std::vector<T> delta;   // delta[i] = delta^{[i]}

  T ell_at(Index k) const { return ell.at(static_cast<std::size_t>(k - 2)); }
  T m_at(Index k) const { return m.at(static_cast<std::size_t>(k - 1)); }
  T delta_at(Index k) const { return k < 0 ? T(k == -1 ? 1 : 0) : delta.at(static_cast<std::size_t>(k)); }

  DenseMatrix<T> lower() const {
    auto size = static_cast<std::size_t>(n + 1);
    auto l = DenseMatrix<T>::identity(size);
    for (Index i = 1; i <= n; ++i) l(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = m_at(i);
    for (Index i = 2; i <= n; ++i) l(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 2)) = ell_at(i);
    return l;
  }

  DenseMatrix<T> upper() const {
    auto size = static_cast<std::size_t>(n + 1);
    DenseMatrix<T> u(size);
    for (std::size_t i = 0; i < size; ++i) {
      u(i, i) = u_diag[i];
      if (i + 1 < size) u(i, i + 1) = T(1);
    }
    return u;
  }
};

/// Gauss-Borel (LU) factorization of T^{[N]} from the determinant recurrence
/// delta^{[n]} = a_n delta^{[n-3]} - b_n delta^{[n-2]} + c_n delta^{[n-1]}.
template <Scalar T>
GaussBorelFactors<T> gauss_borel(const TetraHessenberg<T>& t, Index n) {
  if (n < 0) throw IndexOutOfRange("Gauss-Borel needs N >= 0");
  GaussBorelFactors<T> f;
  f.n = n;
  for (Index k = 0; k <= n; ++k) {
    T term_a = t.a_or_zero(k) * f.delta_at(k - 3);
    T term_b = t.b_or_zero(k) * f.delta_at(k - 2);
    T term_c = t.c(k) * f.delta_at(k - 1);
    T d = term_a - term_b + term_c;
    T scale = scalar_traits<T>::abs(term_a) + scalar_traits<T>::abs(term_b) + scalar_traits<T>::abs(term_c);
    if (is_zero(d, scale)) throw SingularLeadingMinor(k);
    f.delta.push_back(d);
  }
  for (Index k = 0; k <= n; ++k) f.u_diag.push_back(f.delta_at(k) / f.delta_at(k - 1));
  for (Index k = 1; k <= n; ++k) f.m.push_back(t.c(k) - f.u_diag[static_cast<std::size_t>(k)]);
  for (Index k = 2; k <= n; ++k) f.ell.push_back(t.a(k) * f.delta_at(k - 3) / f.delta_at(k - 2));
  return f;
}

/// alpha_1..alpha_{3N+1} of T = L1 L2 U, with the free parameter alpha_2 supplied
/// by the caller. The 3n+1 strand is U's diagonal; the other two strands solve
/// alpha_{3n-1} + alpha_{3n} = m_n and alpha_{3n+2} alpha_{3n} = ell_{n+1}.
template <Scalar T>
AlphaSequence<T> bidiagonal_factor(const TetraHessenberg<T>& t, Index n, const T& alpha2) {
  const auto lu = gauss_borel(t, n);
  std::vector<T> alpha(static_cast<std::size_t>(3 * n + 1), T(0));
  auto at = [&](Index j) -> T& { return alpha[static_cast<std::size_t>(j - 1)]; };
  for (Index k = 0; k <= n; ++k) at(3 * k + 1) = lu.u_diag[static_cast<std::size_t>(k)];
  if (n >= 1) at(2) = alpha2;
  for (Index k = 1; k <= n; ++k) {
    at(3 * k) = lu.m_at(k) - at(3 * k - 1);
    if (k + 1 <= n) {
      if (is_zero(at(3 * k), lu.m_at(k))) throw ZeroAlpha3n(k);
      at(3 * k + 2) = lu.ell_at(k + 1) / at(3 * k);
    }
  }
  return AlphaSequence<T>(std::move(alpha));
}

/// Positivity of alpha_1..alpha_count.
template <Scalar T>
Positivity is_pbf(const AlphaSequence<T>& alphas, Index count) {
  if (count < 1) throw PreconditionViolation("is_pbf needs count >= 1");
  return alphas.classify(count);
}

/// Same classification with alpha_2 left out.
template <Scalar T>
Positivity is_pbf_excluding_alpha2(const AlphaSequence<T>& alphas, Index count) {
  if (count < 1) throw PreconditionViolation("is_pbf needs count >= 1");
  return alphas.classify(count, true);
}

/// Gauss-Borel subdiagonals induced by an alpha sequence:
/// m_n = alpha_{3n-1} + alpha_{3n}, ell_n = alpha_{3n-1} alpha_{3n-3}.
template <Scalar T>
T induced_m(const AlphaSequence<T>& al, Index n) {
  return al(3 * n - 1) + al(3 * n);
}
template <Scalar T>
T induced_ell(const AlphaSequence<T>& al, Index n) {
  return al(3 * n - 1) * al(3 * n - 3);
}

}  // namespace tetra
