#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tetra/core.hpp"
#include "tetra/polynomial.hpp"

namespace tetra {

enum class PolyKind {
  TYPE2,
  TYPE1_A1,
  TYPE1_A2,
  SECOND_KIND_B1,
  SECOND_KIND_B2,
  SECOND_KIND_SMALL_b1,
  TRUNCATED_CHAR,
  TRANSFORMED_TYPE2,
  TRANSFORMED_TYPE1
};

inline const char* to_string(PolyKind k) {
  switch (k) {
    case PolyKind::TYPE2: return "type2";
    case PolyKind::TYPE1_A1: return "type1_A1";
    case PolyKind::TYPE1_A2: return "type1_A2";
    case PolyKind::SECOND_KIND_B1: return "second_B1";
    case PolyKind::SECOND_KIND_B2: return "second_B2";
    case PolyKind::SECOND_KIND_SMALL_b1: return "second_b1";
    case PolyKind::TRUNCATED_CHAR: return "truncated_char";
    case PolyKind::TRANSFORMED_TYPE2: return "transformed_type2";
    case PolyKind::TRANSFORMED_TYPE1: return "transformed_type1";
  }
  return "?";
}

/// P_0, ..., P_N produced by one recurrence.
template <Scalar T>
struct PolySequence {
  PolyKind kind = PolyKind::TYPE2;
  std::vector<Polynomial<T>> polys;
  std::optional<T> nu;

  const Polynomial<T>& operator[](Index n) const { return polys.at(static_cast<std::size_t>(n)); }
  Index last() const { return static_cast<Index>(polys.size()) - 1; }
};

/// Type II recursion polynomials B_0..B_N:
/// B_{n+1} = (x - c_n) B_n - b_n B_{n-1} - a_n B_{n-2}, B_0 = 1.
template <Scalar T>
PolySequence<T> type2_sequence(const TetraHessenberg<T>& t, Index n) {
  if (n < 0) throw IndexOutOfRange("type2_sequence needs N >= 0");
  PolySequence<T> seq{PolyKind::TYPE2, {Polynomial<T>::constant(T(1))}, std::nullopt};
  auto& b = seq.polys;
  for (Index k = 0; k < n; ++k) {
    auto next = Polynomial<T>::linear(t.c(k)) * b[static_cast<std::size_t>(k)];
    if (k >= 1) next -= t.b(k) * b[static_cast<std::size_t>(k - 1)];
    if (k >= 2) next -= t.a(k) * b[static_cast<std::size_t>(k - 2)];
    b.push_back(std::move(next));
  }
  return seq;
}

/// Type I recursion polynomials A^{(1)}_0..A^{(1)}_N and A^{(2)}_0..A^{(2)}_N,
/// left eigenvectors of T with A^{(1)} = (1, nu, ...) and A^{(2)} = (0, 1, ...):
/// a_n A_n = -b_{n-1} A_{n-1} + (x - c_{n-2}) A_{n-2} - A_{n-3}.
template <Scalar T>
std::pair<PolySequence<T>, PolySequence<T>> type1_sequences(const TetraHessenberg<T>& t, Index n, const T& nu) {
  if (is_zero(nu)) throw ZeroNu();
  if (n < 0) throw IndexOutOfRange("type1_sequences needs N >= 0");
  auto run = [&](PolyKind kind, const T& a0, const T& a1) {
    PolySequence<T> seq{kind, {Polynomial<T>::constant(a0)}, nu};
    auto& p = seq.polys;
    if (n >= 1) p.push_back(Polynomial<T>::constant(a1));
    for (Index k = 2; k <= n; ++k) {
      auto rhs = Polynomial<T>::linear(t.c(k - 2)) * p[static_cast<std::size_t>(k - 2)];
      rhs -= t.b(k - 1) * p[static_cast<std::size_t>(k - 1)];
      if (k >= 3) rhs -= p[static_cast<std::size_t>(k - 3)];
      p.push_back(rhs / t.a(k));
    }
    return seq;
  };
  return {run(PolyKind::TYPE1_A1, T(1), nu), run(PolyKind::TYPE1_A2, T(0), T(1))};
}

/// Second kind type II polynomials B^{(1)}, B^{(2)} (index 0..N) and
/// b^{(1)} = B^{(2)} + nu B^{(1)}. Inside this recurrence only, b_0 = a_0 = a_1 = -1.
template <Scalar T>
std::tuple<PolySequence<T>, PolySequence<T>, PolySequence<T>> second_kind_sequences(const TetraHessenberg<T>& t,
                                                                                     Index n, const T& nu) {
  if (is_zero(nu)) throw ZeroNu();
  if (n < 0) throw IndexOutOfRange("second_kind_sequences needs N >= 0");
  auto sub = [&](Index k) { return k == 0 ? T(-1) : t.b(k); };
  auto subsub = [&](Index k) { return k <= 1 ? T(-1) : t.a(k); };
  // seeds are B_{-2}, B_{-1}, B_0
  auto run = [&](PolyKind kind, const T& m2, const T& m1, const T& z0) {
    std::vector<Polynomial<T>> w{Polynomial<T>::constant(m2), Polynomial<T>::constant(m1),
                                 Polynomial<T>::constant(z0)};
    for (Index k = 0; k < n; ++k) {
      auto i = static_cast<std::size_t>(k + 2);
      auto next = Polynomial<T>::linear(t.c(k)) * w[i] - sub(k) * w[i - 1] - subsub(k) * w[i - 2];
      w.push_back(std::move(next));
    }
    return PolySequence<T>{kind, std::vector<Polynomial<T>>(w.begin() + 2, w.end()), nu};
  };
  auto b1 = run(PolyKind::SECOND_KIND_B1, T(1), T(0), T(0));
  auto b2 = run(PolyKind::SECOND_KIND_B2, T(T(-1) - nu), T(1), T(0));
  PolySequence<T> small{PolyKind::SECOND_KIND_SMALL_b1, {}, nu};
  for (std::size_t i = 0; i < b1.polys.size(); ++i) small.polys.push_back(b2.polys[i] + nu * b1.polys[i]);
  return {std::move(b1), std::move(b2), std::move(small)};
}

/// B^{[k]}_{N+1} = det(x I - T^{[N,k]}) by expansion along the last row
/// (three nonzeros per row). k = N+1 gives the empty determinant 1.
template <Scalar T>
Polynomial<T> char_poly_truncation(const TetraHessenberg<T>& t, Index n, Index k) {
  if (k < 0 || k > n + 1)
    throw IndexOutOfRange("char_poly_truncation needs 0 <= k <= N+1 (k = " + std::to_string(k) +
                          ", N = " + std::to_string(n) + ")");
  // d2, d1, d0 = D(m-3), D(m-2), D(m-1) with D(k-1) = 1 and D(k-2) = D(k-3) = 0
  Polynomial<T> d2, d1, d0 = Polynomial<T>::constant(T(1));
  for (Index m = k; m <= n; ++m) {
    auto next = Polynomial<T>::linear(t.c(m)) * d0;
    if (m - 1 >= k) next -= t.b(m) * d1;
    if (m - 2 >= k) next -= t.a(m) * d2;
    d2 = std::move(d1);
    d1 = std::move(d0);
    d0 = std::move(next);
  }
  return d0;
}

/// det(x I - M) for a dense matrix, by exact evaluation at 0..n and Lagrange
/// interpolation. Independent of any banded structure; used to cross-check.
template <ExactScalar T>
Polynomial<T> char_poly_dense(const DenseMatrix<T>& m) {
  const auto n = m.size();
  std::vector<T> xs, ys;
  for (std::size_t p = 0; p <= n; ++p) {
    T x(static_cast<long>(p));
    DenseMatrix<T> shifted(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? x : T(0)) - m(i, j);
    xs.push_back(x);
    ys.push_back(shifted.determinant());
  }
  Polynomial<T> result;
  for (std::size_t i = 0; i <= n; ++i) {
    Polynomial<T> basis = Polynomial<T>::constant(T(1));
    T denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = basis * Polynomial<T>::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    result += basis * T(ys[i] / denom);
  }
  return result;
}

/// Horner evaluation of every member of the sequence.
template <Scalar T>
std::vector<T> eval_sequence_at(const PolySequence<T>& seq, const T& x) {
  std::vector<T> out;
  out.reserve(seq.polys.size());
  for (const auto& p : seq.polys) out.push_back(is_zero(x) ? p.constant_term() : p(x));
  return out;
}

}  // namespace tetra
