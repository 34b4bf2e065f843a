#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tetra/core.hpp"
#include "tetra/factorization.hpp"
#include "tetra/polynomials.hpp"

namespace tetra {

enum class DarbouxSide { HAT, HATHAT };

inline const char* to_string(DarbouxSide s) { return s == DarbouxSide::HAT ? "hat" : "hathat"; }

/// hat = L2 U L1, hathat = U L1 L2.
template <Scalar T>
struct DarbouxPair {
  TetraHessenberg<T> hat;
  TetraHessenberg<T> hathat;
  AlphaSequence<T> source_alphas;

  const TetraHessenberg<T>& side(DarbouxSide s) const { return s == DarbouxSide::HAT ? hat : hathat; }
};

/// Leading principal truncation of a transformed matrix minus the product of
/// the truncated factors. Only the last row differs:
///   hat:    (N,N) by alpha_{3N+2}
///   hathat: (N,N) by alpha_{3N+2}+alpha_{3N+3}, (N,N-1) by alpha_{3N+2} alpha_{3N}
template <Scalar T>
struct TruncationDiagnostic {
  Index n = 0;
  DarbouxSide side = DarbouxSide::HAT;
  DenseMatrix<T> difference;
  DenseMatrix<T> expected;
  bool matches_expected = false;
};

template <Scalar T>
TruncationDiagnostic<T> truncation_diagnostic(const DarbouxPair<T>& pair, Index n, DarbouxSide side) {
  const auto& al = pair.source_alphas;
  auto f = dense_factors(al, n);
  auto product = side == DarbouxSide::HAT ? f.l2 * f.u * f.l1 : f.u * f.l1 * f.l2;
  TruncationDiagnostic<T> d{n, side, leading_principal(pair.side(side), n) - product,
                            DenseMatrix<T>(static_cast<std::size_t>(n + 1)), false};
  auto last = static_cast<std::size_t>(n);
  if (side == DarbouxSide::HAT) {
    d.expected(last, last) = al(3 * n + 2);
  } else {
    d.expected(last, last) = al(3 * n + 2) + al(3 * n + 3);
    if (n >= 1) d.expected(last, last - 1) = al(3 * n + 2) * al(3 * n);
  }
  d.matches_expected = d.difference == d.expected;
  return d;
}

/// Both Darboux transforms from the closed-form band products. For explicit
/// alphas the bands are cross-checked against dense factor products.
template <Scalar T>
DarbouxPair<T> darboux_transforms(const AlphaSequence<T>& alphas) {
  DarbouxPair<T> pair{detail::tetra_from_alphas_shifted(alphas, 1), detail::tetra_from_alphas_shifted(alphas, 2),
                      alphas};
  if constexpr (scalar_traits<T>::exact) {
    if (auto len = alphas.size()) {
      // the products need alpha_{3N+3}
      Index n = std::min<Index>((*len - 3) / 3, 6);
      if (n >= 1) {
        for (auto side : {DarbouxSide::HAT, DarbouxSide::HATHAT}) {
          auto last = pair.side(side).last_row();
          Index m = last ? std::min(n, *last) : n;
          if (m >= 1 && !truncation_diagnostic(pair, m, side).matches_expected)
            throw ConsistencyViolation(m, std::string(to_string(side)) + " bands disagree with the factor product");
        }
      }
    }
  }
  return pair;
}

namespace detail {

template <ExactScalar T>
Polynomial<T> divide_by_x(const Polynomial<T>& p, const char* sequence, Index n) {
  if (!is_zero(p.constant_term())) throw InexactDivision(sequence, n, to_string(p.constant_term()));
  return p.shift_down();
}

template <Scalar T>
const Polynomial<T>& at(const PolySequence<T>& s, Index n) {
  static const Polynomial<T> zero;
  return n < 0 ? zero : s[n];
}

template <Scalar T>
T value_at_zero(const PolySequence<T>& s, Index n) {
  return n < 0 ? T(0) : s[n].constant_term();
}

template <Scalar T>
T forced_nu(const AlphaSequence<T>& al) {
  if (is_zero(al(2))) throw ZeroAlphaTwo();
  return T(T(-1) / al(2));
}

// x * tildeB_n and x * tildetildeB_n (undivided).
template <Scalar T>
Polynomial<T> hat_b(const PolySequence<T>& b, const AlphaSequence<T>& al, Index n) {
  return b[n + 1] + (al(3 * n + 1) + al(3 * n)) * b[n] + (al(3 * n) * al(3 * n - 2)) * at(b, n - 1);
}
template <Scalar T>
Polynomial<T> hathat_b(const PolySequence<T>& b, const AlphaSequence<T>& al, Index n) {
  return b[n + 1] + al(3 * n + 1) * b[n];
}
// A_n + alpha_{3n+2} A_{n+1}
template <Scalar T>
Polynomial<T> hat_a(const PolySequence<T>& a, const AlphaSequence<T>& al, Index n) {
  return a[n] + al(3 * n + 2) * a[n + 1];
}
// A_n + (alpha_{3n+2}+alpha_{3n+3}) A_{n+1} + alpha_{3n+5} alpha_{3n+3} A_{n+2}
template <Scalar T>
Polynomial<T> hathat_a(const PolySequence<T>& a, const AlphaSequence<T>& al, Index n) {
  return a[n] + (al(3 * n + 2) + al(3 * n + 3)) * a[n + 1] + (al(3 * n + 5) * al(3 * n + 3)) * a[n + 2];
}

}  // namespace detail

/// tildeB_0..tildeB_N and tildetildeB_0..tildetildeB_N. The division by x is
/// checked; a nonzero remainder means the alphas do not factor T.
template <ExactScalar T>
std::pair<PolySequence<T>, PolySequence<T>> transformed_type2(const TetraHessenberg<T>& t, const AlphaSequence<T>& al,
                                                              Index n) {
  if (n < 0) throw IndexOutOfRange("transformed_type2 needs N >= 0");
  auto b = type2_sequence(t, n + 1);
  PolySequence<T> tb{PolyKind::TRANSFORMED_TYPE2, {}, std::nullopt}, ttb = tb;
  for (Index k = 0; k <= n; ++k) {
    tb.polys.push_back(detail::divide_by_x(detail::hat_b(b, al, k), "tildeB", k));
    ttb.polys.push_back(detail::divide_by_x(detail::hathat_b(b, al, k), "tildetildeB", k));
  }
  return {std::move(tb), std::move(ttb)};
}

/// Characteristic polynomial of the trailing truncation of a transformed matrix,
/// B^{[k]}_{N+1}, together with the transformed second kind combinations
/// B^{(1)}_{N+1} = B^{[1]}_{N+1} and B^{(2)}_{N+1} = B^{[2]}_{N+1} - nu B^{[1]}_{N+1}.
template <Scalar T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> transformed_char_polys(const DarbouxPair<T>& pair, Index n,
                                                                                Index k, const T& nu,
                                                                                DarbouxSide side = DarbouxSide::HAT) {
  if (k < 0 || k > n)
    throw IndexOutOfRange("transformed_char_polys needs 0 <= k <= N (k = " + std::to_string(k) +
                          ", N = " + std::to_string(n) + ")");
  if (is_zero(nu)) throw ZeroNu();
  const auto& t = pair.side(side);
  auto trailing = [&](Index j) { return j <= n + 1 ? char_poly_truncation(t, n, j) : Polynomial<T>(); };
  auto b1 = trailing(1);
  return {char_poly_truncation(t, n, k), b1, trailing(2) - nu * b1};
}

/// Transformed type I sequences with nu = -1/alpha_2, n = 0..N. The hat* members
/// are the undivided brackets (the tilde ones times x).
template <Scalar T>
struct TransformedPolys {
  PolySequence<T> tildeB, tildetildeB;
  PolySequence<T> hatA1, tildeA2, tildetildeA1, tildetildeA2;
  PolySequence<T> hatA2, hathatA1, hathatA2;
  T nu;
};

template <ExactScalar T>
TransformedPolys<T> transformed_type1(const TetraHessenberg<T>& t, const AlphaSequence<T>& al, Index n) {
  if (n < 0) throw IndexOutOfRange("transformed_type1 needs N >= 0");
  const T nu = detail::forced_nu(al);
  auto [a1, a2] = type1_sequences(t, n + 2, nu);
  auto [tb, ttb] = transformed_type2(t, al, n);
  auto seq = [&](std::optional<T> v = std::nullopt) { return PolySequence<T>{PolyKind::TRANSFORMED_TYPE1, {}, v}; };
  TransformedPolys<T> r{std::move(tb), std::move(ttb), seq(nu), seq(nu), seq(nu), seq(nu), seq(nu), seq(nu), seq(nu), nu};
  for (Index k = 0; k <= n; ++k) {
    r.hatA1.polys.push_back(detail::hat_a(a2, al, k));
    r.hatA2.polys.push_back(detail::hat_a(a1, al, k));
    r.hathatA1.polys.push_back(detail::hathat_a(a1, al, k));
    r.hathatA2.polys.push_back(detail::hathat_a(a2, al, k));
    r.tildeA2.polys.push_back(detail::divide_by_x(r.hatA2.polys.back(), "tildeA2", k));
    r.tildetildeA1.polys.push_back(detail::divide_by_x(r.hathatA1.polys.back(), "tildetildeA1", k));
    r.tildetildeA2.polys.push_back(detail::divide_by_x(r.hathatA2.polys.back(), "tildetildeA2", k));
  }
  return r;
}

template <Scalar T>
struct AlphaReconstruction {
  AlphaSequence<T> alphas;  // alpha_1..alpha_{3N+1}
  Positivity positivity;
};

/// alpha_1..alpha_{3N+1} from the values at the origin of B_n, A^{(1)}_n and
/// A^{(2)}_n, with nu = -1/alpha_2.
template <Scalar T>
AlphaReconstruction<T> alphas_from_polynomials(const TetraHessenberg<T>& t, Index n, const T& alpha2) {
  if (n < 0) throw IndexOutOfRange("alphas_from_polynomials needs N >= 0");
  if (is_zero(alpha2)) throw ZeroAlphaTwo();
  const T nu = T(-1) / alpha2;
  auto b0 = eval_sequence_at(type2_sequence(t, n + 1), T(0));
  auto [s1, s2] = type1_sequences(t, n + 1, nu);
  auto a1 = eval_sequence_at(s1, T(0)), a2 = eval_sequence_at(s2, T(0));
  auto v = [](const std::vector<T>& s, Index i) { return s[static_cast<std::size_t>(i)]; };

  std::vector<T> alpha(static_cast<std::size_t>(3 * n + 1));
  auto set = [&](Index j, T value) { alpha[static_cast<std::size_t>(j - 1)] = std::move(value); };
  for (Index k = 0; k <= n; ++k) {
    if (is_zero(v(b0, k))) throw ZeroAtOrigin(k, "B");
    set(3 * k + 1, -v(b0, k + 1) / v(b0, k));
  }
  for (Index k = 0; k + 1 <= n; ++k) {
    if (is_zero(v(a1, k + 1))) throw ZeroAtOrigin(k + 1, "A1");
    set(3 * k + 2, -v(a1, k) / v(a1, k + 1));
    T det = v(a1, k + 1) * v(a2, k + 2) - v(a1, k + 2) * v(a2, k + 1);
    if (is_zero(det)) throw SingularQuasiDetSystem(k);
    if (is_zero(v(a1, k + 2))) throw ZeroAtOrigin(k + 2, "A1");
    T num = v(a1, k) * v(a2, k + 1) - v(a1, k + 1) * v(a2, k);
    set(3 * k + 3, -(num / det) * (v(a1, k + 2) / v(a1, k + 1)));
  }
  AlphaSequence<T> out(std::move(alpha));
  auto pos = out.classify(3 * n + 1);
  return {std::move(out), pos};
}

enum class ChristoffelIdentity { TILDE_B, TILDETILDE_B, HAT_A1, TILDE_A2, TILDETILDE_A1, TILDETILDE_A2 };

inline const char* to_string(ChristoffelIdentity i) {
  switch (i) {
    case ChristoffelIdentity::TILDE_B: return "tildeB";
    case ChristoffelIdentity::TILDETILDE_B: return "tildetildeB";
    case ChristoffelIdentity::HAT_A1: return "hatA1";
    case ChristoffelIdentity::TILDE_A2: return "tildeA2";
    case ChristoffelIdentity::TILDETILDE_A1: return "tildetildeA1";
    case ChristoffelIdentity::TILDETILDE_A2: return "tildetildeA2";
  }
  return "?";
}

struct ChristoffelReport {
  Index n = 0;
  std::size_t identities_checked = 0;
};

/// Checks that the Darboux transformed sequences built from the alphas coincide
/// with the Christoffel formulas built from values at the origin, for n = 0..N.
/// Identities are checked one at a time over all n; the first failure throws.
template <ExactScalar T>
ChristoffelReport verify_christoffel(const TetraHessenberg<T>& t, const AlphaSequence<T>& al, Index n) {
  if (n < 0) throw IndexOutOfRange("verify_christoffel needs N >= 0");
  if (is_zero(al(2))) throw ZeroAlphaTwo();
  if (al.classify(3 * n + 5) != Positivity::PBF)
    throw PreconditionViolation("Christoffel verification needs a positive bidiagonal factorization");
  const T nu = detail::forced_nu(al);
  auto b = type2_sequence(t, n + 1);
  auto [a1, a2] = type1_sequences(t, n + 2, nu);
  auto z = [](const PolySequence<T>& s, Index k) { return detail::value_at_zero(s, k); };
  auto nonzero = [](const T& v, Index k, const char* which) {
    if (is_zero(v)) throw ZeroAtOrigin(k, which);
    return v;
  };

  ChristoffelReport report{n, 0};
  auto check = [&](ChristoffelIdentity id, Index k, const Polynomial<T>& darboux, const Polynomial<T>& christoffel) {
    auto residual = darboux - christoffel;
    if (!residual.is_zero()) throw IdentityViolation(to_string(id), k, residual.str());
    if (!is_zero(christoffel.constant_term()))
      throw IdentityViolation(to_string(id), k, "constant term " + to_string(christoffel.constant_term()));
    ++report.identities_checked;
  };

  for (Index k = 0; k <= n; ++k) {
    T r = z(a1, k - 1) / nonzero(z(a1, k), k, "A1") + t.c(k);
    T s = -(z(a1, k + 1) / z(a1, k)) * t.a_or_zero(k + 1);
    check(ChristoffelIdentity::TILDE_B, k, detail::hat_b(b, al, k), b[k + 1] + r * b[k] + s * detail::at(b, k - 1));
  }
  for (Index k = 0; k <= n; ++k) {
    T r = -z(b, k + 1) / nonzero(z(b, k), k, "B");
    check(ChristoffelIdentity::TILDETILDE_B, k, detail::hathat_b(b, al, k), b[k + 1] + r * b[k]);
  }
  for (Index k = 0; k <= n; ++k) {
    T r = -z(a1, k) / nonzero(z(a1, k + 1), k + 1, "A1");
    auto hat = a2[k] + r * a2[k + 1];
    // hatA1 carries no division by x
    auto residual = detail::hat_a(a2, al, k) - hat;
    if (!residual.is_zero()) throw IdentityViolation(to_string(ChristoffelIdentity::HAT_A1), k, residual.str());
    ++report.identities_checked;
  }
  for (Index k = 0; k <= n; ++k) {
    T r = -z(a1, k) / nonzero(z(a1, k + 1), k + 1, "A1");
    check(ChristoffelIdentity::TILDE_A2, k, detail::hat_a(a1, al, k), a1[k] + r * a1[k + 1]);
  }
  // u K^{-1} with u = (A1_k(0), A2_k(0)) and K = [[A1_{k+1}(0), A2_{k+1}(0)], [A1_{k+2}(0), A2_{k+2}(0)]]
  auto weights = [&](Index k) {
    T k11 = z(a1, k + 1), k12 = z(a2, k + 1), k21 = z(a1, k + 2), k22 = z(a2, k + 2);
    T det = k11 * k22 - k12 * k21;
    if (is_zero(det)) throw SingularQuasiDetSystem(k);
    T u1 = z(a1, k), u2 = z(a2, k);
    return std::array<T, 2>{(u1 * k22 - u2 * k21) / det, (u2 * k11 - u1 * k12) / det};
  };
  for (auto [id, seq] : {std::pair{ChristoffelIdentity::TILDETILDE_A1, &a1}, std::pair{ChristoffelIdentity::TILDETILDE_A2, &a2}}) {
    for (Index k = 0; k <= n; ++k) {
      auto w = weights(k);
      const auto& s = *seq;
      check(id, k, detail::hathat_a(s, al, k), s[k] - w[0] * s[k + 1] - w[1] * s[k + 2]);
    }
  }
  return report;
}

/// The twelve 2x2 determinants pairing B, hatB, hathatB with their second kind
/// companions, in display order.
inline constexpr std::size_t kAkvDeterminants = 12;

inline const char* akv_label(std::size_t id) {
  static const char* labels[kAkvDeterminants] = {
      "|hatB_n hatB1_n ; B_n B1_n|",
      "|hatB_n hatB2_n ; B_n B2_n|",
      "|hathatB_n hathatB1_n ; B_n B1_n|",
      "|hathatB_n hathatB2_n ; B_n B2_n|",
      "|hathatB_n hathatB1_n ; hatB_n hatB1_n|",
      "|hathatB_n hathatB2_n ; hatB_n hatB2_n|",
      "|B_{n+1} B1_{n+1} ; hatB_n hatB1_n|",
      "|B_{n+1} B2_{n+1} ; hatB_n hatB2_n|",
      "|B_{n+1} B1_{n+1} ; hathatB_n hathatB1_n|",
      "|B_{n+1} B2_{n+1} ; hathatB_n hathatB2_n|",
      "|hatB_{n+1} hatB1_{n+1} ; hathatB_n hathatB1_n|",
      "|hatB_{n+1} hatB2_{n+1} ; hathatB_n hathatB2_n|"};
  return id < kAkvDeterminants ? labels[id] : "?";
}

/// The B, B^{(1)}, B^{(2)} families at one x for the original, hat and hathat
/// levels, indices 0..N+1. The hatted families are x times the transformed ones.
template <ExactScalar T>
struct AkvFamilies {
  // level 0 = original, 1 = hat, 2 = hathat; column 0 = B, 1 = B^{(1)}, 2 = B^{(2)}
  std::array<std::array<std::vector<T>, 3>, 3> values;
};

template <ExactScalar T>
AkvFamilies<T> akv_families(const TetraHessenberg<T>& t, const AlphaSequence<T>& al, Index n, const T& x) {
  const T nu = detail::forced_nu(al);
  const Index top = n + 1;
  auto pair = darboux_transforms(al);
  auto [tb, ttb] = transformed_type2(t, al, top);
  AkvFamilies<T> f;
  auto fill = [&](int level, const PolySequence<T>& b, const PolySequence<T>& s1, const PolySequence<T>& s2, bool times_x) {
    T scale = times_x ? x : T(1);
    for (Index k = 0; k <= top; ++k) {
      f.values[level][0].push_back(scale * b[k](x));
      f.values[level][1].push_back(scale * s1[k](x));
      f.values[level][2].push_back(scale * s2[k](x));
    }
  };
  {
    auto [s1, s2, small] = second_kind_sequences(t, top, nu);
    fill(0, type2_sequence(t, top), s1, s2, false);
  }
  {
    auto [s1, s2, small] = second_kind_sequences(pair.hat, top, nu);
    fill(1, tb, s1, s2, true);
  }
  {
    auto [s1, s2, small] = second_kind_sequences(pair.hathat, top, nu);
    fill(2, ttb, s1, s2, true);
  }
  return f;
}

/// Value of determinant `id` at index n.
template <ExactScalar T>
T akv_determinant(const AkvFamilies<T>& f, std::size_t id, Index n) {
  struct Spec {
    int top_level, bottom_level, column, shift;
  };
  static constexpr Spec specs[kAkvDeterminants] = {{1, 0, 1, 0}, {1, 0, 2, 0}, {2, 0, 1, 0}, {2, 0, 2, 0},
                                                   {2, 1, 1, 0}, {2, 1, 2, 0}, {0, 1, 1, 1}, {0, 1, 2, 1},
                                                   {0, 2, 1, 1}, {0, 2, 2, 1}, {1, 2, 1, 1}, {1, 2, 2, 1}};
  const auto& s = specs[id];
  auto i = static_cast<std::size_t>(n + s.shift), j = static_cast<std::size_t>(n);
  const auto& top = f.values[s.top_level];
  const auto& bot = f.values[s.bottom_level];
  return top[0][i] * bot[s.column][j] - top[s.column][i] * bot[0][j];
}

template <Scalar T>
struct AkvViolation {
  std::size_t determinant;
  Index n;
  T x;
  T value;
};

template <Scalar T>
struct AkvReport {
  Index n = 0;
  std::vector<T> xs;
  std::optional<T> max_value;
  std::vector<AkvViolation<T>> violations;
  bool passed() const { return violations.empty(); }
};

/// Evaluates the twelve determinants for n = 0..N at every sample and records
/// each value that is positive.
template <ExactScalar T>
AkvReport<T> akv_evaluate(const TetraHessenberg<T>& t, const AlphaSequence<T>& al, Index n, const std::vector<T>& xs) {
  if (n < 0) throw IndexOutOfRange("AKV checks need N >= 0");
  for (const auto& x : xs)
    if (sign_of(x) < 0) throw PreconditionViolation("AKV sample points must be nonnegative, got " + to_string(x));
  AkvReport<T> r{n, xs, std::nullopt, {}};
  for (const auto& x : xs) {
    auto f = akv_families(t, al, n, x);
    for (std::size_t id = 0; id < kAkvDeterminants; ++id)
      for (Index k = 0; k <= n; ++k) {
        T v = akv_determinant(f, id, k);
        if (!r.max_value || v > *r.max_value) r.max_value = v;
        if (sign_of(v) > 0) r.violations.push_back({id, k, x, v});
      }
  }
  return r;
}

/// As akv_evaluate, but the first positive determinant throws SignViolation.
template <ExactScalar T>
AkvReport<T> akv_sign_checks(const TetraHessenberg<T>& t, const AlphaSequence<T>& al, Index n, const std::vector<T>& xs) {
  auto r = akv_evaluate(t, al, n, xs);
  if (!r.violations.empty()) {
    const auto& v = r.violations.front();
    throw SignViolation(static_cast<int>(v.determinant), v.n, to_string(v.x), to_string(v.value));
  }
  return r;
}

}  // namespace tetra
