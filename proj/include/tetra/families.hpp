#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "tetra/core.hpp"
#include "tetra/factorization.hpp"

namespace tetra {

/// Jacobi-Pineiro weights x^alpha (1-x)^gamma and x^beta (1-x)^gamma on [0, 1].
template <Scalar T>
struct JPParams {
  T alpha, beta, gamma;
};

enum class Region { R1, R2, R3, R4, OUTSIDE };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    case Region::OUTSIDE: return "OUTSIDE";
  }
  return "?";
}

enum class JPVariant { FIRST, AKV };

inline const char* to_string(JPVariant v) { return v == JPVariant::FIRST ? "first" : "akv"; }

namespace detail {

template <Scalar T>
bool is_integer(const T& v) {
  if constexpr (scalar_traits<T>::exact) {
    return boost::multiprecision::denominator(v) == 1;
  } else {
    return approx_equal(v, std::round(v));
  }
}

}  // namespace detail

/// R1: alpha-beta > 1, R2: 0 < alpha-beta < 1, R3: -1 < alpha-beta < 0,
/// R4: alpha-beta < -1. Points off the natural region (alpha, beta > -1,
/// alpha-beta not an integer) are OUTSIDE.
template <Scalar T>
Region jp_region(const T& alpha, const T& beta) {
  if (sign_of(T(alpha + 1)) <= 0 || sign_of(T(beta + 1)) <= 0) return Region::OUTSIDE;
  T d = alpha - beta;
  if (detail::is_integer(d)) return Region::OUTSIDE;
  if (sign_of(T(d - 1)) > 0) return Region::R1;
  if (sign_of(d) > 0) return Region::R2;
  if (sign_of(T(d + 1)) > 0) return Region::R3;
  return Region::R4;
}

template <Scalar T>
Region jp_region(const JPParams<T>& p) {
  return jp_region(p.alpha, p.beta);
}

template <Scalar T>
void require_natural_region(const JPParams<T>& p) {
  if (jp_region(p) == Region::OUTSIDE)
    throw OutsideNaturalRegion("(alpha, beta) = (" + to_string(p.alpha) + ", " + to_string(p.beta) +
                               ") is outside the natural region");
  if (sign_of(T(p.gamma + 1)) <= 0) throw OutsideNaturalRegion("gamma must exceed -1, got " + to_string(p.gamma));
}

/// alpha_j (or the AKV alpha~_j) in closed form, j >= 1. No region check.
template <Scalar T>
T jp_alpha(const JPParams<T>& p, JPVariant variant, Index j) {
  if (j < 1) throw IndexOutOfRange("JP alphas start at index 1");
  const Index n = (j - 1) / 6, r = (j - 1) % 6 + 1;
  const T a = p.alpha, b = p.beta, g = p.gamma;
  const T n1(static_cast<long>(n));
  auto lin = [&](long k, const T& extra) { return T(T(k) * n1 + extra); };
  auto frac = [&](std::array<T, 3> num, std::array<T, 3> den) {
    T d = den[0] * den[1] * den[2];
    if (is_zero(d))
      throw DegenerateParameters("closed form for alpha_" + std::to_string(j) + " has a zero denominator");
    return T(num[0] * num[1] * num[2] / d);
  };
  const bool akv = variant == JPVariant::AKV;
  switch (r) {
    case 1:
      return frac({lin(1, 1 + a), lin(2, 1 + a + g), lin(2, 1 + b + g)},
                  {lin(3, 1 + a + g), lin(3, 2 + a + g), lin(3, 1 + b + g)});
    case 2:
      if (akv)
        return frac({lin(1, b - a), lin(2, 1 + g), lin(2, 1 + b + g)},
                    {lin(3, 2 + a + g), lin(3, 1 + b + g), lin(3, 2 + b + g)});
      return frac({n1, lin(2, 1 + g), lin(2, 1 + a + g)},
                  {lin(3, 2 + a + g), lin(3, 1 + b + g), lin(3, 2 + b + g)});
    case 3:
      if (akv)
        return frac({lin(1, 1 + a - b), lin(2, 1 + g), lin(2, 2 + a + g)},
                    {lin(3, 2 + a + g), lin(3, 3 + a + g), lin(3, 2 + b + g)});
      return frac({lin(1, T(1)), lin(2, 1 + g), lin(2, 2 + b + g)},
                  {lin(3, 2 + a + g), lin(3, 3 + a + g), lin(3, 2 + b + g)});
    case 4:
      return frac({lin(1, 1 + b), lin(2, 2 + a + g), lin(2, 2 + b + g)},
                  {lin(3, 3 + a + g), lin(3, 2 + b + g), lin(3, 3 + b + g)});
    case 5:
      if (akv)
        return frac({lin(1, T(1)), lin(2, 2 + g), lin(2, 2 + b + g)},
                    {lin(3, 3 + a + g), lin(3, 4 + a + g), lin(3, 3 + b + g)});
      return frac({lin(1, 1 + a - b), lin(2, 2 + g), lin(2, 2 + a + g)},
                  {lin(3, 3 + a + g), lin(3, 4 + a + g), lin(3, 3 + b + g)});
    default:
      if (akv)
        return frac({lin(1, T(1)), lin(2, 2 + g), lin(2, 3 + a + g)},
                    {lin(3, 4 + a + g), lin(3, 3 + b + g), lin(3, 4 + b + g)});
      return frac({lin(1, 1 - a + b), lin(2, 2 + g), lin(2, 3 + b + g)},
                  {lin(3, 4 + a + g), lin(3, 3 + b + g), lin(3, 4 + b + g)});
  }
}

/// The first `count` alphas of either factorization of the JP recursion matrix.
template <Scalar T>
AlphaSequence<T> jp_alphas(const JPParams<T>& p, JPVariant variant, Index count) {
  require_natural_region(p);
  if (count < 1) throw PreconditionViolation("count must be at least 1");
  std::vector<T> out;
  for (Index j = 1; j <= count; ++j) out.push_back(jp_alpha(p, variant, j));
  return AlphaSequence<T>(std::move(out));
}

/// Unbounded generator-backed version.
template <Scalar T>
AlphaSequence<T> jp_generator(const JPParams<T>& p, JPVariant variant) {
  require_natural_region(p);
  return AlphaSequence<T>(typename Band<T>::Generator([p, variant](Index j) { return jp_alpha(p, variant, j); }));
}

/// Sign of alpha_j predicted by the region lemma: the first set has alpha_2 = 0,
/// alpha_5 < 0 in R4 and alpha_6 < 0 in R1; the AKV set has alpha~_2 < 0 in
/// R1 and R2, alpha~_3 < 0 in R4 and alpha~_8 < 0 in R1; all others positive.
inline int jp_predicted_sign(JPVariant variant, Region region, Index j) {
  if (variant == JPVariant::FIRST) {
    if (j == 2) return 0;
    if (j == 5 && region == Region::R4) return -1;
    if (j == 6 && region == Region::R1) return -1;
    return 1;
  }
  if (j == 2 && (region == Region::R1 || region == Region::R2)) return -1;
  if (j == 3 && region == Region::R4) return -1;
  if (j == 8 && region == Region::R1) return -1;
  return 1;
}

struct JPSignRow {
  Index j;
  int observed;
  int predicted;
};

template <Scalar T>
struct JPSignReport {
  Region region = Region::OUTSIDE;
  std::vector<JPSignRow> first, akv;
  Positivity first_positivity = Positivity::INDEFINITE;
  Positivity akv_positivity = Positivity::INDEFINITE;
};

/// Signs of alpha_1..alpha_count for both variants against the region lemma.
/// The first disagreement (first set before AKV, then by index) throws.
template <Scalar T>
JPSignReport<T> jp_sign_report(const JPParams<T>& p, Index count) {
  require_natural_region(p);
  JPSignReport<T> r;
  r.region = jp_region(p);
  for (auto variant : {JPVariant::FIRST, JPVariant::AKV}) {
    auto al = jp_alphas(p, variant, count);
    auto& rows = variant == JPVariant::FIRST ? r.first : r.akv;
    for (Index j = 1; j <= count; ++j) {
      JPSignRow row{j, sign_of(al(j)), jp_predicted_sign(variant, r.region, j)};
      if (row.observed != row.predicted)
        throw PredictionMismatch(j, to_string(variant),
                                 "observed " + to_string(al(j)) + " in " + to_string(r.region) + ", predicted sign " +
                                     std::to_string(row.predicted));
      rows.push_back(row);
    }
    (variant == JPVariant::FIRST ? r.first_positivity : r.akv_positivity) = al.classify(count);
  }
  return r;
}

struct JPConsistencyReport {
  Index m_checked = 0;
  Index ell_checked = 0;
  Index rows_checked = 0;  // Hessenberg rows 0..rows_checked-1 compared
};

/// Both sequences must induce the same Gauss-Borel subdiagonals
/// m_n = alpha_{3n-1}+alpha_{3n}, ell_n = alpha_{3n-1} alpha_{3n-3} and the same
/// Hessenberg bands, using alpha_1..alpha_count.
template <Scalar T>
JPConsistencyReport jp_cross_consistency(const AlphaSequence<T>& x, const AlphaSequence<T>& y, Index count) {
  JPConsistencyReport r;
  for (Index n = 1; 3 * n <= count; ++n) {
    if (!approx_equal(induced_m(x, n), induced_m(y, n)))
      throw ConsistencyViolation(n, "m_" + std::to_string(n) + ": " + to_string(induced_m(x, n)) + " vs " +
                                        to_string(induced_m(y, n)));
    ++r.m_checked;
  }
  for (Index n = 2; 3 * n - 1 <= count; ++n) {
    if (!approx_equal(induced_ell(x, n), induced_ell(y, n)))
      throw ConsistencyViolation(n, "ell_" + std::to_string(n) + ": " + to_string(induced_ell(x, n)) + " vs " +
                                        to_string(induced_ell(y, n)));
    ++r.ell_checked;
  }
  // Compared through the band formulas rather than TetraHessenberg: outside the
  // strip the JP matrix has a negative a_n.
  for (Index n = 0; 3 * n + 1 <= count; ++n) {
    bool same = approx_equal(detail::band_c(x, n, 0), detail::band_c(y, n, 0)) &&
                (n < 1 || approx_equal(detail::band_b(x, n, 0), detail::band_b(y, n, 0))) &&
                (n < 2 || approx_equal(detail::band_a(x, n, 0), detail::band_a(y, n, 0)));
    if (!same) throw ConsistencyViolation(n, "Hessenberg row " + std::to_string(n));
    ++r.rows_checked;
  }
  return r;
}

template <Scalar T>
JPConsistencyReport jp_cross_consistency(const JPParams<T>& p, Index count) {
  return jp_cross_consistency(jp_alphas(p, JPVariant::FIRST, count), jp_alphas(p, JPVariant::AKV, count), count);
}

/// T^{[N]} of the JP recursion matrix as the product of the truncated factors
/// (exact, since the lower factors are triangular). Valid in every region,
/// including those where some a_n is negative.
template <Scalar T>
DenseMatrix<T> jp_truncation(const JPParams<T>& p, JPVariant variant, Index n) {
  auto f = dense_factors(jp_alphas(p, variant, 3 * n + 1), n);
  return f.l1 * f.l2 * f.u;
}

/// Fixed 16-point grid: alpha-beta in {3/2, 1/2, -1/2, -3/2}, two betas each,
/// gamma in {0, 1/2}. Every point lies in the natural region.
inline std::vector<JPParams<Rational>> jp_grid() {
  std::vector<JPParams<Rational>> grid;
  const std::array<std::pair<Rational, std::array<Rational, 2>>, 4> rows{{
      {Rational(3, 2), {Rational(0), Rational(1, 3)}},
      {Rational(1, 2), {Rational(0), Rational(1, 3)}},
      {Rational(-1, 2), {Rational(0), Rational(1, 3)}},
      {Rational(-3, 2), {Rational(1), Rational(5, 3)}},
  }};
  for (const auto& [d, betas] : rows)
    for (const auto& beta : betas)
      for (const auto& gamma : {Rational(0), Rational(1, 2)}) grid.push_back({Rational(beta + d), beta, gamma});
  return grid;
}

}  // namespace tetra
