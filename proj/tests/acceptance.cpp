// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "oracle.hpp"
#include "tetra/tetra.hpp"

using namespace tetra;
using Q = Rational;

namespace {

struct BandCase {
  Index n;
  gen::Bands bands;
  TetraHessenberg<Q> t;
};

struct AlphaCase {
  std::vector<Q> raw;
  AlphaSequence<Q> alphas;
  TetraHessenberg<Q> t;
};

oracle::Mat dense_from_bands(const gen::Bands& b, Index n) {
  auto m = oracle::zeros(static_cast<std::size_t>(n + 1));
  for (Index i = 0; i <= n; ++i) {
    auto r = static_cast<std::size_t>(i);
    m[r][r] = b.c[r];
    if (i < n) m[r][r + 1] = 1;
    if (i >= 1) m[r][r - 1] = b.b[r - 1];
    if (i >= 2) m[r][r - 2] = b.a[r - 2];
  }
  return m;
}

oracle::Mat to_oracle(const DenseMatrix<Q>& m) {
  auto out = oracle::zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

DenseMatrix<Q> from_oracle(const oracle::Mat& m) {
  DenseMatrix<Q> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

oracle::Mat drop(const oracle::Mat& m, std::size_t k) {
  oracle::Mat out;
  for (std::size_t i = k; i < m.size(); ++i) out.emplace_back(m[i].begin() + static_cast<long>(k), m[i].end());
  return out;
}

bool same(const Polynomial<Q>& p, const oracle::Poly& o) { return p.coefficients() == oracle::trim(o); }

template <class Seq>
bool right_eigen(const Seq& s, const TetraHessenberg<Q>& t, Index n) {
  for (Index k = 0; k + 1 <= n; ++k) {
    auto rhs = s[k + 1] + t.c(k) * s[k];
    if (k >= 1) rhs += t.b(k) * s[k - 1];
    if (k >= 2) rhs += t.a(k) * s[k - 2];
    if (!(Polynomial<Q>::x() * s[k] == rhs)) return false;
  }
  return true;
}

int failures = 0;

void report(int id, const std::string& name, const std::function<bool(std::ostream&)>& check) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = check(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << ' ' << id << ' ' << name;
  if (!detail.str().empty()) std::cout << " (" << detail.str() << ')';
  std::cout << std::endl;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);

  std::vector<BandCase> band_corpus;
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<Index> pick(0, 10);
    Index n = pick(rng);
    auto b = gen::bands(rng, n + 1);
    band_corpus.push_back({n, b, tetra_from_bands<Q>(b.a, b.b, b.c)});
  }

  std::vector<AlphaCase> alpha_corpus;
  for (int i = 0; i < 50; ++i) {
    std::uniform_int_distribution<std::size_t> len(16, 31);
    auto raw = gen::pbf_alphas(rng, len(rng));
    AlphaSequence<Q> al(raw);
    alpha_corpus.push_back({raw, al, tetra_from_alphas(al)});
  }
  auto len = [](const AlphaCase& c) { return static_cast<Index>(c.raw.size()); };

  report(1, "characteristic polynomial identity", [&](std::ostream& d) {
    auto start = std::chrono::steady_clock::now();
    std::size_t bad = 0;
    for (const auto& c : band_corpus)
      if (!same(type2_sequence(c.t, c.n + 1)[c.n + 1], oracle::charpoly(dense_from_bands(c.bands, c.n)))) ++bad;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    d << band_corpus.size() << " matrices, " << bad << " mismatches, " << secs << " s";
    return bad == 0 && secs < 10.0;
  });

  report(2, "second kind identities", [&](std::ostream& d) {
    std::size_t checked = 0, bad = 0;
    for (Q nu : {Q(-1), Q(2), Q(-1, 3)})
      for (const auto& c : band_corpus) {
        auto [b1, b2, small] = second_kind_sequences(c.t, c.n + 1, nu);
        auto full = dense_from_bands(c.bands, c.n);
        Index n = c.n;
        bool ok = same(b1[n + 1], oracle::charpoly(drop(full, 1)));
        auto trailing2 = c.n >= 1 ? oracle::charpoly(drop(full, 2)) : oracle::Poly{};
        if (c.n >= 1) ok = ok && same(small[n + 1], trailing2);
        ok = ok && b2[n + 1] == small[n + 1] - nu * b1[n + 1];
        ++checked;
        if (!ok) ++bad;
      }
    d << checked << " cases, " << bad << " mismatches";
    return bad == 0;
  });

  report(3, "factorization round trip", [&](std::ostream& d) {
    std::size_t bad = 0;
    for (const auto& c : alpha_corpus) {
      Index n = (len(c) - 1) / 3;
      auto back = bidiagonal_factor(c.t, n, c.raw[1]);
      std::vector<Q> expect(c.raw.begin(), c.raw.begin() + 3 * n + 1);
      auto lu = gauss_borel(c.t, n);
      auto product = oracle::mul(to_oracle(lu.lower()), to_oracle(lu.upper()));
      if (back.first(3 * n + 1) != expect || product != oracle::factor_product(c.raw, static_cast<std::size_t>(n)))
        ++bad;
    }
    d << alpha_corpus.size() << " sequences, " << bad << " mismatches";
    return bad == 0;
  });

  report(4, "reconstruction from values at the origin", [&](std::ostream& d) {
    std::size_t bad = 0;
    for (const auto& c : alpha_corpus) {
      Index n = (len(c) - 2) / 3;
      auto r = alphas_from_polynomials(c.t, n, c.raw[1]);
      std::vector<Q> expect(c.raw.begin(), c.raw.begin() + 3 * n + 1);
      if (r.alphas.first(3 * n + 1) != expect || r.alphas(1) != c.t.c(0)) ++bad;
    }
    d << alpha_corpus.size() << " sequences, " << bad << " mismatches";
    return bad == 0;
  });

  report(5, "Darboux band formulas", [&](std::ostream& d) {
    std::size_t checked = 0, bad = 0;
    for (const auto& c : alpha_corpus) {
      auto pair = darboux_transforms(c.alphas);
      for (Index n = 1; n <= 8 && 3 * n + 3 <= len(c); ++n) {
        auto sz = static_cast<std::size_t>(n);
        auto hat = oracle::factor_product(c.raw, sz, 1);
        auto diff = to_oracle(leading_principal(pair.hat, n));
        for (std::size_t i = 0; i <= sz; ++i)
          for (std::size_t j = 0; j <= sz; ++j) diff[i][j] -= hat[i][j];
        auto expect = oracle::zeros(sz + 1);
        expect[sz][sz] = c.alphas(3 * n + 2);
        auto hh = oracle::factor_product(c.raw, sz, 2);
        auto diff2 = to_oracle(leading_principal(pair.hathat, n));
        for (std::size_t i = 0; i <= sz; ++i)
          for (std::size_t j = 0; j <= sz; ++j) diff2[i][j] -= hh[i][j];
        auto expect2 = oracle::zeros(sz + 1);
        expect2[sz][sz] = c.alphas(3 * n + 2) + c.alphas(3 * n + 3);
        expect2[sz][sz - 1] = c.alphas(3 * n + 2) * c.alphas(3 * n);
        ++checked;
        if (diff != expect || diff2 != expect2) ++bad;
      }
    }
    d << checked << " truncations, " << bad << " mismatches";
    return bad == 0 && checked > 0;
  });

  report(6, "Darboux eigen-relations and divisibility", [&](std::ostream& d) {
    std::size_t checked = 0, bad = 0;
    for (const auto& c : alpha_corpus) {
      auto pair = darboux_transforms(c.alphas);
      Index n = std::min<Index>(10, (len(c) - 1) / 3);
      auto b = type2_sequence(c.t, n + 1);
      const auto& al = c.alphas;
      bool ok = true;
      for (Index k = 0; k <= n; ++k) {
        auto hat = b[k + 1] + (al(3 * k + 1) + al(3 * k)) * b[k];
        if (k >= 1) hat += (al(3 * k) * al(3 * k - 2)) * b[k - 1];
        auto hathat = b[k + 1] + al(3 * k + 1) * b[k];
        ok = ok && hat.constant_term() == 0 && hathat.constant_term() == 0;
      }
      auto [tb, ttb] = transformed_type2(c.t, al, n);
      ok = ok && right_eigen(tb, pair.hat, n) && right_eigen(ttb, pair.hathat, n);
      ++checked;
      if (!ok) ++bad;
    }
    d << checked << " sequences, " << bad << " failures";
    return bad == 0;
  });

  report(7, "Christoffel correspondence", [&](std::ostream& d) {
    std::size_t identities = 0;
    for (const auto& c : alpha_corpus) {
      Index n = std::min<Index>(8, (len(c) - 5) / 3);
      identities += verify_christoffel(c.t, c.alphas, n).identities_checked;
    }
    auto jp = jp_generator(JPParams<Q>{Q(0), Q(1, 2), Q(0)}, JPVariant::AKV);
    identities += verify_christoffel(tetra_from_alphas(jp), jp, 8).identities_checked;
    d << identities << " polynomial identities";
    return true;
  });

  report(8, "sign inequalities of the vector convergents", [&](std::ostream& d) {
    const std::vector<Q> xs{Q(0), Q(1, 4), Q(1), Q(4), Q(10)};
    std::size_t violations = 0, cases = 0, failing_cases = 0;
    bool zero_at_origin = false;
    std::optional<AkvViolation<Q>> first;
    for (const auto& c : alpha_corpus) {
      Index n = std::min<Index>(8, (len(c) - 4) / 3);
      auto r = akv_evaluate(c.t, c.alphas, n, xs);
      ++cases;
      if (!r.passed()) ++failing_cases;
      violations += r.violations.size();
      if (!first && !r.violations.empty()) first = r.violations.front();
      auto f = akv_families(c.t, c.alphas, n, Q(0));
      for (std::size_t id = 0; id < kAkvDeterminants; ++id)
        if (akv_determinant(f, id, 0) == 0) zero_at_origin = true;
    }
    d << failing_cases << " of " << cases << " sequences have positive determinants, " << violations
      << " positive values";
    if (first) d << "; first: #" << first->determinant << " at n = " << first->n << ", x = " << to_string(first->x);
    d << "; zero at x = 0 " << (zero_at_origin ? "attained" : "not attained");
    return violations == 0 && zero_at_origin;
  });

  report(9, "Jacobi-Pineiro grid", [&](std::ostream& d) {
    auto grid = jp_grid();
    std::size_t bad = 0;
    for (const auto& p : grid) {
      auto region = jp_region(p);
      jp_cross_consistency(p, 24);
      auto s = jp_sign_report(p, 24);
      auto first = jp_alphas(p, JPVariant::FIRST, 24);
      auto akv = jp_alphas(p, JPVariant::AKV, 24);
      bool strip = region == Region::R2 || region == Region::R3;
      bool ok = true;
      if (strip) ok = ok && first(2) == 0 && s.first_positivity == Positivity::TN;
      if (region == Region::R4) ok = ok && first(5) < 0;
      if (region == Region::R1) ok = ok && first(6) < 0;
      if (region == Region::R1 || region == Region::R2) ok = ok && akv(2) < 0;
      if (region == Region::R3) ok = ok && akv.classify(24) == Positivity::PBF;
      auto gk = is_oscillatory(jp_truncation(p, JPVariant::FIRST, 4)).is_oscillatory_gk;
      ok = ok && gk == strip;
      if (!ok) ++bad;
    }
    d << grid.size() << " points, " << bad << " failures";
    return bad == 0 && grid.size() == 16;
  });

  report(10, "TN oracle agreement", [&](std::ostream& d) {
    std::vector<DenseMatrix<Q>> matrices;
    for (const auto& c : band_corpus)
      if (c.n <= 5) matrices.push_back(from_oracle(dense_from_bands(c.bands, c.n)));
    for (const auto& c : alpha_corpus) matrices.push_back(leading_principal(c.t, std::min<Index>(5, (len(c) - 1) / 3)));
    for (const auto& p : jp_grid()) matrices.push_back(jp_truncation(p, JPVariant::FIRST, 4));
    std::size_t bad = 0;
    for (const auto& m : matrices)
      if (is_oscillatory(m).is_oscillatory_gk != is_oscillatory_power_oracle(m)) ++bad;
    DenseMatrix<Q> sym{{Q(2), Q(1), Q(0)}, {Q(1), Q(2), Q(1)}, {Q(1), Q(1), Q(2)}};
    auto w = is_totally_nonnegative(sym).witness;
    bool witness = w && w->rows == std::vector<std::size_t>{1, 2} && w->cols == std::vector<std::size_t>{0, 1} &&
                   w->value == -1;
    d << matrices.size() << " matrices, " << bad << " disagreements, witness "
      << (witness ? "rows {2,3} x cols {1,2} = -1" : "wrong");
    return bad == 0 && witness;
  });

  return failures == 0 ? 0 : 1;
}
