#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "tetra/tetra.hpp"

namespace support {

using tetra::Rational;
using Q = Rational;

inline Q q(const char* s) { return tetra::parse_scalar<Q>(s); }

inline oracle::Mat to_oracle(const tetra::DenseMatrix<Q>& m) {
  oracle::Mat out = oracle::zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
  return out;
}

inline tetra::DenseMatrix<Q> from_oracle(const oracle::Mat& m) {
  tetra::DenseMatrix<Q> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline tetra::Polynomial<Q> poly(std::vector<Q> c) { return tetra::Polynomial<Q>(std::move(c)); }

inline bool same(const tetra::Polynomial<Q>& p, const oracle::Poly& o) { return p.coefficients() == oracle::trim(o); }

inline tetra::AlphaSequence<Q> alphas(const std::vector<Q>& v) { return tetra::AlphaSequence<Q>(v); }

inline tetra::AlphaSequence<Q> ones() {
  return tetra::AlphaSequence<Q>(tetra::Band<Q>::Generator([](tetra::Index) { return Q(1); }));
}

inline tetra::TetraHessenberg<Q> bands(const std::vector<Q>& a, const std::vector<Q>& b, const std::vector<Q>& c) {
  return tetra::tetra_from_bands<Q>(a, b, c);
}

inline tetra::TetraHessenberg<Q> t_sym() { return bands({Q(1)}, {Q(1), Q(1)}, {Q(2), Q(2), Q(2)}); }

inline tetra::TetraHessenberg<Q> t_one() { return tetra::tetra_from_alphas(ones()); }

inline tetra::DenseMatrix<Q> dense(std::initializer_list<std::initializer_list<long>> rows) {
  tetra::DenseMatrix<Q> m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Q(v);
    ++i;
  }
  return m;
}

}  // namespace support
