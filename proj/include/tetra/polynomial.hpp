#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tetra/scalar.hpp"

namespace tetra {

/// Dense polynomial in the monomial basis, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
template <Scalar T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  /// x - r
  static Polynomial linear(const T& r) { return Polynomial(std::vector<T>{T(-r), T(1)}); }

  Index degree() const { return static_cast<Index>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(Index k) const {
    return (k < 0 || k > degree()) ? T(0) : c_[static_cast<std::size_t>(k)];
  }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }
  T constant_term() const { return coeff(0); }

  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Multiplication by x.
  Polynomial shift_up() const {
    if (is_zero()) return {};
    std::vector<T> out(c_.size() + 1, T(0));
    std::copy(c_.begin(), c_.end(), out.begin() + 1);
    return Polynomial(std::move(out));
  }

  /// Drops the constant term; callers assert it is zero first.
  Polynomial shift_down() const {
    if (c_.size() <= 1) return {};
    return Polynomial(std::vector<T>(c_.begin() + 1, c_.end()));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const T& s) { return a *= T(T(1) / s); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Coefficientwise comparison through the scalar's equality (tolerant in float mode).
  friend bool approx_equal(const Polynomial& a, const Polynomial& b) {
    Index d = std::max(a.degree(), b.degree());
    for (Index k = 0; k <= d; ++k)
      if (!scalar_traits<T>::equal(a.coeff(k), b.coeff(k))) return false;
    return true;
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    for (const auto& v : c_) out.push_back(to_string(v));
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (Index k = degree(); k >= 0; --k) {
      const T& v = c_[static_cast<std::size_t>(k)];
      if (v == 0) continue;
      std::string term = to_string(v);
      if (!s.empty()) s += (term[0] == '-') ? " - " : " + ";
      else if (term[0] == '-') s += "-";
      if (term[0] == '-') term.erase(0, 1);
      bool unit = (term == "1");
      if (k == 0 || !unit) s += term;
      if (k >= 1) s += (k == 0 || unit ? "" : "*") + std::string("x");
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

}  // namespace tetra
