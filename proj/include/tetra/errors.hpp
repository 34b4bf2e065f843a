#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tetra {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (literals, JSON payloads, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An explicit band array was asked for an entry past its end.
class BandExhausted : public Error {
 public:
  BandExhausted(const std::string& band, std::ptrdiff_t index, std::ptrdiff_t last)
      : Error("band '" + band + "' exhausted: index " + std::to_string(index) +
              " requested, last available is " + std::to_string(last)),
        index_(index) {}
  std::ptrdiff_t index() const { return index_; }

 private:
  std::ptrdiff_t index_;
};

class NonPositiveSubSubDiagonal : public Error {
 public:
  explicit NonPositiveSubSubDiagonal(std::ptrdiff_t n, const std::string& value = "")
      : Error("a_" + std::to_string(n) + " must be positive" +
              (value.empty() ? std::string() : " (got " + value + ")")),
        n_(n) {}
  std::ptrdiff_t n() const { return n_; }

 private:
  std::ptrdiff_t n_;
};

/// delta^{[n]} vanished: the LU factorization of the truncation does not exist.
class SingularLeadingMinor : public Error {
 public:
  explicit SingularLeadingMinor(std::ptrdiff_t n)
      : Error("leading principal minor delta[" + std::to_string(n) + "] is zero"), n_(n) {}
  std::ptrdiff_t n() const { return n_; }

 private:
  std::ptrdiff_t n_;
};

/// alpha_{3n} = 0, so alpha_{3n+2} cannot be solved for; the chosen alpha_2 is inadmissible.
class ZeroAlpha3n : public Error {
 public:
  explicit ZeroAlpha3n(std::ptrdiff_t n)
      : Error("alpha_" + std::to_string(3 * n) + " is zero (n = " + std::to_string(n) +
              "); the supplied alpha_2 is inadmissible"),
        n_(n) {}
  std::ptrdiff_t n() const { return n_; }

 private:
  std::ptrdiff_t n_;
};

class ZeroNu : public Error {
 public:
  ZeroNu() : Error("nu must be nonzero") {}
};

class ZeroAlphaTwo : public Error {
 public:
  ZeroAlphaTwo() : Error("alpha_2 is zero; the type I Darboux transforms need 1 + nu*alpha_2 = 0") {}
};

/// A polynomial expected to be divisible by x has a nonzero constant term.
class InexactDivision : public Error {
 public:
  InexactDivision(const std::string& sequence, std::ptrdiff_t n, const std::string& constant)
      : Error("division by x is inexact for " + sequence + "[" + std::to_string(n) +
              "]: constant term " + constant),
        sequence_(sequence),
        n_(n) {}
  const std::string& sequence() const { return sequence_; }
  std::ptrdiff_t n() const { return n_; }

 private:
  std::string sequence_;
  std::ptrdiff_t n_;
};

class DimensionCapExceeded : public Error {
 public:
  DimensionCapExceeded(std::size_t dim, std::size_t cap)
      : Error("matrix dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(cap)),
        dim_(dim),
        cap_(cap) {}
  std::size_t dim() const { return dim_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t dim_;
  std::size_t cap_;
};

/// 0 is a root of B_n or A^{(1)}_n, so a ratio of values at the origin is undefined.
class ZeroAtOrigin : public Error {
 public:
  ZeroAtOrigin(std::ptrdiff_t n, const std::string& which)
      : Error(which + "_" + std::to_string(n) + "(0) = 0"), n_(n), which_(which) {}
  std::ptrdiff_t n() const { return n_; }
  const std::string& which() const { return which_; }

 private:
  std::ptrdiff_t n_;
  std::string which_;
};

class SingularQuasiDetSystem : public Error {
 public:
  explicit SingularQuasiDetSystem(std::ptrdiff_t n)
      : Error("2x2 system of type I values at the origin is singular at n = " + std::to_string(n)),
        n_(n) {}
  std::ptrdiff_t n() const { return n_; }

 private:
  std::ptrdiff_t n_;
};

class IdentityViolation : public Error {
 public:
  IdentityViolation(const std::string& identity, std::ptrdiff_t n, const std::string& residual)
      : Error("identity '" + identity + "' fails at n = " + std::to_string(n) +
              ", residual " + residual),
        identity_(identity),
        n_(n),
        residual_(residual) {}
  const std::string& identity() const { return identity_; }
  std::ptrdiff_t n() const { return n_; }
  const std::string& residual() const { return residual_; }

 private:
  std::string identity_;
  std::ptrdiff_t n_;
  std::string residual_;
};

class SignViolation : public Error {
 public:
  SignViolation(int determinant, std::ptrdiff_t n, const std::string& x, const std::string& value)
      : Error("determinant #" + std::to_string(determinant) + " is positive at n = " +
              std::to_string(n) + ", x = " + x + " (value " + value + ")"),
        determinant_(determinant),
        n_(n),
        x_(x) {}
  int determinant() const { return determinant_; }
  std::ptrdiff_t n() const { return n_; }
  const std::string& x() const { return x_; }

 private:
  int determinant_;
  std::ptrdiff_t n_;
  std::string x_;
};

class OutsideNaturalRegion : public Error {
 public:
  using Error::Error;
};

/// A closed-form denominator vanishes at these parameters.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class PredictionMismatch : public Error {
 public:
  PredictionMismatch(std::ptrdiff_t j, const std::string& variant, const std::string& detail)
      : Error("sign of alpha_" + std::to_string(j) + " (" + variant + ") contradicts the region prediction: " +
              detail),
        j_(j),
        variant_(variant) {}
  std::ptrdiff_t j() const { return j_; }
  const std::string& variant() const { return variant_; }

 private:
  std::ptrdiff_t j_;
  std::string variant_;
};

class ConsistencyViolation : public Error {
 public:
  ConsistencyViolation(std::ptrdiff_t n, const std::string& what)
      : Error("inconsistency at n = " + std::to_string(n) + ": " + what), n_(n) {}
  std::ptrdiff_t n() const { return n_; }

 private:
  std::ptrdiff_t n_;
};

}  // namespace tetra
