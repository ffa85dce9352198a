#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dga {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct DgaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : DgaError { using DgaError::DgaError; };
struct PairingError : DgaError { using DgaError::DgaError; };
struct DegreeError : DgaError { using DgaError::DgaError; };
struct ValidationError : DgaError { using DgaError::DgaError; };
struct StructureError : DgaError { using DgaError::DgaError; };
struct ConsistencyError : DgaError { using DgaError::DgaError; };
struct ParseError : DgaError { using DgaError::DgaError; };
struct DataError : DgaError { using DgaError::DgaError; };

/// Exact scalar in Q(i). boost::cpp_rational keeps components in lowest
/// terms with positive denominators, so equality is structural.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}                    // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)) {}     // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long n, long d) : re(Rational(n, d)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational inverse() const {
    if (is_zero()) throw DgaError("division by zero in Q(i)");
    Rational n = re * re + im * im;
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const;
};

std::string rational_str(const Rational& r);

}  // namespace dga
