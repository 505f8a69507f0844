#pragma once

// Exact scalar types shared by every module. Nothing in the core touches
// floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace flagcohom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A vector in the ambient coordinate space of a root system.
using Vec = std::vector<Rational>;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

/// "p/q" with q > 0, always including the denominator ("3/1").
inline std::string to_fraction_string(const Rational& r)
{
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// "p" for integers, "p/q" otherwise. Used in human-readable output.
inline std::string to_display_string(const Rational& r)
{
  if (is_integer(r)) return numerator_of(r).str();
  return to_fraction_string(r);
}

inline Rational dot(const Vec& u, const Vec& v)
{
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline Vec operator+(Vec u, const Vec& v)
{
  for (std::size_t i = 0; i < u.size(); ++i) u[i] += v[i];
  return u;
}

inline Vec operator-(Vec u, const Vec& v)
{
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= v[i];
  return u;
}

inline Vec operator-(Vec u)
{
  for (auto& x : u) x = -x;
  return u;
}

inline Vec operator*(const Rational& s, Vec u)
{
  for (auto& x : u) x *= s;
  return u;
}

inline bool is_zero(const Vec& v)
{
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Solve the square system `a * x = b` exactly. Returns false if `a` is singular.
inline bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                        std::vector<Rational>& x)
{
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

} // namespace flagcohom
