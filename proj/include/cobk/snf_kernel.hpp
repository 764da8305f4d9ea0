#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "cobk/errors.hpp"

namespace cobk::detail {

// int64 with overflow detection; used where entries are known to stay small.
struct Checked64 {
  std::int64_t v = 0;

  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t x) : v(x) {}

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) fail(ErrorCode::Overflow, "int64 add");
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) fail(ErrorCode::Overflow, "int64 sub");
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) fail(ErrorCode::Overflow, "int64 mul");
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) { return a.v / b.v; }
  friend Checked64 operator%(Checked64 a, Checked64 b) { return a.v % b.v; }
  Checked64 operator-() const { return Checked64(0) - *this; }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v == b.v; }
  friend bool operator!=(Checked64 a, Checked64 b) { return a.v != b.v; }
  friend bool operator<(Checked64 a, Checked64 b) { return a.v < b.v; }
  friend bool operator>(Checked64 a, Checked64 b) { return a.v > b.v; }
  friend Checked64 abs(Checked64 a) { return a.v < 0 ? -a : a; }
};

template <class T>
T abs_value(const T& a) {
  return a < T(0) ? T(T(0) - a) : a;
}

// Returns g = gcd(a,b) >= 0 with x*a + y*b = g.
template <class T>
T ext_gcd(const T& a, const T& b, T& x, T& y) {
  T r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != T(0)) {
    T q = r0 / r1;
    T r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    T s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    T t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 < T(0)) {
    r0 = T(0) - r0;
    s0 = T(0) - s0;
    t0 = T(0) - t0;
  }
  x = s0;
  y = t0;
  return r0;
}

// Smith normal form by Bezout elimination. m is rows x cols row-major and is
// overwritten with S. If non-null, u (rows x rows) and v (cols x cols) must
// hold identity matrices on entry and receive U, V with U*M*V = S.
template <class T>
void snf_in_place(T* m, std::size_t rows, std::size_t cols, T* u, T* v) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return m[i * cols + j]; };

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(at(a, k), at(b, k));
    if (u)
      for (std::size_t k = 0; k < rows; ++k) std::swap(u[a * rows + k], u[b * rows + k]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(at(k, a), at(k, b));
    if (v)
      for (std::size_t k = 0; k < cols; ++k) std::swap(v[k * cols + a], v[k * cols + b]);
  };
  // rows (t, i) <- [[x, y], [c, d]] * rows (t, i)
  auto mix_rows = [&](std::size_t t, std::size_t i, const T& x, const T& y, const T& c,
                      const T& d) {
    for (std::size_t k = 0; k < cols; ++k) {
      T a = at(t, k), b = at(i, k);
      at(t, k) = x * a + y * b;
      at(i, k) = c * a + d * b;
    }
    if (u)
      for (std::size_t k = 0; k < rows; ++k) {
        T a = u[t * rows + k], b = u[i * rows + k];
        u[t * rows + k] = x * a + y * b;
        u[i * rows + k] = c * a + d * b;
      }
  };
  auto mix_cols = [&](std::size_t t, std::size_t j, const T& x, const T& y, const T& c,
                      const T& d) {
    for (std::size_t k = 0; k < rows; ++k) {
      T a = at(k, t), b = at(k, j);
      at(k, t) = x * a + y * b;
      at(k, j) = c * a + d * b;
    }
    if (v)
      for (std::size_t k = 0; k < cols; ++k) {
        T a = v[k * cols + t], b = v[k * cols + j];
        v[k * cols + t] = x * a + y * b;
        v[k * cols + j] = c * a + d * b;
      }
  };
  auto sub_row = [&](std::size_t i, std::size_t t, const T& q) {
    for (std::size_t k = 0; k < cols; ++k) at(i, k) = at(i, k) - q * at(t, k);
    if (u)
      for (std::size_t k = 0; k < rows; ++k) u[i * rows + k] = u[i * rows + k] - q * u[t * rows + k];
  };
  auto sub_col = [&](std::size_t j, std::size_t t, const T& q) {
    for (std::size_t k = 0; k < rows; ++k) at(k, j) = at(k, j) - q * at(k, t);
    if (v)
      for (std::size_t k = 0; k < cols; ++k) v[k * cols + j] = v[k * cols + j] - q * v[k * cols + t];
  };

  const std::size_t n = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      bool found = false;
      std::size_t pi = t, pj = t;
      T best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (at(i, j) == T(0)) continue;
          T a = abs_value(at(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (std::size_t i = t + 1; i < rows; ++i) {
        if (at(i, t) == T(0)) continue;
        const T a = at(t, t), b = at(i, t);
        if (b % a == T(0)) {
          sub_row(i, t, b / a);
        } else {
          T x, y;
          T g = ext_gcd(a, b, x, y);
          mix_rows(t, i, x, y, T(0) - b / g, a / g);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (at(t, j) == T(0)) continue;
        const T a = at(t, t), b = at(t, j);
        if (b % a == T(0)) {
          sub_col(j, t, b / a);
        } else {
          T x, y;
          T g = ext_gcd(a, b, x, y);
          mix_cols(t, j, x, y, T(0) - b / g, a / g);
        }
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (at(i, t) != T(0)) column_clear = false;
      if (!column_clear) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (at(i, j) % at(t, t) != T(0)) {
            sub_row(t, i, T(-1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (at(t, t) < T(0)) {
      for (std::size_t k = 0; k < cols; ++k) at(t, k) = T(0) - at(t, k);
      if (u)
        for (std::size_t k = 0; k < rows; ++k) u[t * rows + k] = T(0) - u[t * rows + k];
    }
  }
}

}  // namespace cobk::detail
