#include "gnatfam/linalg.hpp"

#include "gnatfam/error.hpp"

#include <numeric>
#include <utility>

namespace gnatfam::linalg {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVector& y, std::int64_t k, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntMatrix lower_hermite_basis(const IntMatrix& rows, std::size_t n) {
  IntMatrix pool;
  for (const auto& r : rows)
    if (!is_zero(r)) pool.push_back(r);

  IntMatrix basis(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t col = n - 1 - step;
    // Euclid on column `col` until a single row carries a nonzero entry.
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i][col] == 0) continue;
        if (best == pool.size() || std::abs(pool[i][col]) < std::abs(pool[best][col])) best = i;
      }
      if (best == pool.size()) throw Error(ErrorKind::Input, "lattice is not full rank");
      bool done = true;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (i == best || pool[i][col] == 0) continue;
        axpy(pool[i], -floor_div(pool[i][col], pool[best][col]), pool[best]);
        if (pool[i][col] != 0) done = false;
      }
      if (done) {
        auto pivot = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        if (pivot[col] < 0)
          for (auto& x : pivot) x = -x;
        basis[col] = std::move(pivot);
        std::erase_if(pool, is_zero);
        break;
      }
    }
  }
  // Reduce the entries left of each pivot by the rows below them.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j-- > 0;) {
      axpy(basis[i], -floor_div(basis[i][j], basis[j][j]), basis[j]);
    }
  }
  return basis;
}

IntVector reduce_mod(const IntMatrix& hnf, IntVector m) {
  for (std::size_t i = m.size(); i-- > 0;) {
    const auto q = floor_div(m[i], hnf[i][i]);
    if (q != 0) axpy(m, -q, hnf[i]);
  }
  return m;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const auto f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<RationalMatrix> inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const auto pivot = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= pivot;
      inv[c][k] /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const auto f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

RationalVector row_times(const RationalVector& v, const RationalMatrix& a) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RationalVector out(cols, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += v[i] * a[i][j];
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix t(a.front().size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

std::int64_t lcm_of_denominators(const RationalMatrix& a) {
  std::int64_t l = 1;
  for (const auto& row : a)
    for (const auto& q : row) l = std::lcm(l, q.denominator());
  return l;
}

}  // namespace gnatfam::linalg
