#include "toric/linalg.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace toric {

std::vector<int> rref(RatMat& rows, const std::vector<int>& col_order) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int col : col_order) {
    if (r >= rows.size()) break;
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rat inv = Rat(1) / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

RatVec reduce_against(const RatMat& rows, const std::vector<int>& pivots,
                      const std::vector<int>& /*col_order*/, RatVec v) {
  for (size_t i = 0; i < pivots.size(); ++i) {
    Rat f = v[pivots[i]];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
  }
  return v;
}

RatMat mat_inverse(const RatMat& m) {
  size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && aug[sel][c] == 0) ++sel;
    if (sel == n) throw std::runtime_error("singular matrix");
    std::swap(aug[c], aug[sel]);
    Rat inv = Rat(1) / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  RatMat out(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

RatVec solve_linear(RatMat a, RatVec b) {
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) throw std::runtime_error("singular system");
    std::swap(a[c], a[sel]);
    Rat inv = Rat(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

namespace {

long long llgcd(long long a, long long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::vector<std::vector<long long>> integer_kernel(
    const std::vector<std::vector<long long>>& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  // Rational kernel with a fixed pivot order, then clear denominators and
  // make each vector primitive.
  RatMat a(rows, RatVec(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  auto pivots = rref(a, order);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::vector<long long>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    BigInt lcm = 1;
    for (auto& x : v) lcm = lcm / gcd(lcm, BigInt(denominator(x))) * BigInt(denominator(x));
    std::vector<long long> iv(cols);
    long long g = 0;
    for (size_t j = 0; j < cols; ++j) {
      BigInt t = numerator(v[j]) * (lcm / BigInt(denominator(v[j])));
      iv[j] = t.convert_to<long long>();
      g = llgcd(g, iv[j]);
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    basis.push_back(iv);
  }
  return basis;
}

}  // namespace toric
