#include "repcheck/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace repcheck {

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat mat_add(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  const Field& f = a.field();
  Mat r = a;
  for (size_t i = 0; i < r.entries().size(); ++i)
    r.entries()[i] = f.add(r.entries()[i], b.entries()[i]);
  return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  const Field& f = a.field();
  Mat r = a;
  for (size_t i = 0; i < r.entries().size(); ++i)
    r.entries()[i] = f.sub(r.entries()[i], b.entries()[i]);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  assert(a.cols() == b.rows());
  const Field& f = a.field();
  Mat r(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      uint8_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        uint8_t prod = f.mul(aik, b.at(k, j));
        if (prod) r.set(i, j, f.add(r.at(i, j), prod));
      }
    }
  }
  return r;
}

Mat mat_scale(const Mat& a, uint8_t c) {
  const Field& f = a.field();
  Mat r = a;
  for (auto& e : r.entries()) e = f.mul(e, c);
  return r;
}

Mat mat_transpose(const Mat& a) {
  Mat r(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(j, i, a.at(i, j));
  return r;
}

Mat mat_pow(const Mat& a, int64_t k) {
  assert(a.rows() == a.cols());
  Mat r = Mat::identity(a.field(), a.rows());
  Mat base = a;
  while (k > 0) {
    if (k & 1) r = mat_mul(r, base);
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return r;
}

bool mat_is_zero(const Mat& a) {
  for (uint8_t e : a.entries())
    if (e) return false;
  return true;
}

std::vector<int> mat_rref(Mat& a) {
  const Field& f = a.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (a.at(i, col)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < a.cols(); ++j) {
        uint8_t t = a.at(sel, j);
        a.set(sel, j, a.at(row, j));
        a.set(row, j, t);
      }
    }
    uint8_t piv_inv = f.inv(a.at(row, col));
    for (int j = 0; j < a.cols(); ++j) a.set(row, j, f.mul(a.at(row, j), piv_inv));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      uint8_t c = a.at(i, col);
      if (!c) continue;
      for (int j = 0; j < a.cols(); ++j)
        a.set(i, j, f.sub(a.at(i, j), f.mul(c, a.at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(const Mat& a) {
  Mat m = a;
  return static_cast<int>(mat_rref(m).size());
}

std::optional<Mat> mat_inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Field& f = a.field();
  int n = a.rows();
  Mat aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, n + i, 1);
  }
  auto pivots = mat_rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
  return inv;
}

std::vector<Mat> mat_kernel(const Mat& a) {
  const Field& f = a.field();
  Mat m = a;
  auto pivots = mat_rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Mat v(f, a.cols(), 1);
    v.set(free, 0, 1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      v.set(pivots[r], 0, f.neg(m.at(static_cast<int>(r), free)));
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<Mat> mat_solve(const Mat& a, const Mat& b) {
  assert(b.cols() == 1 && b.rows() == a.rows());
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
    aug.set(i, a.cols(), b.at(i, 0));
  }
  auto pivots = mat_rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  Mat x(f, a.cols(), 1);
  for (size_t r = 0; r < pivots.size(); ++r)
    x.set(pivots[r], 0, aug.at(static_cast<int>(r), a.cols()));
  return x;
}

Mat mat_hstack(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

Mat mat_block(const Mat& a, int r0, int c0, int rows, int cols) {
  Mat r(a.field(), rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.set(i, j, a.at(r0 + i, c0 + j));
  return r;
}

std::vector<Mat> mat_column_space(const Mat& a) {
  Mat t = mat_transpose(a);
  mat_rref(t);
  std::vector<Mat> basis;
  for (int i = 0; i < t.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < t.cols(); ++j)
      if (t.at(i, j)) zero = false;
    if (zero) continue;
    Mat v(a.field(), a.rows(), 1);
    for (int j = 0; j < t.cols(); ++j) v.set(j, 0, t.at(i, j));
    basis.push_back(v);
  }
  return basis;
}

std::vector<Mat> solve_intertwiner_space(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("solve_intertwiner_space: need equal square shapes");
  const Field& f = a.field();
  int n = a.rows();
  // Unknown g as the vector (g[0][0], g[0][1], ..., g[n-1][n-1]).
  // g m = m^t g gives, per position (i,j):
  //   sum_s g[i][s] m[s][j] - sum_s m[s][i] g[s][j] = 0.
  Mat sys(f, 2 * n * n, n * n);
  auto fill = [&](const Mat& m, int row_off) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int row = row_off + i * n + j;
        for (int s = 0; s < n; ++s) {
          int col1 = i * n + s;  // coefficient of g[i][s]
          sys.set(row, col1, f.add(sys.at(row, col1), m.at(s, j)));
          int col2 = s * n + j;  // coefficient of g[s][j]
          sys.set(row, col2, f.sub(sys.at(row, col2), m.at(s, i)));
        }
      }
    }
  };
  fill(a, 0);
  fill(b, n * n);
  std::vector<Mat> basis;
  for (const Mat& v : mat_kernel(sys)) {
    Mat g(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.set(i, j, v.at(i * n + j, 0));
    basis.push_back(g);
  }
  return basis;
}

BitRows BitRows::from(const Mat& m) {
  assert(m.field().q == 2 && m.rows() == m.cols() && m.rows() <= 8);
  BitRows r;
  r.n = m.rows();
  for (int i = 0; i < r.n; ++i) {
    uint32_t row = 0;
    for (int j = 0; j < r.n; ++j)
      if (m.at(i, j)) row |= (1u << j);
    r.rows[i] = row;
  }
  return r;
}

Mat BitRows::to_mat(const Field& f) const {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i] & (1u << j)) m.set(i, j, 1);
  return m;
}

}  // namespace repcheck
