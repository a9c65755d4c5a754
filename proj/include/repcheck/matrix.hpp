#ifndef REPCHECK_MATRIX_HPP
#define REPCHECK_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repcheck/field.hpp"

namespace repcheck {

/// Dense row-major matrix over one of the small fields.  Everything here is
/// exact; there is no floating point anywhere in this project.
class Mat {
 public:
  Mat() : f_(nullptr), rows_(0), cols_(0) {}
  Mat(const Field& f, int rows, int cols)
      : f_(&f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

  static Mat identity(const Field& f, int n);

  const Field& field() const { return *f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint8_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint8_t v) { e_[static_cast<size_t>(r) * cols_ + c] = v; }

  const std::vector<uint8_t>& entries() const { return e_; }
  std::vector<uint8_t>& entries() { return e_; }

  /// Canonical byte string of the entry list; used as hash key everywhere.
  std::string encode() const { return std::string(e_.begin(), e_.end()); }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  const Field* f_;
  int rows_, cols_;
  std::vector<uint8_t> e_;
};

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, uint8_t c);
Mat mat_transpose(const Mat& a);
Mat mat_pow(const Mat& a, int64_t k);  // k >= 0
bool mat_is_zero(const Mat& a);

int mat_rank(const Mat& a);
std::optional<Mat> mat_inverse(const Mat& a);
inline bool mat_invertible(const Mat& a) { return mat_rank(a) == a.rows() && a.rows() == a.cols(); }

/// Reduced row echelon form; returns pivot column indices.
std::vector<int> mat_rref(Mat& a);

/// Basis of the right null space {x : a x = 0} as column vectors, one Mat of
/// shape cols x 1 per basis element, in the standard free-column order.
std::vector<Mat> mat_kernel(const Mat& a);

/// One solution of a x = b (column vector) if the system is consistent.
std::optional<Mat> mat_solve(const Mat& a, const Mat& b);

/// Horizontal / vertical stacking and block extraction.
Mat mat_hstack(const Mat& a, const Mat& b);
Mat mat_block(const Mat& a, int r0, int c0, int rows, int cols);

/// Basis of the column space, reduced so membership tests are cheap.
std::vector<Mat> mat_column_space(const Mat& a);

/// Basis of {g : g a = a^t g and g b = b^t g} inside Mat_N; a and b must be
/// square of equal size over the same field.  The conjugation condition
/// g a g^{-1} = a^t for invertible g is the special case where g lands in
/// this linear space and happens to be invertible.
std::vector<Mat> solve_intertwiner_space(const Mat& a, const Mat& b);

/// Rows of an F_2 matrix packed into bit masks, for enumeration-heavy loops.
struct BitRows {
  int n = 0;
  uint32_t rows[8] = {0};

  static BitRows from(const Mat& m);
  Mat to_mat(const Field& f) const;
};

inline BitRows bit_mul(const BitRows& a, const BitRows& b) {
  BitRows r;
  r.n = a.n;
  for (int i = 0; i < a.n; ++i) {
    uint32_t acc = 0, row = a.rows[i];
    while (row) {
      int j = __builtin_ctz(row);
      row &= row - 1;
      acc ^= b.rows[j];
    }
    r.rows[i] = acc;
  }
  return r;
}

}  // namespace repcheck

#endif
