#ifndef REPCHECK_POLY_HPP
#define REPCHECK_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "repcheck/field.hpp"
#include "repcheck/matrix.hpp"

namespace repcheck {

/// Univariate polynomial over one of the small fields, coefficients stored
/// low to high with no trailing zeros.  The zero polynomial has degree -1.
class Poly {
 public:
  Poly() : f_(nullptr) {}
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<uint8_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    trim();
  }
  static Poly constant(const Field& f, uint8_t v);
  static Poly x(const Field& f);

  const Field& field() const { return *f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  uint8_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  uint8_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  bool monic() const { return leading() == 1; }
  uint8_t eval(uint8_t x) const;
  std::string str() const;  // human-readable, e.g. "x^2+x+1"

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Total order by (degree, coefficients high to low); used for canonical
  /// listings of factors and irreducibles.
  bool operator<(const Poly& o) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  const Field* f_;
  std::vector<uint8_t> c_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, uint8_t c);
Poly poly_monic(const Poly& a);

/// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
inline Poly poly_div(const Poly& a, const Poly& b) { return poly_divmod(a, b).first; }
inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }
bool poly_divides(const Poly& d, const Poly& a);

/// All monic irreducibles of the given degree, sorted; cached per field.
/// Built by trial division against lower-degree irreducibles.
const std::vector<Poly>& monic_irreducibles(const Field& f, int degree);

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).  The product of the returned powers
/// equals the monic normalization of the input.
std::vector<std::pair<Poly, int>> poly_factor(const Poly& a);

/// Diagonal of the Smith normal form of a matrix over F_q[x], computed by
/// elementary row/column operations pivoting on minimal-degree entries with
/// (row, col) lexicographic tie-break.  Result entries are monic (or zero)
/// and satisfy d_0 | d_1 | ... .
std::vector<Poly> smith_diagonal(std::vector<std::vector<Poly>> m);

/// Invariant factors of x*I - g: the non-constant Smith diagonal entries,
/// in divisibility order.  A complete conjugacy invariant of square matrices,
/// in particular of GL_n(F_q).
std::vector<Poly> invariant_factors(const Mat& g);

/// Characteristic polynomial det(x*I - g) via the invariant-factor product.
Poly char_poly(const Mat& g);

/// Compact canonical encoding of a polynomial list (for hashing class keys).
std::string encode_poly_list(const std::vector<Poly>& ps);

}  // namespace repcheck

#endif
