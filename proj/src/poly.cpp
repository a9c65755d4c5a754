#include "repcheck/poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace repcheck {

Poly Poly::constant(const Field& f, uint8_t v) {
  Poly p(f);
  if (v) p.c_ = {v};
  return p;
}

Poly Poly::x(const Field& f) { return Poly(f, {0, 1}); }

uint8_t Poly::eval(uint8_t x) const {
  const Field& f = *f_;
  uint8_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f.add(f.mul(r, x), *it);
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    uint8_t c = coeff(i);
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c != 1) s += std::to_string(static_cast<int>(c));
    if (i >= 1) {
      if (c != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

bool Poly::operator<(const Poly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
  }
  return false;
}

Poly poly_add(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  std::vector<uint8_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<uint8_t> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    uint8_t ai = a.coeffs()[i];
    if (!ai) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(ai, b.coeffs()[j]));
  }
  return Poly(f, std::move(c));
}

Poly poly_scale(const Poly& a, uint8_t c) {
  const Field& f = a.field();
  std::vector<uint8_t> v = a.coeffs();
  for (auto& e : v) e = f.mul(e, c);
  return Poly(f, std::move(v));
}

Poly poly_monic(const Poly& a) {
  if (a.is_zero() || a.monic()) return a;
  return poly_scale(a, a.field().inv(a.leading()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<uint8_t> rem = a.coeffs();
  std::vector<uint8_t> quot(a.degree() - b.degree() + 1, 0);
  uint8_t lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= b.degree(); --i) {
    uint8_t c = rem[i];
    if (!c) continue;
    uint8_t q = f.mul(c, lead_inv);
    quot[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j)
      rem[i - b.degree() + j] = f.sub(rem[i - b.degree() + j], f.mul(q, b.coeff(j)));
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

bool poly_divides(const Poly& d, const Poly& a) {
  return poly_divmod(a, d).second.is_zero();
}

const std::vector<Poly>& monic_irreducibles(const Field& f, int degree) {
  static std::map<std::pair<int, int>, std::vector<Poly>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Fill bottom-up so each degree can trial divide by the lower ones.
  for (int d = 1; d <= degree; ++d) {
    auto key = std::make_pair(f.q, d);
    if (cache.count(key)) continue;
    std::vector<Poly> result;
    if (d == 1) {
      for (int c0 = 0; c0 < f.q; ++c0)
        result.push_back(Poly(f, {static_cast<uint8_t>(c0), 1}));
    } else {
      int64_t count = 1;
      for (int i = 0; i < d; ++i) count *= f.q;
      for (int64_t enc = 0; enc < count; ++enc) {
        std::vector<uint8_t> c(d + 1, 0);
        int64_t v = enc;
        for (int i = 0; i < d; ++i) {
          c[i] = static_cast<uint8_t>(v % f.q);
          v /= f.q;
        }
        c[d] = 1;
        Poly cand(f, std::move(c));
        bool irreducible = true;
        for (int dd = 1; dd <= d / 2 && irreducible; ++dd) {
          for (const Poly& g : cache.at({f.q, dd})) {
            if (poly_divides(g, cand)) {
              irreducible = false;
              break;
            }
          }
        }
        if (irreducible) result.push_back(cand);
      }
    }
    std::sort(result.begin(), result.end());
    cache.emplace(key, std::move(result));
  }
  return cache.at({f.q, degree});
}

std::vector<std::pair<Poly, int>> poly_factor(const Poly& a) {
  if (a.is_zero()) throw std::domain_error("poly_factor: zero polynomial");
  Poly rem = poly_monic(a);
  std::vector<std::pair<Poly, int>> factors;
  int d = 1;
  while (rem.degree() > 0) {
    if (d > rem.degree() / 2) {
      // No divisor of degree <= deg/2 remains: irreducible.
      factors.emplace_back(rem, 1);
      break;
    }
    bool found = false;
    for (const Poly& g : monic_irreducibles(a.field(), d)) {
      if (poly_divides(g, rem)) {
        int mult = 0;
        while (poly_divides(g, rem)) {
          rem = poly_div(rem, g);
          ++mult;
        }
        factors.emplace_back(g, mult);
        found = true;
        break;  // restart at same degree: rem changed
      }
    }
    if (!found) ++d;
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return factors;
}

namespace {

// In-place elementary operations on a polynomial matrix.
struct PolyMat {
  std::vector<std::vector<Poly>>& m;
  int rows() const { return static_cast<int>(m.size()); }
  int cols() const { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

  void swap_rows(int a, int b) { std::swap(m[a], m[b]); }
  void swap_cols(int a, int b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  }
  // row[a] -= q * row[b]
  void row_sub(int a, int b, const Poly& q) {
    for (int j = 0; j < cols(); ++j) m[a][j] = poly_sub(m[a][j], poly_mul(q, m[b][j]));
  }
  void col_sub(int a, int b, const Poly& q) {
    for (int i = 0; i < rows(); ++i) m[i][a] = poly_sub(m[i][a], poly_mul(q, m[i][b]));
  }
  void row_add(int a, int b) {
    for (int j = 0; j < cols(); ++j) m[a][j] = poly_add(m[a][j], m[b][j]);
  }
};

}  // namespace

std::vector<Poly> smith_diagonal(std::vector<std::vector<Poly>> mat) {
  PolyMat pm{mat};
  int n = pm.rows(), c = pm.cols();
  int t = 0;
  while (t < std::min(n, c)) {
    // Minimal-degree nonzero pivot in the trailing submatrix, (row, col) lex
    // tie-break.
    int pi = -1, pj = -1, best = 1 << 30;
    for (int i = t; i < n; ++i) {
      for (int j = t; j < c; ++j) {
        if (!mat[i][j].is_zero() && mat[i][j].degree() < best) {
          best = mat[i][j].degree();
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    if (pi != t) pm.swap_rows(t, pi);
    if (pj != t) pm.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (mat[i][t].is_zero()) continue;
        Poly q = poly_div(mat[i][t], mat[t][t]);
        pm.row_sub(i, t, q);
        if (!mat[i][t].is_zero()) {
          pm.swap_rows(t, i);  // strictly smaller-degree pivot
          clean = false;
        }
      }
      for (int j = t + 1; j < c; ++j) {
        if (mat[t][j].is_zero()) continue;
        Poly q = poly_div(mat[t][j], mat[t][t]);
        pm.col_sub(j, t, q);
        if (!mat[t][j].is_zero()) {
          pm.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry; otherwise fold the bad row in.
      bool divides_all = true;
      for (int i = t + 1; i < n && divides_all; ++i) {
        for (int j = t + 1; j < c; ++j) {
          if (!poly_divides(mat[t][t], mat[i][j])) {
            pm.row_add(t, i);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    mat[t][t] = poly_monic(mat[t][t]);
    ++t;
  }
  std::vector<Poly> diag;
  for (int i = 0; i < std::min(n, c); ++i) diag.push_back(mat[i][i]);
  return diag;
}

std::vector<Poly> invariant_factors(const Mat& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("invariant_factors: square input required");
  const Field& f = g.field();
  int n = g.rows();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // x*I - g
      std::vector<uint8_t> coeffs = {f.neg(g.at(i, j))};
      if (i == j) coeffs.push_back(1);
      m[i][j] = Poly(f, std::move(coeffs));
    }
  }
  std::vector<Poly> diag = smith_diagonal(std::move(m));
  std::vector<Poly> result;
  for (const Poly& p : diag)
    if (p.degree() >= 1) result.push_back(p);
  return result;
}

Poly char_poly(const Mat& g) {
  Poly r = Poly::constant(g.field(), 1);
  for (const Poly& p : invariant_factors(g)) r = poly_mul(r, p);
  return r;
}

std::string encode_poly_list(const std::vector<Poly>& ps) {
  std::string s;
  for (const Poly& p : ps) {
    s += static_cast<char>(p.degree() + 2);
    s.append(p.coeffs().begin(), p.coeffs().end());
    s += '|';
  }
  return s;
}

}  // namespace repcheck
