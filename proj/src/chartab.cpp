#include "repcheck/chartab.hpp"
#include <cmath>

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace repcheck {

int64_t Fp::pow(int64_t a, int64_t e) const {
  a = ((a % p) + p) % p;
  int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t isqrt_floor(int64_t n) {
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int64_t isqrt_ceil(int64_t n) {
  int64_t f = isqrt_floor(n);
  return f * f == n ? f : f + 1;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> fs;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

int64_t smallest_primitive_root(int64_t p) {
  Fp fp{p};
  std::vector<int64_t> fs = prime_factors(p - 1);
  for (int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int64_t ell : fs) {
      if (fp.pow(g, (p - 1) / ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw SearchExhausted("no primitive root found (impossible for prime p)");
}

}  // namespace

PrimeChoice choose_prime(int64_t e, int64_t order) {
  if (e < 1 || order < 1) throw std::invalid_argument("choose_prime: e, order >= 1 required");
  int64_t floor = 2 * isqrt_ceil(order);
  constexpr int64_t kCap = 10000000;
  for (int64_t p = e + 1;; p += e) {
    if (p > kCap) throw SearchExhausted("choose_prime: no admissible prime below 10^7");
    if (p <= floor) continue;
    if (!is_prime(p)) continue;
    Fp fp{p};
    int64_t omega = fp.pow(smallest_primitive_root(p), (p - 1) / e);
    return {p, omega};
  }
}

int64_t lift_small(int64_t x, int64_t bound, int64_t p) {
  if (bound < 0 || bound >= p) throw std::invalid_argument("lift_small: need 0 <= bound < p");
  int64_t r = ((x % p) + p) % p;
  if (r > bound) {
    throw LiftOutOfRange("lift_small: residue " + std::to_string(r) + " exceeds bound " +
                         std::to_string(bound) + " (mod " + std::to_string(p) + ")");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dense linear algebra mod p, local to this translation unit.

namespace {

using Vec = std::vector<int64_t>;
using Matrix = std::vector<Vec>;  // row-major


// Reduced row echelon; returns pivot columns.
std::vector<int> rref_fp(const Fp& fp, Matrix& a) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    int64_t inv = fp.inv(a[row][col]);
    for (size_t j = 0; j < cols; ++j) a[row][j] = fp.mul(a[row][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      int64_t c = a[i][col];
      for (size_t j = 0; j < cols; ++j) a[i][j] = fp.sub(a[i][j], fp.mul(c, a[row][j]));
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

// Kernel basis (columns of the result, one per free variable).
Matrix kernel_fp(const Fp& fp, Matrix a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = rref_fp(fp, a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fp.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve B X = T for X (B full column rank, consistent); B is rows x s as
// columns list, T likewise.  Both given column-major for convenience.
Matrix solve_columns_fp(const Fp& fp, const Matrix& b_cols, const Matrix& t_cols) {
  size_t rows = b_cols[0].size(), s = b_cols.size(), k = t_cols.size();
  Matrix aug(rows, Vec(s + k, 0));
  for (size_t j = 0; j < s; ++j)
    for (size_t i = 0; i < rows; ++i) aug[i][j] = b_cols[j][i];
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < rows; ++i) aug[i][s + j] = t_cols[j][i];
  std::vector<int> pivots = rref_fp(fp, aug);
  if (pivots.size() != s ||
      !std::all_of(pivots.begin(), pivots.end(), [&](int c) { return c < static_cast<int>(s); })) {
    throw SplitFailure("class matrix does not preserve a common eigenspace");
  }
  Matrix x_cols(k, Vec(s, 0));
  for (size_t j = 0; j < k; ++j)
    for (size_t r = 0; r < s; ++r) x_cols[j][r] = aug[r][s + j];
  return x_cols;
}

int64_t det_fp(const Fp& fp, Matrix a) {
  size_t n = a.size();
  int64_t det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = fp.sub(0, det);
    }
    det = fp.mul(det, a[col][col]);
    int64_t inv = fp.inv(a[col][col]);
    for (size_t i = col + 1; i < n; ++i) {
      if (!a[i][col]) continue;
      int64_t c = fp.mul(a[i][col], inv);
      for (size_t j = col; j < n; ++j) a[i][j] = fp.sub(a[i][j], fp.mul(c, a[col][j]));
    }
  }
  return det;
}

// Characteristic polynomial of an s x s matrix by evaluation at s+1 points
// and Lagrange interpolation; coefficients low to high.
Vec char_poly_fp(const Fp& fp, const Matrix& m) {
  size_t s = m.size();
  std::vector<int64_t> xs, ys;
  for (size_t t = 0; t <= s; ++t) {
    Matrix shifted = m;
    for (size_t i = 0; i < s; ++i) {
      for (size_t j = 0; j < s; ++j) shifted[i][j] = fp.sub(0, shifted[i][j]);
      shifted[i][i] = fp.add(shifted[i][i], static_cast<int64_t>(t));
    }
    xs.push_back(static_cast<int64_t>(t));
    ys.push_back(det_fp(fp, shifted));
  }
  // Lagrange: sum_i y_i prod_{j != i} (x - x_j) / (x_i - x_j)
  Vec poly(s + 1, 0);
  for (size_t i = 0; i <= s; ++i) {
    Vec num = {1};
    int64_t den = 1;
    for (size_t j = 0; j <= s; ++j) {
      if (j == i) continue;
      Vec next(num.size() + 1, 0);
      for (size_t t = 0; t < num.size(); ++t) {
        next[t + 1] = fp.add(next[t + 1], num[t]);
        next[t] = fp.add(next[t], fp.mul(num[t], fp.sub(0, xs[j])));
      }
      num = std::move(next);
      den = fp.mul(den, fp.sub(xs[i], xs[j]));
    }
    int64_t c = fp.mul(ys[i], fp.inv(den));
    for (size_t t = 0; t < num.size(); ++t) poly[t] = fp.add(poly[t], fp.mul(num[t], c));
  }
  return poly;
}

std::vector<int64_t> poly_roots_fp(const Fp& fp, const Vec& poly) {
  std::vector<int64_t> roots;
  for (int64_t x = 0; x < fp.p; ++x) {
    int64_t v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = fp.add(fp.mul(v, x), *it);
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace

// ---------------------------------------------------------------------------

int64_t CharTable::lift_bound() const { return isqrt_floor(group->order()); }

int64_t CharTable::inner_product(const std::vector<int64_t>& u,
                                 const std::vector<int64_t>& v) const {
  const ConjClasses& cc = group->classes();
  Fp fp{p};
  int64_t sum = 0;
  for (int j = 0; j < cc.num(); ++j) {
    sum = fp.add(sum, fp.mul(fp.mul(fp.reduce(cc.sizes[j]), u[j]), v[cc.inverse_map[j]]));
  }
  return fp.mul(sum, fp.inv(fp.reduce(group->order())));
}

void CharTable::compute_contragredients() {
  const ConjClasses& cc = group->classes();
  contra_.assign(num_rows(), -1);
  for (int i = 0; i < num_rows(); ++i) {
    std::vector<int64_t> target(cc.num());
    for (int j = 0; j < cc.num(); ++j) target[j] = values[i][cc.inverse_map[j]];
    for (int k = 0; k < num_rows(); ++k) {
      if (values[k] == target) {
        contra_[i] = k;
        break;
      }
    }
    if (contra_[i] < 0) throw SplitFailure("contragredient row missing from table");
  }
}

void CharTable::validate() const {
  const ConjClasses& cc = group->classes();
  int r = cc.num();
  if (num_rows() != r) throw SplitFailure("row count != class count");
  Fp fp{p};
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) {
      int64_t ip = inner_product(values[i], values[k]);
      if (ip != (i == k ? 1 : 0)) throw SplitFailure("row orthogonality failed");
    }
  }
  for (int j = 0; j < r; ++j) {
    for (int jj = 0; jj < r; ++jj) {
      int64_t sum = 0;
      for (int i = 0; i < r; ++i)
        sum = fp.add(sum, fp.mul(values[i][j], values[i][cc.inverse_map[jj]]));
      int64_t want = (j == jj) ? fp.reduce(group->order() / cc.sizes[j]) : 0;
      if (sum != want) throw SplitFailure("column orthogonality failed");
    }
  }
  int64_t sq = 0;
  for (int i = 0; i < r; ++i) {
    if (degrees[i] <= 0 || degrees[i] > isqrt_floor(group->order()))
      throw SplitFailure("degree out of range");
    if (group->order() % degrees[i] != 0) throw SplitFailure("degree does not divide |G|");
    if (fp.reduce(degrees[i]) != values[i][0]) throw SplitFailure("degree-residue mismatch");
    sq += degrees[i] * degrees[i];
  }
  if (sq != group->order()) throw SplitFailure("sum of squared degrees != |G|");
}

std::vector<int64_t> eigenvalue_multiplicities(const CharTable& t, int i, int j) {
  const ConjClasses& cc = t.group->classes();
  Fp fp{t.p};
  int64_t m = t.group->element_order(cc.reps[j]);
  // chi(rep^s) for s = 0..m-1, as class values
  std::vector<int64_t> chain(m);
  EIdx x = t.group->id();
  for (int64_t s = 0; s < m; ++s) {
    chain[s] = t.values[i][cc.class_of[x]];
    x = t.group->mul(x, cc.reps[j]);
  }
  int64_t omega_m = fp.pow(t.omega, t.e / m);
  int64_t m_inv = fp.inv(fp.reduce(m));
  std::vector<int64_t> mults(m);
  for (int64_t s = 0; s < m; ++s) {
    int64_t sum = 0;
    for (int64_t u = 0; u < m; ++u) {
      sum = fp.add(sum, fp.mul(chain[u], fp.pow(omega_m, ((m - s) * u) % m)));
    }
    mults[s] = lift_small(fp.mul(sum, m_inv), t.degrees[i], t.p);
  }
  return mults;
}

CharTable dixon_table(std::shared_ptr<const Group> g, int64_t prime_override) {
  const ConjClasses& cc = g->classes();
  int r = cc.num();
  int64_t order = g->order();
  int64_t e = g->exponent();

  int64_t p, omega;
  if (prime_override == 0) {
    PrimeChoice pc = choose_prime(e, order);
    p = pc.p;
    omega = pc.omega;
  } else {
    p = prime_override;
    if (!is_prime(p) || (p - 1) % e != 0 || p <= 2 * isqrt_ceil(order))
      throw std::invalid_argument("dixon_table: inadmissible prime override");
    Fp fp{p};
    omega = fp.pow(smallest_primitive_root(p), (p - 1) / e);
  }
  Fp fp{p};

  // Class matrices (M_i)[j][k] = a_{ijk} reduced mod p, computed on demand.
  std::map<int, Matrix> class_mats;
  auto get_class_matrix = [&](int i) -> const Matrix& {
    auto it = class_mats.find(i);
    if (it == class_mats.end()) {
      auto counts = class_matrix(*g, i);
      Matrix m(r, Vec(r, 0));
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) m[j][k] = fp.reduce(counts[j][k]);
      it = class_mats.emplace(i, std::move(m)).first;
    }
    return it->second;
  };

  // Split the full space into common eigenspaces.  A subspace is a list of
  // basis columns (length-r vectors).
  std::vector<Matrix> worklist;
  std::vector<Vec> finished;  // 1-dim eigenvectors
  {
    Matrix full;
    for (int i = 0; i < r; ++i) {
      Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    worklist.push_back(std::move(full));
  }
  while (!worklist.empty()) {
    Matrix sub = std::move(worklist.back());
    worklist.pop_back();
    size_t s = sub.size();
    if (s == 1) {
      finished.push_back(std::move(sub[0]));
      continue;
    }
    bool split_done = false;
    for (int i = 1; i < r && !split_done; ++i) {
      const Matrix& mi = get_class_matrix(i);
      // action of M_i on the subspace: columns of M_i * b
      Matrix targets;
      for (const Vec& b : sub) {
        Vec t(r, 0);
        for (int row = 0; row < r; ++row) {
          int64_t acc = 0;
          for (int k = 0; k < r; ++k) acc = fp.add(acc, fp.mul(mi[row][k], b[k]));
          t[row] = acc;
        }
        targets.push_back(std::move(t));
      }
      Matrix action_cols = solve_columns_fp(fp, sub, targets);  // s x s, column list
      // scalar action?
      bool scalar = true;
      int64_t lambda0 = action_cols[0][0];
      for (size_t cidx = 0; cidx < s && scalar; ++cidx)
        for (size_t ridx = 0; ridx < s; ++ridx) {
          int64_t want = (ridx == cidx) ? lambda0 : 0;
          if (action_cols[cidx][ridx] != want) {
            scalar = false;
            break;
          }
        }
      if (scalar) continue;
      // eigen-split by ascending eigenvalue
      Matrix action_rows(s, Vec(s, 0));
      for (size_t cidx = 0; cidx < s; ++cidx)
        for (size_t ridx = 0; ridx < s; ++ridx) action_rows[ridx][cidx] = action_cols[cidx][ridx];
      Vec cp = char_poly_fp(fp, action_rows);
      std::vector<int64_t> roots = poly_roots_fp(fp, cp);
      size_t dims = 0;
      for (int64_t lam : roots) {
        Matrix shifted = action_rows;
        for (size_t d = 0; d < s; ++d) shifted[d][d] = fp.sub(shifted[d][d], lam);
        Matrix ker = kernel_fp(fp, shifted);
        if (ker.empty()) continue;
        Matrix newsub;
        for (const Vec& k : ker) {
          Vec v(r, 0);
          for (size_t c2 = 0; c2 < s; ++c2) {
            if (!k[c2]) continue;
            for (int row = 0; row < r; ++row)
              v[row] = fp.add(v[row], fp.mul(k[c2], sub[c2][row]));
          }
          newsub.push_back(std::move(v));
        }
        dims += newsub.size();
        worklist.push_back(std::move(newsub));
      }
      if (dims != s) throw SplitFailure("eigenspace dimensions do not fill the subspace");
      split_done = true;
    }
    if (!split_done) throw SplitFailure("no class matrix separates a subspace");
  }
  if (static_cast<int>(finished.size()) != r)
    throw SplitFailure("wrong number of 1-dimensional common eigenspaces");

  // Convert eigenvectors w (w_j = |C_j| chi_j / d, normalized w_0 = 1) into
  // character rows.
  CharTable table;
  table.group = g;
  table.p = p;
  table.omega = omega;
  table.e = e;
  int64_t root_bound = isqrt_floor(order);
  std::vector<std::pair<std::vector<int64_t>, int>> sort_keys;
  for (Vec& w : finished) {
    if (w[0] == 0) throw SplitFailure("eigenvector vanishes at the identity class");
    int64_t scale = fp.inv(w[0]);
    for (auto& x : w) x = fp.mul(x, scale);
    int64_t s_val = 0;
    for (int j = 0; j < r; ++j) {
      s_val = fp.add(s_val, fp.mul(fp.mul(w[j], w[cc.inverse_map[j]]),
                                   fp.inv(fp.reduce(cc.sizes[j]))));
    }
    if (s_val == 0) throw SplitFailure("degree normalization vanished");
    int64_t d_sq = fp.mul(fp.reduce(order), fp.inv(s_val));
    int64_t degree = -1;
    for (int64_t d = 1; d <= root_bound; ++d) {
      if (fp.mul(fp.reduce(d), fp.reduce(d)) == d_sq) {
        degree = d;
        break;
      }
    }
    if (degree < 0) throw SplitFailure("no admissible degree lift");
    std::vector<int64_t> row(r);
    for (int j = 0; j < r; ++j)
      row[j] = fp.mul(fp.mul(fp.reduce(degree), w[j]), fp.inv(fp.reduce(cc.sizes[j])));
    table.degrees.push_back(degree);
    table.values.push_back(std::move(row));
  }

  // Canonical row order: (degree, eigenvalue-multiplicity signature).  The
  // signature is integer data of the abstract character, so the order is
  // independent of the chosen prime.
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int64_t>> signature(r);
  for (int i = 0; i < r; ++i) {
    std::vector<int64_t> sig;
    sig.push_back(table.degrees[i]);
    for (int j = 0; j < r; ++j) {
      // negated so that eigenvalue-1 heavy rows (trivial first) sort early
      for (int64_t m : eigenvalue_multiplicities(table, i, j)) sig.push_back(-m);
    }
    signature[i] = std::move(sig);
  }
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (signature[a] != signature[b]) return signature[a] < signature[b];
    return table.values[a] < table.values[b];
  });
  CharTable sorted;
  sorted.group = g;
  sorted.p = p;
  sorted.omega = omega;
  sorted.e = e;
  for (int i : perm) {
    sorted.degrees.push_back(table.degrees[i]);
    sorted.values.push_back(std::move(table.values[i]));
  }
  sorted.compute_contragredients();
  sorted.validate();
  return sorted;
}

CharTable product_table(std::shared_ptr<const MatrixGroup> product,
                        const std::vector<CharTable>& factor_tables) {
  if (product->factors().size() != factor_tables.size())
    throw std::invalid_argument("product_table: factor count mismatch");
  for (size_t i = 1; i < factor_tables.size(); ++i) {
    if (factor_tables[i].p != factor_tables[0].p)
      throw std::invalid_argument("product_table: factor tables use different primes");
  }
  CharTable t;
  t.group = product;
  t.p = factor_tables.empty() ? 3 : factor_tables[0].p;
  t.e = product->exponent();
  {
    Fp fp{t.p};
    if ((t.p - 1) % t.e != 0)
      throw std::invalid_argument("product_table: prime inadmissible for product exponent");
    t.omega = fp.pow(smallest_primitive_root(t.p), (t.p - 1) / t.e);
  }
  const ConjClasses& cc = product->classes();
  int r = cc.num();
  size_t nf = factor_tables.size();

  std::vector<int> row_radix(nf), class_radix(nf);
  for (size_t i = 0; i < nf; ++i) {
    row_radix[i] = factor_tables[i].num_rows();
    class_radix[i] = factor_tables[i].num_classes();
  }
  int64_t rows = 1;
  for (int x : row_radix) rows *= x;
  if (rows != r) throw std::invalid_argument("product_table: row count mismatch");

  Fp fp{t.p};
  for (int64_t tuple = 0; tuple < rows; ++tuple) {
    std::vector<int> idx(nf);
    int64_t v = tuple;
    for (int i = static_cast<int>(nf) - 1; i >= 0; --i) {
      idx[i] = static_cast<int>(v % row_radix[i]);
      v /= row_radix[i];
    }
    int64_t degree = 1;
    for (size_t i = 0; i < nf; ++i) degree *= factor_tables[i].degrees[idx[i]];
    std::vector<int64_t> row(r);
    for (int cls = 0; cls < r; ++cls) {
      std::vector<int> cidx(nf);
      int64_t cv = cls;
      for (int i = static_cast<int>(nf) - 1; i >= 0; --i) {
        cidx[i] = static_cast<int>(cv % class_radix[i]);
        cv /= class_radix[i];
      }
      int64_t val = 1;
      for (size_t i = 0; i < nf; ++i)
        val = fp.mul(val, factor_tables[i].values[idx[i]][cidx[i]]);
      row[cls] = val;
    }
    t.degrees.push_back(degree);
    t.values.push_back(std::move(row));
  }
  t.compute_contragredients();
  t.validate();
  return t;
}

TablePair levi_table_pair(const ParabolicData& pd, int64_t prime_override) {
  int64_t e = pd.G->exponent();
  int64_t p;
  if (prime_override == 0) {
    p = choose_prime(e, pd.G->order()).p;
  } else {
    p = prime_override;
  }
  TablePair tp{dixon_table(pd.G, p), CharTable{}};
  std::vector<CharTable> factor_tables;
  for (const auto& f : pd.M->factors()) factor_tables.push_back(dixon_table(f, p));
  tp.M = product_table(pd.M, factor_tables);
  return tp;
}

bool kappa_selfduality_check(const MatrixGroup& g) {
  const ConjClasses& cc = g.classes();
  for (int j = 0; j < cc.num(); ++j) {
    EIdx kappa = g.inv(g.transposed(cc.reps[j]));
    if (cc.class_of[kappa] != cc.inverse_map[j]) return false;
  }
  return true;
}

}  // namespace repcheck
