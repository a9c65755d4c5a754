#include <algorithm>
#include <random>

#include "doctest.h"
#include "repcheck/field.hpp"
#include "repcheck/matrix.hpp"
#include "repcheck/poly.hpp"

using namespace repcheck;

namespace {

// Leibniz-expansion characteristic polynomial, independent of the Smith-form
// route: det(x I - g) as a sum over permutations.  Only used as an oracle.
Poly char_poly_leibniz(const Mat& g) {
  const Field& f = g.field();
  int n = g.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly acc(f);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly term = Poly::constant(f, 1);
    for (int i = 0; i < n; ++i) {
      // entry (i, perm[i]) of x I - g
      std::vector<uint8_t> c = {f.neg(g.at(i, perm[i]))};
      if (perm[i] == i) c.push_back(1);
      term = poly_mul(term, Poly(f, c));
    }
    if (inversions % 2 == 1) term = poly_scale(term, f.neg(1));
    acc = poly_add(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

Mat random_invertible(const Field& f, int n, std::mt19937& rng) {
  for (;;) {
    Mat m(f, n, n);
    for (auto& e : m.entries()) e = static_cast<uint8_t>(rng() % f.q);
    if (mat_rank(m) == n) return m;
  }
}

Mat from_rows(const Field& f, std::vector<std::vector<int>> rows) {
  Mat m(f, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.set(static_cast<int>(i), static_cast<int>(j), static_cast<uint8_t>(rows[i][j]));
  return m;
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for every supported q") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& f = Field::get(q);
    CHECK(f.q == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<uint8_t>(a), 0) == a);
      CHECK(f.mul(static_cast<uint8_t>(a), 1) == a);
      CHECK(f.add(static_cast<uint8_t>(a), f.neg(static_cast<uint8_t>(a))) == 0);
      if (a != 0) CHECK(f.mul(static_cast<uint8_t>(a), f.inv(static_cast<uint8_t>(a))) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("extension fields: generator order and Zech addition") {
  for (int q : {4, 8, 9}) {
    const Field& f = Field::get(q);
    CHECK(f.d > 1);
    CHECK(f.has_zech());
    // generator has full multiplicative order
    int ord = 1;
    uint8_t x = f.generator();
    while (x != 1) {
      x = f.mul(x, f.generator());
      ++ord;
    }
    CHECK(ord == q - 1);
    // Zech route: g^a + g^b = g^b * (1 + g^(a-b)) = g^(b + zech(a-b))
    for (int a = 0; a < q - 1; ++a) {
      for (int b = 0; b < q - 1; ++b) {
        int k = ((a - b) % (q - 1) + (q - 1)) % (q - 1);
        uint8_t via_tables = f.add(f.exp(a), f.exp(b));
        uint8_t via_zech = f.zech(k) < 0 ? 0 : f.exp(b + f.zech(k));
        CHECK(via_tables == via_zech);
      }
    }
  }
}

TEST_CASE("mat_rank examples") {
  const Field& f2 = Field::get(2);
  const Field& f3 = Field::get(3);
  CHECK(mat_rank(Mat::identity(f2, 3)) == 3);
  CHECK(mat_rank(Mat(f3, 2, 2)) == 0);
  // [[1,1],[1,1]] over F_2: second row reduces to zero
  CHECK(mat_rank(from_rows(f2, {{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("rank + nullity = cols on sampled matrices") {
  std::mt19937 rng(12345);
  for (int q : {2, 3}) {
    const Field& f = Field::get(q);
    for (int rows = 1; rows <= 4; ++rows) {
      for (int cols = 1; cols <= 4; ++cols) {
        for (int trial = 0; trial < 20; ++trial) {
          Mat m(f, rows, cols);
          for (auto& e : m.entries()) e = static_cast<uint8_t>(rng() % q);
          CHECK(mat_rank(m) + static_cast<int>(mat_kernel(m).size()) == cols);
        }
      }
    }
  }
}

TEST_CASE("matrix inverse round-trip") {
  std::mt19937 rng(777);
  for (int q : {2, 3, 4, 5}) {
    const Field& f = Field::get(q);
    for (int n = 1; n <= 4; ++n) {
      Mat m = random_invertible(f, n, rng);
      auto inv = mat_inverse(m);
      REQUIRE(inv.has_value());
      CHECK(mat_mul(*inv, m) == Mat::identity(f, n));
      CHECK(mat_mul(m, *inv) == Mat::identity(f, n));
    }
  }
}

TEST_CASE("solve_intertwiner_space examples") {
  const Field& f2 = Field::get(2);

  SUBCASE("A = B = 0 gives the full matrix space") {
    Mat z(f2, 2, 2);
    auto basis = solve_intertwiner_space(z, z);
    CHECK(basis.size() == 4);
  }

  SUBCASE("symmetric A, B admit the identity") {
    Mat a = from_rows(f2, {{1, 1}, {1, 0}});
    Mat b = from_rows(f2, {{0, 1}, {1, 1}});
    auto basis = solve_intertwiner_space(a, b);
    // identity must lie in the span: g = I satisfies g a = a^t g = a g.
    Mat id = Mat::identity(f2, 2);
    Mat sys(f2, 4, static_cast<int>(basis.size()));
    for (size_t k = 0; k < basis.size(); ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) sys.set(i * 2 + j, static_cast<int>(k), basis[k].at(i, j));
    Mat rhs(f2, 4, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) rhs.set(i * 2 + j, 0, id.at(i, j));
    CHECK(mat_solve(sys, rhs).has_value());
  }

  SUBCASE("A = J_2, B = 0 against exhaustive scan of all 16 matrices") {
    Mat a = from_rows(f2, {{0, 1}, {0, 0}});
    Mat b(f2, 2, 2);
    Mat at = mat_transpose(a);
    int count = 0;
    for (int bits = 0; bits < 16; ++bits) {
      Mat g(f2, 2, 2);
      for (int t = 0; t < 4; ++t) g.entries()[t] = static_cast<uint8_t>((bits >> (3 - t)) & 1);
      if (mat_mul(g, a) == mat_mul(at, g)) ++count;
    }
    auto basis = solve_intertwiner_space(a, b);
    CHECK((1 << basis.size()) == count);
    for (const Mat& g : basis) CHECK(mat_mul(g, a) == mat_mul(at, g));
  }
}

TEST_CASE("invariant_factors examples") {
  const Field& f2 = Field::get(2);

  SUBCASE("identity 2x2 over F_2 -> [x+1, x+1]") {
    auto inv = invariant_factors(Mat::identity(f2, 2));
    REQUIRE(inv.size() == 2);
    Poly xp1(f2, {1, 1});
    CHECK(inv[0] == xp1);
    CHECK(inv[1] == xp1);
  }

  SUBCASE("[[0,1],[1,1]] over F_2 -> single irreducible quadratic") {
    Mat g = from_rows(f2, {{0, 1}, {1, 1}});
    auto inv = invariant_factors(g);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == Poly(f2, {1, 1, 1}));
    // oracle: no eigenvector over F_2 (rank of g - lambda*I is full for both lambdas)
    for (uint8_t lam : {0, 1}) {
      Mat shifted = g;
      for (int i = 0; i < 2; ++i) shifted.set(i, i, f2.sub(shifted.at(i, i), lam));
      CHECK(mat_rank(shifted) == 2);
    }
  }

  SUBCASE("Jordan block J_2(1) over F_2 -> [x^2+1]") {
    Mat g = from_rows(f2, {{1, 1}, {0, 1}});
    auto inv = invariant_factors(g);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == Poly(f2, {1, 0, 1}));
    // oracle: cyclic since (g - I) != 0 but (g - I)^2 = 0
    Mat nil = mat_sub(g, Mat::identity(f2, 2));
    CHECK(!mat_is_zero(nil));
    CHECK(mat_is_zero(mat_mul(nil, nil)));
  }
}

TEST_CASE("invariant factor product equals Leibniz characteristic polynomial") {
  std::mt19937 rng(42);
  for (int q : {2, 3}) {
    const Field& f = Field::get(q);
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < 25; ++trial) {
        Mat m(f, n, n);
        for (auto& e : m.entries()) e = static_cast<uint8_t>(rng() % q);
        auto inv = invariant_factors(m);
        // divisibility chain
        for (size_t i = 0; i + 1 < inv.size(); ++i) {
          CHECK(poly_divides(inv[i], inv[i + 1]));
          CHECK(inv[i].monic());
        }
        CHECK(char_poly(m) == char_poly_leibniz(m));
      }
    }
  }
}

TEST_CASE("invariant factors are a conjugation and transpose invariant") {
  std::mt19937 rng(4242);
  for (int q : {2, 3}) {
    const Field& f = Field::get(q);
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 15; ++trial) {
        Mat m(f, n, n);
        for (auto& e : m.entries()) e = static_cast<uint8_t>(rng() % q);
        Mat h = random_invertible(f, n, rng);
        Mat conj = mat_mul(mat_mul(h, m), *mat_inverse(h));
        CHECK(encode_poly_list(invariant_factors(conj)) ==
              encode_poly_list(invariant_factors(m)));
        CHECK(encode_poly_list(invariant_factors(mat_transpose(m))) ==
              encode_poly_list(invariant_factors(m)));
      }
    }
  }
}

TEST_CASE("poly_factor examples") {
  const Field& f2 = Field::get(2);

  SUBCASE("x^2 + x over F_2") {
    auto fac = poly_factor(Poly(f2, {0, 1, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == Poly(f2, {0, 1}));  // x
    CHECK(fac[0].second == 1);
    CHECK(fac[1].first == Poly(f2, {1, 1}));  // x + 1
    CHECK(fac[1].second == 1);
  }

  SUBCASE("x^2 + x + 1 over F_2 is irreducible") {
    Poly p(f2, {1, 1, 1});
    CHECK(p.eval(0) != 0);
    CHECK(p.eval(1) != 0);
    auto fac = poly_factor(p);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == p);
    CHECK(fac[0].second == 1);
  }

  SUBCASE("x^2 + 1 over F_2 = (x+1)^2") {
    auto fac = poly_factor(Poly(f2, {1, 0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == Poly(f2, {1, 1}));
    CHECK(fac[0].second == 2);
  }
}

TEST_CASE("poly_factor reassembles the input, sampled") {
  std::mt19937 rng(9);
  for (int q : {2, 3, 4}) {
    const Field& f = Field::get(q);
    for (int deg = 1; deg <= 6; ++deg) {
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<uint8_t> c(deg + 1, 0);
        for (auto& e : c) e = static_cast<uint8_t>(rng() % q);
        c[deg] = static_cast<uint8_t>(1 + rng() % (q - 1));
        Poly p(f, c);
        Poly prod = Poly::constant(f, 1);
        for (const auto& [g, mult] : poly_factor(p)) {
          for (int i = 0; i < mult; ++i) prod = poly_mul(prod, g);
          // verified irreducible: no smaller-degree monic divisor
          for (int dd = 1; dd <= g.degree() / 2; ++dd)
            for (const Poly& h : monic_irreducibles(f, dd)) CHECK(!poly_divides(h, g));
        }
        CHECK(prod == poly_monic(p));
      }
    }
  }
}

TEST_CASE("counts of monic irreducibles match the necklace numbers") {
  // #monic irreducibles of degree d over F_q = (1/d) sum_{e | d} mu(e) q^{d/e}
  auto expected = [](int q, int d) {
    auto mu = [](int n) {
      int m = 1;
      for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
          n /= p;
          if (n % p == 0) return 0;
          m = -m;
        }
      }
      if (n > 1) m = -m;
      return m;
    };
    int64_t total = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e) continue;
      int64_t qe = 1;
      for (int i = 0; i < d / e; ++i) qe *= q;
      total += mu(e) * qe;
    }
    return total / d;
  };
  for (int q : {2, 3, 4, 5}) {
    for (int d = 1; d <= 5; ++d) {
      CHECK(static_cast<int64_t>(monic_irreducibles(Field::get(q), d).size()) == expected(q, d));
    }
  }
}

TEST_CASE("bit-packed F_2 rows multiply like the dense route") {
  std::mt19937 rng(5);
  const Field& f2 = Field::get(2);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      Mat a(f2, n, n), b(f2, n, n);
      for (auto& e : a.entries()) e = static_cast<uint8_t>(rng() % 2);
      for (auto& e : b.entries()) e = static_cast<uint8_t>(rng() % 2);
      CHECK(bit_mul(BitRows::from(a), BitRows::from(b)).to_mat(f2) == mat_mul(a, b));
    }
  }
}
