#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "repcheck/chartab.hpp"

using namespace repcheck;

TEST_CASE("choose_prime examples") {
  SUBCASE("e=6, order=6 (S_3) -> p=7, omega=3") {
    PrimeChoice pc = choose_prime(6, 6);
    CHECK(pc.p == 7);
    CHECK(pc.omega == 3);
    // omega has order exactly 6 mod 7
    Fp fp{7};
    CHECK(fp.pow(3, 6) == 1);
    for (int k = 1; k < 6; ++k) CHECK(fp.pow(3, k) != 1);
  }
  SUBCASE("e=1, order=1 -> p=3") {
    PrimeChoice pc = choose_prime(1, 1);
    CHECK(pc.p == 3);
    CHECK(pc.omega == 1);
  }
  SUBCASE("e=84, order=168 (GL_3(F_2)) -> p=337") {
    PrimeChoice pc = choose_prime(84, 168);
    CHECK(pc.p == 337);
  }
}

TEST_CASE("lift_small examples") {
  CHECK(lift_small(2, 13, 337) == 2);
  CHECK(lift_small(0, 5, 337) == 0);
  CHECK_THROWS_AS(lift_small(336, 13, 337), LiftOutOfRange);
}

TEST_CASE("trivial group table") {
  auto g = MatrixGroup::general_linear(1, 2);
  CharTable t = dixon_table(g);
  REQUIRE(t.num_rows() == 1);
  CHECK(t.degrees[0] == 1);
  CHECK(t.values[0][0] == 1);
}

TEST_CASE("GL(2,2) = S_3: table matches the hand-built one mod 7") {
  auto g = MatrixGroup::general_linear(2, 2);
  CharTable t = dixon_table(g);
  REQUIRE(t.p == 7);
  REQUIRE(t.num_rows() == 3);
  // classes: 0 = identity, 1 = order-2 (size 3), 2 = order-3 (size 2)
  const ConjClasses& cc = g->classes();
  REQUIRE(g->element_order(cc.reps[1]) == 2);
  REQUIRE(g->element_order(cc.reps[2]) == 3);
  // rows sorted by (degree, signature): trivial, sign, 2-dimensional
  CHECK(t.degrees == std::vector<int64_t>({1, 1, 2}));
  CHECK(t.values[0] == std::vector<int64_t>({1, 1, 1}));
  CHECK(t.values[1] == std::vector<int64_t>({1, 6, 1}));   // (1,-1,1)
  CHECK(t.values[2] == std::vector<int64_t>({2, 0, 6}));   // (2,0,-1)
}

TEST_CASE("symmetric-group route gives the same S_3 table") {
  auto s3 = SymmetricGroup::make(3);
  CharTable t = dixon_table(s3);
  CHECK(t.degrees == std::vector<int64_t>({1, 1, 2}));
  CHECK(t.values[1] == std::vector<int64_t>({1, 6, 1}));
}

TEST_CASE("GL(3,2): degrees {1,3,3,6,7,8} at p=337, cross-checked at the next prime") {
  auto g = MatrixGroup::general_linear(3, 2);
  CharTable t = dixon_table(g);
  CHECK(t.p == 337);
  std::multiset<int64_t> degs(t.degrees.begin(), t.degrees.end());
  CHECK(degs == std::multiset<int64_t>({1, 3, 3, 6, 7, 8}));
  int64_t sq = std::accumulate(t.degrees.begin(), t.degrees.end(), int64_t{0},
                               [](int64_t a, int64_t d) { return a + d * d; });
  CHECK(sq == 168);

  // two-prime reproducibility: identical degrees in identical row order and
  // identical eigenvalue-multiplicity data
  int64_t p2 = 421;  // next prime = 1 (mod 84) above 337
  CharTable t2 = dixon_table(g, p2);
  CHECK(t2.p == 421);
  CHECK(t.degrees == t2.degrees);
  for (int i = 0; i < t.num_rows(); ++i) {
    for (int j = 0; j < t.num_classes(); ++j) {
      CHECK(eigenvalue_multiplicities(t, i, j) == eigenvalue_multiplicities(t2, i, j));
    }
  }
}

TEST_CASE("inner products: orthonormal rows and the regular character") {
  auto g = MatrixGroup::general_linear(2, 3);
  CharTable t = dixon_table(g);
  for (int i = 0; i < t.num_rows(); ++i)
    for (int k = 0; k < t.num_rows(); ++k)
      CHECK(t.inner_product(t.values[i], t.values[k]) == (i == k ? 1 : 0));
  // <regular, chi_i> = d_i
  std::vector<int64_t> reg(t.num_classes(), 0);
  reg[0] = g->order() % t.p;
  for (int i = 0; i < t.num_rows(); ++i) {
    int64_t m = t.inner_product(reg, t.values[i]);
    CHECK(lift_small(m, t.lift_bound(), t.p) == t.degrees[i]);
  }
}

TEST_CASE("product table equals the table of the product group") {
  for (auto comp : std::vector<std::vector<int>>{{2, 1}, {1, 1}}) {
    for (int q : {2, 3}) {
      auto m = MatrixGroup::levi_product(comp, q);
      int64_t p = choose_prime(m->exponent(), m->order()).p;
      std::vector<CharTable> fts;
      for (const auto& f : m->factors()) fts.push_back(dixon_table(f, p));
      CharTable tensor = product_table(m, fts);
      CharTable direct = dixon_table(m, p);
      // same multiset of rows (the tensor keeps tuple order, dixon sorts)
      std::multiset<std::vector<int64_t>> rows_a(tensor.values.begin(), tensor.values.end());
      std::multiset<std::vector<int64_t>> rows_b(direct.values.begin(), direct.values.end());
      CHECK(rows_a == rows_b);
      std::multiset<int64_t> deg_a(tensor.degrees.begin(), tensor.degrees.end());
      std::multiset<int64_t> deg_b(direct.degrees.begin(), direct.degrees.end());
      CHECK(deg_a == deg_b);
    }
  }
}

TEST_CASE("kappa self-duality: contragredient = transpose-inverse twist") {
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(1, 3)));
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(2, 2)));
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(2, 3)));
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(2, 4)));
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(2, 5)));
  CHECK(kappa_selfduality_check(*MatrixGroup::general_linear(3, 3)));

  // character-level form: chi composed with kappa equals the contragredient
  auto g = MatrixGroup::general_linear(3, 3);
  CharTable t = dixon_table(g);
  const ConjClasses& cc = g->classes();
  for (int i = 0; i < t.num_rows(); ++i) {
    int dual = t.contragredient(i);
    for (int j = 0; j < t.num_classes(); ++j) {
      int kappa_class = cc.class_of[g->inv(g->transposed(cc.reps[j]))];
      CHECK(t.values[i][kappa_class] == t.values[dual][j]);
    }
  }
}

TEST_CASE("contragredient map is an involution matching inverse classes") {
  auto g = MatrixGroup::general_linear(2, 4);
  CharTable t = dixon_table(g);
  const ConjClasses& cc = g->classes();
  bool has_nonreal = false;
  for (int i = 0; i < t.num_rows(); ++i) {
    int dual = t.contragredient(i);
    CHECK(t.contragredient(dual) == i);
    if (dual != i) has_nonreal = true;
    for (int j = 0; j < t.num_classes(); ++j)
      CHECK(t.values[dual][j] == t.values[i][cc.inverse_map[j]]);
  }
  // GL_2(F_4) has non-self-dual characters; the map must be nontrivial.
  CHECK(has_nonreal);
}
