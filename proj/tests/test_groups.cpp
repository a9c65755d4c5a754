#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "repcheck/group.hpp"

using namespace repcheck;

TEST_CASE("enumerate GL(n,2): orders match the product formula") {
  CHECK(MatrixGroup::general_linear(1, 2)->order() == 1);
  CHECK(MatrixGroup::general_linear(2, 2)->order() == 6);
  CHECK(MatrixGroup::general_linear(3, 2)->order() == 168);
  CHECK(MatrixGroup::general_linear(4, 2)->order() == 20160);
  CHECK(MatrixGroup::general_linear(2, 3)->order() == 48);
  CHECK(MatrixGroup::general_linear(3, 3)->order() == 11232);
  CHECK(MatrixGroup::general_linear(2, 4)->order() == 180);
}

TEST_CASE("order bound rejects GL_4(F_3)") {
  CHECK_THROWS_AS(MatrixGroup::general_linear(4, 3), OrderBoundExceeded);
  CHECK_THROWS_AS(SymmetricGroup::make(9), OrderBoundExceeded);
}

TEST_CASE("group laws and element indexing on samples") {
  std::mt19937 rng(31);
  auto check_group = [&](const Group& g) {
    int64_t n = g.order();
    for (int trial = 0; trial < 200; ++trial) {
      EIdx a = static_cast<EIdx>(rng() % n);
      EIdx b = static_cast<EIdx>(rng() % n);
      EIdx c = static_cast<EIdx>(rng() % n);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.mul(a, g.id()) == a);
      CHECK(g.mul(g.id(), a) == a);
      CHECK(g.mul(a, g.inv(a)) == g.id());
    }
  };
  check_group(*MatrixGroup::general_linear(3, 2));
  check_group(*MatrixGroup::general_linear(2, 3));
  check_group(*MatrixGroup::general_linear(2, 4));
  check_group(*MatrixGroup::levi_product({2, 1}, 2));
  check_group(*SymmetricGroup::make(5));
}

TEST_CASE("conjugacy classes of GL(2,2): sizes {1,3,2}") {
  auto g = MatrixGroup::general_linear(2, 2);
  const ConjClasses& cc = g->classes();
  REQUIRE(cc.num() == 3);
  CHECK(cc.sizes[0] == 1);
  std::multiset<int64_t> sizes(cc.sizes.begin(), cc.sizes.end());
  CHECK(sizes == std::multiset<int64_t>({1, 3, 2}));
  // brute-force conjugation-orbit oracle on all 6 elements
  auto oracle = conjugacy_partition_bfs(*g);
  for (EIdx a = 0; a < 6; ++a)
    for (EIdx b = 0; b < 6; ++b)
      CHECK((cc.class_of[a] == cc.class_of[b]) == (oracle[a] == oracle[b]));
}

TEST_CASE("conjugacy classes: GL(3,2) has 6, GL(3,3) has 24, GL(2,4) has 15") {
  auto g32 = MatrixGroup::general_linear(3, 2);
  CHECK(g32->classes().num() == 6);
  CHECK(std::accumulate(g32->classes().sizes.begin(), g32->classes().sizes.end(), int64_t{0}) ==
        168);
  CHECK(MatrixGroup::general_linear(3, 3)->classes().num() == 24);
  // #classes of GL_2(F_q) = q^2 - 1
  CHECK(MatrixGroup::general_linear(2, 4)->classes().num() == 15);
  CHECK(MatrixGroup::general_linear(2, 3)->classes().num() == 8);
}

TEST_CASE("S_3 classes are the three cycle types") {
  auto s3 = SymmetricGroup::make(3);
  const ConjClasses& cc = s3->classes();
  REQUIRE(cc.num() == 3);
  CHECK(cc.sizes[0] == 1);
  CHECK(cc.class_of[s3->id()] == 0);
  std::multiset<int64_t> sizes(cc.sizes.begin(), cc.sizes.end());
  CHECK(sizes == std::multiset<int64_t>({1, 3, 2}));
}

TEST_CASE("class identification agrees with BFS orbits on groups below 5000") {
  std::vector<std::shared_ptr<Group>> groups = {
      MatrixGroup::general_linear(2, 2), MatrixGroup::general_linear(3, 2),
      MatrixGroup::general_linear(2, 3), MatrixGroup::general_linear(2, 4),
      MatrixGroup::general_linear(2, 5), MatrixGroup::levi_product({2, 1}, 2),
      MatrixGroup::levi_product({1, 1}, 3), SymmetricGroup::make(5),
      SymmetricGroup::make(6)};
  for (const auto& g : groups) {
    REQUIRE(g->order() <= 5000);
    auto oracle = conjugacy_partition_bfs(*g);
    const ConjClasses& cc = g->classes();
    std::map<int32_t, int32_t> seen;
    for (EIdx a = 0; a < g->order(); ++a) {
      auto [it, fresh] = seen.emplace(oracle[a], cc.class_of[a]);
      CHECK(it->second == cc.class_of[a]);
    }
    CHECK(seen.size() == static_cast<size_t>(cc.num()));
  }
}

TEST_CASE("identify is conjugation invariant for random h") {
  std::mt19937 rng(88);
  for (auto g : {MatrixGroup::general_linear(3, 2), MatrixGroup::general_linear(3, 3)}) {
    const ConjClasses& cc = g->classes();
    for (int j = 0; j < cc.num(); ++j) {
      CHECK(cc.class_of[cc.reps[j]] == j);
      for (int trial = 0; trial < 10; ++trial) {
        EIdx h = static_cast<EIdx>(rng() % g->order());
        CHECK(cc.class_of[g->mul(g->mul(h, cc.reps[j]), g->inv(h))] == j);
      }
    }
  }
}

TEST_CASE("inverse_map is an involution preserving sizes") {
  for (auto g : {MatrixGroup::general_linear(3, 2), MatrixGroup::general_linear(2, 3)}) {
    const ConjClasses& cc = g->classes();
    for (int j = 0; j < cc.num(); ++j) {
      CHECK(cc.inverse_map[cc.inverse_map[j]] == j);
      CHECK(cc.sizes[cc.inverse_map[j]] == cc.sizes[j]);
    }
  }
}

TEST_CASE("transpose preserves GL conjugacy classes elementwise") {
  for (auto g : {MatrixGroup::general_linear(3, 2), MatrixGroup::general_linear(2, 3),
                 MatrixGroup::general_linear(2, 4)}) {
    const ConjClasses& cc = g->classes();
    for (EIdx a = 0; a < g->order(); ++a) {
      CHECK(cc.class_of[g->transposed(a)] == cc.class_of[a]);
    }
  }
}

TEST_CASE("class constants") {
  SUBCASE("identity class convolves as the identity") {
    auto g = MatrixGroup::general_linear(3, 2);
    int r = g->classes().num();
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) CHECK(class_constant(*g, 0, j, k) == (j == k ? 1 : 0));
  }

  SUBCASE("S_3 against the full 36-pair multiplication oracle") {
    auto s3 = SymmetricGroup::make(3);
    const ConjClasses& cc = s3->classes();
    int r = cc.num();
    // oracle: count products directly
    std::vector<std::vector<std::vector<int64_t>>> oracle(
        r, std::vector<std::vector<int64_t>>(r, std::vector<int64_t>(r, 0)));
    for (EIdx x = 0; x < 6; ++x) {
      for (EIdx y = 0; y < 6; ++y) {
        EIdx z = s3->mul(x, y);
        // count once per (i,j,k-class) with z a fixed representative:
        if (z == cc.reps[cc.class_of[z]])
          oracle[cc.class_of[x]][cc.class_of[y]][cc.class_of[z]]++;
      }
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) CHECK(class_constant(*s3, i, j, k) == oracle[i][j][k]);
  }

  SUBCASE("mass identity on a class matrix") {
    auto g = MatrixGroup::general_linear(2, 3);
    const ConjClasses& cc = g->classes();
    for (int i = 0; i < cc.num(); ++i) {
      auto m = class_matrix(*g, i);  // internally asserts the counting identity
      for (int j = 0; j < cc.num(); ++j) {
        int64_t total = 0;
        for (int k = 0; k < cc.num(); ++k) total += m[j][k] * cc.sizes[k];
        CHECK(total == cc.sizes[i] * cc.sizes[j]);
      }
    }
  }
}

TEST_CASE("exponent examples") {
  CHECK(MatrixGroup::general_linear(2, 2)->exponent() == 6);
  CHECK(MatrixGroup::general_linear(3, 2)->exponent() == 84);
  CHECK(MatrixGroup::general_linear(1, 2)->exponent() == 1);
  CHECK(SymmetricGroup::make(3)->exponent() == 6);
}

TEST_CASE("parabolic examples and invariants") {
  SUBCASE("N=2 q=2 (1,1)") {
    auto pd = parabolic(2, 2, {1, 1});
    CHECK(pd.order_M() == 1);
    CHECK(pd.order_U() == 2);
    CHECK(pd.order_P() == 2);
  }
  SUBCASE("N=3 q=2 (2,1)") {
    auto pd = parabolic(3, 2, {2, 1});
    CHECK(pd.order_M() == 6);
    CHECK(pd.order_U() == 4);
    CHECK(pd.order_P() == 24);
  }
  SUBCASE("N=4 q=2 (2,2)") {
    auto pd = parabolic(4, 2, {2, 2});
    CHECK(pd.order_M() == 36);
    CHECK(pd.order_U() == 16);
    CHECK(pd.order_P() == 576);
  }

  SUBCASE("levi_part is a homomorphism and unique factorization p = m u") {
    for (auto comp : std::vector<std::vector<int>>{{2, 1}, {1, 1, 1}, {1, 2}}) {
      int N = 0;
      for (int c : comp) N += c;
      auto pd = parabolic(N, 2, comp);
      REQUIRE(pd.order_P() <= 10000);
      // unique factorization: for each p, levi_part(p) in M and
      // levi_part(p)^{-1} p in U
      for (EIdx p : pd.P_in_G) {
        EIdx m = pd.levi_part(p);
        CHECK(pd.in_M(m));
        EIdx u = pd.G->mul(pd.G->inv(m), p);
        CHECK(pd.in_U(u));
      }
      // homomorphism on all of P x P (|P| <= 10^4)
      for (EIdx p1 : pd.P_in_G) {
        for (EIdx p2 : pd.P_in_G) {
          CHECK(pd.levi_part(pd.G->mul(p1, p2)) ==
                pd.G->mul(pd.levi_part(p1), pd.levi_part(p2)));
        }
      }
    }
  }

  SUBCASE("M normalizes U (checked on generators)") {
    auto pd = parabolic(3, 3, {2, 1});
    for (EIdx m : pd.M_in_G) {
      for (EIdx g : pd.generators()) {
        if (!pd.in_U(g)) continue;
        CHECK(pd.in_U(pd.G->mul(pd.G->mul(m, g), pd.G->inv(m))));
      }
    }
  }
}

TEST_CASE("gl_generators generate the whole group") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    auto g = MatrixGroup::general_linear(n, q);
    std::vector<EIdx> gens;
    for (const Mat& m : gl_generators(n, q)) gens.push_back(g->index_of(m));
    std::vector<bool> seen(g->order(), false);
    std::vector<EIdx> stack = {g->id()};
    seen[g->id()] = true;
    int64_t count = 1;
    while (!stack.empty()) {
      EIdx x = stack.back();
      stack.pop_back();
      for (EIdx gen : gens) {
        EIdx y = g->mul(x, gen);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    CHECK(count == g->order());
  }
}

TEST_CASE("explicit subgroup classes via conjugation sweep") {
  // U of the Borel of GL_3(2) as an explicit subgroup (order 8, dihedral).
  auto pd = parabolic(3, 2, {1, 1, 1});
  auto u = std::make_shared<ExplicitSubgroup>(pd.G, pd.U_in_G, "sub:borel-u:gl3q2");
  CHECK(u->order() == 8);
  const ConjClasses& cc = u->classes();
  CHECK(cc.class_of[u->id()] == 0);
  CHECK(std::accumulate(cc.sizes.begin(), cc.sizes.end(), int64_t{0}) == 8);
  // D_4 has 5 conjugacy classes
  CHECK(cc.num() == 5);
}
