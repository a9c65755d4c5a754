#include "repcheck/jacquet.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace repcheck {

LeviContext make_levi_context(int q, const std::vector<int>& composition, int64_t prime_override,
                              const TableSource& source) {
  LeviContext cx;
  cx.q = q;
  cx.composition = composition;
  cx.N = 0;
  for (int c : composition) cx.N += c;
  cx.pd = parabolic(cx.N, q, composition);

  int64_t p = prime_override;
  if (p == 0) p = choose_prime(cx.pd.G->exponent(), cx.pd.G->order()).p;
  TableSource make = source;
  if (!make) make = [](std::shared_ptr<const Group> g, int64_t pr) { return dixon_table(g, pr); };

  cx.TG = make(cx.pd.G, p);
  if (cx.pd.M->factors().empty()) {
    cx.TM = cx.TG;  // trivial parabolic: M = G as the same group object
  } else {
    std::vector<CharTable> fts;
    for (const auto& f : cx.pd.M->factors()) fts.push_back(make(f, p));
    cx.TM = product_table(cx.pd.M, fts);
  }
  return cx;
}

std::vector<std::vector<int64_t>> class_distribution_MU(const LeviContext& cx) {
  const ConjClasses& gcc = cx.pd.G->classes();
  const ConjClasses& mcc = cx.pd.M->classes();
  int64_t pairs = cx.pd.order_M() * cx.pd.order_U();
  if (pairs > 1000000) {
    throw OrderBoundExceeded("class_distribution_MU: |M||U| = " + std::to_string(pairs));
  }
  std::vector<std::vector<int64_t>> ncount(gcc.num(), std::vector<int64_t>(mcc.num(), 0));
  for (EIdx mo = 0; mo < static_cast<EIdx>(cx.pd.order_M()); ++mo) {
    int b = mcc.class_of[mo];
    EIdx mg = cx.pd.M_in_G[mo];
    for (EIdx u : cx.pd.U_in_G) {
      ++ncount[gcc.class_of[cx.pd.G->mul(mg, u)]][b];
    }
  }
  return ncount;
}

std::vector<int64_t> u_invariant_dims(const LeviContext& cx) {
  const ConjClasses& gcc = cx.pd.G->classes();
  Fp fp{cx.prime()};
  std::vector<int64_t> ucount(gcc.num(), 0);
  for (EIdx u : cx.pd.U_in_G) ++ucount[gcc.class_of[u]];
  int64_t u_inv = fp.inv(fp.reduce(cx.pd.order_U()));
  std::vector<int64_t> dims;
  for (int i = 0; i < cx.TG.num_rows(); ++i) {
    int64_t sum = 0;
    for (int a = 0; a < gcc.num(); ++a)
      sum = fp.add(sum, fp.mul(fp.reduce(ucount[a]), cx.TG.values[i][a]));
    dims.push_back(lift_small(fp.mul(sum, u_inv), cx.TG.degrees[i], cx.prime()));
  }
  return dims;
}

namespace {

MultiplicityReport make_report(const LeviContext& cx, std::string method,
                               std::vector<std::vector<int64_t>> m) {
  MultiplicityReport rep;
  rep.q = cx.q;
  rep.N = cx.N;
  rep.composition = cx.composition;
  rep.prime = cx.prime();
  rep.method = std::move(method);
  rep.m = std::move(m);
  for (size_t i = 0; i < rep.m.size(); ++i) {
    for (size_t j = 0; j < rep.m[i].size(); ++j) {
      if (rep.m[i][j] > rep.max_multiplicity) {
        rep.max_multiplicity = rep.m[i][j];
        rep.argmax_row = static_cast<int>(i);
        rep.argmax_col = static_cast<int>(j);
      }
    }
  }
  return rep;
}

}  // namespace

MultiplicityReport jacquet_multiplicities(const LeviContext& cx) {
  auto ncount = class_distribution_MU(cx);
  const ConjClasses& mcc = cx.pd.M->classes();
  Fp fp{cx.prime()};
  int64_t norm = fp.inv(fp.reduce(cx.pd.order_M() % cx.prime() * (cx.pd.order_U() % cx.prime())));
  int64_t bound = cx.TG.lift_bound();
  int rG = cx.TG.num_rows(), rM = cx.TM.num_rows();
  std::vector<std::vector<int64_t>> m(rG, std::vector<int64_t>(rM, 0));
  for (int i = 0; i < rG; ++i) {
    for (int j = 0; j < rM; ++j) {
      int64_t sum = 0;
      for (size_t a = 0; a < ncount.size(); ++a) {
        for (size_t b = 0; b < ncount[a].size(); ++b) {
          if (!ncount[a][b]) continue;
          int64_t term = fp.mul(fp.reduce(ncount[a][b]), cx.TG.values[i][a]);
          sum = fp.add(sum, fp.mul(term, cx.TM.values[j][mcc.inverse_map[b]]));
        }
      }
      m[i][j] = lift_small(fp.mul(sum, norm), bound, cx.prime());
    }
  }
  return make_report(cx, "jacquet-sum", std::move(m));
}

int64_t hom_P_dimension(const LeviContext& cx, int i, int j) {
  auto ncount = class_distribution_MU(cx);
  Fp fp{cx.prime()};
  int64_t norm = fp.inv(fp.reduce(cx.pd.order_M() % cx.prime() * (cx.pd.order_U() % cx.prime())));
  int64_t sum = 0;
  for (size_t a = 0; a < ncount.size(); ++a) {
    for (size_t b = 0; b < ncount[a].size(); ++b) {
      if (!ncount[a][b]) continue;
      int64_t term = fp.mul(fp.reduce(ncount[a][b]), cx.TG.values[i][a]);
      sum = fp.add(sum, fp.mul(term, cx.TM.values[j][b]));
    }
  }
  return lift_small(fp.mul(sum, norm), cx.TG.lift_bound(), cx.prime());
}

MultiplicityReport hom_P_matrix(const LeviContext& cx) {
  auto ncount = class_distribution_MU(cx);
  Fp fp{cx.prime()};
  int64_t norm = fp.inv(fp.reduce(cx.pd.order_M() % cx.prime() * (cx.pd.order_U() % cx.prime())));
  int64_t bound = cx.TG.lift_bound();
  int rG = cx.TG.num_rows(), rM = cx.TM.num_rows();
  std::vector<std::vector<int64_t>> m(rG, std::vector<int64_t>(rM, 0));
  for (int i = 0; i < rG; ++i) {
    for (int j = 0; j < rM; ++j) {
      int64_t sum = 0;
      for (size_t a = 0; a < ncount.size(); ++a) {
        for (size_t b = 0; b < ncount[a].size(); ++b) {
          if (!ncount[a][b]) continue;
          int64_t term = fp.mul(fp.reduce(ncount[a][b]), cx.TG.values[i][a]);
          sum = fp.add(sum, fp.mul(term, cx.TM.values[j][b]));
        }
      }
      m[i][j] = lift_small(fp.mul(sum, norm), bound, cx.prime());
    }
  }
  return make_report(cx, "hom-P", std::move(m));
}

Mat coset_canonical(const ParabolicData& pd, const Mat& x) {
  const std::vector<int>& comp = pd.composition;
  const Field& f = x.field();
  Mat canon = x;
  int col_off = comp[0];
  for (size_t t = 1; t < comp.size(); ++t) {
    // Reduce block-t columns modulo the span of all earlier columns.
    Mat earlier = mat_block(canon, 0, 0, canon.rows(), col_off);
    std::vector<Mat> basis = mat_column_space(earlier);
    std::vector<int> pivot_row;
    for (const Mat& v : basis) {
      int r = 0;
      while (v.at(r, 0) == 0) ++r;
      pivot_row.push_back(r);
    }
    for (int c = col_off; c < col_off + comp[t]; ++c) {
      for (size_t k = 0; k < basis.size(); ++k) {
        uint8_t coef = canon.at(pivot_row[k], c);
        if (!coef) continue;
        for (int r = 0; r < canon.rows(); ++r)
          canon.set(r, c, f.sub(canon.at(r, c), f.mul(coef, basis[k].at(r, 0))));
      }
    }
    col_off += comp[t];
  }
  return canon;
}

namespace {

struct CosetTable {
  std::vector<Mat> reps;
  std::unordered_map<std::string, int32_t> index;
};

CosetTable build_coset_table(const ParabolicData& pd) {
  CosetTable ct;
  for (EIdx g = 0; g < static_cast<EIdx>(pd.G->order()); ++g) {
    Mat canon = coset_canonical(pd, pd.G->element(g));
    std::string key = canon.encode();
    auto [it, fresh] = ct.index.emplace(key, static_cast<int32_t>(ct.reps.size()));
    if (fresh) ct.reps.push_back(std::move(canon));
    (void)it;
  }
  assert(static_cast<int64_t>(ct.reps.size()) == pd.G->order() / pd.order_U());
  return ct;
}

}  // namespace

MultiplicityReport perm_module_multiplicities(const LeviContext& cx) {
  const ConjClasses& gcc = cx.pd.G->classes();
  const ConjClasses& mcc = cx.pd.M->classes();
  CosetTable ct = build_coset_table(cx.pd);
  Fp fp{cx.prime()};

  // fix(a,c) = #{xU : rep_a x rep_c^{-1} in xU}
  std::vector<std::vector<int64_t>> fix(gcc.num(), std::vector<int64_t>(mcc.num(), 0));
  for (int a = 0; a < gcc.num(); ++a) {
    const Mat& ga = cx.pd.G->element(gcc.reps[a]);
    for (int c = 0; c < mcc.num(); ++c) {
      EIdx mg = cx.pd.M_in_G[mcc.reps[c]];
      const Mat& mc_inv = cx.pd.G->element(cx.pd.G->inv(mg));
      int64_t count = 0;
      for (size_t xi = 0; xi < ct.reps.size(); ++xi) {
        Mat moved = mat_mul(mat_mul(ga, ct.reps[xi]), mc_inv);
        if (ct.index.at(coset_canonical(cx.pd, moved).encode()) == static_cast<int32_t>(xi))
          ++count;
      }
      fix[a][c] = count;
    }
  }

  int64_t gm = fp.mul(fp.reduce(cx.pd.G->order()), fp.reduce(cx.pd.order_M()));
  int64_t norm = fp.inv(gm);
  int64_t bound = cx.TG.lift_bound();
  int rG = cx.TG.num_rows(), rM = cx.TM.num_rows();
  std::vector<std::vector<int64_t>> m(rG, std::vector<int64_t>(rM, 0));
  for (int i = 0; i < rG; ++i) {
    for (int j = 0; j < rM; ++j) {
      int64_t sum = 0;
      for (int a = 0; a < gcc.num(); ++a) {
        for (int c = 0; c < mcc.num(); ++c) {
          if (!fix[a][c]) continue;
          int64_t weight = fp.mul(fp.reduce(gcc.sizes[a]), fp.reduce(mcc.sizes[c]));
          weight = fp.mul(weight, fp.reduce(fix[a][c]));
          int64_t chars = fp.mul(cx.TG.values[i][gcc.inverse_map[a]],
                                 cx.TM.values[j][mcc.inverse_map[c]]);
          sum = fp.add(sum, fp.mul(weight, chars));
        }
      }
      m[i][j] = lift_small(fp.mul(sum, norm), bound, cx.prime());
    }
  }
  return make_report(cx, "perm-module", std::move(m));
}

bool mass_identity_holds(const LeviContext& cx, const MultiplicityReport& rep) {
  std::vector<int64_t> dims = u_invariant_dims(cx);
  for (int i = 0; i < cx.TG.num_rows(); ++i) {
    int64_t mass = 0;
    for (int j = 0; j < cx.TM.num_rows(); ++j) mass += rep.m[i][j] * cx.TM.degrees[j];
    if (mass != dims[i]) return false;
  }
  return true;
}

ThreeWayReport three_way_check(const LeviContext& cx) {
  ThreeWayReport out;
  out.jac = jacquet_multiplicities(cx);
  out.perm = perm_module_multiplicities(cx);
  out.homp = hom_P_matrix(cx);
  out.matched_equal = true;
  out.literal_equal = true;
  for (int i = 0; i < cx.TG.num_rows() && out.matched_equal; ++i) {
    int idual = cx.TG.contragredient(i);
    for (int j = 0; j < cx.TM.num_rows(); ++j) {
      int jdual = cx.TM.contragredient(j);
      bool ok = out.jac.m[i][j] == out.perm.m[idual][j] &&
                out.jac.m[i][j] == out.homp.m[i][jdual];
      if (!ok) {
        out.matched_equal = false;
        out.mismatch_row = i;
        out.mismatch_col = j;
        break;
      }
    }
  }
  for (int i = 0; i < cx.TG.num_rows() && out.literal_equal; ++i) {
    int idual = cx.TG.contragredient(i);
    for (int j = 0; j < cx.TM.num_rows(); ++j) {
      int jdual = cx.TM.contragredient(j);
      if (out.jac.m[i][j] != out.perm.m[i][j] ||
          out.jac.m[i][j] != out.homp.m[idual][jdual]) {
        out.literal_equal = false;
        break;
      }
    }
  }
  return out;
}

TheoremAReport verify_theorem_A(int q, int n, int k, int64_t prime_override,
                                const TableSource& source) {
  LeviContext cx = make_levi_context(q, {n, k}, prime_override, source);
  TheoremAReport rep;
  rep.report = jacquet_multiplicities(cx);
  rep.pass = rep.report.max_multiplicity <= 1;
  return rep;
}

TheoremGLReport verify_theorem_GL(int q, int n, int64_t prime_override,
                                  const TableSource& source) {
  LeviContext cx = make_levi_context(q, {n, 1}, prime_override, source);
  TheoremGLReport rep;
  rep.q = q;
  rep.n = n;

  // H = GL_n as the first Levi block; Ncount over (h, u) pairs.
  auto H = cx.pd.M->factors()[0];
  CharTable TH = source ? source(H, cx.prime()) : dixon_table(H, cx.prime());
  const ConjClasses& gcc = cx.pd.G->classes();
  const ConjClasses& hcc = H->classes();
  const Field& f = Field::get(q);

  std::vector<std::vector<int64_t>> ncount(gcc.num(), std::vector<int64_t>(hcc.num(), 0));
  for (EIdx h = 0; h < static_cast<EIdx>(H->order()); ++h) {
    Mat embedded = Mat::identity(f, cx.N);
    const Mat& hm = H->element(h);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) embedded.set(r, c, hm.at(r, c));
    EIdx hg = cx.pd.G->index_of(embedded);
    int b = hcc.class_of[h];
    for (EIdx u : cx.pd.U_in_G) ++ncount[gcc.class_of[cx.pd.G->mul(hg, u)]][b];
  }

  Fp fp{cx.prime()};
  int64_t norm = fp.inv(fp.mul(fp.reduce(H->order()), fp.reduce(cx.pd.order_U())));
  int64_t bound = cx.TG.lift_bound();
  rep.mH.assign(cx.TG.num_rows(), std::vector<int64_t>(TH.num_rows(), 0));
  for (int i = 0; i < cx.TG.num_rows(); ++i) {
    for (int s = 0; s < TH.num_rows(); ++s) {
      int64_t sum = 0;
      for (int a = 0; a < gcc.num(); ++a) {
        for (int b = 0; b < hcc.num(); ++b) {
          if (!ncount[a][b]) continue;
          int64_t term = fp.mul(fp.reduce(ncount[a][b]), cx.TG.values[i][a]);
          sum = fp.add(sum, fp.mul(term, TH.values[s][hcc.inverse_map[b]]));
        }
      }
      rep.mH[i][s] = lift_small(fp.mul(sum, norm), bound, cx.prime());
      rep.max_multiplicity = std::max(rep.max_multiplicity, rep.mH[i][s]);
    }
  }
  rep.pass = rep.max_multiplicity <= 1;

  // Data-level identity: m_H(pi, sigma) = sum_chi m(pi, sigma (x) chi).
  MultiplicityReport levi = jacquet_multiplicities(cx);
  int chi_count = cx.pd.M->factors()[1]->classes().num();  // abelian GL_1
  rep.sum_identity = true;
  for (int i = 0; i < cx.TG.num_rows() && rep.sum_identity; ++i) {
    for (int s = 0; s < TH.num_rows(); ++s) {
      int64_t total = 0;
      for (int chi = 0; chi < chi_count; ++chi) total += levi.m[i][s * chi_count + chi];
      if (total != rep.mH[i][s]) {
        rep.sum_identity = false;
        break;
      }
    }
  }
  return rep;
}

std::optional<CounterexampleEntry> counterexample_search(const MultiplicityReport& rep) {
  for (size_t i = 0; i < rep.m.size(); ++i)
    for (size_t j = 0; j < rep.m[i].size(); ++j)
      if (rep.m[i][j] >= 2) return CounterexampleEntry{static_cast<int>(i),
                                                       static_cast<int>(j), rep.m[i][j]};
  return std::nullopt;
}

namespace {

struct PairOps {
  const MatrixGroup* G;
  const MatrixGroup* M;
  int64_t nM;
  int64_t mul(int64_t a, int64_t b) const {
    return static_cast<int64_t>(G->mul(static_cast<EIdx>(a / nM), static_cast<EIdx>(b / nM))) *
               nM +
           M->mul(static_cast<EIdx>(a % nM), static_cast<EIdx>(b % nM));
  }
  int64_t inv(int64_t a) const {
    return static_cast<int64_t>(G->inv(static_cast<EIdx>(a / nM))) * nM +
           M->inv(static_cast<EIdx>(a % nM));
  }
};

}  // namespace

HeckeCheckReport hecke_commutativity_levi(const LeviContext& cx, int64_t basis_bound) {
  const MatrixGroup& G = *cx.pd.G;
  const MatrixGroup& M = *cx.pd.M;
  int64_t nG = G.order(), nM = M.order();
  int64_t total = nG * nM;
  if (total > 8000000) {
    throw OrderBoundExceeded("hecke_commutativity: |G x M| = " + std::to_string(total));
  }
  PairOps ops{&G, &M, nM};

  // Diagonal embedding p -> (p, levi(p)); orbit moves are two-sided
  // multiplications by the generators and their inverses.
  std::vector<std::pair<EIdx, EIdx>> gens;
  for (EIdx p : cx.pd.generators()) {
    EIdx lp = cx.pd.m_ordinal(cx.pd.levi_part(p));
    gens.emplace_back(p, lp);
    gens.emplace_back(G.inv(p), M.inv(lp));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<int32_t> part(total, -1);
  std::vector<int64_t> reps;
  std::vector<int64_t> stack;
  for (int64_t seed = 0; seed < total; ++seed) {
    if (part[seed] >= 0) continue;
    int32_t cls = static_cast<int32_t>(reps.size());
    reps.push_back(seed);
    part[seed] = cls;
    stack.push_back(seed);
    while (!stack.empty()) {
      int64_t x = stack.back();
      stack.pop_back();
      EIdx xg = static_cast<EIdx>(x / nM), xm = static_cast<EIdx>(x % nM);
      for (const auto& [pg, pm] : gens) {
        int64_t left = static_cast<int64_t>(G.mul(pg, xg)) * nM + M.mul(pm, xm);
        if (part[left] < 0) {
          part[left] = cls;
          stack.push_back(left);
        }
        int64_t right = static_cast<int64_t>(G.mul(xg, pg)) * nM + M.mul(xm, pm);
        if (part[right] < 0) {
          part[right] = cls;
          stack.push_back(right);
        }
      }
    }
  }
  return hecke_commutes(ops, part, reps, basis_bound);
}

std::vector<std::pair<int, std::vector<int>>> configuration_matrix() {
  std::vector<std::pair<int, std::vector<int>>> configs;
  auto add_compositions = [&](int q, int N) {
    // all compositions of N, lexicographic
    std::vector<std::vector<int>> comps;
    std::function<void(int, std::vector<int>&)> rec = [&](int rem, std::vector<int>& cur) {
      if (rem == 0) {
        comps.push_back(cur);
        return;
      }
      for (int part = 1; part <= rem; ++part) {
        cur.push_back(part);
        rec(rem - part, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(N, cur);
    for (auto& c : comps) configs.emplace_back(q, c);
  };
  for (int N = 2; N <= 4; ++N) add_compositions(2, N);
  for (int N = 2; N <= 3; ++N) add_compositions(3, N);
  return configs;
}

std::vector<std::tuple<int, int, int>> theorem_A_configurations() {
  return {{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 3, 1}, {2, 1, 3}, {2, 2, 2},
          {3, 1, 1}, {3, 2, 1}, {3, 1, 2}};
}

}  // namespace repcheck
