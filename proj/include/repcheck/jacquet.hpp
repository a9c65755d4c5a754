#ifndef REPCHECK_JACQUET_HPP
#define REPCHECK_JACQUET_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repcheck/chartab.hpp"
#include "repcheck/group.hpp"
#include "repcheck/hecke.hpp"

namespace repcheck {

/// Everything one configuration (q, composition of N) needs: the ambient
/// group, the parabolic data, and the two character tables at one shared
/// prime chosen from exp(G).
struct LeviContext {
  int q = 0;
  int N = 0;
  std::vector<int> composition;
  ParabolicData pd;
  CharTable TG;
  CharTable TM;

  int64_t prime() const { return TG.p; }
  int num_G_irreps() const { return TG.num_rows(); }
  int num_M_irreps() const { return TM.num_rows(); }
};

using TableSource = std::function<CharTable(std::shared_ptr<const Group>, int64_t)>;

LeviContext make_levi_context(int q, const std::vector<int>& composition,
                              int64_t prime_override = 0, const TableSource& source = {});

/// Multiplicity matrix with provenance.  Rows are G-irreps, columns M-irreps,
/// both in the canonical table order.
struct MultiplicityReport {
  int q = 0;
  int N = 0;
  std::vector<int> composition;
  int64_t prime = 0;
  std::string method;  // "jacquet-sum" | "hom-P" | "perm-module"
  std::vector<std::vector<int64_t>> m;
  int64_t max_multiplicity = 0;
  int argmax_row = -1, argmax_col = -1;
};

/// Ncount[a][b] = #{(m,u) in M x U : class_G(m u) = a, class_M(m) = b}.
std::vector<std::vector<int64_t>> class_distribution_MU(const LeviContext& cx);

/// dim of the U-fixed space of each G-irrep: lift(|U|^{-1} sum_u chi_i(u)).
std::vector<int64_t> u_invariant_dims(const LeviContext& cx);

/// m[i][j] = dim Hom_M(pi_i^U, rho_j), via the projector character sum
/// (|M||U|)^{-1} sum Ncount[a][b] T_G[i][a] T_M[j][b*].
MultiplicityReport jacquet_multiplicities(const LeviContext& cx);

/// dim of the P-invariants of pi_i (x) rho_j, P embedded diagonally by
/// p -> (p, levi(p)): |P|^{-1} sum_p chi_i(p) chi_j(levi(p)).
int64_t hom_P_dimension(const LeviContext& cx, int i, int j);
MultiplicityReport hom_P_matrix(const LeviContext& cx);

/// Multiplicity of pi_i (x) rho_j in the permutation module on G/U under
/// (g,m)[x] = [g x m^{-1}], via fixed-point counts.
MultiplicityReport perm_module_multiplicities(const LeviContext& cx);

/// Canonical representative of the coset x U (block-column reduction).
Mat coset_canonical(const ParabolicData& pd, const Mat& x);

/// Row mass: sum_j m[i][j] deg_M(j) must equal dim pi_i^U for every i.
bool mass_identity_holds(const LeviContext& cx, const MultiplicityReport& rep);

/// The three multiplicity formulas agree entrywise once rows/columns are
/// matched through contragredients:
///   jac[i][j] == perm[contra_G(i)][j] == homP[i][contra_M(j)].
/// `literal_equal` additionally records whether the same-index variants
/// jac == perm and jac[i][j] == homP[contra_G(i)][contra_M(j)] hold; that
/// stronger form fails exactly on configurations whose tables contain
/// non-self-dual characters (the matrices then differ by the contragredient
/// row permutation).
struct ThreeWayReport {
  bool matched_equal = false;
  bool literal_equal = false;
  int mismatch_row = -1, mismatch_col = -1;  // first matched-form mismatch
  MultiplicityReport jac, perm, homp;
};
ThreeWayReport three_way_check(const LeviContext& cx);

struct TheoremAReport {
  bool pass = false;
  MultiplicityReport report;
};
TheoremAReport verify_theorem_A(int q, int n, int k, int64_t prime_override = 0,
                                const TableSource& source = {});

/// k = 1 statement for H = GL_n standardly embedded, plus the exact identity
/// m_H(pi, sigma) = sum over GL_1-characters chi of m(pi, sigma (x) chi).
struct TheoremGLReport {
  int q = 0, n = 0;
  bool pass = false;           // all m_H <= 1
  bool sum_identity = false;   // data-level reduction to the Levi statement
  int64_t max_multiplicity = 0;
  std::vector<std::vector<int64_t>> mH;
};
TheoremGLReport verify_theorem_GL(int q, int n, int64_t prime_override = 0,
                                  const TableSource& source = {});

/// First multiplicity entry >= 2 in row order, if any.
struct CounterexampleEntry {
  int row, col;
  int64_t value;
};
std::optional<CounterexampleEntry> counterexample_search(const MultiplicityReport& rep);

/// Commutativity of the double-coset convolution algebra of P diagonally
/// embedded in G x M (p -> (p, levi p)).  Exact integer convolution over the
/// coset basis computed by orbit BFS.
HeckeCheckReport hecke_commutativity_levi(const LeviContext& cx, int64_t basis_bound = 500);

/// The fixed configuration matrix every sweep uses: q = 2 with N <= 4 and
/// q = 3 with N <= 3, all compositions.
std::vector<std::pair<int, std::vector<int>>> configuration_matrix();

/// Maximal-Levi configurations of the acceptance sweep.
std::vector<std::tuple<int, int, int>> theorem_A_configurations();  // (q, n, k)

}  // namespace repcheck

#endif
