#ifndef REPCHECK_CHARTAB_HPP
#define REPCHECK_CHARTAB_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "repcheck/errors.hpp"
#include "repcheck/group.hpp"

namespace repcheck {

// Character tables with all values represented in a prime field F_p, where
// p = 1 (mod exp(G)) and p > 2*ceil(sqrt(|G|)).  With such a prime every
// quantity this project needs (degrees, multiplicities, dimensions of
// invariants) is a small nonnegative integer determined by its residue, so
// no cyclotomic arithmetic is ever required.  Tables are produced by the
// class-matrix eigenvector method: the scaled columns w(i) = |C_i| chi(i)/d
// are the common eigenvectors of the class matrices over F_p.

/// Arithmetic mod a runtime prime p < 10^7.
struct Fp {
  int64_t p;
  int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
  int64_t sub(int64_t a, int64_t b) const { return (a - b % p + p) % p; }
  int64_t mul(int64_t a, int64_t b) const { return (a * b) % p; }
  int64_t pow(int64_t a, int64_t e) const;
  int64_t inv(int64_t a) const { return pow(((a % p) + p) % p, p - 2); }
  int64_t reduce(int64_t a) const { return ((a % p) + p) % p; }
};

/// Smallest prime p with p = 1 (mod e) and p > 2*ceil(sqrt(order)), together
/// with omega = (smallest primitive root)^((p-1)/e), an element of order e.
/// The search is capped at 10^7.
struct PrimeChoice {
  int64_t p;
  int64_t omega;
};
PrimeChoice choose_prime(int64_t e, int64_t order);

/// The unique representative of x in [0, bound]; throws LiftOutOfRange when
/// the residue has no representative there (i.e. the true integer violated
/// its a-priori bound, which is a correctness failure worth surfacing).
int64_t lift_small(int64_t x, int64_t bound, int64_t p);

class CharTable {
 public:
  std::shared_ptr<const Group> group;
  int64_t p = 0;
  int64_t omega = 0;  // fixed element of multiplicative order e
  int64_t e = 0;      // exponent of the group
  std::vector<int64_t> degrees;               // exact integers
  std::vector<std::vector<int64_t>> values;   // rows: irreps, cols: classes, residues mod p

  int num_rows() const { return static_cast<int>(values.size()); }
  int num_classes() const { return group ? group->classes().num() : 0; }

  /// Row index of the contragredient character (values at inverse classes).
  int contragredient(int i) const { return contra_[i]; }

  /// <u, v> = |G|^{-1} sum_j |C_j| u[j] v[j*]  (mod p).
  int64_t inner_product(const std::vector<int64_t>& u, const std::vector<int64_t>& v) const;

  /// Multiplicity bound used by all lifts from this table: floor(sqrt(|G|)).
  int64_t lift_bound() const;

  /// Validation of the defining identities: row/column orthogonality mod p,
  /// degree-square sum, degrees dividing the order.  Throws on violation.
  void validate() const;

  std::vector<int> contra_;
  void compute_contragredients();
};

/// Character table by class-matrix eigenspace splitting.  Deterministic:
/// class matrices are consumed in ascending index, eigenvalues in ascending
/// residue, and finished rows are sorted by (degree, eigenvalue-multiplicity
/// signature), a prime-independent total order (two admissible primes yield
/// rows in identical order, making every lifted integer reproducible).
CharTable dixon_table(std::shared_ptr<const Group> g, int64_t prime_override = 0);

/// Table of a product group assembled from factor tables computed at the
/// same prime: classes and rows are factor tuples in mixed-radix order and
/// values are products.
CharTable product_table(std::shared_ptr<const MatrixGroup> product,
                        const std::vector<CharTable>& factor_tables);

/// Convenience: tables for G = GL_N(q) and the Levi M at one shared
/// (p, omega) chosen from exp(G); exp(M) divides exp(G) since M <= G.
struct TablePair {
  CharTable G;
  CharTable M;
};
TablePair levi_table_pair(const ParabolicData& pd, int64_t prime_override = 0);

/// g ~ g^t combined with inversion: checks identify((rep_j^t)^{-1}) = j* for
/// every class, i.e. contragredients are transpose-inverse twists.
bool kappa_selfduality_check(const MatrixGroup& g);

/// Integer eigenvalue-multiplicity data of row i at class j: the number of
/// eigenvalues exp(2 pi i s/m) of a representing matrix at that class, for
/// s = 0..m-1 with m the order of the class representative.  This is
/// prime-independent integer data that determines the character.
std::vector<int64_t> eigenvalue_multiplicities(const CharTable& t, int i, int j);

}  // namespace repcheck

#endif
