#ifndef REPCHECK_GROUP_HPP
#define REPCHECK_GROUP_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "repcheck/errors.hpp"
#include "repcheck/field.hpp"
#include "repcheck/matrix.hpp"

namespace repcheck {

using EIdx = int32_t;

constexpr int64_t kDefaultOrderBound = 300000;

/// Conjugacy data of a fully enumerated group.  Class 0 is always {identity}.
struct ConjClasses {
  std::vector<EIdx> reps;                  // one representative index per class
  std::vector<int64_t> sizes;              // class sizes, sum = |G|
  std::vector<int> inverse_map;            // j -> class of rep(j)^{-1}
  std::vector<int32_t> class_of;           // element index -> class index
  std::vector<std::vector<EIdx>> members;  // element indices, ascending

  int num() const { return static_cast<int>(reps.size()); }
};

/// A concrete finite group with elements addressed by dense indices
/// 0..order()-1 in a fixed deterministic enumeration order.  All higher
/// layers (character tables, convolution algebras, orbit partitions) work
/// purely through this interface.  Instances are immutable after
/// construction and may be shared freely across threads.
class Group {
 public:
  virtual ~Group() = default;

  virtual int64_t order() const = 0;
  virtual EIdx mul(EIdx a, EIdx b) const = 0;
  virtual EIdx inv(EIdx a) const = 0;
  EIdx id() const { return id_; }

  /// Canonical description, also the cache key component.
  virtual std::string spec_key() const = 0;

  /// Conjugacy classes; built on first use.
  const ConjClasses& classes() const;

  int64_t element_order(EIdx a) const;

  /// lcm of the orders of the class representatives.
  int64_t exponent() const;

 protected:
  virtual ConjClasses build_classes() const = 0;
  EIdx id_ = 0;

 private:
  mutable std::unique_ptr<ConjClasses> classes_;
  mutable std::unique_ptr<std::once_flag> classes_once_ = std::make_unique<std::once_flag>();
};

/// a_{ijk} = #{(x,y) in C_i x C_j : x y = rep(k)}: the structure constants of
/// the class sums in the group algebra.
int64_t class_constant(const Group& g, int i, int j, int k);

/// Full class matrix M_i with (M_i)[j][k] = a_{ijk}; one pass over C_i per k.
std::vector<std::vector<int64_t>> class_matrix(const Group& g, int i);

/// Number of class-constant evaluations since process start (cache probes for
/// tests; class matrices are the only expensive character-table ingredient).
int64_t class_constant_evaluations();

/// GL_n(F_q), or a block-diagonal product GL_{c1} x ... x GL_{cl} embedded in
/// GL_N with N = sum(c).  Enumeration is lexicographic over entry vectors
/// restricted to the block pattern, filtered by invertibility.  Conjugacy
/// classes are buckets of equal invariant-factor tuples (per block), with
/// class 0 the identity and the rest in first-appearance order for plain GL,
/// or factor-class tuples in lexicographic order for products.
class MatrixGroup : public Group {
 public:
  static std::shared_ptr<MatrixGroup> general_linear(int n, int q,
                                                     int64_t order_bound = kDefaultOrderBound);
  static std::shared_ptr<MatrixGroup> levi_product(const std::vector<int>& composition, int q,
                                                   int64_t order_bound = kDefaultOrderBound);

  int64_t order() const override { return static_cast<int64_t>(elems_.size()); }
  EIdx mul(EIdx a, EIdx b) const override;
  EIdx inv(EIdx a) const override { return inv_[a]; }
  std::string spec_key() const override;

  int n() const { return n_; }
  int q() const { return q_; }
  const std::vector<int>& composition() const { return comp_; }
  bool is_full_gl() const { return comp_.size() == 1; }

  const Mat& element(EIdx a) const { return elems_[a]; }
  /// Index of a matrix, or -1 when it is not a member.
  EIdx index_of(const Mat& m) const;
  EIdx transposed(EIdx a) const;

  /// For products: the factor groups and the mixed-radix element split.
  const std::vector<std::shared_ptr<MatrixGroup>>& factors() const { return factors_; }
  std::vector<EIdx> factor_indices(EIdx a) const;
  EIdx from_factor_indices(const std::vector<EIdx>& parts) const;

 protected:
  ConjClasses build_classes() const override;

 private:
  MatrixGroup() = default;
  void finish_init();
  uint64_t pack(const Mat& m) const;

  int n_ = 0, q_ = 0;
  std::vector<int> comp_;
  std::vector<std::shared_ptr<MatrixGroup>> factors_;  // empty for plain GL
  const Field* field_ = nullptr;
  std::vector<Mat> elems_;
  std::vector<EIdx> inv_;
  std::vector<int32_t> pack_to_idx_;  // dense map over the block-entry space
  std::vector<std::pair<int, int>> block_cells_;  // (row, col) positions inside blocks
  // q = 2 fast path: per-element packed rows
  std::vector<uint64_t> rowbits_;
};

/// Symmetric group S_n with elements addressed by Lehmer rank of the image
/// word.  Products compose right-to-left: (a*b)(x) = a(b(x)).  Classes are
/// cycle types, ordered by descending-part tuples compared lexicographically
/// (which puts the identity first).
class SymmetricGroup : public Group {
 public:
  static std::shared_ptr<SymmetricGroup> make(int n, int64_t order_bound = kDefaultOrderBound);

  int64_t order() const override { return order_; }
  EIdx mul(EIdx a, EIdx b) const override;
  EIdx inv(EIdx a) const override;
  std::string spec_key() const override;

  int n() const { return n_; }
  std::vector<uint8_t> perm(EIdx a) const;          // image word, 0-based
  EIdx index_of(const std::vector<uint8_t>& p) const;
  std::vector<int> cycle_type(EIdx a) const;        // descending partition

 protected:
  ConjClasses build_classes() const override;

 private:
  SymmetricGroup(int n);
  int n_;
  int64_t order_;
};

/// Subgroup of a parent group given by an explicit element list (parent
/// indices).  Elements are re-indexed 0..order-1 in ascending parent order;
/// conjugacy classes are computed by conjugation-orbit sweep.
class ExplicitSubgroup : public Group {
 public:
  ExplicitSubgroup(std::shared_ptr<const Group> parent, std::vector<EIdx> members,
                   std::string key);

  int64_t order() const override { return static_cast<int64_t>(members_.size()); }
  EIdx mul(EIdx a, EIdx b) const override;
  EIdx inv(EIdx a) const override;
  std::string spec_key() const override { return key_; }

  EIdx parent_index(EIdx a) const { return members_[a]; }
  EIdx from_parent(EIdx p) const;  // -1 if not a member

 protected:
  ConjClasses build_classes() const override;

 private:
  std::shared_ptr<const Group> parent_;
  std::vector<EIdx> members_;
  std::unordered_map<EIdx, EIdx> lookup_;
  std::string key_;
};

/// Data of a parabolic subgroup P = M U of GL_N(F_q) for a composition of N:
/// P block upper-triangular, M block diagonal, U block upper-unitriangular.
struct ParabolicData {
  std::shared_ptr<MatrixGroup> G;        // ambient GL_N(F_q)
  std::shared_ptr<MatrixGroup> M;        // Levi as its own product group
  std::vector<int> composition;
  std::vector<EIdx> M_in_G;              // M ordinal -> G index
  std::vector<EIdx> U_in_G;              // U enumeration (lex over strict blocks)
  std::vector<EIdx> P_in_G;              // all products m*u, ascending G index

  int64_t order_M() const { return static_cast<int64_t>(M_in_G.size()); }
  int64_t order_U() const { return static_cast<int64_t>(U_in_G.size()); }
  int64_t order_P() const { return static_cast<int64_t>(P_in_G.size()); }

  bool in_P(EIdx g) const;
  bool in_U(EIdx g) const;
  bool in_M(EIdx g) const;

  /// Kill the strictly-upper blocks: the Levi projection P -> M (as G index).
  EIdx levi_part(EIdx p) const;
  /// Translate a block-diagonal G index to the M group's own ordinal.
  EIdx m_ordinal(EIdx g) const;

  /// Small generating set of P (Levi block generators plus root subgroup
  /// elements), used by orbit searches.
  std::vector<EIdx> generators() const;
};

ParabolicData parabolic(int N, int q, const std::vector<int>& composition,
                        int64_t order_bound = kDefaultOrderBound);

/// Oracle-grade conjugacy partition by plain orbit sweep (conjugating by all
/// elements); used to cross-check the invariant-factor classification.
std::vector<int32_t> conjugacy_partition_bfs(const Group& g);

/// Small generating set of GL_n(F_q): transvections plus a diagonal unit.
std::vector<Mat> gl_generators(int n, int q);

int64_t gl_order(int n, int q);

}  // namespace repcheck

#endif
