#ifndef REPCHECK_FIELD_HPP
#define REPCHECK_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace repcheck {

/// Arithmetic for the fields F_q with q = p^d <= 9, i.e. q in {2,3,4,5,7,8,9}.
///
/// Elements are encoded as integers 0..q-1.  For prime q the encoding is the
/// residue itself; for extension fields the element c0 + c1*x + ... is encoded
/// as the base-p integer c0 + c1*p + ... where x is a root of the modulus
/// polynomial.  All operations go through dense q*q tables, so they are cheap
/// enough for the exhaustive enumeration loops elsewhere in this project.
/// Extension fields additionally carry exp/log/Zech tables with respect to a
/// fixed multiplicative generator.
class Field {
 public:
  /// Shared immutable instance for a supported q; throws for other q.
  static const Field& get(int q);

  int q;  // field size
  int p;  // characteristic
  int d;  // extension degree, q = p^d

  uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q + b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q + neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q + b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }

  /// Multiplicative inverse; a must be nonzero.
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero element");
    return inv_[a];
  }
  uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

  /// A fixed generator of the multiplicative group.
  uint8_t generator() const { return gen_; }

  /// Discrete log base generator(); a must be nonzero.
  int log(uint8_t a) const {
    if (a == 0) throw std::domain_error("Field::log: zero element");
    return log_[a];
  }
  uint8_t exp(int k) const { return exp_[((k % (q - 1)) + (q - 1)) % (q - 1)]; }

  /// Zech logarithm: zech(k) = log(1 + g^k), or -1 when 1 + g^k = 0.
  /// Only populated for d > 1 (where it is the classical table-based
  /// addition route); tested against coefficientwise addition.
  int zech(int k) const { return zech_[k]; }
  bool has_zech() const { return !zech_.empty(); }

  /// Modulus polynomial coefficients (low to high) for d > 1, empty otherwise.
  const std::vector<uint8_t>& modulus() const { return modulus_; }

  std::string describe() const;

 private:
  explicit Field(int q);

  std::vector<uint8_t> add_, mul_, neg_, inv_, exp_;
  std::vector<int> log_, zech_;
  std::vector<uint8_t> modulus_;
  uint8_t gen_ = 0;
};

inline bool is_supported_q(int q) {
  return q == 2 || q == 3 || q == 4 || q == 5 || q == 7 || q == 8 || q == 9;
}

}  // namespace repcheck

#endif
