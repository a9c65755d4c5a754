#include "repcheck/field.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>

namespace repcheck {

namespace {

// Monic irreducible moduli, coefficients low to high; roots are primitive.
const std::vector<uint8_t>& modulus_for(int q) {
  static const std::vector<uint8_t> m4 = {1, 1, 1};     // x^2 + x + 1 over F_2
  static const std::vector<uint8_t> m8 = {1, 1, 0, 1};  // x^3 + x + 1 over F_2
  static const std::vector<uint8_t> m9 = {2, 2, 1};     // x^2 + 2x + 2 over F_3
  static const std::vector<uint8_t> none;
  switch (q) {
    case 4: return m4;
    case 8: return m8;
    case 9: return m9;
    default: return none;
  }
}

int char_of(int q) {
  if (q == 4 || q == 8) return 2;
  if (q == 9) return 3;
  return q;
}

// Digitwise sum of base-p encodings.
uint8_t add_digits(int a, int b, int p, int d) {
  int r = 0, mult = 1;
  for (int i = 0; i < d; ++i) {
    r += ((a % p + b % p) % p) * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return static_cast<uint8_t>(r);
}

// Polynomial product of base-p encodings, reduced by the modulus.
uint8_t mul_digits(int a, int b, int p, int d, const std::vector<uint8_t>& mod) {
  std::array<int, 8> prod{};
  std::array<int, 4> da{}, db{};
  for (int i = 0; i < d; ++i) {
    da[i] = a % p;
    a /= p;
    db[i] = b % p;
    b /= p;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  // reduce: x^d = -(mod[0] + ... + mod[d-1] x^{d-1})
  for (int k = 2 * d - 2; k >= d; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < d; ++i) {
      prod[k - d + i] = (prod[k - d + i] + c * (p - mod[i])) % p;
    }
  }
  int r = 0, mult = 1;
  for (int i = 0; i < d; ++i) {
    r += prod[i] * mult;
    mult *= p;
  }
  return static_cast<uint8_t>(r);
}

}  // namespace

Field::Field(int qq) : q(qq), p(char_of(qq)), d(1) {
  modulus_ = modulus_for(q);
  if (!modulus_.empty()) d = static_cast<int>(modulus_.size()) - 1;

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (d == 1) {
        add_[a * q + b] = static_cast<uint8_t>((a + b) % p);
        mul_[a * q + b] = static_cast<uint8_t>((a * b) % p);
      } else {
        add_[a * q + b] = add_digits(a, b, p, d);
        mul_[a * q + b] = mul_digits(a, b, p, d, modulus_);
      }
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<uint8_t>(b);
      if (a != 0 && mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }

  // Multiplicative generator and exp/log/Zech tables.
  for (int g = 1; g < q; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul_[x * q + g];
      ++ord;
    }
    if (ord == q - 1) {
      gen_ = static_cast<uint8_t>(g);
      break;
    }
  }
  exp_.resize(q - 1);
  log_.assign(q, -1);
  int x = 1;
  for (int k = 0; k < static_cast<int>(exp_.size()); ++k) {
    exp_[k] = static_cast<uint8_t>(x);
    log_[x] = k;
    x = mul_[x * q + gen_];
  }
  if (d > 1) {
    zech_.assign(q - 1, -1);
    for (int k = 0; k < q - 1; ++k) {
      uint8_t s = add_[1 * q + exp_[k]];
      zech_[k] = (s == 0) ? -1 : log_[s];
    }
  }
}

const Field& Field::get(int q) {
  if (!is_supported_q(q)) {
    throw std::domain_error("Field::get: unsupported field size q=" + std::to_string(q));
  }
  static std::map<int, std::unique_ptr<Field>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) {
    it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
  }
  return *it->second;
}

std::string Field::describe() const {
  if (d == 1) return "F" + std::to_string(q);
  return "F" + std::to_string(q) + "=F" + std::to_string(p) + "^" + std::to_string(d);
}

}  // namespace repcheck
