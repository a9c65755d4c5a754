#include "repcheck/group.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

#include "repcheck/poly.hpp"

namespace repcheck {

const ConjClasses& Group::classes() const {
  std::call_once(*classes_once_, [this] {
    classes_ = std::make_unique<ConjClasses>(build_classes());
  });
  return *classes_;
}

int64_t Group::element_order(EIdx a) const {
  int64_t ord = 1;
  EIdx x = a;
  while (x != id_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

int64_t Group::exponent() const {
  const ConjClasses& cc = classes();
  int64_t e = 1;
  for (EIdx r : cc.reps) e = std::lcm(e, element_order(r));
  return e;
}

namespace {
std::atomic<int64_t> g_class_constant_evals{0};
}

int64_t class_constant_evaluations() { return g_class_constant_evals.load(); }

int64_t class_constant(const Group& g, int i, int j, int k) {
  const ConjClasses& cc = g.classes();
  g_class_constant_evals.fetch_add(1, std::memory_order_relaxed);
  EIdx z = cc.reps[k];
  int64_t count = 0;
  for (EIdx x : cc.members[i]) {
    if (cc.class_of[g.mul(g.inv(x), z)] == j) ++count;
  }
  return count;
}

std::vector<std::vector<int64_t>> class_matrix(const Group& g, int i) {
  const ConjClasses& cc = g.classes();
  int r = cc.num();
  g_class_constant_evals.fetch_add(static_cast<int64_t>(r) * r, std::memory_order_relaxed);
  std::vector<std::vector<int64_t>> m(r, std::vector<int64_t>(r, 0));
  for (int k = 0; k < r; ++k) {
    EIdx z = cc.reps[k];
    for (EIdx x : cc.members[i]) {
      ++m[cc.class_of[g.mul(g.inv(x), z)]][k];
    }
  }
  // Counting identity: sum_k a_{ijk} |C_k| = |C_i| |C_j|.
  for (int j = 0; j < r; ++j) {
    int64_t total = 0;
    for (int k = 0; k < r; ++k) total += m[j][k] * cc.sizes[k];
    assert(total == cc.sizes[i] * cc.sizes[j]);
    (void)total;
  }
  return m;
}

int64_t gl_order(int n, int q) {
  int64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  int64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

// ---------------------------------------------------------------------------
// MatrixGroup

namespace {

struct GroupRegistry {
  std::mutex mu;
  std::map<std::string, std::shared_ptr<MatrixGroup>> by_key;
};

GroupRegistry& registry() {
  static GroupRegistry r;
  return r;
}

std::string matrix_group_key(const std::vector<int>& comp, int q) {
  std::string key = comp.size() == 1 ? "gl:q" : "levi:q";
  key += std::to_string(q);
  key += comp.size() == 1 ? ":n" + std::to_string(comp[0]) : ":c";
  if (comp.size() > 1) {
    for (size_t i = 0; i < comp.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(comp[i]);
    }
  }
  return key;
}

}  // namespace

uint64_t MatrixGroup::pack(const Mat& m) const {
  uint64_t pk = 0;
  for (const auto& [r, c] : block_cells_) pk = pk * q_ + m.at(r, c);
  return pk;
}

void MatrixGroup::finish_init() {
  const Field& f = *field_;
  int C = static_cast<int>(block_cells_.size());
  uint64_t space = 1;
  for (int i = 0; i < C; ++i) space *= q_;
  pack_to_idx_.assign(space, -1);
  for (size_t a = 0; a < elems_.size(); ++a) {
    pack_to_idx_[pack(elems_[a])] = static_cast<int32_t>(a);
  }
  id_ = pack_to_idx_[pack(Mat::identity(f, n_))];
  inv_.resize(elems_.size());
  for (size_t a = 0; a < elems_.size(); ++a) {
    auto invm = mat_inverse(elems_[a]);
    inv_[a] = pack_to_idx_[pack(*invm)];
  }
  if (q_ == 2 && n_ <= 8) {
    rowbits_.resize(elems_.size());
    for (size_t a = 0; a < elems_.size(); ++a) {
      uint64_t rb = 0;
      for (int i = 0; i < n_; ++i) {
        uint64_t row = 0;
        for (int j = 0; j < n_; ++j)
          if (elems_[a].at(i, j)) row |= (1ull << j);
        rb |= row << (8 * i);
      }
      rowbits_[a] = rb;
    }
  }
}

std::shared_ptr<MatrixGroup> MatrixGroup::general_linear(int n, int q, int64_t order_bound) {
  std::string key = matrix_group_key({n}, q);
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.by_key.find(key);
  if (it != reg.by_key.end()) return it->second;

  int64_t predicted = gl_order(n, q);
  if (predicted > order_bound) {
    throw OrderBoundExceeded("GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                             ") has order " + std::to_string(predicted) +
                             " > bound " + std::to_string(order_bound));
  }
  const Field& f = Field::get(q);
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->n_ = n;
  g->q_ = q;
  g->comp_ = {n};
  g->field_ = &f;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g->block_cells_.emplace_back(r, c);

  // Lexicographic enumeration over entry vectors, filtered by invertibility.
  uint64_t space = 1;
  for (int i = 0; i < n * n; ++i) space *= q;
  for (uint64_t pk = 0; pk < space; ++pk) {
    Mat m(f, n, n);
    uint64_t v = pk;
    for (int t = n * n - 1; t >= 0; --t) {
      m.entries()[t] = static_cast<uint8_t>(v % q);
      v /= q;
    }
    if (mat_rank(m) == n) g->elems_.push_back(std::move(m));
  }
  assert(static_cast<int64_t>(g->elems_.size()) == predicted);
  g->finish_init();
  reg.by_key[key] = g;
  return g;
}

std::shared_ptr<MatrixGroup> MatrixGroup::levi_product(const std::vector<int>& composition,
                                                       int q, int64_t order_bound) {
  if (composition.empty()) throw std::invalid_argument("levi_product: empty composition");
  std::string key = matrix_group_key(composition, q);
  auto& reg = registry();
  {
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.by_key.find(key);
    if (it != reg.by_key.end()) return it->second;
  }

  int64_t predicted = 1;
  for (int c : composition) predicted *= gl_order(c, q);
  if (predicted > order_bound) {
    throw OrderBoundExceeded("Levi product order " + std::to_string(predicted) + " > bound " +
                             std::to_string(order_bound));
  }
  std::vector<std::shared_ptr<MatrixGroup>> factors;
  for (int c : composition) factors.push_back(general_linear(c, q, order_bound));

  const Field& f = Field::get(q);
  int n = 0;
  for (int c : composition) n += c;
  auto g = std::shared_ptr<MatrixGroup>(new MatrixGroup());
  g->n_ = n;
  g->q_ = q;
  g->comp_ = composition;
  g->factors_ = factors;
  g->field_ = &f;
  int off = 0;
  for (int c : composition) {
    for (int r = 0; r < c; ++r)
      for (int cc = 0; cc < c; ++cc) g->block_cells_.emplace_back(off + r, off + cc);
    off += c;
  }

  // Mixed-radix enumeration over factor elements, first factor most
  // significant; coincides with entry-lex order over the block cells.
  std::vector<EIdx> idx(composition.size(), 0);
  for (;;) {
    Mat m(f, n, n);
    int o = 0;
    for (size_t fi = 0; fi < factors.size(); ++fi) {
      const Mat& b = factors[fi]->element(idx[fi]);
      for (int r = 0; r < composition[fi]; ++r)
        for (int c = 0; c < composition[fi]; ++c) m.set(o + r, o + c, b.at(r, c));
      o += composition[fi];
    }
    g->elems_.push_back(std::move(m));
    int fi = static_cast<int>(factors.size()) - 1;
    while (fi >= 0 && ++idx[fi] == static_cast<EIdx>(factors[fi]->order())) {
      idx[fi] = 0;
      --fi;
    }
    if (fi < 0) break;
  }
  assert(static_cast<int64_t>(g->elems_.size()) == predicted);
  g->finish_init();
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.by_key[key] = g;
  return g;
}

EIdx MatrixGroup::mul(EIdx a, EIdx b) const {
  if (!rowbits_.empty()) {
    // XOR-select rows of b by the bits of each row of a, then pack.
    uint64_t ra = rowbits_[a], rb = rowbits_[b];
    uint64_t pk = 0;
    uint64_t prod_rows[8] = {0};
    for (int i = 0; i < n_; ++i) {
      uint64_t arow = (ra >> (8 * i)) & 0xFF;
      uint64_t acc = 0;
      while (arow) {
        int j = __builtin_ctzll(arow);
        arow &= arow - 1;
        acc ^= (rb >> (8 * j)) & 0xFF;
      }
      prod_rows[i] = acc;
    }
    for (const auto& [r, c] : block_cells_) pk = pk * 2 + ((prod_rows[r] >> c) & 1);
    return pack_to_idx_[pk];
  }
  const Field& f = *field_;
  const Mat& A = elems_[a];
  const Mat& B = elems_[b];
  uint64_t pk = 0;
  for (const auto& [r, c] : block_cells_) {
    uint8_t sum = 0;
    for (int s = 0; s < n_; ++s) sum = f.add(sum, f.mul(A.at(r, s), B.at(s, c)));
    pk = pk * q_ + sum;
  }
  return pack_to_idx_[pk];
}

EIdx MatrixGroup::index_of(const Mat& m) const {
  if (m.rows() != n_ || m.cols() != n_) return -1;
  // Entries outside the block pattern must vanish.
  uint64_t pk = 0;
  size_t cell_at = 0;
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      if (cell_at < block_cells_.size() && block_cells_[cell_at] == std::make_pair(r, c)) {
        pk = pk * q_ + m.at(r, c);
        ++cell_at;
      } else if (m.at(r, c) != 0) {
        return -1;
      }
    }
  }
  return pack_to_idx_[pk];
}

EIdx MatrixGroup::transposed(EIdx a) const { return index_of(mat_transpose(elems_[a])); }

std::vector<EIdx> MatrixGroup::factor_indices(EIdx a) const {
  std::vector<EIdx> parts;
  int off = 0;
  for (size_t fi = 0; fi < factors_.size(); ++fi) {
    parts.push_back(factors_[fi]->index_of(mat_block(elems_[a], off, off, comp_[fi], comp_[fi])));
    off += comp_[fi];
  }
  return parts;
}

EIdx MatrixGroup::from_factor_indices(const std::vector<EIdx>& parts) const {
  EIdx a = 0;
  for (size_t fi = 0; fi < factors_.size(); ++fi) {
    a = static_cast<EIdx>(a * factors_[fi]->order() + parts[fi]);
  }
  return a;
}

std::string MatrixGroup::spec_key() const { return matrix_group_key(comp_, q_); }

ConjClasses MatrixGroup::build_classes() const {
  ConjClasses cc;
  cc.class_of.resize(elems_.size());
  if (factors_.empty()) {
    // Bucket by invariant-factor tuple, identity class first, the rest in
    // first-appearance order of the enumeration.
    std::unordered_map<std::string, int32_t> key_to_class;
    std::vector<std::vector<EIdx>> members;
    for (size_t a = 0; a < elems_.size(); ++a) {
      std::string key = encode_poly_list(invariant_factors(elems_[a]));
      auto [it, fresh] = key_to_class.emplace(key, static_cast<int32_t>(members.size()));
      if (fresh) members.emplace_back();
      members[it->second].push_back(static_cast<EIdx>(a));
      cc.class_of[a] = it->second;
    }
    int32_t id_class = cc.class_of[id_];
    std::vector<int32_t> relabel(members.size());
    relabel[id_class] = 0;
    int32_t next = 1;
    for (size_t c = 0; c < members.size(); ++c) {
      if (static_cast<int32_t>(c) != id_class) relabel[c] = next++;
    }
    cc.members.resize(members.size());
    for (size_t c = 0; c < members.size(); ++c) cc.members[relabel[c]] = std::move(members[c]);
    for (auto& v : cc.class_of) v = relabel[v];
  } else {
    // Classes of a product are tuples of factor classes, in mixed-radix
    // (first factor most significant) order.
    int64_t num = 1;
    for (const auto& fg : factors_) num *= fg->classes().num();
    cc.members.resize(num);
    for (size_t a = 0; a < elems_.size(); ++a) {
      std::vector<EIdx> parts = factor_indices(static_cast<EIdx>(a));
      int64_t cls = 0;
      for (size_t fi = 0; fi < factors_.size(); ++fi) {
        cls = cls * factors_[fi]->classes().num() +
              factors_[fi]->classes().class_of[parts[fi]];
      }
      cc.class_of[a] = static_cast<int32_t>(cls);
      cc.members[cls].push_back(static_cast<EIdx>(a));
    }
  }
  for (auto& mem : cc.members) {
    cc.reps.push_back(mem.front());
    cc.sizes.push_back(static_cast<int64_t>(mem.size()));
  }
  for (EIdx r : cc.reps) cc.inverse_map.push_back(cc.class_of[inv_[r]]);
  return cc;
}

// ---------------------------------------------------------------------------
// SymmetricGroup

namespace {

int64_t factorial(int n) {
  int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n) : n_(n), order_(factorial(n)) {
  // Lehmer rank of the identity is 0.
  id_ = 0;
}

std::shared_ptr<SymmetricGroup> SymmetricGroup::make(int n, int64_t order_bound) {
  if (n < 1 || n > 12) throw std::invalid_argument("SymmetricGroup: n out of range");
  if (factorial(n) > order_bound) {
    throw OrderBoundExceeded("S_" + std::to_string(n) + " has order " +
                             std::to_string(factorial(n)) + " > bound " +
                             std::to_string(order_bound));
  }
  return std::shared_ptr<SymmetricGroup>(new SymmetricGroup(n));
}

std::vector<uint8_t> SymmetricGroup::perm(EIdx a) const {
  std::vector<uint8_t> avail(n_);
  for (int i = 0; i < n_; ++i) avail[i] = static_cast<uint8_t>(i);
  std::vector<uint8_t> p(n_);
  int64_t r = a;
  for (int i = 0; i < n_; ++i) {
    int64_t f = factorial(n_ - 1 - i);
    int64_t digit = r / f;
    r %= f;
    p[i] = avail[digit];
    avail.erase(avail.begin() + digit);
  }
  return p;
}

EIdx SymmetricGroup::index_of(const std::vector<uint8_t>& p) const {
  int64_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * factorial(n_ - 1 - i);
  }
  return static_cast<EIdx>(rank);
}

EIdx SymmetricGroup::mul(EIdx a, EIdx b) const {
  std::vector<uint8_t> pa = perm(a), pb = perm(b), r(n_);
  for (int i = 0; i < n_; ++i) r[i] = pa[pb[i]];
  return index_of(r);
}

EIdx SymmetricGroup::inv(EIdx a) const {
  std::vector<uint8_t> pa = perm(a), r(n_);
  for (int i = 0; i < n_; ++i) r[pa[i]] = static_cast<uint8_t>(i);
  return index_of(r);
}

std::vector<int> SymmetricGroup::cycle_type(EIdx a) const {
  std::vector<uint8_t> p = perm(a);
  std::vector<bool> seen(n_, false);
  std::vector<int> type;
  for (int i = 0; i < n_; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = p[j];
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string SymmetricGroup::spec_key() const { return "sym:n" + std::to_string(n_); }

ConjClasses SymmetricGroup::build_classes() const {
  // Cycle types as descending tuples, lexicographically ascending: the
  // all-ones type (identity) sorts first.
  std::map<std::vector<int>, int32_t> type_to_class;
  std::vector<std::vector<int>> seen_types;
  std::vector<std::vector<int>> per_elem(order_);
  for (EIdx a = 0; a < order_; ++a) {
    per_elem[a] = cycle_type(a);
    if (!type_to_class.count(per_elem[a])) {
      type_to_class[per_elem[a]] = 0;  // placeholder
    }
  }
  int32_t next = 0;
  for (auto& [type, cls] : type_to_class) cls = next++;
  ConjClasses cc;
  cc.class_of.resize(order_);
  cc.members.resize(type_to_class.size());
  for (EIdx a = 0; a < order_; ++a) {
    int32_t cls = type_to_class[per_elem[a]];
    cc.class_of[a] = cls;
    cc.members[cls].push_back(a);
  }
  for (auto& mem : cc.members) {
    cc.reps.push_back(mem.front());
    cc.sizes.push_back(static_cast<int64_t>(mem.size()));
  }
  for (EIdx r : cc.reps) cc.inverse_map.push_back(cc.class_of[inv(r)]);
  return cc;
}

// ---------------------------------------------------------------------------
// ExplicitSubgroup

ExplicitSubgroup::ExplicitSubgroup(std::shared_ptr<const Group> parent, std::vector<EIdx> members,
                                   std::string key)
    : parent_(std::move(parent)), members_(std::move(members)), key_(std::move(key)) {
  std::sort(members_.begin(), members_.end());
  for (size_t i = 0; i < members_.size(); ++i) lookup_[members_[i]] = static_cast<EIdx>(i);
  auto it = lookup_.find(parent_->id());
  if (it == lookup_.end()) throw std::invalid_argument("ExplicitSubgroup: identity missing");
  id_ = it->second;
}

EIdx ExplicitSubgroup::from_parent(EIdx p) const {
  auto it = lookup_.find(p);
  return it == lookup_.end() ? -1 : it->second;
}

EIdx ExplicitSubgroup::mul(EIdx a, EIdx b) const {
  EIdx r = from_parent(parent_->mul(members_[a], members_[b]));
  assert(r >= 0);
  return r;
}

EIdx ExplicitSubgroup::inv(EIdx a) const {
  EIdx r = from_parent(parent_->inv(members_[a]));
  assert(r >= 0);
  return r;
}

ConjClasses ExplicitSubgroup::build_classes() const {
  int64_t n = order();
  ConjClasses cc;
  cc.class_of.assign(n, -1);
  for (EIdx a = 0; a < n; ++a) {
    if (cc.class_of[a] >= 0) continue;
    int32_t cls = static_cast<int32_t>(cc.members.size());
    std::vector<EIdx> orbit;
    for (EIdx h = 0; h < n; ++h) {
      EIdx y = mul(mul(h, a), inv(h));
      if (cc.class_of[y] < 0) {
        cc.class_of[y] = cls;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.members.push_back(std::move(orbit));
  }
  // Re-order classes so the identity class is 0 and the rest keep ascending
  // least-member order (which the sweep already produces).
  int32_t id_class = cc.class_of[id_];
  if (id_class != 0) {
    std::swap(cc.members[0], cc.members[id_class]);
    for (auto& v : cc.class_of) {
      if (v == 0)
        v = id_class;
      else if (v == id_class)
        v = 0;
    }
  }
  for (auto& mem : cc.members) {
    cc.reps.push_back(mem.front());
    cc.sizes.push_back(static_cast<int64_t>(mem.size()));
  }
  for (EIdx r : cc.reps) cc.inverse_map.push_back(cc.class_of[inv(r)]);
  return cc;
}

// ---------------------------------------------------------------------------
// Parabolic data

namespace {

std::vector<int> block_index_per_row(const std::vector<int>& comp) {
  std::vector<int> block;
  for (size_t b = 0; b < comp.size(); ++b)
    for (int i = 0; i < comp[b]; ++i) block.push_back(static_cast<int>(b));
  return block;
}

}  // namespace

bool ParabolicData::in_M(EIdx g) const {
  const Mat& m = G->element(g);
  std::vector<int> block = block_index_per_row(composition);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (block[r] != block[c] && m.at(r, c) != 0) return false;
  return true;
}

bool ParabolicData::in_P(EIdx g) const {
  const Mat& m = G->element(g);
  std::vector<int> block = block_index_per_row(composition);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (block[r] > block[c] && m.at(r, c) != 0) return false;
  return true;
}

bool ParabolicData::in_U(EIdx g) const {
  if (!in_P(g)) return false;
  const Mat& m = G->element(g);
  std::vector<int> block = block_index_per_row(composition);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (block[r] != block[c]) continue;
      uint8_t want = (r == c) ? 1 : 0;
      if (m.at(r, c) != want) return false;
    }
  }
  return true;
}

EIdx ParabolicData::levi_part(EIdx p) const {
  Mat m = G->element(p);
  std::vector<int> block = block_index_per_row(composition);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (block[r] < block[c]) m.set(r, c, 0);
  EIdx idx = G->index_of(m);
  assert(idx >= 0);
  return idx;
}

EIdx ParabolicData::m_ordinal(EIdx g) const {
  EIdx idx = M->index_of(G->element(g));
  assert(idx >= 0);
  return idx;
}

std::vector<EIdx> ParabolicData::generators() const {
  const Field& f = Field::get(G->q());
  int N = G->n();
  std::vector<int> block = block_index_per_row(composition);
  std::vector<Mat> gens;
  int off = 0;
  for (int c : composition) {
    for (const Mat& b : gl_generators(c, G->q())) {
      Mat m = Mat::identity(f, N);
      for (int r = 0; r < c; ++r)
        for (int cc = 0; cc < c; ++cc) m.set(off + r, off + cc, b.at(r, cc));
      gens.push_back(std::move(m));
    }
    off += c;
  }
  for (int r = 0; r < N; ++r) {
    for (int c = 0; c < N; ++c) {
      if (block[r] >= block[c]) continue;
      for (int j = 0; j < f.d; ++j) {
        Mat m = Mat::identity(f, N);
        uint8_t alpha = 1;
        for (int t = 0; t < j; ++t) alpha = static_cast<uint8_t>(alpha * f.p);
        m.set(r, c, alpha);
        gens.push_back(std::move(m));
      }
    }
  }
  std::vector<EIdx> out;
  for (const Mat& m : gens) {
    EIdx idx = G->index_of(m);
    assert(idx >= 0);
    out.push_back(idx);
  }
  return out;
}

ParabolicData parabolic(int N, int q, const std::vector<int>& composition, int64_t order_bound) {
  int sum = 0;
  for (int c : composition) {
    if (c < 1) throw std::invalid_argument("parabolic: composition parts must be positive");
    sum += c;
  }
  if (sum != N) throw std::invalid_argument("parabolic: composition must sum to N");

  ParabolicData pd;
  pd.composition = composition;
  pd.G = MatrixGroup::general_linear(N, q, order_bound);
  pd.M = MatrixGroup::levi_product(composition, q, order_bound);
  const Field& f = Field::get(q);

  for (EIdx m = 0; m < static_cast<EIdx>(pd.M->order()); ++m) {
    EIdx idx = pd.G->index_of(pd.M->element(m));
    assert(idx >= 0);
    pd.M_in_G.push_back(idx);
  }

  std::vector<int> block = block_index_per_row(composition);
  std::vector<std::pair<int, int>> ucells;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      if (block[r] < block[c]) ucells.emplace_back(r, c);
  int64_t uspace = 1;
  for (size_t i = 0; i < ucells.size(); ++i) uspace *= q;
  for (int64_t pk = 0; pk < uspace; ++pk) {
    Mat m = Mat::identity(f, N);
    int64_t v = pk;
    for (int t = static_cast<int>(ucells.size()) - 1; t >= 0; --t) {
      m.set(ucells[t].first, ucells[t].second, static_cast<uint8_t>(v % q));
      v /= q;
    }
    EIdx idx = pd.G->index_of(m);
    assert(idx >= 0);
    pd.U_in_G.push_back(idx);
  }

  for (EIdx m : pd.M_in_G)
    for (EIdx u : pd.U_in_G) pd.P_in_G.push_back(pd.G->mul(m, u));
  std::sort(pd.P_in_G.begin(), pd.P_in_G.end());
  assert(std::adjacent_find(pd.P_in_G.begin(), pd.P_in_G.end()) == pd.P_in_G.end());
  return pd;
}

std::vector<int32_t> conjugacy_partition_bfs(const Group& g) {
  int64_t n = g.order();
  std::vector<int32_t> part(n, -1);
  int32_t next = 0;
  for (EIdx a = 0; a < n; ++a) {
    if (part[a] >= 0) continue;
    int32_t cls = next++;
    for (EIdx h = 0; h < n; ++h) {
      part[g.mul(g.mul(h, a), g.inv(h))] = cls;
    }
  }
  return part;
}

std::vector<Mat> gl_generators(int n, int q) {
  const Field& f = Field::get(q);
  std::vector<Mat> gens;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j < f.d; ++j) {
      uint8_t alpha = 1;
      for (int t = 0; t < j; ++t) alpha = static_cast<uint8_t>(alpha * f.p);
      Mat a = Mat::identity(f, n);
      a.set(i, i + 1, alpha);
      gens.push_back(a);
      Mat b = Mat::identity(f, n);
      b.set(i + 1, i, alpha);
      gens.push_back(b);
    }
  }
  if (q > 2) {
    Mat d = Mat::identity(f, n);
    d.set(0, 0, f.generator());
    gens.push_back(d);
  }
  return gens;
}

}  // namespace repcheck
