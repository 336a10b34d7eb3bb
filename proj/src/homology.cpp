#include "thetaconf/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "thetaconf/error.hpp"

namespace thetaconf {

namespace mp = boost::multiprecision;

std::vector<std::size_t> OrderComplex::simplex_counts() const {
  std::vector<std::size_t> out;
  for (const auto& layer : simplices) out.push_back(layer.size());
  return out;
}

std::size_t OrderComplex::total_simplices() const {
  std::size_t t = 0;
  for (const auto& layer : simplices) t += layer.size();
  return t;
}

namespace {

void extend_chains(const FinitePoset& p, std::vector<std::uint32_t>& chain,
                   OrderComplex& cx, std::size_t& total, std::size_t cap) {
  const std::size_t dim = chain.size() - 1;
  if (cx.simplices.size() <= dim) cx.simplices.resize(dim + 1);
  if (++total > cap)
    throw_resource("order complex exceeds chain cap of " + std::to_string(cap));
  cx.simplices[dim].push_back(chain);
  for (std::size_t next : p.above(chain.back())) {
    chain.push_back(static_cast<std::uint32_t>(next));
    extend_chains(p, chain, cx, total, cap);
    chain.pop_back();
  }
}

}  // namespace

OrderComplex order_complex(const FinitePoset& poset, std::size_t max_chains) {
  OrderComplex cx;
  cx.vertex_count = poset.size();
  std::size_t total = 0;
  std::vector<std::uint32_t> chain;
  for (std::size_t v = 0; v < poset.size(); ++v) {
    chain.assign(1, static_cast<std::uint32_t>(v));
    extend_chains(poset, chain, cx, total, max_chains);
  }
  // Depth-first generation lists chains of a fixed length in lexicographic
  // order already; sorting keeps the contract explicit and costs little.
  for (auto& layer : cx.simplices) std::sort(layer.begin(), layer.end());
  return cx;
}

SparseIntMatrix SparseIntMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& dense) {
  SparseIntMatrix m;
  m.rows = dense.size();
  m.cols = dense.empty() ? 0 : dense.front().size();
  m.columns.resize(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (dense[r].size() != m.cols) throw_invalid("ragged matrix");
    for (std::size_t c = 0; c < m.cols; ++c)
      if (dense[r][c] != 0) m.columns[c].emplace_back(r, dense[r][c]);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) d[r][c] = v;
  return d;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t t = 0;
  for (const auto& c : columns) t += c.size();
  return t;
}

ChainComplex boundary_matrices(const OrderComplex& cx) {
  ChainComplex cc;
  const std::size_t dims = cx.dimension_count();
  cc.ranks = cx.simplex_counts();
  cc.boundaries.resize(dims);
  if (dims > 0) {
    cc.boundaries[0].rows = 0;
    cc.boundaries[0].cols = cc.ranks[0];
    cc.boundaries[0].columns.resize(cc.ranks[0]);
  }
  for (std::size_t k = 1; k < dims; ++k) {
    const auto& faces = cx.simplices[k - 1];
    auto& m = cc.boundaries[k];
    m.rows = faces.size();
    m.cols = cx.simplices[k].size();
    m.columns.resize(m.cols);
    std::vector<std::uint32_t> face(k);
    for (std::size_t c = 0; c < m.cols; ++c) {
      const auto& s = cx.simplices[k][c];
      auto& col = m.columns[c];
      for (std::size_t i = 0; i <= k; ++i) {
        std::size_t w = 0;
        for (std::size_t v = 0; v <= k; ++v)
          if (v != i) face[w++] = s[v];
        auto it = std::lower_bound(faces.begin(), faces.end(), face);
        if (it == faces.end() || *it != face)
          throw Error(ErrorCode::Precondition, "order complex is missing a face");
        col.emplace_back(static_cast<std::size_t>(it - faces.begin()),
                         i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
  }
  if (!boundary_squared_is_zero(cc))
    throw Error(ErrorCode::Precondition, "boundary of boundary is nonzero");
  return cc;
}

bool boundary_squared_is_zero(const ChainComplex& cc) {
  for (std::size_t k = 2; k < cc.boundaries.size(); ++k) {
    const auto& outer = cc.boundaries[k - 1];
    const auto& inner = cc.boundaries[k];
    if (inner.rows != outer.cols) return false;
    for (const auto& col : inner.columns) {
      std::map<std::size_t, std::int64_t> acc;
      for (const auto& [mid, v] : col)
        for (const auto& [row, w] : outer.columns[mid]) acc[row] += v * w;
      for (const auto& [row, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t v) {
  std::int64_t m = 0, r = 0;
  if (__builtin_mul_overflow(f, v, &m) || __builtin_sub_overflow(a, m, &r))
    throw Overflow{};
  return r;
}

BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& v) { return a - f * v; }

std::int64_t times_unit(std::int64_t a, std::int64_t unit) {
  if (unit == 1) return a;
  if (a == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return -a;
}

BigInt times_unit(const BigInt& a, const BigInt& unit) { return a * unit; }

template <class Int>
bool is_unit(const Int& v) {
  return v == 1 || v == -1;
}

// Sparse Schur-complement elimination on unit pivots. Each pivot contributes
// an invariant factor 1 and is removed together with its row and column.
template <class Int>
class UnitEliminator {
 public:
  explicit UnitEliminator(const SparseIntMatrix& m)
      : rows_(m.rows), cols_(m.cols) {
    for (std::size_t c = 0; c < m.cols; ++c)
      for (const auto& [r, v] : m.columns[c]) {
        rows_[r].emplace(c, Int(v));
        cols_[c].insert(r);
      }
  }

  void run() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (cols_[c].empty()) continue;
        std::size_t best = rows_.size();
        for (std::size_t r : cols_[c])
          if (is_unit(rows_[r].at(c)) &&
              (best == rows_.size() || rows_[r].size() < rows_[best].size()))
            best = r;
        if (best == rows_.size()) continue;
        pivot(best, c);
        progress = true;
      }
    }
  }

  std::size_t unit_pivots() const { return pivots_; }

  // Rows and columns still carrying entries, as a dense matrix.
  std::vector<std::vector<BigInt>> remainder() const {
    std::vector<std::size_t> live_rows, col_index(cols_.size(), 0);
    std::size_t live_cols = 0;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) col_index[c] = live_cols++;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) live_rows.push_back(r);
    std::vector<std::vector<BigInt>> d(live_rows.size(), std::vector<BigInt>(live_cols));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[live_rows[i]]) d[i][col_index[c]] = BigInt(v);
    return d;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Int p = rows_[r].at(c);
    std::vector<std::size_t> others;
    for (std::size_t k : cols_[c])
      if (k != r) others.push_back(k);
    for (std::size_t k : others) {
      // a_kc / p == a_kc * p for a unit p.
      const Int factor = times_unit(rows_[k].at(c), p);
      auto& rowk = rows_[k];
      for (const auto& [j, v] : rows_[r]) {
        auto it = rowk.find(j);
        const Int cur = it == rowk.end() ? Int(0) : it->second;
        Int next = sub_mul(cur, factor, v);
        if (next == 0) {
          if (it != rowk.end()) {
            rowk.erase(it);
            cols_[j].erase(k);
          }
        } else if (it == rowk.end()) {
          rowk.emplace(j, std::move(next));
          cols_[j].insert(k);
        } else {
          it->second = std::move(next);
        }
      }
    }
    for (const auto& [j, v] : rows_[r]) cols_[j].erase(r);
    rows_[r].clear();
    ++pivots_;
  }

  std::vector<std::map<std::size_t, Int>> rows_;
  std::vector<std::set<std::size_t>> cols_;
  std::size_t pivots_ = 0;
};

// Dense diagonalisation with smallest-magnitude pivoting. Returns the
// absolute values of the nonzero diagonal entries (not yet normalised into a
// divisibility chain).
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = m, pc = n;
      BigInt best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || mp::abs(a[i][j]) < best)) {
            best = mp::abs(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == m) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(mp::abs(a[t][t]));
  }
  return diag;
}

std::vector<BigInt> invariant_factors(std::vector<BigInt> d) {
  std::sort(d.begin(), d.end());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = mp::gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

template <class Int>
SmithResult smith_with(const SparseIntMatrix& m) {
  UnitEliminator<Int> e(m);
  e.run();
  std::vector<BigInt> diag(e.unit_pivots(), BigInt(1));
  const auto rest = dense_diagonal(e.remainder());
  diag.insert(diag.end(), rest.begin(), rest.end());
  SmithResult out;
  out.factors = invariant_factors(std::move(diag));
  out.rank = out.factors.size();
  return out;
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    return smith_with<std::int64_t>(m);
  } catch (const Overflow&) {
    return smith_with<BigInt>(m);
  }
}

SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense) {
  return smith_normal_form(SparseIntMatrix::from_dense(dense));
}

long long HomologyResult::betti_alternating_sum() const {
  long long s = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    s += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[k]);
  return s;
}

HomologyResult homology(const ChainComplex& cc) {
  if (!boundary_squared_is_zero(cc))
    throw_precondition("chain complex has nonzero boundary of boundary");
  const std::size_t dims = cc.ranks.size();
  std::vector<SmithResult> snf(dims + 1);
  for (std::size_t k = 1; k < dims; ++k) snf[k] = smith_normal_form(cc.boundaries[k]);
  HomologyResult h;
  h.simplex_counts = cc.ranks;
  h.betti.resize(dims);
  h.torsion.resize(dims);
  for (std::size_t k = 0; k < dims; ++k) {
    h.betti[k] = cc.ranks[k] - snf[k].rank - snf[k + 1].rank;
    for (const auto& f : snf[k + 1].factors)
      if (f > 1) h.torsion[k].push_back(f);
    h.euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.ranks[k]);
  }
  return h;
}

long long euler_characteristic(const OrderComplex& cx) {
  long long e = 0;
  for (std::size_t k = 0; k < cx.simplices.size(); ++k)
    e += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cx.simplices[k].size());
  return e;
}

std::size_t connected_components(const FinitePoset& poset) {
  std::vector<std::size_t> parent(poset.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = poset.size();
  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j : poset.above(i)) {
      const auto a = find(i), b = find(j);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
  return comps;
}

HomologyResult poset_homology(const FinitePoset& poset, std::size_t max_chains) {
  const OrderComplex cx = order_complex(poset, max_chains);
  HomologyResult h = homology(boundary_matrices(cx));
  if (h.euler != euler_characteristic(cx) || h.euler != h.betti_alternating_sum())
    throw_precondition("Euler characteristic disagrees with the Betti numbers");
  return h;
}

std::string boundary_csv(const SparseIntMatrix& m) {
  std::ostringstream out;
  out << "row,col,value\n";
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) out << r << ',' << c << ',' << v << '\n';
  return out.str();
}

}  // namespace thetaconf
