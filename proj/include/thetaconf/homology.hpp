#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetaconf/poset.hpp"

namespace thetaconf {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// Strict chains x_0 < ... < x_k of a finite poset, grouped by dimension k.
/// Within a dimension, chains are in lexicographic order of their element
/// index sequences.
struct OrderComplex {
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> simplices;

  std::size_t dimension_count() const noexcept { return simplices.size(); }
  std::vector<std::size_t> simplex_counts() const;
  std::size_t total_simplices() const;
};

OrderComplex order_complex(const FinitePoset& poset, std::size_t max_chains = kDefaultChainCap);

/// Integer matrix in compressed column form; each column is sorted by row.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
  std::vector<std::vector<std::int64_t>> to_dense() const;
  std::size_t nonzeros() const;
};

/// boundaries[k] is d_k : C_k -> C_{k-1} for k >= 1; boundaries[0] is the
/// zero map C_0 -> 0.
struct ChainComplex {
  std::vector<std::size_t> ranks;  // dim C_k
  std::vector<SparseIntMatrix> boundaries;
};

/// Alternating-sign simplicial boundary: face i (dropping x_i) has sign (-1)^i.
/// Throws if d_{k-1} d_k != 0 anywhere.
ChainComplex boundary_matrices(const OrderComplex& cx);

/// True iff every composite d_{k-1} d_k vanishes.
bool boundary_squared_is_zero(const ChainComplex& cc);

struct SmithResult {
  std::vector<BigInt> factors;  // nonzero invariant factors d_1 | d_2 | ...
  std::size_t rank = 0;
};

/// Exact Smith normal form over the integers. Unit pivots are eliminated
/// sparsely in checked 64-bit arithmetic; what remains is reduced densely in
/// arbitrary precision with smallest-magnitude pivoting.
SmithResult smith_normal_form(const SparseIntMatrix& m);
SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& dense);

struct HomologyResult {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;  // per degree, entries > 1
  std::vector<std::size_t> simplex_counts;
  long long euler = 0;  // from simplex counts

  long long betti_alternating_sum() const;
};

HomologyResult homology(const ChainComplex& cc);

long long euler_characteristic(const OrderComplex& cx);

/// Connected components of the comparability graph (equivalently of the
/// Hasse diagram).
std::size_t connected_components(const FinitePoset& poset);

/// Runs the whole pipeline: order complex, boundaries, homology. Throws if
/// the Euler characteristic and the Betti numbers disagree.
HomologyResult poset_homology(const FinitePoset& poset,
                              std::size_t max_chains = kDefaultChainCap);

/// CSV dump "row,col,value" of one boundary matrix.
std::string boundary_csv(const SparseIntMatrix& m);

}  // namespace thetaconf
