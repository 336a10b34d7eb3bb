#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetaconf/nord.hpp"

namespace thetaconf {

using Rational = boost::multiprecision::cpp_rational;
using Point = std::vector<Rational>;

/// Injective map A -> Q^n with exact coordinates; points[k] is the image of
/// labels[k].
struct Configuration {
  int n = 1;
  std::vector<std::string> labels;
  std::vector<Point> points;

  const Point& point(const std::string& label) const;
};

/// Validating constructor: distinct labels, n coordinates per point, and no
/// two labels at the same point.
Configuration make_configuration(int n, std::vector<std::string> labels,
                                 std::vector<Point> points);

/// Parses one point per line, "label x_1 ... x_n", coordinates as integers,
/// decimals or p/q fractions. Decimals are read as doubles and converted
/// exactly. Blank lines and lines starting with '#' are skipped.
Configuration parse_point_file(std::string_view text, int n);

/// Exact rational value of a finite double.
Rational exact_rational(double value);

/// phi lies in the closed cell C(S): for a <_S b with branching level k,
/// the first k coordinates agree and coordinate k+1 of a is <= that of b.
bool in_cell(const Configuration& phi, const NOrdering& s);

/// The least n-ordering whose cell contains phi: lexicographic order of the
/// points, with branching level = number of leading coordinates on which
/// two points agree.
NOrdering cell_of(const Configuration& phi);

/// Point of the open cell of S classifying back to S: coordinate i of a leaf
/// is the child index of its level-i ancestor.
Configuration witness(const NOrdering& s);

/// Uniform integer coordinates in [-range, range]; rejection keeps the
/// configuration injective.
Configuration sample(const LabelSet& labels, int n, std::uint64_t seed,
                     std::int64_t range = 1'000'000);
Configuration sample(const LabelSet& labels, int n, std::mt19937_64& rng,
                     std::int64_t range);

/// Random point of C(S). With `interior` the sibling coordinates are strictly
/// increasing (a point of the open cell); otherwise ties are drawn often so
/// that boundary points come up.
Configuration sample_in_cell(const NOrdering& s, std::mt19937_64& rng, bool interior);

/// Coordinatewise average; both configurations must share labels and n.
Configuration midpoint(const Configuration& phi, const Configuration& psi);

/// Relabels the points by a permutation of the labels.
Configuration relabel(const LabelPermutation& g, const Configuration& phi);

/// Sampled check of C(S) inside C(T); S <= T is required.
bool functoriality_check(const NOrdering& s, const NOrdering& t, std::size_t samples,
                         std::uint64_t seed);

/// Same check against several T at once, reusing one set of samples of
/// C(S). Returns targets.size() when every sample lies in every C(T),
/// otherwise the index of the first failing T (or SIZE_MAX if a sample
/// misses C(S) itself).
std::size_t functoriality_check(const NOrdering& s, const std::vector<NOrdering>& targets,
                                std::size_t samples, std::uint64_t seed);

/// Midpoints of sampled pairs of open-cell points stay in the open cell.
bool convexity_probe(const NOrdering& s, std::size_t samples, std::uint64_t seed);

/// Every sampled configuration lies in C(cell_of(phi)), and cell_of(phi) is
/// the least element of { S : phi in C(S) }.
bool partition_check(const LabelSet& labels, int n, std::size_t samples,
                     std::uint64_t seed);

std::string to_string(const Rational& q);

}  // namespace thetaconf
