#pragma once

#include <cstdint>
#include <vector>

namespace semgof {

/// A non-decreasing tuple of 0-based variable indices. Length m tuples over
/// dimension q enumerate the multichoose(q, m) distinct symmetric-tensor slots.
using MultiIndex = std::vector<int>;

/// multichoose(q, m) = C(q + m - 1, m), the number of multisets of size m over q symbols.
std::int64_t multichoose(int q, int m);

/// Binomial coefficient C(n, k) as a 64-bit integer (exact for the small sizes used here).
std::int64_t binomial(int n, int k);

/// All non-decreasing tuples of length m over {0, ..., q-1} in lexicographic order.
/// This ordering is the canonical row/column order for every matrix builder in the library.
std::vector<MultiIndex> enumerate_multi_indices(int q, int m);

/// Position of a sorted multi-index in the enumerate_multi_indices(q, m) ordering.
std::int64_t multi_index_rank(int q, const MultiIndex& sorted_index);

/// All strictly increasing k-tuples over {0, ..., n-1} in lexicographic order.
std::vector<MultiIndex> enumerate_subsets(int n, int k);

/// Number of distinct permutations of a sorted multi-index (multinomial of its multiplicities).
std::int64_t distinct_permutation_count(const MultiIndex& sorted_index);

}  // namespace semgof
