#pragma once

#include <cstdint>
#include <vector>

namespace dwork {

using Tuple = std::vector<std::uint32_t>;

/// Multiplicity vector of a tuple: counts[v] = number of entries equal to v.
using Counts = std::vector<std::uint32_t>;

/// One coset of W under shifts by (1,...,1), with its permutation-class data.
struct CosetRep {
    Tuple w;                     // canonical: most zeros, then lexicographically smallest
    std::uint64_t class_size = 0; // cosets in the permutation class
    std::uint32_t coset_size = 0; // tuples in the coset
    std::size_t class_index = 0;
};

/// A permutation class of cosets.
struct CosetClass {
    Tuple rep;                   // sorted ascending, with the maximal number of zeros
    std::uint64_t size = 0;      // cosets in the class
    std::uint32_t distinct = 0;  // distinct entries s of rep
    std::uint32_t zero_free = 0; // N_w = d - s, zero-free tuples per coset
};

constexpr std::uint32_t kMaxClassDegree = 12;
constexpr std::uint32_t kMaxEnumerateDegree = 8;

/// Permutation classes in lexicographic order of rep; 2 <= d <= 12.
std::vector<CosetClass> coset_classes(std::uint32_t d);

/// Every coset exactly once, grouped by class in coset_classes order; 2 <= d <= 8.
std::vector<CosetRep> enumerate_cosets(std::uint32_t d);

/// Canonical representative of the coset of w.
Tuple canonical_rep(const Tuple& w, std::uint32_t d);

/// All tuples of W without zero entries, lexicographic; 2 <= d <= 8.
std::vector<Tuple> enumerate_Wss(std::uint32_t d);

/// The shifts of w having no zero entry.
std::vector<Tuple> zero_free_shifts(const Tuple& w, std::uint32_t d);

struct WeightedCounts {
    Counts counts;
    std::uint64_t tuples = 0; // orderings of the multiset
};

/// Zero-free multisets of size d summing to 0 mod d, with their numbers of orderings.
std::vector<WeightedCounts> wss_multisets(std::uint32_t d);

/// Number of cosets, d^{d-1} / d.
std::uint64_t coset_count(std::uint32_t d);

std::uint64_t factorial(std::uint32_t n);

} // namespace dwork
