#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact combinatorics of the symmetric-group action on n copies of a
// d-dimensional system: types (weight vectors), partitions, semistandard
// tableaux, orbit representatives of End(H^n) under S_n, and contingency
// tables with fixed margins. All counts use arbitrary-precision integers.

namespace nlg {

using BigInt = boost::multiprecision::cpp_int;

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// d nonnegative counts summing to n: the type/weight of a length-n string.
using TypeVector = std::vector<int>;

// Filling of a Young diagram with values in 1..d, one vector per row.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    // Reading word: rows concatenated top to bottom.
    std::vector<int> reading_word() const;
    // Number of occurrences of each symbol 1..d.
    TypeVector content(int d) const;
    bool is_semistandard() const;
};

// d x d nonnegative integer matrix; total sum identifies the copy count n.
using FrequencyMatrix = std::vector<std::vector<int>>;

// All length-d nonnegative integer vectors summing to n, ascending
// lexicographic. Size binom(n+d-1, n).
std::vector<TypeVector> types(int n, int d);

BigInt factorial(int n);
BigInt binomial(int n, int k);
// n! / prod t_i!; requires sum(t) == n.
BigInt multinomial(int n, const TypeVector& t);

// Partitions of n with at most maxHeight parts, descending lexicographic
// (starts with (n)).
std::vector<Partition> partitions(int n, int maxHeight);

// Semistandard tableaux of the given shape with entries in 1..d, sorted
// lexicographically by reading word. Size schur_dim(shape, d).
std::vector<Tableau> semistandard_tableaux(const Partition& shape, int d);

// Weyl-module dimension via the hook-content formula.
BigInt schur_dim(const Partition& shape, int d);
// Specht-module dimension via the hook-length formula.
BigInt specht_dim(const Partition& shape);

// All d x d frequency matrices with entry sum n, row-major lexicographic
// ascending. Each matrix labels one S_n-orbit of matrix-unit pairs.
std::vector<FrequencyMatrix> orbit_representatives(int n, int d);

// All nonnegative integer matrices with row sums t and column sums tp
// (same total), in row-major lexicographic ascending order.
std::vector<FrequencyMatrix> contingency_tables(const TypeVector& t,
                                                const TypeVector& tp);

TypeVector row_sums(const FrequencyMatrix& D);
TypeVector col_sums(const FrequencyMatrix& D);

// Number of string pairs (a, b) with frequency matrix D: n! / prod D_ij!.
BigInt orbit_size(const FrequencyMatrix& D);

// Representative strings (a, b) for the orbit of D, symbols 1-based:
// cell (i, j) visited row-major contributes D_ij copies of i to a and of
// j to b. a has type row_sums(D), b has type col_sums(D).
std::pair<std::vector<int>, std::vector<int>> representative_strings(
    const FrequencyMatrix& D);

}  // namespace nlg
