#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nlg/symcomb.hpp"

// Canonical bases of S_n-invariant operator spaces: 0/1 orbit matrices A_D on
// the full n-fold tensor power and the symmetric-subspace elements
// C_{t,t'} = |s_t><s_{t'}| built from unnormalized type sums. Closed-form
// traces and partial traces keep everything exact; dense materialization
// exists only as a test oracle below a configurable cap.

namespace nlg {

// d^n above which dense reconstruction refuses to run.
inline constexpr long kDenseCap = 4096;

struct InvariantBasisElement {
    enum class Kind { Full, Bose };
    Kind kind;
    FrequencyMatrix D;  // orbit label; for Bose, row/col sums give (t, t')
    int localDim = 0;
    int n = 0;
};

// One term of a partial-trace expansion: coefficient times a single-factor
// matrix unit |i><j| (0-based).
struct PTraceTerm {
    BigInt coeff;
    int i = 0;
    int j = 0;
};

// One term of the branching expansion when the L part of the last copy of a
// composite factor H = L x R is traced out of C_{t,t'}.
struct BranchTerm {
    TypeVector tRed, tpRed;  // types on n-1 composite copies
    int iR = 0, jR = 0;      // matrix unit on the retained R factor, 0-based
    BigInt mult;
};

// Frequency matrices whose orbit matrices sum to C_{t,t'} (the contingency
// tables with margins t, t').
std::vector<FrequencyMatrix> bose_from_full(const TypeVector& t,
                                            const TypeVector& tp);

// tr[C_{t,t'}] = multinomial(n, t) when t == t', else 0.
BigInt trace_bose(const TypeVector& t, const TypeVector& tp, int n);

// Partial trace of C_{t,t'} over copies 2..n, expanded in first-copy matrix
// units. Empty when t, t' differ by more than one unit transfer; a single
// term when they differ by exactly one; a diagonal sum when t == t'.
std::vector<PTraceTerm> ptrace_tail_bose(const TypeVector& t,
                                         const TypeVector& tp, int n);

// Partial trace over the L part of copy n of C_{t,t'} on n copies of a
// composite space of dimension dL*dR (symbol w = wL*dR + wR). Terms carry
// Bose elements on n-1 composite copies tensored with an R matrix unit.
std::vector<BranchTerm> branch_subfactor(const TypeVector& t,
                                         const TypeVector& tp, int n, int dL,
                                         int dR);

// Reads off the coefficients of an operator supported on the Bose basis,
// querying the entry oracle exactly once per (t, t') class at the
// representative index pair of the canonical contingency table.
std::map<std::pair<TypeVector, TypeVector>, double> coefficients_bose(
    const std::function<double(long, long)>& entryOracle, int n, int d,
    long* queryCount = nullptr);

// Index of a 1-based symbol string in the d^n product basis; the first copy
// varies fastest.
long string_index(const std::vector<int>& s, int d);

// Dense 0/1 orbit matrix A_D (test oracle; requires d^n <= kDenseCap).
Eigen::MatrixXd dense_orbit(const FrequencyMatrix& D, int d, int n);

// Dense C_{t,t'} = |s_t><s_{t'}| (test oracle).
Eigen::MatrixXd dense_bose(const TypeVector& t, const TypeVector& tp, int n,
                           int d);

// Dense unnormalized type sum |s_t>.
Eigen::VectorXd dense_type_vector(const TypeVector& t, int n, int d);

}  // namespace nlg
