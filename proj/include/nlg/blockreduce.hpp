#pragma once

#include <functional>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "nlg/invbasis.hpp"
#include "nlg/symcomb.hpp"

// PSD-preserving block transforms for S_n-invariant operators: polytabloid
// vectors, dense representative matrices U_lambda (test oracle), the
// closed-form row-shape transform on the Bose basis, and the general-shape
// transform evaluated through orbit-monomial coefficients.
//
// Tensor conventions: within H^n the first copy varies fastest; an optional
// side factor is slowest. Blocks are indexed (side * numTableaux + tableau)
// with tableaux in lexicographic reading-word order. U_lambda columns are
// unnormalized integer polytabloids, so the transform is a congruence, not an
// isometry: trace normalizations must stay in the original coefficient space.

namespace nlg {

struct Polytabloid {
    Tableau tableau;
    // (index in the d^n product basis, integer coefficient)
    std::vector<std::pair<long, double>> entries;
};

// Row-symmetrized, column-antisymmetrized basis vector of the given
// semistandard tableau: sum over distinct row-equivalent fillings and signed
// column-stabilizer permutations of the corresponding basis tensors.
Polytabloid polytabloid(const Tableau& tau, int d);

// Dense d^n x schur_dim(lambda, d) matrix whose columns are the polytabloids
// of all semistandard tableaux (test oracle; capped).
Eigen::MatrixXd representative_matrix(const Partition& lambda, int n, int d);

// (I_side (x) U_lambda)^T Z (I_side (x) U_lambda), side factor slowest
// (test oracle; capped).
Eigen::MatrixXd dense_transform(const Eigen::MatrixXd& Z,
                                const Partition& lambda, int n, int d,
                                int sideDim);

// Row-shape (Bose) block transform in closed form: the block entry at
// ((i, t), (j, t')) is multinomial(n, t) * multinomial(n, t') * z(i, j, t, t')
// where t, t' run over types(n, d) in canonical order.
Eigen::MatrixXd block_transform_row(
    const std::function<double(int, int, int, int)>& z, int n, int d,
    int sideDim);

// Convenience overload without a side factor, coefficients keyed by type pair.
Eigen::MatrixXd block_transform_row(
    const std::map<std::pair<TypeVector, TypeVector>, double>& coeffs, int n,
    int d);

// General-shape transform: for tableaux tau, gamma of shape lambda the pairing
// u_tau^T A_D u_gamma is the coefficient of the orbit monomial of D in the
// polynomial obtained by expanding the double sum over row-equivalent fillings
// and signed column-stabilizer pairs. Pairings are memoized per (tau, gamma).
class GeneralTransform {
public:
    GeneralTransform(Partition lambda, int n, int d);

    int num_tableaux() const { return (int)tableaux_.size(); }
    const Partition& shape() const { return lambda_; }

    // Map D -> u_tau^T A_D u_gamma over all orbits where the pairing is
    // nonzero (monomial expansion route).
    const std::map<FrequencyMatrix, double>& pair_coefficients(int tau,
                                                               int gamma) const;

    // Independent sparse-vector route: explicit u_tau^T A_D u_gamma by
    // enumerating the orbit of D against the polytabloid entries.
    double direct_pair_coefficient(int tau, int gamma,
                                   const FrequencyMatrix& D) const;

    // Assemble the block of sum_{(i,j),D} z(i,j,D) |i><j| (x) A_D, side
    // factor slowest; z is queried only for orbits with nonzero pairings.
    Eigen::MatrixXd assemble(
        const std::function<double(int, int, const FrequencyMatrix&)>& z,
        int sideDim) const;

private:
    Partition lambda_;
    int n_, d_;
    std::vector<Tableau> tableaux_;
    std::vector<Polytabloid> tabloids_;
    mutable std::vector<std::map<FrequencyMatrix, double>> cache_;
    mutable std::vector<bool> cached_;
};

}  // namespace nlg
