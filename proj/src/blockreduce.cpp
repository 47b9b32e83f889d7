#include "nlg/blockreduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <unsupported/Eigen/KroneckerProduct>

namespace nlg {

namespace {

// Signed string expansion of a tableau: all (string, sign) pairs obtained
// from distinct row-equivalent fillings composed with column-stabilizer
// permutations. Strings are read off cells in row-major order.
struct SignedStrings {
    std::vector<std::pair<std::vector<int>, int>> items;
};

SignedStrings signed_strings(const Tableau& tau) {
    const auto& shape = tau.shape;
    int ncells = std::accumulate(shape.begin(), shape.end(), 0);
    // Cell bookkeeping: row-major order; cells_by_col for the stabilizer.
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.push_back({(int)i, j});
    int ncols = shape.empty() ? 0 : shape[0];
    std::vector<std::vector<int>> colCells(ncols);
    for (int c = 0; c < ncells; ++c) colCells[cells[c].second].push_back(c);

    // Column-stabilizer elements as (cell permutation, sign).
    std::vector<std::pair<std::vector<int>, int>> colPerms = {
        {std::vector<int>(ncells), 1}};
    std::iota(colPerms[0].first.begin(), colPerms[0].first.end(), 0);
    for (int col = 0; col < ncols; ++col) {
        const auto& cc = colCells[col];
        if (cc.size() < 2) continue;
        std::vector<int> idx(cc.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<std::pair<std::vector<int>, int>> next;
        do {
            // Sign of this permutation of the column cells.
            int sgn = 1;
            std::vector<int> tmp = idx;
            for (size_t i = 0; i < tmp.size(); ++i)
                while (tmp[i] != (int)i) {
                    std::swap(tmp[i], tmp[tmp[i]]);
                    sgn = -sgn;
                }
            for (const auto& [base, bsgn] : colPerms) {
                auto perm = base;
                for (size_t i = 0; i < cc.size(); ++i)
                    perm[cc[i]] = base[cc[idx[i]]];
                next.push_back({perm, bsgn * sgn});
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        colPerms = std::move(next);
    }

    // Distinct row-equivalent fillings, as flat row-major entry vectors.
    std::vector<std::vector<std::vector<int>>> rowChoices;
    for (const auto& row : tau.rows) {
        auto sorted = row;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(sorted);
        } while (std::next_permutation(sorted.begin(), sorted.end()));
        rowChoices.push_back(std::move(perms));
    }
    std::vector<std::vector<int>> fillings;
    std::vector<int> cur;
    auto rec = [&](auto&& self, size_t r) -> void {
        if (r == rowChoices.size()) {
            fillings.push_back(cur);
            return;
        }
        for (const auto& choice : rowChoices[r]) {
            cur.insert(cur.end(), choice.begin(), choice.end());
            self(self, r + 1);
            cur.resize(cur.size() - choice.size());
        }
    };
    rec(rec, 0);

    SignedStrings out;
    for (const auto& fill : fillings)
        for (const auto& [perm, sgn] : colPerms) {
            std::vector<int> s(ncells);
            for (int y = 0; y < ncells; ++y) s[y] = fill[perm[y]];
            out.items.push_back({std::move(s), sgn});
        }
    return out;
}

std::vector<int> decode_string(long idx, int d, int n) {
    std::vector<int> s(n);
    for (int k = 0; k < n; ++k) {
        s[k] = (int)(idx % d) + 1;
        idx /= d;
    }
    return s;
}

FrequencyMatrix pair_frequency(const std::vector<int>& a,
                               const std::vector<int>& b, int d) {
    FrequencyMatrix D(d, std::vector<int>(d, 0));
    for (size_t k = 0; k < a.size(); ++k) D[a[k] - 1][b[k] - 1]++;
    return D;
}

}  // namespace

Polytabloid polytabloid(const Tableau& tau, int d) {
    if (!tau.is_semistandard())
        throw std::invalid_argument("polytabloid: tableau not semistandard");
    auto ss = signed_strings(tau);
    std::map<long, double> acc;
    for (const auto& [s, sgn] : ss.items) acc[string_index(s, d)] += sgn;
    Polytabloid p;
    p.tableau = tau;
    for (const auto& [idx, c] : acc)
        if (c != 0.0) p.entries.push_back({idx, c});
    return p;
}

Eigen::MatrixXd representative_matrix(const Partition& lambda, int n, int d) {
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > kDenseCap)
            throw std::runtime_error("dense materialization cap exceeded");
    }
    auto tabs = semistandard_tableaux(lambda, d);
    Eigen::MatrixXd U = Eigen::MatrixXd::Zero(dim, (long)tabs.size());
    for (size_t c = 0; c < tabs.size(); ++c)
        for (const auto& [idx, v] : polytabloid(tabs[c], d).entries)
            U(idx, (long)c) = v;
    return U;
}

Eigen::MatrixXd dense_transform(const Eigen::MatrixXd& Z,
                                const Partition& lambda, int n, int d,
                                int sideDim) {
    Eigen::MatrixXd U = representative_matrix(lambda, n, d);
    Eigen::MatrixXd W = Eigen::kroneckerProduct(
        Eigen::MatrixXd::Identity(sideDim, sideDim), U);
    return W.transpose() * Z * W;
}

Eigen::MatrixXd block_transform_row(
    const std::function<double(int, int, int, int)>& z, int n, int d,
    int sideDim) {
    auto ts = types(n, d);
    int T = (int)ts.size();
    std::vector<double> m(T);
    for (int t = 0; t < T; ++t) m[t] = (double)multinomial(n, ts[t]);
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(sideDim * T, sideDim * T);
    for (int i = 0; i < sideDim; ++i)
        for (int j = 0; j < sideDim; ++j)
            for (int t = 0; t < T; ++t)
                for (int tp = 0; tp < T; ++tp)
                    B(i * T + t, j * T + tp) = m[t] * m[tp] * z(i, j, t, tp);
    return B;
}

Eigen::MatrixXd block_transform_row(
    const std::map<std::pair<TypeVector, TypeVector>, double>& coeffs, int n,
    int d) {
    auto ts = types(n, d);
    return block_transform_row(
        [&](int, int, int t, int tp) {
            auto it = coeffs.find({ts[t], ts[tp]});
            return it == coeffs.end() ? 0.0 : it->second;
        },
        n, d, 1);
}

GeneralTransform::GeneralTransform(Partition lambda, int n, int d)
    : lambda_(std::move(lambda)), n_(n), d_(d) {
    tableaux_ = semistandard_tableaux(lambda_, d_);
    tabloids_.reserve(tableaux_.size());
    for (const auto& t : tableaux_) tabloids_.push_back(polytabloid(t, d_));
    cache_.resize(tableaux_.size() * tableaux_.size());
    cached_.assign(cache_.size(), false);
}

const std::map<FrequencyMatrix, double>& GeneralTransform::pair_coefficients(
    int tau, int gamma) const {
    size_t key = (size_t)tau * tableaux_.size() + gamma;
    if (!cached_[key]) {
        std::map<FrequencyMatrix, double> acc;
        for (const auto& [ia, ca] : tabloids_[tau].entries) {
            auto a = decode_string(ia, d_, n_);
            for (const auto& [ib, cb] : tabloids_[gamma].entries) {
                auto b = decode_string(ib, d_, n_);
                acc[pair_frequency(a, b, d_)] += ca * cb;
            }
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0.0; });
        cache_[key] = std::move(acc);
        cached_[key] = true;
    }
    return cache_[key];
}

double GeneralTransform::direct_pair_coefficient(
    int tau, int gamma, const FrequencyMatrix& D) const {
    // Enumerate the orbit of D and pair against the sparse polytabloids.
    std::unordered_map<long, double> ua, ub;
    for (const auto& [idx, v] : tabloids_[tau].entries) ua[idx] = v;
    for (const auto& [idx, v] : tabloids_[gamma].entries) ub[idx] = v;
    auto [a, b] = representative_strings(D);
    std::vector<std::pair<int, int>> pairs(n_);
    for (int k = 0; k < n_; ++k) pairs[k] = {a[k], b[k]};
    std::sort(pairs.begin(), pairs.end());
    double sum = 0.0;
    do {
        std::vector<int> ra(n_), rb(n_);
        for (int k = 0; k < n_; ++k) {
            ra[k] = pairs[k].first;
            rb[k] = pairs[k].second;
        }
        auto ita = ua.find(string_index(ra, d_));
        if (ita == ua.end()) continue;
        auto itb = ub.find(string_index(rb, d_));
        if (itb == ub.end()) continue;
        sum += ita->second * itb->second;
    } while (std::next_permutation(pairs.begin(), pairs.end()));
    return sum;
}

Eigen::MatrixXd GeneralTransform::assemble(
    const std::function<double(int, int, const FrequencyMatrix&)>& z,
    int sideDim) const {
    int T = num_tableaux();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(sideDim * T, sideDim * T);
    for (int tau = 0; tau < T; ++tau)
        for (int gamma = 0; gamma < T; ++gamma)
            for (const auto& [D, w] : pair_coefficients(tau, gamma))
                for (int i = 0; i < sideDim; ++i)
                    for (int j = 0; j < sideDim; ++j)
                        B(i * T + tau, j * T + gamma) += z(i, j, D) * w;
    return B;
}

}  // namespace nlg
