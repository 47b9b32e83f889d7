#include "nlg/invbasis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nlg {

std::vector<FrequencyMatrix> bose_from_full(const TypeVector& t,
                                            const TypeVector& tp) {
    return contingency_tables(t, tp);
}

BigInt trace_bose(const TypeVector& t, const TypeVector& tp, int n) {
    if (t != tp) return 0;
    return multinomial(n, t);
}

std::vector<PTraceTerm> ptrace_tail_bose(const TypeVector& t,
                                         const TypeVector& tp, int n) {
    // tr_{2..n}[C_{t,t'}] = sum over first symbols (w, z) with
    // t - e_w == t' - e_z >= 0 of multinomial(n-1, t - e_w) |w><z|.
    std::vector<PTraceTerm> out;
    int d = t.size();
    for (int w = 0; w < d; ++w) {
        if (t[w] == 0) continue;
        for (int z = 0; z < d; ++z) {
            if (tp[z] == 0) continue;
            TypeVector tr = t, tpr = tp;
            tr[w]--;
            tpr[z]--;
            if (tr != tpr) continue;
            out.push_back({multinomial(n - 1, tr), w, z});
        }
    }
    return out;
}

std::vector<BranchTerm> branch_subfactor(const TypeVector& t,
                                         const TypeVector& tp, int n, int dL,
                                         int dR) {
    // tr over the L part of copy n: strings with last symbol w (type t)
    // biject with length-(n-1) strings of type t - e_w, so
    //   tr_{L_n}[C_{t,t'}] = sum_{w,z: wL==zL} C_{t-e_w, t'-e_z} (x) |wR><zR|.
    int d = dL * dR;
    if ((int)t.size() != d || (int)tp.size() != d)
        throw std::invalid_argument("branch_subfactor: type length != dL*dR");
    std::vector<BranchTerm> out;
    for (int w = 0; w < d; ++w) {
        if (t[w] == 0) continue;
        for (int z = 0; z < d; ++z) {
            if (tp[z] == 0) continue;
            if (w / dR != z / dR) continue;  // L parts must match to survive
            BranchTerm term;
            term.tRed = t;
            term.tpRed = tp;
            term.tRed[w]--;
            term.tpRed[z]--;
            term.iR = w % dR;
            term.jR = z % dR;
            term.mult = 1;
            out.push_back(std::move(term));
        }
    }
    (void)n;
    return out;
}

long string_index(const std::vector<int>& s, int d) {
    long idx = 0, stride = 1;
    for (int sym : s) {
        idx += (long)(sym - 1) * stride;
        stride *= d;
    }
    return idx;
}

std::map<std::pair<TypeVector, TypeVector>, double> coefficients_bose(
    const std::function<double(long, long)>& entryOracle, int n, int d,
    long* queryCount) {
    std::map<std::pair<TypeVector, TypeVector>, double> out;
    long queries = 0;
    auto ts = types(n, d);
    for (const auto& t : ts) {
        for (const auto& tp : ts) {
            // Canonical representative: first contingency table in the class.
            auto tables = contingency_tables(t, tp);
            auto [a, b] = representative_strings(tables.front());
            double v = entryOracle(string_index(a, d), string_index(b, d));
            queries++;
            out[{t, tp}] = v;
        }
    }
    if (queryCount) *queryCount = queries;
    return out;
}

static long checked_dim(int d, int n) {
    long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > kDenseCap)
            throw std::runtime_error("dense materialization cap exceeded");
    }
    return dim;
}

Eigen::MatrixXd dense_orbit(const FrequencyMatrix& D, int d, int n) {
    long dim = checked_dim(d, n);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
    // Enumerate the orbit as distinct permutations of the paired string.
    auto [a, b] = representative_strings(D);
    std::vector<std::pair<int, int>> pairs(n);
    for (int k = 0; k < n; ++k) pairs[k] = {a[k], b[k]};
    std::sort(pairs.begin(), pairs.end());
    do {
        std::vector<int> ra(n), rb(n);
        for (int k = 0; k < n; ++k) {
            ra[k] = pairs[k].first;
            rb[k] = pairs[k].second;
        }
        A(string_index(ra, d), string_index(rb, d)) = 1.0;
    } while (std::next_permutation(pairs.begin(), pairs.end()));
    return A;
}

Eigen::VectorXd dense_type_vector(const TypeVector& t, int n, int d) {
    long dim = checked_dim(d, n);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    std::vector<int> s;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < t[i]; ++k) s.push_back(i + 1);
    std::sort(s.begin(), s.end());
    do {
        v(string_index(s, d)) = 1.0;
    } while (std::next_permutation(s.begin(), s.end()));
    return v;
}

Eigen::MatrixXd dense_bose(const TypeVector& t, const TypeVector& tp, int n,
                           int d) {
    Eigen::VectorXd u = dense_type_vector(t, n, d);
    Eigen::VectorXd v = dense_type_vector(tp, n, d);
    return u * v.transpose();
}

}  // namespace nlg
