#include "nlg/symcomb.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nlg {

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
    return w;
}

TypeVector Tableau::content(int d) const {
    TypeVector c(d, 0);
    for (const auto& r : rows)
        for (int v : r) c[v - 1]++;
    return c;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows.size(); ++i) {
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
            if (i + 1 < rows.size() && j < rows[i + 1].size() &&
                rows[i][j] >= rows[i + 1][j])
                return false;
        }
    }
    return true;
}

std::vector<TypeVector> types(int n, int d) {
    std::vector<TypeVector> out;
    TypeVector cur(d, 0);
    // Fill position by position; ascending loop gives lexicographic order.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == d - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

BigInt multinomial(int n, const TypeVector& t) {
    if (std::accumulate(t.begin(), t.end(), 0) != n)
        throw std::invalid_argument("multinomial: type does not sum to n");
    BigInt r = factorial(n);
    for (int ti : t) r /= factorial(ti);
    return r;
}

std::vector<Partition> partitions(int n, int maxHeight) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxPart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if ((int)cur.size() == maxHeight) return;
        for (int p = std::min(rem, maxPart); p >= 1; --p) {
            // Remaining parts are each <= p, so need rem - p <= p*(height left - 1).
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) return {Partition{}};
    rec(rec, n, n);
    return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& shape, int d) {
    std::vector<Tableau> out;
    Tableau t;
    t.shape = shape;
    t.rows.resize(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) t.rows[i].assign(shape[i], 0);
    // Fill cells in reading-word order (row-major); the ascending value loop
    // then yields tableaux sorted lexicographically by reading word.
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.push_back({(int)i, j});
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = cells[c];
        int lo = 1;
        if (j > 0) lo = std::max(lo, t.rows[i][j - 1]);        // rows nondecreasing
        if (i > 0) lo = std::max(lo, t.rows[i - 1][j] + 1);    // columns strict
        for (int v = lo; v <= d; ++v) {
            t.rows[i][j] = v;
            self(self, c + 1);
        }
        t.rows[i][j] = 0;
    };
    rec(rec, 0);
    return out;
}

BigInt schur_dim(const Partition& shape, int d) {
    if ((int)shape.size() > d) return 0;
    BigInt num = 1, den = 1;
    int h = shape.size();
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            // Hook length at (i, j), 0-based.
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < h; ++k)
                if (shape[k] > j) leg++;
            num *= (d + j - i);
            den *= (arm + leg + 1);
        }
    }
    return num / den;
}

BigInt specht_dim(const Partition& shape) {
    int n = std::accumulate(shape.begin(), shape.end(), 0);
    BigInt den = 1;
    int h = shape.size();
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < h; ++k)
                if (shape[k] > j) leg++;
            den *= (arm + leg + 1);
        }
    }
    return factorial(n) / den;
}

std::vector<FrequencyMatrix> orbit_representatives(int n, int d) {
    std::vector<FrequencyMatrix> out;
    std::vector<int> flat(d * d, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == d * d - 1) {
            flat[pos] = rem;
            FrequencyMatrix D(d, std::vector<int>(d));
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) D[i][j] = flat[i * d + j];
            out.push_back(D);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            flat[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

std::vector<FrequencyMatrix> contingency_tables(const TypeVector& t,
                                                const TypeVector& tp) {
    int n = std::accumulate(t.begin(), t.end(), 0);
    if (n != std::accumulate(tp.begin(), tp.end(), 0))
        throw std::invalid_argument("contingency_tables: totals differ");
    int rows = t.size(), cols = tp.size();
    std::vector<FrequencyMatrix> out;
    FrequencyMatrix D(rows, std::vector<int>(cols, 0));
    TypeVector colRem = tp;
    // Row-major fill with budget pruning; ascending loops keep the output in
    // row-major lexicographic order.
    auto rec = [&](auto&& self, int i, int j, int rowRem) -> void {
        if (i == rows) {
            out.push_back(D);
            return;
        }
        if (j == cols) {
            if (rowRem == 0) self(self, i + 1, 0, i + 1 < rows ? t[i + 1] : 0);
            return;
        }
        int hi = std::min(rowRem, colRem[j]);
        for (int v = 0; v <= hi; ++v) {
            D[i][j] = v;
            colRem[j] -= v;
            self(self, i, j + 1, rowRem - v);
            colRem[j] += v;
        }
        D[i][j] = 0;
    };
    rec(rec, 0, 0, rows > 0 ? t[0] : 0);
    return out;
}

TypeVector row_sums(const FrequencyMatrix& D) {
    TypeVector s(D.size(), 0);
    for (size_t i = 0; i < D.size(); ++i)
        s[i] = std::accumulate(D[i].begin(), D[i].end(), 0);
    return s;
}

TypeVector col_sums(const FrequencyMatrix& D) {
    TypeVector s(D.empty() ? 0 : D[0].size(), 0);
    for (const auto& row : D)
        for (size_t j = 0; j < row.size(); ++j) s[j] += row[j];
    return s;
}

BigInt orbit_size(const FrequencyMatrix& D) {
    int n = 0;
    BigInt den = 1;
    for (const auto& row : D)
        for (int v : row) {
            n += v;
            den *= factorial(v);
        }
    return factorial(n) / den;
}

std::pair<std::vector<int>, std::vector<int>> representative_strings(
    const FrequencyMatrix& D) {
    std::vector<int> a, b;
    for (size_t i = 0; i < D.size(); ++i)
        for (size_t j = 0; j < D[i].size(); ++j)
            for (int k = 0; k < D[i][j]; ++k) {
                a.push_back((int)i + 1);
                b.push_back((int)j + 1);
            }
    return {a, b};
}

}  // namespace nlg
