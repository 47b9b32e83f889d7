#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlg/invbasis.hpp"

#include <random>

using namespace nlg;

// Frozen regression fixture: the ten S_2-orbit classes on End((C^2)^{x2}),
// listed as (frequency matrix, 1-based one-positions of the dense 4x4
// reconstruction). Product-basis convention: first copy varies fastest, so
// |1> = |1,1>, |2> = |2,1>, |3> = |1,2>, |4> = |2,2>.
struct OrbitFixture {
    FrequencyMatrix D;
    std::vector<std::pair<int, int>> ones;
};
static const std::vector<OrbitFixture> kOrbitFixtures = {
    {{{2, 0}, {0, 0}}, {{1, 1}}},
    {{{0, 0}, {0, 2}}, {{4, 4}}},
    {{{1, 0}, {0, 1}}, {{2, 2}, {3, 3}}},
    {{{1, 1}, {0, 0}}, {{1, 2}, {1, 3}}},
    {{{1, 0}, {1, 0}}, {{2, 1}, {3, 1}}},
    {{{0, 2}, {0, 0}}, {{1, 4}}},
    {{{0, 0}, {2, 0}}, {{4, 1}}},
    {{{0, 1}, {1, 0}}, {{2, 3}, {3, 2}}},
    {{{0, 1}, {0, 1}}, {{2, 4}, {3, 4}}},
    {{{0, 0}, {1, 1}}, {{4, 2}, {4, 3}}},
};

TEST_CASE("frozen n=d=2 orbit matrices") {
    auto reps = orbit_representatives(2, 2);
    REQUIRE(reps.size() == 10);
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(4, 4);
    for (const auto& fix : kOrbitFixtures) {
        // Every fixture class must appear among the enumerated representatives.
        CHECK(std::find(reps.begin(), reps.end(), fix.D) != reps.end());
        Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(4, 4);
        for (auto [r, c] : fix.ones) expect(r - 1, c - 1) = 1.0;
        Eigen::MatrixXd got = dense_orbit(fix.D, 2, 2);
        CHECK(got == expect);
        total += got;
    }
    CHECK(total == Eigen::MatrixXd::Ones(4, 4));
}

TEST_CASE("bose_from_full reconstructs C elements") {
    // C_{(1,1),(1,1)} on two qubits: ones at (2,2),(2,3),(3,2),(3,3).
    auto ds = bose_from_full({1, 1}, {1, 1});
    REQUIRE(ds.size() == 2);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(4, 4);
    for (const auto& D : ds) sum += dense_orbit(D, 2, 2);
    Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(4, 4);
    expect(1, 1) = expect(1, 2) = expect(2, 1) = expect(2, 2) = 1.0;
    CHECK(sum == expect);
    CHECK(sum == dense_bose({1, 1}, {1, 1}, 2, 2));

    auto single = bose_from_full({2, 0}, {2, 0});
    REQUIRE(single.size() == 1);
    Eigen::MatrixXd e11 = Eigen::MatrixXd::Zero(4, 4);
    e11(0, 0) = 1.0;
    CHECK(dense_orbit(single[0], 2, 2) == e11);

    // Dense C equals the orbit-matrix sum for every type pair, small cases.
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= 2; ++d)
            for (const auto& t : types(n, d))
                for (const auto& tp : types(n, d)) {
                    Eigen::MatrixXd s =
                        Eigen::MatrixXd::Zero(1 << n, 1 << n);
                    for (const auto& D : bose_from_full(t, tp))
                        s += dense_orbit(D, d, n);
                    CHECK(s == dense_bose(t, tp, n, d));
                }
}

TEST_CASE("trace closed form") {
    CHECK(trace_bose({1, 1}, {1, 1}, 2) == 2);
    CHECK(trace_bose({2, 0}, {0, 2}, 2) == 0);
    CHECK(trace_bose({2, 1}, {2, 1}, 3) == 3);
    for (int n = 2; n <= 4; ++n)
        for (const auto& t : types(n, 2))
            for (const auto& tp : types(n, 2)) {
                double dtr = dense_bose(t, tp, n, 2).trace();
                CHECK(BigInt((long)std::lround(dtr)) == trace_bose(t, tp, n));
            }
}

static Eigen::MatrixXd dense_ptrace_tail(const Eigen::MatrixXd& M, int d,
                                         int n) {
    // Trace copies 2..n; first copy varies fastest.
    long tail = 1;
    for (int i = 1; i < n; ++i) tail *= d;
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (long k = 0; k < tail; ++k) R(i, j) += M(i + d * k, j + d * k);
    return R;
}

TEST_CASE("partial trace over tail copies") {
    {
        auto terms = ptrace_tail_bose({2, 0}, {2, 0}, 2);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].coeff == 1);
        CHECK(terms[0].i == 0);
        CHECK(terms[0].j == 0);
    }
    {
        auto terms = ptrace_tail_bose({2, 0}, {1, 1}, 2);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].coeff == 1);
        CHECK(terms[0].i == 0);
        CHECK(terms[0].j == 1);
    }
    CHECK(ptrace_tail_bose({2, 0}, {0, 2}, 2).empty());

    // Dense agreement on all type pairs for n <= 4, d <= 3.
    for (int n = 2; n <= 4; ++n)
        for (int d = 2; d <= 3; ++d)
            for (const auto& t : types(n, d))
                for (const auto& tp : types(n, d)) {
                    Eigen::MatrixXd expect =
                        dense_ptrace_tail(dense_bose(t, tp, n, d), d, n);
                    Eigen::MatrixXd got = Eigen::MatrixXd::Zero(d, d);
                    for (const auto& term : ptrace_tail_bose(t, tp, n))
                        got(term.i, term.j) += (double)term.coeff;
                    CHECK((got - expect).cwiseAbs().maxCoeff() == 0.0);
                }
}

TEST_CASE("branching when the L factor of the last copy is traced") {
    auto check_branch = [](int n, int dL, int dR) {
        int d = dL * dR;
        long dim = 1;
        for (int i = 0; i < n; ++i) dim *= d;
        long head = dim / d;
        for (const auto& t : types(n, d))
            for (const auto& tp : types(n, d)) {
                Eigen::MatrixXd M = dense_bose(t, tp, n, d);
                // Dense trace over the L part of copy n (slowest factor);
                // composite symbol w = wL*dR + wR.
                long redDim = head * dR;
                Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(redDim, redDim);
                for (int wR = 0; wR < dR; ++wR)
                    for (int zR = 0; zR < dR; ++zR)
                        for (int wL = 0; wL < dL; ++wL)
                            for (long h = 0; h < head; ++h)
                                for (long hp = 0; hp < head; ++hp)
                                    expect(h + wR * head, hp + zR * head) +=
                                        M(h + (long)(wL * dR + wR) * head,
                                          hp + (long)(wL * dR + zR) * head);
                Eigen::MatrixXd got = Eigen::MatrixXd::Zero(redDim, redDim);
                for (const auto& term : branch_subfactor(t, tp, n, dL, dR)) {
                    Eigen::MatrixXd C =
                        dense_bose(term.tRed, term.tpRed, n - 1, d);
                    for (long h = 0; h < head; ++h)
                        for (long hp = 0; hp < head; ++hp)
                            got(h + term.iR * head, hp + term.jR * head) +=
                                (double)term.mult * C(h, hp);
                }
                CHECK((got - expect).cwiseAbs().maxCoeff() == 0.0);
            }
    };
    check_branch(2, 2, 1);  // degenerate R: plain last-copy trace
    check_branch(3, 2, 1);
    check_branch(3, 1, 2);  // degenerate L: nothing traced per copy symbol
    check_branch(3, 2, 2);
    check_branch(2, 2, 2);
}

TEST_CASE("coefficient recovery from entry oracle") {
    int n = 2, d = 2;
    // Oracle: projector onto the symmetric subspace of two qubits.
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(4, 4);
    for (const auto& t : types(n, d)) {
        Eigen::MatrixXd C = dense_bose(t, t, n, d);
        P += C / (double)multinomial(n, t);
    }
    long queries = 0;
    auto coeffs = coefficients_bose(
        [&](long r, long c) { return P(r, c); }, n, d, &queries);
    CHECK(queries == 9);  // binom(3,2)^2
    for (const auto& [key, v] : coeffs) {
        if (key.first == key.second)
            CHECK(v == doctest::Approx(1.0 / (double)multinomial(n, key.first))
                           .epsilon(1e-14));
        else
            CHECK(v == doctest::Approx(0.0).epsilon(1e-14));
    }

    // Oracle = a single basis element: indicator coefficients.
    Eigen::MatrixXd C = dense_bose({1, 1}, {1, 1}, n, d);
    auto coeffs2 = coefficients_bose(
        [&](long r, long c) { return C(r, c); }, n, d, nullptr);
    for (const auto& [key, v] : coeffs2) {
        double expect =
            (key.first == TypeVector{1, 1} && key.second == TypeVector{1, 1})
                ? 1.0
                : 0.0;
        CHECK(v == expect);
    }

    // Random Bose operator reconstructed exactly, n=3, d=2.
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(8, 8);
    std::map<std::pair<TypeVector, TypeVector>, double> truth;
    for (const auto& t : types(3, 2))
        for (const auto& tp : types(3, 2)) {
            double z = unif(rng);
            truth[{t, tp}] = z;
            Z += z * dense_bose(t, tp, 3, 2);
        }
    auto rec = coefficients_bose([&](long r, long c) { return Z(r, c); }, 3, 2,
                                 nullptr);
    for (const auto& [key, v] : truth)
        CHECK(rec.at(key) == doctest::Approx(v).epsilon(1e-14));
}

TEST_CASE("dense cap enforced") {
    CHECK_THROWS(dense_orbit(orbit_representatives(13, 2).front(), 2, 13));
}
