#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "qa/surgery.hpp"

using namespace qa;

namespace {

SurgeryPresentation three_comp(const std::string& c0, const std::string& c1,
                               const std::string& c2, long long l01, long long l02,
                               long long l12) {
    SurgeryPresentation P;
    P.components = {{"C0", ExtendedRational::parse(c0), true},
                    {"C1", ExtendedRational::parse(c1), true},
                    {"C2", ExtendedRational::parse(c2), true}};
    P.linking = {{0, l01, l02}, {l01, 0, l12}, {l02, l12, 0}};
    return P;
}

// Smith-normal-form |det| oracle on the presentation matrix, computed by
// integer row/column reduction (independent of the library's elimination).
long long snf_order(const SurgeryPresentation& P) {
    const int m = static_cast<int>(P.components.size());
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m));
    for (int i = 0; i < m; ++i) {
        const auto& r = P.components[i].coeff;
        const long long p = r.is_infinite() ? 1 : r.p;
        const long long q = r.is_infinite() ? 0 : r.q;
        for (int j = 0; j < m; ++j) a[i][j] = (i == j) ? p : q * P.linking[i][j];
    }
    long long order = 1;
    for (int k = 0; k < m; ++k) {
        // find a pivot of minimal nonzero magnitude in the remaining block
        while (true) {
            int pi = -1, pj = -1;
            for (int i = k; i < m; ++i)
                for (int j = k; j < m; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || std::llabs(a[i][j]) < std::llabs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) return 0;  // zero block: infinite homology
            std::swap(a[k], a[pi]);
            for (int i = 0; i < m; ++i) std::swap(a[i][k], a[i][pj]);
            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                const long long f = a[i][k] / a[k][k];
                for (int j = k; j < m; ++j) a[i][j] -= f * a[k][j];
                if (a[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < m; ++j) {
                const long long f = a[k][j] / a[k][k];
                for (int i = k; i < m; ++i) a[i][j] -= f * a[i][k];
                if (a[k][j] != 0) clean = false;
            }
            if (clean) break;
        }
        order *= std::llabs(a[k][k]);
    }
    return order;
}

std::mt19937 rng(2024);

SurgeryPresentation random_presentation() {
    std::uniform_int_distribution<int> comp_d(1, 4), lk_d(-5, 5), p_d(-9, 9), q_d(1, 9);
    const int m = comp_d(rng);
    SurgeryPresentation P;
    for (int i = 0; i < m; ++i) {
        long long p = p_d(rng), q = q_d(rng);
        if (p == 0) p = 1;
        P.components.push_back({"C" + std::to_string(i), ExtendedRational(p, q), true});
    }
    P.linking.assign(m, std::vector<long long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) P.linking[i][j] = P.linking[j][i] = lk_d(rng);
    return P;
}

}  // namespace

TEST_CASE("rolfsen twist: printed section-2 numbers") {
    // (lk01, lk12, lk02) = (1, 3, 3) fits all chains that use this link
    SurgeryPresentation P = three_comp("5/2", "1/2", "-1", 1, 3, 3);
    SurgeryPresentation Q = rolfsen_twist(P, "C1", -2);
    CHECK(Q.components[1].coeff.is_infinite());
    CHECK(Q.components[0].coeff == ExtendedRational(1, 2));
    CHECK(Q.components[2].coeff == ExtendedRational(-19, 1));
    SurgeryPresentation R = delete_infinity(Q, "C1");
    CHECK(R.components.size() == 2);
    CHECK(R.components[0].coeff == ExtendedRational(1, 2));
    CHECK(R.components[1].coeff == ExtendedRational(-19, 1));
    SurgeryPresentation S = rolfsen_twist(R, "C0", -2);
    CHECK(S.components[0].coeff.is_infinite());
    CHECK(S.components[1].coeff == ExtendedRational(-37, 1));
    SurgeryPresentation T = delete_infinity(S, "C0");
    CHECK(T.components.size() == 1);
    CHECK(h1_order(T) == 37);
}

TEST_CASE("rolfsen twist edge cases") {
    SurgeryPresentation P = three_comp("5/2", "1/2", "-1", 1, 3, 3);
    CHECK(rolfsen_twist(P, "C0", 0).components == P.components);
    CHECK(rolfsen_twist(P, "C0", 0).linking == P.linking);
    CHECK_THROWS_AS(rolfsen_twist(P, "C9", 1), surgery_error);
    SurgeryPresentation K = P;
    K.components[0].unknotted = false;
    CHECK_THROWS_AS(rolfsen_twist(K, "C0", 1), surgery_error);
    SurgeryPresentation I = P;
    I.components[0].coeff = ExtendedRational::infinity();
    CHECK_THROWS_AS(rolfsen_twist(I, "C0", 1), surgery_error);
    CHECK_THROWS_AS(delete_infinity(P, "C0"), surgery_error);
}

TEST_CASE("h1_order") {
    SurgeryPresentation single;
    single.components = {{"C0", ExtendedRational(-37, 1), true}};
    single.linking = {{0}};
    CHECK(h1_order(single) == 37);

    SurgeryPresentation two;
    two.components = {{"C0", ExtendedRational(2, 1), true},
                      {"C1", ExtendedRational(3, 1), true}};
    two.linking = {{0, 1}, {1, 0}};
    CHECK(h1_order(two) == 5);
    CHECK(snf_order(two) == 5);

    SurgeryPresentation empty;
    CHECK(h1_order(empty) == 1);
}

TEST_CASE("property: h1 invariance under twists and deletions") {
    int checked = 0;
    std::uniform_int_distribution<int> t_d(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        SurgeryPresentation P = random_presentation();
        const long long before = h1_order(P);
        CHECK(before == snf_order(P));
        std::uniform_int_distribution<int> u_d(0, static_cast<int>(P.components.size()) - 1);
        const std::string u = P.components[u_d(rng)].id;
        const long long t = t_d(rng);
        SurgeryPresentation Q = rolfsen_twist(P, u, t);
        CHECK(h1_order(Q) == before);
        // symmetric zero-diagonal preserved
        Q.validate();
        if (Q.components[Q.index_of(u)].coeff.is_infinite()) {
            SurgeryPresentation D = delete_infinity(Q, u);
            CHECK(h1_order(D) == before);
            ++checked;
        } else {
            // untwist restores exactly
            SurgeryPresentation R = rolfsen_twist(Q, u, -t);
            CHECK(R.components == P.components);
            CHECK(R.linking == P.linking);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("run_script with assertions") {
    TwistScript s;
    s.initial = three_comp("5/2", "1/2", "-1", 1, 3, 3);
    TwistMove m1{"C1", -2, false, {{"C0", ExtendedRational(1, 2)},
                                   {"C1", ExtendedRational::infinity()},
                                   {"C2", ExtendedRational(-19, 1)}}};
    TwistMove d1{"C1", 0, true, {}};
    TwistMove m2{"C0", -2, false, {{"C2", ExtendedRational(-37, 1)}}};
    TwistMove d2{"C0", 0, true, {}};
    s.moves = {m1, d1, m2, d2};
    auto [fin, report] = run_script(s);
    REQUIRE(fin.components.size() == 1);
    CHECK(fin.components[0].coeff == ExtendedRational(-37, 1));
    CHECK(report.steps.size() == 4);
    CHECK(h1_order(s.initial) == 37);

    // corrupt an expectation: the failure names the move
    s.moves[2].expect["C2"] = ExtendedRational(-36, 1);
    CHECK_THROWS_WITH_AS(run_script(s),
                         doctest::Contains("move 2"), surgery_error);
}

TEST_CASE("fit_linking_matrix on a synthetic problem") {
    FitProblem prob;
    prob.component_count = 2;
    prob.bound = 10;
    FitAssignment a;
    a.coeffs = {ExtendedRational(2, 1), ExtendedRational(3, 1)};
    a.slope = 5;  // |6 - lk^2| = 5 -> lk = +-1
    prob.assignments = {a};
    auto sols = fit_linking_matrix(prob);
    auto serial = fit_linking_matrix_serial(prob);
    CHECK(sols == serial);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0][0][1] == -1);
    CHECK(sols[1][0][1] == 1);
}

TEST_CASE("fit_linking_matrix honours script assertions") {
    FitProblem prob;
    prob.component_count = 3;
    prob.bound = 4;
    TwistScript s;
    s.initial = three_comp("5/2", "1/2", "-1", 0, 0, 0);  // linking overwritten by the fit
    s.moves = {TwistMove{"C1", -2, false, {{"C0", ExtendedRational(1, 2)},
                                           {"C2", ExtendedRational(-19, 1)}}},
               TwistMove{"C1", 0, true, {}},
               TwistMove{"C0", -2, false, {{"C2", ExtendedRational(-37, 1)}}},
               TwistMove{"C0", 0, true, {}}};
    prob.scripts = {s};
    auto sols = fit_linking_matrix(prob);
    CHECK(sols == fit_linking_matrix_serial(prob));
    REQUIRE(!sols.empty());
    for (const auto& lk : sols) {
        CHECK(std::llabs(lk[0][1]) == 1);
        CHECK(std::llabs(lk[1][2]) == 3);
        // run the real script with this matrix
        TwistScript full = s;
        full.initial.linking = lk;
        auto [fin, rep] = run_script(full);
        CHECK(fin.components[0].coeff == ExtendedRational(-37, 1));
    }
}
