#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <brauer/cyclotomic.hpp>
#include <brauer/lattice_tools.hpp>
#include <brauer/matrix.hpp>

#include <random>

using namespace brauer;

namespace {

IMat random_matrix(std::mt19937& rng, size_t m, size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IMat a(m, n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) a(i, j) = d(rng);
    return a;
}

}  // namespace

TEST_CASE("hnf reproduces the row span and transform") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        IMat a = random_matrix(rng, 5, 7, -9, 9);
        HermiteForm f = row_hnf(a);
        CHECK(f.u * a == f.h);
        CHECK(abs(determinant(to_rational(f.u))) == 1);
        CHECK(lattice_equal(a, f.h));
    }
}

TEST_CASE("snf transforms are unimodular and diagonal divides") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        IMat a = random_matrix(rng, 4, 6, -6, 6);
        SmithForm f = smith_normal_form(a);
        CHECK(f.u * a * f.v == f.d);
        CHECK(abs(determinant(f.u)) == 1);
        CHECK(abs(determinant(f.v)) == 1);
        for (size_t i = 0; i + 1 < f.rank; ++i) CHECK(f.d(i + 1, i + 1) % f.d(i, i) == 0);
        for (size_t i = 0; i < f.d.rows(); ++i)
            for (size_t j = 0; j < f.d.cols(); ++j)
                if (i != j) CHECK(f.d(i, j) == 0);
    }
}

TEST_CASE("kernel and solve") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        IMat a = random_matrix(rng, 4, 7, -5, 5);
        IMat k = integer_kernel(a);
        for (size_t i = 0; i < k.rows(); ++i) {
            IVec prod = a * k.row(i);
            for (auto& x : prod) CHECK(x == 0);
        }
        // solvable system: b = A * x0
        IVec x0(7);
        std::uniform_int_distribution<int> d(-4, 4);
        for (auto& x : x0) x = d(rng);
        auto sol = solve_integer(a, a * x0);
        REQUIRE(sol.has_value());
        IVec diff = a * *sol;
        IVec rhs = a * x0;
        CHECK(diff == rhs);
    }
}

TEST_CASE("solve detects unsolvable systems") {
    IMat a(2, 2, {Int(2), Int(0), Int(0), Int(2)});
    CHECK(!solve_integer(a, {Int(1), Int(0)}).has_value());
    CHECK(solve_integer(a, {Int(4), Int(-2)}).has_value());
}

TEST_CASE("lattice calculus") {
    IMat a(2, 3, {Int(2), Int(0), Int(0), Int(0), Int(3), Int(0)});
    IMat b(2, 3, {Int(3), Int(0), Int(0), Int(0), Int(2), Int(0)});
    IMat inter = lattice_intersection(a, b);
    CHECK(lattice_contains(inter, {Int(6), Int(0), Int(0)}));
    CHECK(lattice_contains(inter, {Int(0), Int(6), Int(0)}));
    CHECK(!lattice_contains(inter, {Int(2), Int(0), Int(0)}));

    IMat l(1, 2, {Int(2), Int(4)});
    IMat sat = lattice_saturation(l);
    CHECK(lattice_contains(sat, {Int(1), Int(2)}));
    CHECK(sat.rows() == 1);

    IMat big = IMat::identity(2);
    IMat small(2, 2, {Int(2), Int(0), Int(0), Int(8)});
    auto inv = quotient_invariants(big, small);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 8);
}

TEST_CASE("rational kernel and inverse") {
    QMat a(2, 3, {Rat(1), Rat(2), Rat(3), Rat(2), Rat(4), Rat(6)});
    QMat k = rational_kernel(a);
    CHECK(k.rows() == 2);
    for (size_t i = 0; i < k.rows(); ++i) {
        QVec prod = a * k.row(i);
        for (auto& x : prod) CHECK(x == 0);
    }
    QMat m(2, 2, {Rat(2), Rat(1), Rat(1), Rat(1)});
    QMat mi = rational_inverse(m);
    CHECK(m * mi == QMat::identity(2));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
    CHECK(cyclotomic_polynomial(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
    CHECK(cyclotomic_polynomial(8) == std::vector<Int>{Int(1), Int(0), Int(0), Int(0), Int(1)});
    CHECK(cyclotomic_polynomial(3) == std::vector<Int>{Int(1), Int(1), Int(1)});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
}

TEST_CASE("cyclotomic arithmetic in Q(i)") {
    auto i = CycloNumber::zeta(4);
    CHECK(i * i == CycloNumber::from_rational(4, Rat(-1)));
    auto z = CycloNumber::zeta(8);
    auto w = z * z * z * z;
    CHECK(w == CycloNumber::from_rational(8, Rat(-1)));
    // conj(zeta8) * zeta8 = 1
    CHECK(z.conj() * z == CycloNumber::from_rational(8, Rat(1)));
}

TEST_CASE("zeta8 integer ring") {
    Zeta8 z = Zeta8::zeta(1);
    Zeta8 p = z * z * z * z;
    CHECK(p == Zeta8(-1));
    // (zeta8 + zeta8^-1)^2 = 2
    Zeta8 s = Zeta8::zeta(1) + Zeta8::zeta(7);
    CHECK(s * s == Zeta8(2));
}
