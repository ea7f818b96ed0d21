#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <brauer/gaussian.hpp>
#include <brauer/rational_classes.hpp>

#include <random>

using namespace brauer;

TEST_CASE("primary associates") {
    // -1+2i is itself primary
    CHECK(primary_associate(GaussianInteger(-1, 2)) == GaussianInteger(-1, 2));
    // -2-i = i * (-1+2i)
    CHECK(primary_associate(GaussianInteger(-2, -1)) == GaussianInteger(-1, 2));
    // inert prime 3 normalizes to -3
    CHECK(primary_associate(GaussianInteger(3, 0)) == GaussianInteger(-3, 0));
    CHECK_THROWS_AS(primary_associate(GaussianInteger(1, 1)), EvenArgument);
    CHECK_THROWS_AS(primary_associate(GaussianInteger(0, 1)), UnitArgument);
}

TEST_CASE("exactly one associate is primary for odd Gaussian primes") {
    for (auto& p : primary_split_primes(200)) {
        int hits = 0;
        for (int k = 0; k < 4; ++k)
            if (is_primary(p.pi.times_i_power(k))) ++hits;
        CHECK(hits == 1);
    }
}

TEST_CASE("power residue examples") {
    PrimaryPrime p(GaussianInteger(-1, 2));
    // 2^((5-1)/4) = 2 = -i mod (-1+2i); as zeta8 exponent: -i = zeta8^6
    CHECK(power_residue(GaussianInteger(2, 0), p, 4) == 6);
    CHECK(quartic_symbol(GaussianInteger(2, 0), p) == 3);
    // trivial character
    CHECK(power_residue(GaussianInteger(7, 0), p, 1) == 0);
    // 2 is a fourth power mod 5+8i (b = 8)
    PrimaryPrime q(primary_associate(GaussianInteger(5, 8)));
    CHECK(power_residue(GaussianInteger(2, 0), q, 4) == 0);
}

TEST_CASE("octic residue of -2 at 1+16i is trivial") {
    PrimaryPrime p(primary_associate(GaussianInteger(1, 16)));
    CHECK(power_residue(GaussianInteger(-2, 0), p, 8) == 0);
}

TEST_CASE("power residues are multiplicative and compatible across levels") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-20, 20);
    auto primes = primary_split_primes(300);
    for (auto& p : primes) {
        for (int trial = 0; trial < 8; ++trial) {
            GaussianInteger x(d(rng), d(rng)), y(d(rng), d(rng));
            if (divides(p.pi, x) || divides(p.pi, y) || x.is_zero() || y.is_zero()) continue;
            int ex = power_residue(x, p, 4);
            int ey = power_residue(y, p, 4);
            CHECK(power_residue(x * y, p, 4) == mod_long(ex + ey, 8));
            // squaring the quartic symbol gives the quadratic one
            CHECK(mod_long(2 * ex, 8) == power_residue(x, p, 2));
        }
    }
}

TEST_CASE("quadratic supplement: 2 is a square mod pi iff N = 1 mod 8") {
    auto primes = primary_split_primes(2000);
    int checked = 0;
    for (auto& p : primes) {
        if (checked >= 50) break;
        int e = power_residue(GaussianInteger(2, 0), p, 2);
        bool square = (e == 0);
        CHECK(square == (int_mod(p.norm(), 8) == 1));
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("frobenius units lie in the expected residue classes") {
    for (auto& p : primary_split_primes(500)) {
        GaussianInteger u = frobenius_unit(p, 3);
        // pi/conj(pi) = 1 mod 4 always (a odd, b even)
        CHECK(int_mod(u.re, 4) == 1);
        CHECK(int_mod(u.im, 4) == 0);
    }
}

TEST_CASE("fourth power classes") {
    CHECK(is_fourth_power(Rat(16), BaseField::Q));
    CHECK(is_fourth_power(Rat(81, 16), BaseField::Q));
    CHECK(!is_fourth_power(Rat(-4), BaseField::Q));
    CHECK(is_fourth_power(Rat(-4), BaseField::Qi));
    CHECK(!is_fourth_power(Rat(4), BaseField::Qi));
    CHECK(!is_fourth_power(Rat(2), BaseField::Q));
    CHECK_THROWS_AS(is_fourth_power(Rat(0), BaseField::Q), ZeroArgument);
    // -2 and 8 agree in Q(i)x/Q(i)x4
    CHECK(fourth_power_class(Rat(-2), BaseField::Qi) == fourth_power_class(Rat(8), BaseField::Qi));
    CHECK(!(fourth_power_class(Rat(-2), BaseField::Q) == fourth_power_class(Rat(8), BaseField::Q)));
}

TEST_CASE("triple equivalence") {
    CoefficientTriple t128(Rat(1), Rat(2), Rat(8));
    CoefficientTriple t12m2(Rat(1), Rat(2), Rat(-2));
    CoefficientTriple t18m8(Rat(1), Rat(8), Rat(-8));
    CHECK(equivalent_triples(t128, t12m2, BaseField::Qi).has_value());
    CHECK(!equivalent_triples(t12m2, t18m8, BaseField::Q).has_value());
    CHECK(equivalent_triples(t12m2, t18m8, BaseField::Qi).has_value());
    CHECK(equivalent_triples(t12m2, t12m2, BaseField::Q).has_value());
}

TEST_CASE("triple equivalence is an equivalence relation on random triples") {
    std::mt19937 rng(17);
    std::vector<Rat> pool = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(4), Rat(8), Rat(6), Rat(-12)};
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    auto rand_triple = [&]() {
        return CoefficientTriple(pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]);
    };
    for (auto field : {BaseField::Q, BaseField::Qi}) {
        for (int trial = 0; trial < 40; ++trial) {
            CoefficientTriple a = rand_triple(), b = rand_triple(), c = rand_triple();
            CHECK(equivalent_triples(a, a, field).has_value());
            bool ab = equivalent_triples(a, b, field).has_value();
            bool ba = equivalent_triples(b, a, field).has_value();
            CHECK(ab == ba);
            bool bc = equivalent_triples(b, c, field).has_value();
            bool ac = equivalent_triples(a, c, field).has_value();
            if (ab && bc) CHECK(ac);
        }
    }
}

TEST_CASE("equivalence respects scaling and permutation by construction") {
    CoefficientTriple a(Rat(3), Rat(5), Rat(7));
    // common scale by 5, permute, multiply slots by fourth powers
    CoefficientTriple b(Rat(16 * 5 * 7) / Rat(5), Rat(3), Rat(1));
    // quadruple of b: (1, 112/5?, ...) -- instead build a clean known-equivalent pair
    CoefficientTriple c(Rat(3 * 16), Rat(5 * 81), Rat(7));
    CHECK(equivalent_triples(a, c, BaseField::Q).has_value());
}
