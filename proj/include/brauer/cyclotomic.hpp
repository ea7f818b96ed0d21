#pragma once

#include <brauer/gaussian.hpp>
#include <brauer/integers.hpp>

#include <array>
#include <vector>

namespace brauer {

// Coefficients of the d-th cyclotomic polynomial, ascending degree.
std::vector<Int> cyclotomic_polynomial(int d);

// Element of Q(zeta_d), stored as a polynomial in zeta of degree
// < phi(d), reduced modulo the cyclotomic polynomial.
class CycloNumber {
public:
    CycloNumber() : d_(1) {}
    explicit CycloNumber(int d, const std::vector<Rat>& coeffs = {});

    static CycloNumber zeta(int d, long power = 1);
    static CycloNumber from_rational(int d, const Rat& q);

    int conductor() const { return d_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator*(const CycloNumber& o) const;
    CycloNumber operator*(const Rat& q) const;
    bool operator==(const CycloNumber& o) const;

    // Galois action zeta -> zeta^t, gcd(t, d) = 1.
    CycloNumber galois(long t) const;
    CycloNumber conj() const { return galois(d_ - 1); }

    bool is_rational() const;
    Rat rational_part() const;  // throws if not rational

private:
    int d_;
    std::vector<Rat> c_;
    void reduce(std::vector<Rat>& raw) const;
};

// Element of Z[zeta_8] = Z[x]/(x^4+1); exact arithmetic for line
// coordinates on the Fermat quartic.
struct Zeta8 {
    std::array<Int, 4> c{};  // c0 + c1 z + c2 z^2 + c3 z^3, z^4 = -1

    Zeta8() = default;
    explicit Zeta8(long n) { c[0] = n; }
    static Zeta8 zeta(int power);  // zeta_8^power

    Zeta8 operator+(const Zeta8& o) const;
    Zeta8 operator-(const Zeta8& o) const;
    Zeta8 operator*(const Zeta8& o) const;
    bool operator==(const Zeta8& o) const { return c == o.c; }
    bool is_zero() const;
};

}  // namespace brauer
