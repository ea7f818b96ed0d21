#pragma once

#include <brauer/integers.hpp>

#include <iosfwd>
#include <vector>

namespace brauer {

struct EvenArgument : std::runtime_error {
    EvenArgument() : std::runtime_error("argument divisible by 1+i") {}
};
struct UnitArgument : std::runtime_error {
    UnitArgument() : std::runtime_error("argument is a unit") {}
};
struct DivisibilityViolation : std::runtime_error {
    DivisibilityViolation() : std::runtime_error("m does not divide N(pi)-1") {}
};
struct NotCoprime : std::runtime_error {
    NotCoprime() : std::runtime_error("argument shares a factor with the modulus") {}
};

// Element of Z[i].
struct GaussianInteger {
    Int re, im;

    GaussianInteger() : re(0), im(0) {}
    GaussianInteger(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianInteger(long r, long i = 0) : re(r), im(i) {}

    Int norm() const { return re * re + im * im; }
    GaussianInteger conj() const { return {re, -im}; }

    GaussianInteger operator+(const GaussianInteger& o) const { return {re + o.re, im + o.im}; }
    GaussianInteger operator-(const GaussianInteger& o) const { return {re - o.re, im - o.im}; }
    GaussianInteger operator-() const { return {-re, -im}; }
    GaussianInteger operator*(const GaussianInteger& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInteger& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianInteger& o) const { return !(*this == o); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    // i^k * z
    GaussianInteger times_i_power(int k) const;
};

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z);

inline GaussianInteger gauss_i() { return GaussianInteger(0, 1); }

// Exact division; throws if w does not divide z.
GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& w);
bool divides(const GaussianInteger& w, const GaussianInteger& z);

// Remainder of z mod w with norm <= N(w)/2 (round division).
GaussianInteger gauss_mod(const GaussianInteger& z, const GaussianInteger& w);

bool is_gaussian_prime(const GaussianInteger& z);

// The unique associate of z congruent to 1 mod (1+i)^3. z must be odd and
// not a unit.
GaussianInteger primary_associate(const GaussianInteger& z);

bool is_primary(const GaussianInteger& z);

// A validated primary Gaussian prime.
struct PrimaryPrime {
    GaussianInteger pi;
    explicit PrimaryPrime(const GaussianInteger& z);
    Int norm() const { return pi.norm(); }
    bool split() const;  // N(pi) is an odd rational prime
};

// Arithmetic in the residue field O/pi.
class ResidueField {
public:
    explicit ResidueField(const PrimaryPrime& p);

    const GaussianInteger& modulus() const { return pi_; }
    const Int& order() const { return norm_; }  // field size N(pi)

    GaussianInteger reduce(const GaussianInteger& z) const { return gauss_mod(z, pi_); }
    bool equal(const GaussianInteger& a, const GaussianInteger& b) const;
    bool is_zero(const GaussianInteger& z) const { return reduce(z).is_zero(); }
    GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) const;
    GaussianInteger pow(GaussianInteger z, Int e) const;
    GaussianInteger sqrt(const GaussianInteger& z) const;  // Tonelli-Shanks; throws if non-square

private:
    GaussianInteger pi_;
    Int norm_;
    GaussianInteger canonical(const GaussianInteger& z) const;
    friend GaussianInteger canonical_zeta8(const ResidueField& f);
};

// Deterministic square root of i mod pi: the identification of mu_8 with
// powers of an abstract zeta_8 is canonical only up to zeta_8 -> zeta_8^5,
// so callers must not compare raw octic exponents across primes.
GaussianInteger canonical_zeta8(const ResidueField& f);

// x^((N-1)/m) mod pi expressed as an exponent of zeta_8 (in Z/8). For
// m in {1,2,4} the result is even and i^(e/2) is the m-th root of unity.
int power_residue(const GaussianInteger& x, const PrimaryPrime& p, int m);

// Exponent e in Z/4 with x^((N-1)/4) = i^e mod pi.
int quartic_symbol(const GaussianInteger& x, const PrimaryPrime& p);

// pi/conj(pi) reduced mod 2^k, components in [0, 2^k).
GaussianInteger frobenius_unit(const PrimaryPrime& p, int k);

// Primary split primes of norm < bound, ascending by (norm, im).
std::vector<PrimaryPrime> primary_split_primes(long bound, size_t max_count = SIZE_MAX);

}  // namespace brauer
