#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Euclidean remainder in [0, m).
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long mod_long(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long pow_mod(long base, long exp, long mod) {
    // mod < 2^31 so products fit in 64 bits
    long result = 1;
    long b = mod_long(base, mod);
    while (exp > 0) {
        if (exp & 1) result = (long)((__int128)result * b % mod);
        b = (long)((__int128)b * b % mod);
        exp >>= 1;
    }
    return result;
}

inline long inv_mod(long a, long m) {
    long t = 0, nt = 1, r = m, nr = mod_long(a, m);
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::runtime_error("inv_mod: not invertible");
    return mod_long(t, m);
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // deterministic Miller-Rabin for n < 3.3e14
    long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        long x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = (long)((__int128)x * x % n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

// Trial-division factorization. Primes beyond the bound are not searched:
// a leftover cofactor > bound^2 that is not prime raises an error.
struct Factorization {
    int sign = 1;                       // +1 or -1
    std::vector<std::pair<Int, int>> primes;  // (prime, exponent), ascending
};

Factorization factor_integer(const Int& n, long bound = 1000000);

}  // namespace brauer
