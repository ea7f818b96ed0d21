#include <brauer/gaussian.hpp>

#include <algorithm>
#include <ostream>

namespace brauer {

GaussianInteger GaussianInteger::times_i_power(int k) const {
    switch (mod_long(k, 4)) {
        case 0: return *this;
        case 1: return {-im, re};
        case 2: return {-re, -im};
        default: return {im, -re};
    }
}

std::ostream& operator<<(std::ostream& os, const GaussianInteger& z) {
    os << z.re;
    if (z.im >= 0) os << "+" << z.im << "i";
    else os << z.im << "i";
    return os;
}

bool divides(const GaussianInteger& w, const GaussianInteger& z) {
    Int n = w.norm();
    if (n == 0) return z.is_zero();
    GaussianInteger t = z * w.conj();
    return t.re % n == 0 && t.im % n == 0;
}

GaussianInteger exact_div(const GaussianInteger& z, const GaussianInteger& w) {
    Int n = w.norm();
    GaussianInteger t = z * w.conj();
    if (n == 0 || t.re % n != 0 || t.im % n != 0)
        throw std::runtime_error("exact_div: not divisible");
    return {t.re / n, t.im / n};
}

namespace {
Int round_div_int(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r * 2 > abs(b)) q += (b > 0 ? 1 : -1);
    return q;
}
}  // namespace

GaussianInteger gauss_mod(const GaussianInteger& z, const GaussianInteger& w) {
    Int n = w.norm();
    GaussianInteger t = z * w.conj();
    GaussianInteger q(round_div_int(t.re, n), round_div_int(t.im, n));
    return z - w * q;
}

bool is_gaussian_prime(const GaussianInteger& z) {
    Int n = z.norm();
    if (n <= 1) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) return true;
    // inert rational prime: z ~ q with q = 3 mod 4
    if (z.re == 0 || z.im == 0) {
        Int q = abs(z.re) + abs(z.im);
        return int_mod(q, 4) == 3 && mpz_probab_prime_p(q.get_mpz_t(), 30);
    }
    return false;
}

bool is_primary(const GaussianInteger& z) {
    // z = 1 mod (1+i)^3, i.e. (-2-2i)(z-1) = 0 mod 8
    GaussianInteger d = z - GaussianInteger(1, 0);
    GaussianInteger t = d * GaussianInteger(-2, -2);
    return int_mod(t.re, 8) == 0 && int_mod(t.im, 8) == 0;
}

GaussianInteger primary_associate(const GaussianInteger& z) {
    if (int_mod(z.re + z.im, 2) == 0) throw EvenArgument();
    if (z.is_unit()) throw UnitArgument();
    GaussianInteger found;
    int hits = 0;
    for (int k = 0; k < 4; ++k) {
        GaussianInteger w = z.times_i_power(k);
        if (is_primary(w)) {
            found = w;
            ++hits;
        }
    }
    if (hits != 1) throw std::runtime_error("primary_associate: associate count != 1");
    return found;
}

PrimaryPrime::PrimaryPrime(const GaussianInteger& z) : pi(z) {
    if (!is_gaussian_prime(z)) throw std::runtime_error("PrimaryPrime: not prime");
    if (!is_primary(z)) throw std::runtime_error("PrimaryPrime: not primary");
}

bool PrimaryPrime::split() const {
    Int n = pi.norm();
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

ResidueField::ResidueField(const PrimaryPrime& p) : pi_(p.pi), norm_(p.pi.norm()) {}

GaussianInteger ResidueField::canonical(const GaussianInteger& z) const {
    // representative of minimal (norm, re, im); deterministic
    GaussianInteger best = gauss_mod(z, pi_);
    static const int offs[9][2] = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                   {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    GaussianInteger base = best;
    for (auto& o : offs) {
        GaussianInteger cand = base + pi_ * GaussianInteger(o[0], o[1]);
        auto key = [](const GaussianInteger& g) {
            return std::make_tuple(g.norm(), g.re, g.im);
        };
        if (key(cand) < key(best)) best = cand;
    }
    return best;
}

bool ResidueField::equal(const GaussianInteger& a, const GaussianInteger& b) const {
    return divides(pi_, a - b);
}

GaussianInteger ResidueField::mul(const GaussianInteger& a, const GaussianInteger& b) const {
    return gauss_mod(a * b, pi_);
}

GaussianInteger ResidueField::pow(GaussianInteger z, Int e) const {
    z = reduce(z);
    GaussianInteger r(1, 0);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mul(r, z);
        z = mul(z, z);
        e >>= 1;
    }
    return r;
}

GaussianInteger ResidueField::sqrt(const GaussianInteger& a) const {
    Int q = norm_ - 1;
    if (!equal(pow(a, q / 2), GaussianInteger(1, 0)))
        throw std::runtime_error("sqrt: not a square in the residue field");
    // Tonelli-Shanks in O/pi
    Int s = q;
    int e = 0;
    while (mpz_even_p(s.get_mpz_t())) { s >>= 1; ++e; }
    // find a non-square
    GaussianInteger n;
    for (long t = 2;; ++t) {
        for (auto cand : {GaussianInteger(t, 0), GaussianInteger(t, 1)}) {
            if (is_zero(cand)) continue;
            if (equal(pow(cand, q / 2), GaussianInteger(-1, 0))) { n = cand; goto found; }
        }
    }
found:
    GaussianInteger z = pow(n, s);
    GaussianInteger x = pow(a, (s + 1) / 2);
    GaussianInteger b = pow(a, s);
    int r = e;
    while (!equal(b, GaussianInteger(1, 0))) {
        int m = 0;
        GaussianInteger t = b;
        while (!equal(t, GaussianInteger(1, 0))) { t = mul(t, t); ++m; }
        GaussianInteger z2 = z;
        for (int i = 0; i < r - m - 1; ++i) z2 = mul(z2, z2);
        x = mul(x, z2);
        z = mul(z2, z2);
        b = mul(b, z);
        r = m;
    }
    return canonical(x);
}

GaussianInteger canonical_zeta8(const ResidueField& f) {
    GaussianInteger root = f.sqrt(GaussianInteger(0, 1));
    GaussianInteger neg = f.canonical(-root);
    auto key = [](const GaussianInteger& g) { return std::make_tuple(g.norm(), g.re, g.im); };
    return key(neg) < key(root) ? neg : root;
}

int power_residue(const GaussianInteger& x, const PrimaryPrime& p, int m) {
    if (m != 1 && m != 2 && m != 4 && m != 8)
        throw std::invalid_argument("power_residue: m must be 1, 2, 4 or 8");
    ResidueField f(p);
    Int q = f.order() - 1;
    if (int_mod(q, m) != 0) throw DivisibilityViolation();
    if (f.is_zero(x)) throw NotCoprime();
    GaussianInteger y = f.pow(x, q / m);
    if (m <= 4) {
        for (int k = 0; k < 4; ++k)
            if (f.equal(y, GaussianInteger(1, 0).times_i_power(k))) return mod_long(2 * k, 8);
        throw std::runtime_error("power_residue: value not a 4th root of unity");
    }
    GaussianInteger z8 = canonical_zeta8(f);
    GaussianInteger acc(1, 0);
    for (int k = 0; k < 8; ++k) {
        if (f.equal(y, acc)) return k;
        acc = f.mul(acc, z8);
    }
    throw std::runtime_error("power_residue: value not an 8th root of unity");
}

int quartic_symbol(const GaussianInteger& x, const PrimaryPrime& p) {
    return power_residue(x, p, 4) / 2;
}

GaussianInteger frobenius_unit(const PrimaryPrime& p, int k) {
    Int m = int_pow(2, k);
    Int n = int_mod(p.pi.norm(), m);
    Int ninv;
    if (mpz_invert(ninv.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::runtime_error("frobenius_unit: norm not invertible");
    GaussianInteger sq = p.pi * p.pi;
    return {int_mod(sq.re * ninv, m), int_mod(sq.im * ninv, m)};
}

std::vector<PrimaryPrime> primary_split_primes(long bound, size_t max_count) {
    std::vector<PrimaryPrime> out;
    for (long p = 5; p < bound && out.size() < max_count; p += 4) {
        if (!is_prime_long(p)) continue;
        // p = 1 mod 4: write p = a^2 + b^2 via sqrt(-1) and Cornacchia
        long s = 0;
        for (long t = 2; t < p; ++t) {
            long u = pow_mod(t, (p - 1) / 4, p);
            if ((long)((__int128)u * u % p) == p - 1) { s = u; break; }
        }
        long a = p, b = s;
        while ((__int128)b * b > p) {
            long r = a % b;
            a = b;
            b = r;
        }
        long c2 = p - b * b;
        long c = (long)std::sqrt((double)c2);
        while (c * c < c2) ++c;
        while (c * c > c2) --c;
        if (c * c != c2) throw std::runtime_error("primary_split_primes: decomposition failed");
        GaussianInteger z1 = primary_associate(GaussianInteger(b, c));
        GaussianInteger z2 = primary_associate(GaussianInteger(b, -c));
        if (z2.im < z1.im) std::swap(z1, z2);
        out.emplace_back(z1);
        if (out.size() < max_count) out.emplace_back(z2);
    }
    return out;
}

}  // namespace brauer
