#include <brauer/rational_classes.hpp>

#include <algorithm>
#include <sstream>

namespace brauer {

Factorization factor_integer(const Int& n, long bound) {
    if (n == 0) throw ZeroArgument();
    Factorization f;
    Int m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    for (long p = 2; p <= bound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.primes.emplace_back(Int(p), e);
        }
    }
    if (m > 1) {
        if (!mpz_probab_prime_p(m.get_mpz_t(), 30))
            throw std::runtime_error("factor_integer: composite cofactor beyond trial bound");
        f.primes.emplace_back(m, 1);
    }
    return f;
}

FourthPowerClass FourthPowerClass::mul(const FourthPowerClass& o) const {
    FourthPowerClass r = *this;
    if (o.negative) r.negative = !r.negative;
    for (auto& [p, e] : o.exponents) {
        int v = mod_long(r.exponents.count(p) ? r.exponents[p] + e : e, 4);
        if (v == 0) r.exponents.erase(p);
        else r.exponents[p] = v;
    }
    if (r.field == BaseField::Qi && r.negative) {
        // -1 = 2^2 modulo fourth powers in Q(i)
        r.negative = false;
        int v = mod_long((r.exponents.count(2) ? r.exponents[Int(2)] : 0) + 2, 4);
        if (v == 0) r.exponents.erase(Int(2));
        else r.exponents[Int(2)] = v;
    }
    return r;
}

FourthPowerClass FourthPowerClass::inverse() const {
    FourthPowerClass r;
    r.field = field;
    r.negative = negative;
    for (auto& [p, e] : exponents) r.exponents[p] = mod_long(-e, 4);
    if (r.field == BaseField::Qi && r.negative) {
        r.negative = false;
        int v = mod_long((r.exponents.count(2) ? r.exponents[Int(2)] : 0) + 2, 4);
        if (v == 0) r.exponents.erase(Int(2));
        else r.exponents[Int(2)] = v;
    }
    return r;
}

Rat FourthPowerClass::representative() const {
    Rat r = negative ? Rat(-1) : Rat(1);
    for (auto& [p, e] : exponents)
        for (int i = 0; i < e; ++i) r *= Rat(p);
    return r;
}

std::string FourthPowerClass::str() const {
    std::ostringstream os;
    os << representative();
    return os.str();
}

FourthPowerClass fourth_power_class(const Rat& q, BaseField field, long bound) {
    if (q == 0) throw ZeroArgument();
    // n/d = n*d^3 modulo fourth powers
    Int n = q.get_num() * int_pow(q.get_den(), 3);
    Factorization f = factor_integer(n, bound);
    FourthPowerClass c;
    c.field = field;
    c.negative = (f.sign < 0);
    for (auto& [p, e] : f.primes) {
        int v = mod_long(e, 4);
        if (v != 0) c.exponents[p] = v;
    }
    if (field == BaseField::Qi && c.negative) {
        c.negative = false;
        int v = mod_long((c.exponents.count(2) ? c.exponents[Int(2)] : 0) + 2, 4);
        if (v == 0) c.exponents.erase(Int(2));
        else c.exponents[Int(2)] = v;
    }
    return c;
}

bool is_fourth_power(const Rat& q, BaseField field) {
    return fourth_power_class(q, field).trivial();
}

CoefficientTriple::CoefficientTriple(Rat x1, Rat x2, Rat x3)
    : a1(std::move(x1)), a2(std::move(x2)), a3(std::move(x3)) {
    if (a1 == 0 || a2 == 0 || a3 == 0) throw ZeroArgument();
}

std::string CoefficientTriple::str() const {
    std::ostringstream os;
    os << "(" << a1 << "," << a2 << "," << a3 << ")";
    return os.str();
}

std::optional<EquivalenceWitness> equivalent_triples(const CoefficientTriple& a,
                                                     const CoefficientTriple& b,
                                                     BaseField field) {
    std::array<FourthPowerClass, 4> ca, cb;
    std::array<Rat, 4> va = {Rat(1), a.a1, a.a2, a.a3};
    std::array<Rat, 4> vb = {Rat(1), b.a1, b.a2, b.a3};
    for (int j = 0; j < 4; ++j) {
        ca[j] = fourth_power_class(va[j], field);
        cb[j] = fourth_power_class(vb[j], field);
    }

    std::array<int, 4> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        // common scalar determined by slot 0: lambda * ca[perm[0]] = cb[0]
        FourthPowerClass lambda = cb[0].mul(ca[perm[0]].inverse());
        bool ok = true;
        for (int j = 1; j < 4 && ok; ++j)
            if (!(lambda.mul(ca[perm[j]]) == cb[j])) ok = false;
        if (ok) {
            EquivalenceWitness w;
            w.perm = perm;
            w.common_scale = lambda.representative();
            return w;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace brauer
