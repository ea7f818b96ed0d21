#include <brauer/cyclotomic.hpp>

#include <stdexcept>

namespace brauer {

namespace {

// polynomial division q = a / b in Z[x], exact
std::vector<Int> poly_div_exact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        size_t shift = a.size() - b.size();
        Int lead = a.back() / b.back();
        if (lead * b.back() != a.back()) throw std::runtime_error("poly_div_exact: not exact");
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() == 1 && a[0] == 0) break;
        if (a.size() < b.size()) throw std::runtime_error("poly_div_exact: remainder");
    }
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int d) {
    // x^d - 1 divided by the cyclotomic polynomials of proper divisors
    std::vector<Int> num(d + 1, Int(0));
    num[0] = -1;
    num[d] = 1;
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        num = poly_div_exact(num, cyclotomic_polynomial(e));
    }
    return num;
}

CycloNumber::CycloNumber(int d, const std::vector<Rat>& coeffs) : d_(d) {
    std::vector<Rat> raw = coeffs;
    reduce(raw);
    c_ = raw;
}

void CycloNumber::reduce(std::vector<Rat>& raw) const {
    std::vector<Int> phi = cyclotomic_polynomial(d_);
    size_t deg = phi.size() - 1;
    if (raw.size() < deg) raw.resize(deg);
    // reduce degree >= deg terms using x^deg = -(phi[0] + ... )/phi[deg] (monic)
    for (size_t i = raw.size(); i-- > deg;) {
        Rat lead = raw[i];
        if (lead == 0) continue;
        raw[i] = 0;
        for (size_t j = 0; j < deg; ++j) raw[i - deg + j] -= lead * Rat(phi[j]);
    }
    raw.resize(deg);
}

CycloNumber CycloNumber::zeta(int d, long power) {
    std::vector<Rat> c(mod_long(power, d) + 1, Rat(0));
    c[mod_long(power, d)] = 1;
    return CycloNumber(d, c);
}

CycloNumber CycloNumber::from_rational(int d, const Rat& q) {
    return CycloNumber(d, {q});
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    std::vector<Rat> c = c_;
    if (o.c_.size() > c.size()) c.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return CycloNumber(d_, c);
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    std::vector<Rat> c = c_;
    if (o.c_.size() > c.size()) c.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return CycloNumber(d_, c);
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    std::vector<Rat> c(c_.size() + o.c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return CycloNumber(d_, c);
}

CycloNumber CycloNumber::operator*(const Rat& q) const {
    std::vector<Rat> c = c_;
    for (auto& x : c) x *= q;
    return CycloNumber(d_, c);
}

bool CycloNumber::operator==(const CycloNumber& o) const {
    return d_ == o.d_ && c_ == o.c_;
}

CycloNumber CycloNumber::galois(long t) const {
    // zeta^k -> zeta^(t k), then reduce
    std::vector<Rat> raw(d_, Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        // express zeta^k as a power of zeta_d and remap
        long idx = mod_long((long)(t * (long)k), d_);
        raw.resize(std::max(raw.size(), (size_t)idx + 1));
        raw[idx] += c_[k];
    }
    return CycloNumber(d_, raw);
}

bool CycloNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloNumber::rational_part() const {
    if (!is_rational()) throw std::runtime_error("CycloNumber: not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

Zeta8 Zeta8::zeta(int power) {
    int p = mod_long(power, 8);
    Zeta8 r;
    if (p < 4) r.c[p] = 1;
    else r.c[p - 4] = -1;
    return r;
}

Zeta8 Zeta8::operator+(const Zeta8& o) const {
    Zeta8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Zeta8 Zeta8::operator-(const Zeta8& o) const {
    Zeta8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Zeta8 Zeta8::operator*(const Zeta8& o) const {
    std::array<Int, 8> t{};
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) t[i + j] += c[i] * o.c[j];
    }
    Zeta8 r;
    for (int i = 0; i < 4; ++i) r.c[i] = t[i] - t[i + 4];
    return r;
}

bool Zeta8::is_zero() const {
    for (auto& x : c)
        if (x != 0) return false;
    return true;
}

}  // namespace brauer
