#pragma once

#include <brauer/integers.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>

namespace brauer {

enum class BaseField { Q, Qi };

inline const char* field_name(BaseField f) { return f == BaseField::Q ? "Q" : "Q(i)"; }

struct ZeroArgument : std::runtime_error {
    ZeroArgument() : std::runtime_error("zero argument") {}
};

// Class of a nonzero rational in K^x / K^x4 for K = Q or Q(i). Over Q the
// sign is a separate Z/2 datum; over Q(i) the kernel of Q^x/Q^x4 ->
// Q(i)^x/Q(i)^x4 is generated by -4, so -m and 4m fall in the same class
// and the sign is folded into the exponent of 2.
struct FourthPowerClass {
    BaseField field = BaseField::Q;
    bool negative = false;
    std::map<Int, int> exponents;  // prime -> exponent in {1,2,3}

    bool trivial() const { return !negative && exponents.empty(); }
    FourthPowerClass mul(const FourthPowerClass& o) const;
    FourthPowerClass inverse() const;
    bool operator==(const FourthPowerClass& o) const {
        return field == o.field && negative == o.negative && exponents == o.exponents;
    }
    // a rational representative
    Rat representative() const;
    std::string str() const;
};

FourthPowerClass fourth_power_class(const Rat& q, BaseField field, long bound = 1000000);

bool is_fourth_power(const Rat& q, BaseField field);

struct CoefficientTriple {
    Rat a1, a2, a3;
    CoefficientTriple(Rat x1, Rat x2, Rat x3);
    Rat product() const { return a1 * a2 * a3; }
    std::string str() const;
};

struct EquivalenceWitness {
    std::array<int, 4> perm;  // slot j of the second quadruple comes from slot perm[j] of the first
    Rat common_scale;         // representative of the common scalar class
};

// Are the surfaces with coefficient quadruples (1,a1,a2,a3) and
// (1,b1,b2,b3) equivalent over the field: a permutation of the four slots,
// per-slot fourth powers, and a common scalar multiple?
std::optional<EquivalenceWitness> equivalent_triples(const CoefficientTriple& a,
                                                     const CoefficientTriple& b,
                                                     BaseField field);

}  // namespace brauer
