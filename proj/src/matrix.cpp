#include <brauer/matrix.hpp>

#include <stdexcept>

namespace brauer {

bool is_integral(const QMat& a) {
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).get_den() != 1) return false;
    return true;
}

bool is_integral(const QVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

IMat to_integral(const QMat& a) {
    IMat r(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).get_den() != 1) throw std::runtime_error("to_integral: denominator");
            r(i, j) = a(i, j).get_num();
        }
    return r;
}

IVec to_integral(const QVec& v) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw std::runtime_error("to_integral: denominator");
        r[i] = v[i].get_num();
    }
    return r;
}

}  // namespace brauer
