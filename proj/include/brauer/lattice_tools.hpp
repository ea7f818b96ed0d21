#pragma once

#include <brauer/matrix.hpp>

#include <optional>

namespace brauer {

// Integer and rational linear algebra: Hermite and Smith normal forms with
// unimodular transforms, kernels, exact solvers, and lattice calculus on
// row-span lattices.

struct HermiteForm {
    IMat h;  // row echelon, U * A = H
    IMat u;  // unimodular
    size_t rank = 0;
};

HermiteForm row_hnf(const IMat& a, bool with_transform = true);

struct SmithForm {
    IMat d;  // U * A * V = D diagonal
    IMat u;
    IMat v;
    size_t rank = 0;
    std::vector<Int> divisors() const {  // nonzero diagonal entries
        std::vector<Int> r;
        for (size_t i = 0; i < rank; ++i) r.push_back(d(i, i));
        return r;
    }
};

SmithForm smith_normal_form(const IMat& a);

// Basis of {x in Z^n : A x = 0}, one kernel vector per row.
IMat integer_kernel(const IMat& a);

// Particular solution of A x = b over Z.
std::optional<IVec> solve_integer(const IMat& a, const IVec& b);

// Particular solution of A x = b over Q.
std::optional<QVec> solve_rational(const QMat& a, const QVec& b);

// Right kernel of a rational matrix, rows = basis vectors.
QMat rational_kernel(const QMat& a);

// Inverse of a square rational matrix; throws if singular.
QMat rational_inverse(const QMat& a);

Rat determinant(const QMat& a);
Int determinant(const IMat& a);

size_t rational_rank(const QMat& a);

// --- Lattice calculus (lattices are row spans of integer matrices) ---

// Canonical HNF basis of the row span (zero rows dropped).
IMat lattice_basis(const IMat& rows);

// Does v lie in the row span of L over Z?
bool lattice_contains(const IMat& l, const IVec& v);

bool lattice_equal(const IMat& a, const IMat& b);

// Intersection of two row-span lattices.
IMat lattice_intersection(const IMat& a, const IMat& b);

// Smallest saturated lattice containing the row span (kernel-of-kernel).
IMat lattice_saturation(const IMat& rows);

// Invariant factors of big/small where small's row span is contained in
// big's. Trailing factor 0 marks a free summand. Factors of 1 dropped.
std::vector<Int> quotient_invariants(const IMat& big, const IMat& small);

// Coordinates of v with respect to the rows of basis (exact integer).
std::optional<IVec> coords_in_basis(const IMat& basis, const IVec& v);

}  // namespace brauer
