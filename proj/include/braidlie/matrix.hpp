#pragma once

#include <vector>

#include "braidlie/bigint.hpp"

namespace braidlie {

// Dense row-major integer matrix. Desk-scale sizes (a few hundred columns),
// arbitrary-precision entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    void append_row(const std::vector<Int>& row);
    std::vector<Int> row(int r) const;

    bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Row Hermite normal form of the row space: unimodular row operations only,
// zero rows dropped, pivots positive and strictly to the right as rows
// descend, entries above each pivot reduced into [0, pivot). Deterministic.
IntMatrix hnf(const IntMatrix& m);

// Rank over the rationals by fraction-free (Bareiss) elimination.
int rank_rational(const IntMatrix& m);

// Sublattice of Z^ambient with a canonical HNF row basis. Two lattices are
// equal iff their stored bases are identical.
struct IntegerLattice {
    int ambient = 0;
    IntMatrix basis;  // in HNF, rank() rows

    int rank() const { return basis.rows; }
    bool is_zero() const { return basis.rows == 0; }
    // Full lattice Z^ambient, i.e. basis equal to the identity.
    bool is_full() const;
};

IntegerLattice lattice_from_rows(int ambient, const IntMatrix& rows);
IntegerLattice zero_lattice(int ambient);
IntegerLattice full_lattice(int ambient);

// Saturated right kernel {v : M v = 0} over the integers, via the HNF of
// [M^T | I]: rows whose M^T-part vanishes carry a kernel basis.
IntegerLattice kernel_lattice(const IntMatrix& m);

// HNF of the stacked bases. Throws on mismatched ambient dimensions.
IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);

// Equality through the canonical bases.
bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);

// Membership by back-substitution against the HNF basis with exact division.
bool lattice_contains(const IntegerLattice& lat, const std::vector<Int>& v);

}  // namespace braidlie
