#include "braidlie/matrix.hpp"

#include <stdexcept>

namespace braidlie {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

void IntMatrix::append_row(const std::vector<Int>& row) {
    if (rows == 0 && cols == 0)
        cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
        throw std::invalid_argument("row length mismatch");
    a.insert(a.end(), row.begin(), row.end());
    ++rows;
}

std::vector<Int> IntMatrix::row(int r) const {
    return std::vector<Int>(a.begin() + static_cast<size_t>(r) * cols,
                            a.begin() + static_cast<size_t>(r + 1) * cols);
}

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j)
        return;
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) = -m.at(i, c);
}

// row_i -= q * row_j, skipping the known-zero prefix.
void subtract_rows(IntMatrix& m, int i, int j, const Int& q, int from_col) {
    if (q == 0)
        return;
    for (int c = from_col; c < m.cols; ++c)
        m.at(i, c) -= q * m.at(j, c);
}

}  // namespace

IntMatrix hnf(const IntMatrix& input) {
    IntMatrix m = input;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        // Euclidean reduction of column c below row r: repeatedly bring the
        // smallest nonzero entry to the pivot row and reduce the others by it.
        while (true) {
            int best = -1;
            for (int i = r; i < m.rows; ++i) {
                if (m.at(i, c) == 0)
                    continue;
                if (best < 0 || abs(m.at(i, c)) < abs(m.at(best, c)))
                    best = i;
            }
            if (best < 0)
                break;  // no pivot in this column
            swap_rows(m, r, best);
            if (m.at(r, c) < 0)
                negate_row(m, r);
            bool clean = true;
            for (int i = r + 1; i < m.rows; ++i) {
                if (m.at(i, c) == 0)
                    continue;
                subtract_rows(m, i, r, floordiv(m.at(i, c), m.at(r, c)), c);
                if (m.at(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (m.at(r, c) != 0) {
            pivot_col.push_back(c);
            ++r;
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for (int j = 0; j < r; ++j) {
        int c = pivot_col[static_cast<size_t>(j)];
        for (int i = 0; i < j; ++i)
            subtract_rows(m, i, j, floordiv(m.at(i, c), m.at(j, c)), c);
    }
    IntMatrix out(r, m.cols);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < m.cols; ++c)
            out.at(i, c) = m.at(i, c);
    return out;
}

int rank_rational(const IntMatrix& input) {
    // Bareiss fraction-free elimination; entries stay exact integers.
    IntMatrix m = input;
    Int prev = 1;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        swap_rows(m, rank, piv);
        for (int i = rank + 1; i < m.rows; ++i) {
            for (int cc = c + 1; cc < m.cols; ++cc) {
                Int num = m.at(i, cc) * m.at(rank, c) - m.at(i, c) * m.at(rank, cc);
                m.at(i, cc) = num / prev;  // exact by Sylvester's identity
            }
            m.at(i, c) = 0;
        }
        prev = m.at(rank, c);
        ++rank;
    }
    return rank;
}

IntegerLattice lattice_from_rows(int ambient, const IntMatrix& rows) {
    if (rows.rows > 0 && rows.cols != ambient)
        throw std::invalid_argument("row length does not match ambient dimension");
    IntMatrix b = hnf(rows);
    b.cols = ambient;  // normalize the 0-row case
    return IntegerLattice{ambient, std::move(b)};
}

IntegerLattice zero_lattice(int ambient) {
    IntMatrix b(0, ambient);
    return IntegerLattice{ambient, std::move(b)};
}

IntegerLattice full_lattice(int ambient) {
    return IntegerLattice{ambient, IntMatrix::identity(ambient)};
}

bool IntegerLattice::is_full() const {
    return basis == IntMatrix::identity(ambient);
}

IntegerLattice kernel_lattice(const IntMatrix& m) {
    // HNF of [M^T | I]: a row u of the unimodular transform with u M^T = 0 is
    // a kernel vector of M, and the echelon shape puts all of them last. The
    // integer kernel is saturated by construction.
    IntMatrix aug(m.cols, m.rows + m.cols);
    for (int i = 0; i < m.cols; ++i) {
        for (int j = 0; j < m.rows; ++j)
            aug.at(i, j) = m.at(j, i);
        aug.at(i, m.rows + i) = 1;
    }
    IntMatrix h = hnf(aug);
    IntMatrix rows(0, m.cols);
    for (int i = 0; i < h.rows; ++i) {
        bool zero_left = true;
        for (int j = 0; j < m.rows && zero_left; ++j)
            zero_left = h.at(i, j) == 0;
        if (!zero_left)
            continue;
        std::vector<Int> v(static_cast<size_t>(m.cols));
        for (int j = 0; j < m.cols; ++j)
            v[static_cast<size_t>(j)] = h.at(i, m.rows + j);
        rows.append_row(v);
    }
    rows.cols = m.cols;
    return lattice_from_rows(m.cols, rows);
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("ambient dimension mismatch");
    IntMatrix stacked(0, a.ambient);
    stacked.cols = a.ambient;
    for (int i = 0; i < a.basis.rows; ++i)
        stacked.append_row(a.basis.row(i));
    for (int i = 0; i < b.basis.rows; ++i)
        stacked.append_row(b.basis.row(i));
    return lattice_from_rows(a.ambient, stacked);
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("ambient dimension mismatch");
    return a.basis == b.basis;
}

bool lattice_contains(const IntegerLattice& lat, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != lat.ambient)
        throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Int> w = v;
    for (int i = 0; i < lat.basis.rows; ++i) {
        int c = 0;
        while (c < lat.basis.cols && lat.basis.at(i, c) == 0)
            ++c;
        if (c == lat.basis.cols)
            continue;
        if (w[static_cast<size_t>(c)] == 0)
            continue;
        if (w[static_cast<size_t>(c)] % lat.basis.at(i, c) != 0)
            return false;
        Int q = w[static_cast<size_t>(c)] / lat.basis.at(i, c);
        for (int j = c; j < lat.basis.cols; ++j)
            w[static_cast<size_t>(j)] -= q * lat.basis.at(i, j);
    }
    for (const Int& x : w)
        if (x != 0)
            return false;
    return true;
}

}  // namespace braidlie
