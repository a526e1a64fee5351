#pragma once

#include <vector>

#include "braidlie/coords.hpp"
#include "braidlie/element.hpp"
#include "braidlie/matrix.hpp"

namespace braidlie {

// Degreewise span of a graded ideal (or subspace) of the free Lie ring on an
// alphabet: for each degree q <= deg_max a sublattice of the degree-q Lyndon
// coordinates.
struct GradedIdealSpan {
    AlphabetPtr alphabet;
    int deg_max = 0;
    std::vector<IntegerLattice> degrees;  // index q-1

    const IntegerLattice& at(int q) const { return degrees.at(static_cast<size_t>(q - 1)); }
    IntegerLattice& at(int q) { return degrees.at(static_cast<size_t>(q - 1)); }
};

GradedIdealSpan zero_span(const AlphabetPtr& alphabet, int deg_max);

// The ideal generated by one letter: in each degree the span of the Lyndon
// basis monomials whose word contains the letter at least once (the
// complementary monomials map to a basis of the free quotient).
GradedIdealSpan letter_ideal(const AlphabetPtr& alphabet, int letter, int deg_max);

// Braid instance: the ideal I_k of the layer-n free Lie ring generated by
// A[k,n], 1 <= k <= n-1.
GradedIdealSpan ideal_of_letter(int n, int k, int deg_max);

// Degreewise bracket of spans: degree q collects bracket(u, v) over basis
// elements u of U_a, v of V_b, a + b = q.
GradedIdealSpan bracket_of_spans(const GradedIdealSpan& u, const GradedIdealSpan& v, int deg_max);

// Degreewise lattice sum.
GradedIdealSpan span_sum(const GradedIdealSpan& u, const GradedIdealSpan& v);

// Symmetric bracket sum of I_1..I_{n-1}: the sum over all permutations s of
// the iterated brackets [[I_{s(1)},I_{s(2)}],...,I_{s(n-1)}]. For n = 2 the
// empty product convention gives I_1 itself.
GradedIdealSpan symmetric_bracket_sum(int n, int deg_max);

// Fat bracket sum of I_1..I_{n-1}: spans of all bracket arrangements of
// ideal elements whose index set covers {1..n-1}, computed by dynamic
// programming over (covered index subset, degree), then closed degreewise
// under bracketing with the degree-1 generators until stable.
GradedIdealSpan fat_bracket_sum(int n, int deg_max);

bool span_equal(const GradedIdealSpan& u, const GradedIdealSpan& v);

}  // namespace braidlie
