#pragma once

#include <string>
#include <vector>

#include "braidlie/element.hpp"

namespace braidlie {

// Generator A_{i,j} of the pure braid Lie ring, 1 <= i < j <= n.
struct BraidGenerator {
    int i = 0;
    int j = 0;
};

// Name "A[i,j]" used for layer alphabet symbols.
std::string braid_symbol(int i, int j);

// Alphabet {A[1,k], ..., A[k-1,k]} of layer k (k >= 2), ordered by first
// index. Cached so repeated calls share one instance.
AlphabetPtr layer_alphabet(int k);

// Element of L(P_n) in the iterated semidirect-sum normal form: one free Lie
// component per layer k = 2..n, layer k over the alphabet {A[i,k] : i < k}.
// Unique representation; the degree-q part is the sum of the layers' parts.
class LayeredElement {
public:
    explicit LayeredElement(int n);  // zero element; n >= 1 (n = 1 is the zero ring)

    int strands() const { return n_; }
    const LieElement& layer(int k) const;
    LieElement& layer(int k);
    bool is_zero() const;
    int max_degree() const;

    LayeredElement& operator+=(const LayeredElement& o);
    LayeredElement& operator-=(const LayeredElement& o);
    LayeredElement& operator*=(const Int& c);
    friend LayeredElement operator+(LayeredElement a, const LayeredElement& b) { return a += b; }
    friend LayeredElement operator-(LayeredElement a, const LayeredElement& b) { return a -= b; }
    bool operator==(const LayeredElement& o) const;

    LayeredElement homogeneous(int q) const;

private:
    int n_;
    std::vector<LieElement> layers_;  // index k-2 holds layer k
};

// A_{i,j} placed in layer j; throws on out-of-range indices or j > n.
LayeredElement inject(BraidGenerator g, int n);

// Bracket of L(P_n) on the layered normal form. Within a layer the free
// bracket applies; a lower layer acts on a higher one by the derivation
// determined on generators by the horizontal 4T relations:
//   for a < b < k:  A[a,b] . A[c,k] = [A[a,k],A[b,k]] if c = a,
//                                   = -[A[a,k],A[b,k]] if c = b, else 0,
// extended to monomials as commutators of derivations and then linearly.
LayeredElement lp_bracket(const LayeredElement& x, const LayeredElement& y);

// Strand deletion d_k: L(P_n) -> L(P_{n-1}), 1 <= k <= n, the Lie
// homomorphism with A[i,j] -> A[i,j] (j < k), 0 (k = i or k = j),
// A[i,j-1] (i < k < j), A[i-1,j-1] (k < i).
LayeredElement face(const LayeredElement& x, int k);

// Strand insertion at position i: L(P_n) -> L(P_{n+1}), 1 <= i <= n+1, the
// Lie homomorphism shifting every strand index >= i up by one.
LayeredElement coface(const LayeredElement& x, int i);

std::string layered_text(const LayeredElement& x);

}  // namespace braidlie
