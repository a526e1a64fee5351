#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidlie/alphabet.hpp"
#include "braidlie/bigint.hpp"
#include "braidlie/monomial.hpp"

namespace braidlie {

// Element of the free Lie ring on an alphabet, stored in Lyndon normal form:
// a sparse integer combination of Lyndon words (keys) with nonzero
// coefficients. The represented element is the sum of coefficients times the
// standard bracketing of each key.
class LieElement {
public:
    explicit LieElement(AlphabetPtr alphabet);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Generator as an element; index is the 0-based alphabet position.
    static LieElement generator(const AlphabetPtr& alphabet, int index);

    // Adds c times the Lyndon basis word w; drops the term if it cancels.
    void add_term(const Word& w, const Int& c);

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Int& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(LieElement a, const Int& c) { return a *= c; }
    bool operator==(const LieElement& o) const;

    // Maximal word length present, 0 for the zero element.
    int max_degree() const;

private:
    AlphabetPtr alphabet_;
    std::map<Word, Int> terms_;
};

// Element of the free associative ring on the same alphabet: sparse integer
// combination of plain words. Serves as the tensor-algebra oracle for the
// Lie arithmetic (brackets become uv - vu).
class AssocPoly {
public:
    explicit AssocPoly(AlphabetPtr alphabet);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const Int& c);

    AssocPoly& operator+=(const AssocPoly& o);
    AssocPoly& operator-=(const AssocPoly& o);
    friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
    friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
    friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);
    bool operator==(const AssocPoly& o) const;

private:
    AlphabetPtr alphabet_;
    std::map<Word, Int> terms_;
};

// Lie bracket in Lyndon normal form; bilinear, exact over the integers.
// Throws on mismatched alphabets.
LieElement bracket(const LieElement& x, const LieElement& y);

// Normal form of a bracket tree; throws on leaves outside the alphabet.
LieElement monomial_to_element(const LieMonomial& m, const AlphabetPtr& alphabet);

// The Lie homomorphism determined by the images of the generators, applied to
// x. Every symbol occurring in x must have an image over `target`; images
// given over a different alphabet than `target` are rejected.
LieElement substitute(const LieElement& x,
                      const std::map<std::string, LieElement>& images,
                      const AlphabetPtr& target);

// The derivation of the free Lie ring determined by letter_images (one image
// per alphabet symbol, all over x's alphabet), applied to x.
LieElement apply_derivation(const std::vector<LieElement>& letter_images,
                            const LieElement& x);

// Embedding into the tensor algebra: brackets expand as uv - vu.
AssocPoly to_associative(const LieElement& x);

// Degree-q homogeneous part (q >= 1); the parts sum back to x.
LieElement homogeneous_component(const LieElement& x, int q);

// Textual form: terms "c·(word)" joined by " + "/" - ", sorted by
// (degree, lex); "0" for the zero element.
std::string element_text(const LieElement& x);

}  // namespace braidlie
