#pragma once

#include <vector>

#include "braidlie/element.hpp"
#include "braidlie/matrix.hpp"

namespace braidlie {

// Ordered Lyndon words of one fixed degree over an alphabet, with positions.
// These are the canonical coordinates of the degree-q component of a free
// Lie ring; instances are cached per (alphabet size, degree).
class LyndonIndexer {
public:
    static const LyndonIndexer& get(int num_letters, int degree);

    int dim() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    int position(const Word& w) const;  // throws if w is not in the basis

private:
    LyndonIndexer(int num_letters, int degree);
    std::vector<Word> words_;
    std::map<Word, int> position_;
};

// Coordinates of the degree-q part of x in the Lyndon basis of that degree.
std::vector<Int> element_to_coords(const LieElement& x, int q);

// Inverse of element_to_coords on homogeneous vectors.
LieElement coords_to_element(const std::vector<Int>& v, const AlphabetPtr& alphabet, int q);

}  // namespace braidlie
