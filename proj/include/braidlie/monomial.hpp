#pragma once

#include <memory>
#include <string>
#include <vector>

#include "braidlie/alphabet.hpp"

namespace braidlie {

// Binary bracket tree with leaves labeled by generator names: either a single
// generator or [left,right]. Immutable; subtrees are shared and safe to hand
// between threads. Degree and the sorted leaf multiset are cached per node.
class LieMonomial {
public:
    static LieMonomial leaf(std::string symbol);
    static LieMonomial bracket(const LieMonomial& left, const LieMonomial& right);

    bool is_leaf() const { return node_->left == nullptr; }
    const std::string& symbol() const;  // leaf nodes only
    LieMonomial left() const;           // bracket nodes only
    LieMonomial right() const;

    int degree() const { return node_->degree; }
    const std::vector<std::string>& letters() const { return node_->letters; }
    bool contains(const std::string& symbol) const;

    // Bracket text notation: a leaf prints its name, a pair prints [u,v].
    std::string text() const;

    bool operator==(const LieMonomial& o) const;

private:
    struct Node {
        std::string symbol;  // leaves only
        std::shared_ptr<const Node> left, right;
        int degree = 1;
        std::vector<std::string> letters;  // sorted with multiplicity
    };

    explicit LieMonomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

// Standard bracketing of a Lyndon word: a leaf for length one, otherwise the
// bracket of the standard bracketings of the right standard factorization.
// Throws "not a Lyndon word" on non-Lyndon input.
LieMonomial standard_bracketing(const Word& w, const Alphabet& alphabet);

}  // namespace braidlie
