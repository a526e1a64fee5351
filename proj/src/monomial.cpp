#include "braidlie/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "braidlie/lyndon.hpp"

namespace braidlie {

LieMonomial LieMonomial::leaf(std::string symbol) {
    auto n = std::make_shared<Node>();
    n->symbol = std::move(symbol);
    n->degree = 1;
    n->letters = {n->symbol};
    return LieMonomial(std::move(n));
}

LieMonomial LieMonomial::bracket(const LieMonomial& left, const LieMonomial& right) {
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->degree = left.degree() + right.degree();
    n->letters.reserve(static_cast<size_t>(n->degree));
    std::merge(left.letters().begin(), left.letters().end(),
               right.letters().begin(), right.letters().end(),
               std::back_inserter(n->letters));
    return LieMonomial(std::move(n));
}

const std::string& LieMonomial::symbol() const {
    if (!is_leaf())
        throw std::logic_error("symbol() on a bracket node");
    return node_->symbol;
}

LieMonomial LieMonomial::left() const {
    if (is_leaf())
        throw std::logic_error("left() on a leaf");
    return LieMonomial(node_->left);
}

LieMonomial LieMonomial::right() const {
    if (is_leaf())
        throw std::logic_error("right() on a leaf");
    return LieMonomial(node_->right);
}

bool LieMonomial::contains(const std::string& symbol) const {
    return std::binary_search(node_->letters.begin(), node_->letters.end(), symbol);
}

std::string LieMonomial::text() const {
    if (is_leaf())
        return node_->symbol;
    return "[" + left().text() + "," + right().text() + "]";
}

bool LieMonomial::operator==(const LieMonomial& o) const {
    if (node_ == o.node_)
        return true;
    if (is_leaf() != o.is_leaf())
        return false;
    if (is_leaf())
        return node_->symbol == o.node_->symbol;
    return left() == o.left() && right() == o.right();
}

LieMonomial standard_bracketing(const Word& w, const Alphabet& alphabet) {
    if (!is_lyndon(w))
        throw std::invalid_argument("not a Lyndon word");
    if (w.size() == 1)
        return LieMonomial::leaf(alphabet.name(static_cast<int>(w[0])));
    auto [u, v] = standard_factorization(w);
    return LieMonomial::bracket(standard_bracketing(u, alphabet),
                                standard_bracketing(v, alphabet));
}

}  // namespace braidlie
