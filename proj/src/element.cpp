#include "braidlie/element.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "braidlie/lyndon.hpp"

namespace braidlie {

namespace {

using TermVec = std::vector<std::pair<Word, Int>>;

// Global table of normalized products [std(u), std(v)] for Lyndon u < v.
// The expansion depends only on the index sequences, so one table serves
// every alphabet. Lookups and inserts are mutex-guarded; computation happens
// outside the lock, duplicated work between threads is harmless.
std::mutex g_bracket_mutex;
std::map<std::pair<Word, Word>, TermVec> g_bracket_table;

void accumulate(std::map<Word, Int>& acc, const Word& w, const Int& c) {
    auto it = acc.find(w);
    if (it == acc.end()) {
        if (c != 0)
            acc.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        acc.erase(it);
}

TermVec bracket_lyndon(const Word& u, const Word& v, int depth);

// [std(x), std(t)] for Lyndon words in either order, into acc with weight c.
void bracket_any(std::map<Word, Int>& acc, const Word& x, const Word& t,
                 const Int& c, int depth) {
    if (x == t)
        return;
    const bool flip = x > t;
    const TermVec& terms = flip ? bracket_lyndon(t, x, depth) : bracket_lyndon(x, t, depth);
    for (const auto& [w, cw] : terms)
        accumulate(acc, w, flip ? Int(-c * cw) : Int(c * cw));
}

// Rewrites [std(u), std(v)], u < v, into the Lyndon basis. The pair is
// standard when v is the longest proper Lyndon suffix of uv; otherwise u
// splits as u = u1 u2 and Jacobi gives
//   [u, v] = [u1, [u2, v]] - [u2, [u1, v]],
// where both inner products involve a strictly shorter left factor and every
// basis word in their expansions stays lexicographically above it.
TermVec bracket_lyndon(const Word& u, const Word& v, int depth) {
    if (depth > 512)
        throw std::logic_error("bracket normalization recursion too deep");
    {
        std::lock_guard<std::mutex> lock(g_bracket_mutex);
        auto it = g_bracket_table.find({u, v});
        if (it != g_bracket_table.end())
            return it->second;
    }

    Word w = u + v;
    TermVec result;
    if (standard_factorization(w).second == v) {
        result.emplace_back(w, 1);
    } else {
        auto [u1, u2] = standard_factorization(u);
        std::map<Word, Int> acc;
        for (const auto& [t, c] : bracket_lyndon(u2, v, depth + 1))
            bracket_any(acc, u1, t, c, depth + 1);
        for (const auto& [t, c] : bracket_lyndon(u1, v, depth + 1))
            bracket_any(acc, u2, t, -c, depth + 1);
        result.assign(acc.begin(), acc.end());
    }

    std::lock_guard<std::mutex> lock(g_bracket_mutex);
    g_bracket_table.emplace(std::make_pair(u, v), result);
    return result;
}

void require_alphabet(const AlphabetPtr& a) {
    if (!a)
        throw std::invalid_argument("null alphabet");
}

}  // namespace

LieElement::LieElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    require_alphabet(alphabet_);
}

LieElement LieElement::generator(const AlphabetPtr& alphabet, int index) {
    require_alphabet(alphabet);
    if (index < 0 || index >= alphabet->size())
        throw std::invalid_argument("generator index out of range");
    LieElement e(alphabet);
    e.add_term(Word(1, static_cast<char>(index)), 1);
    return e;
}

void LieElement::add_term(const Word& w, const Int& c) {
    accumulate(terms_, w, c);
}

LieElement& LieElement::operator+=(const LieElement& o) {
    if (!same_alphabet(alphabet_, o.alphabet_))
        throw std::invalid_argument("mismatched alphabets");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (!same_alphabet(alphabet_, o.alphabet_))
        throw std::invalid_argument("mismatched alphabets");
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

LieElement& LieElement::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, cw] : terms_)
        cw *= c;
    return *this;
}

bool LieElement::operator==(const LieElement& o) const {
    return same_alphabet(alphabet_, o.alphabet_) && terms_ == o.terms_;
}

int LieElement::max_degree() const {
    int d = 0;
    for (const auto& [w, c] : terms_)
        d = std::max(d, static_cast<int>(w.size()));
    return d;
}

AssocPoly::AssocPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
    require_alphabet(alphabet_);
}

void AssocPoly::add_term(const Word& w, const Int& c) {
    accumulate(terms_, w, c);
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o) {
    if (!same_alphabet(alphabet_, o.alphabet_))
        throw std::invalid_argument("mismatched alphabets");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o) {
    if (!same_alphabet(alphabet_, o.alphabet_))
        throw std::invalid_argument("mismatched alphabets");
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
    if (!same_alphabet(a.alphabet_, b.alphabet_))
        throw std::invalid_argument("mismatched alphabets");
    AssocPoly r(a.alphabet_);
    for (const auto& [u, cu] : a.terms_)
        for (const auto& [v, cv] : b.terms_)
            r.add_term(u + v, cu * cv);
    return r;
}

bool AssocPoly::operator==(const AssocPoly& o) const {
    return same_alphabet(alphabet_, o.alphabet_) && terms_ == o.terms_;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (!same_alphabet(x.alphabet(), y.alphabet()))
        throw std::invalid_argument("mismatched alphabets");
    LieElement r(x.alphabet());
    std::map<Word, Int> acc;
    for (const auto& [u, cu] : x.terms())
        for (const auto& [v, cv] : y.terms())
            bracket_any(acc, u, v, cu * cv, 0);
    for (const auto& [w, c] : acc)
        r.add_term(w, c);
    return r;
}

LieElement monomial_to_element(const LieMonomial& m, const AlphabetPtr& alphabet) {
    require_alphabet(alphabet);
    if (m.is_leaf())
        return LieElement::generator(alphabet, alphabet->index(m.symbol()));
    return bracket(monomial_to_element(m.left(), alphabet),
                   monomial_to_element(m.right(), alphabet));
}

namespace {

// Image of one Lyndon basis word under a generator substitution, memoized on
// subwords of the standard factorization.
const LieElement& substitute_word(const Word& w,
                                  const std::vector<const LieElement*>& images,
                                  const AlphabetPtr& target,
                                  std::map<Word, LieElement>& memo) {
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    LieElement value(target);
    if (w.size() == 1) {
        value = *images[static_cast<size_t>(w[0])];
    } else {
        auto [u, v] = standard_factorization(w);
        value = bracket(substitute_word(u, images, target, memo),
                        substitute_word(v, images, target, memo));
    }
    return memo.emplace(w, std::move(value)).first->second;
}

}  // namespace

LieElement substitute(const LieElement& x,
                      const std::map<std::string, LieElement>& images,
                      const AlphabetPtr& target) {
    require_alphabet(target);
    const Alphabet& src = *x.alphabet();
    std::vector<const LieElement*> by_index(static_cast<size_t>(src.size()), nullptr);
    for (const auto& [name, img] : images) {
        if (!same_alphabet(img.alphabet(), target))
            throw std::invalid_argument("image of " + name + " is not over the target alphabet");
        if (src.has(name))
            by_index[static_cast<size_t>(src.index(name))] = &img;
    }
    LieElement r(target);
    std::map<Word, LieElement> memo;
    for (const auto& [w, c] : x.terms()) {
        for (char ch : w)
            if (!by_index[static_cast<size_t>(ch)])
                throw std::invalid_argument("missing image for symbol " +
                                            src.name(static_cast<int>(ch)));
        LieElement img = substitute_word(w, by_index, target, memo);
        img *= c;
        r += img;
    }
    return r;
}

namespace {

const LieElement& derive_word(const Word& w,
                              const std::vector<LieElement>& letter_images,
                              const AlphabetPtr& alphabet,
                              std::map<Word, LieElement>& memo) {
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    LieElement value(alphabet);
    if (w.size() == 1) {
        value = letter_images[static_cast<size_t>(w[0])];
    } else {
        // Leibniz on the standard factorization: D([u,v]) = [Du,v] + [u,Dv].
        auto [u, v] = standard_factorization(w);
        LieElement eu(alphabet), ev(alphabet);
        eu.add_term(u, 1);
        ev.add_term(v, 1);
        value = bracket(derive_word(u, letter_images, alphabet, memo), ev) +
                bracket(eu, derive_word(v, letter_images, alphabet, memo));
    }
    return memo.emplace(w, std::move(value)).first->second;
}

}  // namespace

LieElement apply_derivation(const std::vector<LieElement>& letter_images,
                            const LieElement& x) {
    const AlphabetPtr& alphabet = x.alphabet();
    if (static_cast<int>(letter_images.size()) != alphabet->size())
        throw std::invalid_argument("one image per alphabet symbol required");
    for (const auto& img : letter_images)
        if (!same_alphabet(img.alphabet(), alphabet))
            throw std::invalid_argument("derivation images must stay in the same alphabet");
    LieElement r(alphabet);
    std::map<Word, LieElement> memo;
    for (const auto& [w, c] : x.terms()) {
        LieElement dw = derive_word(w, letter_images, alphabet, memo);
        dw *= c;
        r += dw;
    }
    return r;
}

namespace {

const AssocPoly& assoc_word(const Word& w, const AlphabetPtr& alphabet,
                            std::map<Word, AssocPoly>& memo) {
    auto it = memo.find(w);
    if (it != memo.end())
        return it->second;
    AssocPoly value(alphabet);
    if (w.size() == 1) {
        value.add_term(w, 1);
    } else {
        auto [u, v] = standard_factorization(w);
        const AssocPoly& pu = assoc_word(u, alphabet, memo);
        const AssocPoly& pv = assoc_word(v, alphabet, memo);
        value = pu * pv - pv * pu;
    }
    return memo.emplace(w, std::move(value)).first->second;
}

}  // namespace

AssocPoly to_associative(const LieElement& x) {
    AssocPoly r(x.alphabet());
    std::map<Word, AssocPoly> memo;
    for (const auto& [w, c] : x.terms()) {
        AssocPoly p = assoc_word(w, x.alphabet(), memo);
        for (const auto& [word, cw] : p.terms())
            r.add_term(word, c * cw);
    }
    return r;
}

LieElement homogeneous_component(const LieElement& x, int q) {
    if (q < 1)
        throw std::invalid_argument("degree must be >= 1");
    LieElement r(x.alphabet());
    for (const auto& [w, c] : x.terms())
        if (static_cast<int>(w.size()) == q)
            r.add_term(w, c);
    return r;
}

std::string element_text(const LieElement& x) {
    if (x.is_zero())
        return "0";
    std::vector<std::pair<Word, Int>> terms(x.terms().begin(), x.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
        Int ac = c < 0 ? Int(-c) : c;
        if (first) {
            out += (c < 0 ? "-" : "");
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ");
        }
        out += ac.str() + "·(" + x.alphabet()->word_text(w) + ")";
    }
    return out;
}

}  // namespace braidlie
