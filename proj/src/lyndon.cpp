#include "braidlie/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidlie {

bool is_lyndon(const Word& w) {
    if (w.empty())
        return false;
    // w is Lyndon iff it is strictly smaller than each proper suffix.
    for (size_t i = 1; i < w.size(); ++i)
        if (w.compare(w.substr(i)) >= 0)
            return false;
    return true;
}

std::vector<Word> lyndon_words(int num_letters, int deg_max) {
    if (num_letters < 1)
        throw std::invalid_argument("empty alphabet");
    if (deg_max < 1)
        throw std::invalid_argument("deg_max must be >= 1");

    // Duval's algorithm: emits Lyndon words of length <= deg_max in lex order.
    std::vector<Word> out;
    Word w(1, char(0));
    while (true) {
        if (static_cast<int>(w.size()) <= deg_max)
            out.push_back(w);
        // Extend periodically to full length, then increment the last
        // incrementable letter.
        Word t = w;
        while (static_cast<int>(t.size()) < deg_max)
            t += t[t.size() % w.size()];
        while (!t.empty() && t.back() == char(num_letters - 1))
            t.pop_back();
        if (t.empty())
            break;
        ++t.back();
        w = t;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return out;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, int deg_max) {
    if (alphabet.size() == 0)
        throw std::invalid_argument("empty alphabet");
    return lyndon_words(alphabet.size(), deg_max);
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2 || !is_lyndon(w))
        throw std::invalid_argument("not a Lyndon word");
    for (size_t i = 1; i < w.size(); ++i) {
        Word v = w.substr(i);
        if (is_lyndon(v))
            return {w.substr(0, i), v};
    }
    throw std::logic_error("standard factorization not found");  // unreachable
}

}  // namespace braidlie
