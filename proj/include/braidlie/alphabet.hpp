#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace braidlie {

// A word over an alphabet, one 0-based symbol index per byte. Byte-wise
// comparison of words is exactly the lexicographic order induced by the
// declaration order of the symbols.
using Word = std::string;

// Finite ordered set of generator names. The declaration order is the total
// order used for Lyndon words and basis sorting; it is fixed for the lifetime
// of every element referencing the alphabet.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(int i) const { return symbols_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return symbols_; }

    // Index of a symbol name; throws std::invalid_argument on unknown symbol.
    int index(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) > 0; }

    bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    // Concatenated symbol names, e.g. "A[1,3]A[2,3]" or "aab".
    std::string word_text(const Word& w) const;

private:
    std::vector<std::string> symbols_;
    std::map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols);

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace braidlie
