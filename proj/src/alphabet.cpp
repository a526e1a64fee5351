#include "braidlie/alphabet.hpp"

#include <stdexcept>

namespace braidlie {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() > 100)
        throw std::invalid_argument("alphabet too large (limit 100 symbols)");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].empty())
            throw std::invalid_argument("empty symbol name");
        if (!index_.emplace(symbols_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate symbol: " + symbols_[i]);
    }
}

int Alphabet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw std::invalid_argument("unknown symbol: " + name);
    return it->second;
}

std::string Alphabet::word_text(const Word& w) const {
    std::string out;
    for (char c : w)
        out += name(static_cast<int>(c));
    return out;
}

AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

}  // namespace braidlie
