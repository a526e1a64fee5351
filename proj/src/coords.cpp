#include "braidlie/coords.hpp"

#include <mutex>
#include <stdexcept>

#include "braidlie/lyndon.hpp"

namespace braidlie {

namespace {
std::mutex g_indexer_mutex;
std::map<std::pair<int, int>, const LyndonIndexer*> g_indexers;
}  // namespace

LyndonIndexer::LyndonIndexer(int num_letters, int degree) {
    for (const Word& w : lyndon_words(num_letters, degree))
        if (static_cast<int>(w.size()) == degree) {
            position_.emplace(w, static_cast<int>(words_.size()));
            words_.push_back(w);
        }
}

const LyndonIndexer& LyndonIndexer::get(int num_letters, int degree) {
    std::lock_guard<std::mutex> lock(g_indexer_mutex);
    auto key = std::make_pair(num_letters, degree);
    auto it = g_indexers.find(key);
    if (it == g_indexers.end())
        it = g_indexers.emplace(key, new LyndonIndexer(num_letters, degree)).first;
    return *it->second;
}

int LyndonIndexer::position(const Word& w) const {
    auto it = position_.find(w);
    if (it == position_.end())
        throw std::invalid_argument("word is not a Lyndon basis element of this degree");
    return it->second;
}

std::vector<Int> element_to_coords(const LieElement& x, int q) {
    const LyndonIndexer& idx = LyndonIndexer::get(x.alphabet()->size(), q);
    std::vector<Int> v(static_cast<size_t>(idx.dim()));
    for (const auto& [w, c] : x.terms())
        if (static_cast<int>(w.size()) == q)
            v[static_cast<size_t>(idx.position(w))] = c;
    return v;
}

LieElement coords_to_element(const std::vector<Int>& v, const AlphabetPtr& alphabet, int q) {
    const LyndonIndexer& idx = LyndonIndexer::get(alphabet->size(), q);
    if (static_cast<int>(v.size()) != idx.dim())
        throw std::invalid_argument("coordinate dimension mismatch");
    LieElement x(alphabet);
    for (int i = 0; i < idx.dim(); ++i)
        if (v[static_cast<size_t>(i)] != 0)
            x.add_term(idx.words()[static_cast<size_t>(i)], v[static_cast<size_t>(i)]);
    return x;
}

}  // namespace braidlie
