#include "boxdom/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace boxdom {

namespace {

std::size_t words_for(int universe) {
    if (universe < 0) throw IndexOutOfRange("negative universe size");
    return (static_cast<std::size_t>(universe) + 63) / 64;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
    int tail = universe % 64;
    if (tail != 0 && !s.words_.empty()) s.words_.back() = (1ULL << tail) - 1;
    return s;
}

VertexSet VertexSet::from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
}

void VertexSet::check_index(int v) const {
    if (v < 0 || v >= universe_)
        throw IndexOutOfRange("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (universe_ != other.universe_)
        throw UniverseMismatch("vertex sets over universes " + std::to_string(universe_) +
                               " and " + std::to_string(other.universe_));
}

bool VertexSet::contains(int v) const {
    check_index(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1ULL;
}

void VertexSet::insert(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) / 64] |= 1ULL << (v % 64);
}

void VertexSet::erase(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(1ULL << (v % 64));
}

int VertexSet::size() const {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

bool VertexSet::operator==(const VertexSet& other) const {
    return universe_ == other.universe_ && words_ == other.words_;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    out -= *this;
    return out;
}

int VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words_[w]);
    return -1;
}

std::vector<int> VertexSet::indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    std::vector<int> ia = a.indices(), ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace boxdom
