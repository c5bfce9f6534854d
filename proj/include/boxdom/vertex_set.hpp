#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "boxdom/errors.hpp"

namespace boxdom {

// A subset of {0, ..., universe-1}, stored as a bit vector.  Factor graphs
// fit in one 64-bit word; product graphs may need up to 64 words.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);

    static VertexSet full(int universe);
    static VertexSet from_indices(int universe, const std::vector<int>& members);

    int universe() const { return universe_; }
    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const;
    bool empty() const { return size() == 0; }

    bool subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const;
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Complement within the universe.
    VertexSet complement() const;

    // Lowest member, or -1 if empty.
    int first() const;

    // Members in increasing order.
    std::vector<int> indices() const;

    // Calls fn(v) for each member in increasing order.
    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                int bit = __builtin_ctzll(word);
                fn(static_cast<int>(w * 64) + bit);
                word &= word - 1;
            }
        }
    }

    // Raw word access for hot loops (word i covers vertices 64i..64i+63).
    std::uint64_t word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }
    std::size_t word_count() const { return words_.size(); }

  private:
    void check_index(int v) const;
    void check_universe(const VertexSet& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Order on the increasing member sequences (so {0,2} < {0,3} < {1} and a
// proper prefix sorts first).  Used everywhere a deterministic enumeration
// or tie-break over sets is needed.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace boxdom
