#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = std::int32_t;

// Set of vertex indices 0..universe-1 stored as machine words. Graphs with at
// most 64 vertices keep the single word inline; larger ones chain words on the heap.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet* set, std::size_t word, Word bits) : set_(set), word_(word), bits_(bits) { settle(); }

        Vertex operator*() const { return static_cast<Vertex>(word_ * kWordBits + std::countr_zero(bits_)); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            settle();
            return *this;
        }
        iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator& o) const { return word_ == o.word_ && bits_ == o.bits_; }

    private:
        void settle() {
            while (bits_ == 0 && set_ != nullptr && word_ + 1 < set_->words_.size())
                bits_ = set_->words_[++word_];
            if (bits_ == 0 && set_ != nullptr)
                word_ = set_->words_.size();
        }

        const VertexSet* set_ = nullptr;
        std::size_t word_ = 0;
        Word bits_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (auto v : members)
            insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (std::size_t i = 0; i < s.words_.size(); ++i)
            s.words_[i] = ~Word{0};
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
    }
    void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    int size() const {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }
    bool empty() const {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }
    // Smallest member, or -1 when empty.
    Vertex first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0)
                return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    // Complement within the universe.
    VertexSet operator~() const { return full(universe_) - *this; }

    bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }

    iterator begin() const { return words_.empty() ? end() : iterator(this, 0, words_[0]); }
    iterator end() const { return iterator(this, words_.size(), 0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits; }
    void trim() {
        if (universe_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }

    int universe_ = 0;
    boost::container::small_vector<Word, 1> words_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Throws ArgumentError on loops or out-of-range endpoints; duplicate edges are merged.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    // Rows must be symmetric and loop-free.
    static Graph from_adjacency(std::vector<VertexSet> rows);

    int n() const { return static_cast<int>(adj_.size()); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const {
        auto s = adj_[v];
        s.insert(v);
        return s;
    }
    int degree(Vertex v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::full(n()); }
    VertexSet empty_set() const { return VertexSet(n()); }

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;
    int edge_count() const;

    // Graph induced on `keep`, relabelled densely in increasing index order.
    Graph induced(const VertexSet& keep) const;
    // Vertex i of the result is vertex order[i] of this graph.
    Graph relabel(const std::vector<Vertex>& order) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<VertexSet> adj_;
};

// Small named graphs.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph empty_graph(int n);
Graph petersen_graph();

} // namespace pursuit
