#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace wsat {

// Fixed-capacity vertex set over {0..n-1}, one machine word per 64 vertices.
// n <= 64 is the common case (single word); larger n works transparently.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity)
        : nbits_(capacity), words_(static_cast<std::size_t>((capacity + 63) / 64), 0) {}

    int capacity() const { return nbits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < nbits_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        assert(v >= 0 && v < nbits_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        assert(v >= 0 && v < nbits_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this := this \ o
    VertexSet& subtract(const VertexSet& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    bool is_subset_of(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Smallest element, or -1 when empty.
    int first() const { return next(-1); }
    // Smallest element > v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& o) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (nbits_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (nbits_ % 64)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wsat
