#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace excol {

// A subset of vertex indices, backed by 64-bit words. Grows on demand, so
// there is no fixed capacity; equality ignores trailing zero words.
class VertexSet {
public:
    VertexSet() = default;

    static VertexSet single(int v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    // {0, 1, ..., n-1}
    static VertexSet range(int n) {
        VertexSet s;
        if (n <= 0) return s;
        s.words_.assign(static_cast<std::size_t>((n + 63) / 64), ~0ULL);
        int rem = n % 64;
        if (rem != 0) s.words_.back() = (1ULL << rem) - 1;
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    bool test(int v) const {
        if (v < 0) return false;
        std::size_t w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (v % 64)) & 1ULL;
    }

    void insert(int v) {
        std::size_t w = static_cast<std::size_t>(v) / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= 1ULL << (v % 64);
    }

    void erase(int v) {
        std::size_t w = static_cast<std::size_t>(v) / 64;
        if (w < words_.size()) words_[w] &= ~(1ULL << (v % 64));
    }

    bool empty() const {
        for (std::uint64_t w : words_)
            if (w != 0) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // Smallest member, or -1 if empty.
    int lowest() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0)
                return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    bool intersects(const VertexSet& o) const {
        std::size_t n = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        std::size_t n = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        std::size_t n = std::max(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t a = i < words_.size() ? words_[i] : 0;
            std::uint64_t b = i < o.words_.size() ? o.words_[i] : 0;
            if (a != b) return false;
        }
        return true;
    }

    bool operator!=(const VertexSet& o) const { return !(*this == o); }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace excol
