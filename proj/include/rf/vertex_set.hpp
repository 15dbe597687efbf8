#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rf {

// Subset of [0, universe) stored as a packed bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe)
    {
        for (int v : members)
            set(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.set(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int> & members)
    {
        VertexSet s(universe);
        for (int v : members)
            s.set(v);
        return s;
    }

    int universe() const { return universe_; }

    bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    // Size of the intersection without materialising it.
    int count_and(const VertexSet & other) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const VertexSet & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool subset_of(const VertexSet & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    VertexSet & operator&=(const VertexSet & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    VertexSet & operator|=(const VertexSet & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet & operator-=(const VertexSet & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }
    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    // Smallest member >= from, or -1.
    int next(int from) const
    {
        if (from >= universe_)
            return -1;
        std::size_t w = from >> 6;
        std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits)
                return static_cast<int>(w * 64 + std::countr_zero(bits));
            if (++w == words_.size())
                return -1;
            bits = words_[w];
        }
    }

    int first() const { return next(0); }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rf
