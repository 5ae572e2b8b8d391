#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tangles {

// Set of small positive ids (vertex ids, edge ids, universe elements).
// Fixed capacity, value semantics. Ids are 1-based.
class IdSet {
public:
    static constexpr int kCapacity = 256;

    constexpr IdSet() = default;

    static IdSet of(std::initializer_list<int> ids) {
        IdSet s;
        for (int id : ids) s.add(id);
        return s;
    }

    // {lo, lo+1, ..., hi}; empty if hi < lo.
    static IdSet closed_range(int lo, int hi) {
        IdSet s;
        for (int id = lo; id <= hi; ++id) s.add(id);
        return s;
    }

    void add(int id) {
        check(id);
        words_[id >> 6] |= std::uint64_t{1} << (id & 63);
    }

    void remove(int id) {
        check(id);
        words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    }

    bool contains(int id) const {
        if (id < 0 || id >= kCapacity) return false;
        return (words_[id >> 6] >> (id & 63)) & 1;
    }

    int size() const {
        int n = 0;
        for (auto w : words_) n += __builtin_popcountll(w);
        return n;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    // Smallest element, or -1 if empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i]) return i * 64 + __builtin_ctzll(words_[i]);
        return -1;
    }

    // Smallest element greater than id, or -1.
    int next(int id) const {
        if (id < 0) return first();
        int i = (id + 1) >> 6;
        if (i >= kWords) return -1;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((id + 1) & 63));
        while (true) {
            if (w) return i * 64 + __builtin_ctzll(w);
            if (++i >= kWords) return -1;
            w = words_[i];
        }
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(size());
        for (int id = first(); id != -1; id = next(id)) out.push_back(id);
        return out;
    }

    bool subset_of(const IdSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const IdSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    IdSet& operator|=(const IdSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    IdSet& operator&=(const IdSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    IdSet& operator-=(const IdSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
    friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
    friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }

    friend bool operator==(const IdSet& a, const IdSet& b) { return a.words_ == b.words_; }
    friend bool operator!=(const IdSet& a, const IdSet& b) { return !(a == b); }

    // Total order treating the set as a 256-bit integer; used only to fix
    // canonical output orderings.
    friend bool operator<(const IdSet& a, const IdSet& b) {
        for (int i = kWords - 1; i >= 0; --i)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    static constexpr int kWords = kCapacity / 64;

    static void check(int id) {
        if (id < 0 || id >= kCapacity)
            throw std::out_of_range("IdSet: id out of range");
    }

    std::array<std::uint64_t, kWords> words_{};
};

struct IdSetHash {
    std::size_t operator()(const IdSet& s) const { return s.hash(); }
};

} // namespace tangles
