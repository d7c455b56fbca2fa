#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fcaim {

/// Fixed-width bit set sized at construction. Words are little-endian in
/// bit order: bit i is word i/64, position i%64. Unused high bits of the last
/// word are kept zero so word-wise comparison and hashing are exact.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    static Bitset full(std::size_t size) { return Bitset(size, true); }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const {
        check(i);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    bool operator[](std::size_t i) const { return test(i); }

    Bitset& set(std::size_t i, bool value = true) {
        check(i);
        word_type mask = word_type{1} << (i % word_bits);
        if (value)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
        return *this;
    }
    Bitset& reset(std::size_t i) { return set(i, false); }

    Bitset& set_all() {
        for (auto& w : words_) w = ~word_type{0};
        trim();
        return *this;
    }
    Bitset& clear() {
        for (auto& w : words_) w = 0;
        return *this;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == size_; }

    Bitset& operator&=(const Bitset& o) {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference: this \ o.
    Bitset& operator-=(const Bitset& o) {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool is_subset_of(const Bitset& o) const {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    /// True when this and o agree on every bit below `limit`.
    bool equal_below(const Bitset& o, std::size_t limit) const {
        same_size(o);
        std::size_t full_words = limit / word_bits;
        for (std::size_t i = 0; i < full_words; ++i)
            if (words_[i] != o.words_[i]) return false;
        std::size_t rem = limit % word_bits;
        if (rem == 0) return true;
        word_type mask = (word_type{1} << rem) - 1;
        return ((words_[full_words] ^ o.words_[full_words]) & mask) == 0;
    }

    /// Index of the lowest set bit at or above `from`, or size() when none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t wi = from / word_bits;
        word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
        while (true) {
            if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = first(); i < size_; i = next(i + 1)) f(i);
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// Lexicographic order over bit positions, lowest index most significant.
    friend bool operator<(const Bitset& a, const Bitset& b) {
        if (a.size_ != b.size_) return a.size_ < b.size_;
        for (std::size_t i = 0; i < a.size_; ++i) {
            bool x = a.test(i), y = b.test(i);
            if (x != y) return y;
        }
        return false;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    void check(std::size_t i) const {
        if (i >= size_) throw std::out_of_range("bit index out of range");
    }
    void same_size(const Bitset& o) const {
        if (o.size_ != size_) throw std::invalid_argument("bit set size mismatch");
    }
    void trim() {
        if (size_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace fcaim
