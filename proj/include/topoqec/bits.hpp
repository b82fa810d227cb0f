#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace topoqec {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Length is immutable after construction.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    /// Parity of the AND with another vector: <a, b> over GF(2).
    static bool dot(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w) acc ^= a.words_[w] & b.words_[w];
        return __builtin_parityll(acc);
    }

    /// Popcount of the AND with another vector.
    static std::size_t and_count(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            c += static_cast<std::size_t>(__builtin_popcountll(a.words_[w] & b.words_[w]));
        return c;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
        return nbits_;
    }

    std::vector<std::size_t> set_bits() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t v = words_[w];
            while (v) {
                out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(v)));
                v &= v - 1;
            }
        }
        return out;
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }
    bool operator<(const BitVec& o) const { return words_ < o.words_; }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace topoqec
