#ifndef JR_BITSET_HPP
#define JR_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace jr {

// Fixed-universe bitset used for voter sets (supporter sets B_c) and
// candidate sets. The hot loops of the solvers are intersections,
// differences and popcounts over these.
class dyn_bitset {
public:
    dyn_bitset() = default;
    explicit dyn_bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= word_bit(i); }
    void reset(std::size_t i) { words_[i >> 6] &= ~word_bit(i); }
    bool test(std::size_t i) const { return words_[i >> 6] & word_bit(i); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    // |this ∩ other|
    std::size_t and_count(const dyn_bitset& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    // |this \ other|
    std::size_t diff_count(const dyn_bitset& other) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }

    // |(this \ a) ∩ b|
    std::size_t diff_and_count(const dyn_bitset& a, const dyn_bitset& b) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~a.words_[i] & b.words_[i]);
        return c;
    }

    bool intersects(const dyn_bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const dyn_bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    dyn_bitset& operator|=(const dyn_bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    dyn_bitset& operator&=(const dyn_bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }
    // this <- this \ other
    dyn_bitset& operator-=(const dyn_bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend dyn_bitset operator|(dyn_bitset a, const dyn_bitset& b) { return a |= b; }
    friend dyn_bitset operator&(dyn_bitset a, const dyn_bitset& b) { return a &= b; }
    friend dyn_bitset operator-(dyn_bitset a, const dyn_bitset& b) { return a -= b; }

    bool operator==(const dyn_bitset& other) const = default;

    // Index of the lowest set bit at or after `from`, or size() if none.
    std::size_t next_set(std::size_t from) const {
        if (from >= nbits_) return nbits_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi == words_.size()) return nbits_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t i = next_set(0); i < nbits_; i = next_set(i + 1)) f(i);
    }

private:
    static std::uint64_t word_bit(std::size_t i) {
        return std::uint64_t{1} << (i & 63);
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace jr

#endif
