#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace skind {

/// Fixed-length bitset sized at runtime. Word-level access is public because
/// the exact solver works directly on the words.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    void set_all() noexcept {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept {
        for (Word w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t first() const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }

    /// Index of the lowest set bit strictly after i, or size().
    std::size_t next(std::size_t i) const noexcept {
        ++i;
        if (i >= size_) return size_;
        std::size_t k = i / kWordBits;
        Word w = words_[k] & (~Word{0} << (i % kWordBits));
        while (true) {
            if (w != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return size_;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    std::size_t intersection_count(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    const std::vector<Word>& words() const noexcept { return words_; }
    std::vector<Word>& words() noexcept { return words_; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (size_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace skind
