#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace kboot {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline int words_for(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> bits, int i) {
    return (bits[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> bits, int i) {
    bits[i / kWordBits] |= Word(1) << (i % kWordBits);
}

inline void clear_bit(std::span<Word> bits, int i) {
    bits[i / kWordBits] &= ~(Word(1) << (i % kWordBits));
}

inline int popcount(std::span<const Word> bits) {
    int c = 0;
    for (Word w : bits) c += std::popcount(w);
    return c;
}

inline bool any_bit(std::span<const Word> bits) {
    for (Word w : bits)
        if (w) return true;
    return false;
}

// Calls f(i) for every set bit, in increasing order.
template <typename F>
inline void for_each_bit(std::span<const Word> bits, F&& f) {
    for (size_t wi = 0; wi < bits.size(); ++wi) {
        Word w = bits[wi];
        while (w) {
            int b = std::countr_zero(w);
            f(int(wi) * kWordBits + b);
            w &= w - 1;
        }
    }
}

inline int first_bit(std::span<const Word> bits) {
    for (size_t wi = 0; wi < bits.size(); ++wi)
        if (bits[wi]) return int(wi) * kWordBits + std::countr_zero(bits[wi]);
    return -1;
}

}  // namespace kboot
