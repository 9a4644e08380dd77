#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace geoclique::detail {

/// Square bit matrix: row v = neighbourhood mask of vertex v. Used by the
/// clique enumeration and the exact colouring search.
class BitRows {
  public:
    BitRows(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    int words() const { return words_; }

    void set(int r, int c) {
        bits_[static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c >> 6)] |=
            (1ULL << (c & 63));
    }
    const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }

  private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline int popcount_words(const std::uint64_t* a, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(a[w]);
    return c;
}

inline int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

inline bool any_words(const std::uint64_t* a, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w]) return true;
    return false;
}

template <typename Fn>
inline void for_each_bit(const std::uint64_t* a, int words, Fn&& fn) {
    for (int w = 0; w < words; ++w) {
        std::uint64_t x = a[w];
        while (x) {
            int b = std::countr_zero(x);
            fn(w * 64 + b);
            x &= x - 1;
        }
    }
}

}  // namespace geoclique::detail
