#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>

#include "vsdt/error.hpp"

namespace vsdt {

/// Fixed-width bitset over colors 1..kMaxColors. Set equality, union and
/// symmetric difference are the hot operations in both the solver and the
/// constructive algorithm.
class ColorSet {
public:
    static constexpr int kMaxColors = 512;
    static constexpr int kWords = kMaxColors / 64;

    ColorSet() = default;
    ColorSet(std::initializer_list<int> colors) {
        for (int c : colors) insert(c);
    }

    static void check_color(int c) {
        require(c >= 1 && c <= kMaxColors, errc::invalid_input,
                "color " + std::to_string(c) + " outside 1.." + std::to_string(kMaxColors));
    }

    void insert(int c) {
        check_color(c);
        bits_[(c - 1) >> 6] |= std::uint64_t{1} << ((c - 1) & 63);
    }
    void erase(int c) {
        check_color(c);
        bits_[(c - 1) >> 6] &= ~(std::uint64_t{1} << ((c - 1) & 63));
    }
    bool contains(int c) const {
        if (c < 1 || c > kMaxColors) return false;
        return (bits_[(c - 1) >> 6] >> ((c - 1) & 63)) & 1;
    }

    int size() const {
        int total = 0;
        for (auto w : bits_) total += std::popcount(w);
        return total;
    }
    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    ColorSet with(int c) const {
        ColorSet r = *this;
        r.insert(c);
        return r;
    }

    int symmetric_difference_size(const ColorSet& other) const {
        int total = 0;
        for (int i = 0; i < kWords; ++i) total += std::popcount(bits_[i] ^ other.bits_[i]);
        return total;
    }

    /// The single element of the symmetric difference, when there is
    /// exactly one.
    std::optional<int> symmetric_difference_single(const ColorSet& other) const {
        int found = 0, count = 0;
        for (int i = 0; i < kWords && count <= 1; ++i) {
            std::uint64_t x = bits_[i] ^ other.bits_[i];
            while (x) {
                ++count;
                if (count > 1) break;
                found = i * 64 + std::countr_zero(x) + 1;
                x &= x - 1;
            }
        }
        if (count == 1) return found;
        return std::nullopt;
    }

    bool is_subset_of(const ColorSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if (bits_[i] & ~other.bits_[i]) return false;
        return true;
    }

    friend bool operator==(const ColorSet& a, const ColorSet& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const ColorSet& a, const ColorSet& b) { return !(a == b); }

    friend ColorSet operator|(const ColorSet& a, const ColorSet& b) {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.bits_[i] = a.bits_[i] | b.bits_[i];
        return r;
    }
    friend ColorSet operator&(const ColorSet& a, const ColorSet& b) {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.bits_[i] = a.bits_[i] & b.bits_[i];
        return r;
    }
    friend ColorSet operator^(const ColorSet& a, const ColorSet& b) {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.bits_[i] = a.bits_[i] ^ b.bits_[i];
        return r;
    }
    /// Set difference a \ b.
    friend ColorSet operator-(const ColorSet& a, const ColorSet& b) {
        ColorSet r;
        for (int i = 0; i < kWords; ++i) r.bits_[i] = a.bits_[i] & ~b.bits_[i];
        return r;
    }

    /// Smallest color in 1..palette not in the set, if any.
    std::optional<int> smallest_missing(int palette) const {
        for (int c = 1; c <= palette; ++c)
            if (!contains(c)) return c;
        return std::nullopt;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = bits_[i];
            while (x) {
                fn(i * 64 + std::countr_zero(x) + 1);
                x &= x - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, kWords> bits_{};
};

} // namespace vsdt
