#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nsg {

// Permutation of {0,1,2,3}, stored by images.  Used both as a face gluing
// (vertex bijection between two tetrahedra) and as a relabelling.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    constexpr Perm4() = default;
    constexpr Perm4(int a, int b, int c, int d)
        : img{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
              static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    constexpr int operator[](int i) const { return img[static_cast<std::size_t>(i)]; }

    constexpr bool is_valid() const {
        int seen = 0;
        for (int i = 0; i < 4; ++i) {
            if (img[i] > 3) return false;
            seen |= 1 << img[i];
        }
        return seen == 0xf;
    }

    constexpr Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    // (a * b)[i] = a[b[i]]
    friend constexpr Perm4 operator*(const Perm4& a, const Perm4& b) {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img[i] = a.img[b.img[i]];
        return r;
    }

    friend constexpr bool operator==(const Perm4& a, const Perm4& b) { return a.img == b.img; }

    // 0 for even permutations, 1 for odd.
    constexpr int parity() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[i] > img[j]) ++inv;
        return inv & 1;
    }

    constexpr bool is_identity() const { return img[0] == 0 && img[1] == 1 && img[2] == 2 && img[3] == 3; }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < 4; ++i) s += static_cast<char>('0' + img[i]);
        return s + ")";
    }
};

// Parity of a bijection between two 3-element ascending tuples, given as the
// image tuple.  0 if the images are ascending-compatible (even), 1 otherwise.
constexpr int parity3(const std::array<int, 3>& image) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (image[i] > image[j]) ++inv;
    return inv & 1;
}

}  // namespace nsg
