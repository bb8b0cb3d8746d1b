#pragma once

#include <cstdint>
#include <vector>

namespace hygirth {

// A bijection on {0..n-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;
    // Validates that `image` is a permutation of 0..n-1.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int apply(int x) const { return image_[x]; }
    const std::vector<int>& image() const { return image_; }

    bool is_identity() const;

    bool operator==(const Permutation& other) const { return image_ == other.image_; }
    bool operator!=(const Permutation& other) const { return !(*this == other); }
    bool operator<(const Permutation& other) const { return image_ < other.image_; }

private:
    std::vector<int> image_;
};

// (p * q)(x) = p(q(x)); sizes must match.
Permutation perm_compose(const Permutation& p, const Permutation& q);
Permutation perm_inverse(const Permutation& p);
// Any integer exponent; negative powers go through the inverse.
Permutation perm_power(const Permutation& p, long long k);
// Multiset of cycle lengths (ascending); sums to n.
std::vector<int> cycle_type(const Permutation& p);

// Lexicographic rank/unrank over S_n; valid for n <= 20 (n! fits in 64 bits).
std::uint64_t perm_rank(const Permutation& p);
Permutation perm_unrank(int n, std::uint64_t rank);
std::uint64_t factorial_u64(int n);

}  // namespace hygirth
