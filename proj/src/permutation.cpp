#include "hygirth/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hygirth/error.hpp"

namespace hygirth {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<char> seen(n, 0);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[v])
            fail("InvalidPermutation", "image array is not a bijection on 0..n-1");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[i] != i) return false;
    return true;
}

Permutation perm_compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) fail("SizeMismatch", "composing permutations of different sizes");
    std::vector<int> img(p.size());
    for (int x = 0; x < q.size(); ++x) img[x] = p.apply(q.apply(x));
    return Permutation(std::move(img));
}

Permutation perm_inverse(const Permutation& p) {
    std::vector<int> img(p.size());
    for (int x = 0; x < p.size(); ++x) img[p.apply(x)] = x;
    return Permutation(std::move(img));
}

Permutation perm_power(const Permutation& p, long long k) {
    Permutation base = k < 0 ? perm_inverse(p) : p;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1 : k;
    Permutation acc = Permutation::identity(p.size());
    while (e > 0) {
        if (e & 1) acc = perm_compose(acc, base);
        base = perm_compose(base, base);
        e >>= 1;
    }
    return acc;
}

std::vector<int> cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n, 0);
    std::vector<int> lengths;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = p.apply(x)) {
            seen[x] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) fail("InvalidParams", "factorial_u64 requires 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t perm_rank(const Permutation& p) {
    const int n = p.size();
    std::uint64_t rank = 0;
    std::vector<int> rest(n);
    std::iota(rest.begin(), rest.end(), 0);
    for (int i = 0; i < n; ++i) {
        auto it = std::lower_bound(rest.begin(), rest.end(), p.apply(i));
        rank += static_cast<std::uint64_t>(it - rest.begin()) * factorial_u64(n - 1 - i);
        rest.erase(it);
    }
    return rank;
}

Permutation perm_unrank(int n, std::uint64_t rank) {
    if (rank >= factorial_u64(n)) fail("InvalidParams", "rank out of range for S_n");
    std::vector<int> rest(n), img(n);
    std::iota(rest.begin(), rest.end(), 0);
    for (int i = 0; i < n; ++i) {
        std::uint64_t f = factorial_u64(n - 1 - i);
        auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        img[i] = rest[idx];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return Permutation(std::move(img));
}

}  // namespace hygirth
