#pragma once

#include <utility>
#include <vector>

namespace orext {

// Disjoint-cycle view of a permutation. `cycles` covers {1..n} including
// fixed points as singletons; each cycle is rotated to start at its smallest
// element and cycles are sorted by that element. `order` is the lcm of the
// cycle lengths, i.e. the least j > 0 with sigma^j = id.
struct CycleDecomposition {
    std::vector<std::vector<int>> cycles;
    long long order = 1;
};

// A bijection sigma of X = {1..n}, stored as its image table. Indices are
// 1-based throughout the public surface, matching the external JSON format.
class Permutation {
public:
    // image[i-1] = sigma(i); must be a bijection of {1..n}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    // Cycles need not mention fixed points. Entries must be distinct and
    // within {1..n}.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int n() const { return static_cast<int>(image_.size()); }
    int apply(int i) const { return image_[static_cast<size_t>(i) - 1]; }
    int apply_inverse(int i) const { return inverse_[static_cast<size_t>(i) - 1]; }

    // sigma^k(i) for any integer k (reduced modulo the cycle length of i).
    int apply_power(int i, long long k) const;

    Permutation inverse() const { return Permutation(inverse_); }
    bool is_identity() const;

    const std::vector<int>& image() const { return image_; }
    const CycleDecomposition& cycle_decomposition() const { return cycles_; }
    long long order() const { return cycles_.order; }
    int cycle_length(int i) const { return cycle_length_[static_cast<size_t>(i) - 1]; }

    // sigma^k(i) == i, equivalently cycle_length(i) divides k. k = 0 counts
    // every point as periodic (Per^0 = X).
    bool fixed_by_power(int i, long long k) const {
        return k % cycle_length(i) == 0;
    }

    // (Sep^k, Per^k): the points moved by / fixed by sigma^k, both ascending.
    // The two sets partition {1..n}; negative k gives the same split as |k|.
    std::pair<std::vector<int>, std::vector<int>> sep_per(long long k) const;

    bool operator==(const Permutation& other) const { return image_ == other.image_; }

private:
    std::vector<int> image_;
    std::vector<int> inverse_;
    std::vector<int> cycle_length_;
    CycleDecomposition cycles_;
};

} // namespace orext
