#include "orext/permutation.hpp"

#include "orext/error.hpp"

#include <numeric>
#include <string>

namespace orext {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    if (n == 0) raise(Error::Code::Schema, "permutation must have n >= 1");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : image_) {
        if (v < 1 || v > n)
            raise(Error::Code::Schema,
                  "permutation image entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[static_cast<size_t>(v) - 1])
            raise(Error::Code::Schema,
                  "permutation image repeats value " + std::to_string(v));
        seen[static_cast<size_t>(v) - 1] = true;
    }

    inverse_.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) inverse_[static_cast<size_t>(apply(i)) - 1] = i;

    cycle_length_.assign(static_cast<size_t>(n), 0);
    std::vector<bool> visited(static_cast<size_t>(n), false);
    for (int start = 1; start <= n; ++start) {
        if (visited[static_cast<size_t>(start) - 1]) continue;
        std::vector<int> cycle;
        for (int i = start; !visited[static_cast<size_t>(i) - 1]; i = apply(i)) {
            visited[static_cast<size_t>(i) - 1] = true;
            cycle.push_back(i);
        }
        const int len = static_cast<int>(cycle.size());
        for (int i : cycle) cycle_length_[static_cast<size_t>(i) - 1] = len;
        cycles_.order = std::lcm(cycles_.order, static_cast<long long>(len));
        cycles_.cycles.push_back(std::move(cycle));
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    if (n < 1) raise(Error::Code::Schema, "permutation must have n >= 1");
    std::vector<int> image(static_cast<size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (const auto& cycle : cycles) {
        for (size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j];
            int to = cycle[(j + 1) % cycle.size()];
            if (from < 1 || from > n)
                raise(Error::Code::Schema, "cycle entry " + std::to_string(from) + " outside 1.." + std::to_string(n));
            if (used[static_cast<size_t>(from) - 1])
                raise(Error::Code::Schema, "cycles are not disjoint at " + std::to_string(from));
            used[static_cast<size_t>(from) - 1] = true;
            image[static_cast<size_t>(from) - 1] = to;
        }
    }
    return Permutation(std::move(image));
}

int Permutation::apply_power(int i, long long k) const {
    const int len = cycle_length(i);
    long long steps = ((k % len) + len) % len;
    for (; steps > 0; --steps) i = apply(i);
    return i;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (apply(i) != i) return false;
    return true;
}

std::pair<std::vector<int>, std::vector<int>> Permutation::sep_per(long long k) const {
    std::vector<int> sep;
    std::vector<int> per;
    for (int i = 1; i <= n(); ++i)
        (fixed_by_power(i, k) ? per : sep).push_back(i);
    return {std::move(sep), std::move(per)};
}

} // namespace orext
