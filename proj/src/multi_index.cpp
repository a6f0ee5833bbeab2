#include "semgof/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace semgof {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::int64_t multichoose(int q, int m) {
    if (q < 1 || m < 0) throw std::invalid_argument("multichoose: need q >= 1, m >= 0");
    return binomial(q + m - 1, m);
}

std::vector<MultiIndex> enumerate_multi_indices(int q, int m) {
    if (q < 1 || m < 0) throw std::invalid_argument("enumerate_multi_indices: need q >= 1, m >= 0");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(multichoose(q, m)));
    MultiIndex cur(m, 0);
    if (m == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        int pos = m - 1;
        while (pos >= 0 && cur[pos] == q - 1) --pos;
        if (pos < 0) break;
        const int v = cur[pos] + 1;
        for (int i = pos; i < m; ++i) cur[i] = v;
    }
    return out;
}

std::int64_t multi_index_rank(int q, const MultiIndex& idx) {
    // Count tuples lexicographically smaller than idx among non-decreasing tuples.
    const int m = static_cast<int>(idx.size());
    std::int64_t rank = 0;
    int low = 0;
    for (int pos = 0; pos < m; ++pos) {
        for (int v = low; v < idx[pos]; ++v) {
            rank += multichoose(q - v, m - pos - 1);
        }
        low = idx[pos];
    }
    return rank;
}

std::vector<MultiIndex> enumerate_subsets(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    out.reserve(static_cast<std::size_t>(binomial(n, k)));
    MultiIndex cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k == 0) {
        out.push_back(cur);
        return out;
    }
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

std::int64_t distinct_permutation_count(const MultiIndex& idx) {
    const int m = static_cast<int>(idx.size());
    std::int64_t result = 1;
    // m! / prod(mult_i!)
    for (int i = 2; i <= m; ++i) result *= i;
    int run = 1;
    for (int i = 1; i <= m; ++i) {
        if (i < m && idx[i] == idx[i - 1]) {
            ++run;
        } else {
            for (int j = 2; j <= run; ++j) result /= j;
            run = 1;
        }
    }
    return result;
}

}  // namespace semgof
