#include "nestloc/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nestloc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::conj_part(int i) const {
    if (i < 1)
        return 0;
    int cnt = 0;
    for (int p : parts_) {
        if (p >= i)
            ++cnt;
        else
            break;
    }
    return cnt;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int i = 1; i <= largest(); ++i)
        c.push_back(conj_part(i));
    return Partition(std::move(c));
}

bool Partition::contained_in(const Partition& o) const {
    for (int j = 1; j <= length(); ++j)
        if (part(j) > o.part(j))
            return false;
    return true;
}

bool Partition::operator<(const Partition& o) const {
    // enumeration order: larger first part first, then recursively
    return parts_ > o.parts_;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

namespace {

void rec_partitions(int n, int max_part, std::vector<int>& acc,
                    const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        rec_partitions(n - p, p, acc, fn);
        acc.pop_back();
    }
}

void rec_subpartitions(int n, int row, const Partition& outer, std::vector<int>& acc,
                       const std::function<void(const Partition&)>& fn) {
    if (n == 0) {
        fn(Partition(acc));
        return;
    }
    int cap = outer.part(row);
    if (!acc.empty())
        cap = std::min(cap, acc.back());
    for (int p = std::min(n, cap); p >= 1; --p) {
        acc.push_back(p);
        rec_subpartitions(n - p, row + 1, outer, acc, fn);
        acc.pop_back();
    }
}

} // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0)
        throw std::invalid_argument("for_each_partition: negative n");
    std::vector<int> acc;
    rec_partitions(n, n, acc, fn);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> enumerate_subpartitions(int n, const Partition& outer) {
    if (n < 0)
        throw std::invalid_argument("enumerate_subpartitions: negative n");
    std::vector<Partition> out;
    if (n > outer.size())
        return out;
    std::vector<int> acc;
    rec_subpartitions(n, 1, outer, acc,
                      [&](const Partition& p) { out.push_back(p); });
    return out;
}

Int partition_count(int n) {
    if (n < 0)
        return 0;
    // Euler recurrence with pentagonal numbers
    static std::vector<Int> memo = {1};
    for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
        Int s = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m)
                break;
            Int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m)
                s += sign * memo[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                s += sign * memo[static_cast<std::size_t>(m - g2)];
        }
        memo.push_back(s);
    }
    return memo[static_cast<std::size_t>(n)];
}

namespace {

/* Rows below `prev` in a plane partition: each is a nonempty partition that
 * fits under prev columnwise; budget is the exact number of boxes left. */
Int pp_extensions(int budget, const Partition& prev,
                  std::map<std::pair<int, std::vector<int>>, Int>& memo) {
    if (budget == 0)
        return 1;
    auto key = std::make_pair(budget, prev.parts());
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    Int total = 0;
    for (int s = 1; s <= budget; ++s)
        for (const auto& row : enumerate_subpartitions(s, prev))
            total += pp_extensions(budget - s, row, memo);
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Int plane_partition_count(int n) {
    if (n < 0)
        throw std::invalid_argument("plane_partition_count: negative n");
    if (n == 0)
        return 1;
    std::map<std::pair<int, std::vector<int>>, Int> memo;
    Int total = 0;
    for (int s = 1; s <= n; ++s)
        for (const auto& first_row : enumerate_partitions(s))
            total += pp_extensions(n - s, first_row, memo);
    return total;
}

} // namespace nestloc
