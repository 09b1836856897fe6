#include "spanlab/avgfree.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace spanlab {

namespace {

constexpr int kMaxBase = 120;
constexpr int64_t kGreedyLimit = 4096;

void validate_params(int64_t p, int ell) {
    if (ell < 2) throw std::invalid_argument("ell must be >= 2");
    if (p < ell) throw std::invalid_argument("p must be >= ell");
}

// Sums-by-term-count bitsets over a growing member set; supports the
// incremental "can x join without creating a solution" test shared by the
// greedy construction and the exhaustive maximizer.
struct SumTable {
    int ell;
    int64_t max_sum;
    size_t words;
    std::vector<std::vector<uint64_t>> sums;  // sums[t] has bit s iff s is a sum of exactly t members

    SumTable(int ell_, int64_t max_sum_) : ell(ell_), max_sum(max_sum_) {
        words = size_t(max_sum / 64 + 1);
        sums.assign(ell + 1, std::vector<uint64_t>(words, 0));
        sums[0][0] = 1;  // empty sum
    }
    bool test(int t, int64_t s) const {
        if (s < 0 || s > max_sum) return false;
        return (sums[t][size_t(s >> 6)] >> (s & 63)) & 1;
    }
    // Would adding x create a nontrivial solution with the current members?
    bool conflicts(int64_t x, const std::vector<int64_t>& members) const {
        // x as the average: ell*x = c*x + (sum of ell-c current members), c < ell.
        for (int c = 0; c < ell; c++) {
            int64_t rest = int64_t(ell) * x - int64_t(c) * x;
            if (test(ell - c, rest)) return true;
        }
        // x as a summand for an existing average x0 (>= 1 copies of x).
        for (int64_t x0 : members) {
            for (int c = 1; c <= ell; c++) {
                int64_t rest = int64_t(ell) * x0 - int64_t(c) * x;
                if (rest < 0) break;
                if (test(ell - c, rest)) return true;
            }
        }
        return false;
    }
    void add(int64_t x) {
        for (int t = 1; t <= ell; t++) {
            // Shift sums[t-1] (already including x) left by x and fold in; this
            // admits repeated copies of x, which is what multisets need.
            const auto& src = sums[t - 1];
            auto& dst = sums[t];
            size_t word_shift = size_t(x >> 6);
            int bit_shift = int(x & 63);
            for (size_t i = words; i-- > word_shift;) {
                uint64_t v = src[i - word_shift] << bit_shift;
                if (bit_shift && i > word_shift)
                    v |= src[i - word_shift - 1] >> (64 - bit_shift);
                dst[i] |= v;
            }
        }
    }
};

}  // namespace

AvgFreeCheck is_avgfree(const AvgFreeSet& s) {
    AvgFreeCheck out;
    if (s.members.empty()) return out;
    if (s.ell == 2) {
        std::unordered_set<int64_t> present(s.members.begin(), s.members.end());
        for (size_t i = 0; i < s.members.size(); i++) {
            for (size_t j = i + 1; j < s.members.size(); j++) {
                int64_t sum = s.members[i] + s.members[j];
                if (sum % 2) continue;
                if (present.count(sum / 2)) {
                    out.status = AvgFreeStatus::violation;
                    out.x0 = sum / 2;
                    out.terms = {s.members[i], s.members[j]};
                    return out;
                }
            }
        }
        return out;
    }

    int64_t max_member = s.members.back();
    int64_t max_sum = int64_t(s.ell) * max_member;
    int64_t cells = max_sum * int64_t(s.ell) * int64_t(s.members.size()) / 64;
    if (cells > kAvgFreeCheckBudget) {
        out.status = AvgFreeStatus::incomplete;
        return out;
    }

    // ways[t][s] = number of ordered t-tuples summing to s, saturated at 2.
    std::vector<std::vector<uint8_t>> ways(s.ell + 1,
                                           std::vector<uint8_t>(size_t(max_sum) + 1, 0));
    ways[0][0] = 1;
    for (int t = 1; t <= s.ell; t++) {
        for (int64_t sum = 0; sum <= max_sum; sum++) {
            int total = 0;
            for (int64_t m : s.members) {
                if (m > sum) break;
                total += ways[t - 1][size_t(sum - m)];
                if (total >= 2) break;
            }
            ways[t][size_t(sum)] = uint8_t(std::min(total, 2));
        }
    }
    for (int64_t x0 : s.members) {
        int64_t target = int64_t(s.ell) * x0;
        if (target > max_sum || ways[s.ell][size_t(target)] < 2) continue;
        // Two ordered tuples exist and the all-x0 tuple accounts for exactly
        // one, so a nontrivial witness exists; extract the lex-least one.
        out.status = AvgFreeStatus::violation;
        out.x0 = x0;
        std::vector<int64_t> chosen;
        std::function<bool(int, int64_t, bool)> dfs = [&](int t, int64_t rest,
                                                          bool all_x0) -> bool {
            if (t == 0) return rest == 0 && !all_x0;
            for (int64_t m : s.members) {
                if (m > rest) break;
                if (!ways[t - 1][size_t(rest - m)]) continue;
                if (t == 1 && all_x0 && m == x0) continue;  // skips only the trivial tuple
                chosen.push_back(m);
                if (dfs(t - 1, rest - m, all_x0 && m == x0)) return true;
                chosen.pop_back();
            }
            return false;
        };
        dfs(s.ell, target, true);
        out.terms = chosen;
        return out;
    }
    return out;
}

namespace {

struct DigitBest {
    int64_t size = 0;
    std::vector<int64_t> members;
};

// Enumerate digit vectors (base b, digits < d, value <= limit) and bucket by
// squared digit norm; fills per-norm buckets for the current (b, d, m).
void enumerate_digits(int64_t b, int64_t d, int m, int64_t limit,
                      std::vector<std::vector<int64_t>>& by_norm, int64_t& count) {
    std::vector<int64_t> digit(m, 0);
    std::function<void(int, int64_t, int64_t)> rec = [&](int pos, int64_t value,
                                                         int64_t norm) {
        if (pos == m) {
            if (value >= 1) {
                by_norm[size_t(norm)].push_back(value);
                count++;
            }
            return;
        }
        int64_t place = 1;
        for (int i = 0; i < pos; i++) place *= b;
        for (int64_t a = 0; a < d; a++) {
            int64_t nv = value + a * place;
            if (nv > limit) break;
            rec(pos + 1, nv, norm + a * a);
        }
    };
    rec(0, 0, 0);
}

void digit_sweep(int64_t n_limit, int ell, DigitBest& best, int64_t& bound) {
    for (int64_t b = 3; b <= kMaxBase; b++) {
        int64_t d = (b - 1) / ell + 1;  // largest d with ell*(d-1) < b (no carries)
        if (d < 2) continue;
        int64_t span = 1;
        for (int m = 1; m <= 40; m++) {
            if (m > 1 && span > n_limit) break;  // no m-digit value fits
            int64_t max_norm = int64_t(m) * (d - 1) * (d - 1);
            std::vector<std::vector<int64_t>> by_norm(size_t(max_norm) + 1);
            int64_t count = 0;
            enumerate_digits(b, d, m, n_limit, by_norm, count);
            if (count > 0) {
                int64_t pigeonhole = (count + max_norm) / (max_norm + 1);
                bound = std::max(bound, pigeonhole);
            }
            for (auto& bucket : by_norm) {
                if (int64_t(bucket.size()) > best.size) {
                    std::sort(bucket.begin(), bucket.end());
                    best.size = int64_t(bucket.size());
                    best.members = bucket;
                }
            }
            if (span > n_limit / b + 1) break;
            span *= b;
        }
    }
}

std::vector<int64_t> greedy_sequence(int64_t n_limit, int ell) {
    SumTable table(ell, int64_t(ell) * n_limit);
    std::vector<int64_t> members;
    for (int64_t x = 1; x <= n_limit; x++) {
        if (!table.conflicts(x, members)) {
            members.push_back(x);
            table.add(x);
        }
    }
    return members;
}

}  // namespace

int64_t behrend_digit_bound(int64_t p, int ell) {
    validate_params(p, ell);
    DigitBest best;
    int64_t bound = 0;
    digit_sweep(p / ell, ell, best, bound);
    return std::max<int64_t>(bound, 1);
}

AvgFreeSet behrend_set(int64_t p, int ell) {
    validate_params(p, ell);
    int64_t n_limit = p / ell;
    DigitBest best;
    int64_t bound = 0;
    digit_sweep(n_limit, ell, best, bound);

    std::vector<int64_t> pick = best.members;
    if (n_limit <= kGreedyLimit) {
        std::vector<int64_t> greedy = greedy_sequence(n_limit, ell);
        if (int64_t(greedy.size()) > int64_t(pick.size()) ||
            (greedy.size() == pick.size() && greedy < pick))
            pick = greedy;
    }
    if (pick.empty()) pick = {1};
    return AvgFreeSet{p, ell, pick};
}

AvgFreeSet brute_force_max_avgfree(int64_t p, int ell) {
    validate_params(p, ell);
    int64_t n_limit = p / ell;
    if (n_limit > 24) throw std::invalid_argument("brute force range limited to floor(p/ell) <= 24");

    std::vector<int64_t> best;
    std::vector<int64_t> current;
    // Depth-first over candidates in increasing order, take-branch first so a
    // large set is found early and the size prune bites.
    std::function<void(int64_t, SumTable&)> rec = [&](int64_t x, SumTable& table) {
        if (int64_t(current.size()) + (n_limit - x + 1) <= int64_t(best.size())) return;
        if (x > n_limit) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if (!table.conflicts(x, current)) {
            SumTable next = table;
            next.add(x);
            current.push_back(x);
            rec(x + 1, next);
            current.pop_back();
        }
        rec(x + 1, table);
    };
    SumTable root(ell, int64_t(ell) * std::max<int64_t>(n_limit, 1));
    rec(1, root);
    if (best.empty()) best = {1};
    return AvgFreeSet{p, ell, best};
}

AvgFreeSet labels_for(int64_t p, int ell) {
    validate_params(p, ell);
    if (p / ell <= 24) return brute_force_max_avgfree(p, ell);
    return behrend_set(p, ell);
}

}  // namespace spanlab
