#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "errors.hpp"

namespace glyndon {

/// An eventually periodic sequence of total orders on an alphabet: the order
/// used at comparison position n (1-based) is preperiod[n-1] while n is inside
/// the preperiod, after which the period repeats forever. Each permutation
/// lists the alphabet's symbols from smallest to largest for that position.
class OrderSchedule {
public:
    using Permutation = std::vector<symbol_id>;

    static OrderSchedule make(AlphabetPtr alphabet,
                              std::vector<Permutation> preperiod,
                              std::vector<Permutation> period) {
        return OrderSchedule(std::move(alphabet), std::move(preperiod), std::move(period));
    }

    /// The alphabet's listing order at every position.
    static OrderSchedule standard(AlphabetPtr alphabet) {
        Permutation id = identity(alphabet->size());
        return make(std::move(alphabet), {}, {id});
    }

    /// The reversed listing order at every position.
    static OrderSchedule opposite(AlphabetPtr alphabet) {
        Permutation rev = identity(alphabet->size());
        std::reverse(rev.begin(), rev.end());
        return make(std::move(alphabet), {}, {rev});
    }

    /// Listing order at odd positions, reversed order at even positions.
    static OrderSchedule alternating(AlphabetPtr alphabet) {
        Permutation id = identity(alphabet->size());
        Permutation rev = id;
        std::reverse(rev.begin(), rev.end());
        return make(std::move(alphabet), {}, {id, rev});
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t preperiod_length() const { return pre_rank_.size(); }
    std::size_t period_length() const { return per_rank_.size(); }

    const std::vector<Permutation>& preperiod() const { return preperiod_; }
    const std::vector<Permutation>& period() const { return period_; }

    /// The permutation in effect at position n >= 1.
    const Permutation& permutation_at(std::size_t n) const {
        if (n == 0) throw domain_error("comparison positions are 1-based");
        std::size_t i = slot(n);
        return i < preperiod_.size() ? preperiod_[i] : period_[i - preperiod_.size()];
    }

    /// Rank of symbol a at position n: 0 means smallest.
    std::size_t rank_at(std::size_t n, symbol_id a) const {
        if (n == 0) throw domain_error("comparison positions are 1-based");
        std::size_t i = slot(n);
        const auto& ranks = i < pre_rank_.size() ? pre_rank_[i] : per_rank_[i - pre_rank_.size()];
        return ranks[a];
    }

    /// Three-way comparison of symbols a, b at position n: negative when
    /// a is smaller at that position, 0 when equal, positive otherwise.
    int compare_at(std::size_t n, symbol_id a, symbol_id b) const {
        if (a == b) return 0;
        std::size_t ra = rank_at(n, a), rb = rank_at(n, b);
        return ra < rb ? -1 : 1;
    }

private:
    OrderSchedule(AlphabetPtr alphabet,
                  std::vector<Permutation> preperiod,
                  std::vector<Permutation> period)
        : alphabet_(std::move(alphabet)),
          preperiod_(std::move(preperiod)),
          period_(std::move(period)) {
        if (!alphabet_) throw domain_error("order schedule requires an alphabet");
        if (period_.empty()) throw domain_error("order schedule period must be nonempty");
        pre_rank_.reserve(preperiod_.size());
        per_rank_.reserve(period_.size());
        for (const auto& p : preperiod_) pre_rank_.push_back(rank_table(p));
        for (const auto& p : period_) per_rank_.push_back(rank_table(p));
    }

    static Permutation identity(std::size_t k) {
        Permutation p(k);
        std::iota(p.begin(), p.end(), symbol_id{0});
        return p;
    }

    std::vector<std::size_t> rank_table(const Permutation& perm) const {
        const std::size_t k = alphabet_->size();
        if (perm.size() != k)
            throw domain_error("order permutation must cover the whole alphabet");
        std::vector<std::size_t> rank(k, k);
        for (std::size_t r = 0; r < k; ++r) {
            symbol_id s = perm[r];
            if (s >= k || rank[s] != k)
                throw domain_error("order permutation must be a bijection on the alphabet");
            rank[s] = r;
        }
        return rank;
    }

    std::size_t slot(std::size_t n) const {
        std::size_t idx = n - 1;
        if (idx < pre_rank_.size()) return idx;
        return pre_rank_.size() + (idx - pre_rank_.size()) % per_rank_.size();
    }

    AlphabetPtr alphabet_;
    std::vector<Permutation> preperiod_;
    std::vector<Permutation> period_;
    std::vector<std::vector<std::size_t>> pre_rank_;
    std::vector<std::vector<std::size_t>> per_rank_;
};

}  // namespace glyndon
