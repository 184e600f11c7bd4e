#include <algorithm>

#include "pointcode/search.hpp"

namespace pointcode {

namespace {

// Per-coordinate invariant: how many codewords of each weight pass through
// the coordinate. A coordinate of sub can only map onto a coordinate of
// super whose profile dominates it.
std::vector<std::vector<uint32_t>> coordinate_profiles(const LinearCode& c) {
    std::vector<std::vector<uint32_t>> prof(c.length(),
                                            std::vector<uint32_t>(c.length() + 1, 0));
    for_each_codeword(c.generator(), [&](const BitVector& w) {
        uint32_t wt = w.weight();
        if (!wt) return;
        for (uint32_t j = 0; j < c.length(); ++j)
            if (w.bit(j)) ++prof[j][wt];
    });
    return prof;
}

class EmbedSearch {
public:
    EmbedSearch(const LinearCode& sub, const LinearCode& super, const SearchLimits& limits)
        : a_(sub), b_(super), n_(sub.length()), limits_(limits) {}

    bool run() {
        auto pa = coordinate_profiles(a_);
        auto pb = coordinate_profiles(b_);

        cand_.assign(n_, std::vector<char>(n_, 0));
        for (uint32_t i = 0; i < n_; ++i) {
            bool some = false;
            for (uint32_t j = 0; j < n_; ++j) {
                bool ok = true;
                for (uint32_t w = 1; w <= n_ && ok; ++w)
                    if (pa[i][w] > pb[j][w]) ok = false;
                cand_[i][j] = ok;
                some |= ok;
            }
            if (!some && a_.zero_coordinate_mask().bit(i) == false) return false;
        }

        // Low-weight words of sub fail earliest; schedule membership checks
        // as soon as a word's support is fully assigned. Generator rows are
        // always included so a full assignment certifies the embedding.
        std::vector<BitVector> words;
        for_each_codeword(a_.generator(), [&](const BitVector& w) {
            if (w.any()) words.push_back(w);
        });
        std::sort(words.begin(), words.end(), [](const BitVector& x, const BitVector& y) {
            uint32_t wx = x.weight(), wy = y.weight();
            if (wx != wy) return wx < wy;
            return x < y;
        });
        const size_t word_cap = 256;
        if (words.size() > word_cap) {
            std::vector<BitVector> trimmed(words.begin(), words.begin() + word_cap);
            for (uint32_t i = 0; i < a_.generator().rows(); ++i) {
                const BitVector& g = a_.generator().row(i);
                if (std::find(trimmed.begin(), trimmed.end(), g) == trimmed.end())
                    trimmed.push_back(g);
            }
            words = std::move(trimmed);
        }

        // Coordinate order: first-appearance order over the sorted words, so
        // small supports complete early; untouched coordinates go last.
        std::vector<char> seen(n_, 0);
        for (const BitVector& w : words)
            for (uint32_t j = 0; j < n_; ++j)
                if (w.bit(j) && !seen[j]) {
                    seen[j] = 1;
                    order_.push_back(j);
                }
        depth_limit_ = static_cast<uint32_t>(order_.size());

        pos_of_.assign(n_, UINT32_MAX);
        for (uint32_t p = 0; p < order_.size(); ++p) pos_of_[order_[p]] = p;
        checks_at_.assign(order_.size() + 1, {});
        for (const BitVector& w : words) {
            uint32_t last = 0;
            for (uint32_t j = 0; j < n_; ++j)
                if (w.bit(j)) last = std::max(last, pos_of_[j] + 1);
            checks_at_[last].push_back(w);
        }

        image_.assign(n_, UINT32_MAX);
        used_.assign(n_, 0);
        return extend(0);
    }

private:
    bool extend(uint32_t depth) {
        if (depth == depth_limit_) return true;  // only zero coordinates of sub remain
        uint32_t i = order_[depth];
        for (uint32_t j = 0; j < n_; ++j) {
            if (used_[j] || !cand_[i][j]) continue;
            if (limits_.max_nodes && ++nodes_ > limits_.max_nodes)
                throw BudgetError("is_embedded: node budget exceeded");
            image_[i] = j;
            used_[j] = 1;
            bool ok = true;
            for (const BitVector& w : checks_at_[depth + 1]) {
                BitVector mapped(n_);
                for (uint32_t t = 0; t < n_; ++t)
                    if (w.bit(t)) mapped.set(image_[t]);
                if (!b_.contains(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(depth + 1)) return true;
            used_[j] = 0;
            image_[i] = UINT32_MAX;
        }
        return false;
    }

    const LinearCode& a_;
    const LinearCode& b_;
    uint32_t n_;
    SearchLimits limits_;
    uint64_t nodes_ = 0;
    std::vector<std::vector<char>> cand_;
    std::vector<uint32_t> order_, pos_of_, image_;
    std::vector<char> used_;
    std::vector<std::vector<BitVector>> checks_at_;
    uint32_t depth_limit_ = 0;
};

}  // namespace

bool is_embedded(const LinearCode& sub, const LinearCode& super, const SearchLimits& limits) {
    if (sub.length() != super.length())
        throw DimensionError("is_embedded: codes must share their length");
    if (sub.dimension() > super.dimension()) return false;
    const WeightDistribution& wa = sub.weight_distribution();
    const WeightDistribution& wb = super.weight_distribution();
    for (uint32_t w = 0; w <= sub.length(); ++w)
        if (wa.at(w) > wb.at(w)) return false;
    if (sub.dimension() == 0) return true;
    return EmbedSearch(sub, super, limits).run();
}

}  // namespace pointcode
