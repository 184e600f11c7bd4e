#include <algorithm>
#include <bit>
#include <map>

#include "pointcode/search.hpp"

namespace pointcode {

BitMatrix EmbeddingWitness::to_incidence() const {
    BitMatrix out(static_cast<uint32_t>(row_words.size()),
                  static_cast<uint32_t>(column_order.size()));
    for (uint32_t i = 0; i < row_words.size(); ++i)
        for (uint32_t t = 0; t < column_order.size(); ++t)
            if (row_words[i].bit(column_order[t])) out.set(i, t);
    return out;
}

bool prefilter(const LinearCode& c, const DesignSearchSpec& spec) {
    if (c.length() != spec.code_length()) return false;
    if (c.min_distance() < 4) return false;
    if (c.has_zero_coordinate()) return false;
    if (c.weight_distribution().at(spec.row_weight()) < spec.params.v) return false;
    return true;
}

namespace {

// Backtracking over candidate rows in increasing lexicographic order, on
// packed words (the searches live at n <= 33). A shrinking list of
// still-compatible candidates is threaded through the recursion; prunes are
// the exact pairwise intersection, a saturated-columns mask, the per-column
// deficit against the remaining row count, and a per-column count of live
// candidates that can still fill it.
class RowSearch {
public:
    RowSearch(const DesignSearchSpec& spec, const std::vector<BitVector>& candidates,
              std::optional<uint32_t> ones_coord, uint32_t n, const SearchLimits& limits,
              uint64_t& nodes, std::map<std::string, FoundDesign>& out)
        : spec_(spec),
          ones_(ones_coord),
          n_(n),
          limits_(limits),
          nodes_(nodes),
          out_(out),
          colsum_(n, 0) {
        words_.reserve(candidates.size());
        for (const BitVector& c : candidates) words_.push_back(c.word(0));
        cap_.assign(n_, spec_.params.block_size);
        if (ones_) cap_[*ones_] = spec_.params.v;
    }

    void run() {
        std::vector<uint32_t> live(words_.size());
        for (uint32_t i = 0; i < words_.size(); ++i) live[i] = i;
        extend(live);
    }

private:
    void extend(const std::vector<uint32_t>& live) {
        if (chosen_.size() == spec_.params.v) {
            emit();
            return;
        }
        const uint32_t remaining = spec_.params.v - static_cast<uint32_t>(chosen_.size());
        if (live.size() < remaining) return;
        if (!columns_coverable(live, remaining)) return;

        const uint32_t pw = spec_.pair_weight();
        std::vector<uint32_t> next;
        next.reserve(live.size());
        for (size_t i = 0; i + remaining <= live.size(); ++i) {
            if (limits_.max_nodes && ++nodes_ > limits_.max_nodes)
                throw BudgetError("find_designs: node budget exceeded");
            const uint64_t row = words_[live[i]];
            push(row);
            if (deficits_ok(remaining - 1)) {
                next.clear();
                for (size_t t = i + 1; t < live.size(); ++t) {
                    uint64_t cand = words_[live[t]];
                    if (std::popcount(cand & row) == static_cast<int>(pw) &&
                        (cand & saturated_) == 0)
                        next.push_back(live[t]);
                }
                extend(next);
            }
            pop(row);
        }
    }

    bool columns_coverable(const std::vector<uint32_t>& live, uint32_t remaining) const {
        uint32_t cover[64] = {0};
        for (uint32_t idx : live) {
            uint64_t w = words_[idx];
            while (w) {
                cover[std::countr_zero(w)]++;
                w &= w - 1;
            }
        }
        for (uint32_t j = 0; j < n_; ++j) {
            uint32_t deficit = static_cast<uint32_t>(cap_[j] - colsum_[j]);
            if (deficit > remaining || cover[j] < deficit) return false;
        }
        return true;
    }

    bool deficits_ok(uint32_t remaining) const {
        for (uint32_t j = 0; j < n_; ++j)
            if (static_cast<uint32_t>(cap_[j] - colsum_[j]) > remaining) return false;
        return true;
    }

    void push(uint64_t row) {
        chosen_.push_back(row);
        uint64_t w = row;
        while (w) {
            uint32_t j = static_cast<uint32_t>(std::countr_zero(w));
            if (++colsum_[j] == cap_[j]) saturated_ |= uint64_t(1) << j;
            w &= w - 1;
        }
    }

    void pop(uint64_t row) {
        chosen_.pop_back();
        uint64_t w = row;
        while (w) {
            uint32_t j = static_cast<uint32_t>(std::countr_zero(w));
            if (colsum_[j]-- == cap_[j]) saturated_ &= ~(uint64_t(1) << j);
            w &= w - 1;
        }
    }

    void emit() {
        EmbeddingWitness w;
        for (uint64_t row : chosen_) {
            BitVector v(n_);
            uint64_t x = row;
            while (x) {
                v.set(static_cast<uint32_t>(std::countr_zero(x)));
                x &= x - 1;
            }
            w.row_words.push_back(std::move(v));
        }
        w.ones_coordinate = ones_;
        for (uint32_t j = 0; j < n_; ++j)
            if (!ones_ || j != *ones_) w.column_order.push_back(j);
        Design d = Design::validate(w.to_incidence(), spec_.params.v, spec_.params.block_size,
                                    spec_.params.lambda);
        CanonicalForm fp = design_canonical(d);
        std::string key = fp.hex();
        if (!out_.count(key))
            out_.emplace(key, FoundDesign{std::move(d), std::move(w), std::move(fp)});
    }

    const DesignSearchSpec& spec_;
    std::vector<uint64_t> words_;
    std::optional<uint32_t> ones_;
    uint32_t n_;
    const SearchLimits& limits_;
    uint64_t& nodes_;
    std::map<std::string, FoundDesign>& out_;
    std::vector<uint64_t> chosen_;
    std::vector<uint8_t> colsum_;
    std::vector<uint8_t> cap_;
    uint64_t saturated_ = 0;
};

}  // namespace

std::vector<FoundDesign> find_designs(const LinearCode& c, const DesignSearchSpec& spec,
                                      const SearchLimits& limits) {
    if (!prefilter(c, spec)) return {};
    if (c.length() > 64) throw GuardError("find_designs: supported lengths are 1..64");
    const uint32_t n = c.length();
    const uint32_t rw = spec.row_weight();

    std::vector<BitVector> rows;
    for_each_codeword(c.generator(), [&](const BitVector& w) {
        if (w.weight() == rw) rows.push_back(w);
    });
    std::sort(rows.begin(), rows.end());

    uint64_t nodes = 0;
    std::map<std::string, FoundDesign> found;
    if (spec.augmented) {
        for (uint32_t j = 0; j < n; ++j) {
            std::vector<BitVector> cands;
            for (const BitVector& w : rows)
                if (w.bit(j)) cands.push_back(w);
            if (cands.size() < spec.params.v) continue;
            RowSearch(spec, cands, j, n, limits, nodes, found).run();
        }
    } else {
        RowSearch(spec, rows, std::nullopt, n, limits, nodes, found).run();
    }

    std::vector<FoundDesign> out;
    out.reserve(found.size());
    for (auto& [key, fd] : found) {
        (void)key;
        out.push_back(std::move(fd));
    }
    return out;
}

}  // namespace pointcode
