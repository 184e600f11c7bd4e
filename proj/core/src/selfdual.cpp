#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "pointcode/search.hpp"

// Classification of binary self-dual codes length by length. Fix the last
// two coordinates of a self-dual code C of length n and look at the
// subcode K = {c : c_{n-2} = c_{n-1}}. Either C = B + {00,11} on that pair
// (iff the weight-2 word on the pair is in C), or C is determined by the
// reduction B of K and one odd-weight word w of length n-2:
//   C_w(B) = span{ (b, w.b, w.b) : b basis of B } + (w, 1, 0),
// and C_w(B) up to equivalence depends only on the coset w + B. So the
// children of every length-(n-2) class representative, one per
// Aut(B)-orbit of odd cosets plus the decomposable child, cover all
// length-n classes; canonical forms deduplicate them.

namespace pointcode {

namespace {

struct SdRep {
    BitMatrix gen;  // rref
    std::string digest;
    std::vector<std::vector<uint32_t>> coord_auts;
};

struct MiniUF {
    std::vector<uint32_t> p;
    explicit MiniUF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p[b] = a;
    }
};

BitMatrix decomposable_child(const BitMatrix& b) {
    const uint32_t m = b.cols();
    BitMatrix rows(0, m + 2);
    for (uint32_t i = 0; i < b.rows(); ++i) rows.append_row(b.row(i).zero_extended(2));
    BitVector tail(m + 2);
    tail.set(m);
    tail.set(m + 1);
    rows.append_row(std::move(tail));
    return rows;
}

BitMatrix coset_child(const BitMatrix& b, const BitVector& w) {
    const uint32_t m = b.cols();
    BitMatrix rows(0, m + 2);
    for (uint32_t i = 0; i < b.rows(); ++i) {
        BitVector r = b.row(i).zero_extended(2);
        if (inner_product(b.row(i), w)) {
            r.set(m);
            r.set(m + 1);
        }
        rows.append_row(std::move(r));
    }
    BitVector z = w.zero_extended(2);
    z.set(m);
    rows.append_row(std::move(z));
    return rows;
}

template <class Fn>
void parallel_for(size_t count, uint32_t threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (uint32_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> g(err_mu);
                    if (!err) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

// Internal dedup of the ladder runs on the restricted spanning-weight
// graphs above dimension 8: they are an equivalence-complete invariant with
// the same coordinate automorphism action, at a fraction of the vertex
// count. Callers fingerprint the returned representatives however they
// like.
namespace {
inline CanonResult canonize_for_dedup(const LinearCode& c) {
    return canonize(code_to_graph(c, c.dimension() <= 8));
}
}  // namespace

std::vector<LinearCode> cross_section_classes(const std::vector<LinearCode>& selfdual) {
    std::map<std::string, LinearCode> classes;
    for (const LinearCode& d : selfdual) {
        CanonResult cr = canonize_for_dedup(d);
        MiniUF uf(d.length());
        for (const auto& perm : cr.coordinate_generators)
            for (uint32_t j = 0; j < d.length(); ++j)
                uf.unite(j, perm[j]);
        for (uint32_t j = 0; j < d.length(); ++j) {
            if (uf.find(j) != j) continue;  // one coordinate per Aut-orbit
            LinearCode cs = cross_section(d, j);
            std::string fp = canonize_for_dedup(cs).form.hex();
            classes.try_emplace(std::move(fp), std::move(cs));
        }
    }
    std::vector<LinearCode> out;
    out.reserve(classes.size());
    for (auto& [fp, c] : classes) {
        (void)fp;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<LinearCode> enumerate_selfdual(uint32_t n, const SdEnumOptions& opt) {
    if (n < 2 || n % 2 != 0)
        throw DimensionError("enumerate_selfdual: length must be even and positive");
    if (n > 64) throw GuardError("enumerate_selfdual: supported lengths are 2..64");

    std::vector<SdRep> level;
    {
        BitMatrix g(0, 2);
        g.append_row(BitVector::from_string("11"));
        LinearCode c = LinearCode::from_rows(g);
        CanonResult cr = canonize_for_dedup(c);
        level.push_back({c.generator(), cr.form.hex(), std::move(cr.coordinate_generators)});
    }

    for (uint32_t m = 2; m < n; m += 2) {
        // Build every candidate child of every parent at this level.
        std::vector<BitMatrix> cands;
        for (SdRep& parent : level) {
            const uint32_t half = m / 2;
            RrefResult pr = rref(parent.gen);

            cands.push_back(decomposable_child(parent.gen));

            const size_t nsyn = size_t(1) << half;
            auto word_of = [&](size_t syn) {
                BitVector w(m);
                for (uint32_t i = 0; i < half; ++i)
                    if ((syn >> i) & 1) w.set(pr.pivots[i]);
                return w;
            };
            MiniUF uf(nsyn);
            for (const auto& perm : parent.coord_auts) {
                for (size_t syn = 1; syn < nsyn; ++syn) {
                    BitVector img = word_of(syn).permuted(perm);
                    size_t syn2 = 0;
                    for (uint32_t i = 0; i < half; ++i)
                        if (inner_product(parent.gen.row(i), img)) syn2 |= size_t(1) << i;
                    uf.unite(static_cast<uint32_t>(syn), static_cast<uint32_t>(syn2));
                }
            }
            for (size_t syn = 1; syn < nsyn; ++syn) {
                if (std::popcount(static_cast<uint64_t>(syn)) % 2 == 0) continue;  // odd cosets only
                if (uf.find(static_cast<uint32_t>(syn)) != syn) continue;
                cands.push_back(coset_child(parent.gen, word_of(syn)));
            }
        }

        // Canonize in parallel, deduplicate in deterministic order.
        std::vector<SdRep> canonized(cands.size());
        parallel_for(cands.size(), opt.threads, [&](size_t i) {
            LinearCode c = LinearCode::from_rows(cands[i]);
            if (c.dimension() != m / 2 + 1 || !c.is_self_orthogonal())
                throw Error("enumerate_selfdual: construction produced a non-self-dual code");
            CanonResult cr = canonize_for_dedup(c);
            canonized[i] = {c.generator(), cr.form.hex(), std::move(cr.coordinate_generators)};
        });

        std::vector<SdRep> next;
        std::map<std::string, size_t> seen;
        for (auto& rep : canonized) {
            if (seen.emplace(rep.digest, next.size()).second) next.push_back(std::move(rep));
        }
        level = std::move(next);
    }

    std::vector<std::pair<std::string, LinearCode>> out;
    for (const SdRep& rep : level)
        out.emplace_back(rep.digest, LinearCode::from_rows(rep.gen));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LinearCode> codes;
    codes.reserve(out.size());
    for (auto& [d, c] : out) {
        (void)d;
        codes.push_back(std::move(c));
    }
    return codes;
}

}  // namespace pointcode
