#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "pointcode/search.hpp"

// Isomorph-free exhaustive generation of self-orthogonal (n,k) codes by
// canonical augmentation over the dimension. A level-t class representative
// C is extended by one generator w taken from E = C-perp intersected with
// the even-weight space; children are built from one w per Aut(C)-orbit of
// the cosets w+C, and a child C' is kept only when the parent C is, up to
// Aut(C'), the canonical codimension-1 subcode of C'. The canonical subcode
// is the one minimizing (weight distribution, canonical form of the marked
// code/subcode pair), both invariant under coordinate permutation.

namespace pointcode {

namespace {

struct Rep {
    BitMatrix gen;  // rref
    std::string digest;
    bool auts_ready = false;
    std::vector<std::vector<uint32_t>> coord_auts;
};

uint64_t to_word(const BitVector& v) {
    return v.word_count() ? v.word(0) : 0;
}

BitVector from_word(uint64_t w, uint32_t n) {
    BitVector v(n);
    while (w) {
        int t = std::countr_zero(w);
        v.set(static_cast<uint32_t>(t));
        w &= w - 1;
    }
    return v;
}

// rref rows of a code kept as packed words, with pivots, for fast reduction.
struct WordBasis {
    std::vector<uint64_t> rows;
    std::vector<uint32_t> pivots;

    static WordBasis from(const BitMatrix& rref_gen, const std::vector<uint32_t>& pivots) {
        WordBasis b;
        for (uint32_t i = 0; i < rref_gen.rows(); ++i) b.rows.push_back(to_word(rref_gen.row(i)));
        b.pivots = pivots;
        return b;
    }

    uint64_t reduce(uint64_t w) const {
        for (size_t i = 0; i < rows.size() && w; ++i)
            if ((w >> pivots[i]) & 1) w ^= rows[i];
        return w;
    }

    // Reduce and collect the combination mask (bit i set iff row i used).
    uint64_t reduce_tracking(uint64_t w, uint32_t& mask) const {
        mask = 0;
        for (size_t i = 0; i < rows.size() && w; ++i)
            if ((w >> pivots[i]) & 1) {
                w ^= rows[i];
                mask |= uint32_t(1) << i;
            }
        return w;
    }
};

uint64_t permute_word(uint64_t w, const std::vector<uint32_t>& perm) {
    uint64_t out = 0;
    while (w) {
        int t = std::countr_zero(w);
        out |= uint64_t(1) << perm[t];
        w &= w - 1;
    }
    return out;
}

// In-place Walsh-Hadamard transform.
void wht(std::vector<int32_t>& a) {
    size_t n = a.size();
    for (size_t len = 1; len < n; len <<= 1)
        for (size_t i = 0; i < n; i += len << 1)
            for (size_t j = i; j < i + len; ++j) {
                int32_t x = a[j], y = a[j + len];
                a[j] = x + y;
                a[j + len] = x - y;
            }
}

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

// Invert a kk x kk bit matrix given as row masks.
std::vector<uint32_t> invert_bitmatrix(std::vector<uint32_t> m, uint32_t kk) {
    std::vector<uint32_t> inv(kk);
    for (uint32_t i = 0; i < kk; ++i) inv[i] = uint32_t(1) << i;
    for (uint32_t col = 0; col < kk; ++col) {
        uint32_t piv = col;
        while (piv < kk && !((m[piv] >> col) & 1)) ++piv;
        if (piv == kk) throw Error("so_enum: singular automorphism matrix");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        for (uint32_t r = 0; r < kk; ++r)
            if (r != col && ((m[r] >> col) & 1)) {
                m[r] ^= m[col];
                inv[r] ^= inv[col];
            }
    }
    return inv;
}

class SoEnumerator {
public:
    SoEnumerator(uint32_t n, uint32_t k, const SoEnumOptions& opt)
        : n_(n), k_(k), opt_(opt) {
        if (n == 0 || n > 64)
            throw GuardError("enumerate_so_codes: supported lengths are 1..64");
        if (k > n) throw DimensionError("enumerate_so_codes: k > n");
        levels_.resize(k_ + 1);
        progress_.assign(k_ + 1, 0);
        Rep zero;
        zero.gen = BitMatrix(0, n_);
        zero.digest = code_canonical(LinearCode::from_rows(zero.gen)).hex();
        levels_[0].push_back(std::move(zero));
        if (!opt_.checkpoint_path.empty()) load_checkpoint();
    }

    std::vector<std::vector<LinearCode>> run() {
        std::ofstream ck;
        if (!opt_.checkpoint_path.empty()) {
            // Rewrite from the loaded state: trailing lines of an
            // interrupted parent are dropped rather than appended after.
            ck.open(opt_.checkpoint_path, std::ios::trunc);
            if (!ck) throw Error("cannot open checkpoint file " + opt_.checkpoint_path);
            ck << "# pointcode enumerate-codes checkpoint v1\n"
               << "C " << n_ << ' ' << k_ << ' ' << opt_.min_distance << ' '
               << (opt_.forbid_zero_coordinate ? 1 : 0) << "\n";
            for (uint32_t t = 1; t <= k_; ++t)
                for (const Rep& r : levels_[t]) {
                    ck << "L " << t << ' ' << r.digest << ' ';
                    auto rows = r.gen.to_strings();
                    for (size_t i = 0; i < rows.size(); ++i) ck << (i ? ";" : "") << rows[i];
                    ck << "\n";
                }
            for (uint32_t t = 0; t < k_; ++t)
                if (progress_[t]) ck << "P " << t << ' ' << progress_[t] << "\n";
            ck.flush();
        }

        for (uint32_t t = 0; t < k_; ++t) {
            std::set<std::string> seen;
            for (const Rep& r : levels_[t + 1]) seen.insert(r.digest);
            while (progress_[t] < levels_[t].size()) {
                size_t batch = std::max<size_t>(1, opt_.threads);
                size_t first = progress_[t];
                size_t last = std::min(levels_[t].size(), first + batch);
                std::vector<std::vector<Rep>> child_lists(last - first);

                if (opt_.threads <= 1 || last - first == 1) {
                    for (size_t p = first; p < last; ++p)
                        child_lists[p - first] = expand_parent(t, levels_[t][p]);
                } else {
                    std::vector<std::thread> pool;
                    std::atomic<size_t> next{first};
                    std::mutex err_mu;
                    std::exception_ptr err;
                    for (uint32_t w = 0; w < opt_.threads; ++w)
                        pool.emplace_back([&] {
                            for (;;) {
                                size_t p = next.fetch_add(1);
                                if (p >= last) return;
                                try {
                                    child_lists[p - first] = expand_parent(t, levels_[t][p]);
                                } catch (...) {
                                    std::lock_guard<std::mutex> g(err_mu);
                                    if (!err) err = std::current_exception();
                                    return;
                                }
                            }
                        });
                    for (auto& th : pool) th.join();
                    if (err) {
                        flush_budget_abort(ck);
                        std::rethrow_exception(err);
                    }
                }

                for (size_t p = first; p < last; ++p) {
                    for (Rep& child : child_lists[p - first]) {
                        if (!seen.insert(child.digest).second)
                            throw Error("so_enum: duplicate class generated (internal error)");
                        if (ck.is_open()) {
                            ck << "L " << (t + 1) << ' ' << child.digest << ' ';
                            auto rows = child.gen.to_strings();
                            for (size_t i = 0; i < rows.size(); ++i)
                                ck << (i ? ";" : "") << rows[i];
                            ck << "\n";
                        }
                        levels_[t + 1].push_back(std::move(child));
                    }
                    ++progress_[t];
                    if (ck.is_open()) ck << "P " << t << ' ' << progress_[t] << "\n" << std::flush;
                }
            }
        }

        std::vector<std::vector<LinearCode>> out(k_ + 1);
        for (uint32_t t = 0; t <= k_; ++t) {
            std::vector<std::pair<std::string, LinearCode>> lvl;
            for (const Rep& r : levels_[t]) {
                LinearCode c = LinearCode::from_rows(r.gen);
                if (t == k_) {
                    if (opt_.min_distance && c.min_distance() < opt_.min_distance) continue;
                    if (opt_.forbid_zero_coordinate && c.has_zero_coordinate()) continue;
                }
                lvl.emplace_back(r.digest, std::move(c));
            }
            std::sort(lvl.begin(), lvl.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [d, c] : lvl) {
                (void)d;
                out[t].push_back(std::move(c));
            }
        }
        return out;
    }

private:
    void bump_budget(std::ofstream* /*ck*/) {
        if (opt_.max_children && ++children_seen_ > opt_.max_children)
            throw BudgetError("enumerate_so_codes: child budget " +
                                  std::to_string(opt_.max_children) + " exceeded",
                              opt_.checkpoint_path);
    }

    void flush_budget_abort(std::ofstream& ck) {
        if (ck.is_open()) ck.flush();
    }

    void ensure_auts(Rep& rep) {
        if (rep.auts_ready) return;
        CanonResult cr = canonize(code_to_graph(LinearCode::from_rows(rep.gen)));
        rep.coord_auts = std::move(cr.coordinate_generators);
        rep.auts_ready = true;
    }

    std::vector<Rep> expand_parent(uint32_t t, Rep& parent) {
        if (t == 0) return expand_root();
        ensure_auts(parent);

        RrefResult pr = rref(parent.gen);
        WordBasis pbasis = WordBasis::from(pr.matrix, pr.pivots);

        // E = C-perp intersected with the even-weight space.
        BitMatrix stack = parent.gen;
        stack.append_row(BitVector::ones(n_));
        BitMatrix e = dual(stack);

        // Quotient basis of E mod C.
        BitMatrix qraw(0, n_);
        for (uint32_t i = 0; i < e.rows(); ++i) {
            uint64_t red = pbasis.reduce(to_word(e.row(i)));
            if (red) qraw.append_row(from_word(red, n_));
        }
        RrefResult qr = rref(qraw);
        const uint32_t m = qr.matrix.rows();
        if (m == 0) return {};
        if (m > 24)
            throw GuardError("enumerate_so_codes: extension space 2^" + std::to_string(m) +
                             " too large for orbit reduction");
        WordBasis qbasis = WordBasis::from(qr.matrix, qr.pivots);

        const size_t ncosets = size_t(1) << m;
        // word_of[mu] = representative word of coset mu (combination of Q rows).
        std::vector<uint64_t> word_of(ncosets, 0);
        {
            uint64_t cur = 0;
            for (size_t i = 1; i < ncosets; ++i) {
                cur ^= qbasis.rows[std::countr_zero(i)];
                word_of[i ^ (i >> 1)] = cur;
            }
        }

        MiniUF uf(ncosets);
        for (const auto& perm : parent.coord_auts) {
            for (size_t mu = 1; mu < ncosets; ++mu) {
                uint64_t img = pbasis.reduce(permute_word(word_of[mu], perm));
                uint32_t mu2;
                uint64_t rest = qbasis.reduce_tracking(img, mu2);
                if (rest) throw Error("so_enum: automorphism left the extension space");
                uf.unite(static_cast<uint32_t>(mu), mu2);
            }
        }

        std::vector<Rep> children;
        for (size_t mu = 1; mu < ncosets; ++mu) {
            if (uf.find(static_cast<uint32_t>(mu)) != mu) continue;  // one per orbit
            bump_budget(nullptr);
            Rep child;
            if (process_child(parent, pbasis, word_of[mu], child)) children.push_back(std::move(child));
        }
        return children;
    }

    std::vector<Rep> expand_root() {
        std::vector<Rep> out;
        for (uint32_t w = 2; w <= n_; w += 2) {
            if (opt_.min_distance && w < opt_.min_distance) continue;
            bump_budget(nullptr);
            BitMatrix g(0, n_);
            BitVector row(n_);
            for (uint32_t i = 0; i < w; ++i) row.set(i);
            g.append_row(std::move(row));
            Rep child;
            LinearCode code = LinearCode::from_rows(g);
            CanonResult cr = canonize(code_to_graph(code));
            child.gen = code.generator();
            child.digest = cr.form.hex();
            child.coord_auts = std::move(cr.coordinate_generators);
            child.auts_ready = true;
            out.push_back(std::move(child));
        }
        return out;
    }

    // Parent test plus acceptance bookkeeping for one candidate child.
    bool process_child(const Rep& parent, const WordBasis& pbasis, uint64_t w, Rep& out) {
        BitMatrix rows = parent.gen;
        rows.append_row(from_word(w, n_));
        RrefResult cr = rref(rows);
        const uint32_t kk = cr.matrix.rows();
        if (kk != parent.gen.rows() + 1) throw Error("so_enum: dependent extension word");
        WordBasis cbasis = WordBasis::from(cr.matrix, cr.pivots);

        const size_t nmsg = size_t(1) << kk;
        std::vector<uint8_t> wt(nmsg, 0);
        {
            uint64_t cur = 0;
            for (size_t i = 1; i < nmsg; ++i) {
                cur ^= cbasis.rows[std::countr_zero(i)];
                wt[i ^ (i >> 1)] = static_cast<uint8_t>(std::popcount(cur));
            }
        }
        if (opt_.min_distance) {
            uint32_t d = n_ + 1;
            for (size_t i = 1; i < nmsg; ++i) d = std::min<uint32_t>(d, wt[i]);
            if (d < opt_.min_distance) return false;
        }

        // phi0: the functional whose kernel is the parent.
        uint32_t phi0 = 0;
        for (uint32_t i = 0; i < kk; ++i)
            if (pbasis.reduce(cbasis.rows[i])) phi0 |= uint32_t(1) << i;
        if (!phi0) throw Error("so_enum: parent not a hyperplane of child");

        // Weight distribution of every hyperplane via one WHT per weight.
        std::vector<uint32_t> weights_present;
        {
            std::vector<char> seen(n_ + 1, 0);
            for (size_t i = 0; i < nmsg; ++i) seen[wt[i]] = 1;
            for (uint32_t v = 0; v <= n_; ++v)
                if (seen[v]) weights_present.push_back(v);
        }
        const size_t nw = weights_present.size();
        std::vector<int32_t> invtab(nmsg * nw);
        std::vector<int32_t> a(nmsg);
        for (size_t wi = 0; wi < nw; ++wi) {
            int32_t bucket = 0;
            for (size_t i = 0; i < nmsg; ++i) {
                a[i] = (wt[i] == weights_present[wi]) ? 1 : 0;
                bucket += a[i];
            }
            wht(a);
            for (size_t phi = 0; phi < nmsg; ++phi)
                invtab[phi * nw + wi] = (bucket + a[phi]) / 2;
        }

        auto cmp_rows = [&](size_t x, size_t y) {  // -1,0,1 compare of inv rows
            for (size_t wi = 0; wi < nw; ++wi) {
                int32_t dx = invtab[x * nw + wi], dy = invtab[y * nw + wi];
                if (dx != dy) return dx < dy ? -1 : 1;
            }
            return 0;
        };

        size_t best = 1;
        for (size_t phi = 2; phi < nmsg; ++phi)
            if (cmp_rows(phi, best) < 0) best = phi;
        if (cmp_rows(phi0, best) != 0) return false;

        std::vector<uint32_t> min_set;
        for (size_t phi = 1; phi < nmsg; ++phi)
            if (cmp_rows(phi, best) == 0) min_set.push_back(static_cast<uint32_t>(phi));

        LinearCode child_code = LinearCode::from_rows(cr.matrix);
        CanonResult child_canon;
        bool have_canon = false;

        if (min_set.size() > 1) {
            child_canon = canonize(code_to_graph(child_code));
            have_canon = true;

            // Orbits of the tied hyperplanes under Aut(child).
            MiniUF uf(nmsg);
            for (const auto& perm : child_canon.coordinate_generators) {
                std::vector<uint32_t> amat(kk);
                for (uint32_t i = 0; i < kk; ++i) {
                    uint32_t mask;
                    if (cbasis.reduce_tracking(permute_word(cbasis.rows[i], perm), mask))
                        throw Error("so_enum: automorphism left the child code");
                    amat[i] = mask;
                }
                std::vector<uint32_t> inv = invert_bitmatrix(amat, kk);
                for (size_t phi = 1; phi < nmsg; ++phi) {
                    uint32_t psi = 0;
                    for (uint32_t i = 0; i < kk; ++i)
                        if (std::popcount(inv[i] & static_cast<uint32_t>(phi)) & 1)
                            psi |= uint32_t(1) << i;
                    uf.unite(static_cast<uint32_t>(phi), psi);
                }
            }
            std::map<uint32_t, uint32_t> orbit_rep;  // root -> smallest member in min_set
            for (uint32_t phi : min_set) {
                uint32_t root = uf.find(phi);
                auto it = orbit_rep.find(root);
                if (it == orbit_rep.end()) orbit_rep.emplace(root, phi);
            }
            if (orbit_rep.size() > 1) {
                std::vector<uint8_t> mine = marked_digest(cbasis, wt, phi0);
                for (auto& [root, phi] : orbit_rep) {
                    (void)root;
                    if (uf.find(phi) == uf.find(phi0)) continue;
                    if (marked_digest(cbasis, wt, phi) < mine) return false;
                }
            }
        }

        if (!have_canon) child_canon = canonize(code_to_graph(child_code));
        out.gen = child_code.generator();
        out.digest = child_canon.form.hex();
        out.coord_auts = std::move(child_canon.coordinate_generators);
        out.auts_ready = true;
        return true;
    }

    // Canonical bytes of the child graph with left vertices additionally
    // colored by membership in the hyperplane ker(phi).
    std::vector<uint8_t> marked_digest(const WordBasis& cbasis, const std::vector<uint8_t>& wt,
                                       uint32_t phi) {
        const uint32_t kk = static_cast<uint32_t>(cbasis.rows.size());
        const size_t nmsg = size_t(1) << kk;
        struct Entry {
            uint8_t weight;
            uint8_t outside;  // 0 = in kernel, sorts first
            uint64_t word;
        };
        std::vector<Entry> entries;
        entries.reserve(nmsg - 1);
        {
            uint64_t cur = 0;
            for (size_t i = 1; i < nmsg; ++i) {
                cur ^= cbasis.rows[std::countr_zero(i)];
                size_t mu = i ^ (i >> 1);
                if (mu == 0) continue;
                entries.push_back({wt[mu],
                                   static_cast<uint8_t>(std::popcount(static_cast<uint32_t>(mu) & phi) & 1),
                                   cur});
            }
        }
        std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
            if (x.weight != y.weight) return x.weight < y.weight;
            if (x.outside != y.outside) return x.outside < y.outside;
            return x.word < y.word;
        });

        BipartiteIncidence g;
        g.left = static_cast<uint32_t>(entries.size());
        g.right = n_;
        g.adjacency = BitMatrix(0, n_);
        for (const Entry& e : entries) g.adjacency.append_row(from_word(e.word, n_));
        for (uint32_t i = 0; i < entries.size();) {
            uint32_t j = i;
            std::vector<uint32_t> cell;
            while (j < entries.size() && entries[j].weight == entries[i].weight &&
                   entries[j].outside == entries[i].outside)
                cell.push_back(j++);
            g.color_classes.push_back(std::move(cell));
            i = j;
        }
        std::vector<uint32_t> coords(n_);
        std::iota(coords.begin(), coords.end(), g.left);
        g.color_classes.push_back(std::move(coords));
        return canonical_form(g).bytes;
    }

    void load_checkpoint() {
        std::ifstream in(opt_.checkpoint_path);
        if (!in) return;  // nothing to resume
        std::string line;
        size_t lineno = 0;
        // Children are committed by the P line that follows them; L lines
        // after the last P line of their source level belong to an
        // interrupted parent and are regenerated instead of trusted.
        std::vector<size_t> committed(k_ + 1, 0);
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream is(line);
            std::string tag;
            is >> tag;
            if (tag == "C") {
                uint32_t n, k, d, z;
                is >> n >> k >> d >> z;
                if (n != n_ || k != k_ || d != opt_.min_distance ||
                    z != (opt_.forbid_zero_coordinate ? 1u : 0u))
                    throw Error("checkpoint parameters do not match this run");
            } else if (tag == "L") {
                uint32_t t;
                std::string digest, rows;
                is >> t >> digest >> rows;
                if (t == 0 || t > k_) throw ParseError("checkpoint: bad level on line " +
                                                       std::to_string(lineno));
                std::vector<std::string> rr;
                std::istringstream rs(rows);
                std::string one;
                while (std::getline(rs, one, ';')) rr.push_back(one);
                Rep rep;
                rep.gen = BitMatrix::from_strings(rr);
                rep.digest = digest;
                levels_[t].push_back(std::move(rep));
            } else if (tag == "P") {
                uint32_t t;
                size_t cnt;
                is >> t >> cnt;
                if (t >= k_) throw ParseError("checkpoint: bad progress level");
                progress_[t] = cnt;
                committed[t + 1] = levels_[t + 1].size();
            }
        }
        for (uint32_t t = 1; t <= k_; ++t)
            if (levels_[t].size() > committed[t]) levels_[t].resize(committed[t]);
        checkpoint_loaded_ = true;
    }

    uint32_t n_, k_;
    SoEnumOptions opt_;
    std::vector<std::vector<Rep>> levels_;
    std::vector<size_t> progress_;
    std::atomic<uint64_t> children_seen_{0};
    bool checkpoint_loaded_ = false;
};

}  // namespace

std::vector<std::vector<LinearCode>> enumerate_so_codes_levels(uint32_t n, uint32_t k,
                                                               const SoEnumOptions& opt) {
    return SoEnumerator(n, k, opt).run();
}

std::vector<LinearCode> enumerate_so_codes(uint32_t n, uint32_t k, const SoEnumOptions& opt) {
    auto levels = SoEnumerator(n, k, opt).run();
    return std::move(levels[k]);
}

}  // namespace pointcode
