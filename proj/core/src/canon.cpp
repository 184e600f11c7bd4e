#include "pointcode/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pointcode/digest.hpp"

namespace pointcode {

namespace {

using Perm = std::vector<uint32_t>;

bool is_identity(const Perm& p) {
    for (uint32_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a[b[x]]
    Perm r(b.size());
    for (uint32_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (uint32_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

uint64_t mul_sat(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

struct UnionFind {
    std::vector<uint32_t> p;
    explicit UnionFind(uint32_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        p[b] = a;
        return true;
    }
};

// Individualization-refinement canonical labeling of a two-colored
// bipartite graph. The canonical form is the lexicographically smallest
// leaf certificate; automorphisms are collected from leaf collisions and
// used for sibling orbit pruning, which leaves a generating set of the full
// automorphism group when the search finishes.
class Canonizer {
public:
    explicit Canonizer(const BipartiteIncidence& g) : L(g.left), R(g.right), V(g.left + g.right) {
        if (g.adjacency.rows() != L || g.adjacency.cols() != R)
            throw DimensionError("canonize: adjacency shape does not match side sizes");
        adj.assign(V, BitVector(V));
        for (uint32_t i = 0; i < L; ++i) {
            const BitVector& row = g.adjacency.row(i);
            for (uint32_t j = 0; j < R; ++j)
                if (row.bit(j)) {
                    adj[i].set(L + j);
                    adj[L + j].set(i);
                }
        }
        init_partition(g);
    }

    CanonResult run() {
        std::vector<uint32_t> q0;
        for (uint32_t cs = 0; cs < V;) {
            q0.push_back(cs);
            cs += part.clen[cs];
        }
        if (V == 0) {
            // degenerate empty graph
            have_first = true;
            cert_best = make_header();
        } else {
            search(std::move(q0));
        }
        CanonResult res;
        res.form.bytes = cert_best;
        res.generators = gens;
        for (const auto& g : gens) {
            Perm cp(R);
            for (uint32_t j = 0; j < R; ++j) cp[j] = g[L + j] - L;
            res.coordinate_generators.push_back(std::move(cp));
        }
        res.form.automorphism_order =
            mul_sat(left_kernel_order(), perm_group_order(res.coordinate_generators, R));
        return res;
    }

private:
    struct Part {
        std::vector<uint32_t> vert;    // position -> vertex
        std::vector<uint32_t> pos;     // vertex -> position
        std::vector<uint32_t> cstart;  // position -> start of its cell
        std::vector<uint32_t> clen;    // cell length, valid at start positions
        uint32_t nonsingleton = 0;
    };

    uint32_t L, R, V;
    std::vector<BitVector> adj;
    std::vector<uint32_t> init_cell_sizes;
    std::vector<uint32_t> init_cell_of;  // vertex -> initial cell index

    Part part;
    std::vector<uint32_t> prefix;
    std::vector<Perm> gens;

    bool have_first = false;
    std::vector<uint8_t> cert_first, cert_best;
    std::vector<uint32_t> lab_first, lab_best;

    void init_partition(const BipartiteIncidence& g) {
        if (g.color_classes.empty()) throw ValidationError("canonize: empty color partition");
        part.vert.reserve(V);
        part.pos.assign(V, UINT32_MAX);
        part.cstart.assign(V, 0);
        part.clen.assign(V, 0);
        init_cell_of.assign(V, 0);
        uint32_t at = 0, cell_idx = 0;
        for (const auto& cell : g.color_classes) {
            if (cell.empty()) throw ValidationError("canonize: empty color cell");
            bool left_side = cell.front() < L;
            uint32_t start = at;
            for (uint32_t v : cell) {
                if (v >= V) throw ValidationError("canonize: vertex id out of range");
                if ((v < L) != left_side)
                    throw ValidationError("canonize: color cell mixes the two sides");
                if (part.pos[v] != UINT32_MAX)
                    throw ValidationError("canonize: vertex repeated in color partition");
                part.vert.push_back(v);
                part.pos[v] = at;
                init_cell_of[v] = cell_idx;
                ++at;
            }
            for (uint32_t p = start; p < at; ++p) part.cstart[p] = start;
            part.clen[start] = at - start;
            if (at - start > 1) ++part.nonsingleton;
            init_cell_sizes.push_back(at - start);
            ++cell_idx;
        }
        if (at != V) throw ValidationError("canonize: color partition does not cover all vertices");
    }

    void refine(std::vector<uint32_t> queue) {
        std::vector<char> queued(V, 0);
        for (uint32_t s : queue) queued[s] = 1;
        size_t qh = 0;
        BitVector mask(V);
        std::vector<std::pair<uint32_t, uint32_t>> tmp;  // (degree, vertex)
        while (qh < queue.size()) {
            uint32_t s = queue[qh++];
            queued[s] = 0;
            if (part.nonsingleton == 0) continue;
            mask = BitVector(V);
            for (uint32_t p = s; p < s + part.clen[s]; ++p) mask.set(part.vert[p]);

            for (uint32_t cs = 0; cs < V;) {
                uint32_t len = part.clen[cs];
                if (len == 1) {
                    ++cs;
                    continue;
                }
                uint32_t seg_end = cs + len;
                tmp.clear();
                bool differ = false;
                uint32_t d0 = BitVector::and_weight(adj[part.vert[cs]], mask);
                tmp.emplace_back(d0, part.vert[cs]);
                for (uint32_t p = cs + 1; p < seg_end; ++p) {
                    uint32_t d = BitVector::and_weight(adj[part.vert[p]], mask);
                    if (d != d0) differ = true;
                    tmp.emplace_back(d, part.vert[p]);
                }
                if (differ) {
                    std::stable_sort(tmp.begin(), tmp.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    --part.nonsingleton;
                    uint32_t gstart = cs;
                    for (uint32_t t = 0; t <= len; ++t) {
                        if (t == len || (t > 0 && tmp[t].first != tmp[t - 1].first)) {
                            uint32_t glen = cs + t - gstart;
                            part.clen[gstart] = glen;
                            if (glen > 1) ++part.nonsingleton;
                            if (!queued[gstart]) {
                                queued[gstart] = 1;
                                queue.push_back(gstart);
                            }
                            if (t < len) gstart = cs + t;
                        }
                        if (t < len) {
                            uint32_t v = tmp[t].second;
                            part.vert[cs + t] = v;
                            part.pos[v] = cs + t;
                            part.cstart[cs + t] = gstart;
                        }
                    }
                }
                cs = seg_end;
            }
        }
    }

    uint32_t target_cell() const {
        uint32_t best = UINT32_MAX, best_len = UINT32_MAX;
        for (uint32_t cs = 0; cs < V;) {
            uint32_t len = part.clen[cs];
            if (len > 1 && len < best_len) {
                best = cs;
                best_len = len;
            }
            cs += len;
        }
        return best;
    }

    void individualize(uint32_t ts, uint32_t v) {
        uint32_t len = part.clen[ts];
        uint32_t pv = part.pos[v];
        uint32_t other = part.vert[ts];
        part.vert[ts] = v;
        part.vert[pv] = other;
        part.pos[v] = ts;
        part.pos[other] = pv;
        part.clen[ts] = 1;
        part.cstart[ts] = ts;
        part.clen[ts + 1] = len - 1;
        for (uint32_t p = ts + 1; p < ts + len; ++p) part.cstart[p] = ts + 1;
        --part.nonsingleton;
        if (len - 1 > 1) ++part.nonsingleton;
    }

    void search(std::vector<uint32_t> queue) {
        refine(std::move(queue));
        if (part.nonsingleton == 0) {
            process_leaf();
            return;
        }
        uint32_t ts = target_cell();
        std::vector<uint32_t> members(part.vert.begin() + ts,
                                      part.vert.begin() + ts + part.clen[ts]);
        std::sort(members.begin(), members.end());

        Part saved = part;
        std::vector<uint32_t> tried;
        size_t orbits_for = SIZE_MAX;  // gens.size() the union-find was built from
        UnionFind uf(0);

        for (uint32_t v : members) {
            if (!tried.empty()) {
                if (orbits_for != gens.size()) {
                    uf = prefix_stabilizer_orbits();
                    orbits_for = gens.size();
                }
                bool pruned = false;
                for (uint32_t t : tried)
                    if (uf.find(v) == uf.find(t)) {
                        pruned = true;
                        break;
                    }
                if (pruned) continue;
            }
            part = saved;
            individualize(ts, v);
            prefix.push_back(v);
            search({ts, ts + 1});
            prefix.pop_back();
            tried.push_back(v);
        }
        part = std::move(saved);
    }

    UnionFind prefix_stabilizer_orbits() const {
        UnionFind uf(V);
        for (const auto& g : gens) {
            bool fixes = true;
            for (uint32_t p : prefix)
                if (g[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (uint32_t i = 0; i < V; ++i) uf.unite(i, g[i]);
        }
        return uf;
    }

    std::vector<uint8_t> make_header() const {
        std::vector<uint8_t> h;
        auto put32 = [&h](uint32_t x) {
            h.push_back(static_cast<uint8_t>(x));
            h.push_back(static_cast<uint8_t>(x >> 8));
            h.push_back(static_cast<uint8_t>(x >> 16));
            h.push_back(static_cast<uint8_t>(x >> 24));
        };
        put32(L);
        put32(R);
        put32(static_cast<uint32_t>(init_cell_sizes.size()));
        for (uint32_t s : init_cell_sizes) put32(s);
        return h;
    }

    std::vector<uint8_t> leaf_cert() const {
        std::vector<uint8_t> cert = make_header();
        size_t row_bytes = (R + 7) / 8;
        size_t base = cert.size();
        cert.resize(base + size_t(L) * row_bytes, 0);
        for (uint32_t i = 0; i < L; ++i) {
            const BitVector& row = adj[part.vert[i]];
            uint8_t* out = cert.data() + base + size_t(i) * row_bytes;
            for (uint32_t j = 0; j < R; ++j)
                if (row.bit(part.vert[L + j])) out[j >> 3] |= uint8_t(1) << (j & 7);
        }
        return cert;
    }

    void record_automorphism(const std::vector<uint32_t>& lab_a,
                             const std::vector<uint32_t>& lab_b) {
        Perm g(V);
        for (uint32_t i = 0; i < V; ++i) g[lab_a[i]] = lab_b[i];
        if (is_identity(g)) return;
        for (const auto& have : gens)
            if (have == g) return;
        gens.push_back(std::move(g));
    }

    void process_leaf() {
        std::vector<uint8_t> cert = leaf_cert();
        if (!have_first) {
            have_first = true;
            cert_first = cert;
            lab_first = part.vert;
            cert_best = std::move(cert);
            lab_best = part.vert;
            return;
        }
        bool matched_first = false;
        if (cert == cert_first) {
            record_automorphism(lab_first, part.vert);
            matched_first = true;
        }
        if (cert < cert_best) {
            cert_best = std::move(cert);
            lab_best = part.vert;
        } else if (!matched_first && cert == cert_best) {
            record_automorphism(lab_best, part.vert);
        }
    }

    uint64_t left_kernel_order() const {
        // Automorphisms fixing every right vertex permute left vertices with
        // identical adjacency rows inside one initial cell.
        std::map<std::pair<uint32_t, std::vector<uint64_t>>, uint64_t> groups;
        for (uint32_t i = 0; i < L; ++i) {
            std::vector<uint64_t> key(adj[i].word_count());
            for (size_t w = 0; w < key.size(); ++w) key[w] = adj[i].word(w);
            ++groups[{init_cell_of[i], std::move(key)}];
        }
        uint64_t order = 1;
        for (const auto& [k, cnt] : groups) {
            (void)k;
            for (uint64_t m = 2; m <= cnt; ++m) order = mul_sat(order, m);
        }
        return order;
    }
};

}  // namespace

std::string CanonicalForm::hex() const { return sha256_hex(bytes); }

CanonResult canonize(const BipartiteIncidence& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const BipartiteIncidence& g) { return canonize(g).form; }

BipartiteIncidence code_to_graph(const LinearCode& c, bool use_all_codewords,
                                 uint32_t full_guard) {
    std::vector<BitVector> words;
    if (use_all_codewords) {
        if (c.dimension() > full_guard)
            throw GuardError("code_to_graph: dimension " + std::to_string(c.dimension()) +
                             " exceeds the full-enumeration guard " + std::to_string(full_guard));
        for_each_codeword(c.generator(), [&](const BitVector& w) {
            if (w.any()) words.push_back(w);
        });
    } else {
        // Smallest set of weights whose codewords span the code; the weight
        // set is a code invariant, so equivalent codes get matching graphs.
        const WeightDistribution& wd = c.weight_distribution();
        std::vector<char> keep_weight(c.length() + 1, 0);
        BitMatrix span(0, c.length());
        for (uint32_t w = 1; w <= c.length(); ++w) {
            if (!wd.counts[w]) continue;
            keep_weight[w] = 1;
            for_each_codeword(c.generator(), [&](const BitVector& x) {
                if (x.weight() == w) span.append_row(x);
            });
            if (rank(span) == c.dimension()) break;
        }
        for_each_codeword(c.generator(), [&](const BitVector& x) {
            if (x.any() && keep_weight[x.weight()]) words.push_back(x);
        });
    }
    std::sort(words.begin(), words.end(), [](const BitVector& a, const BitVector& b) {
        uint32_t wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a < b;
    });

    BipartiteIncidence g;
    g.left = static_cast<uint32_t>(words.size());
    g.right = c.length();
    g.adjacency = BitMatrix(0, c.length());
    for (const auto& w : words) g.adjacency.append_row(w);

    uint32_t i = 0;
    while (i < words.size()) {
        uint32_t j = i;
        std::vector<uint32_t> cell;
        while (j < words.size() && words[j].weight() == words[i].weight()) cell.push_back(j++);
        g.color_classes.push_back(std::move(cell));
        i = j;
    }
    std::vector<uint32_t> coords(c.length());
    std::iota(coords.begin(), coords.end(), g.left);
    g.color_classes.push_back(std::move(coords));
    return g;
}

CanonicalForm code_canonical(const LinearCode& c) {
    return canonical_form(code_to_graph(c, c.dimension() <= 16));
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
    if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
    if (!(a.weight_distribution() == b.weight_distribution())) return false;
    return code_canonical(a) == code_canonical(b);
}

uint64_t perm_group_order(const std::vector<std::vector<uint32_t>>& gens_in, uint32_t npoints) {
    std::vector<Perm> all;
    for (const auto& g : gens_in) {
        if (g.size() != npoints) throw DimensionError("perm_group_order: wrong degree");
        if (!is_identity(g)) all.push_back(g);
    }
    if (all.empty()) return 1;

    std::vector<uint32_t> base;
    std::vector<std::vector<int>> slot;      // level: point -> transversal index
    std::vector<std::vector<Perm>> trans;    // level: transversal perms

    auto level_gens = [&](size_t l) {
        std::vector<const Perm*> out;
        for (const auto& g : all) {
            bool fixes = true;
            for (size_t i = 0; i < l; ++i)
                if (g[base[i]] != base[i]) {
                    fixes = false;
                    break;
                }
            if (fixes) out.push_back(&g);
        }
        return out;
    };

    auto build_level = [&](size_t l) {
        slot[l].assign(npoints, -1);
        trans[l].clear();
        Perm id(npoints);
        std::iota(id.begin(), id.end(), 0u);
        slot[l][base[l]] = 0;
        trans[l].push_back(id);
        auto gl = level_gens(l);
        for (size_t head = 0; head < trans[l].size(); ++head) {
            Perm u = trans[l][head];
            uint32_t p = u[base[l]];
            for (const Perm* g : gl) {
                uint32_t q = (*g)[p];
                if (slot[l][q] < 0) {
                    slot[l][q] = static_cast<int>(trans[l].size());
                    trans[l].push_back(compose(*g, u));
                }
            }
        }
    };

    auto first_moved = [&](const Perm& g) -> int {
        for (uint32_t i = 0; i < npoints; ++i)
            if (g[i] != i) return static_cast<int>(i);
        return -1;
    };

    // Seed the base so every generator moves some base point.
    for (const auto& g : all) {
        Perm h = g;
        for (size_t l = 0;; ++l) {
            if (l == base.size()) {
                int m = first_moved(h);
                if (m >= 0) {
                    base.push_back(static_cast<uint32_t>(m));
                    slot.emplace_back();
                    trans.emplace_back();
                }
                break;
            }
            if (h[base[l]] != base[l]) break;
        }
    }

    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (size_t l = 0; l < base.size(); ++l) build_level(l);
        // Schreier generators at every level must sift to identity.
        for (size_t l = 0; l < base.size() && !dirty; ++l) {
            auto gl = level_gens(l);
            for (size_t ti = 0; ti < trans[l].size() && !dirty; ++ti) {
                for (const Perm* g : gl) {
                    Perm prod = compose(*g, trans[l][ti]);
                    int s = slot[l][prod[base[l]]];
                    Perm res = compose(inverse(trans[l][s]), prod);
                    // sift through deeper levels
                    size_t m = l + 1;
                    while (m < base.size() && !is_identity(res)) {
                        int t2 = slot[m][res[base[m]]];
                        if (t2 < 0) break;
                        res = compose(inverse(trans[m][t2]), res);
                        ++m;
                    }
                    if (!is_identity(res)) {
                        int fm = first_moved(res);
                        bool in_base = false;
                        for (size_t i = 0; i < base.size(); ++i)
                            if (base[i] == static_cast<uint32_t>(fm)) in_base = true;
                        if (!in_base && m == base.size()) {
                            base.push_back(static_cast<uint32_t>(fm));
                            slot.emplace_back();
                            trans.emplace_back();
                        }
                        all.push_back(std::move(res));
                        dirty = true;
                        break;
                    }
                }
            }
        }
    }

    uint64_t order = 1;
    for (size_t l = 0; l < base.size(); ++l)
        order = mul_sat(order, static_cast<uint64_t>(trans[l].size()));
    return order;
}

}  // namespace pointcode
