#include <algorithm>
#include <deque>
#include <map>

#include "pointcode/search.hpp"

namespace pointcode {

ClosureResult closure(const Design& seed, const ClosureOptions& opt) {
    const DesignParams& p = seed.params();
    if (p.v != 6 * p.lambda - 2 || p.block_size != 2 * p.lambda)
        throw Error("closure: seed is not in the (6l-2, 2l, l) family");

    const bool aug = augment_for_lambda(p.lambda);
    DesignSearchSpec spec = DesignSearchSpec::make(p.v, p.block_size, p.lambda, aug);
    const uint32_t n = spec.code_length();
    if (n % 2 == 0) throw Error("closure: unexpected even code length for this family");
    const uint32_t kmax = (n - 1) / 2;

    std::vector<LinearCode> targets;
    std::vector<std::string> target_fps;
    if (opt.targets) {
        targets = *opt.targets;
    } else {
        SoEnumOptions eo = opt.enum_options;
        eo.min_distance = std::max<uint32_t>(eo.min_distance, 4);
        eo.forbid_zero_coordinate = true;
        targets = enumerate_so_codes(n, kmax, eo);
    }
    for (const LinearCode& t : targets) target_fps.push_back(code_canonical(t).hex());

    std::map<std::string, Design> designs;
    std::map<std::string, LinearCode> codes;
    std::vector<ClosureEdge> edges;
    std::deque<std::string> design_queue, code_queue;

    auto add_design = [&](const Design& d, const std::string& fp) {
        if (designs.count(fp)) return;
        designs.emplace(fp, d);
        design_queue.push_back(fp);
    };
    auto add_code = [&](const LinearCode& c, const std::string& fp) {
        if (codes.count(fp)) return;
        codes.emplace(fp, c);
        code_queue.push_back(fp);
    };

    add_design(seed, design_canonical(seed).hex());

    while (!design_queue.empty() || !code_queue.empty()) {
        if (!design_queue.empty()) {
            std::string fp = design_queue.front();
            design_queue.pop_front();
            LinearCode c = point_code(designs.at(fp), aug);
            std::string cfp = code_canonical(c).hex();
            edges.push_back({ClosureEdge::Kind::generates, fp, cfp});
            add_code(c, cfp);
            continue;
        }
        std::string cfp = code_queue.front();
        code_queue.pop_front();
        const LinearCode& c = codes.at(cfp);
        for (const FoundDesign& fd : find_designs(c, spec, opt.limits)) {
            std::string dfp = fd.fingerprint.hex();
            edges.push_back({ClosureEdge::Kind::contains, cfp, dfp});
            add_design(fd.design, dfp);
        }
        if (c.dimension() < kmax) {
            for (size_t i = 0; i < targets.size(); ++i) {
                if (!is_embedded(c, targets[i], opt.limits)) continue;
                edges.push_back({ClosureEdge::Kind::embeds, cfp, target_fps[i]});
                add_code(targets[i], target_fps[i]);
            }
        }
    }

    ClosureResult out;
    for (auto& [fp, d] : designs) out.designs.emplace_back(fp, std::move(d));
    for (auto& [fp, c] : codes) out.codes.emplace_back(fp, std::move(c));
    std::sort(edges.begin(), edges.end(), [](const ClosureEdge& a, const ClosureEdge& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        if (a.from != b.from) return a.from < b.from;
        return a.to < b.to;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const ClosureEdge& a, const ClosureEdge& b) {
                                return a.kind == b.kind && a.from == b.from && a.to == b.to;
                            }),
                edges.end());
    out.edges = std::move(edges);
    return out;
}

}  // namespace pointcode
