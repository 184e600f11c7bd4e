#include "pointcode/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace pointcode {

namespace {

std::map<std::string, std::string> record_filenames(const std::set<std::string>& all,
                                                    const char* ext) {
    // 16-hex prefixes, extended to the full fingerprint on (astronomically
    // unlikely) collision.
    std::map<std::string, uint32_t> prefix_count;
    for (const std::string& fp : all) ++prefix_count[fp.substr(0, 16)];
    std::map<std::string, std::string> out;
    for (const std::string& fp : all) {
        std::string prefix = fp.substr(0, 16);
        out.emplace(fp, (prefix_count[prefix] > 1 ? fp : prefix) + ext);
    }
    return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '\t') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string join_commas(const std::set<std::string>& items) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += ',';
        out += s;
    }
    return out.empty() ? "-" : out;
}

}  // namespace

DesignIngest ingest_designs(const std::string& path) {
    DesignReadResult raw = read_design_file(path);
    DesignIngest out;
    out.issues = std::move(raw.issues);
    std::map<std::string, size_t> index;
    for (DesignRecord& rec : raw.records) {
        try {
            DesignParams p = derive_params(rec.v, rec.k, rec.lambda);
            if (p.r != rec.r || p.b != rec.b)
                throw ValidationError("header (r,b)=(" + std::to_string(rec.r) + "," +
                                      std::to_string(rec.b) + ") does not match derived (" +
                                      std::to_string(p.r) + "," + std::to_string(p.b) + ")");
            Design d = Design::validate(rec.incidence, rec.v, rec.k, rec.lambda);
            std::string fp = design_canonical(d).hex();
            auto it = index.find(fp);
            if (it == index.end()) {
                index.emplace(fp, out.designs.size());
                out.designs.push_back(std::move(d));
                out.fingerprints.push_back(fp);
                out.multiplicities.push_back(1);
            } else {
                ++out.multiplicities[it->second];
            }
        } catch (const Error& e) {
            out.issues.push_back({rec.line, e.what()});
        }
    }
    return out;
}

SelfDualIngest ingest_selfdual(const std::string& path) {
    CodeReadResult raw = read_code_file(path);
    SelfDualIngest out;
    out.issues = std::move(raw.issues);
    for (CodeRecord& rec : raw.records) {
        try {
            LinearCode c = LinearCode::from_rows(rec.rows);
            if (2 * c.dimension() != c.length())
                throw ValidationError("dimension " + std::to_string(c.dimension()) +
                                      " is not half the length " + std::to_string(c.length()));
            if (!c.is_self_orthogonal())
                throw ValidationError("generator rows are not pairwise orthogonal: not self-dual");
            out.codes.push_back(std::move(c));
        } catch (const Error& e) {
            out.issues.push_back({rec.line, e.what()});
        }
    }
    return out;
}

Catalog classify(const std::vector<Design>& designs, const ClassifyOptions& opt) {
    if (designs.empty()) throw ValidationError("classify: no designs given");
    Catalog cat;
    cat.family = designs.front().params();
    cat.has_family = true;
    cat.augmented = augment_for_lambda(cat.family.lambda);
    for (const Design& d : designs)
        if (!(d.params() == cat.family))
            throw ValidationError("classify: designs of mixed parameter families");

    for (const Design& d : designs) {
        std::string fp = design_canonical(d).hex();
        auto it = cat.designs.find(fp);
        if (it != cat.designs.end()) {
            ++it->second.input_multiplicity;
            continue;
        }
        DesignEntry entry;
        entry.design = d;
        entry.fp = fp;
        entry.incidence_rank = rank(d.incidence());
        entry.input_multiplicity = 1;
        LinearCode c = point_code(d, cat.augmented);
        std::string cfp = code_canonical(c).hex();
        entry.point_code_fp = cfp;
        entry.code_fps.insert(cfp);
        auto [cit, fresh] = cat.codes.try_emplace(cfp);
        if (fresh) {
            cit->second.code = std::move(c);
            cit->second.fp = cfp;
        }
        ++cit->second.generated_by;
        cit->second.design_fps.insert(fp);
        cat.designs.emplace(fp, std::move(entry));
    }
    cat.stages.classified = true;

    DesignSearchSpec spec{cat.family, cat.augmented};
    const uint32_t n = spec.code_length();
    const uint32_t kmax = (n % 2) ? (n - 1) / 2 : n / 2;

    if (opt.enumerate_max_dim) {
        for (LinearCode& c : enumerate_so_codes(n, kmax, opt.enum_options)) {
            std::string cfp = code_canonical(c).hex();
            auto [cit, fresh] = cat.codes.try_emplace(cfp);
            if (fresh) {
                cit->second.code = std::move(c);
                cit->second.fp = cfp;
            }
            cit->second.from_enumeration = true;
        }
        cat.stages.enumerated = true;

        // Lower-dimension design codes embed into the filtered maximal ones.
        std::vector<std::string> subs, targets;
        for (const auto& [fp, e] : cat.codes) {
            if (e.generated_by > 0 && e.code.dimension() < kmax) subs.push_back(fp);
            if (e.from_enumeration && e.code.dimension() == kmax &&
                e.code.min_distance() >= 4 && !e.code.has_zero_coordinate())
                targets.push_back(fp);
        }
        for (const std::string& sub : subs)
            for (const std::string& super : targets)
                if (is_embedded(cat.codes.at(sub).code, cat.codes.at(super).code, opt.limits))
                    cat.embeddings.emplace(sub, super);
        cat.stages.embedded = true;
    }

    // Per-code design inventories.
    std::vector<std::string> snapshot;
    for (const auto& [fp, e] : cat.codes) snapshot.push_back(fp);
    for (const std::string& cfp : snapshot) {
        CodeEntry& entry = cat.codes.at(cfp);
        if (entry.generated_by == 0 && !prefilter(entry.code, spec)) {
            entry.inventoried = true;
            continue;
        }
        for (const FoundDesign& fd : find_designs(entry.code, spec, opt.limits)) {
            std::string dfp = fd.fingerprint.hex();
            entry.design_fps.insert(dfp);
            auto dit = cat.designs.find(dfp);
            if (dit == cat.designs.end()) {
                DesignEntry de;
                de.design = fd.design;
                de.fp = dfp;
                de.incidence_rank = rank(fd.design.incidence());
                de.input_multiplicity = 0;
                LinearCode pc = point_code(fd.design, cat.augmented);
                std::string pfp = code_canonical(pc).hex();
                de.point_code_fp = pfp;
                de.code_fps.insert(pfp);
                auto [cit2, fresh2] = cat.codes.try_emplace(pfp);
                if (fresh2) {
                    cit2->second.code = std::move(pc);
                    cit2->second.fp = pfp;
                }
                cit2->second.design_fps.insert(dfp);
                dit = cat.designs.emplace(dfp, std::move(de)).first;
            }
            dit->second.code_fps.insert(cfp);
        }
        entry.inventoried = true;
    }
    cat.stages.inventoried = true;
    return cat;
}

Catalog catalog_from_closure(const ClosureResult& cr) {
    if (cr.designs.empty()) throw ValidationError("closure result holds no designs");
    Catalog cat;
    cat.family = cr.designs.front().second.params();
    cat.has_family = true;
    cat.augmented = augment_for_lambda(cat.family.lambda);

    for (const auto& [fp, d] : cr.designs) {
        DesignEntry e;
        e.design = d;
        e.fp = fp;
        e.incidence_rank = rank(d.incidence());
        e.input_multiplicity = 0;
        cat.designs.emplace(fp, std::move(e));
    }
    for (const auto& [fp, c] : cr.codes) {
        CodeEntry e;
        e.code = c;
        e.fp = fp;
        e.inventoried = true;
        cat.codes.emplace(fp, std::move(e));
    }
    for (const ClosureEdge& e : cr.edges) {
        switch (e.kind) {
            case ClosureEdge::Kind::generates: {
                auto& de = cat.designs.at(e.from);
                de.point_code_fp = e.to;
                de.code_fps.insert(e.to);
                auto& ce = cat.codes.at(e.to);
                ++ce.generated_by;
                ce.design_fps.insert(e.from);
                break;
            }
            case ClosureEdge::Kind::contains: {
                cat.codes.at(e.from).design_fps.insert(e.to);
                cat.designs.at(e.to).code_fps.insert(e.from);
                break;
            }
            case ClosureEdge::Kind::embeds:
                cat.embeddings.emplace(e.from, e.to);
                break;
        }
    }
    cat.stages.classified = true;
    cat.stages.inventoried = true;
    cat.stages.embedded = true;
    return cat;
}

void Catalog::save(const std::string& dir) const {
    fs::create_directories(fs::path(dir) / "codes");
    fs::create_directories(fs::path(dir) / "designs");

    std::set<std::string> code_fps, design_fps;
    for (const auto& [fp, e] : codes) code_fps.insert(fp);
    for (const auto& [fp, e] : designs) design_fps.insert(fp);

    {
        std::ofstream meta(fs::path(dir) / "meta.tsv");
        meta << "v\t" << family.v << "\nb\t" << family.b << "\nr\t" << family.r << "\nk\t"
             << family.block_size << "\nlambda\t" << family.lambda << "\naugmented\t"
             << (augmented ? 1 : 0) << "\nhas_family\t" << (has_family ? 1 : 0)
             << "\nstage_classified\t" << (stages.classified ? 1 : 0) << "\nstage_inventoried\t"
             << (stages.inventoried ? 1 : 0) << "\nstage_enumerated\t"
             << (stages.enumerated ? 1 : 0) << "\nstage_embedded\t" << (stages.embedded ? 1 : 0)
             << "\n";
    }
    {
        std::ofstream tsv(fs::path(dir) / "codes.tsv");
        tsv << "fingerprint\tfile\tn\tk\td\tweights\tdesigns\tgenerated_by\tfrom_enumeration\t"
               "inventoried\n";
        auto fnames = record_filenames(code_fps, ".code");
        for (const auto& [fp, e] : codes) {
            const std::string& fname = fnames.at(fp);
            tsv << fp << '\t' << fname << '\t' << e.code.length() << '\t' << e.code.dimension()
                << '\t' << e.code.min_distance() << '\t'
                << e.code.weight_distribution().to_sparse() << '\t' << e.design_fps.size()
                << '\t' << e.generated_by << '\t' << (e.from_enumeration ? 1 : 0) << '\t'
                << (e.inventoried ? 1 : 0) << '\n';
            std::ofstream rec(fs::path(dir) / "codes" / fname);
            rec << "# fingerprint: " << fp << "\n";
            write_code_record(rec, e.code);
        }
    }
    {
        std::ofstream tsv(fs::path(dir) / "designs.tsv");
        tsv << "fingerprint\tfile\trank\tmultiplicity\tpoint_code\tcodes\n";
        auto fnames = record_filenames(design_fps, ".design");
        for (const auto& [fp, e] : designs) {
            const std::string& fname = fnames.at(fp);
            tsv << fp << '\t' << fname << '\t' << e.incidence_rank << '\t'
                << e.input_multiplicity << '\t'
                << (e.point_code_fp.empty() ? "-" : e.point_code_fp) << '\t'
                << join_commas(e.code_fps) << '\n';
            std::ofstream rec(fs::path(dir) / "designs" / fname);
            rec << "# fingerprint: " << fp << "\n";
            write_design_record(rec, e.design);
        }
    }
    {
        std::ofstream tsv(fs::path(dir) / "embeddings.tsv");
        tsv << "sub\tsuper\n";
        for (const auto& [sub, super] : embeddings) tsv << sub << '\t' << super << '\n';
    }
}

Catalog Catalog::load(const std::string& dir, bool verify_fingerprints) {
    Catalog cat;
    {
        std::ifstream meta(fs::path(dir) / "meta.tsv");
        if (!meta) throw Error("catalog: cannot open " + dir + "/meta.tsv");
        std::string line;
        std::map<std::string, std::string> kv;
        while (std::getline(meta, line)) {
            auto cells = split_tabs(line);
            if (cells.size() == 2) kv[cells[0]] = cells[1];
        }
        cat.family.v = std::stoul(kv.at("v"));
        cat.family.b = std::stoul(kv.at("b"));
        cat.family.r = std::stoul(kv.at("r"));
        cat.family.block_size = std::stoul(kv.at("k"));
        cat.family.lambda = std::stoul(kv.at("lambda"));
        cat.augmented = kv.at("augmented") == "1";
        cat.has_family = kv.at("has_family") == "1";
        cat.stages.classified = kv.at("stage_classified") == "1";
        cat.stages.inventoried = kv.at("stage_inventoried") == "1";
        cat.stages.enumerated = kv.at("stage_enumerated") == "1";
        cat.stages.embedded = kv.at("stage_embedded") == "1";
    }
    {
        std::ifstream tsv(fs::path(dir) / "codes.tsv");
        if (!tsv) throw Error("catalog: cannot open " + dir + "/codes.tsv");
        std::string line;
        std::getline(tsv, line);  // header
        while (std::getline(tsv, line)) {
            if (line.empty()) continue;
            auto cells = split_tabs(line);
            if (cells.size() != 10) throw ParseError("catalog: bad codes.tsv row");
            CodeEntry e;
            e.fp = cells[0];
            CodeReadResult rr = read_code_file((fs::path(dir) / "codes" / cells[1]).string());
            if (rr.records.size() != 1)
                throw ParseError("catalog: code record file must hold one record");
            e.code = LinearCode::from_rows(rr.records.front().rows);
            e.generated_by = std::stoull(cells[7]);
            e.from_enumeration = cells[8] == "1";
            e.inventoried = cells[9] == "1";
            if (verify_fingerprints && code_canonical(e.code).hex() != e.fp)
                throw ValidationError("catalog: stored code fingerprint mismatch for " + e.fp);
            cat.codes.emplace(e.fp, std::move(e));
        }
    }
    {
        std::ifstream tsv(fs::path(dir) / "designs.tsv");
        if (!tsv) throw Error("catalog: cannot open " + dir + "/designs.tsv");
        std::string line;
        std::getline(tsv, line);
        while (std::getline(tsv, line)) {
            if (line.empty()) continue;
            auto cells = split_tabs(line);
            if (cells.size() != 6) throw ParseError("catalog: bad designs.tsv row");
            DesignEntry e;
            e.fp = cells[0];
            DesignReadResult rr =
                read_design_file((fs::path(dir) / "designs" / cells[1]).string());
            if (rr.records.size() != 1)
                throw ParseError("catalog: design record file must hold one record");
            const DesignRecord& rec = rr.records.front();
            e.design = Design::validate(rec.incidence, rec.v, rec.k, rec.lambda);
            e.incidence_rank = std::stoul(cells[2]);
            e.input_multiplicity = std::stoull(cells[3]);
            e.point_code_fp = cells[4] == "-" ? "" : cells[4];
            for (const std::string& fp : split_commas(cells[5]))
                if (fp != "-") e.code_fps.insert(fp);
            if (verify_fingerprints && design_canonical(e.design).hex() != e.fp)
                throw ValidationError("catalog: stored design fingerprint mismatch for " + e.fp);
            cat.designs.emplace(e.fp, std::move(e));
        }
    }
    {
        std::ifstream tsv(fs::path(dir) / "embeddings.tsv");
        if (tsv) {
            std::string line;
            std::getline(tsv, line);
            while (std::getline(tsv, line)) {
                if (line.empty()) continue;
                auto cells = split_tabs(line);
                if (cells.size() == 2) cat.embeddings.emplace(cells[0], cells[1]);
            }
        }
    }
    // Rebuild the per-code design sets from the design rows.
    for (const auto& [dfp, de] : cat.designs)
        for (const std::string& cfp : de.code_fps) {
            auto it = cat.codes.find(cfp);
            if (it != cat.codes.end()) it->second.design_fps.insert(dfp);
        }
    return cat;
}

std::optional<ReportKind> report_kind_from_string(const std::string& s) {
    if (s == "rank-distribution") return ReportKind::rank_distribution;
    if (s == "weight-class") return ReportKind::weight_class;
    if (s == "designs-per-code") return ReportKind::designs_per_code;
    if (s == "subcode-distribution") return ReportKind::subcode_distribution;
    if (s == "code-census") return ReportKind::code_census;
    return std::nullopt;
}

std::string ReportTable::to_tsv() const {
    std::ostringstream os;
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "\t" : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
        os << '\n';
    }
    return os.str();
}

ReportTable report(const Catalog& cat, ReportKind kind) {
    ReportTable t;
    switch (kind) {
        case ReportKind::rank_distribution: {
            if (!cat.stages.classified) throw StageError("rank-distribution: classify stage not run");
            std::map<uint32_t, uint64_t> hist;
            for (const auto& [fp, e] : cat.designs) ++hist[e.incidence_rank];
            t.header = {"rank", "designs"};
            for (const auto& [r, c] : hist)
                t.rows.push_back({std::to_string(r), std::to_string(c)});
            break;
        }
        case ReportKind::weight_class: {
            if (!cat.stages.classified) throw StageError("weight-class: classify stage not run");
            struct Row {
                std::vector<uint64_t> counts;
                uint32_t k;
                uint64_t designs = 0;
                std::string wd;
            };
            std::map<std::string, Row> groups;
            for (const auto& [fp, e] : cat.designs) {
                if (e.point_code_fp.empty()) continue;
                const CodeEntry& ce = cat.codes.at(e.point_code_fp);
                std::string key = ce.code.weight_distribution().to_sparse();
                Row& row = groups[key];
                if (!row.designs) {
                    row.counts = ce.code.weight_distribution().counts;
                    row.k = ce.code.dimension();
                    row.wd = key;
                }
                ++row.designs;
            }
            std::vector<Row> rows;
            for (auto& [key, row] : groups) rows.push_back(std::move(row));
            std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
                if (a.k != b.k) return a.k < b.k;
                return a.counts < b.counts;
            });
            t.header = {"class", "weights", "designs", "k"};
            for (size_t i = 0; i < rows.size(); ++i)
                t.rows.push_back({std::to_string(i + 1), rows[i].wd,
                                  std::to_string(rows[i].designs), std::to_string(rows[i].k)});
            break;
        }
        case ReportKind::designs_per_code: {
            if (!cat.stages.inventoried)
                throw StageError("designs-per-code: inventory stage not run");
            struct Row {
                uint32_t k;
                std::vector<uint64_t> counts;
                std::string fp;
                uint64_t designs;
                uint32_t d;
            };
            std::vector<Row> rows;
            for (const auto& [fp, e] : cat.codes) {
                if (e.design_fps.empty()) continue;
                rows.push_back({e.code.dimension(), e.code.weight_distribution().counts, fp,
                                e.design_fps.size(), e.code.min_distance()});
            }
            std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
                if (a.k != b.k) return a.k < b.k;
                if (a.counts != b.counts) return a.counts < b.counts;
                return a.fp < b.fp;
            });
            t.header = {"fingerprint", "k", "d", "designs"};
            for (const Row& r : rows)
                t.rows.push_back({r.fp, std::to_string(r.k), std::to_string(r.d),
                                  std::to_string(r.designs)});
            break;
        }
        case ReportKind::subcode_distribution: {
            if (!cat.stages.embedded)
                throw StageError("subcode-distribution: embedding stage not run");
            t.header = {"sub", "sub_k", "super", "super_k"};
            for (const auto& [sub, super] : cat.embeddings) {
                uint32_t ks = cat.codes.count(sub) ? cat.codes.at(sub).code.dimension() : 0;
                uint32_t kp = cat.codes.count(super) ? cat.codes.at(super).code.dimension() : 0;
                t.rows.push_back({sub, std::to_string(ks), super, std::to_string(kp)});
            }
            break;
        }
        case ReportKind::code_census: {
            if (!cat.stages.enumerated)
                throw StageError("code-census: enumeration stage not run");
            std::set<uint32_t> distances;
            for (const auto& [fp, e] : cat.codes)
                if (e.from_enumeration) distances.insert(e.code.min_distance());
            std::map<uint32_t, uint64_t> with_zero, without_zero;
            for (const auto& [fp, e] : cat.codes) {
                if (!e.from_enumeration) continue;
                if (e.code.has_zero_coordinate())
                    ++with_zero[e.code.min_distance()];
                else
                    ++without_zero[e.code.min_distance()];
            }
            t.header = {"zero_coordinate"};
            for (uint32_t d : distances) t.header.push_back("d" + std::to_string(d));
            t.header.push_back("total");
            auto emit = [&](const std::string& label, std::map<uint32_t, uint64_t>& m) {
                std::vector<std::string> row = {label};
                uint64_t total = 0;
                for (uint32_t d : distances) {
                    row.push_back(std::to_string(m[d]));
                    total += m[d];
                }
                row.push_back(std::to_string(total));
                t.rows.push_back(std::move(row));
            };
            emit("with", with_zero);
            emit("without", without_zero);
            std::map<uint32_t, uint64_t> totals;
            for (uint32_t d : distances) totals[d] = with_zero[d] + without_zero[d];
            emit("total", totals);
            break;
        }
    }
    return t;
}

}  // namespace pointcode
