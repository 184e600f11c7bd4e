// pointcode: classify block designs by their self-orthogonal point codes,
// enumerate codes up to equivalence, and search codes for embedded designs.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pointcode/catalog.hpp"

using namespace pointcode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // validation failure / negative verdict
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void print_issues(const std::vector<RecordIssue>& issues) {
    for (const RecordIssue& i : issues)
        std::cerr << "record at line " << i.line << ": " << i.message << "\n";
}

std::vector<LinearCode> load_codes(const std::string& path) {
    CodeReadResult res = read_code_file(path);
    if (!res.issues.empty()) {
        print_issues(res.issues);
        throw ValidationError("code file has invalid records");
    }
    std::vector<LinearCode> out;
    for (const CodeRecord& rec : res.records) out.push_back(LinearCode::from_rows(rec.rows));
    if (out.empty()) throw ValidationError("no code records in " + path);
    return out;
}

std::vector<Design> load_designs(const std::string& path) {
    DesignIngest res = ingest_designs(path);
    if (!res.issues.empty()) {
        print_issues(res.issues);
        throw ValidationError("design file has invalid records");
    }
    if (res.designs.empty()) throw ValidationError("no design records in " + path);
    return std::move(res.designs);
}

int cmd_validate(const std::string& path) {
    RecordFileKind kind = sniff_record_file(path);
    if (kind == RecordFileKind::design) {
        DesignIngest res = ingest_designs(path);
        print_issues(res.issues);
        uint64_t total = 0;
        for (size_t i = 0; i < res.designs.size(); ++i) {
            total += res.multiplicities[i];
            const DesignParams& p = res.designs[i].params();
            std::cout << "design v=" << p.v << " b=" << p.b << " r=" << p.r
                      << " k=" << p.block_size << " lambda=" << p.lambda
                      << " multiplicity=" << res.multiplicities[i] << " OK\n";
        }
        std::cout << res.designs.size() << " distinct design(s), " << total << " record(s), "
                  << res.issues.size() << " invalid\n";
        return res.issues.empty() ? kExitOk : kExitNegative;
    }
    if (kind == RecordFileKind::code) {
        CodeReadResult res = read_code_file(path);
        print_issues(res.issues);
        for (const CodeRecord& rec : res.records) {
            LinearCode c = LinearCode::from_rows(rec.rows);
            std::cout << "code n=" << c.length() << " k=" << c.dimension()
                      << (c.dimension() != rec.k ? " (header rank normalized)" : "")
                      << " d=" << c.min_distance()
                      << (c.is_self_orthogonal() ? " self-orthogonal" : "") << " OK\n";
        }
        std::cout << res.records.size() << " code record(s), " << res.issues.size()
                  << " invalid\n";
        return res.issues.empty() ? kExitOk : kExitNegative;
    }
    std::cerr << "cannot tell whether " << path << " holds design or code records\n";
    return kExitNegative;
}

int cmd_rank(const std::string& path) {
    std::vector<Design> designs = load_designs(path);
    std::map<uint32_t, uint64_t> hist;
    for (const Design& d : designs) ++hist[rank(d.incidence())];
    std::cout << "rank\tdesigns\n";
    for (const auto& [r, c] : hist) std::cout << r << '\t' << c << '\n';
    return kExitOk;
}

int cmd_wdist(const std::string& path) {
    for (const LinearCode& c : load_codes(path))
        std::cout << c.weight_distribution().to_sparse() << '\n';
    return kExitOk;
}

int cmd_canon(const std::string& path) {
    RecordFileKind kind = sniff_record_file(path);
    if (kind == RecordFileKind::design) {
        for (const Design& d : load_designs(path)) std::cout << design_canonical(d).hex() << '\n';
        return kExitOk;
    }
    if (kind == RecordFileKind::code) {
        for (const LinearCode& c : load_codes(path)) std::cout << code_canonical(c).hex() << '\n';
        return kExitOk;
    }
    std::cerr << "unrecognized record file " << path << "\n";
    return kExitNegative;
}

int cmd_equiv(const std::string& a, const std::string& b) {
    RecordFileKind ka = sniff_record_file(a), kb = sniff_record_file(b);
    if (ka != kb || ka == RecordFileKind::unknown)
        throw ValidationError("equiv needs two files of the same record kind");
    bool eq;
    if (ka == RecordFileKind::code) {
        eq = are_equivalent(load_codes(a).front(), load_codes(b).front());
    } else {
        eq = design_canonical(load_designs(a).front()) ==
             design_canonical(load_designs(b).front());
    }
    std::cout << (eq ? "equivalent" : "inequivalent") << '\n';
    return eq ? kExitOk : kExitNegative;
}

int cmd_cross_section(const std::string& path, uint32_t coord) {
    LinearCode c = load_codes(path).front();
    write_code_record(std::cout, cross_section(c, coord));
    return kExitOk;
}

int cmd_extend(const std::string& path) {
    LinearCode c = load_codes(path).front();
    write_code_record(std::cout, extend_at(c));
    return kExitOk;
}

int cmd_enumerate(uint32_t n, uint32_t k, const SoEnumOptions& opt) {
    std::vector<LinearCode> codes = enumerate_so_codes(n, k, opt);
    for (const LinearCode& c : codes) {
        std::cout << "# fingerprint: " << code_canonical(c).hex() << "\n";
        write_code_record(std::cout, c);
    }
    std::cerr << codes.size() << " class(es)\n";
    return kExitOk;
}

int cmd_find_designs(const std::string& path, uint32_t v, uint32_t k, uint32_t lambda,
                     bool augmented, const SearchLimits& limits) {
    DesignSearchSpec spec = DesignSearchSpec::make(v, k, lambda, augmented);
    LinearCode c = load_codes(path).front();
    auto found = find_designs(c, spec, limits);
    for (const FoundDesign& fd : found) {
        std::cout << "# fingerprint: " << fd.fingerprint.hex() << "\n";
        write_design_record(std::cout, fd.design);
    }
    std::cerr << found.size() << " non-isomorphic design(s)\n";
    return kExitOk;
}

int cmd_embed(const std::string& sub, const std::string& super, const SearchLimits& limits) {
    bool ok = is_embedded(load_codes(sub).front(), load_codes(super).front(), limits);
    std::cout << (ok ? "embedded" : "not-embedded") << '\n';
    return ok ? kExitOk : kExitNegative;
}

int cmd_classify(const std::string& designs_path, const std::string& out_dir,
                 const ClassifyOptions& opt) {
    DesignIngest res = ingest_designs(designs_path);
    print_issues(res.issues);
    if (res.designs.empty()) throw ValidationError("no valid design records");
    std::vector<Design> designs;
    for (size_t i = 0; i < res.designs.size(); ++i)
        for (uint64_t m = 0; m < res.multiplicities[i]; ++m) designs.push_back(res.designs[i]);
    Catalog cat = classify(designs, opt);
    cat.save(out_dir);
    std::cerr << "catalog: " << cat.designs.size() << " design(s), " << cat.codes.size()
              << " code(s) -> " << out_dir << "\n";
    return kExitOk;
}

int cmd_closure(const std::string& seed_path, const std::string& out_dir,
                const ClosureOptions& opt) {
    Design seed = load_designs(seed_path).front();
    ClosureResult cr = closure(seed, opt);
    Catalog cat = catalog_from_closure(cr);
    cat.save(out_dir);
    std::cerr << "closure: " << cr.designs.size() << " design(s), " << cr.codes.size()
              << " code(s) -> " << out_dir << "\n";
    return kExitOk;
}

int cmd_report(const std::string& dir, const std::string& kind_str) {
    auto kind = report_kind_from_string(kind_str);
    if (!kind) {
        std::cerr << "unknown report kind '" << kind_str
                  << "' (rank-distribution, weight-class, designs-per-code, "
                     "subcode-distribution, code-census)\n";
        return kExitUsage;
    }
    Catalog cat = Catalog::load(dir);
    std::cout << report(cat, *kind).to_tsv();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block designs and their self-orthogonal point codes"};
    app.require_subcommand(1);

    std::string file_a, file_b, out_dir, kind, checkpoint;
    uint32_t n = 0, k = 0, v = 0, lambda = 0, coord = 0, threads = 1, min_distance = 0;
    uint64_t max_nodes = 0, max_children = 0;
    bool no_zero = false, augmented = false, enumerate_max = false;

    CLI::App* validate = app.add_subcommand("validate", "validate design/code records");
    validate->add_option("file", file_a)->required();

    CLI::App* rank_cmd = app.add_subcommand("rank", "rank histogram of a design file");
    rank_cmd->add_option("designs-file", file_a)->required();

    CLI::App* wdist = app.add_subcommand("wdist", "weight distribution of each code record");
    wdist->add_option("code-file", file_a)->required();

    CLI::App* canon_cmd = app.add_subcommand("canon", "canonical fingerprints of records");
    canon_cmd->add_option("file", file_a)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "equivalence verdict for two records");
    equiv->add_option("fileA", file_a)->required();
    equiv->add_option("fileB", file_b)->required();

    CLI::App* cross = app.add_subcommand("cross-section", "cross-section a code at a coordinate");
    cross->add_option("code-file", file_a)->required();
    cross->add_option("--coord", coord, "coordinate to section at")->required();

    CLI::App* extend = app.add_subcommand("extend", "reverse of cross-section (all-ones word)");
    extend->add_option("code-file", file_a)->required();

    CLI::App* enumerate = app.add_subcommand("enumerate-codes",
                                             "self-orthogonal (n,k) codes up to equivalence");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--k", k)->required();
    enumerate->add_option("--min-distance", min_distance);
    enumerate->add_flag("--no-zero-coord", no_zero);
    enumerate->add_option("--checkpoint", checkpoint);
    enumerate->add_option("--max-children", max_children, "search budget (0 = unlimited)");
    enumerate->add_option("--threads", threads);

    CLI::App* findd = app.add_subcommand("find-designs", "embedded designs in a code");
    findd->add_option("code-file", file_a)->required();
    findd->add_option("--v", v)->required();
    findd->add_option("--k", k)->required();
    findd->add_option("--lambda", lambda)->required();
    findd->add_flag("--augmented", augmented);
    findd->add_option("--max-nodes", max_nodes);

    CLI::App* embed = app.add_subcommand("embed", "does the first code embed into the second");
    embed->add_option("subcode-file", file_a)->required();
    embed->add_option("supercode-file", file_b)->required();
    embed->add_option("--max-nodes", max_nodes);

    CLI::App* classify_cmd = app.add_subcommand("classify", "build a catalog from designs");
    classify_cmd->add_option("--designs", file_a)->required();
    classify_cmd->add_option("--out", out_dir)->required();
    classify_cmd->add_flag("--enumerate-max-dim", enumerate_max);
    classify_cmd->add_option("--checkpoint", checkpoint);
    classify_cmd->add_option("--max-children", max_children);
    classify_cmd->add_option("--threads", threads);

    CLI::App* closure_cmd = app.add_subcommand("closure", "fixpoint of designs and codes");
    closure_cmd->add_option("--seed", file_a)->required();
    closure_cmd->add_option("--out", out_dir)->required();
    closure_cmd->add_option("--checkpoint", checkpoint);
    closure_cmd->add_option("--max-children", max_children);
    closure_cmd->add_option("--threads", threads);

    CLI::App* report_cmd = app.add_subcommand("report", "tables from a catalog directory");
    report_cmd->add_option("--catalog", out_dir)->required();
    report_cmd->add_option("--kind", kind)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(file_a);
        if (*rank_cmd) return cmd_rank(file_a);
        if (*wdist) return cmd_wdist(file_a);
        if (*canon_cmd) return cmd_canon(file_a);
        if (*equiv) return cmd_equiv(file_a, file_b);
        if (*cross) return cmd_cross_section(file_a, coord);
        if (*extend) return cmd_extend(file_a);
        if (*enumerate) {
            SoEnumOptions opt;
            opt.min_distance = min_distance;
            opt.forbid_zero_coordinate = no_zero;
            opt.checkpoint_path = checkpoint;
            opt.max_children = max_children;
            opt.threads = threads;
            return cmd_enumerate(n, k, opt);
        }
        if (*findd) {
            SearchLimits limits;
            limits.max_nodes = max_nodes;
            return cmd_find_designs(file_a, v, k, lambda, augmented, limits);
        }
        if (*embed) {
            SearchLimits limits;
            limits.max_nodes = max_nodes;
            return cmd_embed(file_a, file_b, limits);
        }
        if (*classify_cmd) {
            ClassifyOptions opt;
            opt.enumerate_max_dim = enumerate_max;
            opt.enum_options.checkpoint_path = checkpoint;
            opt.enum_options.max_children = max_children;
            opt.enum_options.threads = threads;
            return cmd_classify(file_a, out_dir, opt);
        }
        if (*closure_cmd) {
            ClosureOptions opt;
            opt.enum_options.checkpoint_path = checkpoint;
            opt.enum_options.max_children = max_children;
            opt.enum_options.threads = threads;
            return cmd_closure(file_a, out_dir, opt);
        }
        if (*report_cmd) return cmd_report(out_dir, kind);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what();
        if (!e.checkpoint_path.empty()) std::cerr << " (checkpoint: " << e.checkpoint_path << ")";
        std::cerr << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    }
    return kExitUsage;
}
