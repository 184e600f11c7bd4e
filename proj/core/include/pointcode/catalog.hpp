#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pointcode/records.hpp"
#include "pointcode/search.hpp"

namespace pointcode {

struct CodeEntry {
    LinearCode code;
    std::string fp;
    std::set<std::string> design_fps;  // non-isomorphic designs embedded in the code
    uint64_t generated_by = 0;         // input designs whose point code this is
    bool from_enumeration = false;
    bool inventoried = false;          // find_designs ran on this code
};

struct DesignEntry {
    Design design;
    std::string fp;
    std::string point_code_fp;
    uint32_t incidence_rank = 0;
    uint64_t input_multiplicity = 0;  // 0 = discovered by search, not ingested
    std::set<std::string> code_fps;   // codes known to contain it
};

/// On-disk layout (one directory per run): meta.tsv, codes.tsv, designs.tsv,
/// embeddings.tsv, plus one record file per code and per design named by
/// fingerprint prefix. Fingerprints are sha256 hex of canonical-form bytes.
class Catalog {
public:
    DesignParams family{};
    bool augmented = false;
    bool has_family = false;

    std::map<std::string, CodeEntry> codes;
    std::map<std::string, DesignEntry> designs;
    std::set<std::pair<std::string, std::string>> embeddings;  // (sub fp, super fp)

    struct Stages {
        bool classified = false;
        bool inventoried = false;
        bool enumerated = false;
        bool embedded = false;
    } stages;

    void save(const std::string& dir) const;
    static Catalog load(const std::string& dir, bool verify_fingerprints = false);
};

struct DesignIngest {
    std::vector<Design> designs;  // one per fingerprint, in file order
    std::vector<std::string> fingerprints;
    std::vector<uint64_t> multiplicities;
    std::vector<RecordIssue> issues;
};

/// Read, validate and fingerprint-deduplicate a design record file. Parse
/// and validation failures are per-record issues, not batch failures.
DesignIngest ingest_designs(const std::string& path);

struct SelfDualIngest {
    std::vector<LinearCode> codes;
    std::vector<RecordIssue> issues;
};

/// Read a code record file and keep the records that are self-dual
/// (dimension n/2 and orthogonal to themselves); others become issues.
SelfDualIngest ingest_selfdual(const std::string& path);

struct ClassifyOptions {
    bool enumerate_max_dim = false;  // run the census enumeration + embedding stage
    SoEnumOptions enum_options;
    SearchLimits limits;
};

/// The classification pipeline: per-design rank and point code, code
/// deduplication, per-code design inventories, and optionally the
/// max-dimension enumeration with subcode embedding edges.
Catalog classify(const std::vector<Design>& designs, const ClassifyOptions& opt = {});

Catalog catalog_from_closure(const ClosureResult& cr);

enum class ReportKind {
    rank_distribution,
    weight_class,
    designs_per_code,
    subcode_distribution,
    code_census
};

std::optional<ReportKind> report_kind_from_string(const std::string& s);

struct ReportTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::string to_tsv() const;
};

ReportTable report(const Catalog& cat, ReportKind kind);

}  // namespace pointcode
