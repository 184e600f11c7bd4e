#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pointcode/bitmat.hpp"
#include "pointcode/design.hpp"
#include "pointcode/lincode.hpp"

namespace pointcode {

// Text record formats. A design record is a header line "v b r k lambda"
// followed by v lines of exactly b characters from {0,1}; a code record is a
// header "n k" followed by k generator rows of n characters. '#' starts a
// comment line, a blank line terminates a record, and files may hold many
// records. Loaders are per-record tolerant: bad records become issues, good
// ones are still returned.

struct RecordIssue {
    size_t line = 0;
    std::string message;
};

struct DesignRecord {
    uint32_t v = 0, b = 0, r = 0, k = 0, lambda = 0;
    BitMatrix incidence;
    size_t line = 0;
};

struct CodeRecord {
    uint32_t n = 0, k = 0;
    BitMatrix rows;  // as written; not necessarily rref
    size_t line = 0;
};

struct DesignReadResult {
    std::vector<DesignRecord> records;
    std::vector<RecordIssue> issues;
};

struct CodeReadResult {
    std::vector<CodeRecord> records;
    std::vector<RecordIssue> issues;
};

DesignReadResult read_design_records(std::istream& in);
CodeReadResult read_code_records(std::istream& in);
DesignReadResult read_design_file(const std::string& path);
CodeReadResult read_code_file(const std::string& path);

void write_design_record(std::ostream& out, const DesignParams& p, const BitMatrix& incidence);
void write_design_record(std::ostream& out, const Design& d);
void write_code_record(std::ostream& out, const LinearCode& c);

enum class RecordFileKind { design, code, unknown };

/// Decide by the first header line: five integers = design, two = code.
RecordFileKind sniff_record_file(const std::string& path);

}  // namespace pointcode
