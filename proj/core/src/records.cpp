#include "pointcode/records.hpp"

#include <fstream>
#include <sstream>

namespace pointcode {

namespace {

struct Line {
    std::string text;
    size_t number;
};

// Raw record: header line plus following matrix lines, comments stripped.
struct RawRecord {
    std::vector<Line> lines;
};

std::vector<RawRecord> split_records(std::istream& in) {
    std::vector<RawRecord> out;
    RawRecord cur;
    std::string text;
    size_t lineno = 0;
    while (std::getline(in, text)) {
        ++lineno;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        bool blank = text.find_first_not_of(" \t") == std::string::npos;
        if (blank) {
            if (!cur.lines.empty()) out.push_back(std::move(cur));
            cur = RawRecord{};
            continue;
        }
        if (text[0] == '#') continue;
        cur.lines.push_back({text, lineno});
    }
    if (!cur.lines.empty()) out.push_back(std::move(cur));
    return out;
}

bool parse_ints(const std::string& s, std::vector<uint64_t>& out) {
    out.clear();
    std::istringstream is(s);
    uint64_t x;
    while (is >> x) out.push_back(x);
    std::string rest;
    if (is.fail() && !is.eof()) return false;
    return !out.empty();
}

BitMatrix parse_matrix(const std::vector<Line>& lines, size_t first, size_t nrows,
                       size_t ncols) {
    if (lines.size() - first != nrows)
        throw ParseError("expected " + std::to_string(nrows) + " matrix rows, found " +
                         std::to_string(lines.size() - first));
    BitMatrix m(0, static_cast<uint32_t>(ncols));
    for (size_t i = 0; i < nrows; ++i) {
        const Line& l = lines[first + i];
        if (l.text.size() != ncols)
            throw ParseError("line " + std::to_string(l.number) + ": row has " +
                             std::to_string(l.text.size()) + " characters, expected " +
                             std::to_string(ncols));
        try {
            m.append_row(BitVector::from_string(l.text));
        } catch (const ParseError&) {
            throw ParseError("line " + std::to_string(l.number) +
                             ": row may contain only '0' and '1'");
        }
    }
    return m;
}

}  // namespace

DesignReadResult read_design_records(std::istream& in) {
    DesignReadResult res;
    for (RawRecord& raw : split_records(in)) {
        const Line& head = raw.lines.front();
        try {
            std::vector<uint64_t> h;
            if (!parse_ints(head.text, h) || h.size() != 5)
                throw ParseError("line " + std::to_string(head.number) +
                                 ": design header must be \"v b r k lambda\"");
            DesignRecord rec;
            rec.v = static_cast<uint32_t>(h[0]);
            rec.b = static_cast<uint32_t>(h[1]);
            rec.r = static_cast<uint32_t>(h[2]);
            rec.k = static_cast<uint32_t>(h[3]);
            rec.lambda = static_cast<uint32_t>(h[4]);
            rec.line = head.number;
            rec.incidence = parse_matrix(raw.lines, 1, rec.v, rec.b);
            res.records.push_back(std::move(rec));
        } catch (const ParseError& e) {
            res.issues.push_back({head.number, e.what()});
        }
    }
    return res;
}

CodeReadResult read_code_records(std::istream& in) {
    CodeReadResult res;
    for (RawRecord& raw : split_records(in)) {
        const Line& head = raw.lines.front();
        try {
            std::vector<uint64_t> h;
            if (!parse_ints(head.text, h) || h.size() != 2)
                throw ParseError("line " + std::to_string(head.number) +
                                 ": code header must be \"n k\"");
            CodeRecord rec;
            rec.n = static_cast<uint32_t>(h[0]);
            rec.k = static_cast<uint32_t>(h[1]);
            rec.line = head.number;
            rec.rows = parse_matrix(raw.lines, 1, rec.k, rec.n);
            res.records.push_back(std::move(rec));
        } catch (const ParseError& e) {
            res.issues.push_back({head.number, e.what()});
        }
    }
    return res;
}

DesignReadResult read_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_design_records(in);
}

CodeReadResult read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_code_records(in);
}

void write_design_record(std::ostream& out, const DesignParams& p, const BitMatrix& incidence) {
    out << p.v << ' ' << p.b << ' ' << p.r << ' ' << p.block_size << ' ' << p.lambda << '\n';
    for (const std::string& row : incidence.to_strings()) out << row << '\n';
    out << '\n';
}

void write_design_record(std::ostream& out, const Design& d) {
    write_design_record(out, d.params(), d.incidence());
}

void write_code_record(std::ostream& out, const LinearCode& c) {
    out << c.length() << ' ' << c.dimension() << '\n';
    for (const std::string& row : c.generator().to_strings()) out << row << '\n';
    out << '\n';
}

RecordFileKind sniff_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string text;
    while (std::getline(in, text)) {
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.empty() || text[0] == '#' ||
            text.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::vector<uint64_t> h;
        if (!parse_ints(text, h)) return RecordFileKind::unknown;
        if (h.size() == 5) return RecordFileKind::design;
        if (h.size() == 2) return RecordFileKind::code;
        return RecordFileKind::unknown;
    }
    return RecordFileKind::unknown;
}

}  // namespace pointcode
