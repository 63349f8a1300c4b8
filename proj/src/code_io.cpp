#include "perfcode/code_io.hpp"

#include <boost/crc.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "perfcode/errors.hpp"
#include "perfcode/partition.hpp"
#include "perfcode/quaternary.hpp"

namespace perfcode {

namespace {

struct RawLine {
    std::size_t line;
    std::string word;
    std::uint32_t multiplicity;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Reads word lines until EOF or, when `stop_at_part` is set, until a "## part" line, which is
// left unconsumed in `pending`.
std::vector<RawLine> read_lines(std::istream& in, char max_digit, std::size_t& line_no,
                                std::optional<std::string>* pending = nullptr) {
    std::vector<RawLine> out;
    std::string text;
    int length = -1;
    while (std::getline(in, text)) {
        ++line_no;
        const auto line = trim(text);
        if (line.empty()) continue;
        if (pending != nullptr && line.starts_with("## part")) {
            *pending = std::string(line);
            break;
        }
        if (line.front() == '#') continue;

        std::string_view word = line;
        std::uint32_t multiplicity = 1;
        if (const auto space = line.find_first_of(" \t"); space != std::string_view::npos) {
            word = line.substr(0, space);
            const auto suffix = trim(line.substr(space));
            if (suffix.size() < 2 || suffix.front() != 'x') {
                throw ParseError(line_no, "expected multiplicity suffix \" x<k>\"");
            }
            const auto digits = suffix.substr(1);
            const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), multiplicity);
            if (ec != std::errc{} || end != digits.data() + digits.size()) {
                throw ParseError(line_no, "malformed multiplicity \"" + std::string(suffix) + "\"");
            }
            if (multiplicity < 2) throw ParseError(line_no, "multiplicity must be at least 2");
        }
        for (const char c : word) {
            if (c < '0' || c > max_digit) {
                throw ParseError(line_no, "invalid character '" + std::string(1, c) + "' in word");
            }
        }
        if (length < 0) {
            length = static_cast<int>(word.size());
        } else if (static_cast<int>(word.size()) != length) {
            throw ParseError(line_no, "word length " + std::to_string(word.size()) + " differs from " +
                                          std::to_string(length));
        }
        out.push_back({line_no, std::string(word), multiplicity});
    }
    return out;
}

MultisetCode to_multiset(const std::vector<RawLine>& lines, bool allow_multiplicity) {
    const int n = static_cast<int>(lines.front().word.size());
    if (n < 1 || n > kMaxBinaryLength) {
        throw ParseError(lines.front().line, "word length must be between 1 and " + std::to_string(kMaxBinaryLength));
    }
    std::vector<MultisetCode::Entry> entries;
    std::map<std::uint64_t, std::size_t> seen;
    for (const auto& raw : lines) {
        if (!allow_multiplicity && raw.multiplicity != 1) {
            throw ParseError(raw.line, "multiplicities are not allowed in a set code");
        }
        const auto w = BinaryWord::parse(raw.word);
        if (!allow_multiplicity && !seen.emplace(w.bits(), raw.line).second) {
            throw ParseError(raw.line, "duplicate word " + raw.word);
        }
        entries.push_back({w.bits(), raw.multiplicity});
    }
    return {n, std::move(entries)};
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return in;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_header(std::ostringstream& os, const std::vector<std::string>& header) {
    for (const auto& line : header) os << "# " << line << '\n';
}

}  // namespace

MultisetCode parse_multiset(std::istream& in) {
    std::size_t line_no = 0;
    const auto lines = read_lines(in, '1', line_no);
    if (lines.empty()) throw ParseError(0, "empty code");
    return to_multiset(lines, true);
}

BinaryCode parse_code(std::istream& in) {
    std::size_t line_no = 0;
    const auto lines = read_lines(in, '1', line_no);
    if (lines.empty()) throw ParseError(0, "empty code");
    return to_multiset(lines, false).support();
}

QuaternaryCode parse_quaternary(std::istream& in) {
    std::size_t line_no = 0;
    const auto lines = read_lines(in, '3', line_no);
    if (lines.empty()) throw ParseError(0, "empty code");
    const int m = static_cast<int>(lines.front().word.size());
    if (m < 1 || m > kMaxQuaternaryLength) {
        throw ParseError(lines.front().line, "word length must be between 1 and " + std::to_string(kMaxQuaternaryLength));
    }
    std::vector<std::uint64_t> packed;
    std::map<std::uint64_t, std::size_t> seen;
    for (const auto& raw : lines) {
        if (raw.multiplicity != 1) throw ParseError(raw.line, "multiplicities are not allowed in a quaternary code");
        const auto w = QuaternaryWord::parse(raw.word);
        if (!seen.emplace(w.packed(), raw.line).second) throw ParseError(raw.line, "duplicate word " + raw.word);
        packed.push_back(w.packed());
    }
    return {m, std::move(packed)};
}

MultisetCode read_multiset(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_multiset(in);
}

BinaryCode read_code(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_code(in);
}

QuaternaryCode read_quaternary(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_quaternary(in);
}

std::string format_code(const BinaryCode& code, const std::vector<std::string>& header) {
    std::ostringstream os;
    emit_header(os, header);
    for (const auto w : code.words()) os << w.to_string() << '\n';
    return os.str();
}

std::string format_code(const MultisetCode& code, const std::vector<std::string>& header) {
    std::ostringstream os;
    emit_header(os, header);
    for (std::size_t i = 0; i < code.distinct_size(); ++i) {
        os << code.word(i).to_string();
        if (const auto k = code.entries()[i].multiplicity; k > 1) os << " x" << k;
        os << '\n';
    }
    return os.str();
}

std::string format_code(const QuaternaryCode& code, const std::vector<std::string>& header) {
    std::ostringstream os;
    emit_header(os, header);
    for (const auto w : code.words()) os << w.to_string() << '\n';
    return os.str();
}

void write_code(const std::filesystem::path& path, const BinaryCode& code, const std::vector<std::string>& header) {
    write_text(path, format_code(code, header));
}

void write_code(const std::filesystem::path& path, const MultisetCode& code, const std::vector<std::string>& header) {
    write_text(path, format_code(code, header));
}

void write_code(const std::filesystem::path& path, const QuaternaryCode& code,
                const std::vector<std::string>& header) {
    write_text(path, format_code(code, header));
}

std::string format_partition(const Partition& partition) {
    std::ostringstream os;
    for (std::size_t k = 0; k < partition.part_count(); ++k) {
        os << "## part " << k + 1 << '\n' << format_code(partition.part(k));
    }
    return os.str();
}

Partition parse_partition(std::istream& in) {
    std::size_t line_no = 0;
    std::optional<std::string> pending;
    auto leading = read_lines(in, '1', line_no, &pending);
    if (!leading.empty()) throw ParseError(leading.front().line, "word before the first \"## part\" line");
    if (!pending) throw ParseError(0, "no parts");
    std::vector<BinaryCode> parts;
    while (pending) {
        const std::size_t header_line = line_no;
        const std::string expected = "## part " + std::to_string(parts.size() + 1);
        if (*pending != expected) throw ParseError(header_line, "expected \"" + expected + "\"");
        pending.reset();
        const auto lines = read_lines(in, '1', line_no, &pending);
        if (lines.empty()) throw ParseError(header_line, "empty part");
        parts.push_back(to_multiset(lines, false).support());
        if (parts.back().length() != parts.front().length()) {
            throw ParseError(lines.front().line, "parts have different word lengths");
        }
    }
    return {parts.front().length(), std::move(parts)};
}

std::string fingerprint(const std::string& canonical_text) {
    boost::crc_32_type crc;
    crc.process_bytes(canonical_text.data(), canonical_text.size());
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
    return buf;
}

}  // namespace perfcode
