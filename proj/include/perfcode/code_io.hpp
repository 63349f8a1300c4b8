#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "perfcode/code.hpp"

namespace perfcode {

class QuaternaryCode;
class Partition;

// Text code files: one word per line over {0,1} (or {0,1,2,3}), an optional " x<k>"
// multiplicity suffix with k >= 2, and '#' comment lines. Blank lines are ignored.
MultisetCode parse_multiset(std::istream& in);
// Rejects multiplicity suffixes.
BinaryCode parse_code(std::istream& in);
QuaternaryCode parse_quaternary(std::istream& in);

MultisetCode read_multiset(const std::filesystem::path& path);
BinaryCode read_code(const std::filesystem::path& path);
QuaternaryCode read_quaternary(const std::filesystem::path& path);

// Canonical form: lexicographic order, header lines emitted as "# <line>".
std::string format_code(const BinaryCode& code, const std::vector<std::string>& header = {});
std::string format_code(const MultisetCode& code, const std::vector<std::string>& header = {});
std::string format_code(const QuaternaryCode& code, const std::vector<std::string>& header = {});

void write_code(const std::filesystem::path& path, const BinaryCode& code, const std::vector<std::string>& header = {});
void write_code(const std::filesystem::path& path, const MultisetCode& code,
                const std::vector<std::string>& header = {});
void write_code(const std::filesystem::path& path, const QuaternaryCode& code,
                const std::vector<std::string>& header = {});

// Partitions: the parts as code files, each introduced by a "## part <k>" line (k from 1).
std::string format_partition(const Partition& partition);
Partition parse_partition(std::istream& in);

// Short stable fingerprint of a code's canonical text, for provenance headers.
std::string fingerprint(const std::string& canonical_text);

}  // namespace perfcode
