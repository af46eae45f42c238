#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hec/curve.hpp"

namespace hec {

enum class Format { jsonl, csv };

Format format_parse(const std::string& name);  // throws std::invalid_argument

/* Census file formats. One JSONL row per curve:
     {"genus":3,"n":1,"q":2,"field_poly":3,"v":[1],"u":[0,...,1],
      "counts":[3,5,3],"weil":[0,0,-2],"two_rank":0}
   with field elements as the decimal integers of their bit encodings
   and field_poly the bit-encoded modulus. The CSV variant flattens the
   same fields under a header row, quoting the comma-joined lists. */
std::string record_jsonl(const CurveRecord& c);
CurveRecord record_from_jsonl(const std::string& line);

std::string census_csv_header();
std::string record_csv(const CurveRecord& c);
CurveRecord record_from_csv(const std::string& line);

void write_census(std::ostream& os, const std::vector<CurveRecord>& records, Format fmt);
/// Autodetects the format from the first line.
std::vector<CurveRecord> read_census(std::istream& is);

}  // namespace hec
