#include "hec/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hec {

namespace {

using nlohmann::json;

json poly_json(const Poly& f) {
    json arr = json::array();
    for (int i = 0; i <= std::max(f.deg(), 0); ++i) arr.push_back(f.coeff(i));
    return arr;
}

Poly poly_from_json(const json& arr, const Field& F) {
    std::vector<fe> c;
    for (const auto& x : arr) c.push_back(x.get<fe>());
    return Poly(F, std::move(c));
}

std::string quote_csv(const std::string& s) { return '"' + s + '"'; }

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

}  // namespace

Format format_parse(const std::string& name) {
    if (name == "jsonl") return Format::jsonl;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string record_jsonl(const CurveRecord& c) {
    json row;
    row["genus"] = c.g;
    row["n"] = c.field->n();
    row["q"] = c.field->q();
    row["field_poly"] = c.field->modulus();
    row["v"] = poly_json(c.v);
    row["u"] = poly_json(c.u);
    if (!c.counts.empty()) row["counts"] = c.counts;
    if (!c.weil.empty()) row["weil"] = c.weil;
    if (c.two_rank >= 0) row["two_rank"] = c.two_rank;
    return row.dump();
}

CurveRecord record_from_jsonl(const std::string& line) {
    json row;
    try {
        row = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSONL row: ") + e.what());
    }
    CurveRecord c;
    c.g = row.at("genus").get<int>();
    const int n = row.at("n").get<int>();
    const auto modulus = row.at("field_poly").get<std::uint32_t>();
    c.field = &Field::intern(n, modulus);
    c.v = poly_from_json(row.at("v"), *c.field);
    c.u = poly_from_json(row.at("u"), *c.field);
    if (row.contains("counts")) c.counts = row["counts"].get<std::vector<std::int64_t>>();
    if (row.contains("weil")) c.weil = row["weil"].get<std::vector<std::int64_t>>();
    if (row.contains("two_rank")) c.two_rank = row["two_rank"].get<int>();
    return c;
}

std::string census_csv_header() {
    return "genus,n,q,field_poly,v,u,counts,weil,two_rank";
}

std::string record_csv(const CurveRecord& c) {
    std::ostringstream os;
    os << c.g << ',' << c.field->n() << ',' << c.field->q() << ',' << c.field->modulus()
       << ',' << quote_csv(poly_str(c.v)) << ',' << quote_csv(poly_str(c.u)) << ','
       << quote_csv(join(c.counts)) << ',' << quote_csv(join(c.weil)) << ','
       << (c.two_rank >= 0 ? std::to_string(c.two_rank) : std::string());
    return os.str();
}

CurveRecord record_from_csv(const std::string& line) {
    const auto cols = split_csv(line);
    if (cols.size() != 9) throw std::invalid_argument("bad CSV row: " + line);
    CurveRecord c;
    c.g = std::stoi(cols[0]);
    const int n = std::stoi(cols[1]);
    const auto modulus = static_cast<std::uint32_t>(std::stoul(cols[3]));
    c.field = &Field::intern(n, modulus);
    c.v = poly_parse(*c.field, cols[4]);
    c.u = poly_parse(*c.field, cols[5]);
    c.counts = parse_int_list(cols[6]);
    c.weil = parse_int_list(cols[7]);
    c.two_rank = cols[8].empty() ? -1 : std::stoi(cols[8]);
    return c;
}

void write_census(std::ostream& os, const std::vector<CurveRecord>& records, Format fmt) {
    if (fmt == Format::csv) os << census_csv_header() << '\n';
    for (const auto& c : records)
        os << (fmt == Format::csv ? record_csv(c) : record_jsonl(c)) << '\n';
}

std::vector<CurveRecord> read_census(std::istream& is) {
    std::vector<CurveRecord> out;
    std::string line;
    bool first = true;
    bool csv = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            csv = line[0] != '{';
            first = false;
            if (csv) continue;  // header row
        }
        out.push_back(csv ? record_from_csv(line) : record_from_jsonl(line));
    }
    return out;
}

}  // namespace hec
