#include "qrcss/io.hpp"

#include <fstream>
#include <sstream>

namespace qrcss {

namespace {

// strip comments and surrounding whitespace
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (size_t h = s.find('#'); h != std::string::npos) s.erase(h);
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

BitVector parse_row(const std::string& s, size_t expected_len, size_t line_no) {
    if (expected_len != 0 && s.size() != expected_len)
        throw ParseError(line_no, "ragged row: expected " + std::to_string(expected_len) +
                                      " columns, got " + std::to_string(s.size()));
    BitVector v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw ParseError(line_no, std::string("invalid character '") + s[i] +
                                          "', rows must be 0/1");
    }
    return v;
}

}  // namespace

void write_classical(std::ostream& os, const ClassicalCode& c) {
    os << c.n << ' ' << c.k() << '\n';
    for (size_t i = 0; i < c.generator.rows(); i++) os << c.generator.row(i).to_string() << '\n';
}

ClassicalCode read_classical(std::istream& is, const std::string& label) {
    std::string raw;
    size_t line_no = 0;
    size_t n = 0, k = 0;
    bool have_header = false;
    ClassicalCode code;
    code.generator = BitMatrix();

    while (std::getline(is, raw)) {
        line_no++;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        if (!have_header) {
            std::istringstream hs(s);
            long long hn = -1, hk = -1;
            if (!(hs >> hn >> hk) || hn < 1 || hk < 0)
                throw ParseError(line_no, "expected header 'n k'");
            std::string rest;
            if (hs >> rest) throw ParseError(line_no, "trailing content after header");
            n = size_t(hn);
            k = size_t(hk);
            have_header = true;
            code.n = n;
            code.generator = BitMatrix(0, n);
            continue;
        }
        if (code.generator.rows() == k) throw ParseError(line_no, "more rows than header declares");
        code.generator.append_row(parse_row(s, n, line_no));
    }
    if (!have_header) throw ParseError(line_no ? line_no : 1, "missing header 'n k'");
    if (code.generator.rows() != k)
        throw ParseError(line_no ? line_no : 1,
                         "expected " + std::to_string(k) + " rows, got " +
                             std::to_string(code.generator.rows()));
    code.label = label;
    return code;
}

void write_css(std::ostream& os, const CssCode& q) {
    os << "# [[" << q.n << ',' << q.k << "]] css code";
    if (!q.label.empty()) os << ": " << q.label;
    os << '\n';
    os << "[SX]\n";
    for (size_t i = 0; i < q.sx.rows(); i++) os << q.sx.row(i).to_string() << '\n';
    os << "[SZ]\n";
    for (size_t i = 0; i < q.sz.rows(); i++) os << q.sz.row(i).to_string() << '\n';
    os << "[LX]\n" << q.lx.to_string() << '\n';
    os << "[LZ]\n" << q.lz.to_string() << '\n';
}

CssCode read_css(std::istream& is, const std::string& label) {
    std::string raw;
    size_t line_no = 0;
    size_t n = 0;
    int section = -1;  // 0 SX, 1 SZ, 2 LX, 3 LZ
    bool seen[4] = {false, false, false, false};
    BitMatrix mats[2];
    BitVector logicals[2];
    bool have_logical[2] = {false, false};

    while (std::getline(is, raw)) {
        line_no++;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s == "[SX]")
                section = 0;
            else if (s == "[SZ]")
                section = 1;
            else if (s == "[LX]")
                section = 2;
            else if (s == "[LZ]")
                section = 3;
            else
                throw ParseError(line_no, "unknown section '" + s + "'");
            if (seen[section]) throw ParseError(line_no, "duplicate section '" + s + "'");
            seen[section] = true;
            continue;
        }
        if (section < 0) throw ParseError(line_no, "row before any section header");
        BitVector row = parse_row(s, n, line_no);
        if (n == 0) n = row.size();
        if (section <= 1) {
            if (mats[section].rows() == 0 && mats[section].cols() == 0)
                mats[section] = BitMatrix(0, n);
            mats[section].append_row(std::move(row));
        } else {
            if (have_logical[section - 2])
                throw ParseError(line_no, "logical sections take exactly one row");
            logicals[section - 2] = std::move(row);
            have_logical[section - 2] = true;
        }
    }
    for (int i = 0; i < 4; i++)
        if (!seen[i]) {
            static const char* names[4] = {"[SX]", "[SZ]", "[LX]", "[LZ]"};
            throw ParseError(line_no ? line_no : 1, std::string("missing section ") + names[i]);
        }
    if (!have_logical[0] || !have_logical[1])
        throw ParseError(line_no ? line_no : 1, "logical sections need one row each");

    CssCode q;
    q.n = n;
    q.sx = mats[0].cols() == n ? mats[0] : BitMatrix(0, n);
    q.sz = mats[1].cols() == n ? mats[1] : BitMatrix(0, n);
    q.lx = logicals[0];
    q.lz = logicals[1];
    q.k = q.n - rank(q.sx) - rank(q.sz);  // never trusted from the file
    q.label = label;
    return q;
}

namespace {

template <typename T, typename Reader>
T read_path(const std::string& path, Reader&& rd) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return rd(f);
}

}  // namespace

ClassicalCode read_classical_file(const std::string& path) {
    return read_path<ClassicalCode>(path,
                                    [&](std::istream& is) { return read_classical(is, path); });
}

void write_classical_file(const std::string& path, const ClassicalCode& c) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_classical(f, c);
}

CssCode read_css_file(const std::string& path) {
    return read_path<CssCode>(path, [&](std::istream& is) { return read_css(is, path); });
}

void write_css_file(const std::string& path, const CssCode& q) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_css(f, q);
}

bool sniff_classical(std::istream& is) {
    std::string raw;
    auto pos = is.tellg();
    bool classical = false;
    while (std::getline(is, raw)) {
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        classical = s.front() != '[';
        break;
    }
    is.clear();
    is.seekg(pos);
    return classical;
}

}  // namespace qrcss
