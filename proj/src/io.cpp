#include "ta/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ta {

namespace {

// Reads non-empty lines, skipping '#' comments.
std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(a, b - a + 1));
    }
    return lines;
}

std::vector<int> parse_ints(const std::string& s) {
    std::istringstream iss(s);
    std::vector<int> out;
    long long x;
    while (iss >> x) out.push_back(static_cast<int>(x));
    if (!iss.eof()) throw std::runtime_error("malformed integer line: " + s);
    return out;
}

BlockDesign design_from_lines(const std::vector<std::string>& lines, size_t& pos) {
    if (pos >= lines.size()) throw std::runtime_error("design: missing header");
    auto hdr = parse_ints(lines[pos++]);
    if (hdr.size() != 2) throw std::runtime_error("design: header must be \"v b\"");
    BlockDesign d;
    d.v = hdr[0];
    int b = hdr[1];
    for (int i = 0; i < b; ++i) {
        if (pos >= lines.size()) throw std::runtime_error("design: unexpected end of file");
        d.blocks.push_back(parse_ints(lines[pos++]));
    }
    check_structure(d);
    return d;
}

} // namespace

std::string write_design(const BlockDesign& d) {
    std::ostringstream os;
    os << d.v << ' ' << d.b() << '\n';
    for (const auto& blk : d.blocks) {
        for (size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i];
        os << '\n';
    }
    return os.str();
}

std::string write_resolution(const Resolution& r) {
    std::ostringstream os;
    os << write_design(r.design) << "classes:\n";
    for (const auto& cls : r.classes) {
        for (size_t i = 0; i < cls.size(); ++i) os << (i ? " " : "") << cls[i];
        os << '\n';
    }
    return os.str();
}

std::string write_ta(const TripleArray& t) {
    std::ostringstream os;
    os << t.r << ' ' << t.c << ' ' << t.v << '\n';
    for (int i = 0; i < t.r; ++i) {
        for (int j = 0; j < t.c; ++j) os << (j ? " " : "") << t.at(i, j);
        os << '\n';
    }
    return os.str();
}

std::string write_uta(const UnorderedTripleArray& u) {
    std::ostringstream os;
    os << u.r() << ' ' << u.c() << ' ' << u.v << '\n';
    for (const auto& s : u.row_sets) {
        for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
        os << '\n';
    }
    for (const auto& s : u.col_sets) {
        for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
        os << '\n';
    }
    return os.str();
}

BlockDesign read_design(std::istream& in) {
    auto lines = data_lines(in);
    size_t pos = 0;
    auto d = design_from_lines(lines, pos);
    if (pos != lines.size()) throw std::runtime_error("design: trailing data");
    return d;
}

Resolution read_resolution(std::istream& in) {
    auto lines = data_lines(in);
    size_t pos = 0;
    Resolution r;
    r.design = design_from_lines(lines, pos);
    if (pos >= lines.size() || lines[pos] != "classes:")
        throw std::runtime_error("resolution: missing \"classes:\" section");
    ++pos;
    while (pos < lines.size()) r.classes.push_back(parse_ints(lines[pos++]));
    return r;
}

TripleArray read_ta(std::istream& in, int base) {
    auto lines = data_lines(in);
    if (lines.empty()) throw std::runtime_error("ta: empty file");
    auto hdr = parse_ints(lines[0]);
    if (hdr.size() != 3) throw std::runtime_error("ta: header must be \"r c v\"");
    TripleArray t;
    t.r = hdr[0];
    t.c = hdr[1];
    t.v = hdr[2];
    if (static_cast<int>(lines.size()) != t.r + 1) throw std::runtime_error("ta: wrong row count");
    for (int i = 0; i < t.r; ++i) {
        auto row = parse_ints(lines[i + 1]);
        if (static_cast<int>(row.size()) != t.c) throw std::runtime_error("ta: wrong column count");
        for (int x : row) t.cells.push_back(x - base);
    }
    return t;
}

UnorderedTripleArray read_uta(std::istream& in, int base) {
    auto lines = data_lines(in);
    if (lines.empty()) throw std::runtime_error("uta: empty file");
    auto hdr = parse_ints(lines[0]);
    if (hdr.size() != 3) throw std::runtime_error("uta: header must be \"r c v\"");
    int r = hdr[0], c = hdr[1];
    UnorderedTripleArray u;
    u.v = hdr[2];
    if (static_cast<int>(lines.size()) != r + c + 1) throw std::runtime_error("uta: wrong line count");
    for (int i = 0; i < r + c; ++i) {
        auto s = parse_ints(lines[i + 1]);
        for (int& x : s) x -= base;
        std::sort(s.begin(), s.end());
        if (i < r)
            u.row_sets.push_back(std::move(s));
        else
            u.col_sets.push_back(std::move(s));
    }
    return u;
}

namespace {

template <typename T, typename F>
T from_file(const std::string& path, F reader) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return reader(in);
}

} // namespace

BlockDesign read_design_file(const std::string& path) {
    return from_file<BlockDesign>(path, [](std::istream& in) { return read_design(in); });
}
Resolution read_resolution_file(const std::string& path) {
    return from_file<Resolution>(path, [](std::istream& in) { return read_resolution(in); });
}
TripleArray read_ta_file(const std::string& path, int base) {
    return from_file<TripleArray>(path, [&](std::istream& in) { return read_ta(in, base); });
}
UnorderedTripleArray read_uta_file(const std::string& path, int base) {
    return from_file<UnorderedTripleArray>(path, [&](std::istream& in) { return read_uta(in, base); });
}

AnyObject read_any_file(const std::string& path, int base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string contents = buf.str();

    std::istringstream probe(contents);
    auto lines = data_lines(probe);
    if (lines.empty()) throw std::runtime_error(path + ": empty file");
    bool has_classes = false;
    for (const auto& l : lines)
        if (l == "classes:") has_classes = true;
    auto hdr = parse_ints(lines[0]);

    std::istringstream body(contents);
    if (has_classes) return read_resolution(body);
    if (hdr.size() == 2) return read_design(body);
    if (hdr.size() == 3) {
        int r = hdr[0], c = hdr[1];
        if (static_cast<int>(lines.size()) == r + 1) return read_ta(body, base);
        if (static_cast<int>(lines.size()) == r + c + 1) return read_uta(body, base);
        throw std::runtime_error(path + ": line count matches neither ta nor uta");
    }
    throw std::runtime_error(path + ": unrecognized header");
}

const char* kind_name(const AnyObject& obj) {
    switch (obj.index()) {
        case 0: return "design";
        case 1: return "resolution";
        case 2: return "uta";
        default: return "ta";
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

} // namespace ta
