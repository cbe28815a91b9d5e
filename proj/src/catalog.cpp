#include "ta/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ta/arrays.hpp"
#include "ta/canonical.hpp"

#ifndef TA_DATA_DIR
#define TA_DATA_DIR "data"
#endif

namespace ta {

std::string data_dir() {
    if (const char* env = std::getenv("TA_DATA_DIR"); env && *env) return env;
    return TA_DATA_DIR;
}

std::string data_path(const std::string& rel) {
    return (std::filesystem::path(data_dir()) / rel).string();
}

namespace {

std::vector<Fixture> parse_manifest() {
    std::vector<Fixture> out;
    std::ifstream in(data_path("fixtures.txt"));
    if (!in) throw std::runtime_error("cannot open fixture manifest " + data_path("fixtures.txt"));
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line.erase(h);
        std::istringstream iss(line);
        Fixture f;
        if (!(iss >> f.id >> f.kind >> f.path >> f.base)) continue;
        std::string kv;
        while (iss >> kv) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) throw std::runtime_error("bad fixture attribute: " + kv);
            f.expect[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        out.push_back(std::move(f));
    }
    return out;
}

const std::vector<Fixture>& manifest() {
    static const std::vector<Fixture> m = parse_manifest();
    return m;
}

} // namespace

std::vector<Fixture> list_fixtures() { return manifest(); }

const Fixture& fixture_info(const std::string& id) {
    for (const auto& f : manifest())
        if (f.id == id) return f;
    throw std::runtime_error("unknown fixture " + id);
}

AnyObject load_fixture(const std::string& id) {
    const Fixture& f = fixture_info(id);
    std::string path = data_path(f.path);
    if (f.kind == "ta") {
        TripleArray t = read_ta_file(path, f.base);
        if (!verify_ta(t)) throw std::runtime_error("fixture " + id + " fails verify_ta");
        return t;
    }
    if (f.kind == "uta") {
        UnorderedTripleArray u = read_uta_file(path, f.base);
        if (!verify_uta(u)) throw std::runtime_error("fixture " + id + " fails verify_uta");
        return u;
    }
    if (f.kind == "design") {
        BlockDesign d = read_design_file(path);
        if (!verify_two_design(d)) throw std::runtime_error("fixture " + id + " fails verify_two_design");
        return d;
    }
    if (f.kind == "resolution") {
        Resolution r = read_resolution_file(path);
        if (!verify_two_design(r.design) || !verify_resolution(r))
            throw std::runtime_error("fixture " + id + " fails verify_resolution");
        return r;
    }
    throw std::runtime_error("fixture " + id + " has unknown kind " + f.kind);
}

TripleArray load_fixture_ta(const std::string& id) { return std::get<TripleArray>(load_fixture(id)); }
UnorderedTripleArray load_fixture_uta(const std::string& id) {
    return std::get<UnorderedTripleArray>(load_fixture(id));
}
BlockDesign load_fixture_design(const std::string& id) { return std::get<BlockDesign>(load_fixture(id)); }
Resolution load_fixture_resolution(const std::string& id) {
    return std::get<Resolution>(load_fixture(id));
}

std::vector<BlockDesign> ingest_designs(const std::string& path,
                                        const std::optional<TwoDesignParams>& expected,
                                        std::vector<std::string>* notes) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<BlockDesign> out;
    std::string line;
    int lineno = 0, record = 0;
    auto next_data_line = [&](std::string& s) {
        while (std::getline(in, line)) {
            ++lineno;
            size_t h = line.find('#');
            if (h != std::string::npos) line.erase(h);
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            s = line;
            return true;
        }
        return false;
    };
    std::map<std::string, int> keys;
    std::string s;
    while (next_data_line(s)) {
        ++record;
        std::istringstream hdr(s);
        int v, b;
        if (!(hdr >> v >> b))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad design header");
        BlockDesign d;
        d.v = v;
        for (int i = 0; i < b; ++i) {
            if (!next_data_line(s))
                throw std::runtime_error(path + ": record " + std::to_string(record) +
                                         ": unexpected end of file");
            std::istringstream bs(s);
            std::vector<int> blk;
            int x;
            while (bs >> x) blk.push_back(x);
            d.blocks.push_back(std::move(blk));
        }
        check_structure(d);
        auto p = verify_two_design(d);
        if (!p)
            throw std::runtime_error(path + ": record " + std::to_string(record) +
                                     " (near line " + std::to_string(lineno) + ") is not a 2-design");
        if (expected && !(*p == *expected))
            throw std::runtime_error(path + ": record " + std::to_string(record) +
                                     " has unexpected parameters");
        auto [it, fresh] = keys.emplace(canonical_key(d), record);
        if (!fresh && notes)
            notes->push_back("record " + std::to_string(record) + " duplicates record " +
                             std::to_string(it->second));
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<std::pair<std::string, Resolution>> load_parades() {
    static const char* labels[] = {"1a", "1b", "7a", "7b", "19a", "19b", "61"};
    std::vector<std::pair<std::string, Resolution>> out;
    for (const char* label : labels) {
        Resolution r = read_resolution_file(data_path(std::string("parades/parade_") + label + ".txt"));
        if (!verify_resolution(r))
            throw std::runtime_error(std::string("parade ") + label + " fails verify_resolution");
        out.push_back({label, std::move(r)});
    }
    return out;
}

} // namespace ta
