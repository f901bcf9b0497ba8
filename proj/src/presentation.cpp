#include "artin/presentation.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "artin/errors.hpp"
#include "artin/parse.hpp"

namespace artin {

namespace {

struct Section {
    std::string text;
    int line = 1;  // position of the first value character
    int col = 1;
    bool present = false;
};

struct Sections {
    std::map<std::string, Section> by_key;

    const Section& require(const std::string& key) const {
        auto it = by_key.find(key);
        if (it == by_key.end() || !it->second.present)
            throw parse_error("missing required block '" + key + ":'", 1, 1);
        return it->second;
    }
    bool has(const std::string& key) const {
        auto it = by_key.find(key);
        return it != by_key.end() && it->second.present;
    }
};

const std::vector<std::string> kKnownKeys = {"ring",   "weights", "char",
                                             "ideal",  "bextra",  "iota",
                                             "aring",  "aweights", "aideal"};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Sections split_sections(const std::string& text) {
    Sections out;
    std::istringstream in(text);
    std::string line;
    std::string current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            if (!current.empty()) out.by_key[current].text += "\n";
            continue;
        }
        std::size_t colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        bool is_key = colon != std::string::npos &&
                      std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
        if (is_key) {
            Section& sec = out.by_key[key];
            if (sec.present)
                throw parse_error("duplicate block '" + key + ":'", lineno,
                                  static_cast<int>(colon) + 1);
            sec.present = true;
            sec.line = lineno;
            sec.col = static_cast<int>(colon) + 2;
            sec.text = line.substr(colon + 1);
            current = key;
        } else {
            if (current.empty())
                throw parse_error("expected a 'key:' block header", lineno, 1);
            out.by_key[current].text += "\n" + line;
        }
    }
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string last = trim(cur);
    if (!last.empty() || !out.empty()) out.push_back(last);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

WeightedRing ring_from_sections(const Sections& s, const std::string& ring_key,
                                const std::string& weights_key, const FieldSpec& field) {
    const Section& rs = s.require(ring_key);
    std::vector<std::string> names = split_csv(rs.text);
    if (names.empty()) throw parse_error("empty variable list", rs.line, rs.col);
    for (const auto& nm : names) {
        if (nm.empty()) throw parse_error("empty variable name", rs.line, rs.col);
        if (!std::isalpha(static_cast<unsigned char>(nm[0])) && nm[0] != '_')
            throw parse_error("bad variable name '" + nm + "'", rs.line, rs.col);
        for (char c : nm)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw parse_error("bad variable name '" + nm + "'", rs.line, rs.col);
    }
    std::vector<std::int32_t> weights(names.size(), 1);
    if (s.has(weights_key)) {
        const Section& ws = s.by_key.at(weights_key);
        std::vector<std::string> ww = split_csv(ws.text);
        if (ww.size() != names.size())
            throw parse_error("expected " + std::to_string(names.size()) + " weights",
                              ws.line, ws.col);
        for (std::size_t i = 0; i < ww.size(); ++i) {
            try {
                weights[i] = static_cast<std::int32_t>(std::stol(ww[i]));
            } catch (...) {
                throw parse_error("bad weight '" + ww[i] + "'", ws.line, ws.col);
            }
            if (weights[i] < 1)
                throw parse_error("weights must be positive", ws.line, ws.col);
        }
    }
    return WeightedRing(std::move(names), std::move(weights), field);
}

FieldSpec field_from_sections(const Sections& s) {
    if (!s.has("char")) return FieldSpec::rationals();
    const Section& cs = s.by_key.at("char");
    std::string t = trim(cs.text);
    try {
        long p = std::stol(t);
        if (p == 0) return FieldSpec::rationals();
        return FieldSpec::prime(static_cast<std::uint64_t>(p));
    } catch (const semantic_error&) {
        throw;
    } catch (...) {
        throw parse_error("bad characteristic '" + t + "'", cs.line, cs.col);
    }
}

std::vector<Polynomial> polys_from_section(const Sections& s, const std::string& key,
                                           const WeightedRing& ring) {
    const Section& sec = s.require(key);
    return parse_polynomial_list(ring, sec.text, sec.line, sec.col);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

PresentationFile parse_presentation(const std::string& text) {
    Sections s = split_sections(text);
    FieldSpec field = field_from_sections(s);
    WeightedRing ring = ring_from_sections(s, "ring", "weights", field);
    std::vector<Polynomial> ideal = polys_from_section(s, "ideal", ring);
    return PresentationFile{std::move(ring), std::move(ideal)};
}

PresentationFile load_presentation(const std::string& path) {
    return parse_presentation(slurp(path));
}

ExtensionFile parse_extension(const std::string& text) {
    Sections s = split_sections(text);
    FieldSpec field = field_from_sections(s);
    WeightedRing ring = ring_from_sections(s, "ring", "weights", field);
    WeightedRing a_ring = ring_from_sections(s, "aring", "aweights", field);
    return ExtensionFile{ring,
                         polys_from_section(s, "ideal", ring),
                         polys_from_section(s, "bextra", ring),
                         polys_from_section(s, "iota", ring),
                         a_ring,
                         polys_from_section(s, "aideal", a_ring)};
}

ExtensionFile load_extension(const std::string& path) {
    return parse_extension(slurp(path));
}

}  // namespace artin
