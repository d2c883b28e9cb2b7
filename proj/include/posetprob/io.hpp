#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "posetprob/poset.hpp"
#include "posetprob/tableaux.hpp"

namespace posetprob {

// Text format: first line the element count, then one cover edge "u v" per
// line (u below v). Blank lines and '#' comments are skipped.
inline Poset read_poset_text(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        if (n < 0) {
            if (ss >> n) {
                require(n >= 0, errc::parse_error, "negative element count");
                continue;
            }
            ss.clear();
        }
        int u, v;
        if (!(ss >> u)) continue;  // blank line
        require(bool(ss >> v) && n >= 0, errc::parse_error,
                "expected 'u v' cover line, got '" + line + "'");
        edges.emplace_back(u, v);
    }
    require(n >= 0, errc::parse_error, "missing element count line");
    return Poset::from_covers(n, edges);
}

// {"n": int, "covers": [[u,v],...], "labels": [...]} with labels optional.
inline Poset read_poset_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        raise(errc::parse_error, e.what());
    }
    require(j.contains("n") && j["n"].is_number_integer(), errc::parse_error,
            "poset json needs an integer \"n\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.value("covers", nlohmann::json::array())) {
        require(e.is_array() && e.size() == 2, errc::parse_error,
                "covers entries must be [u,v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    for (const auto& l : j.value("labels", nlohmann::json::array()))
        labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
    return Poset::from_covers(j["n"].get<int>(), edges, std::move(labels));
}

inline Poset load_poset(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), errc::parse_error, "cannot open '" + path + "'");
    // sniff: JSON files start with '{'
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\t' || c == '\r') {
        in.get();
        c = in.peek();
    }
    return c == '{' ? read_poset_json(in) : read_poset_text(in);
}

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    std::string token;
    std::istringstream ss{std::string(s)};
    while (std::getline(ss, token, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(token, &pos);
            while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
                ++pos;
            require(pos == token.size(), errc::parse_error, "bad integer '" + token + "'");
            out.push_back(v);
        } catch (const std::logic_error&) {
            raise(errc::parse_error, "bad integer '" + token + "'");
        }
    }
    return out;
}

// "4,3,3"; the empty string is the empty partition.
inline Partition parse_partition(std::string_view s) {
    if (s.empty()) return Partition();
    try {
        return Partition(parse_int_list(s));
    } catch (const Error& e) {
        if (e.code() == errc::invalid_shape)
            raise(errc::parse_error, "not a partition: '" + std::string(s) + "'");
        throw;
    }
}

// "outer/inner", e.g. "7,6/5,2"; "7,6/" and "7,6" both mean inner = empty.
inline SkewShape parse_skew(std::string_view s) {
    size_t slash = s.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition(s), Partition());
    return SkewShape(parse_partition(s.substr(0, slash)),
                     parse_partition(s.substr(slash + 1)));
}

// "(row,col)" or "row,col", one-indexed.
inline Cell parse_cell(std::string_view s) {
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<int> v = parse_int_list(s);
    require(v.size() == 2, errc::parse_error, "cell must be 'row,col'");
    return Cell{v[0], v[1]};
}

}  // namespace posetprob
