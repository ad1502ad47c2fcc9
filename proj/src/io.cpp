#include "smp/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smp {

namespace {

using nlohmann::json;

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::string current;
    std::istringstream in{std::string(text)};
    while (std::getline(in, current)) {
        ++number;
        if (!current.empty() && current.back() == '\r')
            current.pop_back();
        auto first = current.find_first_not_of(" \t");
        if (first == std::string::npos || current[first] == '#')
            continue;
        lines.push_back({number, current});
    }
    return lines;
}

std::vector<int> parse_pref_list(const Line& line, std::string_view label, int expected_person,
                                 int n) {
    std::istringstream in{line.text};
    std::string tag;
    int person = 0;
    in >> tag >> person;
    if (in.fail())
        throw ParseError(line.number, "expected \"" + std::string(label) + " <index>: ...\"");
    char colon = 0;
    in >> colon;
    if (colon != ':')
        throw ParseError(line.number, "expected ':' after person index");
    if (person != expected_person)
        throw ParseError(line.number, std::string(label) + " " + std::to_string(person) +
                                          " out of order; expected " + std::string(label) + " " +
                                          std::to_string(expected_person));
    std::vector<int> list;
    int value = 0;
    while (in >> value)
        list.push_back(value - 1);
    if (!in.eof())
        throw ParseError(line.number, "non-numeric entry in preference list");
    if (static_cast<int>(list.size()) != n)
        throw ParseError(line.number, "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(list.size()));
    std::vector<char> seen(n, 0);
    for (int x : list) {
        if (x < 0 || x >= n)
            throw ParseError(line.number,
                             "entry " + std::to_string(x + 1) + " outside 1.." + std::to_string(n));
        if (seen[x])
            throw ParseError(line.number, "duplicate entry " + std::to_string(x + 1));
        seen[x] = 1;
    }
    return list;
}

Profile parse_profile_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("n") || !doc.contains("men") || !doc.contains("women"))
        throw ParseError(0, "JSON profile requires fields n, men, women");
    const int n = doc["n"].get<int>();
    auto read_side = [&](const char* key) {
        std::vector<std::vector<int>> lists;
        for (const auto& row : doc[key]) {
            std::vector<int> list;
            for (const auto& v : row)
                list.push_back(v.get<int>() - 1);
            lists.push_back(std::move(list));
        }
        return lists;
    };
    auto men = read_side("men");
    auto women = read_side("women");
    if (static_cast<int>(men.size()) != n || static_cast<int>(women.size()) != n)
        throw ParseError(0, "JSON profile: list counts do not match n");
    try {
        return Profile(std::move(men), std::move(women));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace

Profile parse_profile(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError(0, "empty profile");
    if (text[first] == '{')
        return parse_profile_json(text);

    auto lines = content_lines(text);
    if (lines.empty())
        throw ParseError(0, "empty profile");
    std::size_t at = 0;
    const Line& header = lines[at++];
    int n = 0;
    if (std::sscanf(header.text.c_str(), " n = %d", &n) != 1 &&
        std::sscanf(header.text.c_str(), " n=%d", &n) != 1)
        throw ParseError(header.number, "expected header \"n=<int>\"");
    if (n <= 0)
        throw ParseError(header.number, "n must be positive");

    std::vector<std::vector<int>> men, women;
    for (int i = 0; i < n; ++i) {
        if (at >= lines.size())
            throw ParseError(lines.back().number, "missing list for m " + std::to_string(i + 1));
        if (lines[at].text.find_first_not_of(" \t") == std::string::npos ||
            lines[at].text[lines[at].text.find_first_not_of(" \t")] != 'm')
            throw ParseError(lines[at].number, "expected a men's list (\"m <i>: ...\")");
        men.push_back(parse_pref_list(lines[at], "m", i + 1, n));
        ++at;
    }
    for (int i = 0; i < n; ++i) {
        if (at >= lines.size())
            throw ParseError(lines.back().number, "missing list for w " + std::to_string(i + 1));
        if (lines[at].text[lines[at].text.find_first_not_of(" \t")] != 'w')
            throw ParseError(lines[at].number, "expected a women's list (\"w <i>: ...\")");
        women.push_back(parse_pref_list(lines[at], "w", i + 1, n));
        ++at;
    }
    if (at != lines.size())
        throw ParseError(lines[at].number, "unexpected trailing content");
    try {
        return Profile(std::move(men), std::move(women));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_profile(const Profile& p) {
    std::ostringstream out;
    out << "n=" << p.size() << "\n";
    auto emit = [&](char tag, const std::vector<std::vector<int>>& lists) {
        for (std::size_t i = 0; i < lists.size(); ++i) {
            out << tag << ' ' << i + 1 << ':';
            for (int x : lists[i])
                out << ' ' << x + 1;
            out << "\n";
        }
    };
    emit('m', p.men_prefs());
    emit('w', p.women_prefs());
    return out.str();
}

std::string profile_to_json(const Profile& p) {
    json doc;
    doc["n"] = p.size();
    auto side = [&](const std::vector<std::vector<int>>& lists) {
        json rows = json::array();
        for (const auto& list : lists) {
            json row = json::array();
            for (int x : list)
                row.push_back(x + 1);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["men"] = side(p.men_prefs());
    doc["women"] = side(p.women_prefs());
    return doc.dump();
}

std::string format_matching(const Matching& mu) {
    std::ostringstream out;
    for (int m = 0; m < mu.size(); ++m) {
        if (m)
            out << ' ';
        out << "(m" << m + 1 << ",w" << mu.wife_of(m) + 1 << ")";
    }
    return out.str();
}

std::string matching_to_json(const Matching& mu) {
    json pairs = json::array();
    for (int m = 0; m < mu.size(); ++m)
        pairs.push_back(json::array({m + 1, mu.wife_of(m) + 1}));
    return json{{"pairs", pairs}}.dump();
}

Matching matching_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("pairs"))
        throw ParseError(0, "JSON matching requires field pairs");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& pr : doc["pairs"])
        pairs.emplace_back(pr.at(0).get<int>() - 1, pr.at(1).get<int>() - 1);
    std::vector<int> wife(pairs.size(), -1);
    for (auto [m, w] : pairs) {
        if (m < 0 || m >= static_cast<int>(wife.size()) || wife[m] != -1)
            throw ParseError(0, "JSON matching: pairs do not form a bijection");
        wife[m] = w;
    }
    try {
        return Matching(std::move(wife));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace smp
