#include "sphm/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sphm {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

int parse_int(const std::string& token, int line_no, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ParseError(line_no, std::string(what) + ": '" + token + "' is not a number");
    }
    if (used != token.size())
        throw ParseError(line_no, std::string(what) + ": '" + token + "' is not a number");
    return value;
}

std::vector<int> parse_labels(const std::vector<std::string>& tokens, std::size_t from,
                              int expected, int line_no, const char* what) {
    if (static_cast<int>(tokens.size() - from) != expected)
        throw ParseError(line_no, std::string(what) + " must list exactly " +
                             std::to_string(expected) + " resources");
    std::vector<int> labels;
    labels.reserve(expected);
    for (std::size_t k = from; k < tokens.size(); ++k)
        labels.push_back(parse_int(tokens[k], line_no, what));
    return labels;
}

}  // namespace

RawInstance parse_raw(std::istream& in) {
    RawInstance raw;
    bool have_n = false, have_axis = false, have_endow = false;
    std::vector<bool> have_pref;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const std::vector<std::string> tokens = tokenize(line);
        const std::string& directive = tokens[0];

        if (directive == "n") {
            if (have_n) throw ParseError(line_no, "duplicate 'n' directive");
            if (tokens.size() != 2)
                throw ParseError(line_no, "'n' takes exactly one number");
            raw.n = parse_int(tokens[1], line_no, "n");
            if (raw.n < 1) throw ParseError(line_no, "n must be at least 1");
            have_n = true;
            raw.preferences.resize(raw.n);
            have_pref.assign(raw.n, false);
            continue;
        }
        if (!have_n)
            throw ParseError(line_no, "'n' must come before '" + directive + "'");

        if (directive == "axis") {
            if (have_axis) throw ParseError(line_no, "duplicate 'axis' directive");
            raw.axis = parse_labels(tokens, 1, raw.n, line_no, "axis");
            have_axis = true;
        } else if (directive == "pref") {
            if (tokens.size() < 2 || tokens[1].size() < 2 || tokens[1].back() != ':')
                throw ParseError(line_no, "expected 'pref <agent>:'");
            const int agent =
                parse_int(tokens[1].substr(0, tokens[1].size() - 1), line_no, "pref agent");
            if (agent < 1 || agent > raw.n)
                throw ParseError(line_no, "pref agent " + std::to_string(agent) +
                                     " is out of range 1.." + std::to_string(raw.n));
            if (have_pref[agent - 1])
                throw ParseError(line_no,
                                 "duplicate 'pref " + std::to_string(agent) + ":'");
            raw.preferences[agent - 1] =
                parse_labels(tokens, 2, raw.n, line_no, "pref");
            have_pref[agent - 1] = true;
        } else if (directive == "endow") {
            if (have_endow) throw ParseError(line_no, "duplicate 'endow' directive");
            raw.endowment = parse_labels(tokens, 1, raw.n, line_no, "endow");
            have_endow = true;
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    if (!have_n) throw ParseError(line_no, "missing 'n' directive");
    if (!have_axis) throw ParseError(line_no, "missing 'axis' directive");
    if (!have_endow) throw ParseError(line_no, "missing 'endow' directive");
    for (int a = 0; a < raw.n; ++a)
        if (!have_pref[a])
            throw ParseError(line_no, "missing 'pref " + std::to_string(a + 1) + ":'");
    return raw;
}

Instance parse_instance(std::istream& in, ValidateOptions options) {
    return validate(parse_raw(in), options);
}

Instance parse_instance(const std::string& text, ValidateOptions options) {
    std::istringstream in(text);
    return parse_instance(in, options);
}

void write_instance(std::ostream& out, const Instance& instance) {
    const int n = instance.n();
    out << "n " << n << '\n';
    out << "axis";
    for (int p = 0; p < n; ++p) out << ' ' << instance.axis().at(p) + 1;
    out << '\n';
    for (Agent a = 0; a < n; ++a) {
        out << "pref " << a + 1 << ':';
        for (Resource r : instance.preference(a).ranking()) out << ' ' << r + 1;
        out << '\n';
    }
    out << "endow";
    for (Agent a = 0; a < n; ++a) out << ' ' << instance.endowment().of_agent(a) + 1;
    out << '\n';
}

std::string serialize(const Instance& instance) {
    std::ostringstream out;
    write_instance(out, instance);
    return out.str();
}

}  // namespace sphm
