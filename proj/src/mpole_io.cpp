#include "mp/mpole_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "nlohmann/json.hpp"

namespace mp {

Multipole parse_mpole(std::istream& in) {
    Multipole m;
    bool have_vertices = false;
    std::map<int, int> open_pairs;  // tag -> semiedge index awaiting a partner
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream iss(line);
        std::string word;
        if (!(iss >> word)) continue;
        auto read_int = [&](int& out) {
            if (!(iss >> out)) throw ParseError(line_no, "expected an integer");
        };
        auto check_vertex = [&](int v) {
            if (!have_vertices) throw ParseError(line_no, "`vertices` must come first");
            if (v < 0 || v >= m.vertex_count)
                throw ParseError(line_no, "vertex index out of range");
        };
        if (word == "vertices") {
            if (have_vertices) throw ParseError(line_no, "duplicate `vertices` line");
            read_int(m.vertex_count);
            if (m.vertex_count < 0) throw ParseError(line_no, "negative vertex count");
            have_vertices = true;
        } else if (word == "edge") {
            int u, v;
            read_int(u);
            read_int(v);
            check_vertex(u);
            check_vertex(v);
            if (u == v) throw ParseError(line_no, "loop edge");
            m.edges.emplace_back(u, v);
        } else if (word == "semi") {
            int u;
            read_int(u);
            check_vertex(u);
            m.semiedges.push_back(Semiedge::attached(u));
        } else if (word == "free") {
            if (!have_vertices) throw ParseError(line_no, "`vertices` must come first");
            int base = m.m();
            m.semiedges.push_back(Semiedge::free_paired(base + 1));
            m.semiedges.push_back(Semiedge::free_paired(base));
        } else if (word == "pair") {
            if (!have_vertices) throw ParseError(line_no, "`vertices` must come first");
            int tag;
            read_int(tag);
            int index = m.m();
            if (auto it = open_pairs.find(tag); it != open_pairs.end()) {
                m.semiedges.push_back(Semiedge::free_paired(it->second));
                m.semiedges[it->second] = Semiedge::free_paired(index);
                open_pairs.erase(it);
            } else {
                open_pairs[tag] = index;
                m.semiedges.push_back(Semiedge::free_paired(-1));
            }
        } else {
            throw ParseError(line_no, "unknown directive `" + word + "`");
        }
        std::string extra;
        if (iss >> extra) throw ParseError(line_no, "trailing tokens");
    }
    if (!have_vertices) throw ParseError(line_no, "missing `vertices` line");
    if (!open_pairs.empty())
        throw ParseError(line_no, "unmatched `pair` tag " +
                                      std::to_string(open_pairs.begin()->first));
    auto violations = validate(m);
    if (!violations.empty()) throw ParseError(line_no, violations.front());
    return m;
}

Multipole parse_mpole_text(const std::string& text) {
    std::istringstream iss(text);
    return parse_mpole(iss);
}

void write_mpole(std::ostream& out, const Multipole& m) {
    out << "vertices " << m.vertex_count << "\n";
    for (const Edge& e : m.edges) out << "edge " << e.u << " " << e.v << "\n";
    int next_tag = 0;
    std::map<int, int> tags;  // semiedge index -> assigned pair tag
    for (int i = 0; i < m.m(); ++i) {
        const Semiedge& s = m.semiedges[i];
        if (s.kind == SemiKind::Attached) {
            out << "semi " << s.ref << "\n";
        } else if (s.ref == i + 1) {
            out << "free\n";
            ++i;  // partner handled
        } else if (auto it = tags.find(i); it != tags.end()) {
            out << "pair " << it->second << "\n";
        } else {
            tags[s.ref] = next_tag;
            out << "pair " << next_tag << "\n";
            ++next_tag;
        }
    }
}

std::string write_mpole_text(const Multipole& m) {
    std::ostringstream oss;
    write_mpole(oss, m);
    return oss.str();
}

std::string stateset_text(const StateSet& set) {
    std::string out;
    for (PackedState s : set.states) {
        out += state_to_string(s, set.m);
        out += "\n";
    }
    return out;
}

std::string stateset_json(const StateSet& set) {
    nlohmann::json j;
    j["m"] = set.m;
    j["count"] = set.count();
    j["states"] = set.to_strings();
    return j.dump();
}

}  // namespace mp
