#include "clm/group_spec.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace clm {

Perm parse_perm_word(const std::string& text, int degree) {
    Perm acc(degree);
    std::iota(acc.begin(), acc.end(), 0);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (text.substr(i) == "id") return acc;
    bool any = false;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in permutation: " + text);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
            if (text[i] == ')') { ++i; break; }
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw ParseError("expected point in cycle: " + text);
            int pt = std::stoi(text.substr(i, j - i));
            if (pt < 1 || pt > degree)
                throw ParseError("cycle point out of range: " + text);
            cycle.push_back(pt - 1);
            i = j;
            skip_ws();
            if (i < text.size() && text[i] == ',') ++i;
        }
        any = true;
        if (cycle.size() >= 2) {
            Perm c(degree);
            std::iota(c.begin(), c.end(), 0);
            for (std::size_t k = 0; k < cycle.size(); ++k)
                c[cycle[k]] = cycle[(k + 1) % cycle.size()];
            acc = perm_compose(acc, c);
        }
        skip_ws();
    }
    if (!any && text.find('(') == std::string::npos)
        throw ParseError("empty permutation word: " + text);
    return acc;
}

std::string perm_to_string(const Perm& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << (j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out << ')';
    }
    return any ? out.str() : "()";
}

Subgroup GroupSpecDoc::subgroup(const std::string& name) const {
    for (const auto& [n, gens] : subgroup_gens) {
        if (n != name) continue;
        std::vector<int> ids;
        for (const Perm& p : gens) {
            auto id = group->find_perm(p);
            if (!id) throw ParseError("subgroup generator not in group: " + name);
            ids.push_back(*id);
        }
        return subgroup_closure(*group, ids);
    }
    throw ParseError("no subgroup named '" + name + "' in group " + group->name());
}

std::vector<std::string> GroupSpecDoc::subgroup_names() const {
    std::vector<std::string> out;
    for (const auto& [n, gens] : subgroup_gens) out.push_back(n);
    return out;
}

GroupSpecDoc parse_group_spec(const std::string& text, int cap) {
    std::istringstream in(text);
    std::string line, name;
    int degree = -1, table_n = -1;
    std::vector<Perm> gens;
    std::vector<std::pair<std::string, std::vector<Perm>>> subs;
    std::vector<std::vector<int>> table;
    int lineno = 0;
    std::vector<std::pair<std::string, std::string>> pending_subs;
    std::vector<std::string> pending_gens;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto trim = [](std::string s) {
            std::size_t a = s.find_first_not_of(" \t\r");
            std::size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        rest = trim(rest);
        if (key == "name") {
            name = rest;
        } else if (key == "degree") {
            degree = std::stoi(rest);
        } else if (key == "gen") {
            pending_gens.push_back(rest);
        } else if (key == "sub") {
            std::size_t sp = rest.find_first_of(" \t");
            if (sp == std::string::npos)
                throw ParseError("line " + std::to_string(lineno) + ": sub needs generators");
            pending_subs.emplace_back(rest.substr(0, sp), trim(rest.substr(sp + 1)));
        } else if (key == "table") {
            table_n = std::stoi(rest);
        } else if (key == "row") {
            std::istringstream rs(rest);
            std::vector<int> row;
            int v;
            while (rs >> v) row.push_back(v);
            table.push_back(std::move(row));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (name.empty()) throw ParseError("missing 'name'");
    GroupSpecDoc doc;
    if (table_n >= 0) {
        if (static_cast<int>(table.size()) != table_n)
            throw ParseError("expected " + std::to_string(table_n) + " rows");
        doc.group = std::make_shared<Group>(
            Group::from_table(name, std::move(table), cap));
    } else {
        if (degree < 1) throw ParseError("missing 'degree'");
        for (const std::string& w : pending_gens)
            gens.push_back(parse_perm_word(w, degree));
        doc.group = std::make_shared<Group>(
            Group::from_perm_generators(name, degree, gens, cap));
        doc.generator_perms = gens;
        for (const auto& [sname, words] : pending_subs) {
            std::vector<Perm> sgens;
            std::istringstream ws(words);
            std::string w;
            while (std::getline(ws, w, ';'))
                sgens.push_back(parse_perm_word(w, degree));
            subs.emplace_back(sname, std::move(sgens));
        }
        doc.subgroup_gens = std::move(subs);
    }
    return doc;
}

GroupSpecDoc load_group_spec(const std::string& path, int cap) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open group spec: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_group_spec(buf.str(), cap);
}

std::string serialize_group_spec(const GroupSpecDoc& doc) {
    std::ostringstream out;
    out << "name " << doc.group->name() << "\n";
    if (doc.group->is_perm_mode()) {
        out << "degree " << doc.group->degree() << "\n";
        for (const Perm& p : doc.generator_perms)
            out << "gen " << perm_to_string(p) << "\n";
        for (const auto& [n, gens] : doc.subgroup_gens) {
            out << "sub " << n << " ";
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i) out << "; ";
                out << perm_to_string(gens[i]);
            }
            out << "\n";
        }
    } else {
        out << "table " << doc.group->size() << "\n";
        for (int i = 0; i < doc.group->size(); ++i) {
            out << "row";
            for (int j = 0; j < doc.group->size(); ++j)
                out << ' ' << doc.group->op(i, j);
            out << "\n";
        }
    }
    return out.str();
}

} // namespace clm
