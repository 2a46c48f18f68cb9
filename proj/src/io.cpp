#include "hedonic/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hedonic {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty instance file");
    std::size_t at = 0;

    const Line& model_line = lines[at++];
    if (model_line.tokens.size() != 2 || model_line.tokens[0] != "model")
        throw ParseError(model_line.number, "expected 'model fe' or 'model fen'");
    Model model;
    if (model_line.tokens[1] == "fe") model = Model::FE;
    else if (model_line.tokens[1] == "fen") model = Model::FEN;
    else throw ParseError(model_line.number, "unknown model '" + model_line.tokens[1] + "'");

    if (at >= lines.size()) throw ParseError(model_line.number, "missing 'agents N' line");
    const Line& agents_line = lines[at++];
    if (agents_line.tokens.size() != 2 || agents_line.tokens[0] != "agents")
        throw ParseError(agents_line.number, "expected 'agents N'");
    const int n = parse_int(agents_line, agents_line.tokens[1], "agent count");
    if (n < 0) throw ParseError(agents_line.number, "negative agent count");

    std::vector<Arc> friends, enemies;
    std::set<std::pair<AgentId, AgentId>> friend_seen, enemy_seen;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        const std::string& kind = line.tokens[0];
        if (kind != "friend" && kind != "enemy")
            throw ParseError(line.number, "unknown directive '" + kind + "'");
        if (line.tokens.size() != 3)
            throw ParseError(line.number, "'" + kind + "' needs exactly two agent ids");
        const int u = parse_int(line, line.tokens[1], "agent id");
        const int v = parse_int(line, line.tokens[2], "agent id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line.number, "agent id out of range [0," + std::to_string(n) + ")");
        if (u == v) throw ParseError(line.number, "self-arc");
        if (kind == "friend") {
            if (!friend_seen.insert({u, v}).second)
                throw ParseError(line.number, "duplicate friend arc");
            if (enemy_seen.count({u, v}))
                throw ParseError(line.number, "arc already declared as enemy");
            friends.push_back({u, v});
        } else {
            if (model == Model::FE)
                throw ParseError(line.number, "enemy lines are illegal under model fe");
            if (!enemy_seen.insert({u, v}).second)
                throw ParseError(line.number, "duplicate enemy arc");
            if (friend_seen.count({u, v}))
                throw ParseError(line.number, "arc already declared as friend");
            enemies.push_back({u, v});
        }
    }
    return model == Model::FE ? Instance::fe(n, std::move(friends))
                              : Instance::fen(n, std::move(friends), std::move(enemies));
}

std::string serialize_instance(const Instance& inst, const std::vector<std::string>& name_map) {
    std::ostringstream out;
    out << "model " << (inst.model() == Model::FE ? "fe" : "fen") << "\n";
    out << "agents " << inst.n() << "\n";
    for (std::size_t i = 0; i < name_map.size(); ++i)
        out << "# label " << i << " = " << name_map[i] << "\n";
    for (const Arc& a : inst.friend_arcs()) out << "friend " << a.from << " " << a.to << "\n";
    for (const Arc& a : inst.enemy_arcs()) out << "enemy " << a.from << " " << a.to << "\n";
    return out.str();
}

Partition parse_partition(const std::string& text, int n) {
    auto lines = tokenize(text);
    std::vector<std::vector<AgentId>> coalitions;
    for (const Line& line : lines) {
        if (line.tokens[0] != "coalition")
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        if (line.tokens.size() < 2) throw ParseError(line.number, "empty coalition");
        std::vector<AgentId> c;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            int a = parse_int(line, line.tokens[i], "agent id");
            if (a < 0 || a >= n)
                throw ParseError(line.number, "agent id out of range [0," + std::to_string(n) + ")");
            c.push_back(a);
        }
        coalitions.push_back(std::move(c));
    }
    try {
        return Partition::of(n, std::move(coalitions));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, e.what());
    }
}

std::string serialize_partition(const Partition& pi) {
    std::ostringstream out;
    for (const auto& c : pi.coalitions) {
        out << "coalition";
        for (AgentId a : c) out << " " << a;
        out << "\n";
    }
    return out.str();
}

X3CInstance parse_x3c_seed(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty seed file");
    std::size_t at = 0;
    const Line& header = lines[at++];
    if (header.tokens.size() != 2 || header.tokens[0] != "elements")
        throw ParseError(header.number, "expected 'elements 3N'");
    const int elems = parse_int(header, header.tokens[1], "element count");
    if (elems <= 0 || elems % 3 != 0)
        throw ParseError(header.number, "element count must be a positive multiple of 3");

    X3CInstance seed;
    seed.n_hat = elems / 3;
    bool any_side = false;
    std::vector<std::optional<X3CInstance::Side>> sides;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.tokens[0] != "set")
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        if (line.tokens.size() != 4 && line.tokens.size() != 5)
            throw ParseError(line.number, "expected 'set A B C [out|in]'");
        std::array<int, 3> s;
        for (int i = 0; i < 3; ++i) {
            s[i] = parse_int(line, line.tokens[i + 1], "element");
            if (s[i] < 1 || s[i] > elems)
                throw ParseError(line.number, "element out of range [1," + std::to_string(elems) + "]");
        }
        std::sort(s.begin(), s.end());
        if (s[0] == s[1] || s[1] == s[2])
            throw ParseError(line.number, "set elements must be distinct");
        seed.sets.push_back(s);
        if (line.tokens.size() == 5) {
            any_side = true;
            if (line.tokens[4] == "out") sides.push_back(X3CInstance::Side::Out);
            else if (line.tokens[4] == "in") sides.push_back(X3CInstance::Side::In);
            else throw ParseError(line.number, "side must be 'out' or 'in'");
        } else {
            sides.push_back(std::nullopt);
        }
    }
    if (any_side) {
        std::vector<X3CInstance::Side> all;
        for (std::size_t i = 0; i < sides.size(); ++i) {
            if (!sides[i])
                throw ParseError(lines[i + 1].number, "side given for some sets but not all");
            all.push_back(*sides[i]);
        }
        seed.side = std::move(all);
    }
    return seed;
}

std::string serialize_x3c_seed(const X3CInstance& seed) {
    std::ostringstream out;
    out << "elements " << seed.element_count() << "\n";
    for (std::size_t j = 0; j < seed.sets.size(); ++j) {
        out << "set " << seed.sets[j][0] << " " << seed.sets[j][1] << " " << seed.sets[j][2];
        if (seed.side)
            out << " " << ((*seed.side)[j] == X3CInstance::Side::Out ? "out" : "in");
        out << "\n";
    }
    return out.str();
}

CliqueInstance parse_clique_seed(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty seed file");
    std::size_t at = 0;
    const Line& header = lines[at++];
    if (header.tokens.size() != 2 || header.tokens[0] != "vertices")
        throw ParseError(header.number, "expected 'vertices N'");
    CliqueInstance seed;
    seed.vertices = parse_int(header, header.tokens[1], "vertex count");
    bool have_target = false;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.tokens[0] == "edge") {
            if (line.tokens.size() != 3) throw ParseError(line.number, "expected 'edge U V'");
            int u = parse_int(line, line.tokens[1], "vertex");
            int v = parse_int(line, line.tokens[2], "vertex");
            if (u < 0 || v < 0 || u >= seed.vertices || v >= seed.vertices)
                throw ParseError(line.number, "vertex out of range");
            if (u == v) throw ParseError(line.number, "self-loop");
            seed.edges.emplace_back(u, v);
        } else if (line.tokens[0] == "target") {
            if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'target H'");
            seed.h = parse_int(line, line.tokens[1], "target size");
            have_target = true;
        } else {
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        }
    }
    if (!have_target) throw ParseError(lines.back().number, "missing 'target H' line");
    return seed;
}

std::string serialize_clique_seed(const CliqueInstance& seed) {
    std::ostringstream out;
    out << "vertices " << seed.vertices << "\n";
    for (auto [u, v] : seed.edges) out << "edge " << u << " " << v << "\n";
    out << "target " << seed.h << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace hedonic
