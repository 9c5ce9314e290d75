#include "pskew/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pskew {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Group parse_group(const json& j)
{
    try {
        const std::string type = require(j, "type").get<std::string>();
        if (type == "cyclic")
            return Group::finite(FiniteGroup::cyclic(require(j, "n").get<std::size_t>()));
        if (type == "table")
            return Group::finite(FiniteGroup::from_table(require(j, "mul").get<std::vector<std::vector<std::size_t>>>()));
        throw ParseError("unknown group type '" + type + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed group: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid group: ") + e.what());
    }
}

json group_to_json(const Group& g)
{
    if (!g.is_finite())
        throw std::invalid_argument("free groups have no standalone JSON form");
    const auto& fg = g.finite_group();
    if (fg.cyclic_order() != 0)
        return json{{"type", "cyclic"}, {"n", fg.order()}};
    return json{{"type", "table"}, {"mul", fg.table()}};
}

Instance parse_instance(const json& j)
{
    try {
        Instance inst;
        if (j.contains("field"))
            inst.field = PrimeField(require(j.at("field"), "p").get<std::uint32_t>());
        Group group = parse_group(require(j, "group"));
        auto carrier = require(j, "carrier").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < carrier.size(); ++i)
            if (!index.emplace(carrier[i], i).second)
                throw ParseError("duplicate carrier point '" + carrier[i] + "'");
        auto point = [&](const json& name) {
            auto s = name.get<std::string>();
            auto it = index.find(s);
            if (it == index.end())
                throw ParseError("unknown carrier point '" + s + "'");
            return it->second;
        };
        std::vector<ComponentSpec> specs;
        if (j.contains("action"))
            for (const auto& entry : j.at("action")) {
                auto t = require(entry, "t").get<std::size_t>();
                if (t >= group.finite_group().order())
                    throw ParseError("group element " + std::to_string(t) + " out of range");
                ComponentSpec spec{GroupElement(t), {}};
                for (const auto& pr : require(entry, "pairs")) {
                    if (!pr.is_array() || pr.size() != 2)
                        throw ParseError("each pair must be [x, h_t(x)]");
                    spec.pairs.emplace_back(point(pr[0]), point(pr[1]));
                }
                specs.push_back(std::move(spec));
            }
        inst.action = SetPartialAction::create(std::move(group), std::move(carrier), std::move(specs));
        return inst;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed instance: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

Instance parse_instance_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("instance is not valid JSON: ") + e.what());
    }
    return parse_instance(j);
}

json instance_to_json(const SetPartialAction& a, const std::optional<PrimeField>& field)
{
    json j;
    if (field)
        j["field"] = json{{"p", field->modulus()}};
    j["group"] = group_to_json(a.group());
    j["carrier"] = a.carrier();
    json action = json::array();
    for (const auto& spec : a.specs()) {
        json pairs = json::array();
        for (auto [x, y] : spec.pairs)
            pairs.push_back(json::array({a.carrier()[x], a.carrier()[y]}));
        action.push_back(json{{"t", spec.element.index()}, {"pairs", pairs}});
    }
    j["action"] = action;
    return j;
}

// ---------------------------------------------------------------------------

Graph parse_graph_json(const json& j)
{
    try {
        auto vertices = require(j, "vertices").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            index.emplace(vertices[i], i);
        auto vertex = [&](const json& name) {
            auto s = name.get<std::string>();
            auto it = index.find(s);
            if (it == index.end())
                throw ParseError("unknown vertex '" + s + "'");
            return it->second;
        };
        std::vector<Graph::Edge> edges;
        if (j.contains("edges"))
            for (const auto& e : j.at("edges"))
                edges.push_back({require(e, "name").get<std::string>(), vertex(require(e, "src")),
                                 vertex(require(e, "rng"))});
        return Graph::create(std::move(vertices), std::move(edges));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph parse_graph_text(const std::string& text)
{
    std::vector<std::string> vertices;
    std::map<std::string, std::size_t> index;
    auto vertex = [&](const std::string& name) {
        if (name.empty())
            throw ParseError("empty vertex name");
        auto [it, inserted] = index.emplace(name, vertices.size());
        if (inserted)
            vertices.push_back(name);
        return it->second;
    };
    std::vector<Graph::Edge> edges;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.back() != ';')
                throw ParseError("line " + std::to_string(lineno) + ": expected 'e: v -> w' or 'v;'");
            vertex(trim(line.substr(0, line.size() - 1)));
            continue;
        }
        auto arrow = line.find("->", colon);
        if (arrow == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": missing '->'");
        std::string name = trim(line.substr(0, colon));
        std::string src = trim(line.substr(colon + 1, arrow - colon - 1));
        std::string rng = trim(line.substr(arrow + 2));
        if (!rng.empty() && rng.back() == ';')
            rng = trim(rng.substr(0, rng.size() - 1));
        if (name.empty())
            throw ParseError("line " + std::to_string(lineno) + ": empty edge name");
        std::size_t s = vertex(src);
        std::size_t r = vertex(rng);
        edges.push_back({name, s, r});
    }
    try {
        return Graph::create(std::move(vertices), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph parse_graph(const std::string& text)
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return parse_graph_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("graph is not valid JSON: ") + e.what());
        }
    }
    return parse_graph_text(text);
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json{{"name", e.name}, {"src", g.vertices()[e.source]}, {"rng", g.vertices()[e.range]}});
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace pskew
