#include "bihyp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "bihyp/solver.hpp"

namespace bihyp {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(e);
    return out;
}

std::vector<Edge> edges_from_json(const json& j, const char* key) {
    if (!j.is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
    std::vector<Edge> out;
    for (const json& item : j) {
        if (!item.is_array()) throw std::invalid_argument(std::string(key) + " entries must be arrays");
        out.push_back(item.get<Edge>());
    }
    return out;
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string to_json(const MixedHypergraph& h, const std::optional<Provenance>& prov) {
    json j;
    j["n"] = h.n();
    if (h.is_bi()) {
        j["edges"] = edges_to_json(h.c_edges());
    } else {
        j["c_edges"] = edges_to_json(h.c_edges());
        j["d_edges"] = edges_to_json(h.d_edges());
    }
    if (prov) {
        json p;
        p["family"] = prov->family;
        p["params"] = json::object();
        for (const auto& [k, v] : prov->params) p["params"][k] = v;
        j["provenance"] = p;
    }
    return j.dump(2) + "\n";
}

ParsedInstance from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json parse error: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance must be a json object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("missing integer field n");
    int n = j["n"].get<int>();

    ParsedInstance out;
    try {
        if (j.contains("edges")) {
            if (j.contains("c_edges") || j.contains("d_edges"))
                throw std::invalid_argument("give either edges or c_edges/d_edges, not both");
            out.h = MixedHypergraph::bi(n, edges_from_json(j["edges"], "edges"));
        } else {
            if (!j.contains("c_edges") || !j.contains("d_edges"))
                throw std::invalid_argument("missing edges (or c_edges and d_edges)");
            out.h = MixedHypergraph(n, edges_from_json(j["c_edges"], "c_edges"),
                                    edges_from_json(j["d_edges"], "d_edges"));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad edge entry: ") + e.what());
    }

    if (j.contains("provenance")) {
        const json& p = j["provenance"];
        if (!p.is_object() || !p.contains("family"))
            throw std::invalid_argument("provenance must be an object with a family");
        Provenance prov;
        prov.family = p["family"].get<std::string>();
        if (p.contains("params"))
            for (const auto& [k, v] : p["params"].items())
                prov.params[k] = v.get<long long>();
        out.provenance = std::move(prov);
    }
    return out;
}

std::string to_edge_list(const MixedHypergraph& h) {
    std::ostringstream out;
    auto r = h.uniformity();
    if (h.is_bi()) {
        out << "#bi\n" << h.n() << ' ' << (r ? *r : 0) << '\n';
        for (const Edge& e : h.c_edges()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                out << (i ? " " : "") << e[i];
            out << '\n';
        }
    } else {
        out << h.n() << ' ' << (r ? *r : 0) << '\n';
        for (const char* prefix : {"c", "d"})
            for (const Edge& e : (*prefix == 'c' ? h.c_edges() : h.d_edges())) {
                out << prefix;
                for (int v : e) out << ' ' << v;
                out << '\n';
            }
    }
    return out.str();
}

ParsedInstance from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool bi_marker = false;
    bool have_header = false;
    int n = 0, r = 0;
    std::vector<Edge> plain, c_edges, d_edges;

    auto fail = [&lineno](const std::string& why) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line == "#bi") {
            bi_marker = true;
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream toks(line);
        if (!have_header) {
            if (!(toks >> n >> r)) fail("expected header \"n r\"");
            std::string extra;
            if (toks >> extra) fail("trailing tokens after header");
            have_header = true;
            continue;
        }
        Edge e;
        std::string first;
        toks >> first;
        bool prefixed = first == "c" || first == "d";
        if (!prefixed) {
            std::istringstream again(first);
            int v;
            if (!(again >> v) || !again.eof()) fail("expected a vertex or c/d prefix");
            e.push_back(v);
        }
        int v;
        while (toks >> v) e.push_back(v);
        if (!toks.eof()) fail("non-integer vertex");
        if (e.empty()) fail("empty edge");
        if (r > 0 && static_cast<int>(e.size()) != r)
            fail("edge size " + std::to_string(e.size()) + " does not match header r=" +
                 std::to_string(r));
        if (prefixed) {
            if (bi_marker) fail("c/d prefix inside a #bi file");
            (first == "c" ? c_edges : d_edges).push_back(std::move(e));
        } else {
            if (!c_edges.empty() || !d_edges.empty())
                fail("unprefixed edge after c/d lines");
            plain.push_back(std::move(e));
        }
    }
    if (!have_header) throw std::invalid_argument("missing header line \"n r\"");
    if (!plain.empty() && (!c_edges.empty() || !d_edges.empty()))
        throw std::invalid_argument("mixed prefixed and unprefixed edge lines");

    ParsedInstance out;
    if (c_edges.empty() && d_edges.empty())
        out.h = MixedHypergraph::bi(n, std::move(plain));
    else
        out.h = MixedHypergraph(n, std::move(c_edges), std::move(d_edges));
    return out;
}

ParsedInstance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return has_suffix(path, ".json") ? from_json(buf.str())
                                         : from_edge_list(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_instance_file(const std::string& path, const MixedHypergraph& h,
                         const std::optional<Provenance>& prov) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << (has_suffix(path, ".json") ? to_json(h, prov) : to_edge_list(h));
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string verdict_to_json(const Verdict& v) {
    json j;
    j["status"] = to_string(v.status);
    if (v.witness) {
        j["witness"]["colors"] = v.witness->colors;
        j["witness"]["num_colors"] = v.witness->num_colors;
    } else {
        j["witness"] = nullptr;
    }
    j["nodes_explored"] = v.nodes_explored;
    j["elapsed_ms"] = v.elapsed_ms;
    return j.dump(2) + "\n";
}

}  // namespace bihyp
