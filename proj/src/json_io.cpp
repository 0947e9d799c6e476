#include "kgk/json_io.hpp"

#include <algorithm>
#include <json.hpp>

namespace kgk {

namespace {

using nlohmann::json;

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known) throw InputError("unexpected key \"" + it.key() + "\" in " + where);
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError("missing \"" + std::string(key) + "\" in " + where);
    return *it;
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + " must be a string");
    return v.get<std::string>();
}

long long as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + " must be an integer");
    return v.get<long long>();
}

}  // namespace

ParsedInput parse_kgraph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("top level must be a JSON object");
    require_keys(doc, {"rank", "vertices", "edges", "flips", "weights"}, "top level");

    ParsedInput out;
    out.graph.rank = static_cast<int>(as_integer(field(doc, "rank", "top level"), "\"rank\""));

    const json& verts = field(doc, "vertices", "top level");
    if (!verts.is_array()) throw InputError("\"vertices\" must be an array");
    for (const json& v : verts) out.graph.vertices.push_back(as_string(v, "vertex id"));

    const json& edges = field(doc, "edges", "top level");
    if (!edges.is_array()) throw InputError("\"edges\" must be an array");
    for (const json& e : edges) {
        if (!e.is_object()) throw InputError("each edge must be an object");
        require_keys(e, {"id", "color", "src", "rng"}, "edge");
        RawEdge re;
        re.id = as_string(field(e, "id", "edge"), "edge \"id\"");
        re.color = static_cast<int>(as_integer(field(e, "color", "edge " + re.id),
                                               "edge \"color\""));
        re.src = as_string(field(e, "src", "edge " + re.id), "edge \"src\"");
        re.rng = as_string(field(e, "rng", "edge " + re.id), "edge \"rng\"");
        out.graph.edges.push_back(std::move(re));
    }

    const json& flips = field(doc, "flips", "top level");
    if (!flips.is_array()) throw InputError("\"flips\" must be an array");
    for (const json& f : flips) {
        if (!f.is_object()) throw InputError("each flip block must be an object");
        require_keys(f, {"i", "j", "pairs"}, "flip block");
        RawFlip rf;
        rf.i = static_cast<int>(as_integer(field(f, "i", "flip block"), "flip \"i\""));
        rf.j = static_cast<int>(as_integer(field(f, "j", "flip block"), "flip \"j\""));
        const json& pairs = field(f, "pairs", "flip block");
        if (!pairs.is_array()) throw InputError("flip \"pairs\" must be an array");
        for (const json& p : pairs) {
            if (!p.is_array() || p.size() != 4)
                throw InputError("each flip entry must be an array of four edge ids");
            std::array<std::string, 4> entry;
            for (size_t s = 0; s < 4; ++s) entry[s] = as_string(p[s], "flip entry");
            rf.pairs.push_back(std::move(entry));
        }
        out.graph.flips.push_back(std::move(rf));
    }

    if (doc.contains("weights")) {
        const json& w = doc["weights"];
        if (!w.is_object()) throw InputError("\"weights\" must be an object");
        require_keys(w, {"m", "n"}, "weights");
        RawWeights rw;
        const json& m = field(w, "m", "weights");
        const json& n = field(w, "n", "weights");
        if (!m.is_object() || !n.is_object())
            throw InputError("weights \"m\" and \"n\" must be objects keyed by edge id");
        for (auto it = m.begin(); it != m.end(); ++it)
            rw.m[it.key()] = as_integer(it.value(), "m weight of " + it.key());
        for (auto it = n.begin(); it != n.end(); ++it)
            rw.n[it.key()] = as_integer(it.value(), "n weight of " + it.key());
        out.weights = std::move(rw);
    }
    return out;
}

std::string graph_to_json(const RawGraphSpec& spec, const RawWeights* weights) {
    json doc;
    doc["rank"] = spec.rank;

    std::vector<std::string> verts = spec.vertices;
    std::sort(verts.begin(), verts.end());
    doc["vertices"] = verts;

    std::vector<RawEdge> edges = spec.edges;
    std::sort(edges.begin(), edges.end(),
              [](const RawEdge& a, const RawEdge& b) { return a.id < b.id; });
    doc["edges"] = json::array();
    for (const RawEdge& e : edges) {
        json je;
        je["id"] = e.id;
        je["color"] = e.color;
        je["src"] = e.src;
        je["rng"] = e.rng;
        doc["edges"].push_back(je);
    }

    std::vector<RawFlip> flips = spec.flips;
    std::sort(flips.begin(), flips.end(), [](const RawFlip& a, const RawFlip& b) {
        return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    doc["flips"] = json::array();
    for (const RawFlip& f : flips) {
        json jf;
        jf["i"] = f.i;
        jf["j"] = f.j;
        std::vector<std::array<std::string, 4>> pairs = f.pairs;
        std::sort(pairs.begin(), pairs.end());
        jf["pairs"] = pairs;
        doc["flips"].push_back(jf);
    }

    if (weights) {
        json jm = json::object(), jn = json::object();
        for (const auto& [id, v] : weights->m) jm[id] = v;
        for (const auto& [id, v] : weights->n) jn[id] = v;
        doc["weights"]["m"] = jm;
        doc["weights"]["n"] = jn;
    }
    return doc.dump(2) + "\n";
}

std::string fiber_permutation_to_json(const KGraph& g, const FiberPermutation& perm) {
    json doc;
    doc["pair"] = {g.edge(perm.x).id, g.edge(perm.y).id};
    doc["colors"] = {g.edge(perm.x).color + 1, g.edge(perm.y).color + 1};
    doc["table"] = json::array();
    for (const auto& row : perm.rows) doc["table"].push_back(row);
    return doc.dump(2) + "\n";
}

}  // namespace kgk
