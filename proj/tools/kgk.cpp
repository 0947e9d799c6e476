// kgk: command line front end for the k-graph verification library.
//
// Every subcommand reads one JSON presentation (file path or "-" for stdin),
// prints a JSON report to stdout and exits 0 when all checks pass, 1 when a
// check fails (the report carries the witness) and 2 on malformed input or
// usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "kgk/dynamics.hpp"
#include "kgk/examples.hpp"
#include "kgk/json_io.hpp"
#include "kgk/skew.hpp"

namespace {

using nlohmann::json;
using namespace kgk;

constexpr long long kPathListCap = 10000;

long long parse_ll(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw InputError(what + ": \"" + s + "\" is not an integer");
        return v;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError(what + ": \"" + s + "\" is not an integer");
    }
}

Degree parse_degree(const std::string& text, int rank) {
    std::vector<int> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        long long v = parse_ll(token, "degree coordinate");
        if (v < 0) throw InputError("degree coordinates must be nonnegative");
        coords.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(coords.size()) != rank)
        throw InputError("degree \"" + text + "\" has " + std::to_string(coords.size()) +
                         " coordinates but the graph has rank " + std::to_string(rank));
    return Degree(coords);
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct Loaded {
    KGraph g;
    std::optional<Weights> w;
};

Loaded load(const std::string& path) {
    ParsedInput parsed = parse_kgraph_json(slurp(path));
    Loaded out{KGraph::from_spec(parsed.graph), std::nullopt};
    if (parsed.weights) out.w = Weights::from_raw(out.g, *parsed.weights);
    return out;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- report rendering ------------------------------------------------

json j_degree(const Degree& d) { return json(d.coords()); }

json j_word(const KGraph& g, const std::vector<int>& word) {
    json a = json::array();
    for (int e : word) a.push_back(g.edge(e).id);
    return a;
}

json j_path(const KGraph& g, const Path& p) { return j_word(g, p.word); }

json j_vertices(const KGraph& g, const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(g.vertex(v).id);
    return a;
}

json j_issues(const std::vector<ValidationIssue>& issues) {
    json a = json::array();
    for (const auto& is : issues) a.push_back({{"code", is.code}, {"detail", is.detail}});
    return a;
}

json j_hexagon(const KGraph& g, const HexagonReport& r) {
    json h;
    h["ok"] = r.ok;
    h["triples_checked"] = r.triples_checked;
    if (r.witness) {
        const HexagonWitness& w = *r.witness;
        json jw;
        jw["colors"] = {w.ci + 1, w.cj + 1, w.cl + 1};
        jw["word"] = j_word(g, {w.a, w.b, w.c});
        jw["via_ab"] = j_word(g, {w.via_ab[0], w.via_ab[1], w.via_ab[2]});
        jw["via_bc"] = j_word(g, {w.via_bc[0], w.via_bc[1], w.via_bc[2]});
        h["witness"] = jw;
    } else {
        h["witness"] = nullptr;
    }
    return h;
}

json op_validate(const KGraph& g, Exec exec) {
    json r;
    r["op"] = "validate";
    ValidationResult vr = validate_graph(g);
    r["structure"] = {{"ok", vr.ok}, {"issues", j_issues(vr.issues)}};
    bool ok = vr.ok;
    if (vr.ok) {
        HexagonReport hr = check_hexagon(g, exec);
        r["hexagon"] = j_hexagon(g, hr);
        ok = ok && hr.ok;
    } else {
        r["hexagon"] = nullptr;
    }
    r["ok"] = ok;
    return r;
}

json op_rowfinite(const KGraph& g, const Degree& m) {
    RowFiniteReport rep = check_row_finite_no_source(g, m);
    json r;
    r["op"] = "rowfinite";
    r["ok"] = rep.ok;
    json counts = json::array();
    for (const auto& [deg, cnt] : rep.min_counts)
        counts.push_back({{"degree", j_degree(deg)}, {"count", cnt}});
    r["min_counts"] = counts;
    if (rep.witness)
        r["witness"] = {{"vertex", g.vertex(rep.witness->first).id},
                        {"degree", j_degree(rep.witness->second)}};
    else
        r["witness"] = nullptr;
    return r;
}

json op_minimal(const KGraph& g) {
    MinimalReport rep = check_minimal(g);
    json r;
    r["op"] = "minimal";
    r["ok"] = rep.ok;
    r["subsets_checked"] = rep.subsets_checked;
    r["witness"] = rep.witness ? j_vertices(g, *rep.witness) : json(nullptr);
    return r;
}

json op_aperiodic_guided(const KGraph& g, const Degree& depth, const Degree& bound,
                         long long budget) {
    ConditionAReport rep = check_condition_a(g, depth, bound, budget);
    json r;
    r["op"] = "aperiodic";
    r["mode"] = "guided";
    r["ok"] = rep.ok;
    r["status"] = rep.status;
    r["depth"] = j_degree(rep.depth);
    r["shift_bound"] = j_degree(rep.shift_bound);
    json vs = json::array();
    for (const auto& v : rep.vertices) {
        json jv;
        jv["vertex"] = g.vertex(v.vertex).id;
        jv["ok"] = v.ok;
        jv["word"] = j_path(g, v.word);
        if (v.undistinguished)
            jv["undistinguished"] = {{"p", j_degree(v.undistinguished->p)},
                                     {"q", j_degree(v.undistinguished->q)}};
        else
            jv["undistinguished"] = nullptr;
        vs.push_back(jv);
    }
    r["vertices"] = vs;
    r["witness_vertex"] =
        rep.witness_vertex ? json(g.vertex(*rep.witness_vertex).id) : json(nullptr);
    return r;
}

json op_aperiodic_sampled(const KGraph& g, const Weights& w, long long den,
                          const Degree& bound) {
    SkewSamplingReport rep = check_condition_a_skew(g, w, den, bound);
    json r;
    r["op"] = "aperiodic";
    r["mode"] = "sampled";
    r["ok"] = rep.ok;
    r["status"] = rep.status;
    r["sample_den"] = rep.sample_den;
    r["shift_bound"] = j_degree(rep.shift_bound);
    r["starts_checked"] = rep.starts_checked;
    if (rep.witness)
        r["witness"] = {{"vertex", g.vertex(rep.witness->vertex).id},
                        {"start_num", rep.witness->start_num},
                        {"p", j_degree(rep.witness->p)},
                        {"q", j_degree(rep.witness->q)}};
    else
        r["witness"] = nullptr;
    return r;
}

json op_contracting(const KGraph& g, int v0, int max_m, int max_deg) {
    ContractingReport rep = check_contracting(g, v0, max_m, max_deg);
    json r;
    r["op"] = "contracting";
    r["ok"] = rep.ok;
    r["status"] = rep.status;
    r["tuples_tried"] = rep.tuples_tried;
    if (rep.cert) {
        json paths = json::array();
        for (const Path& p : rep.cert->paths) paths.push_back(j_path(g, p));
        r["certificate"] = {{"v0", g.vertex(rep.cert->v0).id}, {"paths", paths}};
    } else {
        r["certificate"] = nullptr;
    }
    return r;
}

json op_weights(const KGraph& g, const Weights& w) {
    WeightsReport rep = validate_weights(g, w);
    json r;
    r["op"] = "weights-check";
    r["ok"] = rep.ok;
    r["issues"] = j_issues(rep.issues);
    try {
        r["required_resolution"] = required_resolution(g, w);
    } catch (const InputError&) {
        r["required_resolution"] = nullptr;  // lcm overflowed; weights may still be valid
    }
    return r;
}

json j_invariant_witness(const KGraph& g, const InvariantWitness& w) {
    json jw;
    jw["kind"] = w.kind;
    if (w.kind == "escaping_edge") {
        jw["edge"] = g.edge(w.edge).id;
    } else {
        jw["vertex"] = g.vertex(w.vertex).id;
        jw["color"] = w.color + 1;
    }
    return jw;
}

// Sampled closure check for report-all: walk a random eventually periodic
// path (one edge of each color per round, extending at the source end),
// take the two-sided orbit of its tail set and require it to be invariant.
json orbit_sample(const KGraph& g, std::mt19937_64& rng) {
    int k = g.rank();
    int start = static_cast<int>(rand_range(rng, 0, g.vertex_count() - 1));
    std::vector<int> word;
    std::vector<int> round_starts{start};
    std::vector<size_t> round_offsets{0};
    int cur = start;
    int a = -1, b = -1;
    for (int round = 0; round <= g.vertex_count() && a < 0; ++round) {
        for (int c = 0; c < k; ++c) {
            const auto& cands = g.edges_ranged_at(c, cur);
            if (cands.empty()) return json{{"skipped", "blocked"}};
            int e = cands[static_cast<size_t>(
                rand_range(rng, 0, static_cast<long long>(cands.size()) - 1))];
            word.push_back(e);
            cur = g.edge(e).src;
        }
        for (size_t t = 0; t < round_starts.size(); ++t)
            if (round_starts[t] == cur) {
                a = static_cast<int>(t);
                b = round + 1;
                break;
            }
        round_starts.push_back(cur);
        round_offsets.push_back(word.size());
    }
    if (a < 0) throw InternalError("round-robin walk failed to close");

    std::vector<int> pre(word.begin(), word.begin() + static_cast<long>(round_offsets[a]));
    std::vector<int> cyc(word.begin() + static_cast<long>(round_offsets[a]),
                         word.begin() + static_cast<long>(round_offsets[b]));
    Path prefix = pre.empty() ? vertex_path(g, start) : make_path(g, pre);
    InfPath ip = make_inf_path(g, prefix, make_path(g, cyc));

    OrbitReport orb = orbit(g, ip);
    InvariantReport inv = check_invariant(g, orb.orb);
    json r;
    r["ok"] = inv.ok;
    r["at"] = g.vertex(start).id;
    r["prefix"] = j_word(g, pre);
    r["cycle"] = j_word(g, cyc);
    r["backward"] = j_vertices(g, orb.backward);
    r["orb"] = j_vertices(g, orb.orb);
    r["states_explored"] = orb.states_explored;
    r["witness"] = inv.witness ? j_invariant_witness(g, *inv.witness) : json(nullptr);
    return r;
}

std::vector<std::pair<int, int>> ascending_pairs(const KGraph& g) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < g.edge_count(); ++x)
        for (int y = 0; y < g.edge_count(); ++y)
            if (g.edge(x).color < g.edge(y).color && g.edge(x).src == g.edge(y).rng)
                out.push_back({x, y});
    std::sort(out.begin(), out.end(), [&](const auto& p, const auto& q) {
        return std::make_tuple(g.edge(p.first).color, g.edge(p.second).color, p.first,
                               p.second) < std::make_tuple(g.edge(q.first).color,
                                                           g.edge(q.second).color, q.first,
                                                           q.second);
    });
    return out;
}

json j_fiber_table(const KGraph& g, const FiberPermutation& perm) {
    return json::parse(fiber_permutation_to_json(g, perm));
}

bool any_not_ok(const json& j) {
    if (j.is_object()) {
        auto it = j.find("ok");
        if (it != j.end() && it->is_boolean() && !it->get<bool>()) return true;
        for (const auto& el : j.items())
            if (any_not_ok(el.value())) return true;
    } else if (j.is_array()) {
        for (const auto& el : j)
            if (any_not_ok(el)) return true;
    }
    return false;
}

json battery(const std::string& display, const Loaded& in, Exec exec,
             std::mt19937_64& rng) {
    json r;
    r["input"] = display;
    json val = op_validate(in.g, exec);
    bool structure_ok = val["structure"]["ok"].get<bool>();
    r["validate"] = val;
    if (!structure_ok) {
        json sk{{"skipped", "graph failed validation"}};
        r["rowfinite"] = sk;
        r["minimal"] = sk;
        r["aperiodic"] = sk;
        r["orbit_invariance"] = sk;
        if (in.w) r["weights"] = sk;
        return r;
    }

    r["rowfinite"] = op_rowfinite(in.g, Degree::constant(in.g.rank(), 2));

    if (in.g.vertex_count() > 16)
        r["minimal"] = json{{"skipped", "exhaustive subset check skipped above 16 vertices"}};
    else
        r["minimal"] = op_minimal(in.g);

    try {
        if (in.w)
            r["aperiodic"] = op_aperiodic_sampled(in.g, *in.w, 11,
                                                  Degree::constant(in.g.rank(), 4));
        else
            r["aperiodic"] = op_aperiodic_guided(in.g, Degree::constant(in.g.rank(), 6),
                                                 Degree::constant(in.g.rank(), 2), 20000);
    } catch (const InputError& e) {
        r["aperiodic"] = json{{"skipped", e.what()}};
    }

    r["orbit_invariance"] = orbit_sample(in.g, rng);

    if (in.w) r["weights"] = op_weights(in.g, *in.w);
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"verification toolkit for finite k-colored graph presentations"};
    app.require_subcommand(1);

    long long seed = 0;
    bool serial = false;
    app.add_option("--seed", seed, "seed for the sampled sub-checks (KGK_SEED overrides)");
    app.add_flag("--serial", serial, "run the serial reference kernels instead of OpenMP");

    std::string input, vertex_arg, degree_arg, ex_name;
    int depth = 8, shift_bound = 2, max_m = 2, max_deg = 3;
    long long den_aperiodic = 11, budget = 20000, den_verify = 0, resolution = 0;
    bool oracle = false, classify = false;
    std::vector<std::string> inputs;

    auto* c_validate = app.add_subcommand(
        "validate", "check the factorization tables and, for rank >= 3, their associativity");
    c_validate->add_option("input", input, "graph JSON (\"-\" for stdin)")->required();

    auto* c_paths = app.add_subcommand("paths", "enumerate paths of one degree into a vertex");
    c_paths->add_option("input", input)->required();
    c_paths->add_option("vertex", vertex_arg, "range vertex id")->required();
    c_paths->add_option("degree", degree_arg, "comma-separated degree, e.g. 1,2")->required();

    auto* c_rowfinite = app.add_subcommand(
        "rowfinite", "check every vertex receives paths of every degree up to the given one");
    c_rowfinite->add_option("input", input)->required();
    c_rowfinite->add_option("degree", degree_arg, "comma-separated degree")->required();

    auto* c_aperiodic = app.add_subcommand(
        "aperiodic", "look for aperiodicity evidence (weighted inputs use circle sampling)");
    c_aperiodic->add_option("input", input)->required();
    c_aperiodic->add_option("--depth", depth, "window depth per color (unweighted mode)");
    c_aperiodic->add_option("--shift-bound", shift_bound, "shift pairs checked up to this");
    c_aperiodic->add_option("--den", den_aperiodic, "sample denominator (weighted mode)");
    c_aperiodic->add_option("--budget", budget, "fallback search node budget");

    auto* c_minimal =
        app.add_subcommand("minimal", "exhaustively check that no proper vertex subset is invariant");
    c_minimal->add_option("input", input)->required();

    auto* c_contracting =
        app.add_subcommand("contracting", "search for a pitchfork-disjoint return family at a vertex");
    c_contracting->add_option("input", input)->required();
    c_contracting->add_option("vertex", vertex_arg, "base vertex id")->required();
    c_contracting->add_option("--max-m", max_m, "largest family index tried");
    c_contracting->add_option("--max-deg", max_deg, "largest degree coordinate tried");

    auto* c_weights = app.add_subcommand("weights-check", "validate edge weights");
    c_weights->add_option("input", input)->required();

    auto* c_solve = app.add_subcommand("skew-solve", "solve the sheet tables for all flip pairs");
    c_solve->add_option("input", input)->required();
    c_solve->add_flag("--oracle", oracle, "cross-check each table against exhaustive search");

    auto* c_verify = app.add_subcommand(
        "skew-verify", "verify the lifted flip laws on circle samples, plus lifted associativity");
    c_verify->add_option("input", input)->required();
    c_verify->add_option("--den", den_verify, "sample denominator (0: one full period per pair)");

    auto* c_build = app.add_subcommand("skew-build", "discretize the lifted graph at a resolution");
    c_build->add_option("input", input)->required();
    c_build->add_option("--resolution", resolution, "grid size, a multiple of the required one")
        ->required();

    auto* c_example = app.add_subcommand("example", "emit a built-in example family");
    c_example->add_option("name", ex_name, "qn | ex53 | ex54 | omega | free_loops")->required();
    c_example->add_flag("--classify", classify, "print the closed-form classification instead");
    c_example->allow_extras();  // numeric parameters, possibly negative

    auto* c_report = app.add_subcommand("report-all", "run the whole battery on each input");
    c_report->add_option("inputs", inputs, "graph JSON files")->required();

    // c_example keeps its extras (the numeric parameters) instead of
    // passing them up, so it is the one subcommand without fallthrough.
    for (auto* sub : {c_validate, c_paths, c_rowfinite, c_aperiodic, c_minimal, c_contracting,
                      c_weights, c_solve, c_verify, c_build, c_report})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("KGK_SEED")) seed = parse_ll(env, "KGK_SEED");
    Exec exec = serial ? Exec::serial : Exec::parallel;

    if (*c_example) {
        std::vector<long long> params;
        for (const std::string& tok : c_example->remaining())
            params.push_back(parse_ll(tok, "example parameter"));
        if (classify) {
            Classification c = classify_example(ex_name, params);
            emit(json{{"name", ex_name},
                      {"params", params},
                      {"condition_a", c.condition_a},
                      {"simple_pi", c.simple_pi}});
        } else {
            GeneratedExample ex = generate_example(ex_name, params);
            std::cout << graph_to_json(ex.graph, ex.weights ? &*ex.weights : nullptr);
        }
        return 0;
    }

    if (*c_report) {
        std::mt19937_64 rng(static_cast<unsigned long long>(seed));
        json doc;
        doc["seed"] = seed;
        json reports = json::array();
        for (const std::string& path : inputs) {
            Loaded in = load(path);
            reports.push_back(battery(path, in, exec, rng));
        }
        doc["reports"] = reports;
        emit(doc);
        return any_not_ok(doc) ? 1 : 0;
    }

    Loaded in = load(input);

    if (*c_validate) {
        json r = op_validate(in.g, exec);
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    // Everything below needs a structurally sound graph to be meaningful.
    {
        ValidationResult vr = validate_graph(in.g);
        if (!vr.ok) {
            json r;
            r["op"] = app.get_subcommands().front()->get_name();
            r["ok"] = false;
            r["structure"] = {{"ok", false}, {"issues", j_issues(vr.issues)}};
            emit(r);
            return 1;
        }
    }

    if (*c_paths) {
        int v = in.g.vertex_index(vertex_arg);
        if (v < 0) throw InputError("unknown vertex " + vertex_arg);
        Degree m = parse_degree(degree_arg, in.g.rank());
        long long count = count_paths(in.g, v, m);
        json r;
        r["op"] = "paths";
        r["ok"] = true;
        r["vertex"] = vertex_arg;
        r["degree"] = j_degree(m);
        r["count"] = count;
        if (count <= kPathListCap) {
            json lst = json::array();
            for (const Path& p : enumerate_paths(in.g, v, m)) lst.push_back(j_path(in.g, p));
            r["paths"] = lst;
            r["truncated"] = false;
        } else {
            r["truncated"] = true;
        }
        emit(r);
        return 0;
    }

    if (*c_rowfinite) {
        json r = op_rowfinite(in.g, parse_degree(degree_arg, in.g.rank()));
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    if (*c_aperiodic) {
        json r;
        if (in.w)
            r = op_aperiodic_sampled(in.g, *in.w, den_aperiodic,
                                     Degree::constant(in.g.rank(), shift_bound));
        else
            r = op_aperiodic_guided(in.g, Degree::constant(in.g.rank(), depth),
                                    Degree::constant(in.g.rank(), shift_bound), budget);
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    if (*c_minimal) {
        json r = op_minimal(in.g);
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    if (*c_contracting) {
        int v0 = in.g.vertex_index(vertex_arg);
        if (v0 < 0) throw InputError("unknown vertex " + vertex_arg);
        json r = op_contracting(in.g, v0, max_m, max_deg);
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    if (*c_weights) {
        if (!in.w) throw InputError("weights-check needs a \"weights\" block in the input");
        json r = op_weights(in.g, *in.w);
        emit(r);
        return r["ok"].get<bool>() ? 0 : 1;
    }

    if (*c_solve) {
        if (!in.w) throw InputError("skew-solve needs a \"weights\" block in the input");
        json r;
        r["op"] = "skew-solve";
        r["oracle"] = oracle;
        json tables = json::array();
        bool ok = true;
        json mismatch = nullptr;
        for (auto [x, y] : ascending_pairs(in.g)) {
            FiberPermutation perm = solve_fiber_congruence(in.g, *in.w, x, y);
            if (oracle) {
                FiberPermutation ref = brute_force_fiber_congruence(in.g, *in.w, x, y);
                if (perm.rows != ref.rows || perm.modulus != ref.modulus) {
                    ok = false;
                    if (mismatch.is_null())
                        mismatch = json{{"pair", {in.g.edge(x).id, in.g.edge(y).id}}};
                }
            }
            tables.push_back(j_fiber_table(in.g, perm));
        }
        r["ok"] = ok;
        r["tables"] = tables;
        r["mismatch"] = mismatch;
        emit(r);
        return ok ? 0 : 1;
    }

    if (*c_verify) {
        if (!in.w) throw InputError("skew-verify needs a \"weights\" block in the input");
        json r;
        r["op"] = "skew-verify";
        bool ok = true;
        json pairs = json::array();
        for (auto [x, y] : ascending_pairs(in.g)) {
            FiberPermutation perm = solve_fiber_congruence(in.g, *in.w, x, y);
            long long den = den_verify == 0 ? perm.modulus : den_verify;
            FiberLawReport rep = verify_fiber_laws(in.g, *in.w, perm, den, exec);
            ok = ok && rep.ok;
            json jp;
            jp["pair"] = {in.g.edge(x).id, in.g.edge(y).id};
            jp["modulus"] = perm.modulus;
            jp["sample_den"] = den;
            jp["ok"] = rep.ok;
            jp["rows_checked"] = rep.rows_checked;
            jp["samples_per_row"] = rep.samples_per_row;
            if (rep.witness)
                jp["witness"] = {{"row", rep.witness->row},
                                 {"sample", rep.witness->sample},
                                 {"law", rep.witness->law}};
            else
                jp["witness"] = nullptr;
            pairs.push_back(jp);
        }
        r["pairs"] = pairs;
        if (in.g.rank() >= 3) {
            SkewHexagonReport hr = verify_skew_hexagon(in.g, *in.w, exec);
            json h;
            h["ok"] = hr.ok;
            h["triples_checked"] = hr.triples_checked;
            if (hr.witness)
                h["witness"] = {{"colors",
                                 {hr.witness->ci + 1, hr.witness->cj + 1, hr.witness->cl + 1}},
                                {"edges",
                                 {in.g.edge(hr.witness->a).id, in.g.edge(hr.witness->b).id,
                                  in.g.edge(hr.witness->c).id}},
                                {"points",
                                 {hr.witness->x1.to_string(), hr.witness->x2.to_string(),
                                  hr.witness->x3.to_string()}}};
            else
                h["witness"] = nullptr;
            r["hexagon"] = h;
            ok = ok && hr.ok;
        } else {
            r["hexagon"] = nullptr;
        }
        r["ok"] = ok;
        emit(r);
        return ok ? 0 : 1;
    }

    if (*c_build) {
        if (!in.w) throw InputError("skew-build needs a \"weights\" block in the input");
        std::cout << graph_to_json(build_skew_graph(in.g, *in.w, resolution));
        return 0;
    }

    throw InternalError("unhandled subcommand");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error (please report): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
