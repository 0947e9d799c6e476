#include "kgk/examples.hpp"

namespace kgk {

namespace {

constexpr long long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};

long long abs_ll(long long v) { return v < 0 ? -v : v; }

void expect_params(const std::string& name, const std::vector<long long>& params, size_t count,
                   const char* usage) {
    if (params.size() != count)
        throw InputError("example " + name + " takes " + std::to_string(count) +
                         " parameter(s): " + usage);
}

/// One vertex, one loop per color, swap flips. Shared by qn and ex53.
RawGraphSpec loops_with_swaps(int k) {
    RawGraphSpec spec;
    spec.rank = k;
    spec.vertices = {"v"};
    for (int i = 1; i <= k; ++i)
        spec.edges.push_back({"l" + std::to_string(i), i, "v", "v"});
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            RawFlip f;
            f.i = i;
            f.j = j;
            f.pairs.push_back({"l" + std::to_string(i), "l" + std::to_string(j),
                               "l" + std::to_string(j), "l" + std::to_string(i)});
            spec.flips.push_back(f);
        }
    return spec;
}

GeneratedExample make_qn(const std::vector<long long>& params) {
    expect_params("qn", params, 1, "qn K (number of colors, 1..9)");
    long long K = params[0];
    if (K < 1 || K > 9) throw InputError("qn: K must be between 1 and 9");
    GeneratedExample ex;
    ex.name = "qn";
    ex.params = params;
    ex.graph = loops_with_swaps(static_cast<int>(K));
    RawWeights w;
    for (long long i = 1; i <= K; ++i) {
        w.m["l" + std::to_string(i)] = 1;
        w.n["l" + std::to_string(i)] = kPrimes[i - 1];
    }
    ex.weights = w;
    return ex;
}

GeneratedExample make_ex53(const std::vector<long long>& params) {
    if (params.empty() || params.size() % 2 != 0)
        throw InputError("example ex53 takes weight pairs: ex53 p1 q1 [p2 q2 ...]");
    size_t k = params.size() / 2;
    if (k > 9) throw InputError("ex53: at most 9 loops");
    GeneratedExample ex;
    ex.name = "ex53";
    ex.params = params;
    ex.graph = loops_with_swaps(static_cast<int>(k));
    RawWeights w;
    for (size_t i = 0; i < k; ++i) {
        long long p = params[2 * i], q = params[2 * i + 1];
        if (p == 0) throw InputError("ex53: m weights must be nonzero");
        if (q < 1) throw InputError("ex53: n weights must be positive");
        w.m["l" + std::to_string(i + 1)] = p;
        w.n["l" + std::to_string(i + 1)] = q;
    }
    ex.weights = w;
    return ex;
}

GeneratedExample make_ex54(const std::vector<long long>& params) {
    expect_params("ex54", params, 6, "ex54 p0 q0 p1 q1 p2 q2");
    long long p0 = params[0], q0 = params[1];
    long long p1 = params[2], q1 = params[3];
    long long p2 = params[4], q2 = params[5];
    if (p0 == 0 || p1 == 0 || p2 == 0) throw InputError("ex54: m weights must be nonzero");
    if (q0 < 1 || q1 < 1 || q2 < 1) throw InputError("ex54: n weights must be positive");

    GeneratedExample ex;
    ex.name = "ex54";
    ex.params = params;
    RawGraphSpec& spec = ex.graph;
    spec.rank = 2;
    spec.vertices = {"left", "right"};
    spec.edges.push_back({"lam1", 1, "left", "left"});
    spec.edges.push_back({"lam2", 1, "right", "right"});
    spec.edges.push_back({"mu1", 2, "right", "left"});
    spec.edges.push_back({"mu2", 2, "left", "right"});
    RawFlip f;
    f.i = 1;
    f.j = 2;
    f.pairs.push_back({"lam1", "mu1", "mu1", "lam2"});
    f.pairs.push_back({"lam2", "mu2", "mu2", "lam1"});
    spec.flips.push_back(f);

    RawWeights w;
    w.m["lam1"] = p0;
    w.m["lam2"] = p0;
    w.n["lam1"] = q0;
    w.n["lam2"] = q0;
    w.m["mu1"] = p1;
    w.n["mu1"] = q1;
    w.m["mu2"] = p2;
    w.n["mu2"] = q2;
    ex.weights = w;
    return ex;
}

std::string coord_id(const std::vector<int>& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += "_";
        s += std::to_string(m[i]);
    }
    return s;
}

GeneratedExample make_omega(const std::vector<long long>& params) {
    expect_params("omega", params, 2, "omega k D (rank and truncation depth)");
    long long k = params[0], D = params[1];
    if (k < 1 || k > 6) throw InputError("omega: rank must be between 1 and 6");
    if (D < 1 || D > 6) throw InputError("omega: depth must be between 1 and 6");

    GeneratedExample ex;
    ex.name = "omega";
    ex.params = params;
    RawGraphSpec& spec = ex.graph;
    spec.rank = static_cast<int>(k);

    std::vector<Degree> grid = degrees_up_to(Degree::constant(static_cast<int>(k),
                                                              static_cast<int>(D)));
    for (const Degree& m : grid) spec.vertices.push_back(coord_id(m.coords()));

    auto edge_id = [&](int color, const Degree& at) {
        return "e" + std::to_string(color + 1) + "_" + coord_id(at.coords());
    };
    for (const Degree& m : grid)
        for (int c = 0; c < k; ++c) {
            if (m[c] >= D) continue;
            Degree s = m + Degree::unit(static_cast<int>(k), c);
            spec.edges.push_back({edge_id(c, m), c + 1, coord_id(s.coords()),
                                  coord_id(m.coords())});
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            RawFlip f;
            f.i = i + 1;
            f.j = j + 1;
            for (const Degree& m : grid) {
                if (m[i] >= D || m[j] >= D) continue;
                Degree mi = m + Degree::unit(static_cast<int>(k), i);
                Degree mj = m + Degree::unit(static_cast<int>(k), j);
                f.pairs.push_back({edge_id(i, m), edge_id(j, mi), edge_id(j, m), edge_id(i, mj)});
            }
            spec.flips.push_back(f);
        }
    return ex;
}

GeneratedExample make_free_loops(const std::vector<long long>& params) {
    expect_params("free_loops", params, 2, "free_loops k L (rank and loops per color)");
    long long k = params[0], L = params[1];
    if (k < 1 || k > 6) throw InputError("free_loops: rank must be between 1 and 6");
    if (L < 1 || L > 256) throw InputError("free_loops: loops per color must be 1..256");

    GeneratedExample ex;
    ex.name = "free_loops";
    ex.params = params;
    RawGraphSpec& spec = ex.graph;
    spec.rank = static_cast<int>(k);
    spec.vertices = {"v"};
    auto eid = [](long long c, long long t) {
        return "f" + std::to_string(c) + "_" + std::to_string(t);
    };
    for (long long c = 1; c <= k; ++c)
        for (long long t = 0; t < L; ++t) spec.edges.push_back({eid(c, t), static_cast<int>(c), "v", "v"});
    for (long long i = 1; i <= k; ++i)
        for (long long j = i + 1; j <= k; ++j) {
            RawFlip f;
            f.i = static_cast<int>(i);
            f.j = static_cast<int>(j);
            for (long long s = 0; s < L; ++s)
                for (long long t = 0; t < L; ++t)
                    f.pairs.push_back({eid(i, s), eid(j, t), eid(j, t), eid(i, s)});
            spec.flips.push_back(f);
        }
    return ex;
}

}  // namespace

GeneratedExample generate_example(const std::string& name,
                                  const std::vector<long long>& params) {
    if (name == "qn") return make_qn(params);
    if (name == "ex53") return make_ex53(params);
    if (name == "ex54") return make_ex54(params);
    if (name == "omega") return make_omega(params);
    if (name == "free_loops") return make_free_loops(params);
    throw InputError("unknown example " + name +
                     "; available: qn, ex53, ex54, omega, free_loops");
}

Classification classify_example(const std::string& name,
                                const std::vector<long long>& params) {
    if (name == "qn") {
        (void)make_qn(params);  // parameter validation only
        return {true, true};
    }
    if (name == "ex53") {
        (void)make_ex53(params);
        size_t k = params.size() / 2;
        Classification c;
        c.condition_a = true;
        for (size_t i = 0; i < k; ++i)
            if (abs_ll(params[2 * i]) == 1 && params[2 * i + 1] == 1) c.condition_a = false;
        bool some_nondivisible = false;
        for (size_t i = 0; i < k; ++i)
            if (params[2 * i] % params[2 * i + 1] != 0) some_nondivisible = true;
        c.simple_pi = c.condition_a && some_nondivisible;
        return c;
    }
    if (name == "ex54") {
        (void)make_ex54(params);
        long long p0 = params[0], q0 = params[1];
        long long p1 = params[2], q1 = params[3];
        long long p2 = params[4], q2 = params[5];
        Classification c;
        c.condition_a = !(abs_ll(p0) == 1 && q0 == 1) &&
                        abs_ll(checked_mul(p1, p2)) != checked_mul(q1, q2);
        c.simple_pi = c.condition_a && (p0 % q0 != 0 || checked_mul(p1, p2) % checked_mul(q1, q2) != 0);
        return c;
    }
    throw InputError("no classification rule for example " + name +
                     "; rules exist for qn, ex53 and ex54");
}

}  // namespace kgk
