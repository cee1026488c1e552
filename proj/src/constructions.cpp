#include "bihyp/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bihyp {

namespace {

void all_subsets_of_size(int n, int r, std::vector<Edge>& out) {
    Edge cur(r);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == r) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (r - depth); ++v) {
            cur[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

MixedHypergraph make_knlm(int n, int l, int m) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (l < 1 || l > n || m < 1 || m > n)
        throw std::invalid_argument("subset sizes must lie in [1, n]");
    std::vector<Edge> c, d;
    all_subsets_of_size(n, l, c);
    all_subsets_of_size(n, m, d);
    return MixedHypergraph(n, std::move(c), std::move(d));
}

int chain_vertex(int i, int j) {
    if (i < 1 || j < 1 || j > 5) throw std::invalid_argument("bad chain position");
    if (j > 3) j -= 3;  // slots 4, 5 alias 1, 2
    return 3 * (i - 1) + (j - 1);
}

BiHypergraph make_hk(int k) {
    if (k < 2) throw std::invalid_argument("chain needs k >= 2");
    std::vector<Edge> edges;
    for (int q = 1; q < k; ++q) {
        edges.push_back({chain_vertex(q, 1), chain_vertex(q, 2), chain_vertex(q, 3)});
        edges.push_back(
            {chain_vertex(q + 1, 1), chain_vertex(q + 1, 2), chain_vertex(q + 1, 3)});
        for (int j = 1; j <= 3; ++j)
            for (int t = 1; t <= 2; ++t)
                edges.push_back({chain_vertex(q + 1, j), chain_vertex(q, j),
                                 chain_vertex(q, j + t)});
    }
    // Consecutive block pairs repeat the shared triple; the family constructor
    // collapses those duplicates, leaving 7k - 6 edges.
    return BiHypergraph(3 * k, std::move(edges));
}

BiHypergraph make_fano() {
    std::vector<Edge> lines = {{4, 5, 6}, {0, 1, 4}, {1, 3, 6}, {0, 2, 6},
                               {0, 3, 5}, {2, 3, 4}, {1, 2, 5}};
    return BiHypergraph(7, std::move(lines));
}

std::string muc_family_name(int n) {
    if (n < 6) throw std::invalid_argument("minimal uncolorable families start at order 6");
    switch (n % 6) {
        case 0: return "muc-even";
        case 3: return "muc-odd";
        case 1: return "muc-plus1";
        case 4: return "muc-plus4";
        case 2: return "muc-plus2";
        default: return "muc-plus5";
    }
}

BiHypergraph make_muc(int n) {
    if (n < 6) throw std::invalid_argument("minimal uncolorable families start at order 6");
    int k = n / 6;
    int residue = n % 6;
    // Chain with b blocks; surgery below touches only the first and last block.
    auto chain_edges = [](int b) { return make_hk(b).edges(); };
    auto remove_triple = [](std::vector<Edge>& edges, int block) {
        Edge key = {chain_vertex(block, 1), chain_vertex(block, 2),
                    chain_vertex(block, 3)};
        std::sort(key.begin(), key.end());
        std::erase_if(edges, [&key](Edge e) {
            std::sort(e.begin(), e.end());
            return e == key;
        });
    };

    std::vector<Edge> edges;
    int order = n;
    switch (residue) {
        case 0: {  // drop the last block triple, tie it back to the first block
            int b = 2 * k;
            edges = chain_edges(b);
            remove_triple(edges, b);
            for (int j = 1; j <= 3; ++j)
                edges.push_back({chain_vertex(1, j), chain_vertex(b, j + 1),
                                 chain_vertex(b, j + 2)});
            break;
        }
        case 3: {
            int b = 2 * k + 1;
            edges = chain_edges(b);
            remove_triple(edges, b);
            for (int j = 1; j <= 3; ++j)
                edges.push_back({chain_vertex(1, j), chain_vertex(b, j),
                                 chain_vertex(b, j + 1)});
            break;
        }
        case 1: {  // one fresh vertex joining both chain ends
            int b = 2 * k;
            int v = 3 * b;
            edges = chain_edges(b);
            for (int j = 1; j <= 3; ++j)
                edges.push_back({v, chain_vertex(1, j), chain_vertex(b, j + 1)});
            break;
        }
        case 4: {
            int b = 2 * k + 1;
            int v = 3 * b;
            edges = chain_edges(b);
            remove_triple(edges, 1);
            for (int i = 1; i <= 2; ++i)
                edges.push_back({v, chain_vertex(b, i), chain_vertex(b, i + 1)});
            for (int j = 1; j <= 3; ++j)
                edges.push_back({v, chain_vertex(1, j), chain_vertex(b, j)});
            break;
        }
        case 2: {  // two fresh vertices replacing the first block triple
            int b = 2 * k;
            int u = 3 * b, v = 3 * b + 1;
            edges = chain_edges(b);
            remove_triple(edges, 1);
            edges.push_back({u, chain_vertex(1, 1), chain_vertex(1, 2)});
            edges.push_back({v, chain_vertex(1, 2), chain_vertex(1, 3)});
            for (int j = 1; j <= 2; ++j) {
                edges.push_back({u, chain_vertex(1, j), chain_vertex(b, 3 - j)});
                edges.push_back({v, chain_vertex(1, j + 1), chain_vertex(b, 4 - j)});
            }
            break;
        }
        default: {  // residue 5
            int b = 2 * k + 1;
            int u = 3 * b, v = 3 * b + 1;
            edges = chain_edges(b);
            remove_triple(edges, 1);
            edges.push_back({u, chain_vertex(1, 1), chain_vertex(1, 2)});
            edges.push_back({v, chain_vertex(1, 2), chain_vertex(1, 3)});
            for (int j = 1; j <= 2; ++j) {
                edges.push_back({u, chain_vertex(1, j), chain_vertex(b, j)});
                edges.push_back({v, chain_vertex(1, j + 1), chain_vertex(b, j + 1)});
            }
            break;
        }
    }
    return BiHypergraph(order, std::move(edges));
}

MixedHypergraph build(const ConstructionSpec& spec) {
    const std::string& f = spec.family;
    if (f == "knlm") return make_knlm(spec.n, spec.l, spec.m);
    if (f == "hk") return make_hk(spec.k).mixed();
    if (f == "fano") return make_fano().mixed();
    if (f.rfind("muc", 0) == 0) {
        BiHypergraph h = make_muc(spec.n);
        if (f != "muc" && f != muc_family_name(spec.n))
            throw std::invalid_argument("order " + std::to_string(spec.n) +
                                        " belongs to family " + muc_family_name(spec.n));
        return h.mixed();
    }
    throw std::invalid_argument("unknown family: " + f);
}

Provenance provenance_of(const ConstructionSpec& spec) {
    Provenance p;
    p.family = spec.family;
    if (spec.family == "knlm") {
        p.params = {{"n", spec.n}, {"l", spec.l}, {"m", spec.m}};
    } else if (spec.family == "hk") {
        p.params = {{"k", spec.k}};
    } else if (spec.family == "fano") {
        p.params = {};
    } else if (spec.family.rfind("muc", 0) == 0) {
        p.family = muc_family_name(spec.n);
        p.params = {{"n", spec.n}};
    } else {
        throw std::invalid_argument("unknown family: " + spec.family);
    }
    return p;
}

}  // namespace bihyp
