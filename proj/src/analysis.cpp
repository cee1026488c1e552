#include "bihyp/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace bihyp {

namespace {

int required_uniformity(const MixedHypergraph& h, const char* who) {
    auto r = h.uniformity();
    if (!r)
        throw std::invalid_argument(std::string(who) +
                                    " needs a uniform instance with at least one edge");
    return *r;
}

const double kEuler = std::exp(1.0);

}  // namespace

BoundReport lll_size_bound(const BiHypergraph& h) {
    int r = required_uniformity(h, "lll_size_bound");
    BoundReport rep;
    rep.bound = "lll-size";
    rep.threshold = std::pow(r - 1, r - 1);
    rep.measured = h.size();
    rep.satisfied = rep.measured < rep.threshold;
    rep.conclusion = rep.satisfied ? "colorable" : "no conclusion";
    return rep;
}

BoundReport lll_incidence_bound(const BiHypergraph& h) {
    int r = required_uniformity(h, "lll_incidence_bound");
    BoundReport rep;
    rep.bound = "lll-incidence";
    rep.threshold = std::pow(r - 1, r - 1) / kEuler - 1.0;
    int worst = 0;
    const auto& members = h.mixed().members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        int touching = 0;
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && members[i].mask.intersects(members[j].mask)) ++touching;
        worst = std::max(worst, touching);
    }
    rep.measured = worst;
    // The guarantee is stated for r >= 4; below that the report stays
    // inconclusive even when the numeric comparison would hold.
    rep.satisfied = r >= 4 && rep.measured < rep.threshold - kEpsilon;
    rep.conclusion = rep.satisfied
                         ? "colorable with at most " + std::to_string(r - 1) + " colors"
                         : "no conclusion";
    return rep;
}

BoundReport degree_bound(const BiHypergraph& h) {
    int r = required_uniformity(h, "degree_bound");
    BoundReport rep;
    rep.bound = "degree";
    rep.threshold = (std::pow(r - 1, r - 1) / kEuler - 2.0) / r;
    int worst = 0;
    for (int v = 0; v < h.n(); ++v) worst = std::max(worst, h.mixed().degree(v));
    rep.measured = worst;
    rep.satisfied = rep.measured <= rep.threshold + kEpsilon;
    rep.conclusion = rep.satisfied ? "colorable" : "no conclusion";
    return rep;
}

std::vector<BoundReport> all_bounds(const BiHypergraph& h) {
    return {lll_size_bound(h), lll_incidence_bound(h), degree_bound(h)};
}

std::pair<int, int> handshake_min_degree(const MixedHypergraph& h) {
    if (h.n() < 1) throw std::invalid_argument("needs at least one vertex");
    int vertex = 0;
    int deg = h.degree(0);
    for (int v = 1; v < h.n(); ++v)
        if (h.degree(v) < deg) {
            deg = h.degree(v);
            vertex = v;
        }
    if (auto r = h.uniformity()) {
        long long m = static_cast<long long>(h.members().size());
        if (deg > *r * m / h.n())
            throw std::logic_error("incidence count violated");
    }
    return {vertex, deg};
}

PartitionWitness partition_witness(const MixedHypergraph& h,
                                   const std::vector<std::vector<int>>& parts) {
    std::vector<int> part_of(h.n(), -1);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) throw std::invalid_argument("empty part");
        for (int v : parts[p]) {
            if (v < 0 || v >= h.n()) throw std::out_of_range("vertex out of range");
            if (part_of[v] >= 0)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two parts");
            part_of[v] = static_cast<int>(p);
        }
    }
    for (int v = 0; v < h.n(); ++v)
        if (part_of[v] < 0)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is not covered by the partition");

    PartitionWitness out;
    for (const EdgeMember& m : h.members()) {
        int first = part_of[m.verts.front()];
        bool inside_one = true;
        int touched[64];
        int distinct = 0;
        for (int v : m.verts) {
            int p = part_of[v];
            if (p != first) inside_one = false;
            bool fresh = true;
            for (int i = 0; i < distinct; ++i)
                if (touched[i] == p) { fresh = false; break; }
            if (fresh && distinct < 64) touched[distinct++] = p;
        }
        if (inside_one) {
            out.violation = "part " + std::to_string(first) +
                            " is not independent: it contains an edge";
            return out;
        }
        if (distinct >= static_cast<int>(m.verts.size())) {
            out.violation = "an edge meets " + std::to_string(distinct) +
                            " parts, not fewer than its size";
            return out;
        }
    }
    std::vector<int> labels(h.n());
    for (int v = 0; v < h.n(); ++v) labels[v] = part_of[v];
    out.coloring = Coloring::from_labels(labels);
    if (!is_proper(h, *out.coloring))
        throw std::logic_error("partition witness produced an improper coloring");
    return out;
}

std::optional<Coloring> complement_pair_witness(const BiHypergraph& h) {
    int r = required_uniformity(h, "complement_pair_witness");
    if (r < 3) throw std::invalid_argument("needs edge size at least 3");
    if (h.n() != 2 * r)
        throw std::invalid_argument("needs exactly 2r vertices");
    const std::vector<Edge>& edges = h.edges();
    auto is_edge = [&edges](const Edge& e) {
        return std::binary_search(edges.begin(), edges.end(), e);
    };
    // r-subsets containing vertex 0, lexicographic: each complementary pair once.
    Edge s(r);
    s[0] = 0;
    std::optional<Coloring> found;
    auto rec = [&](auto&& self, int depth, int next) -> bool {
        if (depth == r) {
            Edge t;
            t.reserve(r);
            std::size_t si = 0;
            for (int v = 0; v < h.n(); ++v) {
                if (si < s.size() && s[si] == v) ++si;
                else t.push_back(v);
            }
            if (is_edge(s) || is_edge(t)) return false;
            std::vector<int> labels(h.n(), 1);
            for (int v : s) labels[v] = 0;
            found = Coloring::from_labels(labels);
            return true;
        }
        for (int v = next; v <= h.n() - (r - depth); ++v) {
            s[depth] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    rec(rec, 1, 1);
    if (found && !is_proper(h, *found))
        throw std::logic_error("complement pair witness is improper");
    return found;
}

std::optional<std::pair<int, int>> find_nonadjacent_pair(const MixedHypergraph& h) {
    std::vector<Bitset> adj(h.n(), Bitset(h.n()));
    for (const EdgeMember& m : h.members())
        for (int v : m.verts) adj[v] |= m.mask;
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (!adj[u].test(v)) return std::make_pair(u, v);
    return std::nullopt;
}

IdentifyResult identify(const MixedHypergraph& h, int u, int v) {
    if (u < 0 || u >= h.n() || v < 0 || v >= h.n())
        throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("identify needs two distinct vertices");
    for (const EdgeMember& m : h.members())
        if (m.mask.test(u) && m.mask.test(v))
            throw std::invalid_argument("identify needs a non-adjacent pair");

    int a = std::min(u, v), b = std::max(u, v);
    std::vector<int> image(h.n());
    for (int x = 0; x < h.n(); ++x) image[x] = x < b ? x : x - 1;
    image[b] = a;

    int dropped = 0;
    auto rewrite = [&](const std::vector<Edge>& from) {
        std::vector<Edge> mapped;
        for (const Edge& e : from) {
            Edge img;
            img.reserve(e.size());
            for (int x : e) img.push_back(image[x]);
            std::sort(img.begin(), img.end());
            mapped.push_back(std::move(img));
        }
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        // Keep minimal edges; drop any that now contain another. A coloring
        // proper for the subset stays proper for the superset on both sides.
        std::stable_sort(mapped.begin(), mapped.end(),
                         [](const Edge& x, const Edge& y) {
                             return x.size() < y.size();
                         });
        std::vector<Edge> kept;
        for (const Edge& e : mapped) {
            bool superset = false;
            for (const Edge& k : kept)
                if (k.size() < e.size() &&
                    std::includes(e.begin(), e.end(), k.begin(), k.end())) {
                    superset = true;
                    break;
                }
            if (superset) ++dropped;
            else kept.push_back(e);
        }
        return kept;
    };

    IdentifyResult out{MixedHypergraph(h.n() - 1, rewrite(h.c_edges()),
                                       rewrite(h.d_edges())),
                       std::move(image), a, 0};
    out.dropped_edges = dropped;
    return out;
}

Coloring lift_coloring(const IdentifyResult& r, const Coloring& c) {
    if (static_cast<int>(c.colors.size()) != r.h.n())
        throw std::out_of_range("coloring length does not match the quotient");
    std::vector<int> labels(r.image.size());
    for (std::size_t x = 0; x < r.image.size(); ++x) labels[x] = c.colors[r.image[x]];
    return Coloring::from_labels(labels);
}

bool reduction_applies(long long n, long long r, long long m) {
    if (n < 1 || r < 1 || m < 0) throw std::invalid_argument("bad parameters");
    return n >= (r * m / (n + 1)) * (r - 1) + 1;
}

MinimalityReport is_minimal_uncolorable(const BiHypergraph& h, int jobs) {
    MinimalityReport out;
    out.base = decide_colorable(h);
    if (out.base.status == Status::Colorable) return out;

    const std::vector<Edge>& edges = h.edges();
    out.deletions.resize(edges.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= edges.size()) break;
            out.deletions[i] = {edges[i],
                                decide_colorable(delete_edge(h.mixed(), edges[i]))};
        }
    };
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<std::size_t>(jobs, edges.size() > 0 ? edges.size() : 1);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    out.minimal_uncolorable =
        !edges.empty() &&
        std::all_of(out.deletions.begin(), out.deletions.end(), [](const auto& d) {
            return d.second.status == Status::Colorable;
        });
    return out;
}

std::optional<std::vector<int>> contains_k533(const BiHypergraph& h) {
    if (auto r = h.mixed().uniformity(); !r || *r != 3)
        throw std::invalid_argument("contains_k533 needs a 3-uniform instance");
    if (h.n() < 5) return std::nullopt;
    std::vector<int> s(5);
    auto rec = [&](auto&& self, int depth, int next) -> bool {
        if (depth == 5) {
            Bitset mask(h.n());
            for (int v : s) mask.set(v);
            int inside = 0;
            for (const EdgeMember& m : h.mixed().members())
                if (m.mask.is_subset_of(mask)) ++inside;
            return inside == 10;
        }
        for (int v = next; v <= h.n() - (5 - depth); ++v) {
            s[depth] = v;
            if (self(self, depth + 1, v + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return s;
    return std::nullopt;
}

namespace {

// Connectivity of the vertex graph induced by all members except skip.
bool connected_without(const MixedHypergraph& h, int skip) {
    int n = h.n();
    if (n <= 1) return true;
    std::vector<std::vector<int>> inc(n);
    const auto& members = h.members();
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (static_cast<int>(k) == skip) continue;
        for (int v : members[k].verts) inc[v].push_back(static_cast<int>(k));
    }
    std::vector<char> vseen(n, 0), eseen(members.size(), 0);
    std::vector<int> stack{0};
    vseen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int k : inc[v]) {
            if (eseen[k]) continue;
            eseen[k] = 1;
            for (int w : members[k].verts)
                if (!vseen[w]) {
                    vseen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
    }
    return reached == n;
}

}  // namespace

bool is_two_edge_connected(const MixedHypergraph& h) {
    if (!connected_without(h, -1)) return false;
    for (std::size_t k = 0; k < h.members().size(); ++k)
        if (!connected_without(h, static_cast<int>(k))) return false;
    return true;
}

}  // namespace bihyp
