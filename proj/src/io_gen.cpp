#include "efc/io_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace efc {

// --- documents --------------------------------------------------------------

PlaneGraph parse_graph(const std::string &text) {
    std::vector<std::pair<int, std::vector<int>>> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word != "vertex")
            throw Error(Errc::syntax_error,
                        "line " + std::to_string(lineno) + ": expected 'vertex'");
        std::string idtok;
        if (!(ls >> idtok) || idtok.back() != ':')
            throw Error(Errc::syntax_error,
                        "line " + std::to_string(lineno) + ": expected '<id>:'");
        idtok.pop_back();
        int id;
        try {
            id = std::stoi(idtok);
        } catch (...) {
            throw Error(Errc::syntax_error,
                        "line " + std::to_string(lineno) + ": bad vertex id");
        }
        std::vector<int> nbrs;
        int w;
        while (ls >> w) nbrs.push_back(w);
        if (!ls.eof())
            throw Error(Errc::syntax_error,
                        "line " + std::to_string(lineno) + ": bad neighbour list");
        entries.emplace_back(id, std::move(nbrs));
    }
    if (entries.empty()) throw Error(Errc::syntax_error, "empty graph document");

    int n = 0;
    for (const auto &e : entries) n = std::max(n, e.first + 1);
    std::vector<std::vector<int>> rot(n);
    std::vector<bool> seen(n, false);
    for (auto &e : entries) {
        if (e.first < 0 || seen[e.first])
            throw Error(Errc::semantic_error,
                        "duplicate or negative vertex id " + std::to_string(e.first));
        seen[e.first] = true;
        rot[e.first] = std::move(e.second);
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            throw Error(Errc::semantic_error, "vertex ids are not dense: missing " +
                                                  std::to_string(v));
    try {
        return PlaneGraph::from_rotations(std::move(rot));
    } catch (const Error &err) {
        throw Error(Errc::semantic_error, err.what());
    }
}

std::string serialise_graph(const PlaneGraph &g, const std::string &comment) {
    std::ostringstream os;
    os << "# efc-graph 1\n";
    if (!comment.empty()) os << "# " << comment << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "vertex " << v << ":";
        const auto &nb = g.neighbours(v);
        if (!nb.empty()) {
            // start the cyclic list at the smallest neighbour
            int start = static_cast<int>(
                std::min_element(nb.begin(), nb.end()) - nb.begin());
            for (size_t i = 0; i < nb.size(); ++i)
                os << " " << nb[(start + i) % nb.size()];
        }
        os << "\n";
    }
    return os.str();
}

EdgeFaceColouring parse_colouring(const PlaneGraph &g, const std::string &text) {
    EdgeFaceColouring c = EdgeFaceColouring::empty(g);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        auto bad = [&](const std::string &why) {
            return Error(Errc::syntax_error, "line " + std::to_string(lineno) + ": " + why);
        };
        if (word == "edge") {
            int u, v, col;
            std::string sep;
            if (!(ls >> u >> v >> sep >> col) || sep != ":")
                throw bad("expected 'edge <u> <v> : <colour>'");
            int e = g.find_edge(u, v);
            if (e < 0)
                throw Error(Errc::unknown_element, "no edge " + std::to_string(u) + "-" +
                                                       std::to_string(v));
            c.edge[e] = col;
        } else if (word == "face") {
            std::string ftok, sep;
            int col;
            if (!(ls >> ftok >> sep >> col) || sep != ":" || ftok.empty() || ftok[0] != 'f')
                throw bad("expected 'face f<id> : <colour>'");
            int f;
            try {
                f = std::stoi(ftok.substr(1));
            } catch (...) {
                throw bad("bad face id");
            }
            if (f < 0 || f >= g.face_count())
                throw Error(Errc::unknown_element, "no face " + ftok);
            c.face[f] = col;
        } else {
            throw bad("expected 'edge' or 'face'");
        }
    }
    return c;
}

std::string serialise_colouring(const PlaneGraph &g, const EdgeFaceColouring &c) {
    std::ostringstream os;
    os << "# efc-colouring 1\n";
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.edge[e] != 0)
            os << "edge " << g.edge(e).u << " " << g.edge(e).v << " : " << c.edge[e] << "\n";
    for (int f = 0; f < g.face_count(); ++f)
        if (c.face[f] != 0) os << "face f" << f << " : " << c.face[f] << "\n";
    return os.str();
}

// --- rng ---------------------------------------------------------------------

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw Error(Errc::precondition_violated, "Rng::below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

// --- generators ----------------------------------------------------------------

GenKind gen_kind_from_name(const std::string &name) {
    if (name == "tree") return GenKind::Tree;
    if (name == "star") return GenKind::Star;
    if (name == "cycle") return GenKind::Cycle;
    if (name == "platonic") return GenKind::Platonic;
    if (name == "triangulation") return GenKind::Triangulation;
    if (name == "subgraph") return GenKind::Subgraph;
    throw Error(Errc::infeasible_parameters, "unknown generator kind '" + name + "'");
}

namespace {

PlaneGraph gen_tree(int n, int max_degree, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::infeasible_parameters, "tree needs n >= 1");
    Rng rng(seed);
    std::vector<std::vector<int>> rot(n);
    for (int v = 1; v < n; ++v) {
        // random earlier vertex with spare degree
        std::vector<int> cand;
        for (int u = 0; u < v; ++u)
            if (static_cast<int>(rot[u].size()) < max_degree) cand.push_back(u);
        if (cand.empty())
            throw Error(Errc::infeasible_parameters, "degree cap too tight for tree");
        int u = cand[rng.below(cand.size())];
        rot[u].insert(rot[u].begin() + rng.below(rot[u].size() + 1), v);
        rot[v].push_back(u);
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph gen_star(int n, int max_degree) {
    if (n < 2) throw Error(Errc::infeasible_parameters, "star needs n >= 2");
    if (n - 1 > max_degree)
        throw Error(Errc::infeasible_parameters, "star exceeds the degree cap");
    std::vector<std::vector<int>> rot(n);
    for (int v = 1; v < n; ++v) {
        rot[0].push_back(v);
        rot[v].push_back(0);
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph gen_cycle(int n) {
    if (n < 3) throw Error(Errc::infeasible_parameters, "cycle needs n >= 3");
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        rot[v].push_back((v + 1) % n);
        rot[v].push_back((v + n - 1) % n);
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

// flip the diagonal uv of the quadrilateral formed by its two side
// triangles; returns false if the flip would break simplicity or the cap
bool try_flip(PlaneGraph &g, int u, int v, int max_degree) {
    int fa = g.face_at(u, v, 0), fb = g.face_at(u, v, 1);
    if (fa == fb || g.face_degree(fa) != 3 || g.face_degree(fb) != 3) return false;
    int c = -1, d = -1;
    for (int t : g.face_vertices(fa))
        if (t != u && t != v) c = t;
    for (int t : g.face_vertices(fb))
        if (t != u && t != v) d = t;
    if (c == d || g.adjacent(c, d)) return false;
    if (g.degree(c) + 1 > max_degree || g.degree(d) + 1 > max_degree) return false;
    if (g.degree(u) <= 3 || g.degree(v) <= 3) return false;

    auto rot = g.rotations();
    auto erase_from = [&](int a, int b) {
        auto &list = rot[a];
        list.erase(std::find(list.begin(), list.end(), b));
    };
    // in rot[c] the corner of the uv-side triangle makes u follow v (or the
    // reverse, depending on orientation); insert d between them
    auto insert_between = [&](int a, int p, int q, int nv) {
        auto &list = rot[a];
        for (size_t i = 0; i < list.size(); ++i) {
            size_t j = (i + 1) % list.size();
            if ((list[i] == p && list[j] == q) || (list[i] == q && list[j] == p)) {
                list.insert(list.begin() + j, nv);
                return;
            }
        }
        list.push_back(nv);
    };
    erase_from(u, v);
    erase_from(v, u);
    insert_between(c, u, v, d);
    insert_between(d, u, v, c);
    g = PlaneGraph::from_rotations(std::move(rot));
    return true;
}

PlaneGraph gen_triangulation(int n, int max_degree, std::uint64_t seed) {
    if (n < 3) throw Error(Errc::infeasible_parameters, "triangulation needs n >= 3");
    if (max_degree < 4 && n > 4)
        throw Error(Errc::infeasible_parameters, "degree cap too tight");
    Rng rng(seed);
    // grow from K3 by inserting a vertex into a random triangle whose
    // corners all have spare degree, preferring low-degree corners; when no
    // face qualifies, spread the degrees with diagonal flips and retry
    std::vector<std::vector<int>> rot{{1, 2}, {2, 0}, {0, 1}};
    PlaneGraph g = PlaneGraph::from_rotations(rot);
    int stuck = 0;
    while (g.vertex_count() < n) {
        std::vector<int> eligible;
        int best = 3 * max_degree + 1;
        for (int f = 0; f < g.face_count(); ++f) {
            int worst = 0, sum = 0;
            for (int d : g.face(f).boundary) {
                worst = std::max(worst, g.degree(g.dart_tail(d)));
                sum += g.degree(g.dart_tail(d));
            }
            if (worst + 1 > max_degree) continue;
            if (sum < best) {
                best = sum;
                eligible.clear();
            }
            if (sum == best) eligible.push_back(f);
        }
        if (eligible.empty()) {
            // repair: flip edges away from saturated vertices
            if (++stuck > 200)
                throw Error(Errc::infeasible_parameters,
                            "no insertable face under the degree cap");
            std::vector<Edge> edges = g.edges();
            for (size_t i = edges.size(); i > 1; --i)
                std::swap(edges[i - 1], edges[rng.below(i)]);
            for (const Edge &e : edges) {
                if (g.degree(e.u) < max_degree && g.degree(e.v) < max_degree) continue;
                if (try_flip(g, e.u, e.v, max_degree)) break;
            }
            continue;
        }
        stuck = 0;
        int f = eligible[rng.below(eligible.size())];
        // walk corners (a->b, b->c, c->a); the new vertex x goes inside:
        // at each corner vertex insert x right after the walk-in neighbour,
        // and x's own clockwise rotation is the reversed walk
        auto walk = g.face(f).boundary;
        int a = g.dart_tail(walk[0]), b = g.dart_tail(walk[1]), c = g.dart_tail(walk[2]);
        auto r = g.rotations();
        int x = static_cast<int>(r.size());
        auto insert_after = [&](int w, int after) {
            auto &list = r[w];
            for (size_t i = 0; i < list.size(); ++i)
                if (list[i] == after) {
                    list.insert(list.begin() + i + 1, x);
                    return;
                }
        };
        insert_after(a, c);
        insert_after(b, a);
        insert_after(c, b);
        r.push_back({a, c, b});
        g = PlaneGraph::from_rotations(std::move(r));
    }
    return g;
}

PlaneGraph gen_subgraph(int n, int max_degree, std::uint64_t seed) {
    PlaneGraph g = gen_triangulation(n, max_degree, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> order = g.edges();
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    for (const Edge &e : order) {
        if (!rng.chance(3, 10)) continue;
        if (g.find_edge(e.u, e.v) < 0) continue;
        if (g.is_bridge(e.u, e.v)) continue;
        g = delete_edge(g, e.u, e.v);
    }
    return g;
}

struct Vec3 {
    double x, y, z;
};

Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Vec3 normalise(Vec3 a) {
    double l = std::sqrt(dot(a, a));
    return {a.x / l, a.y / l, a.z / l};
}

PlaneGraph from_coordinates(const std::vector<Vec3> &pts, double adj_dist2) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            Vec3 d = pts[w] - pts[v];
            if (dot(d, d) < adj_dist2) nb.push_back(w);
        }
        // sort around the outward normal; consistent handedness across all
        // vertices of a convex solid yields a genus-0 rotation system
        Vec3 nrm = normalise(pts[v]);
        Vec3 ref{1.0, 0.0, 0.0};
        if (std::abs(dot(nrm, ref)) > 0.9) ref = {0.0, 1.0, 0.0};
        Vec3 e1 = normalise(cross(nrm, ref));
        Vec3 e2 = cross(nrm, e1);
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            Vec3 da = pts[a] - pts[v], db = pts[b] - pts[v];
            double aa = std::atan2(dot(da, e2), dot(da, e1));
            double ab = std::atan2(dot(db, e2), dot(db, e1));
            return aa < ab;
        });
        rot[v] = std::move(nb);
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

} // namespace

PlaneGraph platonic_solid(int n) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> pts;
    switch (n) {
    case 4:
        pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        return from_coordinates(pts, 9.0); // all pairs adjacent (dist^2 = 8)
    case 6:
        pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        return from_coordinates(pts, 3.0); // edges dist^2 = 2, antipodal 4
    case 8:
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});
        return from_coordinates(pts, 5.0); // edges dist^2 = 4
    case 12:
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                pts.push_back({0, double(s1), s2 * phi});
                pts.push_back({double(s1), s2 * phi, 0});
                pts.push_back({s1 * phi, 0, double(s2)});
            }
        return from_coordinates(pts, 4.5); // edges dist^2 = 4, next 4phi^2
    case 20: {
        for (int sx : {-1, 1})
            for (int sy : {-1, 1})
                for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                pts.push_back({0, s1 / phi, s2 * phi});
                pts.push_back({s1 / phi, s2 * phi, 0});
                pts.push_back({s1 * phi, 0, s2 / phi});
            }
        return from_coordinates(pts, 2.0); // edges dist^2 = 4/phi^2 ~ 1.53
    }
    default:
        throw Error(Errc::infeasible_parameters,
                    "no platonic solid with " + std::to_string(n) +
                        " vertices (use 4, 6, 8, 12 or 20)");
    }
}

PlaneGraph generate(GenKind kind, int n, int max_degree, std::uint64_t seed) {
    switch (kind) {
    case GenKind::Tree: return gen_tree(n, max_degree, seed);
    case GenKind::Star: return gen_star(n, max_degree);
    case GenKind::Cycle: return gen_cycle(n);
    case GenKind::Platonic: return platonic_solid(n);
    case GenKind::Triangulation: return gen_triangulation(n, max_degree, seed);
    case GenKind::Subgraph: return gen_subgraph(n, max_degree, seed);
    }
    throw Error(Errc::infeasible_parameters, "unknown generator kind");
}

// --- enumeration -----------------------------------------------------------------

std::vector<int> canonical_form(const PlaneGraph &g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        // perm[old] = new id
        std::vector<std::vector<int>> rel(n);
        for (int v = 0; v < n; ++v) {
            auto &dst = rel[perm[v]];
            for (int w : g.neighbours(v)) dst.push_back(perm[w]);
            if (!dst.empty()) {
                int start = static_cast<int>(
                    std::min_element(dst.begin(), dst.end()) - dst.begin());
                std::rotate(dst.begin(), dst.begin() + start, dst.end());
            }
        }
        std::vector<int> enc{n};
        for (int v = 0; v < n; ++v) {
            enc.push_back(static_cast<int>(rel[v].size()));
            enc.insert(enc.end(), rel[v].begin(), rel[v].end());
        }
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

PlaneGraph graph_of_form(const std::vector<int> &enc) {
    int n = enc[0];
    std::vector<std::vector<int>> rot(n);
    size_t i = 1;
    for (int v = 0; v < n; ++v) {
        int deg = enc[i++];
        for (int j = 0; j < deg; ++j) rot[v].push_back(enc[i++]);
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

// face-orbit count of a rotation system without building a PlaneGraph
// (hot path of the enumerator)
int fast_face_count(const std::vector<std::vector<int>> &rot) {
    const int n = static_cast<int>(rot.size());
    int offset[8] = {0};
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<int>(rot[v].size());
    const int nd = offset[n];
    int pos[8][8]; // pos[v][u]: index of u in rot[v]
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[v][rot[v][i]] = i;
    int faces = 0;
    bool seen[64] = {false};
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        ++faces;
        int cur = d;
        do {
            seen[cur] = true;
            // find tail of cur
            int v = 0;
            while (offset[v + 1] <= cur) ++v;
            int head = rot[v][cur - offset[v]];
            // twin, then next clockwise around head
            int i = pos[head][v];
            cur = offset[head] + (i + 1) % static_cast<int>(rot[head].size());
        } while (cur != d);
    }
    return faces;
}

void rotation_systems(const std::vector<std::vector<int>> &adj, int v,
                      std::vector<std::vector<int>> &rot,
                      const std::function<void()> &emit) {
    if (v == static_cast<int>(adj.size())) {
        emit();
        return;
    }
    // cyclic orders: fix the smallest neighbour first, permute the rest
    std::vector<int> rest(adj[v].begin() + 1, adj[v].end());
    std::sort(rest.begin(), rest.end());
    do {
        rot[v].clear();
        rot[v].push_back(adj[v][0]);
        rot[v].insert(rot[v].end(), rest.begin(), rest.end());
        rotation_systems(adj, v + 1, rot, emit);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

// smallest relabelling of the upper-triangular adjacency, used to collapse
// labelled graphs to one representative before rotations are enumerated
std::vector<int> adjacency_canon(const std::vector<std::vector<int>> &adj) {
    const int n = static_cast<int>(adj.size());
    bool edge[8][8] = {{false}};
    for (int v = 0; v < n; ++v)
        for (int u : adj[v]) edge[v][u] = true;
    std::vector<int> perm(n), inv(n), best;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int v = 0; v < n; ++v) inv[perm[v]] = v;
        std::vector<int> enc;
        enc.reserve(n * (n - 1) / 2);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) enc.push_back(edge[inv[a]][inv[b]] ? 1 : 0);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<PlaneGraph> enumerate_small(int max_vertices) {
    if (max_vertices < 2 || max_vertices > 6)
        throw Error(Errc::precondition_violated, "enumerate_small supports 2..6 vertices");

    std::set<std::vector<int>> forms;
    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        const int np = static_cast<int>(pairs.size());
        std::set<std::vector<int>> graph_reps; // unlabelled pre-deduplication
        for (unsigned mask = 1; mask < (1u << np); ++mask) {
            int m = __builtin_popcount(mask);
            if (m > 3 * n - 6 && n >= 3) continue; // cannot be planar
            std::vector<std::vector<int>> adj(n);
            for (int i = 0; i < np; ++i)
                if (mask & (1u << i)) {
                    adj[pairs[i].first].push_back(pairs[i].second);
                    adj[pairs[i].second].push_back(pairs[i].first);
                }
            // connected, no isolated vertices
            std::vector<int> stack{0}, seen(n, 0);
            seen[0] = 1;
            int cnt = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : adj[x])
                    if (!seen[w]) {
                        seen[w] = 1;
                        ++cnt;
                        stack.push_back(w);
                    }
            }
            if (cnt != n) continue;
            if (!graph_reps.insert(adjacency_canon(adj)).second)
                continue; // a relabelling was already processed

            const int edges = m;
            std::vector<std::vector<int>> rot(n);
            rotation_systems(adj, 0, rot, [&]() {
                if (n - edges + fast_face_count(rot) != 2) return; // genus > 0
                forms.insert(canonical_form(PlaneGraph::from_rotations(rot)));
            });
        }
    }
    std::vector<PlaneGraph> out;
    out.reserve(forms.size());
    for (const auto &f : forms) out.push_back(graph_of_form(f));
    return out;
}

} // namespace efc
