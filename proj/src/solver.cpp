#include "efc/solver.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "efc/io_gen.hpp"

namespace efc {

namespace {

unsigned bit(int colour) { return colour > 0 ? 1u << (colour - 1) : 0u; }

int role(const ConfigMatch &m, const char *name) {
    for (const auto &b : m.vertices)
        if (std::strcmp(b.first, name) == 0) return b.second;
    throw Error(Errc::internal_extension_failure,
                std::string("missing role ") + name + " in " + m.describe());
}

// working-colouring helpers shared by the scripts
struct W {
    const PlaneGraph &g;
    EdgeFaceColouring &c;

    int &E(int u, int v) { return c.edge[g.edge_id(u, v)]; }
    int Ec(int u, int v) const { return c.edge[g.edge_id(u, v)]; }
    unsigned Ev(int v) const { return edge_colours_at(g, c, v); }
    int other_face(int u, int v, int notf) const {
        int f0 = g.face_at(u, v, 0);
        return f0 == notf ? g.face_at(u, v, 1) : f0;
    }
    // colour of the face on the side of uv away from notf (0 if uncoloured)
    int side_col(int u, int v, int notf) const { return c.face[other_face(u, v, notf)]; }
    bool greedy_edge(int u, int v) {
        unsigned m = forbidden_mask(g, c, Elem{Elem::EdgeKind, g.edge_id(u, v)});
        int col = smallest_free(m);
        if (col == 0) return false;
        E(u, v) = col;
        return true;
    }
    void swap_edges(int u1, int v1, int u2, int v2) { std::swap(E(u1, v1), E(u2, v2)); }
};

using Route = std::function<bool(EdgeFaceColouring &)>;

std::optional<EdgeFaceColouring> try_routes(const PlaneGraph &g,
                                            const EdgeFaceColouring &base,
                                            const std::vector<Route> &routes) {
    for (const Route &r : routes) {
        EdgeFaceColouring c = base;
        if (!r(c)) continue;
        if (!c.nice(g)) continue;
        if (!validate(g, c, false).valid()) continue;
        EdgeFaceColouring t = greedy_complete(g, c);
        if (validate(g, t, true).valid()) return t;
    }
    return std::nullopt;
}

// every colour choice for recolouring one edge adjacent to the uncoloured
// edge (p, q), then giving (p, q) the freed colour
void generic_adjacent_recolours(const PlaneGraph &g, int p, int q,
                                std::vector<Route> &routes) {
    std::set<Edge> adjacent;
    for (int end : {p, q})
        for (int w : g.neighbours(end))
            if (make_edge(end, w) != make_edge(p, q)) adjacent.insert(make_edge(end, w));
    for (const Edge &e : adjacent) {
        for (int xi = 1; xi <= kColours; ++xi) {
            routes.push_back([=](EdgeFaceColouring &c) {
                W w{g, c};
                int freed = w.Ec(e.u, e.v);
                if (freed == 0 || freed == xi) return false;
                w.E(e.u, e.v) = xi;
                w.E(p, q) = freed;
                return true;
            });
        }
    }
}

std::array<int, 10> build_perm(const std::vector<std::pair<int, int>> &want) {
    std::array<int, 10> perm{};
    std::array<bool, 10> used{};
    for (auto [from, to] : want) {
        perm[from] = to;
        used[to] = true;
    }
    for (int c = 1; c <= kColours; ++c) {
        if (perm[c] != 0) continue;
        int t = 1;
        while (used[t]) ++t;
        perm[c] = t;
        used[t] = true;
    }
    return perm;
}

void apply_perm(EdgeFaceColouring &c, const std::array<int, 10> &perm) {
    for (int &x : c.edge)
        if (x > 0) x = perm[x];
    for (int &x : c.face)
        if (x > 0) x = perm[x];
}

std::string persist_instance(const PlaneGraph &g, const std::string &why) {
    auto path = std::filesystem::temp_directory_path() /
                ("efc_failure_" + std::to_string(std::hash<std::string>{}(why) % 100000) +
                 ".graph");
    std::ofstream out(path);
    out << serialise_graph(g, why);
    return path.string();
}

} // namespace

std::string SolveStats::summary() const {
    std::ostringstream os;
    os << "base cases: " << base_cases << ", decompose splits: " << decompose_splits
       << "\n";
    for (const auto &[id, n] : script_ok) {
        os << config_name(id) << ": script " << n;
        auto it = fallback_ok.find(id);
        if (it != fallback_ok.end()) os << ", fallback " << it->second;
        os << "\n";
    }
    for (const auto &[id, n] : fallback_ok)
        if (!script_ok.count(id)) os << config_name(id) << ": fallback " << n << "\n";
    return os.str();
}

long long SolveStats::total_fallbacks() const {
    long long t = 0;
    for (const auto &[id, n] : fallback_ok) t += n;
    return t;
}

EligibleCut find_eligible_cut(const PlaneGraph &g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        auto comps = components_without(g, v);
        if (comps.size() < 2) continue;
        const auto &rv = g.neighbours(v);
        const int d = g.degree(v);
        for (const auto &comp : comps) {
            std::vector<int> pos;
            for (int i = 0; i < d; ++i)
                if (std::binary_search(comp.begin(), comp.end(), rv[i])) pos.push_back(i);
            bool ok = pos.size() == 1 ||
                      (pos.size() == 2 && ((pos[0] + 1) % d == pos[1] ||
                                           (pos[1] + 1) % d == pos[0]));
            if (ok) return EligibleCut{true, v, comp.front()};
        }
    }
    return EligibleCut{};
}

EdgeFaceColouring merge_split(const PlaneGraph &g, const SplitResult &sr,
                              const EdgeFaceColouring &c1in,
                              const EdgeFaceColouring &c2in) {
    EdgeFaceColouring c1 = c1in, c2 = c2in;
    const SplitRecord &rec = sr.rec;
    const int v1 = rec.map1[rec.v], v2 = rec.map2[rec.v];

    // normalise the component side: boundary face to 1, its edges at v high
    const auto &nb1 = sr.g1.neighbours(v1);
    int f1col = c1.face[rec.f1];
    if (nb1.size() == 2) {
        int a = c1.edge[sr.g1.edge_id(v1, nb1[0])];
        int b = c1.edge[sr.g1.edge_id(v1, nb1[1])];
        apply_perm(c1, build_perm({{f1col, 1}, {a, 8}, {b, 9}}));
    } else {
        int a = c1.edge[sr.g1.edge_id(v1, nb1[0])];
        apply_perm(c1, build_perm({{f1col, 1}, {a, 9}}));
    }

    // normalise the rest: boundary face to 1, edges at v packed low
    std::vector<std::pair<int, int>> want{{c2.face[rec.f2], 1}};
    std::set<int> edge_cols;
    for (int w : sr.g2.neighbours(v2)) edge_cols.insert(c2.edge[sr.g2.edge_id(v2, w)]);
    edge_cols.erase(c2.face[rec.f2]);
    int slot = 2;
    for (int col : edge_cols) want.emplace_back(col, slot++);
    apply_perm(c2, build_perm(want));

    EdgeFaceColouring out = EdgeFaceColouring::empty(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge &ed = g.edge(e);
        if (rec.map1[ed.u] != -1 && rec.map1[ed.v] != -1)
            out.edge[e] = c1.edge[sr.g1.edge_id(rec.map1[ed.u], rec.map1[ed.v])];
        else
            out.edge[e] = c2.edge[sr.g2.edge_id(rec.map2[ed.u], rec.map2[ed.v])];
    }
    for (int f = 0; f < g.face_count(); ++f) {
        int d = g.face(f).boundary[0];
        int a = g.dart_tail(d), b = g.dart_head(d);
        if (rec.map1[a] != -1 && rec.map1[b] != -1)
            out.face[f] =
                c1.face[sr.g1.face_of(sr.g1.dart_id(rec.map1[a], rec.map1[b]))];
        else
            out.face[f] =
                c2.face[sr.g2.face_of(sr.g2.dart_id(rec.map2[a], rec.map2[b]))];
    }
    if (!validate(g, out, true).valid())
        throw Error(Errc::internal_extension_failure,
                    "cut-vertex merge produced an improper colouring; instance at " +
                        persist_instance(g, "merge_split"));
    return out;
}

Reduced reduce(const PlaneGraph &g, const ConfigMatch &match) {
    const Reduction &r = match.reduction;
    if (!r.applicable)
        throw Error(Errc::surgery_precondition_failed,
                    "structural redirect for " + match.describe());
    try {
        switch (r.kind) {
        case Reduction::DeleteEdge: {
            PlaneGraph gp = delete_edge(g, r.u, r.v);
            std::vector<int> vm(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) vm[i] = i;
            return Reduced{std::move(gp), std::move(vm), match};
        }
        case Reduction::DeletePendant: {
            std::vector<int> keep;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (v != r.u) keep.push_back(v);
            InducedResult ir = induced_subgraph(g, keep);
            return Reduced{std::move(ir.graph), std::move(ir.vertex_map), match};
        }
        case Reduction::ContractEdge: {
            ContractRecord rec;
            PlaneGraph gp = contract_edge(g, r.u, r.v, &rec);
            std::vector<int> vm = rec.vertex_map;
            vm[r.v] = vm[r.u]; // the removed endpoint maps to the merge target
            return Reduced{std::move(gp), std::move(vm), match};
        }
        case Reduction::DeleteLooseEdges: {
            PlaneGraph gp = delete_edges(g, r.edges);
            std::vector<int> vm(g.vertex_count());
            for (int i = 0; i < g.vertex_count(); ++i) vm[i] = i;
            return Reduced{std::move(gp), std::move(vm), match};
        }
        }
    } catch (const Error &e) {
        if (e.code() == Errc::bridge_deletion || e.code() == Errc::would_create_multi_edge ||
            e.code() == Errc::precondition_violated)
            throw Error(Errc::surgery_precondition_failed, e.what());
        throw;
    }
    throw Error(Errc::surgery_precondition_failed, "unknown reduction");
}

namespace {

// Copies colours from the reduced graph: edges through the vertex map,
// (>=5)-faces through any surviving boundary dart.  Faces in skip stay
// uncoloured, as do all (<=4)-faces.
EdgeFaceColouring lift_base(const PlaneGraph &g, const PlaneGraph &gp,
                            const std::vector<int> &vm, const EdgeFaceColouring &sub,
                            const std::set<int> &skip = {}) {
    EdgeFaceColouring c = EdgeFaceColouring::empty(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = vm[g.edge(e).u], b = vm[g.edge(e).v];
        if (a < 0 || b < 0 || a == b) continue;
        int ep = gp.find_edge(a, b);
        if (ep >= 0) c.edge[e] = sub.edge[ep];
    }
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) <= 4 || skip.count(f)) continue;
        for (int d : g.face(f).boundary) {
            int a = vm[g.dart_tail(d)], b = vm[g.dart_head(d)];
            if (a < 0 || b < 0 || a == b) continue;
            int dp = gp.find_dart(a, b);
            if (dp < 0) continue;
            c.face[f] = sub.face[gp.face_of(dp)];
            break;
        }
    }
    return c;
}

void routes_greedy_first(const PlaneGraph &g, int u, int v, std::vector<Route> &routes) {
    routes.push_back([=, &g](EdgeFaceColouring &c) { return W{g, c}.greedy_edge(u, v); });
}

// A1: triangle f = uvw with a 2-vertex v; uv was deleted
void routes_a1(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int v = role(m, "v");
    int du = m.reduction.u == v ? m.reduction.v : m.reduction.u; // deleted partner
    int w = -1;
    for (int t : g.neighbours(v))
        if (t != du) w = t;
    int tri = m.faces[0].second;

    routes_greedy_first(g, du, v, routes);
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour uv with c(uw), recolour uw with the colour of the big face
        // at v
        W ww{g, c};
        int f1col = ww.side_col(du, v, tri);
        if (f1col == 0) return false;
        ww.E(du, v) = ww.Ec(du, w);
        ww.E(du, w) = f1col;
        return true;
    });
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour uv with c(vw), recolour vw freely
        W ww{g, c};
        ww.E(du, v) = ww.Ec(v, w);
        ww.E(v, w) = 0;
        return ww.greedy_edge(v, w);
    });
    generic_adjacent_recolours(g, du, v, routes);
}

// A2: 4-face uvwx with deg(v)=2, deg(x)<=3; uv was deleted
void routes_a2(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x");
    int f = m.faces[0].second;

    routes_greedy_first(g, u, v, routes);
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour uv with c(ux), recolour ux with alpha
        W ww{g, c};
        int alpha = ww.side_col(u, v, f);
        if (alpha == 0) return false;
        ww.E(u, v) = ww.Ec(u, x);
        ww.E(u, x) = alpha;
        return true;
    });
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour uv with c(vw), swap vw and wx
        W ww{g, c};
        ww.E(u, v) = ww.Ec(v, w);
        ww.swap_edges(v, w, w, x);
        return true;
    });
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        W ww{g, c};
        ww.E(u, v) = ww.Ec(v, w);
        ww.E(v, w) = 0;
        return ww.greedy_edge(v, w);
    });
    generic_adjacent_recolours(g, u, v, routes);
}

// B2/B3/B4/C2/C3: triangle uvw, uv deleted; exchange through vw or uw
void routes_uvw7(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w");
    int tri = m.faces[0].second;

    routes_greedy_first(g, u, v, routes);
    for (int orient = 0; orient < 2; ++orient) {
        int a = orient ? v : u, b = orient ? u : v;
        // xi in (E(a) u {alpha_uv}) \ (E(w) u {alpha_bw})
        for (int xi = 1; xi <= kColours; ++xi) {
            routes.push_back([=, &g](EdgeFaceColouring &c) {
                W ww{g, c};
                unsigned from = ww.Ev(a) | bit(ww.side_col(u, v, tri));
                unsigned avoid = ww.Ev(w) | bit(ww.side_col(b, w, tri));
                if (!(from & bit(xi)) || (avoid & bit(xi))) return false;
                ww.E(u, v) = ww.Ec(b, w);
                ww.E(b, w) = xi;
                return true;
            });
        }
    }
    generic_adjacent_recolours(g, u, v, routes);
}

// C4: triangles uvw / vwx with deg(u)=deg(x)=3; wx deleted
void routes_c4(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x");
    int xp = -1; // the third neighbour of the 3-vertex x
    for (int t : g.neighbours(x))
        if (t != v && t != w) xp = t;

    routes_greedy_first(g, w, x, routes);
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour wx with c(vw), recolour vw with c(xx')
        W ww{g, c};
        if (xp < 0) return false;
        ww.E(w, x) = ww.Ec(v, w);
        ww.E(v, w) = ww.Ec(x, xp);
        return true;
    });
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        // colour wx with c(vx), recolour vx freely
        W ww{g, c};
        ww.E(w, x) = ww.Ec(v, x);
        ww.E(v, x) = 0;
        return ww.greedy_edge(v, x);
    });
    for (int pre = 0; pre < 2; ++pre) {
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            // colour wx with c(uw), recolour uw with c(vx), optionally after
            // swapping vw and vx
            W ww{g, c};
            if (pre) ww.swap_edges(v, w, v, x);
            ww.E(w, x) = ww.Ec(u, w);
            ww.E(u, w) = ww.Ec(v, x);
            return true;
        });
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            // recolour uv and wx with c(vx), then re-colour vx
            W ww{g, c};
            if (pre) ww.swap_edges(v, w, v, x);
            int gamma = ww.Ec(v, x);
            ww.E(u, v) = gamma;
            ww.E(w, x) = gamma;
            ww.E(v, x) = 0;
            return ww.greedy_edge(v, x);
        });
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            W ww{g, c};
            if (pre) ww.swap_edges(v, w, v, x);
            if (xp < 0) return false;
            int gamma = ww.Ec(v, x);
            ww.E(u, v) = gamma;
            ww.E(w, x) = gamma;
            ww.E(v, x) = ww.Ec(v, w);
            ww.E(v, w) = ww.Ec(x, xp);
            return true;
        });
    }
    generic_adjacent_recolours(g, w, x, routes);
}

// C5: uv deleted; exchange through vx and wx
void routes_c5(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x");

    routes_greedy_first(g, u, v, routes);
    for (int orient = 0; orient < 2; ++orient) {
        int a = orient ? v : u, b = orient ? u : v;
        for (int xi = 1; xi <= kColours; ++xi) {
            routes.push_back([=, &g](EdgeFaceColouring &c) {
                W ww{g, c};
                if (ww.Ev(w) & bit(xi)) return false;
                ww.E(u, v) = ww.Ec(b, w);
                ww.E(b, w) = xi;
                (void)a;
                return true;
            });
        }
    }
    for (int pre = 0; pre < 2; ++pre) {
        for (int xi = 1; xi <= kColours; ++xi) {
            routes.push_back([=, &g](EdgeFaceColouring &c) {
                // colour uv with c(vx), vx with c(wx), wx with xi
                W ww{g, c};
                if (pre) ww.swap_edges(u, w, v, w);
                if (ww.Ev(w) & bit(xi)) return false;
                ww.E(u, v) = ww.Ec(v, x);
                ww.E(v, x) = ww.Ec(w, x);
                ww.E(w, x) = xi;
                return true;
            });
        }
    }
    generic_adjacent_recolours(g, u, v, routes);
}

// D1-D4: 2-path uvw with triangle vwx; vw deleted
void routes_d(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x");

    routes_greedy_first(g, v, w, routes);
    for (int pre = 0; pre < 2; ++pre) {
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            // colour vw with c(uv), recolour uv with c(vx), swap vx and wx
            W ww{g, c};
            if (pre) ww.swap_edges(v, x, w, x);
            ww.E(v, w) = ww.Ec(u, v);
            ww.E(u, v) = ww.Ec(v, x);
            ww.swap_edges(v, x, w, x);
            return true;
        });
    }
    generic_adjacent_recolours(g, v, w, routes);
}

// E1/E2: fan around z over the path u v w x y; zv deleted
void routes_e12(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x"),
        y = role(m, "y"), z = role(m, "z");

    routes_greedy_first(g, z, v, routes);
    for (int pre = 0; pre < 2; ++pre) {
        for (int spoke : {x, y}) {
            routes.push_back([=, &g](EdgeFaceColouring &c) {
                // colour zv with c(z-spoke), swap that spoke with xy
                W ww{g, c};
                if (pre) ww.swap_edges(z, w, w, v);
                ww.E(z, v) = ww.Ec(z, spoke);
                ww.swap_edges(z, spoke, x, y);
                (void)u;
                return true;
            });
        }
    }
    generic_adjacent_recolours(g, z, v, routes);
}

// E3: triangulated 8-vertex; za deleted (a the 3-neighbour)
void routes_e3(const PlaneGraph &g, const ConfigMatch &m, std::vector<Route> &routes) {
    int z = role(m, "v"), a = role(m, "u"), b = role(m, "w");
    const auto &r = g.neighbours(z);
    int pos = 0;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == a) pos = i;
    int next = r[(pos + 1) % r.size()], prev = r[(pos + r.size() - 1) % r.size()];

    routes_greedy_first(g, z, a, routes);
    for (int s : {prev, next}) {
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            // colour za with c(zb), recolour zb with c(zs), swap zs and as
            W ww{g, c};
            ww.E(z, a) = ww.Ec(z, b);
            ww.E(z, b) = ww.Ec(z, s);
            ww.swap_edges(z, s, a, s);
            return true;
        });
        routes.push_back([=, &g](EdgeFaceColouring &c) {
            // direct: colour za with c(as), recolour as freely
            W ww{g, c};
            ww.E(z, a) = ww.Ec(a, s);
            ww.E(a, s) = 0;
            return ww.greedy_edge(a, s);
        });
    }
    generic_adjacent_recolours(g, z, a, routes);
}

// E4 with v,x adjacent: uv deleted, then vw and vx recoloured greedily
void routes_e4_delete(const PlaneGraph &g, const ConfigMatch &m,
                      std::vector<Route> &routes) {
    int u = role(m, "u"), v = role(m, "v"), w = role(m, "w"), x = role(m, "x");
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        W ww{g, c};
        ww.E(v, w) = 0;
        ww.E(v, x) = 0;
        return ww.greedy_edge(u, v) && ww.greedy_edge(v, x) && ww.greedy_edge(v, w);
    });
    routes_greedy_first(g, u, v, routes);
    generic_adjacent_recolours(g, u, v, routes);
}

// contraction scripts (smalladj, LNN, A3, E4-contract): greedy the edge back
void routes_contract(const PlaneGraph &g, const ConfigMatch &m,
                     std::vector<Route> &routes) {
    int p = m.reduction.u, q = m.reduction.v;
    routes_greedy_first(g, p, q, routes);
    generic_adjacent_recolours(g, p, q, routes);
}

// LN (loose edges of a face): the faces merged into the deleted
// region are recoloured, then f, then the loose edges greedily.
void routes_ln(const PlaneGraph &g, const ConfigMatch &m, const std::set<int> &ring,
               int cstar, std::vector<Route> &routes) {
    int f = m.reduction.face;
    auto edges = m.reduction.edges; // canonical order
    routes.push_back([=, &g](EdgeFaceColouring &c) {
        for (int rf : ring) {
            if (rf == f || g.face_degree(rf) <= 4) continue;
            unsigned fb = forbidden_mask(g, c, Elem{Elem::FaceKind, rf});
            int col = (cstar > 0 && !(fb & bit(cstar))) ? cstar : smallest_free(fb);
            if (col == 0) return false;
            c.face[rf] = col;
        }
        unsigned fb = forbidden_mask(g, c, Elem{Elem::FaceKind, f});
        int col = smallest_free(fb);
        if (col == 0) return false;
        c.face[f] = col;
        W ww{g, c};
        for (const Edge &e : edges)
            if (!ww.greedy_edge(e.u, e.v)) return false;
        return true;
    });
}

// --- fallback: bounded exhaustive recolouring --------------------------------

struct RegionSearch {
    const PlaneGraph &g;
    EdgeFaceColouring &c;
    std::vector<Elem> region;
    long long budget = 0, nodes = 0;

    unsigned taken(const Elem &x) const { return forbidden_mask(g, c, x); }

    bool search(size_t done) {
        if (done == region.size()) return true;
        if (++nodes > budget) return false;
        // most constrained element in the region
        size_t best = region.size();
        int best_avail = kColours + 1;
        unsigned best_mask = 0;
        for (size_t i = 0; i < region.size(); ++i) {
            if (c.of(region[i]) != 0) continue;
            unsigned m = taken(region[i]);
            int avail = 0;
            for (int col = 1; col <= kColours; ++col)
                if (!(m & bit(col))) ++avail;
            if (avail == 0) return false;
            if (avail < best_avail) {
                best = i;
                best_avail = avail;
                best_mask = m;
            }
        }
        if (best == region.size()) return true;
        for (int col = 1; col <= kColours; ++col) {
            if (best_mask & bit(col)) continue;
            c.of(region[best]) = col;
            if (search(done + 1)) return true;
            c.of(region[best]) = 0;
        }
        return false;
    }
};

} // namespace

std::optional<EdgeFaceColouring> fallback_recolour(const PlaneGraph &g,
                                                   const EdgeFaceColouring &base) {
    std::set<Elem> region;
    for (int e = 0; e < g.edge_count(); ++e)
        if (base.edge[e] == 0) region.insert(Elem{Elem::EdgeKind, e});
    for (int f = 0; f < g.face_count(); ++f)
        if (base.face[f] == 0 && g.face_degree(f) >= 5)
            region.insert(Elem{Elem::FaceKind, f});

    auto expand = [&](const std::set<Elem> &r) {
        std::set<Elem> out = r;
        for (const Elem &x : r) {
            if (x.kind == Elem::EdgeKind) {
                const Edge &ed = g.edge(x.id);
                for (int end : {ed.u, ed.v})
                    for (int w : g.neighbours(end))
                        out.insert(Elem{Elem::EdgeKind, g.edge_id(end, w)});
                for (int d : g.edge_darts(x.id)) {
                    int f = g.face_of(d);
                    if (g.face_degree(f) >= 5) out.insert(Elem{Elem::FaceKind, f});
                }
            } else {
                for (int d : g.face(x.id).boundary) {
                    out.insert(
                        Elem{Elem::EdgeKind, g.edge_id(g.dart_tail(d), g.dart_head(d))});
                    int fo = g.face_of(g.twin(d));
                    if (g.face_degree(fo) >= 5) out.insert(Elem{Elem::FaceKind, fo});
                }
            }
        }
        return out;
    };

    const long long budgets[3] = {200'000, 500'000, 5'000'000};
    for (int level = 0; level < 3; ++level) {
        if (level > 0) region = expand(region);
        EdgeFaceColouring c = base;
        RegionSearch rs{g, c, std::vector<Elem>(region.begin(), region.end()),
                        budgets[level]};
        for (const Elem &x : rs.region) c.of(x) = 0;
        if (!rs.search(0)) continue;
        if (!c.nice(g)) continue;
        if (!validate(g, c, false).valid()) continue;
        EdgeFaceColouring t = greedy_complete(g, c);
        if (validate(g, t, true).valid()) return t;
    }
    return std::nullopt;
}

EdgeFaceColouring extend(const PlaneGraph &g, const Reduced &step,
                         const EdgeFaceColouring &sub, SolveStats *stats,
                         bool *used_fallback) {
    const ConfigMatch &m = step.match;
    EdgeFaceColouring aligned = sub;
    std::set<int> skip;
    std::set<int> ring; // faces of g merged into the deleted region (LN)
    int cstar = 0;

    if (m.id == ConfigId::LN) {
        // faces of g on either side of a deleted loose edge, plus f itself
        ring.insert(m.reduction.face);
        for (const Edge &e : m.reduction.edges) {
            ring.insert(g.face_at(e.u, e.v, 0));
            ring.insert(g.face_at(e.u, e.v, 1));
        }
        skip = ring;
        // the reduced-graph faces holding the merged region, per component
        std::set<int> merged;
        for (int f : ring)
            for (int d : g.face(f).boundary) {
                int dp = step.graph.find_dart(g.dart_tail(d), g.dart_head(d));
                if (dp >= 0) merged.insert(step.graph.face_of(dp));
            }
        // align every component's merged-region face on one colour
        if (!merged.empty()) {
            auto comp_of_face = [&](int f) {
                return step.graph.component_of()[step.graph.dart_tail(
                    step.graph.face(f).boundary[0])];
            };
            cstar = aligned.face[*merged.begin()];
            for (int f : merged) {
                if (aligned.face[f] == cstar) continue;
                int comp = comp_of_face(f);
                int old = aligned.face[f];
                // swap cstar <-> old within the component
                for (int e = 0; e < step.graph.edge_count(); ++e) {
                    if (step.graph.component_of()[step.graph.edge(e).u] != comp) continue;
                    if (aligned.edge[e] == old)
                        aligned.edge[e] = cstar;
                    else if (aligned.edge[e] == cstar)
                        aligned.edge[e] = old;
                }
                for (int ff = 0; ff < step.graph.face_count(); ++ff) {
                    if (step.graph.face(ff).boundary.empty() ||
                        comp_of_face(ff) != comp)
                        continue;
                    if (aligned.face[ff] == old)
                        aligned.face[ff] = cstar;
                    else if (aligned.face[ff] == cstar)
                        aligned.face[ff] = old;
                }
            }
        } else {
            cstar = 0;
        }
    }

    EdgeFaceColouring base = lift_base(g, step.graph, step.vertex_map, aligned, skip);

    std::vector<Route> routes;
    switch (m.id) {
    case ConfigId::A0:
        routes_greedy_first(g, m.reduction.u, m.reduction.v, routes);
        generic_adjacent_recolours(g, m.reduction.u, m.reduction.v, routes);
        break;
    case ConfigId::A1: routes_a1(g, m, routes); break;
    case ConfigId::A2: routes_a2(g, m, routes); break;
    case ConfigId::A3:
    case ConfigId::LNN: routes_contract(g, m, routes); break;
    case ConfigId::B1:
    case ConfigId::C1:
        routes_greedy_first(g, m.reduction.u, m.reduction.v, routes);
        generic_adjacent_recolours(g, m.reduction.u, m.reduction.v, routes);
        break;
    case ConfigId::B2:
    case ConfigId::B3:
    case ConfigId::B4:
    case ConfigId::C2:
    case ConfigId::C3: routes_uvw7(g, m, routes); break;
    case ConfigId::C4: routes_c4(g, m, routes); break;
    case ConfigId::C5: routes_c5(g, m, routes); break;
    case ConfigId::D1:
    case ConfigId::D2:
    case ConfigId::D3:
    case ConfigId::D4: routes_d(g, m, routes); break;
    case ConfigId::E1:
    case ConfigId::E2: routes_e12(g, m, routes); break;
    case ConfigId::E3: routes_e3(g, m, routes); break;
    case ConfigId::E4:
        if (m.reduction.kind == Reduction::DeleteEdge)
            routes_e4_delete(g, m, routes);
        else
            routes_contract(g, m, routes);
        break;
    case ConfigId::LN: routes_ln(g, m, ring, cstar, routes); break;
    }

    if (auto res = try_routes(g, base, routes)) {
        if (stats) ++stats->script_ok[m.id];
        if (used_fallback) *used_fallback = false;
        return *res;
    }
    if (auto res = fallback_recolour(g, base)) {
        if (stats) ++stats->fallback_ok[m.id];
        if (used_fallback) *used_fallback = true;
        return *res;
    }
    throw Error(Errc::internal_extension_failure,
                "no extension for " + m.describe() + "; instance at " +
                    persist_instance(g, m.describe()));
}

namespace {

const ConfigId kPriority[] = {
    ConfigId::A0, ConfigId::LNN, ConfigId::A3, ConfigId::A1, ConfigId::A2,
    ConfigId::B1, ConfigId::C1,  ConfigId::LN, ConfigId::B2, ConfigId::B3,
    ConfigId::B4, ConfigId::C2,  ConfigId::C3, ConfigId::C4, ConfigId::C5,
    ConfigId::D1, ConfigId::D2,  ConfigId::D3, ConfigId::D4, ConfigId::E1,
    ConfigId::E2, ConfigId::E3,  ConfigId::E4,
};

EdgeFaceColouring colour_impl(const PlaneGraph &g, SolveStats *stats) {
    if (g.edge_count() == 0) {
        if (stats) ++stats->base_cases;
        EdgeFaceColouring c = EdgeFaceColouring::empty(g);
        for (int &fc : c.face) fc = 1;
        return c;
    }
    if (g.edge_count() == 1) {
        if (stats) ++stats->base_cases;
        EdgeFaceColouring c = EdgeFaceColouring::empty(g);
        c.edge[0] = 1;
        c.face[0] = 2;
        return c;
    }

    // pendant vertices first (A0), then eligible cut vertices
    bool has_leaf = false;
    for (int v = 0; v < g.vertex_count() && !has_leaf; ++v)
        if (g.degree(v) == 1) has_leaf = true;
    if (!has_leaf) {
        EligibleCut cut = find_eligible_cut(g);
        if (cut.found) {
            SplitResult sr = split_at_cut_vertex(g, cut.v, cut.rep);
            EdgeFaceColouring c1 = colour_impl(sr.g1, stats);
            EdgeFaceColouring c2 = colour_impl(sr.g2, stats);
            if (stats) ++stats->decompose_splits;
            return merge_split(g, sr, c1, c2);
        }
    }

    for (ConfigId id : kPriority) {
        for (const ConfigMatch &m : detect_config(g, id)) {
            if (!m.reduction.applicable) continue;
            if (m.reduction.kind == Reduction::DeleteEdge &&
                g.is_bridge(m.reduction.u, m.reduction.v))
                continue;
            Reduced red = reduce(g, m);

            EdgeFaceColouring sub;
            if (red.graph.connected()) {
                sub = colour_impl(red.graph, stats);
            } else {
                // loose-edge deletion can split the graph: colour the
                // components independently
                sub = EdgeFaceColouring::empty(red.graph);
                for (const auto &comp : components(red.graph)) {
                    InducedResult ir = induced_subgraph(red.graph, comp);
                    EdgeFaceColouring cc = colour_impl(ir.graph, stats);
                    std::vector<int> inv(ir.graph.vertex_count());
                    for (int v = 0; v < red.graph.vertex_count(); ++v)
                        if (ir.vertex_map[v] != -1) inv[ir.vertex_map[v]] = v;
                    for (int e = 0; e < ir.graph.edge_count(); ++e) {
                        const Edge &ed = ir.graph.edge(e);
                        sub.edge[red.graph.edge_id(inv[ed.u], inv[ed.v])] = cc.edge[e];
                    }
                    for (int f = 0; f < ir.graph.face_count(); ++f) {
                        if (ir.graph.face(f).boundary.empty()) continue;
                        int d = ir.graph.face(f).boundary[0];
                        int rd = red.graph.dart_id(inv[ir.graph.dart_tail(d)],
                                                   inv[ir.graph.dart_head(d)]);
                        sub.face[red.graph.face_of(rd)] = cc.face[f];
                    }
                }
                for (int f = 0; f < red.graph.face_count(); ++f)
                    if (red.graph.face(f).boundary.empty()) sub.face[f] = 1;
            }
            return extend(g, red, sub, stats);
        }
    }
    throw Error(Errc::internal_extension_failure,
                "no usable configuration found; instance at " +
                    persist_instance(g, "no-configuration"));
}

} // namespace

EdgeFaceColouring colour(const PlaneGraph &g, SolveStats *stats) {
    if (!g.connected())
        throw Error(Errc::precondition_violated, "colour needs a connected graph");
    if (g.max_degree() > 8)
        throw Error(Errc::precondition_violated, "colour needs max degree <= 8");
    SolveStats local;
    EdgeFaceColouring c = colour_impl(g, stats ? stats : &local);
    if (!validate(g, c, true).valid())
        throw Error(Errc::internal_extension_failure,
                    "solver produced an improper colouring; instance at " +
                        persist_instance(g, "final-validate"));
    return c;
}

} // namespace efc
