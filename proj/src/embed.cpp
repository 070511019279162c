#include "efc/embed.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace efc {

namespace {

std::int64_t pair_key(int a, int b) {
    return (static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

std::string edge_str(int u, int v) {
    std::ostringstream os;
    os << u << "-" << v;
    return os.str();
}

} // namespace

PlaneGraph PlaneGraph::from_rotations(std::vector<std::vector<int>> rot) {
    PlaneGraph g;
    const int n = static_cast<int>(rot.size());

    for (int v = 0; v < n; ++v) {
        std::vector<int> seen;
        for (int w : rot[v]) {
            if (w < 0 || w >= n)
                throw Error(Errc::inconsistent_adjacency,
                            "vertex " + std::to_string(v) + " lists unknown neighbour " +
                                std::to_string(w));
            if (w == v)
                throw Error(Errc::loop_or_multi_edge, "loop at vertex " + std::to_string(v));
            seen.push_back(w);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error(Errc::loop_or_multi_edge,
                        "duplicate neighbour at vertex " + std::to_string(v));
    }
    g.rot_ = std::move(rot);

    // darts, in rotation order per vertex
    g.dart_offset_.resize(n + 1, 0);
    for (int v = 0; v < n; ++v)
        g.dart_offset_[v + 1] = g.dart_offset_[v] + static_cast<int>(g.rot_[v].size());
    const int nd = g.dart_offset_[n];
    g.dart_tail_.resize(nd);
    g.dart_head_.resize(nd);
    g.rot_next_.resize(nd);
    g.twin_.assign(nd, -1);
    g.dart_by_pair_.reserve(nd * 2);
    for (int v = 0; v < n; ++v) {
        const int deg = static_cast<int>(g.rot_[v].size());
        for (int i = 0; i < deg; ++i) {
            const int d = g.dart_offset_[v] + i;
            g.dart_tail_[d] = v;
            g.dart_head_[d] = g.rot_[v][i];
            g.rot_next_[d] = g.dart_offset_[v] + (i + 1) % deg;
            g.dart_by_pair_.emplace(pair_key(v, g.rot_[v][i]), d);
        }
    }
    for (int d = 0; d < nd; ++d) {
        auto it = g.dart_by_pair_.find(pair_key(g.dart_head_[d], g.dart_tail_[d]));
        if (it == g.dart_by_pair_.end())
            throw Error(Errc::inconsistent_adjacency,
                        "vertex " + std::to_string(g.dart_tail_[d]) + " lists " +
                            std::to_string(g.dart_head_[d]) + " but not the reverse");
        g.twin_[d] = it->second;
    }

    // edges, canonical (u, v) order
    for (int d = 0; d < nd; ++d)
        if (g.dart_tail_[d] < g.dart_head_[d])
            g.edges_.push_back(Edge{g.dart_tail_[d], g.dart_head_[d]});
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edge_by_pair_.reserve(g.edges_.size() * 2);
    for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e)
        g.edge_by_pair_.emplace(pair_key(g.edges_[e].u, g.edges_[e].v), e);

    // faces: trace orbits of face_next, starting each walk at the smallest
    // unvisited dart under lexicographic (tail, head)
    std::vector<int> order(nd);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.dart_tail_[a] != g.dart_tail_[b]) return g.dart_tail_[a] < g.dart_tail_[b];
        return g.dart_head_[a] < g.dart_head_[b];
    });
    g.face_of_.assign(nd, -1);
    for (int start : order) {
        if (g.face_of_[start] != -1) continue;
        FacialWalk f;
        f.id = static_cast<int>(g.faces_.size());
        int d = start;
        do {
            g.face_of_[d] = f.id;
            f.boundary.push_back(d);
            d = g.face_next(d);
        } while (d != start);
        g.faces_.push_back(std::move(f));
    }
    // one synthetic degree-0 face per isolated vertex
    for (int v = 0; v < n; ++v)
        if (g.rot_[v].empty()) {
            FacialWalk f;
            f.id = static_cast<int>(g.faces_.size());
            g.faces_.push_back(std::move(f));
        }

    // connectivity
    g.component_of_.assign(n, -1);
    g.component_count_ = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (g.component_of_[s] != -1) continue;
        const int c = g.component_count_++;
        stack.push_back(s);
        g.component_of_[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.rot_[v])
                if (g.component_of_[w] == -1) {
                    g.component_of_[w] = c;
                    stack.push_back(w);
                }
        }
    }

    // per-component Euler check: V - E + F = 2 on the sphere
    std::vector<int> cv(g.component_count_, 0), ce(g.component_count_, 0),
        cf(g.component_count_, 0);
    for (int v = 0; v < n; ++v) {
        ++cv[g.component_of_[v]];
        if (g.rot_[v].empty()) ++cf[g.component_of_[v]]; // synthetic face
    }
    for (const Edge &e : g.edges_) ++ce[g.component_of_[e.u]];
    for (const FacialWalk &f : g.faces_)
        if (!f.boundary.empty()) ++cf[g.component_of_[g.dart_tail_[f.boundary[0]]]];
    for (int c = 0; c < g.component_count_; ++c)
        if (cv[c] - ce[c] + cf[c] != 2)
            throw Error(Errc::non_planar_embedding,
                        "component has V-E+F = " + std::to_string(cv[c] - ce[c] + cf[c]));

    return g;
}

int PlaneGraph::max_degree() const {
    int m = 0;
    for (const auto &r : rot_) m = std::max(m, static_cast<int>(r.size()));
    return m;
}

bool PlaneGraph::adjacent(int u, int v) const {
    return dart_by_pair_.count(pair_key(u, v)) != 0;
}

int PlaneGraph::dart_id(int tail, int head) const {
    int d = find_dart(tail, head);
    if (d < 0) throw Error(Errc::unknown_edge, "no dart " + edge_str(tail, head));
    return d;
}

int PlaneGraph::find_dart(int tail, int head) const {
    auto it = dart_by_pair_.find(pair_key(tail, head));
    return it == dart_by_pair_.end() ? -1 : it->second;
}

int PlaneGraph::face_at(int u, int v, int side) const {
    return face_of_[side == 0 ? dart_id(u, v) : dart_id(v, u)];
}

std::vector<int> PlaneGraph::face_vertices(int f) const {
    std::vector<int> vs;
    vs.reserve(faces_[f].boundary.size());
    for (int d : faces_[f].boundary) vs.push_back(dart_tail_[d]);
    return vs;
}

int PlaneGraph::edge_id(int u, int v) const {
    int e = find_edge(u, v);
    if (e < 0) throw Error(Errc::unknown_edge, "no edge " + edge_str(u, v));
    return e;
}

int PlaneGraph::find_edge(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = edge_by_pair_.find(pair_key(e.u, e.v));
    return it == edge_by_pair_.end() ? -1 : it->second;
}

std::array<int, 2> PlaneGraph::edge_darts(int e) const {
    const Edge &ed = edges_[e];
    int d = dart_by_pair_.at(pair_key(ed.u, ed.v));
    return {d, twin_[d]};
}

bool PlaneGraph::is_bridge(int u, int v) const {
    int d = dart_id(u, v);
    return face_of_[d] == face_of_[twin_[d]];
}

void PlaneGraph::check_invariants() const {
    const int nd = dart_count();
    for (int d = 0; d < nd; ++d) {
        if (twin_[twin_[d]] != d || twin_[d] == d)
            throw Error(Errc::precondition_violated, "twin is not an involution");
        if (dart_tail_[twin_[d]] != dart_head_[d])
            throw Error(Errc::precondition_violated, "twin tail mismatch");
    }
    long long degsum = 0, facesum = 0;
    for (int v = 0; v < vertex_count(); ++v) degsum += degree(v);
    for (const FacialWalk &f : faces_) facesum += f.degree();
    if (degsum != 2LL * edge_count() || facesum != 2LL * edge_count())
        throw Error(Errc::precondition_violated, "degree sums do not match 2|E|");
    if (connected() && vertex_count() - edge_count() + face_count() != 2)
        throw Error(Errc::precondition_violated, "Euler check failed");
}

// --- surgery -------------------------------------------------------------

namespace {

int position_of(const std::vector<int> &list, int x) {
    for (int i = 0; i < static_cast<int>(list.size()); ++i)
        if (list[i] == x) return i;
    return -1;
}

} // namespace

PlaneGraph delete_edge(const PlaneGraph &g, int u, int v, DeleteRecord *rec) {
    if (g.find_edge(u, v) < 0)
        throw Error(Errc::unknown_edge, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    if (g.is_bridge(u, v))
        throw Error(Errc::bridge_deletion,
                    "edge " + std::to_string(u) + "-" + std::to_string(v) + " is a bridge");
    auto rot = g.rotations();
    if (rec) {
        rec->u = u;
        rec->v = v;
        rec->pos_u = position_of(rot[u], v);
        rec->pos_v = position_of(rot[v], u);
    }
    rot[u].erase(rot[u].begin() + position_of(rot[u], v));
    rot[v].erase(rot[v].begin() + position_of(rot[v], u));
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph insert_edge(const PlaneGraph &g, const DeleteRecord &rec) {
    auto rot = g.rotations();
    rot[rec.u].insert(rot[rec.u].begin() + rec.pos_u, rec.v);
    rot[rec.v].insert(rot[rec.v].begin() + rec.pos_v, rec.u);
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph delete_edges(const PlaneGraph &g, const std::vector<Edge> &del) {
    auto rot = g.rotations();
    for (const Edge &e : del) {
        if (g.find_edge(e.u, e.v) < 0)
            throw Error(Errc::unknown_edge,
                        "no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        rot[e.u].erase(rot[e.u].begin() + position_of(rot[e.u], e.v));
        rot[e.v].erase(rot[e.v].begin() + position_of(rot[e.v], e.u));
    }
    return PlaneGraph::from_rotations(std::move(rot));
}

PlaneGraph contract_edge(const PlaneGraph &g, int keep, int removed, ContractRecord *rec) {
    if (g.find_edge(keep, removed) < 0)
        throw Error(Errc::unknown_edge,
                    "no edge " + std::to_string(keep) + "-" + std::to_string(removed));
    if (g.degree(removed) > 2)
        throw Error(Errc::precondition_violated,
                    "contracted endpoint must have degree at most 2");
    for (int w : g.neighbours(removed))
        if (w != keep && g.adjacent(keep, w))
            throw Error(Errc::would_create_multi_edge,
                        "endpoints share neighbour " + std::to_string(w));

    auto rot = g.rotations();
    // other neighbour of the removed vertex, if any
    int other = -1;
    for (int w : rot[removed])
        if (w != keep) other = w;

    int pos = position_of(rot[keep], removed);
    if (other >= 0) {
        rot[keep][pos] = other;
        rot[other][position_of(rot[other], removed)] = keep;
    } else {
        rot[keep].erase(rot[keep].begin() + pos);
    }
    rot[removed].clear();

    // renumber to keep vertex ids dense
    const int n = g.vertex_count();
    std::vector<int> map(n);
    int next = 0;
    for (int v = 0; v < n; ++v) map[v] = (v == removed) ? -1 : next++;
    std::vector<std::vector<int>> rot2(n - 1);
    for (int v = 0; v < n; ++v) {
        if (v == removed) continue;
        auto &dst = rot2[map[v]];
        dst.reserve(rot[v].size());
        for (int w : rot[v]) dst.push_back(map[w]);
    }
    if (rec) {
        rec->keep = keep;
        rec->removed = removed;
        rec->vertex_map = map;
    }
    return PlaneGraph::from_rotations(std::move(rot2));
}

std::vector<std::vector<int>> components_without(const PlaneGraph &g, int v) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    comp[v] = -2;
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        out.emplace_back();
        comp[s] = static_cast<int>(out.size()) - 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.back().push_back(x);
            for (int w : g.neighbours(x))
                if (comp[w] == -1) {
                    comp[w] = comp[x];
                    stack.push_back(w);
                }
        }
    }
    for (auto &c : out) std::sort(c.begin(), c.end());
    return out;
}

SplitResult split_at_cut_vertex(const PlaneGraph &g, int v, int rep) {
    if (rep == v)
        throw Error(Errc::not_eligible_cut_vertex, "component representative equals cut vertex");
    auto comps = components_without(g, v);
    if (comps.size() < 2)
        throw Error(Errc::not_eligible_cut_vertex,
                    std::to_string(v) + " is not a cut vertex");
    const std::vector<int> *cptr = nullptr;
    for (const auto &c : comps)
        if (std::binary_search(c.begin(), c.end(), rep)) cptr = &c;
    if (!cptr) throw Error(Errc::not_eligible_cut_vertex, "representative not found");
    const std::vector<int> &comp = *cptr;

    // attachment of v in the component must be one vertex or two
    // rotation-consecutive vertices
    const auto &rv = g.neighbours(v);
    const int d = static_cast<int>(rv.size());
    std::vector<int> attach_pos;
    for (int i = 0; i < d; ++i)
        if (std::binary_search(comp.begin(), comp.end(), rv[i])) attach_pos.push_back(i);
    int lo = -1, hi = -1; // rotation arc [lo..hi] covering the attachment
    if (attach_pos.size() == 1) {
        lo = hi = attach_pos[0];
    } else if (attach_pos.size() == 2) {
        int i = attach_pos[0], j = attach_pos[1];
        if ((i + 1) % d == j) {
            lo = i; hi = j;
        } else if ((j + 1) % d == i) {
            lo = j; hi = i;
        } else {
            throw Error(Errc::not_eligible_cut_vertex, "attachment not rotation-consecutive");
        }
    } else {
        throw Error(Errc::not_eligible_cut_vertex, "attachment has more than two vertices");
    }

    const int n = g.vertex_count();
    SplitRecord rec;
    rec.v = v;
    rec.map1.assign(n, -1);
    rec.map2.assign(n, -1);
    int n1 = 0, n2 = 0;
    for (int x = 0; x < n; ++x) {
        bool in_c = std::binary_search(comp.begin(), comp.end(), x);
        if (in_c || x == v) rec.map1[x] = n1++;
        if (!in_c) rec.map2[x] = n2++;
    }

    std::vector<std::vector<int>> rot1(n1), rot2(n2);
    for (int x = 0; x < n; ++x) {
        if (x == v) continue;
        if (rec.map1[x] != -1) {
            for (int w : g.neighbours(x)) rot1[rec.map1[x]].push_back(rec.map1[w]);
        } else {
            for (int w : g.neighbours(x)) rot2[rec.map2[x]].push_back(rec.map2[w]);
        }
    }
    // v's rotation splits into the attachment arc and its complement
    for (int k = lo;; k = (k + 1) % d) {
        rot1[rec.map1[v]].push_back(rec.map1[rv[k]]);
        if (k == hi) break;
    }
    for (int k = (hi + 1) % d; k != lo; k = (k + 1) % d)
        rot2[rec.map2[v]].push_back(rec.map2[rv[k]]);

    SplitResult res{PlaneGraph::from_rotations(std::move(rot1)),
                    PlaneGraph::from_rotations(std::move(rot2)), std::move(rec)};

    // boundary faces: in g1 the corner (attach-last -> v -> attach-first),
    // in g2 the corner (pred of arc -> v -> succ of arc); both are fragments
    // of the same face of g.
    const int v1 = res.rec.map1[v];
    res.rec.f1 = res.g1.face_of(res.g1.dart_id(v1, res.rec.map1[rv[lo]]));
    const int v2 = res.rec.map2[v];
    const int succ = rv[(hi + 1) % d];
    res.rec.f2 = res.g2.face_of(res.g2.dart_id(v2, res.rec.map2[succ]));
    return res;
}

InducedResult induced_subgraph(const PlaneGraph &g, const std::vector<int> &keep) {
    const int n = g.vertex_count();
    std::vector<int> map(n, -1);
    int next = 0;
    for (int v : keep) map[v] = next++;
    std::vector<std::vector<int>> rot(next);
    for (int v : keep)
        for (int w : g.neighbours(v))
            if (map[w] != -1) rot[map[v]].push_back(map[w]);
    return InducedResult{PlaneGraph::from_rotations(std::move(rot)), std::move(map)};
}

std::vector<std::vector<int>> components(const PlaneGraph &g) {
    std::vector<std::vector<int>> out(g.component_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[g.component_of()[v]].push_back(v);
    return out;
}

} // namespace efc
