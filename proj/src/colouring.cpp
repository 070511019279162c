#include "efc/colouring.hpp"

#include <algorithm>
#include <sstream>

namespace efc {

bool EdgeFaceColouring::total() const {
    for (int c : edge)
        if (c == 0) return false;
    for (int c : face)
        if (c == 0) return false;
    return true;
}

bool EdgeFaceColouring::nice(const PlaneGraph &g) const {
    for (int c : edge)
        if (c == 0) return false;
    for (int f = 0; f < static_cast<int>(face.size()); ++f)
        if (face[f] == 0 && g.face_degree(f) > 4) return false;
    return true;
}

std::string Violation::describe(const PlaneGraph &g) const {
    auto name = [&](const Elem &x) {
        std::ostringstream os;
        if (x.kind == Elem::EdgeKind)
            os << "edge " << g.edge(x.id).u << "-" << g.edge(x.id).v;
        else
            os << "face f" << x.id;
        return os.str();
    };
    std::ostringstream os;
    switch (kind) {
    case AdjacentEdges: os << "(i) " << name(a) << " " << name(b); break;
    case EdgeFace: os << "(ii) " << name(a) << " " << name(b); break;
    case AdjacentFaces: os << "(iii) " << name(a) << " " << name(b); break;
    case ColourRange: os << "range " << name(a); break;
    case Uncoloured: os << "uncoloured " << name(a); break;
    }
    return os.str();
}

Verdict validate(const PlaneGraph &g, const EdgeFaceColouring &c, bool require_total,
                 int max_colour) {
    if (static_cast<int>(c.edge.size()) != g.edge_count() ||
        static_cast<int>(c.face.size()) != g.face_count())
        throw Error(Errc::unknown_element, "colouring does not match the graph");

    Verdict v;
    for (int e = 0; e < g.edge_count(); ++e)
        if (c.edge[e] < 0 || c.edge[e] > max_colour)
            v.violations.push_back({Violation::ColourRange, Elem{Elem::EdgeKind, e}, {}});
    for (int f = 0; f < g.face_count(); ++f)
        if (c.face[f] < 0 || c.face[f] > max_colour)
            v.violations.push_back({Violation::ColourRange, Elem{Elem::FaceKind, f}, {}});

    // (i) adjacent edges
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto &nb = g.neighbours(x);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int e1 = g.edge_id(x, nb[i]), e2 = g.edge_id(x, nb[j]);
                if (c.edge[e1] != 0 && c.edge[e1] == c.edge[e2]) {
                    if (e2 < e1) std::swap(e1, e2);
                    v.violations.push_back({Violation::AdjacentEdges, Elem{Elem::EdgeKind, e1},
                                            Elem{Elem::EdgeKind, e2}});
                }
            }
    }
    // (ii) edge vs incident face, per side (a cut-edge sees its face once)
    for (int e = 0; e < g.edge_count(); ++e) {
        if (c.edge[e] == 0) continue;
        auto ds = g.edge_darts(e);
        int f0 = g.face_of(ds[0]), f1 = g.face_of(ds[1]);
        if (c.face[f0] == c.edge[e])
            v.violations.push_back(
                {Violation::EdgeFace, Elem{Elem::EdgeKind, e}, Elem{Elem::FaceKind, f0}});
        if (f1 != f0 && c.face[f1] == c.edge[e])
            v.violations.push_back(
                {Violation::EdgeFace, Elem{Elem::EdgeKind, e}, Elem{Elem::FaceKind, f1}});
    }
    // (iii) adjacent distinct faces
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ds = g.edge_darts(e);
        int f0 = g.face_of(ds[0]), f1 = g.face_of(ds[1]);
        if (f0 == f1) continue;
        if (c.face[f0] != 0 && c.face[f0] == c.face[f1]) {
            if (f1 < f0) std::swap(f0, f1);
            Violation viol{Violation::AdjacentFaces, Elem{Elem::FaceKind, f0},
                           Elem{Elem::FaceKind, f1}};
            bool dup = false;
            for (const auto &w : v.violations)
                if (w.kind == Violation::AdjacentFaces && w.a == viol.a && w.b == viol.b)
                    dup = true;
            if (!dup) v.violations.push_back(viol);
        }
    }
    if (require_total) {
        for (int e = 0; e < g.edge_count(); ++e)
            if (c.edge[e] == 0)
                v.violations.push_back({Violation::Uncoloured, Elem{Elem::EdgeKind, e}, {}});
        for (int f = 0; f < g.face_count(); ++f)
            if (c.face[f] == 0)
                v.violations.push_back({Violation::Uncoloured, Elem{Elem::FaceKind, f}, {}});
    }
    return v;
}

unsigned edge_colours_at(const PlaneGraph &g, const EdgeFaceColouring &c, int v) {
    unsigned m = 0;
    for (int w : g.neighbours(v)) {
        int col = c.edge[g.edge_id(v, w)];
        if (col > 0) m |= 1u << (col - 1);
    }
    return m;
}

unsigned forbidden_mask(const PlaneGraph &g, const EdgeFaceColouring &c, const Elem &x) {
    unsigned m = 0;
    if (x.kind == Elem::EdgeKind) {
        if (x.id < 0 || x.id >= g.edge_count())
            throw Error(Errc::unknown_element, "edge id out of range");
        const Edge &e = g.edge(x.id);
        for (int end : {e.u, e.v})
            for (int w : g.neighbours(end)) {
                int eid = g.edge_id(end, w);
                if (eid == x.id) continue;
                if (c.edge[eid] > 0) m |= 1u << (c.edge[eid] - 1);
            }
        for (int d : g.edge_darts(x.id)) {
            int col = c.face[g.face_of(d)];
            if (col > 0) m |= 1u << (col - 1);
        }
    } else {
        if (x.id < 0 || x.id >= g.face_count())
            throw Error(Errc::unknown_element, "face id out of range");
        for (int d : g.face(x.id).boundary) {
            int col = c.edge[g.edge_id(g.dart_tail(d), g.dart_head(d))];
            if (col > 0) m |= 1u << (col - 1);
            int other = g.face_of(g.twin(d));
            if (other != x.id && c.face[other] > 0) m |= 1u << (c.face[other] - 1);
        }
    }
    return m;
}

std::vector<int> forbidden(const PlaneGraph &g, const EdgeFaceColouring &c, const Elem &x) {
    unsigned m = forbidden_mask(g, c, x);
    std::vector<int> out;
    for (int col = 1; col <= 32; ++col)
        if (m & (1u << (col - 1))) out.push_back(col);
    return out;
}

int smallest_free(unsigned mask, int max_colour) {
    for (int col = 1; col <= max_colour; ++col)
        if (!(mask & (1u << (col - 1)))) return col;
    return 0;
}

EdgeFaceColouring greedy_complete(const PlaneGraph &g, EdgeFaceColouring c) {
    if (!c.nice(g)) throw Error(Errc::not_nice, "colouring is not nice");
    if (!validate(g, c, false).valid())
        throw Error(Errc::not_nice, "coloured part is not proper");
    for (int f = 0; f < g.face_count(); ++f) {
        if (c.face[f] != 0) continue;
        int col = smallest_free(forbidden_mask(g, c, Elem{Elem::FaceKind, f}));
        if (col == 0)
            throw Error(Errc::no_free_colour, "no free colour for face f" + std::to_string(f));
        c.face[f] = col;
    }
    return c;
}

// --- oracle ----------------------------------------------------------------

namespace {

struct OracleState {
    const PlaneGraph &g;
    int k;
    long long budget;
    long long nodes = 0;
    int n_elems;
    std::vector<std::vector<int>> conflicts; // element index -> conflicting elements
    std::vector<int> colour;                 // 0 = unassigned
    std::vector<int> static_deg;

    Elem elem_of(int i) const {
        if (i < g.edge_count()) return Elem{Elem::EdgeKind, i};
        return Elem{Elem::FaceKind, i - g.edge_count()};
    }

    // 1 = solution found, 0 = exhausted, -1 = budget hit
    int search(int assigned, int max_used) {
        if (assigned == n_elems) return 1;
        if (++nodes > budget) return -1;

        // most constrained first, then highest conflict degree, then index
        int best = -1, best_avail = k + 1;
        unsigned best_mask = 0;
        for (int i = 0; i < n_elems; ++i) {
            if (colour[i] != 0) continue;
            unsigned mask = 0;
            for (int j : conflicts[i])
                if (colour[j] > 0) mask |= 1u << (colour[j] - 1);
            int avail = 0;
            int limit = std::min(k, max_used + 1);
            for (int c = 1; c <= limit; ++c)
                if (!(mask & (1u << (c - 1)))) ++avail;
            if (avail == 0) return 0;
            if (best == -1 || avail < best_avail ||
                (avail == best_avail && static_deg[i] > static_deg[best])) {
                best = i;
                best_avail = avail;
                best_mask = mask;
            }
        }
        int limit = std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (best_mask & (1u << (c - 1))) continue;
            colour[best] = c;
            int r = search(assigned + 1, std::max(max_used, c));
            if (r != 0) return r;
            colour[best] = 0;
        }
        return 0;
    }
};

} // namespace

OracleResult oracle_colour(const PlaneGraph &g, int k, long long budget) {
    if (k < 1) throw Error(Errc::precondition_violated, "k must be at least 1");

    OracleState st{g, k, budget, 0, 0, {}, {}, {}};
    st.n_elems = g.edge_count() + g.face_count();
    st.colour.assign(st.n_elems, 0);
    st.conflicts.resize(st.n_elems);

    auto add = [&](int a, int b) {
        st.conflicts[a].push_back(b);
        st.conflicts[b].push_back(a);
    };
    for (int x = 0; x < g.vertex_count(); ++x) {
        const auto &nb = g.neighbours(x);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                add(g.edge_id(x, nb[i]), g.edge_id(x, nb[j]));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        auto ds = g.edge_darts(e);
        int f0 = g.face_of(ds[0]), f1 = g.face_of(ds[1]);
        add(e, g.edge_count() + f0);
        if (f1 != f0) {
            add(e, g.edge_count() + f1);
            add(g.edge_count() + f0, g.edge_count() + f1);
        }
    }
    for (auto &cl : st.conflicts) {
        std::sort(cl.begin(), cl.end());
        cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    }
    st.static_deg.resize(st.n_elems);
    for (int i = 0; i < st.n_elems; ++i)
        st.static_deg[i] = static_cast<int>(st.conflicts[i].size());

    OracleResult res{OracleStatus::Infeasible, EdgeFaceColouring::empty(g), 0};
    if (st.n_elems == 0) {
        res.status = OracleStatus::Feasible;
        return res;
    }

    st.colour[0] = 1; // symmetry: the first canonical element is colour 1
    int r = st.search(1, 1);
    res.nodes = st.nodes;
    if (r == -1) {
        res.status = OracleStatus::BudgetExhausted;
    } else if (r == 1) {
        res.status = OracleStatus::Feasible;
        for (int i = 0; i < st.n_elems; ++i) {
            Elem x = st.elem_of(i);
            res.colouring.of(x) = st.colour[i];
        }
    }
    return res;
}

} // namespace efc
