#include "efc/configs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace efc {

const char *config_name(ConfigId id) {
    switch (id) {
    case ConfigId::A0: return "A0";
    case ConfigId::A1: return "A1";
    case ConfigId::A2: return "A2";
    case ConfigId::A3: return "A3";
    case ConfigId::B1: return "B1";
    case ConfigId::B2: return "B2";
    case ConfigId::B3: return "B3";
    case ConfigId::B4: return "B4";
    case ConfigId::C1: return "C1";
    case ConfigId::C2: return "C2";
    case ConfigId::C3: return "C3";
    case ConfigId::C4: return "C4";
    case ConfigId::C5: return "C5";
    case ConfigId::D1: return "D1";
    case ConfigId::D2: return "D2";
    case ConfigId::D3: return "D3";
    case ConfigId::D4: return "D4";
    case ConfigId::E1: return "E1";
    case ConfigId::E2: return "E2";
    case ConfigId::E3: return "E3";
    case ConfigId::E4: return "E4";
    case ConfigId::LN: return "LN";
    case ConfigId::LNN: return "LNN";
    }
    return "?";
}

ConfigFamily config_family(ConfigId id) {
    switch (id) {
    case ConfigId::A0: case ConfigId::A1: case ConfigId::A2: case ConfigId::A3:
        return ConfigFamily::A;
    case ConfigId::B1: case ConfigId::B2: case ConfigId::B3: case ConfigId::B4:
        return ConfigFamily::B;
    case ConfigId::C1: case ConfigId::C2: case ConfigId::C3: case ConfigId::C4:
    case ConfigId::C5:
        return ConfigFamily::C;
    case ConfigId::D1: case ConfigId::D2: case ConfigId::D3: case ConfigId::D4:
        return ConfigFamily::D;
    case ConfigId::E1: case ConfigId::E2: case ConfigId::E3: case ConfigId::E4:
        return ConfigFamily::E;
    case ConfigId::LN: return ConfigFamily::LN;
    case ConfigId::LNN: return ConfigFamily::LNN;
    }
    return ConfigFamily::A;
}

std::vector<int> ConfigMatch::key() const {
    std::vector<int> k{static_cast<int>(id)};
    for (const auto &b : vertices) k.push_back(b.second);
    for (const auto &b : faces) k.push_back(b.second);
    return k;
}

std::string ConfigMatch::describe() const {
    std::ostringstream os;
    os << config_name(id);
    for (const auto &b : vertices) os << " " << b.first << "=" << b.second;
    for (const auto &b : faces) os << " " << b.first << "=f" << b.second;
    return os.str();
}

namespace {

bool small_face(const PlaneGraph &g, int f) { return g.face_degree(f) <= 4; }

// the face on the side of edge (u, v) other than f
int other_face(const PlaneGraph &g, int f, int u, int v) {
    int f0 = g.face_at(u, v, 0);
    return f0 == f ? g.face_at(u, v, 1) : f0;
}

int degsum(const PlaneGraph &g, int u, int v) { return g.degree(u) + g.degree(v); }

// corner face of z between rotation positions t and t+1
int corner_face(const PlaneGraph &g, int z, int t) {
    const auto &r = g.neighbours(z);
    return g.face_of(g.dart_id(z, r[(t + 1) % r.size()]));
}

void sort_matches(std::vector<ConfigMatch> &ms) {
    std::sort(ms.begin(), ms.end(),
              [](const ConfigMatch &a, const ConfigMatch &b) { return a.key() < b.key(); });
    ms.erase(std::unique(ms.begin(), ms.end(),
                         [](const ConfigMatch &a, const ConfigMatch &b) {
                             return a.key() == b.key();
                         }),
             ms.end());
}

std::vector<ConfigMatch> detect_a0(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) {
            int support = g.neighbours(v)[0];
            ConfigMatch m{ConfigId::A0, {{"u", v}, {"v", support}}, {}, {}};
            m.reduction = Reduction{Reduction::DeletePendant, v, support, -1, {}, true};
            out.push_back(std::move(m));
        }
    return out;
}

std::vector<ConfigMatch> detect_a1(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) != 3) continue;
        auto vs = g.face_vertices(f);
        for (int i = 0; i < 3; ++i) {
            int v = vs[i];
            if (g.degree(v) != 2) continue;
            int u = std::min(vs[(i + 1) % 3], vs[(i + 2) % 3]);
            int w = std::max(vs[(i + 1) % 3], vs[(i + 2) % 3]);
            ConfigMatch m{ConfigId::A1, {{"u", u}, {"v", v}, {"w", w}}, {{"f", f}}, {}};
            m.reduction = Reduction{Reduction::DeleteEdge, u, v, -1, {}, true};
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_a2(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) != 4) continue;
        auto vs = g.face_vertices(f);
        for (int i = 0; i < 4; ++i) {
            int v = vs[i], x = vs[(i + 2) % 4];
            if (g.degree(v) != 2 || g.degree(x) > 3) continue;
            int u = vs[(i + 3) % 4], w = vs[(i + 1) % 4];
            ConfigMatch m{
                ConfigId::A2, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}, {{"f", f}}, {}};
            m.reduction = Reduction{Reduction::DeleteEdge, u, v, -1, {}, true};
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_a3(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        int a = g.neighbours(v)[0], b = g.neighbours(v)[1];
        for (int swap = 0; swap < 2; ++swap) {
            int u = swap ? b : a, w = swap ? a : b;
            if (g.degree(u) != 3 || g.degree(w) > 5) continue;
            ConfigMatch m{ConfigId::A3, {{"u", u}, {"v", v}, {"w", w}}, {}, {}};
            // contract the edge to the 3-neighbour, legal only when the
            // neighbours are non-adjacent (otherwise another configuration
            // or the cut-vertex decomposition applies)
            m.reduction =
                Reduction{Reduction::ContractEdge, u, v, -1, {}, !g.adjacent(a, b)};
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_b1(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (const Edge &e : g.edges()) {
        if (degsum(g, e.u, e.v) > 9) continue;
        int f0 = g.face_at(e.u, e.v, 0), f1 = g.face_at(e.u, e.v, 1);
        if (!small_face(g, f0) && !small_face(g, f1)) continue;
        ConfigMatch m{ConfigId::B1, {{"u", e.u}, {"v", e.v}}, {}, {}};
        m.reduction =
            Reduction{Reduction::DeleteEdge, e.u, e.v, -1, {}, !g.is_bridge(e.u, e.v)};
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<ConfigMatch> detect_c1(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (const Edge &e : g.edges()) {
        if (degsum(g, e.u, e.v) > 10) continue;
        int f0 = g.face_at(e.u, e.v, 0), f1 = g.face_at(e.u, e.v, 1);
        if (f0 == f1 || !small_face(g, f0) || !small_face(g, f1)) continue;
        ConfigMatch m{ConfigId::C1, {{"u", e.u}, {"v", e.v}}, {}, {}};
        m.reduction = Reduction{Reduction::DeleteEdge, e.u, e.v, -1, {}, true};
        out.push_back(std::move(m));
    }
    return out;
}

// B2/B3/B4 and C2/C3 are triangle patterns differing in which edges carry a
// second (<=4)-face and in the degree of w.
std::vector<ConfigMatch> detect_triangle_family(const PlaneGraph &g, ConfigId id) {
    std::vector<ConfigMatch> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) != 3) continue;
        auto vs = g.face_vertices(f);
        for (int wi = 0; wi < 3; ++wi) {
            int w = vs[wi];
            int p = vs[(wi + 1) % 3], q = vs[(wi + 2) % 3];
            for (int swap = 0; swap < 2; ++swap) {
                int u = swap ? q : p, v = swap ? p : q;
                bool ok = false;
                switch (id) {
                case ConfigId::B2:
                    ok = g.degree(w) == 6 && degsum(g, u, v) <= 10;
                    break;
                case ConfigId::B3:
                    ok = g.degree(w) == 7 && degsum(g, u, v) <= 10 &&
                         small_face(g, other_face(g, f, u, w));
                    break;
                case ConfigId::B4: {
                    int fu = other_face(g, f, u, w), fv = other_face(g, f, v, w);
                    ok = degsum(g, u, v) <= 10 && small_face(g, fu) && small_face(g, fv) &&
                         fu != fv;
                    break;
                }
                case ConfigId::C2:
                    ok = g.degree(w) == 6 && degsum(g, u, v) <= 11 &&
                         small_face(g, other_face(g, f, u, v));
                    break;
                case ConfigId::C3:
                    ok = g.degree(w) == 7 && degsum(g, u, v) <= 11 &&
                         small_face(g, other_face(g, f, u, v)) &&
                         small_face(g, other_face(g, f, u, w));
                    break;
                default: break;
                }
                if (!ok) continue;
                // symmetric patterns: avoid emitting both (u,v) and (v,u)
                if ((id == ConfigId::B2 || id == ConfigId::B4 || id == ConfigId::C2) &&
                    u > v)
                    continue;
                ConfigMatch m{id, {{"u", u}, {"v", v}, {"w", w}}, {{"f", f}}, {}};
                m.reduction = Reduction{Reduction::DeleteEdge, u, v, -1, {}, true};
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

// C4/C5: triangles uvw and vwx sharing vw, with wx incident to a second
// (<=4)-face.
std::vector<ConfigMatch> detect_c45(const PlaneGraph &g, ConfigId id) {
    std::vector<ConfigMatch> out;
    for (const Edge &e : g.edges()) {
        int fa = g.face_at(e.u, e.v, 0), fb = g.face_at(e.u, e.v, 1);
        if (fa == fb || g.face_degree(fa) != 3 || g.face_degree(fb) != 3) continue;
        for (int orient = 0; orient < 2; ++orient) {
            int f1 = orient ? fb : fa, f2 = orient ? fa : fb;
            int u = -1, x = -1; // apexes of f1 and f2
            for (int t : g.face_vertices(f1))
                if (t != e.u && t != e.v) u = t;
            for (int t : g.face_vertices(f2))
                if (t != e.u && t != e.v) x = t;
            for (int swap = 0; swap < 2; ++swap) {
                int v = swap ? e.v : e.u, w = swap ? e.u : e.v;
                if (!small_face(g, other_face(g, f2, w, x))) continue;
                bool ok = id == ConfigId::C4
                              ? g.degree(u) == 3 && g.degree(x) == 3
                              : degsum(g, u, v) <= 10 && g.degree(v) + g.degree(x) <= 11;
                if (!ok) continue;
                ConfigMatch m{id,
                              {{"u", u}, {"v", v}, {"w", w}, {"x", x}},
                              {{"f1", f1}, {"f2", f2}},
                              {}};
                int du = id == ConfigId::C4 ? w : u;
                int dv = id == ConfigId::C4 ? x : v;
                m.reduction = Reduction{Reduction::DeleteEdge, du, dv, -1, {}, true};
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

// D1-D4: a 2-path uvw with a triangle vwx.
std::vector<ConfigMatch> detect_d(const PlaneGraph &g, ConfigId id) {
    std::vector<ConfigMatch> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) != 3) continue;
        auto vs = g.face_vertices(f);
        for (int vi = 0; vi < 3; ++vi) {
            int v = vs[vi];
            for (int swap = 0; swap < 2; ++swap) {
                int w = vs[(vi + 1 + swap) % 3], x = vs[(vi + 2 - swap) % 3];
                for (int u : g.neighbours(v)) {
                    if (u == w || u == x) continue;
                    bool ok = false;
                    switch (id) {
                    case ConfigId::D1:
                        ok = degsum(g, u, v) <= 10 && degsum(g, v, w) <= 11 &&
                             (small_face(g, g.face_at(u, v, 0)) ||
                              small_face(g, g.face_at(u, v, 1))) &&
                             small_face(g, other_face(g, f, v, w)) &&
                             small_face(g, other_face(g, f, v, x));
                        break;
                    case ConfigId::D2: {
                        int g0 = g.face_at(u, v, 0), g1 = g.face_at(u, v, 1);
                        ok = degsum(g, u, v) <= 11 && degsum(g, v, w) <= 11 && g0 != g1 &&
                             small_face(g, g0) && small_face(g, g1) &&
                             small_face(g, other_face(g, f, v, w)) &&
                             small_face(g, other_face(g, f, v, x));
                        break;
                    }
                    case ConfigId::D3:
                        ok = g.degree(u) == 2 && g.degree(v) == 7 && g.degree(w) == 3 &&
                             small_face(g, other_face(g, f, v, x));
                        break;
                    case ConfigId::D4:
                        ok = g.degree(u) == 2 && g.degree(v) == 7 && g.degree(w) == 4 &&
                             small_face(g, other_face(g, f, v, w)) &&
                             small_face(g, other_face(g, f, v, x));
                        break;
                    default: break;
                    }
                    if (!ok) continue;
                    ConfigMatch m{
                        id, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}, {{"f", f}}, {}};
                    m.reduction = Reduction{Reduction::DeleteEdge, v, w, -1, {}, true};
                    out.push_back(std::move(m));
                }
            }
        }
    }
    return out;
}

// E1/E2: a fan of four triangles around z over the path u v w x y.
std::vector<ConfigMatch> detect_e12(const PlaneGraph &g, ConfigId id) {
    std::vector<ConfigMatch> out;
    for (int z = 0; z < g.vertex_count(); ++z) {
        const int d = g.degree(z);
        if (d < 5) continue;
        const auto &r = g.neighbours(z);
        for (int dir : {1, -1}) {
            for (int i = 0; i < d; ++i) {
                int idx[5], seq[5];
                for (int j = 0; j < 5; ++j) {
                    idx[j] = ((i + dir * j) % d + d) % d;
                    seq[j] = r[idx[j]];
                }
                bool fans = true;
                int cf[4];
                for (int j = 0; j < 4 && fans; ++j) {
                    cf[j] = corner_face(g, z, dir == 1 ? idx[j] : idx[j + 1]);
                    if (g.face_degree(cf[j]) != 3) fans = false;
                }
                if (!fans) continue;
                if (g.degree(seq[1]) != 3 || g.degree(seq[3]) != 4) continue;
                if (id == ConfigId::E1) {
                    int far = corner_face(g, z, dir == 1 ? idx[4] : (idx[4] + d - 1) % d);
                    if (!small_face(g, far)) continue;
                } else {
                    if (g.degree(seq[4]) != 6) continue;
                }
                ConfigMatch m{id,
                              {{"u", seq[0]},
                               {"v", seq[1]},
                               {"w", seq[2]},
                               {"x", seq[3]},
                               {"y", seq[4]},
                               {"z", z}},
                              {},
                              {}};
                m.reduction = Reduction{Reduction::DeleteEdge, z, seq[1], -1, {}, true};
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_e3(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (g.degree(z) != 8) continue;
        bool triangulated = true;
        for (int t = 0; t < 8 && triangulated; ++t)
            if (g.face_degree(corner_face(g, z, t)) != 3) triangulated = false;
        if (!triangulated) continue;
        for (int a : g.neighbours(z)) {
            if (g.degree(a) != 3) continue;
            for (int b : g.neighbours(z)) {
                if (g.degree(b) != 4) continue;
                ConfigMatch m{ConfigId::E3, {{"v", z}, {"u", a}, {"w", b}}, {}, {}};
                m.reduction = Reduction{Reduction::DeleteEdge, z, a, -1, {}, true};
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_e4(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) != 2) continue;
        int p = g.neighbours(w)[0], q = g.neighbours(w)[1];
        for (int swap = 0; swap < 2; ++swap) {
            int v = swap ? q : p, x = swap ? p : q;
            if (g.degree(v) != 6 || g.degree(x) != 3) continue;
            for (int u : g.neighbours(v)) {
                if (u == w || u == x || g.degree(u) > 5) continue;
                if (!small_face(g, g.face_at(u, v, 0)) &&
                    !small_face(g, g.face_at(u, v, 1)))
                    continue;
                ConfigMatch m{
                    ConfigId::E4, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}, {}, {}};
                if (g.adjacent(v, x))
                    m.reduction = Reduction{Reduction::DeleteEdge, u, v, -1, {}, true};
                else
                    m.reduction = Reduction{Reduction::ContractEdge, v, w, -1, {}, true};
                out.push_back(std::move(m));
            }
        }
    }
    return out;
}

std::vector<ConfigMatch> detect_ln(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (g.face_degree(f) < 5) continue;
        FaceLooseStats st = check_lemma_new(g, f);
        if (!st.violation) continue;
        ConfigMatch m{ConfigId::LN, {}, {{"f", f}}, {}};
        std::set<Edge> loose;
        for (int dart : g.face(f).boundary) {
            int a = g.dart_tail(dart), b = g.dart_head(dart);
            if (is_loose(g, a, b)) loose.insert(make_edge(a, b));
        }
        m.reduction = Reduction{Reduction::DeleteLooseEdges, -1, -1, f,
                                std::vector<Edge>(loose.begin(), loose.end()), true};
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

TightInfo is_tight(const PlaneGraph &g, int u, int v) {
    int d = g.dart_id(u, v);
    int s = (g.face_degree(g.face_of(d)) <= 4 ? 1 : 0) +
            (g.face_degree(g.face_of(g.twin(d))) <= 4 ? 1 : 0);
    return TightInfo{g.degree(u) + g.degree(v) - s == 9, s};
}

bool is_loose(const PlaneGraph &g, int u, int v) {
    if (g.find_edge(u, v) < 0)
        throw Error(Errc::unknown_edge,
                    "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return g.degree(u) + g.degree(v) <= 8;
}

std::vector<std::pair<int, int>> special_faces(const PlaneGraph &g, int v) {
    if (g.degree(v) < 7)
        throw Error(Errc::degree_too_low, "special faces need an (>=7)-vertex");
    std::set<int> found;
    for (int u : g.neighbours(v)) {
        if (g.degree(u) != 2) continue;
        for (int w : g.neighbours(u)) {
            int f = g.face_of(g.dart_id(u, w));
            if (g.face_degree(f) >= 5) found.insert(f);
            int f2 = g.face_of(g.twin(g.dart_id(u, w)));
            if (g.face_degree(f2) >= 5) found.insert(f2);
        }
    }
    std::vector<std::pair<int, int>> out;
    for (int f : found) {
        int mult = 0;
        for (int d : g.face(f).boundary)
            if (g.dart_tail(d) == v) ++mult;
        if (mult > 0) out.emplace_back(f, mult);
    }
    return out;
}

std::vector<int> exceptional_faces(const PlaneGraph &g, int v) {
    if (g.degree(v) != 6)
        throw Error(Errc::degree_too_low, "exceptional faces are defined for 6-vertices");
    std::set<int> found;
    for (int t = 0; t < 6; ++t) {
        int f = corner_face(g, v, t);
        if (g.face_degree(f) != 6 || found.count(f)) continue;
        const auto &walk = g.face(f).boundary;
        const int len = 6;
        for (int i = 0; i < len; ++i) {
            if (g.dart_tail(walk[i]) != v) continue;
            auto at = [&](int off) { return g.dart_tail(walk[((i + off) % len + len) % len]); };
            if ((g.degree(at(1)) == 2 && g.degree(at(2)) == 3) ||
                (g.degree(at(-1)) == 2 && g.degree(at(-2)) == 3))
                found.insert(f);
        }
    }
    return std::vector<int>(found.begin(), found.end());
}

FaceLooseStats check_lemma_new(const PlaneGraph &g, int f) {
    if (g.face_degree(f) < 5)
        throw Error(Errc::face_too_small, "loose-edge statistics need an (>=5)-face");
    FaceLooseStats st;
    st.face = f;
    st.d = g.face_degree(f);
    for (int d : g.face(f).boundary) {
        if (is_loose(g, g.dart_tail(d), g.dart_head(d))) ++st.x;
        if (g.degree(g.dart_tail(d)) == 2) ++st.q;
    }
    st.violation = st.x >= 1 && 2 * st.d - st.q - st.x < 9;
    return st;
}

std::vector<ConfigMatch> check_lemma_newnew(const PlaneGraph &g) {
    std::vector<ConfigMatch> out;
    for (const Edge &e : g.edges()) {
        if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
        int up = -1, vp = -1;
        for (int w : g.neighbours(e.u))
            if (w != e.v) up = w;
        for (int w : g.neighbours(e.v))
            if (w != e.u) vp = w;
        if (up == -1 || vp == -1) continue; // needs u' != v and v' != u
        if (up == vp && g.degree(up) == 8) continue;
        ConfigMatch m{
            ConfigId::LNN, {{"u", e.u}, {"v", e.v}, {"u'", up}, {"v'", vp}}, {}, {}};
        m.reduction = Reduction{Reduction::ContractEdge, e.u, e.v, -1, {}, up != vp};
        out.push_back(std::move(m));
    }
    sort_matches(out);
    return out;
}

std::vector<ConfigMatch> detect_config(const PlaneGraph &g, ConfigId id) {
    std::vector<ConfigMatch> out;
    switch (id) {
    case ConfigId::A0: out = detect_a0(g); break;
    case ConfigId::A1: out = detect_a1(g); break;
    case ConfigId::A2: out = detect_a2(g); break;
    case ConfigId::A3: out = detect_a3(g); break;
    case ConfigId::B1: out = detect_b1(g); break;
    case ConfigId::B2:
    case ConfigId::B3:
    case ConfigId::B4:
    case ConfigId::C2:
    case ConfigId::C3: out = detect_triangle_family(g, id); break;
    case ConfigId::C1: out = detect_c1(g); break;
    case ConfigId::C4:
    case ConfigId::C5: out = detect_c45(g, id); break;
    case ConfigId::D1:
    case ConfigId::D2:
    case ConfigId::D3:
    case ConfigId::D4: out = detect_d(g, id); break;
    case ConfigId::E1:
    case ConfigId::E2: out = detect_e12(g, id); break;
    case ConfigId::E3: out = detect_e3(g); break;
    case ConfigId::E4: out = detect_e4(g); break;
    case ConfigId::LN: out = detect_ln(g); break;
    case ConfigId::LNN: out = check_lemma_newnew(g); break;
    }
    sort_matches(out);
    return out;
}

std::vector<ConfigMatch> detect_all(const PlaneGraph &g) {
    if (!g.connected())
        throw Error(Errc::precondition_violated, "detect_all needs a connected graph");
    if (g.max_degree() > 8)
        throw Error(Errc::precondition_violated, "detect_all needs max degree <= 8");
    std::vector<ConfigMatch> out;
    for (int id = 0; id <= static_cast<int>(ConfigId::LNN); ++id) {
        auto ms = detect_config(g, static_cast<ConfigId>(id));
        out.insert(out.end(), std::make_move_iterator(ms.begin()),
                   std::make_move_iterator(ms.end()));
    }
    return out;
}

bool verify_match(const PlaneGraph &g, const ConfigMatch &m) {
    auto all = detect_config(g, m.id);
    auto key = m.key();
    for (const auto &other : all)
        if (other.key() == key) return true;
    return false;
}

} // namespace efc
