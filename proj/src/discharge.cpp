#include "efc/discharge.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace efc {

const char *rule_name(RuleTag r) {
    switch (r) {
    case RuleTag::R0: return "R0";
    case RuleTag::R1a: return "R1a";
    case RuleTag::R1b: return "R1b";
    case RuleTag::R1c: return "R1c";
    case RuleTag::R1d: return "R1d";
    case RuleTag::R1e: return "R1e";
    case RuleTag::R1f: return "R1f";
    case RuleTag::R1g: return "R1g";
    case RuleTag::R2a: return "R2a";
    case RuleTag::R2b: return "R2b";
    case RuleTag::R2c: return "R2c";
    case RuleTag::R3: return "R3";
    case RuleTag::R4: return "R4";
    }
    return "?";
}

Rat ChargeLedger::total() const {
    Rat t = 0;
    for (const Rat &r : vertex_charge) t += r;
    for (const Rat &r : face_charge) t += r;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph &g) {
    if (!g.connected())
        throw Error(Errc::disconnected, "charges are defined for connected graphs");
    ChargeLedger led;
    led.vertex_charge.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        led.vertex_charge.emplace_back(2 * g.degree(v) - 6);
    led.face_charge.reserve(g.face_count());
    for (int f = 0; f < g.face_count(); ++f)
        led.face_charge.emplace_back(g.face_degree(f) - 6);
    return led;
}

namespace {

// sorted corner-degree triple of a triangle
std::array<int, 3> triangle_triple(const PlaneGraph &g, int f) {
    auto vs = g.face_vertices(f);
    std::array<int, 3> t{g.degree(vs[0]), g.degree(vs[1]), g.degree(vs[2])};
    std::sort(t.begin(), t.end());
    return t;
}

// m of a (2,8,m,8)-face pattern matched cyclically, or -1
int face_2_8_m_8(const PlaneGraph &g, int f) {
    auto vs = g.face_vertices(f);
    for (int r = 0; r < 4; ++r)
        if (g.degree(vs[r]) == 2 && g.degree(vs[(r + 1) % 4]) == 8 &&
            g.degree(vs[(r + 3) % 4]) == 8)
            return g.degree(vs[(r + 2) % 4]);
    return -1;
}

struct RuleDecision {
    bool fires = false;
    RuleTag rule = RuleTag::R0;
    Rat amount;
};

RuleDecision classify_r1(const PlaneGraph &g, int f, bool special) {
    const int fd = g.face_degree(f);
    if (fd == 3) {
        auto t = triangle_triple(g, f);
        if ((t[0] == 3 && t[1] >= 7) || (t[0] == 4 && t[1] == 6 && t[2] >= 7))
            return {true, RuleTag::R1a, Rat(3, 2)};
        if (t[0] == 5 && t[1] == 5 && t[2] >= 7) return {true, RuleTag::R1b, Rat(7, 5)};
        if (t[0] == 4 && t[1] >= 7) return {true, RuleTag::R1c, Rat(5, 4)};
        if (t[0] == 5 && t[1] == 6 && t[2] == 8) return {true, RuleTag::R1d, Rat(6, 5)};
        if ((t[0] == 5 && t[1] == 6 && t[2] == 7) || (t[0] == 5 && t[1] >= 7))
            return {true, RuleTag::R1e, Rat(11, 10)};
        if (t[0] >= 6) return {true, RuleTag::R1f, Rat(1)};
        return {};
    }
    if (fd == 4) {
        int m = face_2_8_m_8(g, f);
        if (m == 4) return {true, RuleTag::R1c, Rat(5, 4)};
        if (m == 5) return {true, RuleTag::R1e, Rat(11, 10)};
        if (m >= 2 && m <= 3) return {}; // a (2,8,<=3,8)-face receives nothing
        return {true, RuleTag::R1f, Rat(1)};
    }
    if (special) return {true, RuleTag::R1f, Rat(1)};
    if (fd == 5) return {true, RuleTag::R1g, Rat(1, 2)};
    return {};
}

RuleDecision classify_r2(const PlaneGraph &g, int f, bool exceptional) {
    const int fd = g.face_degree(f);
    if (fd == 3) {
        auto t = triangle_triple(g, f);
        if (t[0] == 5 && t[1] == 6 && (t[2] == 6 || t[2] == 7))
            return {true, RuleTag::R2a, Rat(11, 10)};
        return {true, RuleTag::R2b, Rat(1)};
    }
    if (fd == 4) return {true, RuleTag::R2b, Rat(1)};
    if (fd == 5) return {true, RuleTag::R2c, Rat(1, 2)};
    if (fd == 6) {
        if (exceptional) return {true, RuleTag::R2b, Rat(1)};
        return {true, RuleTag::R2c, Rat(1, 2)};
    }
    return {};
}

} // namespace

ChargeLedger apply_rules(const PlaneGraph &g) {
    if (!g.connected())
        throw Error(Errc::disconnected, "discharging needs a connected graph");
    if (g.max_degree() > 8)
        throw Error(Errc::precondition_violated, "discharging needs max degree <= 8");

    ChargeLedger led = initial_charges(g);

    // (v, f) incidence multiplicities via corner occurrences
    std::map<std::pair<int, int>, int> corners;
    for (int f = 0; f < g.face_count(); ++f)
        for (int d : g.face(f).boundary) ++corners[{g.dart_tail(d), f}];

    // per-vertex special / exceptional face sets
    std::vector<std::set<int>> special(g.vertex_count()), exceptional(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) >= 7)
            for (auto [f, mult] : special_faces(g, v)) special[v].insert(f);
        if (g.degree(v) == 6)
            for (int f : exceptional_faces(g, v)) exceptional[v].insert(f);
    }

    auto push = [&](ChargeElem from, ChargeElem to, Rat amount, RuleTag rule, int mult) {
        led.transfers.push_back(Transfer{from, to, amount, rule, mult});
        Rat moved = amount * mult;
        (from.kind == ChargeElem::VertexKind ? led.vertex_charge[from.id]
                                             : led.face_charge[from.id]) -= moved;
        (to.kind == ChargeElem::VertexKind ? led.vertex_charge[to.id]
                                           : led.face_charge[to.id]) += moved;
    };

    for (const auto &[vf, mult] : corners) {
        const auto [v, f] = vf;
        const int dv = g.degree(v);
        const ChargeElem ev{ChargeElem::VertexKind, v}, ef{ChargeElem::FaceKind, f};

        // R0: an (>=4)-face pays each incident 2-vertex
        if (g.face_degree(f) >= 4 && dv == 2)
            push(ef, ev, Rat(1), RuleTag::R0, mult);

        RuleDecision dec;
        if (dv >= 7)
            dec = classify_r1(g, f, special[v].count(f) != 0);
        else if (dv == 6)
            dec = classify_r2(g, f, exceptional[v].count(f) != 0);
        else if (dv == 5)
            dec = {true, RuleTag::R3, Rat(4, 5)};
        else if (dv == 4)
            dec = {true, RuleTag::R4, Rat(1, 2)};
        if (dec.fires) push(ev, ef, dec.amount, dec.rule, mult);
    }

    std::sort(led.transfers.begin(), led.transfers.end(),
              [](const Transfer &a, const Transfer &b) {
                  if (!(a.from == b.from)) return a.from < b.from;
                  if (!(a.to == b.to)) return a.to < b.to;
                  return a.rule < b.rule;
              });
    if (led.total() != Rat(-12))
        throw Error(Errc::internal_extension_failure,
                    "charge conservation broken: total " +
                        std::to_string(boost::rational_cast<double>(led.total())));
    return led;
}

AuditReport audit(const PlaneGraph &g) {
    AuditReport rep;
    rep.ledger = apply_rules(g);
    rep.total = rep.ledger.total();

    for (int v = 0; v < g.vertex_count(); ++v)
        if (rep.ledger.vertex_charge[v] < 0)
            rep.negatives.emplace_back(ChargeElem{ChargeElem::VertexKind, v},
                                       rep.ledger.vertex_charge[v]);
    for (int f = 0; f < g.face_count(); ++f)
        if (rep.ledger.face_charge[f] < 0)
            rep.negatives.emplace_back(ChargeElem{ChargeElem::FaceKind, f},
                                       rep.ledger.face_charge[f]);

    // distance <= 2 in the vertex-face incidence graph from any negative
    const int nv = g.vertex_count();
    const int nodes = nv + g.face_count();
    std::vector<int> dist(nodes, -1);
    std::queue<int> q;
    for (const auto &[e, c] : rep.negatives) {
        int id = e.kind == ChargeElem::VertexKind ? e.id : nv + e.id;
        dist[id] = 0;
        q.push(id);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (dist[x] == 2) continue;
        if (x < nv) {
            for (int w : g.neighbours(x)) {
                for (int side = 0; side < 2; ++side) {
                    int f = nv + g.face_at(x, w, side);
                    if (dist[f] == -1) {
                        dist[f] = dist[x] + 1;
                        q.push(f);
                    }
                }
            }
        } else {
            for (int d : g.face(x - nv).boundary) {
                int v = g.dart_tail(d);
                if (dist[v] == -1) {
                    dist[v] = dist[x] + 1;
                    q.push(v);
                }
            }
        }
    }
    auto near = [&](int vertex, int face) {
        if (vertex >= 0 && dist[vertex] != -1) return true;
        return face >= 0 && dist[nv + face] != -1;
    };
    for (const ConfigMatch &m : detect_all(g)) {
        bool hit = false;
        for (const auto &b : m.vertices)
            if (near(b.second, -1)) hit = true;
        for (const auto &b : m.faces)
            if (near(-1, b.second)) hit = true;
        if (m.reduction.u >= 0 && near(m.reduction.u, -1)) hit = true;
        if (m.reduction.v >= 0 && near(m.reduction.v, -1)) hit = true;
        if (hit) rep.matches_nearby.push_back(m);
    }
    return rep;
}

std::string serialise_report(const PlaneGraph &g, const ChargeLedger &ledger) {
    std::ostringstream os;
    os << "total " << ledger.total() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "charge v" << v << " " << ledger.vertex_charge[v] << "\n";
    for (int f = 0; f < g.face_count(); ++f)
        os << "charge f" << f << " " << ledger.face_charge[f] << "\n";
    auto name = [](const ChargeElem &e) {
        return (e.kind == ChargeElem::VertexKind ? "v" : "f") + std::to_string(e.id);
    };
    for (const Transfer &t : ledger.transfers)
        os << "transfer " << name(t.from) << " " << name(t.to) << " " << t.total() << " "
           << rule_name(t.rule) << "\n";
    return os.str();
}

} // namespace efc
