#pragma once

// Exact-rational discharging: initial charges 2deg(v)-6 and deg(f)-6,
// redistribution rules R0-R4 applied with dart-level incidence
// multiplicity, and an audit that correlates negative final charges with
// detected configurations.  All arithmetic is exact; floating point never
// touches a charge.

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "efc/configs.hpp"
#include "efc/embed.hpp"

namespace efc {

using Rat = boost::rational<long long>;

enum class RuleTag { R0, R1a, R1b, R1c, R1d, R1e, R1f, R1g, R2a, R2b, R2c, R3, R4 };
const char *rule_name(RuleTag r);

struct ChargeElem {
    enum Kind { VertexKind, FaceKind } kind;
    int id;

    bool operator==(const ChargeElem &o) const { return kind == o.kind && id == o.id; }
    bool operator<(const ChargeElem &o) const {
        return kind != o.kind ? kind < o.kind : id < o.id;
    }
};

struct Transfer {
    ChargeElem from, to;
    Rat amount;       // per incidence occurrence
    RuleTag rule;
    int multiplicity; // number of incidence occurrences
    Rat total() const { return amount * multiplicity; }
};

struct ChargeLedger {
    std::vector<Rat> vertex_charge; // final after transfers
    std::vector<Rat> face_charge;
    std::vector<Transfer> transfers; // ordered by (from, to, rule)

    Rat charge(const ChargeElem &x) const {
        return x.kind == ChargeElem::VertexKind ? vertex_charge[x.id] : face_charge[x.id];
    }
    Rat total() const;
};

// Charges with no transfers; total is exactly -12 for a connected graph.
ChargeLedger initial_charges(const PlaneGraph &g);

// Full rule application.  Requires connected, simple, max degree <= 8.
ChargeLedger apply_rules(const PlaneGraph &g);

struct AuditReport {
    ChargeLedger ledger;
    Rat total;
    std::vector<std::pair<ChargeElem, Rat>> negatives;
    std::vector<ConfigMatch> matches_nearby; // within distance 2 of a negative
};

AuditReport audit(const PlaneGraph &g);

// Line-oriented text: "total", then "charge", then "transfer" lines,
// canonically ordered.
std::string serialise_report(const PlaneGraph &g, const ChargeLedger &ledger);

} // namespace efc
