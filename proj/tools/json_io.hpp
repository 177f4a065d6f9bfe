// JSON views of the library types used by the orbitcalc CLI.
#pragma once

#include <json.hpp>

#include "orbitcalc/duality.hpp"
#include "orbitcalc/exceptional.hpp"
#include "orbitcalc/faithfulness.hpp"
#include "orbitcalc/springer.hpp"
#include "orbitcalc/unipotent.hpp"

namespace orbitcalc {

using nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const std::vector<Partition>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(to_json(p));
    return a;
}

inline json to_json(const Bipartition& b) { return json::array({to_json(b.first), to_json(b.second)}); }

inline json to_json(const Symbol& s) {
    return {{"a", s.a}, {"b", s.b}, {"top", s.top}, {"bottom", s.bottom}, {"defect", s.defect()}};
}

inline json to_json(const AcharClass& c, json tags = json::object()) {
    return {{"sat", to_json(c.sat)}, {"dual", to_json(c.dual)}, {"tags", std::move(tags)}};
}

inline bool has_symbols(Series s) { return s != Series::A && s != Series::A2; }

inline json to_json(const UnipotentRep& r) {
    json j{{"series", series_name(r.form.series)}, {"rank", r.form.rank}};
    if (has_symbols(r.form.series)) {
        j["symbol"] = to_json(r.symbol);
    } else {
        j["symbol"] = nullptr;
        j["partition"] = to_json(r.partition);
    }
    j["tag"] = r.tag < 0 ? json(nullptr) : json(r.tag);
    return j;
}

inline json to_json(const HcSeries& h) {
    return {{"index", h.index},
            {"levi", h.levi},
            {"weyl", std::string(1, h.weyl)},
            {"weyl_rank", h.weyl_rank},
            {"label", to_json(h.label)}};
}

inline json to_json(const SpringerBlock& b) {
    return {{"param", b.param},
            {"character", b.character},
            {"copy", b.copy},
            {"weyl", std::string(1, b.weyl)},
            {"weyl_rank", b.weyl_rank}};
}

inline json to_json(const OrbitLocalSystem& m, GroupKind kind) {
    json j{{"orbit", to_json(m.orbit)}};
    const bool symbolic = kind == GroupKind::SO || kind == GroupKind::Sp;
    j["symbol"] = symbolic ? to_json(m.symbol) : json(nullptr);
    j["order"] = m.order;
    j["character"] = m.character;
    j["copy"] = m.copy;
    j["tag"] = m.tag < 0 ? json(nullptr) : json(m.tag);
    return j;
}

inline json to_json(const FactorModel& f) {
    return {{"type", std::string(1, f.type)},
            {"rank", f.rank},
            {"copies", f.copies},
            {"series", series_name(f.series)},
            {"hc_index", f.hc_index},
            {"defect", f.defect},
            {"weyl", f.kind == WeylKind::B ? "B" : "D"},
            {"weyl_rank", f.weyl_rank}};
}

inline json to_json(const FaithfulnessReport& r) {
    json j;
    j["group"] = r.group.str();
    j["block"] = to_json(r.block);
    j["orbit"] = to_json(r.orbit);
    json factors = json::array();
    for (auto& f : r.witness.J.factors) factors.push_back(to_json(f));
    j["witness"] = {{"mu", to_json(r.witness.split.mu)},
                    {"nu", to_json(r.witness.split.nu)},
                    {"J", r.witness.J.shape()},
                    {"factors", factors},
                    {"wf", to_json(r.witness.wf)},
                    {"edge_case", r.witness.edge_case}};
    j["condition_i"] = {{"lifted", to_json(r.lifted)}, {"expected", to_json(r.expected)}, {"holds", r.condition_i}};
    json ls = json::array();
    for (auto& l : r.local_systems) {
        json F = json::array();
        for (auto& f : l.F) F.push_back(to_json(f));
        json s = json::array();
        for (auto& x : l.summands) s.push_back(to_json(x));
        ls.push_back({{"local_system", to_json(l.member, r.group.kind)},
                      {"E", to_json(l.E.label)},
                      {"F", F},
                      {"summands", s},
                      {"method", l.method},
                      {"hom_nonzero", l.hom_nonzero}});
    }
    j["condition_ii"] = {{"local_systems", ls}, {"holds", r.condition_ii}};
    json bounds = json::array();
    for (auto& c : r.bounds) {
        json F = json::array();
        for (auto& f : c.F) F.push_back(to_json(f));
        json b{{"local_system", c.local_system},
               {"J", c.shape},
               {"F", F},
               {"wf", to_json(c.wf)},
               {"ds", to_json(c.ds)},
               {"ssymbol_lhs", c.lhs},
               {"ssymbol_rhs", c.rhs},
               {"dominance", c.dominance},
               {"ssymbol", c.ssymbol}};
        if (!c.error.empty()) b["error"] = c.error;
        bounds.push_back(b);
    }
    j["condition_iii"] = {{"certificates", bounds}, {"holds", r.condition_iii}};
    j["failures"] = r.failures;
    j["overall"] = r.overall;
    return j;
}

inline json to_json(const ExceptionalRow& r) {
    return {{"orbit", r.orbit}, {"J", r.J}, {"quotient", r.quotient}, {"wf", to_json(r.wf)}};
}

}  // namespace orbitcalc
