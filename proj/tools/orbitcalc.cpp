#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "orbitcalc/spin.hpp"
#include "orbitcalc/wavefront.hpp"

using namespace orbitcalc;

namespace {

// "2^4,5,7,12^6,15" -> "2,2,2,2,5,7,12,...": exponents are expanded before parsing.
Partition read_partition(const std::string& text) {
    std::string out, tok;
    auto flush = [&] {
        if (tok.empty()) return;
        const auto caret = tok.find('^');
        if (caret == std::string::npos) {
            out += tok + ",";
        } else {
            const std::string base = tok.substr(0, caret);
            int k = 0;
            try {
                k = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw DomainError("bad exponent in '" + tok + "'");
            }
            if (k < 0) throw DomainError("negative exponent in '" + tok + "'");
            for (int i = 0; i < k; ++i) out += base + ",";
        }
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ')
            flush();
        else
            tok += c;
    }
    flush();
    const Partition p = parse_partition(out);
    for (int x : p.parts())
        if (x <= 0) throw DomainError("parts must be positive");
    return p;
}

std::vector<int> read_row(const std::string& text) {
    std::vector<int> row;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            row.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw DomainError("bad symbol entry '" + tok + "'");
        }
    }
    std::sort(row.begin(), row.end());
    return row;
}

char read_type(const std::string& t) {
    if (t.size() != 1 || std::string("ABCD").find(t[0]) == std::string::npos)
        throw DomainError("type must be one of A, B, C, D");
    return t[0];
}

// "C2:2,2" or "A2x2:2,1" (type, rank, optional copies, orbit)
LeviFactor read_factor(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon < 2) throw DomainError("factor '" + text + "' must look like C2:2,2");
    LeviFactor f;
    f.type = read_type(text.substr(0, 1));
    std::string head = text.substr(1, colon - 1);
    const auto x = head.find('x');
    try {
        f.rank = std::stoi(head.substr(0, x));
        if (x != std::string::npos) f.copies = std::stoi(head.substr(x + 1));
    } catch (const std::exception&) {
        throw DomainError("bad factor head '" + head + "'");
    }
    f.orbit = read_partition(text.substr(colon + 1));
    return f;
}

std::string row_text(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool int_array(const json& j) {
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_number_integer(); });
}

void print_text(const json& j, int indent, std::ostream& os) {
    const std::string pad(std::max(indent, 0), ' ');
    if (j.is_object() && j.empty()) {
        os << "{}\n";
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& v = it.value();
            if ((v.is_object() && !v.empty()) || (v.is_array() && !int_array(v) && !v.empty())) {
                os << pad << it.key() << ":\n";
                print_text(v, indent + 2, os);
            } else {
                os << pad << it.key() << ": ";
                print_text(v, -1, os);
            }
        }
    } else if (j.is_array() && !int_array(j) && !j.empty()) {
        for (auto& v : j) {
            if (v.is_object() || (v.is_array() && !int_array(v))) {
                os << pad << "-\n";
                print_text(v, indent + 2, os);
            } else {
                os << pad << "- ";
                print_text(v, -1, os);
            }
        }
    } else {
        if (int_array(j))
            os << row_text(j.get<std::vector<int>>());
        else if (j.is_string())
            os << j.get<std::string>();
        else
            os << j.dump();
        os << "\n";
    }
}

UnipotentRep find_rep(const FiniteGroupForm& form, const std::optional<Partition>& part,
                      const std::optional<Symbol>& sym, int tag) {
    const bool symbols = has_symbols(form.series);
    if (symbols && !sym) throw DomainError("series " + series_name(form.series) + " needs --top/--bottom");
    if (!symbols && !part) throw DomainError("series " + series_name(form.series) + " needs --partition");
    for (auto& r : enumerate_unipotent(form)) {
        if (!symbols) {
            if (r.partition == *part) return r;
            continue;
        }
        const Symbol c = canonicalize(*sym);
        if ((canonicalize(r.symbol) == c || canonicalize(flip(r.symbol)) == c) && (r.tag < 0 || r.tag == tag))
            return r;
    }
    throw DomainError("no unipotent representation of " + series_name(form.series) + "_" +
                      std::to_string(form.rank) + " with that label");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nilpotent orbit, symbol and wavefront-set calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print JSON");

    std::string type, part_text, group_name, series_text, top_text, bottom_text, orbit_text;
    std::string cand_sat, cand_dual;
    int a = 1, b = 0, rank = 0, N = 0, tag = 0;
    std::optional<int> block_param;
    bool rather_odd = false;
    std::vector<std::string> factor_texts;

    auto* dual = app.add_subcommand("dual", "Barbasch-Vogan dual of a partition");
    dual->add_option("--type", type, "A, B, C or D")->required();
    dual->add_option("--partition", part_text, "e.g. 5,3,1 or 2^4,5")->required();
    dual->add_flag("--rather-odd", rather_odd, "Use the tail-sum formula for rather odd partitions");

    auto* collapse_cmd = app.add_subcommand("collapse", "Largest partition of a type below a partition");
    collapse_cmd->add_option("--type", type, "B, C or D")->required();
    collapse_cmd->add_option("--partition", part_text)->required();

    auto* symbol_cmd = app.add_subcommand("symbol", "Invariants and maps of a symbol");
    symbol_cmd->add_option("--a", a, "gap parameter a")->default_val(1);
    symbol_cmd->add_option("--b", b, "gap parameter b")->default_val(0);
    symbol_cmd->add_option("--top", top_text, "top row, e.g. 0,2");
    symbol_cmd->add_option("--bottom", bottom_text, "bottom row");

    auto* spin_cmd = app.add_subcommand("spin-rho", "rho, rho-tilde and the spin symbol of a rather odd partition");
    spin_cmd->add_option("--partition", part_text)->required();

    auto* kaw = app.add_subcommand("kawanaka", "Wavefront sets of unipotent representations of finite groups");
    auto* hc = app.add_subcommand("hc-series", "Harish-Chandra series of unipotent representations");
    for (auto* sub : {kaw, hc}) {
        sub->add_option("--series", series_text, "A, 2A, B, C, D or 2D")->required();
        sub->add_option("--rank", rank, "symbol rank, or n for GL_n / U_n")->required();
        sub->add_option("--partition", part_text, "label for A and 2A");
        sub->add_option("--top", top_text, "symbol top row");
        sub->add_option("--bottom", bottom_text, "symbol bottom row");
        sub->add_option("--tag", tag, "0 or 1 for degenerate D symbols")->default_val(0);
    }

    auto* spr = app.add_subcommand("springer", "Generalized Springer correspondence");
    spr->add_option("--group", group_name, "SL, SO, Sp or Spin")->required();
    spr->add_option("--N", N, "size of the natural representation")->required();
    spr->add_option("--orbit", orbit_text, "restrict to one orbit");
    spr->add_option("--block", block_param, "restrict to one block parameter (r, or d for Spin)");

    auto* lift = app.add_subcommand("lift", "Achar class of an orbit in a pseudo-Levi");
    lift->add_option("--ambient", type, "A, B, C or D")->required();
    lift->add_option("--rank", rank)->required();
    lift->add_option("--factor", factor_texts, "TYPE RANK[xCOPIES]:ORBIT, e.g. C2:2,2 or A2x2:2,1")->required();

    auto* faith = app.add_subcommand("faithful", "Faithfulness report for an orbit in a block");
    faith->add_option("--group", group_name, "SL, SO, Sp, Spin, E6 or E7")->required();
    faith->add_option("--N", N, "size of the natural representation (classical groups)");
    faith->add_option("--block", block_param, "block parameter; all blocks when omitted");
    faith->add_option("--orbit", orbit_text, "partition, or Bala-Carter label for E6/E7");

    auto* wf = app.add_subcommand("wavefront", "Wavefront sets of AZ(X) from the dual orbit");
    wf->add_option("--dual-type", type, "A, B, C or D")->required();
    wf->add_option("--rank", rank)->required();
    wf->add_option("--orbit", orbit_text)->required();
    wf->add_option("--candidate-sat", cand_sat, "check d_A(O,1) <=_A (sat, dual)");
    wf->add_option("--candidate-dual", cand_dual);

    auto* tables = app.add_subcommand("tables", "(J, phi) tables for E6 and E7");
    tables->add_option("--group", group_name, "E6 or E7")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    json out;
    try {
        if (dual->parsed()) {
            const Partition p = read_partition(part_text);
            const char t = read_type(type);
            out["type"] = std::string(1, t);
            out["partition"] = to_json(p);
            if (rather_odd) {
                if (!is_rather_odd(p)) throw DomainError(p.str() + " is not rather odd");
                out["dual"] = to_json(dbv_rather_odd(p));
                out["half"] = to_json(half_dbv(p));
            } else {
                out["dual"] = to_json(d_dual(p, t));
            }
            out["dual_type"] = std::string(1, dual_side(t));
            if (t != 'A') out["special"] = is_special(p, type_from_letter(t));
        } else if (collapse_cmd->parsed()) {
            const Partition p = read_partition(part_text);
            const char t = read_type(type);
            if (t == 'A') throw DomainError("collapse needs type B, C or D");
            out = {{"type", type}, {"partition", to_json(p)}, {"collapse", to_json(collapse(p, type_from_letter(t)))}};
        } else if (symbol_cmd->parsed()) {
            const Symbol s = make_symbol(a, b, read_row(top_text), read_row(bottom_text));
            const Symbol c = canonicalize(s);
            out["symbol"] = to_json(s);
            out["canonical"] = to_json(c);
            out["rank"] = s.rank();
            out["content"] = c.content();
            out["special"] = is_special(s);
            out["special_of"] = to_json(special_of(s));
            out["B"] = to_json(bij_B(s));
            if (b == 0) {
                out["D"] = to_json(bij_D(s));
                if (a > 0) {
                    const auto lp = canonical_linear_presentation(c);
                    out["linear_presentation"] = {{"Z", lp.Z}, {"eps", lp.eps}};
                }
                if (a == 1) {
                    out["shriek"] = to_json(shriek(s));
                    out["tilde"] = to_json(tilde(s));
                }
            }
        } else if (spin_cmd->parsed()) {
            const Partition p = read_partition(part_text);
            if (!is_rather_odd(p)) throw DomainError(p.str() + " is not rather odd");
            const auto seq = spin_sequences(p);
            const auto lp = spin_presentation(p);
            out["partition"] = to_json(p);
            out["d"] = d_partition(p);
            out["q"] = seq.q;
            out["r"] = seq.r;
            out["eps"] = seq.eps;
            out["delta"] = seq.delta;
            out["gamma"] = seq.gamma;
            out["presentation"] = {{"Z", lp.Z}, {"eps", lp.eps}};
            out["Lambda"] = to_json(spin_symbol(p));
            out["rho_tilde"] = to_json(rho_tilde(p));
            out["rho"] = to_json(rho_recursive(p));
            out["rho_closed"] = to_json(rho_closed(p));
            out["ssymbol_trivial"] = trivial_ssymbol_sequence(p);
            out["dbv"] = to_json(dbv_rather_odd(p));
            out["half_dbv"] = to_json(half_dbv(p));
        } else if (kaw->parsed() || hc->parsed()) {
            const FiniteGroupForm form{series_from_name(series_text), rank};
            std::optional<Partition> part;
            std::optional<Symbol> sym;
            if (!part_text.empty()) part = read_partition(part_text);
            if (!top_text.empty() || !bottom_text.empty())
                sym = make_symbol(1, 0, read_row(top_text), read_row(bottom_text));
            std::vector<UnipotentRep> reps;
            if (part || sym)
                reps.push_back(find_rep(form, part, sym, tag));
            else
                reps = enumerate_unipotent(form);
            json list = json::array();
            for (auto& r : reps) {
                json e{{"rep", to_json(r)}};
                if (kaw->parsed()) {
                    e["wf"] = to_json(kawanaka_wf(r));
                    const Family f = family_of(r);
                    e["family"] = has_symbols(form.series) ? to_json(f.special) : to_json(f.partition);
                } else {
                    e["hc"] = to_json(hc_series(r));
                }
                list.push_back(e);
            }
            out["representations"] = list;
        } else if (spr->parsed()) {
            const ComplexGroup g = parse_group(group_name, N);
            std::optional<Partition> only;
            if (!orbit_text.empty()) only = read_partition(orbit_text);
            json blocks = json::array();
            for (auto& blk : springer_blocks(g)) {
                if (block_param && blk.param != *block_param) continue;
                json members = json::array();
                for (auto& m : block_members(g, blk)) {
                    if (only && p1(g, m) != *only) continue;
                    json e = to_json(m, g.kind);
                    e["label"] = to_json(springer_rep(g, m).label.label);
                    members.push_back(e);
                }
                blocks.push_back({{"block", to_json(blk)}, {"members", members}});
            }
            out = {{"group", g.str()}, {"blocks", blocks}};
        } else if (lift->parsed()) {
            PseudoLeviOrbit p{read_type(type), rank, {}};
            for (auto& t : factor_texts) p.factors.push_back(read_factor(t));
            out = to_json(lift_class(p), {{"shape", p.shape()}, {"ambient", std::string(1, p.ambient)}});
        } else if (faith->parsed()) {
            if (group_name == "E6" || group_name == "E7") {
                if (orbit_text.empty()) throw DomainError("--orbit is required for " + group_name);
                const auto w = exceptional_witness(group_name, orbit_text);
                out = {{"group", w.group}, {"orbit", w.orbit}, {"rule", w.rule}};
                if (w.rule == "table")
                    out["witness"] = to_json(w.row);
                else
                    out["witness"] = {{"J", "I_{0,K}"}, {"wf", "O_0"}, {"status", "not recomputed"}};
            } else {
                const ComplexGroup g = parse_group(group_name, N);
                std::optional<Partition> only;
                if (!orbit_text.empty()) only = read_partition(orbit_text);
                json reports = json::array();
                bool all = true;
                for (auto& blk : springer_blocks(g)) {
                    if (block_param && blk.param != *block_param) continue;
                    std::vector<Partition> orbits;
                    for (auto& m : block_members(g, blk)) {
                        const Partition o = p1(g, m);
                        if (only && o != *only) continue;
                        if (std::find(orbits.begin(), orbits.end(), o) == orbits.end()) orbits.push_back(o);
                    }
                    for (auto& o : orbits) {
                        const auto r = check_faithful(g, blk, o);
                        all = all && r.overall;
                        reports.push_back(to_json(r));
                    }
                }
                if (reports.empty()) throw DomainError("no orbit of " + g.str() + " matches");
                out = {{"reports", reports}, {"all_faithful", all}};
            }
        } else if (wf->parsed()) {
            const auto r = wavefront_of_az(read_type(type), rank, read_partition(orbit_text));
            out["kwf"] = {{"sat", to_json(r.kwf.sat)}, {"dual", to_json(r.kwf.dual)}};
            out["barkwf"] = to_json(r.barkwf);
            if (!cand_sat.empty() || !cand_dual.empty()) {
                if (cand_sat.empty() || cand_dual.empty())
                    throw DomainError("--candidate-sat and --candidate-dual go together");
                out["bound"] = wfbound_check(r.dual_type, r.rank, r.orbit,
                                             {read_partition(cand_sat), read_partition(cand_dual)});
            }
        } else if (tables->parsed()) {
            json rows = json::array();
            for (auto& row : exceptional_table(group_name)) rows.push_back(to_json(row));
            std::cout << json{{"group", group_name}, {"rows", rows}}.dump(2, ' ', false) << "\n";
            return 0;
        }
    } catch (const DomainError& e) {
        if (as_json)
            std::cout << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (as_json)
        std::cout << out.dump(2) << "\n";
    else
        print_text(out, 0, std::cout);
    return 0;
}
