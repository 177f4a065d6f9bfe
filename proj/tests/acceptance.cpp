// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: acceptance <path-to-orbitcalc> <data-dir>
#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "orbitcalc/duality.hpp"
#include "orbitcalc/faithfulness.hpp"
#include "orbitcalc/spin.hpp"
#include "orbitcalc/symbol.hpp"
#include "orbitcalc/weyl.hpp"

using namespace orbitcalc;

namespace {

struct Outcome {
    long checked = 0;
    long failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (ok) return;
        if (failed++ == 0) first_failure = what();
    }
};

bool report(int id, const std::string& title, const Outcome& o, const std::string& extra = "") {
    const bool pass = o.failed == 0 && o.checked > 0;
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.checked
              << " checks, " << o.failed << " failures" << extra << "]";
    if (!pass && !o.first_failure.empty()) std::cout << "  first: " << o.first_failure;
    std::cout << std::endl;
    return pass;
}

template <class T>
std::string seq(const std::vector<T>& v) {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ')';
    return s.str();
}

bool criterion1() {
    const Partition lambda{15, 12, 12, 12, 12, 12, 12, 7, 5, 2, 2, 2, 2};
    Outcome o;
    const auto s = spin_sequences(lambda);
    auto same = [&](const std::string& name, const std::vector<int>& got, const std::vector<int>& want) {
        o.expect(got == want, [&] { return name + " = " + seq(got) + ", expected " + seq(want); });
    };
    same("q", s.q, {0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 3, 3});
    same("r", s.r, {2, 2, 2, 2, 1, 3, 0, 0, 0, 0, 0, 0, 3});
    same("eps", s.eps, {1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1});
    same("delta", s.delta, {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0});
    same("q+z-delta", spin_presentation(lambda).Z, {0, 1, 2, 3, 5, 6, 9, 9, 11, 11, 13, 13, 15});
    const Symbol big_lambda{2, 0, {1, 3, 5, 9, 11, 13}, {0, 2, 6, 9, 11, 13, 15}};
    o.expect(spin_symbol(lambda) == big_lambda, [] { return std::string("Lambda differs"); });
    const Bipartition tilde{Partition{1, 1, 1, 3, 3, 3}, Partition{0, 0, 2, 3, 3, 3, 3}};
    o.expect(rho_tilde(lambda) == tilde, [] { return std::string("rho-tilde differs"); });
    o.expect(rho_recursive(lambda) == tilde.flip(), [] { return std::string("rho differs"); });
    o.expect(rho_closed(lambda) == tilde.flip(), [] { return std::string("closed rho differs"); });
    return report(1, "worked example lambda = (2^4,5,7,12^6,15)", o);
}

bool criterion2() {
    Outcome o;
    for (int N = 0; N <= 30; ++N)
        for (auto& l : rather_odd_partitions(N))
            o.expect(rho_closed(l) == rho_recursive(l), [&] { return l.str(); });
    return report(2, "rho_closed = rho_recursive, N <= 30", o);
}

bool criterion3() {
    Outcome o;
    for (int N = 0; N <= 30; ++N)
        for (auto& l : rather_odd_partitions(N)) {
            o.expect(bij_B(spin_symbol(l)) == rho_tilde(l), [&] { return "B(Lambda) for " + l.str(); });
            o.expect(is_canonical(spin_presentation(l)), [&] { return "presentation for " + l.str(); });
        }
    return report(3, "B(spin_symbol) = rho-tilde and canonical presentation, N <= 30", o);
}

bool criterion4() {
    Outcome o;
    for (int N = 1; N <= 30; ++N)
        for (auto& l : rather_odd_partitions(N)) {
            const Partition d = dbv_rather_odd(l);
            o.expect(d == dbv(l, N % 2 ? ClassicalType::B : ClassicalType::D), [&] { return "dbv of " + l.str(); });
            const Partition h = half_dbv(l);
            o.expect(union_of(h, h) == d, [&] { return "h u h for " + l.str(); });
        }
    return report(4, "dbv_rather_odd = dbv and splits as h u h, N <= 30", o);
}

bool criterion5() {
    Outcome o;
    for (int n = 0; n <= 16; ++n)
        for (auto& p : partitions_of(n))
            for (char t : {'B', 'C', 'D'}) {
                if ((t == 'B') != (n % 2 == 1)) continue;
                const auto ref = oracle::max_typed_below(p.parts(), t);
                o.expect(ref && collapse(p, type_from_letter(t)) == Partition(*ref),
                         [&] { return std::string(1, t) + "-collapse of " + p.str(); });
            }
    return report(5, "collapse = brute-force maximum, |lambda| <= 16, types B/C/D", o);
}

// Raise a partition in dominance order by moving single boxes upward.
Partition raise(const Partition& p, std::mt19937& rng) {
    std::vector<int> v = p.parts();
    std::uniform_int_distribution<int> moves(0, 4);
    for (int k = moves(rng); k > 0; --k) {
        v.push_back(0);
        std::vector<std::pair<int, int>> options;
        for (int i = 0; i < static_cast<int>(v.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(v.size()); ++j) {
                if (v[j] == 0) continue;
                std::vector<int> w = v;
                ++w[i];
                --w[j];
                if (std::is_sorted(w.rbegin(), w.rend())) options.push_back({i, j});
            }
        if (!options.empty()) {
            auto [i, j] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
            ++v[i];
            --v[j];
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    return Partition(v);
}

Partition random_partition(std::mt19937& rng, int max_size) {
    const int n = std::uniform_int_distribution<int>(0, max_size)(rng);
    std::vector<int> v;
    for (int left = n; left > 0;) {
        const int x = std::uniform_int_distribution<int>(1, left)(rng);
        v.push_back(x);
        left -= x;
    }
    std::sort(v.rbegin(), v.rend());
    return Partition(v);
}

std::vector<std::vector<int>> gapped_rows(int g, int lo, int hi, int maxlen) {
    std::vector<std::vector<int>> out{{}};
    std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int from) {
        if (static_cast<int>(cur.size()) == maxlen) return;
        for (int v = from; v <= hi; ++v) {
            cur.push_back(v);
            out.push_back(cur);
            rec(cur, v + std::max(g, 0));
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur, lo);
    return out;
}

Symbol random_symbol(std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, 5), step(0, 3);
    Symbol s{1, 0, {}, {}};
    int n = len(rng), v = step(rng);
    for (int i = 0; i < n; ++i, v += 1 + step(rng)) s.top.push_back(v);
    n = len(rng);
    v = step(rng);
    for (int i = 0; i < n; ++i, v += 1 + step(rng)) s.bottom.push_back(v);
    return s;
}

std::vector<int> plus(const std::vector<int>& z, const std::vector<int>& e) {
    std::vector<int> r(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) r[i] = z[i] + e[i];
    return r;
}

LinearPresentation presentation_from_mask(const Symbol& s, unsigned mask) {
    LinearPresentation p;
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < s.top.size() + s.bottom.size(); ++k) {
        const bool is_y = mask >> k & 1;
        p.Z.push_back(is_y ? s.bottom[j++] : s.top[i++]);
        p.eps.push_back(is_y);
    }
    return p;
}

void check_presentation_dominance(const Symbol& s, unsigned mask, Outcome& o) {
    const auto star = canonical_linear_presentation(s);
    const auto p = presentation_from_mask(s, mask);
    o.expect(from_linear_presentation(p, 1, 0) == s && dominance_leq_ascending(plus(p.Z, p.eps), plus(star.Z, star.eps)),
             [&] { return "presentation " + seq(p.Z) + "/" + seq(p.eps); });
}

void check_tilde_identity(const Symbol& s, Outcome& o) {
    const auto lp = canonical_linear_presentation(s);
    std::vector<int> expect(lp.Z.size());
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = 2 * lp.Z[i] + lp.eps[i];
    const auto got = canonical_linear_presentation(with_content(tilde(s), s.content())).Z;
    o.expect(got == expect, [&] { return "tilde of " + seq(s.top) + "/" + seq(s.bottom); });
}

bool criterion6() {
    std::mt19937 rng(20261016);
    Outcome u;
    for (int n1 = 0; n1 <= 10; ++n1)
        for (int n2 = 0; n2 <= 10; ++n2) {
            const auto P1 = partitions_of(n1), P2 = partitions_of(n2);
            std::vector<std::pair<const Partition*, const Partition*>> A, B;
            for (auto& x : P1)
                for (auto& y : P1)
                    if (dominance_leq(x, y)) A.push_back({&x, &y});
            for (auto& x : P2)
                for (auto& y : P2)
                    if (dominance_leq(x, y)) B.push_back({&x, &y});
            for (auto [a1, a2] : A)
                for (auto [b1, b2] : B)
                    u.expect(dominance_leq(union_of(*a1, *b1), union_of(*a2, *b2)),
                             [&] { return a1->str() + " " + a2->str() + " " + b1->str() + " " + b2->str(); });
        }
    for (int t = 0; t < 10000; ++t) {
        const Partition a1 = random_partition(rng, 40), b1 = random_partition(rng, 40);
        const Partition a2 = raise(a1, rng), b2 = raise(b1, rng);
        u.expect(dominance_leq(union_of(a1, b1), union_of(a2, b2)), [&] { return a1.str() + " " + b1.str(); });
    }

    Outcome l1, l2;
    for (auto& x : gapped_rows(1, 0, 6, 4))
        for (auto& y : gapped_rows(1, 0, 6, 4)) {
            const Symbol s{1, 0, x, y};
            const int L = static_cast<int>(x.size() + y.size());
            if (L <= 8)
                for (unsigned mask = 0; mask < (1u << L); ++mask)
                    if (std::popcount(mask) == static_cast<int>(y.size())) check_presentation_dominance(s, mask, l1);
        }
    for (auto& x : gapped_rows(1, 0, 8, 5))
        for (auto& y : gapped_rows(1, 0, 8, 5))
            if (x.size() + y.size() <= 10) check_tilde_identity(Symbol{1, 0, x, y}, l2);
    for (int t = 0; t < 10000; ++t) {
        const Symbol s = random_symbol(rng);
        const int L = static_cast<int>(s.top.size() + s.bottom.size());
        std::vector<int> order(L, 0);
        std::fill(order.begin() + static_cast<int>(s.top.size()), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        unsigned mask = 0;
        for (int k = 0; k < L; ++k) mask |= static_cast<unsigned>(order[k]) << k;
        check_presentation_dominance(s, mask, l1);
        check_tilde_identity(s, l2);
    }

    Outcome all;
    for (const auto* part : {&u, &l1, &l2}) {
        all.checked += part->checked;
        all.failed += part->failed;
        if (all.first_failure.empty()) all.first_failure = part->first_failure;
    }
    std::ostringstream extra;
    extra << "; union " << u.checked << ", presentations " << l1.checked << ", tilde " << l2.checked;
    return report(6, "union dominance and symbol presentation lemmas, exhaustive + 10^4 random each", all,
                  extra.str());
}

std::vector<Partition> block_orbits(const ComplexGroup& g, const SpringerBlock& b) {
    std::vector<Partition> out;
    for (auto& m : block_members(g, b)) {
        const Partition o = p1(g, m);
        if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
    }
    return out;
}

bool criterion7() {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::array<long, 6> per_family{};
    for (auto kind : {GroupKind::SL, GroupKind::SO, GroupKind::Sp, GroupKind::Spin})
        for (int N = 2; N <= 13; ++N) {
            if (kind == GroupKind::Sp && N % 2) continue;
            const ComplexGroup g{kind, N};
            if (g.rank() > 6) continue;
            const int family = kind == GroupKind::SL     ? 0
                               : kind == GroupKind::Sp   ? 3
                               : kind == GroupKind::SO   ? (N % 2 ? 1 : 2)
                                                         : (N % 2 ? 4 : 5);
            for (auto& b : springer_blocks(g))
                for (auto& l : block_orbits(g, b)) {
                    const auto r = check_faithful(g, b, l);
                    ++per_family[family];
                    o.expect(r.overall, [&] {
                        std::string f = g.str() + " block " + std::to_string(b.param) + " orbit " + l.str();
                        for (auto& x : r.failures) f += "; " + x;
                        return f;
                    });
                }
        }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < 600, [&] { return "took " + std::to_string(secs) + " s"; });
    std::ostringstream extra;
    extra.precision(2);
    extra << std::fixed << "; SL " << per_family[0] << ", SO-odd " << per_family[1] << ", SO-even " << per_family[2]
          << ", Sp " << per_family[3] << ", Spin-odd " << per_family[4] << ", Spin-even " << per_family[5] << "; "
          << secs << " s";
    return report(7, "check_faithful on every classical block and orbit, rank <= 6", o, extra.str());
}

std::string run(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    pclose(pipe);
    return out;
}

bool criterion8(const std::string& exe, const std::string& data) {
    Outcome o;
    for (std::string group : {"E6", "E7"}) {
        std::ifstream in(data + "/tables_" + (group == "E6" ? std::string("e6") : std::string("e7")) + ".json");
        std::stringstream want;
        want << in.rdbuf();
        o.expect(in.is_open(), [&] { return "cannot read table for " + group; });
        const std::string got = run("\"" + exe + "\" tables --group " + group);
        o.expect(got == want.str(), [&] { return "tables --group " + group + " differs"; });
    }
    return report(8, "tables output matches data/tables_e6.json and data/tables_e7.json", o);
}

bool criterion9() {
    Outcome o;
    for (char t : {'A', 'B', 'C', 'D'})
        for (int n = 1; n <= 8; ++n) {
            const int size = orbit_size(t, n);
            const auto orbits = t == 'A' ? partitions_of(size) : typed_partitions(size, type_from_letter(t));
            std::vector<AcharClass> images;
            for (auto& a : orbits) {
                images.push_back(d_A_one(a, t));
                o.expect(images.back().sat == d_dual(a, t),
                         [&] { return std::string(1, t) + std::to_string(n) + " pr1 at " + a.str(); });
            }
            for (std::size_t i = 0; i < orbits.size(); ++i)
                for (std::size_t j = 0; j < orbits.size(); ++j)
                    if (dominance_leq(orbits[i], orbits[j]))
                        o.expect(leq_A(images[j], images[i]), [&] {
                            return std::string(1, t) + std::to_string(n) + " order at " + orbits[i].str() + " <= " +
                                   orbits[j].str();
                        });
        }
    return report(9, "pr1(d_A_one) = dbv and order reversal, rank <= 8, types A/B/C/D", o);
}

bool criterion10() {
    Outcome o;
    auto as_pair = [](const Bipartition& b) { return oracle::Bip{b.first.parts(), b.second.parts()}; };
    for (int n = 0; n <= 5; ++n)
        for (auto& F : bipartitions_of(n))
            for (int i = 0; i <= n; ++i)
                for (auto& F1 : bipartitions_of(i))
                    for (auto& F2 : bipartitions_of(n - i))
                        o.expect(bip_restriction_mult(F, F1, F2) ==
                                     oracle::hyperoctahedral_restriction(as_pair(F), as_pair(F1), as_pair(F2), i, n - i),
                                 [&] { return F.first.str() + "." + F.second.str(); });
    return report(10, "bip_restriction_mult = hyperoctahedral characters, n <= 5", o);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <orbitcalc> <data-dir>\n";
        return 2;
    }
    bool ok = true;
    ok &= criterion1();
    ok &= criterion2();
    ok &= criterion3();
    ok &= criterion4();
    ok &= criterion5();
    ok &= criterion6();
    ok &= criterion7();
    ok &= criterion8(argv[1], argv[2]);
    ok &= criterion9();
    ok &= criterion10();
    std::cout << (ok ? "all criteria pass" : "some criteria fail") << std::endl;
    return ok ? 0 : 1;
}
