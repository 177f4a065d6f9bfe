#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "orbitcalc/spin.hpp"
#include "orbitcalc/springer.hpp"

using namespace orbitcalc;

namespace {

long long partition_count(int n) { return static_cast<long long>(oracle::all_partitions(n).size()); }

long long weyl_irreps(char weyl, int k) {
    if (weyl == 'A') return partition_count(k);
    long long bip = 0;
    for (int i = 0; i <= k; ++i) bip += partition_count(i) * partition_count(k - i);
    if (weyl == 'B') return bip;
    const long long deg = k % 2 ? 0 : partition_count(k / 2);
    return (bip - deg) / 2 + 2 * deg;
}

int distinct_parts(const std::vector<int>& p, int parity) {
    std::set<int> s;
    for (int x : p)
        if (x % 2 == parity) s.insert(x);
    return static_cast<int>(s.size());
}

// Local systems per orbit: |A(O)| for the adjoint-free forms used here.
long long expected_local_systems(const ComplexGroup& g, const std::vector<int>& p) {
    if (g.kind == GroupKind::Sp) return 1LL << distinct_parts(p, 0);
    const int a = distinct_parts(p, 1);
    const bool very_even = a == 0 && !p.empty();
    bool pairs = true;
    std::map<int, int> m;
    for (int x : p) ++m[x];
    for (auto [x, k] : m) pairs = pairs && k % 2 == 0;
    if (very_even && pairs) return 2;
    return 1LL << std::max(a - 1, 0);
}

void check_group(const ComplexGroup& g) {
    std::map<Partition, long long> per_orbit;
    std::set<std::pair<int, Bipartition>> labels;
    for (auto& b : springer_blocks(g)) {
        auto members = block_members(g, b);
        CHECK(static_cast<long long>(members.size()) == weyl_irreps(b.weyl, b.weyl_rank));
        for (auto& m : members) {
            auto sl = springer_rep(g, m);
            CHECK(sl.block == b);
            CHECK(sl.label.label.size() == b.weyl_rank);
            auto back = springer_inverse(g, b, sl.label.label);
            CHECK(back.orbit == m.orbit);
            if (m.tag < 0) CHECK(back == m);
            const Partition o = p1(g, m);
            CHECK(o == m.orbit);
            CHECK(o.size() == g.N);
            if (g.kind != GroupKind::SL) CHECK(is_member(o, orbit_type(g)));
            if (g.kind == GroupKind::Spin) CHECK(is_rather_odd(o));
            ++per_orbit[o];
        }
    }
    if (g.kind == GroupKind::SO || g.kind == GroupKind::Sp) {
        for (auto& p : oracle::all_partitions(g.N)) {
            const char t = g.kind == GroupKind::Sp ? 'C' : g.N % 2 ? 'B' : 'D';
            if (!oracle::typed(p, t)) continue;
            CHECK(per_orbit[Partition(p)] == expected_local_systems(g, p));
        }
    }
    if (g.kind == GroupKind::SL)
        for (auto& [o, c] : per_orbit) {
            int gcd = 0;
            for (int x : o.parts()) gcd = std::gcd(gcd, x);
            CHECK(c == gcd);
        }
}

}  // namespace

TEST_CASE("SO(3) by hand") {
    const ComplexGroup g{GroupKind::SO, 3};
    auto blocks = springer_blocks(g);
    REQUIRE(blocks.size() == 1);
    auto m = block_members(g, blocks[0]);
    REQUIRE(m.size() == 2);
    CHECK(p1_symbol(GroupKind::SO, make_symbol(2, 0, {1}, {})) == Partition{3});
    CHECK(p1_symbol(GroupKind::SO, make_symbol(2, 0, {0, 2}, {1})) == Partition{1, 1, 1});
    auto sl = springer_rep(g, {Partition{3}, make_symbol(2, 0, {1}, {}), 1, 0, 0, -1});
    CHECK(sl.block.param == 1);
    CHECK(sl.label.label == Bipartition{Partition{1}, Partition{}});
}

TEST_CASE("Sp(2) has three pairs") {
    const ComplexGroup g{GroupKind::Sp, 2};
    long long total = 0;
    for (auto& b : springer_blocks(g)) total += static_cast<long long>(block_members(g, b).size());
    CHECK(total == 3);
    CHECK(p1_symbol(GroupKind::Sp, make_symbol(1, 1, {1}, {})) == Partition{2});
    CHECK(p1_symbol(GroupKind::Sp, make_symbol(1, 1, {0, 2}, {2})) == Partition{1, 1});
}

TEST_CASE("worked Spin example") {
    const Partition l{15, 12, 12, 12, 12, 12, 12, 7, 5, 2, 2, 2, 2};
    const ComplexGroup g{GroupKind::Spin, l.size()};
    auto sl = springer_rep(g, {l, {}, 1, 0, 0, -1});
    CHECK(sl.block.param == -1);
    CHECK(sl.label.label == rho_recursive(l));
    CHECK(sl.block.weyl_rank == sl.label.label.size());
}

TEST_CASE("SL with gcd and trivial character") {
    const ComplexGroup g{GroupKind::SL, 6};
    auto sl = springer_rep(g, {Partition{4, 2}, {}, 1, 0, 0, -1});
    CHECK(sl.block.param == 1);
    CHECK(sl.label.label.first == Partition{4, 2});
    auto s2 = springer_rep(g, {Partition{4, 2}, {}, 2, 1, 0, -1});
    CHECK(s2.label.label.first == Partition{2, 1});
    CHECK_THROWS_AS(springer_rep(g, {Partition{4, 2}, {}, 4, 1, 0, -1}), DomainError);
}

TEST_CASE("bijectivity and local system counts") {
    for (int N = 1; N <= 8; ++N) check_group({GroupKind::SL, N});
    for (int N = 1; N <= 14; ++N) check_group({GroupKind::SO, N});
    for (int N = 2; N <= 14; N += 2) check_group({GroupKind::Sp, N});
    for (int N = 1; N <= 16; ++N) check_group({GroupKind::Spin, N});
}
