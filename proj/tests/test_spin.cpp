#include "doctest.h"
#include "orbitcalc/spin.hpp"

using namespace orbitcalc;

namespace {

const Partition kExample{15, 12, 12, 12, 12, 12, 12, 7, 5, 2, 2, 2, 2};

}  // namespace

TEST_CASE("d of integers and partitions") {
    CHECK(d_int(5) == 1);
    CHECK(d_int(7) == -1);
    CHECK(d_int(12) == 0);
    CHECK(d_partition(Partition{}) == 0);
    CHECK(d_partition(kExample) == -1);
}

TEST_CASE("rho on small inputs") {
    CHECK(rho_recursive(Partition{}) == Bipartition{});
    CHECK(rho_tilde(Partition{}) == Bipartition{});
    CHECK(rho_recursive(Partition{1}) == Bipartition{});
    CHECK_THROWS_AS(rho_recursive(Partition{1, 1}), DomainError);
    CHECK_THROWS_AS(rho_closed(Partition{2}), DomainError);
}

TEST_CASE("worked example") {
    CHECK(rho_tilde(kExample) == Bipartition{Partition{1, 1, 1, 3, 3, 3}, Partition{0, 0, 2, 3, 3, 3, 3}});
    CHECK(rho_recursive(kExample) == Bipartition{Partition{0, 0, 2, 3, 3, 3, 3}, Partition{1, 1, 1, 3, 3, 3}});
    auto s = spin_sequences(kExample);
    CHECK(s.q == std::vector<int>{0, 0, 0, 0, 1, 1, 3, 3, 3, 3, 3, 3, 3});
    CHECK(s.r == std::vector<int>{2, 2, 2, 2, 1, 3, 0, 0, 0, 0, 0, 0, 3});
    CHECK(s.eps == std::vector<int>{1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 1});
    CHECK(s.delta == std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0});
    auto lp = spin_presentation(kExample);
    CHECK(lp.Z == std::vector<int>{0, 1, 2, 3, 5, 6, 9, 9, 11, 11, 13, 13, 15});
    CHECK(spin_symbol(kExample) == Symbol{2, 0, {1, 3, 5, 9, 11, 13}, {0, 2, 6, 9, 11, 13, 15}});
    auto [x, y] = bij_B_rows(spin_symbol(kExample));
    CHECK(x == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK(y == std::vector<int>{0, 0, 2, 3, 3, 3, 3});
}

TEST_CASE("single part") {
    auto lp = spin_presentation(Partition{1});
    CHECK(lp.Z == std::vector<int>{0});
    CHECK(lp.eps == std::vector<int>{0});
    CHECK(spin_symbol(Partition{1}) == Symbol{2, 0, {0}, {}});
}

TEST_CASE("recursive, closed and tilde forms agree, N <= 30") {
    int count = 0;
    for (int N = 0; N <= 30; ++N)
        for (auto& l : rather_odd_partitions(N)) {
            const int d = d_partition(l);
            auto rho = rho_recursive(l);
            CHECK(rho == rho_closed(l));
            CHECK(rho == rho_from_tilde(l));
            CHECK(4 * rho.size() == N - d * (2 * d - 1));
            auto lp = spin_presentation(l);
            CHECK(is_canonical(lp));
            Symbol lam = spin_symbol(l);
            CHECK(lam.defect() == d);
            CHECK(canonical_linear_presentation(with_content(lam, static_cast<int>(lp.Z.size()))) == lp);
            CHECK(bij_B(lam) == rho_tilde(l));
            ++count;
        }
    CHECK(count == 877);
}

TEST_CASE("trivial s-symbol sequence") {
    for (int N = 0; N <= 24; ++N)
        for (auto& l : rather_odd_partitions(N)) {
            auto s = spin_sequences(l);
            auto asc = l.ascending();
            std::vector<int> direct(asc.size());
            for (std::size_t i = 0; i < asc.size(); ++i) direct[i] = asc[i] / 2 + static_cast<int>(i) - s.gamma[i];
            CHECK(trivial_ssymbol_sequence(l) == direct);
        }
}

TEST_CASE("rather odd duality agrees with the general duality, N <= 30") {
    for (int N = 1; N <= 30; ++N)
        for (auto& l : rather_odd_partitions(N)) {
            auto T = N % 2 ? ClassicalType::B : ClassicalType::D;
            Partition d = dbv_rather_odd(l);
            CHECK(d == dbv(l, T));
            Partition h = half_dbv(l);
            CHECK(union_of(h, h) == d);
        }
    CHECK(dbv_rather_odd(Partition{3, 1}) == dbv(Partition{3, 1}, ClassicalType::D));
}
