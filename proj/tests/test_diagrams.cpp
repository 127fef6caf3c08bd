#include <doctest.h>
#include <residua/diagrams.hpp>
#include <residua/residual.hpp>
#include <residua/tableaux.hpp>

#include <set>

using namespace residua;

namespace {

WeightedDiagramB diag(std::initializer_list<std::pair<Rat, long>> entries) {
    WeightedDiagramB d;
    for (const auto& [p, c] : entries) d.mu[p] = c;
    return d;
}

// Every multiset of n values from the support window of slope m.
std::vector<WeightedDiagramB> candidate_diagrams(long n, const Rat& m) {
    Rat base = is_half_integer(m) ? rat(1, 2) : Rat(0);
    Rat limit = base + Rat(n) + rat_abs(m) + Rat(1);
    std::vector<WeightedDiagramB> out;
    WeightedDiagramB cur;
    auto rec = [&](auto&& self, Rat p, long remaining) -> void {
        if (p > limit) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            if (c > 0) cur.mu[p] = c;
            self(self, p + Rat(1), remaining - c);
            cur.mu.erase(p);
        }
    };
    rec(rec, base, n);
    return out;
}

std::vector<Rat> half_slopes(long bound) {
    std::vector<Rat> ms;
    for (long s = -2 * bound; s <= 2 * bound; ++s) ms.push_back(Rat(Int(s), Int(2)));
    return ms;
}

WeightedDiagramB evaluation_diagram(const Partition& lam, const Rat& m) {
    std::vector<Rat> coords;
    for (long c : contents(lam)) coords.push_back(rat_abs(Rat(c) + m));
    return diagram_from_coordinates(coords);
}

}  // namespace

TEST_CASE("multiplicity conditions: known small diagrams") {
    CHECK(is_kweighted_dynkin(diag({{rat(0), 1}, {rat(1), 1}}), rat(0)));
    CHECK(!is_kweighted_dynkin(diag({{rat(1), 2}}), rat(0)));
    CHECK(is_kweighted_dynkin(diag({{rat(1), 1}, {rat(2), 1}}), rat(2)));
    CHECK(is_kweighted_dynkin(diag({{rat(1, 2), 1}, {rat(3, 2), 1}}), rat(1, 2)));
    // a tall zero step: mu_0 = floor((mu_1+1)/2) can sit below mu_1 - 1
    CHECK(is_kweighted_dynkin(diag({{rat(0), 2}, {rat(1), 3}, {rat(2), 2}, {rat(3), 1}}), rat(0)));

    CHECK_THROWS_AS(is_kweighted_dynkin(diag({{rat(1, 2), 1}}), rat(0)), std::domain_error);
    CHECK_THROWS_AS(is_kweighted_dynkin(diag({{rat(1), 1}}), rat(1, 3)), std::domain_error);
}

TEST_CASE("multiplicity conditions match the numeric residual test") {
    for (long n = 1; n <= 5; ++n) {
        auto rs = make_root_system("B" + std::to_string(n));
        for (const Rat& m : half_slopes(n)) {
            for (const auto& d : candidate_diagrams(n, m)) {
                bool claimed = is_kweighted_dynkin(d, m);
                bool actual = is_linear_residual(rs, d.coordinates(), {Rat(1), m});
                CAPTURE(n);
                CAPTURE(to_string(m));
                CAPTURE(to_string(d));
                REQUIRE(claimed == actual);
            }
        }
    }
}

TEST_CASE("jump lists and reconstruction") {
    auto d0 = diag({{rat(0), 1}, {rat(1), 1}});
    CHECK(jumps_of(d0, rat(0)) == std::vector<Rat>{rat(0), rat(1)});
    CHECK(reconstruct_from_jumps({rat(0), rat(1)}, rat(0)) == d0);

    // the front pad carries no information: with or without, same diagram
    auto dh = diag({{rat(1, 2), 1}, {rat(3, 2), 1}});
    CHECK(reconstruct_from_jumps({rat(-1, 2), rat(3, 2)}, rat(1, 2)) == dh);
    CHECK(reconstruct_from_jumps({rat(3, 2)}, rat(1, 2)) == dh);
    CHECK(jumps_of(dh, rat(1, 2)) == std::vector<Rat>{rat(3, 2)});

    CHECK_THROWS_AS(reconstruct_from_jumps({rat(1), rat(1)}, rat(0)), std::domain_error);
    CHECK_THROWS_AS(reconstruct_from_jumps({rat(6)}, rat(3)), std::domain_error);
    CHECK_THROWS_AS(reconstruct_from_jumps({rat(1, 2)}, rat(0)), std::domain_error);
    CHECK_THROWS_AS(reconstruct_from_jumps({}, rat(0)), std::domain_error);
    CHECK_THROWS_AS(jumps_of(diag({{rat(1), 2}}), rat(0)), std::domain_error);
}

TEST_CASE("jump round trip on every valid diagram") {
    for (long n = 1; n <= 5; ++n) {
        for (const Rat& m : half_slopes(n)) {
            for (const auto& d : candidate_diagrams(n, m)) {
                if (!is_kweighted_dynkin(d, m)) continue;
                auto j = jumps_of(d, m);
                REQUIRE(reconstruct_from_jumps(j, m) == d);
            }
        }
    }
}

TEST_CASE("distinguished unipotents: small inventories") {
    using U = DistinguishedUnipotent;
    CHECK(enumerate_distinguished_unipotent(2, rat(0)) == std::vector<U>{{{1, 3}}});
    CHECK(enumerate_distinguished_unipotent(2, rat(1, 2)) == std::vector<U>{{{4}}});
    CHECK(enumerate_distinguished_unipotent(2, rat(2)) == std::vector<U>{{{1, 7}}, {{3, 5}}});
    CHECK(enumerate_distinguished_unipotent(2, rat(3)) ==
          std::vector<U>{{{1, 3, 9}}, {{1, 5, 7}}});
    CHECK(enumerate_distinguished_unipotent(3, rat(1, 2)) == std::vector<U>{{{2, 4}}, {{6}}});

    CHECK(is_distinguished_unipotent({{1, 3}}, 2, rat(0)));
    CHECK(!is_distinguished_unipotent({{1, 3}}, 3, rat(0)));
    CHECK(!is_distinguished_unipotent({{3, 1}}, 2, rat(0)));
    CHECK(!is_distinguished_unipotent({{13}}, 2, rat(3)));  // too few parts
}

TEST_CASE("unipotent-diagram correspondence is a bijection") {
    CHECK(bala_carter({{1, 3}}, rat(0)) == diag({{rat(0), 1}, {rat(1), 1}}));
    CHECK(bala_carter_inverse(diag({{rat(0), 1}, {rat(1), 1}}), rat(0)) ==
          DistinguishedUnipotent{{1, 3}});

    for (long n = 1; n <= 8; ++n) {
        for (const Rat& m : half_slopes(n)) {
            std::set<WeightedDiagramB> images;
            for (const auto& u : enumerate_distinguished_unipotent(n, m)) {
                auto d = bala_carter(u, m);
                REQUIRE(is_kweighted_dynkin(d, m));
                REQUIRE(d.size() == n);
                REQUIRE(bala_carter_inverse(d, m) == u);
                REQUIRE(reconstruct_from_jumps(jumps_of(d, m), m) == d);
                REQUIRE(images.insert(d).second);
            }
            // surjectivity: every diagram the scan validates is an image
            if (n <= 5) {
                long valid = 0;
                for (const auto& d : candidate_diagrams(n, m))
                    if (is_kweighted_dynkin(d, m)) {
                        ++valid;
                        REQUIRE(images.count(d) == 1);
                    }
                REQUIRE(valid == static_cast<long>(images.size()));
            }
        }
    }
}

TEST_CASE("diagrams are exactly the evaluations of the regular families") {
    for (long n = 1; n <= 6; ++n) {
        for (const Rat& m : half_slopes(n)) {
            std::set<WeightedDiagramB> from_unipotents;
            for (const auto& u : enumerate_distinguished_unipotent(n, m))
                from_unipotents.insert(bala_carter(u, m));
            std::set<WeightedDiagramB> from_families;
            for (const Partition& lam : partitions_of(n))
                if (!is_m_singular(lam, m)) from_families.insert(evaluation_diagram(lam, m));
            REQUIRE(from_unipotents == from_families);
        }
    }
}

TEST_CASE("bipartition splitting") {
    CHECK(phi_bipartition({{1, 3}}, rat(0)) == Bipartition{{}, {2}});
    CHECK(phi_bipartition({{4}}, rat(1, 2)) == Bipartition{{2}, {}});
    CHECK(phi_bipartition({{2, 4}}, rat(1, 2)) == Bipartition{{2}, {1}});

    for (long n = 1; n <= 8; ++n) {
        for (const Rat& m : half_slopes(n)) {
            if (m < Rat(0)) continue;
            for (const auto& u : enumerate_distinguished_unipotent(n, m)) {
                auto [xi, eta] = phi_bipartition(u, m);
                CHECK(weight(xi) + weight(eta) == n);  // also validated inside
                auto negated = phi_bipartition(u, -m);
                if (m > Rat(0)) {
                    CHECK(negated.first == eta);  // negative slope swaps the pair
                    CHECK(negated.second == xi);
                } else {
                    CHECK(negated == Bipartition{xi, eta});
                }
            }
        }
    }
}

TEST_CASE("evaluation fibers match the counting formula") {
    auto d0 = diag({{rat(0), 1}, {rat(1), 1}});
    CHECK(fiber_partitions(d0, rat(0), 2) == std::vector<Partition>{{2}, {1, 1}});
    CHECK(fiber_size({{1, 3}}, rat(0)) == Int(2));
    CHECK(fiber_size({{4}}, rat(1, 2)) == Int(1));
    CHECK(fiber_size({{2, 4}}, rat(1, 2)) == Int(2));

    for (long n = 1; n <= 6; ++n) {
        for (const Rat& m : half_slopes(n)) {
            long regular = 0;
            for (const Partition& lam : partitions_of(n))
                if (!is_m_singular(lam, m)) ++regular;

            long covered = 0;
            for (const auto& u : enumerate_distinguished_unipotent(n, m)) {
                auto fiber = fiber_partitions(bala_carter(u, m), m, n);
                CAPTURE(n);
                CAPTURE(to_string(m));
                CAPTURE(to_string(u));
                REQUIRE(Int(fiber.size()) == fiber_size(u, m));
                covered += static_cast<long>(fiber.size());
            }
            REQUIRE(covered == regular);  // fibers partition the regular families
        }
    }
}

TEST_CASE("single-parameter orbits pair conjugates without fixed points") {
    auto orbits4 = dn_sharp_orbits(4);
    REQUIRE(orbits4.size() == 2);
    CHECK(orbits4[0] == std::pair<Partition, Partition>{{3, 1}, {2, 1, 1}});
    CHECK(orbits4[1] == std::pair<Partition, Partition>{{4}, {1, 1, 1, 1}});

    CHECK(dn_sharp_orbits(5).size() == 2);
    CHECK(dn_sharp_orbits(6).size() == 3);
    for (long n = 4; n <= 8; ++n) {
        for (const auto& [a, b] : dn_sharp_orbits(n)) {
            CHECK(conjugate(a) == b);
            CHECK(a != b);
        }
    }
}

TEST_CASE("long-root normalization doubles the singular slopes") {
    CHECK(cn_singular_ratios(Partition{2}) == std::set<Rat>{rat(-2), rat(-1)});
    CHECK(cn_singular_ratios(Partition{2, 1}) == std::set<Rat>{rat(-2), rat(0), rat(2)});
}
