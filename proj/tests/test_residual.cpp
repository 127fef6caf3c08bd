#include <doctest.h>
#include <residua/reference_data.hpp>
#include <residua/residual.hpp>
#include <residua/tableaux.hpp>

#include <set>

using namespace residua;

namespace {
std::set<LinForm> normalized_set(const std::vector<LinForm>& v) {
    std::set<LinForm> s;
    for (const auto& f : v) s.insert(f.normalized());
    return s;
}
}  // namespace

TEST_CASE("residual counting, numeric and generic") {
    auto b2 = make_root_system("B2");
    auto xi = xi_from_partition(Partition{2});  // (k2, k1+k2)
    CHECK(is_generic_residual(b2, xi));
    CHECK(is_linear_residual(b2, evaluate_point(xi, {rat(1), rat(1, 3)}), {rat(1), rat(1, 3)}));
    // singular slope m = -1: the evaluation stops being residual
    CHECK(!is_linear_residual(b2, evaluate_point(xi, {rat(1), rat(-1)}), {rat(1), rat(-1)}));
    // the k1 = 0 collapse stays residual
    CHECK(is_linear_residual(b2, evaluate_point(xi, {rat(0), rat(1)}), {rat(0), rat(1)}));

    // a non-residual family: everything zero except one coordinate
    std::vector<LinForm> bad{LinForm::unit(2, 1), LinForm(2)};
    CHECK(!is_generic_residual(b2, bad));

    for (long n = 1; n <= 5; ++n) {
        auto bn = make_root_system(RSType::B, static_cast<int>(n));
        for (const auto& lam : partitions_of(n)) CHECK(is_generic_residual(bn, xi_from_partition(lam)));
    }
}

TEST_CASE("solve-path enumeration matches the partition parametrization") {
    for (int n = 1; n <= 4; ++n) {
        auto bn = make_root_system(RSType::B, n);
        auto points = enumerate_generic_points(bn);
        CHECK(points.size() == static_cast<std::size_t>(partition_count(n)));

        QVec sample = default_sample(bn);
        std::set<std::vector<LinForm>> from_partitions;
        for (const auto& lam : partitions_of(n))
            from_partitions.insert(canonical_orbit_point(bn, xi_from_partition(lam), sample));
        CHECK(std::set<std::vector<LinForm>>(points.begin(), points.end()) == from_partitions);
    }
}

TEST_CASE("solve-path enumeration for the one-parameter types") {
    auto a2 = make_root_system("A2");
    auto pts = enumerate_generic_points(a2);
    REQUIRE(pts.size() == 1);
    auto fams = enumerate_families(a2);
    REQUIRE(fams.size() == 1);
    CHECK(fams[0].label == "3");
    CHECK(canonical_orbit_point(a2, fams[0].coords, default_sample(a2)) == pts[0]);
    CHECK(enumerate_generic_points(make_root_system("A3")).size() == 1);
    CHECK(enumerate_generic_points(make_root_system("A1")).size() == 1);

    // D4: slope-0-regular partitions of 4 modulo conjugation -> 2 orbits;
    // (2,2) is 0-singular and drops out
    auto d4 = make_root_system("D4");
    auto dpts = enumerate_generic_points(d4);
    CHECK(dpts.size() == 2);
    auto dfams = enumerate_families(d4);
    REQUIRE(dfams.size() == 2);
    CHECK(dfams[0].label == "4");
    CHECK(dfams[1].label == "3,1");
    QVec s = default_sample(d4);
    std::set<std::vector<LinForm>> canon_fams;
    for (const auto& f : dfams) canon_fams.insert(canonical_orbit_point(d4, f.coords, s));
    CHECK(std::set<std::vector<LinForm>>(dpts.begin(), dpts.end()) == canon_fams);

    // D3 ~ A3: a single orbit ((2,1) is 0-singular, (1^3) merges into (3))
    auto d3fams = enumerate_families(make_root_system("D3"));
    REQUIRE(d3fams.size() == 1);
    CHECK(d3fams[0].label == "3");
    CHECK(enumerate_generic_points(make_root_system("D3")).size() == 1);

    // D6 keeps three conjugation pairs of sharp partitions
    auto d6fams = enumerate_families(make_root_system("D6"));
    REQUIRE(d6fams.size() == 3);
    CHECK(d6fams[0].label == "6");
    CHECK(d6fams[1].label == "5,1");
    CHECK(d6fams[2].label == "4,1,1");
}

TEST_CASE("regularity hyperplanes") {
    auto b2 = make_root_system("B2");
    auto fams = enumerate_families(b2);
    REQUIRE(fams.size() == 2);
    // lambda = (2): singular slopes -1 and -1/2
    CHECK(fams[0].label == "2");
    CHECK(normalized_set(fams[0].singular) ==
          normalized_set({LinForm::unit(2, 0) + LinForm::unit(2, 1),
                          LinForm::unit(2, 0) + LinForm::unit(2, 1, rat(2))}));
    // lambda = (1,1): mirrored
    CHECK(fams[1].label == "1,1");
    CHECK(normalized_set(fams[1].singular) ==
          normalized_set({LinForm::unit(2, 0) - LinForm::unit(2, 1),
                          LinForm::unit(2, 0) - LinForm::unit(2, 1, rat(2))}));

    // the extremity criterion and the hyperplane scan agree for all of B4
    auto b4 = make_root_system("B4");
    for (const auto& lam : partitions_of(4)) {
        auto hyp = normalized_set(regularity_hyperplanes(b4, xi_from_partition(lam)));
        std::set<LinForm> expect;
        for (const auto& m : singular_ratios(lam)) {
            LinForm f(2);  // k2 = m k1
            f.coeff[0] = -m;
            f.coeff[1] = Rat(1);
            expect.insert(f.normalized());
        }
        CHECK(hyp == expect);
    }

    // one-parameter types: only k = 0 is singular
    for (auto label : {"A2", "D3", "D4"}) {
        auto rs = make_root_system(label);
        for (const auto& fam : enumerate_families(rs)) {
            REQUIRE(fam.singular.size() == 1);
            CHECK(fam.singular[0] == LinForm::unit(1, 0));
        }
    }
}

TEST_CASE("exceptional families match the built-in tables") {
    auto g2 = make_root_system("G2");
    auto fams = enumerate_families(g2);
    REQUIRE(fams.size() == 3);
    CHECK(fams[0].label == "g1");
    CHECK(fams[2].label == "g3");

    std::map<std::string, std::vector<LinForm>> gold;
    for (const auto& row : g2_regularity_table()) gold[row.label] = row.factors;
    for (const auto& fam : fams)
        CHECK(normalized_set(fam.singular) == normalized_set(gold.at(fam.label)));
}

TEST_CASE("confluence fibers for G2") {
    auto g2 = make_root_system("G2");
    auto fams = enumerate_families(g2);
    for (const auto& gold : g2_confluence_table()) {
        // only families regular at this parameter point take part
        std::vector<GenericFamily> regular;
        for (const auto& fam : fams) {
            bool ok = true;
            for (const auto& h : fam.singular)
                if (h.eval(gold.kval) == Rat(0)) ok = false;
            if (ok) regular.push_back(fam);
        }
        auto rows = confluence_table(g2, regular, gold.kval);
        REQUIRE(rows.size() == gold.rows.size());
        std::map<QVec, std::vector<std::string>> expect(gold.rows.begin(), gold.rows.end());
        for (const auto& row : rows) {
            auto it = expect.find(row.simple_values);
            REQUIRE(it != expect.end());
            CHECK(row.labels == it->second);
        }
    }
}

TEST_CASE("confluence at the k1 = 0 collapse") {
    auto b3 = make_root_system("B3");
    auto rows = confluence_table(b3, enumerate_families(b3), {rat(0), rat(1)});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].dominant == QVec{rat(1), rat(1), rat(1)});
    CHECK(rows[0].labels.size() == 3);
}
