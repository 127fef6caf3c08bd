#include <doctest.h>
#include <residua/partitions.hpp>

#include <set>

using namespace residua;

TEST_CASE("enumeration counts match the partition function") {
    CHECK(partitions_of(0).size() == 1);  // the empty partition
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    for (long n = 0; n <= 12; ++n)
        CHECK(static_cast<long>(partitions_of(n).size()) == partition_count(n));
    CHECK(partition_count(30) == 5604);

    auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition{4});
    CHECK(p4.back() == Partition{1, 1, 1, 1});
    std::set<Partition> uniq(p4.begin(), p4.end());
    CHECK(uniq.size() == p4.size());
    for (const auto& p : partitions_of(9)) {
        CHECK(is_partition(p));
        CHECK(weight(p) == 9);
    }
}

TEST_CASE("conjugation is an involution") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (const auto& p : partitions_of(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("multiplicity") {
    Partition p{4, 2, 2, 1};
    CHECK(multiplicity(p, 2) == 2);
    CHECK(multiplicity(p, 3) == 0);
}

TEST_CASE("text round-trip") {
    CHECK(to_string(Partition{3, 1}) == "3,1");
    CHECK(to_string(Partition{}) == "");
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("10") == Partition{10});
    CHECK_THROWS_AS(parse_partition("1,3"), std::domain_error);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::domain_error);
    CHECK_THROWS_AS(parse_partition("3,0"), std::domain_error);
    CHECK_THROWS_AS(parse_partition("a"), std::domain_error);

    CHECK(to_string(Bipartition{{3, 1}, {2}}) == "3,1|2");
    CHECK(parse_bipartition("3,1|2") == Bipartition{{3, 1}, {2}});
    CHECK(parse_bipartition("|2") == Bipartition{{}, {2}});
    CHECK(parse_bipartition("2|") == Bipartition{{2}, {}});
    CHECK_THROWS_AS(parse_bipartition("3,1"), std::domain_error);
}

TEST_CASE("bipartition enumeration") {
    // sum over a+b=n of p(a)*p(b)
    CHECK(bipartitions_of(0).size() == 1);
    CHECK(bipartitions_of(2).size() == 5);   // 2|, 1,1|, 1|1, |2, |1,1
    CHECK(bipartitions_of(4).size() == 20);
    std::set<Bipartition> uniq;
    for (const auto& b : bipartitions_of(5)) {
        CHECK(weight(b.first) + weight(b.second) == 5);
        uniq.insert(b);
    }
    CHECK(uniq.size() == bipartitions_of(5).size());
}
