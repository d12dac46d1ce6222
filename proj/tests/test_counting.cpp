#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "podpart/counting.hpp"

#include <set>

using namespace podpart;
using namespace podpart::counting;

namespace {

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

std::vector<Partition> parts_list(std::initializer_list<std::initializer_list<int>> lists)
{
    std::vector<Partition> out;
    for (auto l : lists)
        out.emplace_back(std::vector<int>(l));
    return out;
}

}  // namespace

TEST_CASE("Partition invariants")
{
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    Partition p{6, 5, 2, 1};
    CHECK(p.size() == 14);
    CHECK(p.length() == 4);
    CHECK(p.part(5) == 0);
    CHECK(p.even_parts() == Partition{6, 2});
    CHECK(p.odd_parts() == Partition{5, 1});
    CHECK(Partition{4, 2, 1}.conjugate() == Partition{3, 2, 1, 1});
    CHECK(Partition{5, 3}.united(Partition{4, 3}) == Partition{5, 4, 3, 3});
    CHECK(Partition{5, 4, 3, 3}.without(Partition{4, 3}) == Partition{5, 3});
    CHECK_THROWS(Partition{5, 3}.without(Partition{4}));
    CHECK(parse_partition("14, 14,12") == Partition{14, 14, 12});
    CHECK(parse_partition("[1,3,2]") == Partition{3, 2, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS(parse_partition("3,x"));
    CHECK_THROWS(parse_partition("3,-1"));
}

TEST_CASE("Overpartition canonical form")
{
    Overpartition o(Partition{3, 3, 1}, {3});
    auto l = o.listing();
    REQUIRE(l.size() == 3);
    CHECK(l[0] == OverpartitionPart{3, true});
    CHECK(l[1] == OverpartitionPart{3, false});
    CHECK(o.to_string() == "(3',3,1)");
    CHECK_THROWS(Overpartition(Partition{3, 1}, {2}));
    CHECK_THROWS(Overpartition(Partition{3, 1}, {3, 3}));
    CHECK(overpartition_from_json(to_json(o)) == o);
}

TEST_CASE("enumeration order, filters and the ceiling")
{
    // the ten partitions of 8 with no part = 2 (mod 4), in the listed order
    auto pods = enumerate_partitions(8, no_part_2_mod_4);
    CHECK(pods == parts_list({{8}, {7, 1}, {5, 3}, {5, 1, 1, 1}, {4, 4}, {4, 3, 1},
                              {4, 1, 1, 1, 1}, {3, 3, 1, 1}, {3, 1, 1, 1, 1, 1},
                              {1, 1, 1, 1, 1, 1, 1, 1}}));
    auto b4s = enumerate_partitions(7, is_4_regular);
    CHECK(b4s == parts_list({{7}, {6, 1}, {5, 2}, {5, 1, 1}, {3, 3, 1}, {3, 2, 2}, {3, 2, 1, 1},
                             {3, 1, 1, 1, 1}, {2, 2, 2, 1}, {2, 2, 1, 1, 1}, {2, 1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1, 1, 1}}));
    auto zero = enumerate_partitions(0, [](const Partition&) { return false; });
    CHECK(zero.empty());
    auto zero_all = enumerate_partitions(0);
    REQUIRE(zero_all.size() == 1);
    CHECK(zero_all[0].empty());
}

TEST_CASE("enumeration ceiling")
{
    CHECK_THROWS_AS(for_each_partition(61, [](const Partition&) {}), EnumerationCeilingExceeded);
    CHECK_NOTHROW(for_each_partition(12, [](const Partition&) {}, 12));
    CHECK_THROWS_AS(for_each_partition(13, [](const Partition&) {}, 12),
                    EnumerationCeilingExceeded);
}

TEST_CASE("the distinct-part sets of 14")
{
    CHECK(as_set(enumerate_partitions(14, in_q0)) ==
          as_set(parts_list({{14}, {13, 1}, {11, 3}, {11, 2, 1}, {10, 3, 1}, {9, 5}, {9, 3, 2},
                             {7, 6, 1}, {7, 5, 2}, {6, 5, 3}, {6, 5, 2, 1}})));
    CHECK(as_set(enumerate_partitions(14, in_q2)) ==
          as_set(parts_list({{13, 1}, {11, 3}, {9, 5}, {9, 4, 1}, {8, 5, 1}, {7, 4, 3}})));
}

TEST_CASE("MP_2(19) is exactly the listed ten partitions")
{
    auto got = enumerate_partitions(19, [](const Partition& p) { return in_mp_k(2, p); });
    CHECK(as_set(got) ==
          as_set(parts_list({{9, 9, 1}, {9, 5, 5}, {8, 5, 5, 1}, {7, 7, 3, 2}, {7, 7, 2, 2, 1},
                             {7, 5, 5, 2}, {6, 5, 5, 3}, {6, 5, 5, 2, 1}, {5, 5, 3, 2, 2, 2},
                             {5, 5, 2, 2, 2, 2, 1}})));
}

TEST_CASE("Mbar_2(12) is exactly the listed sixteen overpartitions")
{
    std::set<std::string> got;
    for_each_overpartition(12, [&](const Overpartition& o) {
        if (in_mbar_k(2, o))
            got.insert(o.to_string());
    });
    const std::set<std::string> expected = {
        "(4,4,4)",         "(4',4,4)",         "(3,3,3,3)",        "(3',3,3,3)",
        "(3,3,3,2,1)",     "(3,3,3,2',1)",     "(3,3,3,2,1')",     "(3,3,3,2',1')",
        "(3',3,3,2,1)",    "(3',3,3,2',1)",    "(3',3,3,2,1')",    "(3',3,3,2',1')",
        "(3,3,3,1,1,1)",   "(3,3,3,1',1,1)",   "(3',3,3,1,1,1)",   "(3',3,3,1',1,1)"};
    CHECK(got == expected);
}

TEST_CASE("overpartitions of 3 and 4")
{
    std::set<std::string> got;
    for_each_overpartition(3, [&](const Overpartition& o) { got.insert(o.to_string()); });
    CHECK(got == std::set<std::string>{"(3)", "(3')", "(2,1)", "(2,1')", "(2',1)", "(2',1')",
                                       "(1,1,1)", "(1',1,1)"});
    CHECK(table({Sequence::overline_p}, 4, Route::enumeration).at(4) == 14);
    CHECK(overline_p(4) == 14);
}

TEST_CASE("single values")
{
    CHECK(pod_split(8) == std::pair<BigInt, BigInt>{7, 3});
    CHECK(pod(8) == 10);
    CHECK(pod(0) == 1);
    CHECK(pod(-3) == 0);
    CHECK(pod(7, 2) == 0);
    CHECK(pod(16, 2) == 10);
    CHECK(b4_split(7) == std::pair<BigInt, BigInt>{5, 7});
    CHECK(b4(7) == 12);
    CHECK(b4(8) == 16);
    CHECK(b4(18) == 208);
    CHECK(b4(23) == 592);
    CHECK(b4(38) == 8528);
    CHECK(b4(0) == 1);
    CHECK(q0(14) == 11);
    CHECK(q2(14) == 6);
    CHECK(q0(8) == 4);
    CHECK(q0_alt(14) == 11);
    CHECK(q0_alt(0) == 1);
    CHECK(overline_p(3) == 8);
    CHECK(overline_p(0) == 1);
    CHECK(overline_p(-1, 2) == 0);
    CHECK(mp_k(2, 19) == 10);
    CHECK(mp_k(1, 0) == 0);
    CHECK(mp_k(2, -4) == 0);
    CHECK(mbar_k(2, 12) == 16);
    CHECK(mbar_k(3, 3) == 0);
    CHECK_THROWS_AS(mp_k(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(mbar_k(0, 5), std::invalid_argument);
}

TEST_CASE("xi and chi")
{
    CHECK(xi(0) == 1);
    CHECK(xi(4) == -2);
    CHECK(xi(16) == 2);
    CHECK(xi(36) == -2);
    CHECK(xi(5) == 0);
    CHECK(xi(8) == 0);
    CHECK(chi(0) == 1);
    CHECK(chi(2) == -1);
    CHECK(chi(6) == -1);
    CHECK(chi(12) == 1);
    CHECK(chi(7) == 0);
    CHECK(chi(-2) == 0);
}

TEST_CASE("both routes agree on small n")
{
    std::vector<SequenceId> ids = {
        {Sequence::p},        {Sequence::pod},    {Sequence::pod_e},      {Sequence::pod_o},
        {Sequence::b4},       {Sequence::b4_e},   {Sequence::b4_o},       {Sequence::q0},
        {Sequence::q2},       {Sequence::q0_alt}, {Sequence::overline_p}, {Sequence::q_odd},
        {Sequence::q_distinct}, {Sequence::xi},   {Sequence::chi}};
    for (int k = 1; k <= 3; ++k) {
        ids.push_back({Sequence::mp, k});
        ids.push_back({Sequence::mbar, k});
    }
    const long n_max = 30;
    for (const auto& id : ids) {
        CAPTURE(id.name());
        auto e = table(id, n_max, Route::enumeration);
        auto g = table(id, n_max, Route::generating_function);
        for (long n = 0; n <= n_max; ++n) {
            CAPTURE(n);
            CHECK(e.at(n) == g.at(n));
        }
    }
}

TEST_CASE("parity splits sum to the totals")
{
    auto pod_t = table({Sequence::pod}, 300);
    auto pe = table({Sequence::pod_e}, 300);
    auto po = table({Sequence::pod_o}, 300);
    auto b = table({Sequence::b4}, 300);
    auto be = table({Sequence::b4_e}, 300);
    auto bo = table({Sequence::b4_o}, 300);
    for (long n = 0; n <= 300; ++n) {
        CHECK(pe.at(n) + po.at(n) == pod_t.at(n));
        CHECK(be.at(n) + bo.at(n) == b.at(n));
    }
}

TEST_CASE("same parity: Q0 with pod, Q2 with b4, n <= 500")
{
    auto q0t = table({Sequence::q0}, 500);
    auto q2t = table({Sequence::q2}, 500);
    auto podt = table({Sequence::pod}, 500);
    auto b4t = table({Sequence::b4}, 500);
    for (long n = 0; n <= 500; ++n) {
        CHECK(divisible_by(q0t.at(n) - podt.at(n), 2));
        CHECK(divisible_by(q2t.at(n) - b4t.at(n), 2));
    }
}

TEST_CASE("odd-part image set has length parity of n")
{
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](const Partition& p) {
            if (in_q0_alt(p))
                CHECK(p.length() % 2 == n % 2);
        });
}

TEST_CASE("SequenceTable access and export")
{
    auto t = table({Sequence::pod}, 8);
    CHECK(t.n_max() == 8);
    CHECK(t.at(-1) == 0);
    CHECK_THROWS_AS(t.at(9), std::out_of_range);
    CHECK(t.at_ratio(16, 2) == 10);
    CHECK(t.at_ratio(15, 2) == 0);
    CHECK(t.at_ratio(-4, 2) == 0);
    auto csv = t.to_csv();
    CHECK(csv.starts_with("n,value\n0,1\n"));
    CHECK(csv.ends_with("8,10\n"));
    auto j = t.to_json();
    CHECK(j["values"][8] == "10");
    CHECK(j["route"] == "generating-function");

    CHECK(SequenceId::parse("mp_2") == SequenceId{Sequence::mp, 2});
    CHECK(SequenceId::parse("mbar", 3) == SequenceId{Sequence::mbar, 3});
    CHECK_FALSE(SequenceId::parse("mbar").has_value());
    CHECK_FALSE(SequenceId::parse("bogus").has_value());
    CHECK(SequenceId::parse("b4_e")->name() == "b4_e");
}
