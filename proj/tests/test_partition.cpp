#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "corelab/enumeration.hpp"
#include "corelab/partition.hpp"
#include "oracles.hpp"

using namespace corelab;

namespace {

Partition P(std::vector<int> parts)
{
    return Partition(std::move(parts));
}

std::multiset<int> lengths_of(const std::vector<Hook>& hs)
{
    std::multiset<int> out;
    for (const auto& h : hs)
        out.insert(h.length);
    return out;
}

}  // namespace

TEST_CASE("make_partition validates and strips zeros")
{
    const Partition a = make_partition({4, 2, 1});
    CHECK(a.size() == 7);
    CHECK(a.length() == 3);

    const Partition b = make_partition({3, 1, 0, 0});
    CHECK(b == P({3, 1}));
    CHECK(b.size() == 4);

    CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({0, 1}), std::invalid_argument);
    CHECK(make_partition({}).empty());
    CHECK(make_partition({0}).size() == 0);
}

TEST_CASE("hooks: examples against node counting")
{
    CHECK(lengths_of(hooks(P({3, 1}))) == std::multiset<int>{4, 2, 1, 1});
    CHECK(lengths_of(hooks(P({1}))) == std::multiset<int>{1});
    CHECK(lengths_of(hooks(P({4, 2, 1}))) == std::multiset<int>{6, 4, 2, 1, 3, 1, 1});
    CHECK(hooks(Partition()).empty());

    // row-major order, arm + leg + 1
    const auto hs = hooks(P({4, 2, 1}));
    REQUIRE(hs.size() == 7);
    CHECK(hs[0] == Hook{1, 1, 3, 2, 6});
    CHECK(hs[4] == Hook{2, 1, 1, 1, 3});
}

TEST_CASE("hooks agree with node counting for every partition up to 12")
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto hs = hooks(lambda);
            REQUIRE(static_cast<int>(hs.size()) == n);
            for (const auto& h : hs) {
                CHECK(h.length == h.arm + h.leg + 1);
                CHECK(h.col <= lambda.part(h.row - 1));
                CHECK(h.length == oracle::hook_length_by_counting(lambda.vec(), h.row, h.col));
                CHECK(hook_at(lambda, h.row, h.col) == h);
            }
        }
    }
}

TEST_CASE("remove_hook examples")
{
    CHECK(remove_hook(P({3, 1}), hook_at(P({3, 1}), 1, 2)) == P({1, 1}));
    CHECK(remove_hook(P({4, 2, 1}), hook_at(P({4, 2, 1}), 2, 1)) == P({4}));
    CHECK(remove_hook(P({1}), hook_at(P({1}), 1, 1)) == Partition());

    // hooks that are not hooks of lambda
    CHECK_THROWS_AS(remove_hook(P({3, 1}), Hook{1, 2, 1, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(remove_hook(P({3, 1}), Hook{2, 2, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(hook_at(P({3, 1}), 3, 1), std::invalid_argument);
}

TEST_CASE("remove_hook matches rim peeling for every hook, n <= 11")
{
    for (int n = 1; n <= 11; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& h : hooks(lambda)) {
                const Partition mu = remove_hook(lambda, h);
                CHECK(mu.size() == n - h.length);
                CHECK(mu.vec() == oracle::remove_rim_hook(lambda.vec(), h.row, h.col));
            }
        }
    }
}

TEST_CASE("beta_set examples and errors")
{
    CHECK(beta_set(P({3, 1}), 2) == BetaSet({4, 1}));
    CHECK(beta_set(Partition(), 3) == BetaSet({2, 1, 0}));
    CHECK(beta_set(P({4, 2, 1}), 3) == BetaSet({6, 3, 1}));
    CHECK_THROWS_AS(beta_set(P({4, 2, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({3, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({-1}), std::invalid_argument);
}

TEST_CASE("beta_set round trip and shift invariance, n <= 18")
{
    for (int n = 0; n <= 18; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int m = lambda.length(); m <= lambda.length() + 6; ++m) {
                const BetaSet beta = beta_set(lambda, m);
                CHECK(beta.bead_count() == m);
                CHECK(partition_of_beta(beta) == lambda);
                CHECK(partition_of_beta(beta.shifted()) == lambda);
                CHECK(beta.shifted() == beta_set(lambda, m + 1));
            }
        }
    }
}

TEST_CASE("ell_core examples")
{
    CHECK(ell_core(P({3, 1}), 2) == Partition());
    CHECK(ell_core(P({4, 2, 1}), 3) == P({1}));
    CHECK(ell_core(P({3, 1}), 6) == P({3, 1}));
    CHECK(ell_core(P({5, 3}), 1) == Partition());
    CHECK(ell_core(Partition(), 4) == Partition());
    CHECK_THROWS_AS(ell_core(P({1}), 0), std::invalid_argument);
}

TEST_CASE("ell_weight and is_ell_core examples")
{
    CHECK(ell_weight(P({3, 1}), 2) == 2);
    CHECK(ell_weight(P({4, 2, 1}), 3) == 2);
    CHECK(ell_weight(P({4, 2, 1}), 1) == 7);
    CHECK(is_ell_core(P({3, 1}), 6));
    CHECK_FALSE(is_ell_core(P({3, 1}), 2));
    for (int ell = 1; ell <= 9; ++ell)
        CHECK(is_ell_core(Partition(), ell));
}

TEST_CASE("ell_quotient examples under the runner convention")
{
    const auto q2 = ell_quotient(P({3, 1}), 2);
    REQUIRE(q2.size() == 2);
    CHECK(q2[0] == P({2}));
    CHECK(q2[1] == Partition());

    const auto q3 = ell_quotient(P({4, 2, 1}), 3);
    REQUIRE(q3.size() == 3);
    int total = 0;
    for (const auto& c : q3)
        total += c.size();
    CHECK(total == 2);
    CHECK(q3[0] == P({1, 1}));

    for (const auto& c : ell_quotient(ell_core(P({6, 4, 4, 1}), 3), 3))
        CHECK(c.empty());

    // ell = 1: the quotient is the partition itself
    CHECK(ell_quotient(P({4, 2, 1}), 1) == std::vector<Partition>{P({4, 2, 1})});
}

TEST_CASE("from_core_and_quotient examples and errors")
{
    const std::vector<Partition> q{P({2}), Partition()};
    CHECK(from_core_and_quotient(Partition(), q, 2) == P({3, 1}));
    CHECK(from_core_and_quotient(P({1}), ell_quotient(P({4, 2, 1}), 3), 3) == P({4, 2, 1}));
    const std::vector<Partition> empty3(3);
    CHECK(from_core_and_quotient(P({2}), empty3, 3) == P({2}));

    CHECK_THROWS_AS(from_core_and_quotient(P({2}), std::vector<Partition>(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(from_core_and_quotient(Partition(), std::vector<Partition>(1), 2), std::invalid_argument);
}

TEST_CASE("divisible_hooks examples")
{
    const auto d2 = divisible_hooks(P({3, 1}), 2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].hook.length == 4);
    CHECK(d2[1].hook.length == 2);
    CHECK(d2[0].result == Partition());
    CHECK(d2[1].result == P({1, 1}));

    const auto d3 = divisible_hooks(P({4, 2, 1}), 3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].hook.length == 6);
    CHECK(d3[1].hook.length == 3);
    CHECK(d3[1].result == P({4}));

    CHECK(divisible_hooks(P({3, 1}), 5).empty());
}

TEST_CASE("weight identity and idempotence, n <= 18, ell in 2..8")
{
    for (int n = 0; n <= 18; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int ell = 2; ell <= 8; ++ell) {
                const Partition core = ell_core(lambda, ell);
                const int w = ell_weight(lambda, ell);
                CHECK(n == core.size() + ell * w);
                CHECK(ell_core(core, ell) == core);
                CHECK(is_ell_core(core, ell));
            }
        }
    }
}

TEST_CASE("is_ell_core and weight agree with hook counting, n <= 14")
{
    for (int n = 0; n <= 14; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const auto lengths = oracle::hook_lengths(lambda.vec());
            for (int ell = 1; ell <= 8; ++ell) {
                const auto divisible = std::count_if(lengths.begin(), lengths.end(),
                                                     [ell](int len) { return len % ell == 0; });
                CHECK(ell_weight(lambda, ell) == divisible);
                CHECK(is_ell_core(lambda, ell) == (divisible == 0));
                CHECK(static_cast<long>(divisible_hooks(lambda, ell).size()) == divisible);
            }
        }
    }
}

TEST_CASE("ell_core agrees with every maximal removal sequence, n <= 10")
{
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int ell = 1; ell <= 5; ++ell) {
                const auto ends = oracle::terminal_cores(lambda.vec(), ell);
                REQUIRE(ends.size() == 1);
                CHECK(*ends.begin() == ell_core(lambda, ell).vec());
            }
        }
    }
}

TEST_CASE("hook multiset scales onto the quotient, n <= 16, ell <= 6")
{
    for (int n = 0; n <= 16; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int ell = 1; ell <= 6; ++ell) {
                std::multiset<int> scaled;
                for (int len : oracle::hook_lengths(lambda.vec()))
                    if (len % ell == 0)
                        scaled.insert(len / ell);
                std::multiset<int> from_quotient;
                for (const auto& c : ell_quotient(lambda, ell))
                    for (int len : oracle::hook_lengths(c.vec()))
                        from_quotient.insert(len);
                CHECK(scaled == from_quotient);
            }
        }
    }
}

TEST_CASE("removing an (ell)-hook removes one hook from one quotient component, n <= 14")
{
    for (int n = 0; n <= 14; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int ell = 1; ell <= 6; ++ell) {
                const auto q = ell_quotient(lambda, ell);
                for (const auto& r : divisible_hooks(lambda, ell)) {
                    const auto after = ell_quotient(r.result, ell);
                    int changed = 0;
                    for (int i = 0; i < ell; ++i) {
                        if (q[i] == after[i])
                            continue;
                        ++changed;
                        bool reached = false;
                        for (const auto& h : hooks(q[i]))
                            if (h.length * ell == r.hook.length && remove_hook(q[i], h) == after[i])
                                reached = true;
                        CHECK(reached);
                    }
                    CHECK(changed == 1);
                }
            }
        }
    }
}

TEST_CASE("core and quotient determine lambda, n <= 15")
{
    for (int n = 0; n <= 15; ++n) {
        for (int ell = 1; ell <= 6; ++ell) {
            std::set<std::pair<Partition, std::vector<Partition>>> seen;
            for (const auto& lambda : partitions_of(n)) {
                const auto d = quotient_decomposition(lambda, ell);
                CHECK(d.ell == ell);
                CHECK(static_cast<int>(d.components.size()) == ell);
                CHECK(n == d.core.size() + ell * d.weight);
                CHECK(seen.emplace(d.core, d.components).second);
                CHECK(from_core_and_quotient(d.core, d.components, ell) == lambda);
            }
        }
    }
}

TEST_CASE("divisor-core coherence: g | s implies gamma_g(gamma_s) = gamma_g, n <= 16")
{
    for (int n = 0; n <= 16; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int s = 1; s <= 12; ++s) {
                const Partition gs = ell_core(lambda, s);
                for (int g = 1; g <= s; ++g)
                    if (s % g == 0)
                        CHECK(ell_core(gs, g) == ell_core(lambda, g));
            }
        }
    }
}

TEST_CASE("quotient of an s-core is the componentwise s/g-core, n <= 14")
{
    for (int n = 0; n <= 14; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int s = 1; s <= 12; ++s) {
                for (int g = 1; g <= s; ++g) {
                    if (s % g != 0)
                        continue;
                    const auto lhs = ell_quotient(ell_core(lambda, s), g);
                    const auto q = ell_quotient(lambda, g);
                    for (int i = 0; i < g; ++i)
                        CHECK(lhs[i] == ell_core(q[i], s / g));
                }
            }
        }
    }
}

TEST_CASE("random large partitions round trip through core and quotient")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> len_dist(0, 25);
        std::uniform_int_distribution<int> part_dist(1, 40);
        std::vector<int> parts(len_dist(rng));
        for (int& p : parts)
            p = part_dist(rng);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        const Partition lambda(parts);
        for (int ell = 1; ell <= 11; ++ell) {
            const auto d = quotient_decomposition(lambda, ell);
            CHECK(from_core_and_quotient(d.core, d.components, ell) == lambda);
            CHECK(is_ell_core(d.core, ell));
            CHECK(static_cast<int>(divisible_hooks(lambda, ell).size()) == d.weight);
        }
    }
}

TEST_CASE("literals")
{
    CHECK(parse_partition("4,2,1") == P({4, 2, 1}));
    CHECK(parse_partition("-") == Partition());
    CHECK(to_literal(P({4, 2, 1})) == "4,2,1");
    CHECK(to_literal(Partition()) == "-");
    CHECK(parse_partition("2,2") == P({2, 2}));
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,1,"), std::invalid_argument);
    for (int n = 0; n <= 10; ++n)
        for (const auto& lambda : partitions_of(n))
            CHECK(parse_partition(to_literal(lambda)) == lambda);
}
