#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "semdef/constructions.hpp"
#include "semdef/labeling.hpp"

using namespace semdef;

namespace {

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> iota_from(int first, int count)
{
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), first);
    return v;
}

} // namespace

TEST(EdgeSums, Examples)
{
    EXPECT_EQ(edge_sums(path_graph(2), Labeling::exact({1, 2})), (std::vector<int>{3}));
    EXPECT_EQ(sorted(edge_sums(wheel_minus_spoke(3), Labeling::exact({1, 4, 3, 2}))), iota_from(3, 5));
    EXPECT_EQ(edge_sums(path_graph(3), Labeling::exact({1, 2, 3})), (std::vector<int>{3, 5}));
}

TEST(EdgeSums, LengthMismatch)
{
    EXPECT_THROW(edge_sums(path_graph(3), Labeling::exact({1, 2})), ParameterError);
    EXPECT_THROW(verify_sem(path_graph(3), Labeling::exact({1, 2})), ParameterError);
}

TEST(VerifySem, WheelMinusSpokeFour)
{
    auto v = verify_sem(wheel_minus_spoke(4), Labeling::exact({2, 3, 1, 4, 5}));
    ASSERT_TRUE(v.accepted());
    EXPECT_EQ(v.certificate->min_edge_sum, 3);
    EXPECT_EQ(v.certificate->magic_constant, 15);
    EXPECT_EQ(v.certificate->isolated, 0);
    EXPECT_EQ(sorted(edge_sums(v.certificate->graph, v.certificate->labeling)), iota_from(3, 7));
}

TEST(VerifySem, WheelMinusSpokeFiveWithOneFiller)
{
    auto v = verify_sem(wheel_minus_spoke(5), Labeling({1, 7, 5, 3, 6, 4}, 7));
    ASSERT_TRUE(v.accepted());
    EXPECT_EQ(v.certificate->isolated, 1);
    EXPECT_EQ(sorted(edge_sums(v.certificate->graph, v.certificate->labeling)), iota_from(4, 9));
}

TEST(VerifySem, RejectionReasons)
{
    auto gap = verify_sem(path_graph(3), Labeling::exact({1, 2, 3}));
    ASSERT_FALSE(gap.accepted());
    EXPECT_EQ(gap.rejection->reason, RejectReason::SumGap);

    auto dup = verify_sem(join(star_graph(3), empty_graph(1)), printed_star_join_single(3));
    ASSERT_FALSE(dup.accepted());
    EXPECT_EQ(dup.rejection->reason, RejectReason::DuplicateSum);

    auto range = verify_sem(path_graph(2), Labeling({1, 3}, 2));
    EXPECT_EQ(range.rejection->reason, RejectReason::LabelOutOfRange);
    auto zero = verify_sem(path_graph(2), Labeling({0, 1}, 2));
    EXPECT_EQ(zero.rejection->reason, RejectReason::LabelOutOfRange);

    auto twice = verify_sem(path_graph(2), Labeling({2, 2}, 3));
    EXPECT_EQ(twice.rejection->reason, RejectReason::DuplicateLabel);
}

TEST(VerifySem, EmptyGraphIsVacuouslyAccepted)
{
    auto v = verify_sem(empty_graph(3), Labeling({3, 1, 2}, 4));
    ASSERT_TRUE(v.accepted());
    EXPECT_EQ(v.certificate->isolated, 1);
    EXPECT_TRUE(verify_sem(empty_graph(0), Labeling({}, 0)).accepted());
}

TEST(WeightedSum, Required)
{
    EXPECT_EQ(weighted_sum_required(9, 3), 63);
    EXPECT_EQ(weighted_sum_required(0, 17), 0);
    EXPECT_EQ(weighted_sum_required(1, 3), 3);
}

TEST(WeightedSum, Feasibility)
{
    EXPECT_TRUE(weighted_sum_feasible(path_graph(2), 2, 3));
    EXPECT_TRUE(weighted_sum_feasible(cycle_graph(3), 3, 3));
    // 2(1+2+3) = 12 = 3 + 4 + 5.
    EXPECT_EQ(weighted_sum_required(3, 3), 12);
    // Interval says H_5 with labels 1..6 might reach 63.
    EXPECT_TRUE(weighted_sum_feasible(wheel_minus_spoke(5), 6, 3));
    // Sums of K_2 with labels from {1,2} cannot start at 4.
    EXPECT_FALSE(weighted_sum_feasible(path_graph(2), 2, 4));
}

TEST(WeightedSum, WheelMinusSpokeFiveIdentityHasNoInjectiveSolution)
{
    // Every edge sum set of H_5 on {1..6} would be {3..11}; the degree-weighted
    // label sum must then be 63, and no bijection achieves it.
    const auto g = wheel_minus_spoke(5);
    const auto deg = degree_sequence(g);
    int hits = 0;
    oracle::for_each_injection(g, 6, [&](const std::vector<int>& labels) {
        long w = 0;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            w += static_cast<long>(deg[v]) * labels[v];
        }
        hits += (w == 63);
        return false;
    });
    EXPECT_EQ(hits, 0);
}

TEST(VerifySem, MatchesOracleOnRandomLabelings)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> pick_p(1, 9);
    std::uniform_real_distribution<double> pick_density(0.1, 0.9);
    int accepted = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const int p = pick_p(rng);
        const int total = std::uniform_int_distribution<int>(p, 9)(rng);
        const auto g = oracle::random_graph(rng, p, pick_density(rng));
        std::vector<int> pool = iota_from(1, total);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> labels(pool.begin(), pool.begin() + p);
        if (trial % 10 == 0 && p >= 2) {
            labels[1] = labels[0]; // duplicate
        }
        if (trial % 17 == 0) {
            labels[0] = total + 1; // out of range
        }
        const bool expected = oracle::accepts(g, labels, total);
        auto verdict = verify_sem(g, Labeling(labels, total));
        ASSERT_EQ(verdict.accepted(), expected) << "trial " << trial;
        if (verdict.accepted()) {
            ++accepted;
            const auto& c = *verdict.certificate;
            const auto sums = edge_sums(g, c.labeling);
            EXPECT_EQ(weighted_sum_required(g.edge_count(), c.min_edge_sum),
                      std::accumulate(sums.begin(), sums.end(), 0L));
        }
    }
    EXPECT_GT(accepted, 50);
}

TEST(VerifySem, ExhaustiveEquivalenceOnSmallGraphs)
{
    for (int p = 1; p <= 4; ++p) {
        for (const auto& g : oracle::all_graphs(p)) {
            for (int total = p; total <= p + 2; ++total) {
                oracle::for_each_injection(g, total, [&](const std::vector<int>& labels) {
                    EXPECT_EQ(verify_sem(g, Labeling(labels, total)).accepted(),
                              oracle::accepts(g, labels, total));
                    return false;
                });
            }
        }
    }
}

TEST(Certificate, TotalLabelingIsMagic)
{
    const std::vector<std::pair<Graph, Labeling>> cases{
        {wheel_minus_spoke(4), Labeling::exact({2, 3, 1, 4, 5})},
        {wheel_minus_spoke(7), Labeling({2, 3, 1, 4, 8, 5, 9, 6}, 9)},
        {join(path_graph(2), empty_graph(4)), Labeling::exact({1, 6, 2, 3, 4, 5})},
        {cycle_graph(5), Labeling::exact({1, 4, 2, 5, 3})},
    };
    for (const auto& [g, f] : cases) {
        auto v = verify_sem(g, f);
        ASSERT_TRUE(v.accepted());
        const auto& c = *v.certificate;
        EXPECT_EQ(c.magic_constant, f.total_labels + g.edge_count() + c.min_edge_sum);
        const auto el = edge_labels(c);
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const auto& e = g.edges()[i];
            EXPECT_EQ(f.labels[static_cast<std::size_t>(e.u)] + el[i] + f.labels[static_cast<std::size_t>(e.v)],
                      c.magic_constant);
        }
        // Edge labels are exactly N+1..N+q, so vertex and edge labels together
        // form a bijection onto {1..N+q}.
        EXPECT_EQ(sorted(el), iota_from(f.total_labels + 1, g.edge_count()));
    }
}

TEST(Labeling, FillersCoverUnusedLabels)
{
    const Labeling f({2, 3, 1, 4, 8, 5, 6}, 8);
    EXPECT_EQ(f.isolated(), 1);
    std::vector<int> unused;
    for (int lab = 1; lab <= f.total_labels; ++lab) {
        if (std::find(f.labels.begin(), f.labels.end(), lab) == f.labels.end()) {
            unused.push_back(lab);
        }
    }
    EXPECT_EQ(unused, (std::vector<int>{7}));
}
