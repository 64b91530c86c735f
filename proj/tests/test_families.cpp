#include <gtest/gtest.h>

#include <random>

#include "mekr/families.hpp"
#include "oracles.hpp"

using namespace mekr;

namespace {

Multiset ms(int m, std::initializer_list<int> elems) { return Multiset::from_elements(m, elems); }

std::vector<std::vector<int>> element_lists(const Family& f) {
    std::vector<std::vector<int>> out;
    for (const auto& a : f) {
        out.push_back(a.elements());
    }
    return out;
}

// Oracle count of k-multisets over [m] satisfying a predicate on counts.
template <typename Pred>
std::size_t count_where(int m, int k, Pred pred) {
    std::size_t c = 0;
    for (const auto& a : oracle::multisets(m, k)) {
        c += pred(a) ? 1 : 0;
    }
    return c;
}

}  // namespace

TEST(Multiset, RepresentationAndSupport) {
    const auto a = ms(6, {1, 2, 2, 4});
    EXPECT_EQ(std::vector<int>(a.counts().begin(), a.counts().end()), (std::vector<int>{1, 2, 0, 1, 0, 0}));
    EXPECT_EQ(a.cardinality(), 4);
    EXPECT_EQ(support(a).elements, (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(support(ms(3, {1, 1, 1})).elements, (std::vector<int>{1}));
    EXPECT_EQ(support(ms(3, {1, 2, 3})).elements, (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(support(a).complement().elements, (std::vector<int>{3, 5, 6}));
    EXPECT_EQ(a.to_string(), "1 2 2 4");
}

TEST(Multiset, InvalidConstruction) {
    EXPECT_THROW(Multiset(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(Multiset(std::vector<int>{0, 0}), std::invalid_argument);
    EXPECT_THROW(Multiset(std::vector<int>{1, -1, 1}), std::invalid_argument);
    EXPECT_THROW(ms(3, {4}), std::out_of_range);
}

TEST(IntersectionSize, Examples) {
    EXPECT_EQ(intersection_size(ms(2, {1, 1, 2}), ms(2, {1, 2, 2})), 2);
    EXPECT_EQ(intersection_size(ms(2, {1, 1, 1}), ms(2, {2, 2, 2})), 0);
    EXPECT_EQ(intersection_size(ms(3, {1, 2, 3}), ms(3, {1, 2, 3})), 3);
    EXPECT_THROW(intersection_size(ms(2, {1, 1}), ms(3, {1, 1})), std::invalid_argument);
    EXPECT_THROW(intersection_size(ms(3, {1, 1}), ms(3, {1, 1, 1})), std::invalid_argument);
}

TEST(IntersectionSize, SymmetricBoundedAndEqualityIffSame) {
    for (int m = 1; m <= 4; ++m) {
        for (int k = 1; k <= 4; ++k) {
            const auto all = all_multisets(m, k);
            for (const auto& a : all) {
                for (const auto& b : all) {
                    const int s = intersection_size(a, b);
                    ASSERT_EQ(s, intersection_size(b, a));
                    ASSERT_LE(s, k);
                    ASSERT_EQ(s == k, a == b);
                }
            }
        }
    }
}

TEST(Family, CanonicalOrderAndDedup) {
    const Family f(2, 3, {ms(2, {2, 2, 2}), ms(2, {1, 1, 1}), ms(2, {1, 2, 2}), ms(2, {1, 1, 1})});
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(element_lists(f), (std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 2}, {2, 2, 2}}));
    EXPECT_THROW(Family(2, 3, {ms(3, {1, 1, 1})}), std::invalid_argument);
}

TEST(Family, EnumerationOrderIsCanonical) {
    const auto all = all_multisets(3, 3);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(all.size(), 10u);
}

TEST(IntersectingFamily, Examples) {
    EXPECT_FALSE(is_t_intersecting_family(Family(2, 2, {ms(2, {1, 1}), ms(2, {1, 2}), ms(2, {2, 2})}), 1));
    EXPECT_TRUE(is_t_intersecting_family(star_family(3, 2, 1), 1));
    EXPECT_TRUE(is_t_intersecting_family(frankl_plus_family(7, 5, 2), 2));
    EXPECT_TRUE(is_t_intersecting_family(Family(3, 2), 1));
    EXPECT_TRUE(is_t_intersecting_family(Family(3, 2, {ms(3, {1, 1})}), 2));
    EXPECT_THROW(is_t_intersecting_family(Family(3, 2), 0), std::invalid_argument);
}

TEST(StarFamily, Examples) {
    EXPECT_EQ(element_lists(star_family(3, 2, 1)), (std::vector<std::vector<int>>{{1, 1}, {1, 2}, {1, 3}}));
    EXPECT_EQ(star_family(4, 3, 2).size(), 10u);
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(element_lists(star_family(5, 1, 3)), (std::vector<std::vector<int>>{{3}}));
    EXPECT_THROW(star_family(3, 2, 4), std::out_of_range);
    EXPECT_THROW(star_family(3, 2, 0), std::out_of_range);
}

TEST(StarFamily, SizeFormulaExhaustive) {
    for (int m = 1; m <= 8; ++m) {
        for (int k = 1; k <= 8; ++k) {
            for (int x = 1; x <= m; ++x) {
                const auto f = star_family(m, k, x);
                ASSERT_EQ(binomial(m + k - 2, k - 1), f.size());
                ASSERT_EQ(f.size(), count_where(m, k, [x](const auto& a) { return a[x - 1] > 0; }));
            }
        }
    }
}

TEST(TStarFamily, Examples) {
    EXPECT_EQ(t_star_family(7, 5, ms(7, {1, 2})).size(), 84u);
    const auto whole = ms(4, {1, 2, 2});
    const auto single = t_star_family(4, 3, whole);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], whole);
    EXPECT_EQ(element_lists(t_star_family(3, 3, ms(3, {1, 1}))),
              (std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 2}, {1, 1, 3}}));
    EXPECT_THROW(t_star_family(3, 2, ms(3, {1, 1, 2})), std::invalid_argument);
}

TEST(TStarFamily, SizeIndependentOfFixedMultiset) {
    for (int m = 1; m <= 6; ++m) {
        for (int k = 1; k <= 6; ++k) {
            for (int t = 1; t <= k; ++t) {
                const auto expected = conjecture_bound(m, k, t).value;
                for (const auto& fixed : all_multisets(m, t)) {
                    const auto f = t_star_family(m, k, fixed);
                    ASSERT_EQ(expected, f.size()) << m << " " << k << " " << t << " " << fixed.to_string();
                    ASSERT_TRUE(is_t_intersecting_family(f, t));
                }
            }
        }
    }
}

TEST(LevelFamily, Examples) {
    EXPECT_EQ(level_family(4, 4, 2).size(), 18u);
    EXPECT_EQ(element_lists(level_family(3, 3, 3)), (std::vector<std::vector<int>>{{1, 2, 3}}));
    EXPECT_EQ(element_lists(level_family(2, 3, 1)), (std::vector<std::vector<int>>{{1, 1, 1}, {2, 2, 2}}));
    EXPECT_THROW(level_family(3, 2, 3), std::out_of_range);
    EXPECT_THROW(level_family(3, 3, 0), std::out_of_range);
}

TEST(LevelFamily, SizeFormulaExhaustive) {
    for (int m = 1; m <= 8; ++m) {
        for (int k = 1; k <= 8; ++k) {
            for (int j = 1; j <= std::min(m, k); ++j) {
                const auto size = count_where(m, k, [j](const auto& a) { return oracle::support_size(a) == j; });
                ASSERT_EQ(level_count(m, k, j), size);
                ASSERT_EQ(level_family(m, k, j).size(), size);
            }
        }
    }
}

TEST(AboveHalfFamily, Examples) {
    EXPECT_EQ(above_half_family(3, 3).size(), 7u);
    EXPECT_EQ(above_half_family(3, 4).size(), 12u);
    EXPECT_EQ(level_count(3, 4, 2), 9);
    EXPECT_EQ(level_count(3, 4, 3), 3);
    EXPECT_EQ(above_half_family(4, 4).size(), 13u);
}

TEST(AboveHalfFamily, FormulaAndIntersectingForMAtMostK) {
    for (int k = 1; k <= 8; ++k) {
        for (int m = 1; m <= k; ++m) {
            const auto f = above_half_family(m, k);
            const auto size = count_where(m, k, [m](const auto& a) { return 2 * oracle::support_size(a) > m; });
            ASSERT_EQ(above_half_count(m, k), size);
            ASSERT_EQ(f.size(), size);
            ASSERT_TRUE(is_t_intersecting_family(f, 1));
        }
    }
}

TEST(HalfSelectionFamily, Examples) {
    EXPECT_EQ(element_lists(half_selection_family(2, 3)), (std::vector<std::vector<int>>{{1, 1, 1}}));
    EXPECT_EQ(element_lists(half_selection_family(2, 2)), (std::vector<std::vector<int>>{{1, 1}}));
    const auto sel = half_selection_family(4, 4);
    EXPECT_EQ(sel.size(), 9u);
    const auto both = sel.united_with(above_half_family(4, 4));
    EXPECT_EQ(both.size(), 22u);
    EXPECT_TRUE(is_t_intersecting_family(both, 1));
    EXPECT_THROW(half_selection_family(3, 3), std::invalid_argument);
}

TEST(HalfSelectionFamily, ChooserMustPickOnePerPair) {
    EXPECT_THROW(half_selection_family(4, 4, [](const Support&) { return true; }), std::invalid_argument);
    const auto alt = half_selection_family(4, 4, [](const Support& s) { return !s.contains(1); });
    EXPECT_EQ(alt.size(), 9u);
    EXPECT_TRUE(is_t_intersecting_family(alt.united_with(above_half_family(4, 4)), 1));
}

TEST(HalfSelectionFamily, UnionIsIntersectingAndMaximal) {
    for (int m : {2, 4}) {
        for (int k = m; k <= 8; ++k) {
            const auto sel = half_selection_family(m, k);
            const auto fam = sel.united_with(above_half_family(m, k));
            ASSERT_EQ(BigCount(sel.size()) * 2, level_count(m, k, m / 2));
            ASSERT_EQ(theorem2_bound(m, k).value, fam.size());
            ASSERT_TRUE(is_t_intersecting_family(fam, 1));
            for (const auto& extra : level_family(m, k, m / 2)) {
                if (sel.contains(extra)) {
                    continue;
                }
                const Family bigger = fam.united_with(Family(m, k, {extra}));
                ASSERT_FALSE(is_t_intersecting_family(bigger, 1)) << extra.to_string();
            }
        }
    }
}

TEST(FranklPlusFamily, BoundaryNumbers) {
    EXPECT_EQ(frankl_plus_family(7, 5, 2, Support{7, {1, 2, 3, 4}}).size(), 91u);
    EXPECT_EQ(frankl_plus_family(8, 5, 2, Support{8, {1, 2, 3, 4}}).size(), 120u);
    EXPECT_EQ(frankl_plus_count(7, 5, 2), 91);
    EXPECT_EQ(frankl_plus_count(8, 5, 2), 120);
}

TEST(FranklPlusFamily, SmallCaseMatchesOracle) {
    const auto f = frankl_plus_family(4, 3, 1, Support{4, {1, 2, 3}});
    const auto size = count_where(4, 3, [](const auto& a) { return (a[0] > 0) + (a[1] > 0) + (a[2] > 0) >= 2; });
    EXPECT_EQ(f.size(), size);
    for (const auto& a : f) {
        EXPECT_GE(a.contains(1) + a.contains(2) + a.contains(3), 2);
    }
}

TEST(FranklPlusFamily, IndependentOfChosenSetAndTIntersecting) {
    for (int t = 1; t <= 3; ++t) {
        for (int m = t + 2; m <= 7; ++m) {
            for (int k = t + 1; k <= 6; ++k) {
                const auto ref = frankl_plus_family(m, k, t);
                ASSERT_EQ(frankl_plus_count(m, k, t), ref.size());
                ASSERT_TRUE(is_t_intersecting_family(ref, t));
                Support shifted{m, {}};
                for (int x = m - t - 1; x <= m; ++x) {
                    shifted.elements.push_back(x);
                }
                ASSERT_EQ(frankl_plus_family(m, k, t, shifted).size(), ref.size());
            }
        }
    }
}

TEST(FranklPlusFamily, ParameterErrors) {
    EXPECT_THROW(frankl_plus_family(3, 5, 2), std::invalid_argument);
    EXPECT_THROW(frankl_plus_family(7, 2, 2), std::invalid_argument);
    EXPECT_THROW(frankl_plus_family(7, 5, 2, Support{7, {1, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(frankl_plus_family(7, 5, 2, Support{7, {1, 2, 2, 3}}), std::invalid_argument);
}

TEST(Bounds, Theorem1) {
    EXPECT_EQ(theorem1_bound(4, 3).value, 10);
    EXPECT_EQ(theorem1_bound(3, 2).value, 3);
    for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(theorem1_bound(m, 1).value, 1);
    }
    EXPECT_TRUE(theorem1_bound(4, 3).in_regime);
    EXPECT_FALSE(theorem1_bound(3, 3).in_regime);
}

TEST(Bounds, Theorem2) {
    EXPECT_EQ(theorem2_bound(3, 3).value, 7);
    EXPECT_EQ(theorem2_bound(4, 4).value, 22);
    EXPECT_EQ(theorem2_bound(2, 3).value, 3);
    EXPECT_TRUE(theorem2_bound(4, 4).in_regime);
    const auto out = theorem2_bound(5, 3);
    EXPECT_FALSE(out.in_regime);
}

TEST(Bounds, Conjecture) {
    const auto a = conjecture_bound(7, 5, 2);
    EXPECT_EQ(a.value, 84);
    EXPECT_FALSE(a.in_regime);
    const auto b = conjecture_bound(8, 5, 2);
    EXPECT_EQ(b.value, 120);
    EXPECT_TRUE(b.in_regime);
    EXPECT_EQ(conjecture_bound(6, 4, 4).value, 1);
    EXPECT_THROW(conjecture_bound(6, 4, 5), std::out_of_range);
    EXPECT_THROW(conjecture_bound(6, 4, 0), std::out_of_range);
}

TEST(Bounds, ConjectureReducesToTheorem1AtTOne) {
    for (int m = 1; m <= 10; ++m) {
        for (int k = 1; k <= 10; ++k) {
            ASSERT_EQ(conjecture_bound(m, k, 1).value, theorem1_bound(m, k).value);
        }
    }
}

TEST(Bounds, BigParametersStayExact) {
    // C(78,39) needs more than 64 bits.
    EXPECT_EQ(theorem1_bound(40, 40).value, binomial(78, 39));
    EXPECT_FALSE(to_u64(theorem1_bound(40, 40).value).has_value());
}
