#include <gtest/gtest.h>

#include "mikado/error.hpp"
#include "mikado/linear_space.hpp"
#include "oracles.hpp"

using namespace mikado;

namespace {

template <class F>
Errc error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return Errc::InvalidArgument;
}

PointSet named(const LinearSpace& s, std::initializer_list<const char*> names) {
    std::vector<std::string> v(names.begin(), names.end());
    return subset_of_names(s, v);
}

}  // namespace

TEST(LinearSpace, SingleTripleIsOneLine) {
    auto s = LinearSpace::create({"a", "b", "c"}, std::vector<NamedTriple>{{"a", "b", "c"}});
    ASSERT_EQ(s.lines().size(), 1u);
    EXPECT_EQ(s.lines()[0], s.universe());
    EXPECT_EQ(lines_of(s)[0].nullity(), 1);
}

TEST(LinearSpace, FanoIsValidWithSevenLines) {
    auto f = build_fano();
    EXPECT_EQ(f.size(), 7);
    EXPECT_EQ(f.lines().size(), 7u);
    // Pairwise line uniqueness, brute force over triples.
    auto raw = oracle::raw_of(f);
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            int completions = 0;
            for (int c = 0; c < 7; ++c) completions += c != a && c != b && raw.has(a, b, c);
            EXPECT_EQ(completions, 1);
        }
}

TEST(LinearSpace, TwoTriplesOnAPairAreRejected) {
    EXPECT_EQ(error_of([] {
                  LinearSpace::create({"a", "b", "c", "d"}, std::vector<NamedTriple>{{"a", "b", "c"}, {"a", "b", "d"}});
              }),
              Errc::TwoLinesThroughPair);
}

TEST(LinearSpace, FourCliqueFromAllItsTriplesIsOneLine) {
    auto s = LinearSpace::create(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    ASSERT_EQ(s.lines().size(), 1u);
    EXPECT_EQ(s.lines()[0].size(), 4);
}

TEST(LinearSpace, RepeatedOrUnknownPointsAreNotSetLike) {
    EXPECT_EQ(error_of([] { LinearSpace::create(3, {{0, 0, 1}}); }), Errc::TripleNotSetLike);
    EXPECT_EQ(error_of([] { LinearSpace::create(3, {{0, 1, 5}}); }), Errc::TripleNotSetLike);
    EXPECT_EQ(error_of([] {
                  LinearSpace::create({"a", "b", "c"}, std::vector<NamedTriple>{{"a", "b", "z"}});
              }),
              Errc::TripleNotSetLike);
}

TEST(LinearSpace, TooManyPoints) {
    EXPECT_EQ(error_of([] { LinearSpace::create(65, {}); }), Errc::TooLarge);
}

TEST(LinearSpace, EtaHasNineTriplesAndOneFourLine) {
    auto eta = build_eta();
    EXPECT_EQ(eta.size(), 12);
    int three = 0;
    int four = 0;
    for (auto l : eta.lines()) {
        three += l.size() == 3;
        four += l.size() == 4;
    }
    EXPECT_EQ(three, 9);
    EXPECT_EQ(four, 1);
    auto four_line = named(eta, {"c", "d8", "d9", "d4"});
    EXPECT_NE(std::find(eta.lines().begin(), eta.lines().end(), four_line), eta.lines().end());
    EXPECT_EQ(eta.lines_through(*eta.index_of("d9")).size(), 1u);
    // Oracle lines from raw triples agree.
    auto raw = oracle::raw_of(eta);
    auto ls = oracle::lines(raw);
    ASSERT_EQ(ls.size(), eta.lines().size());
    for (auto l : eta.lines()) EXPECT_NE(std::find(ls.begin(), ls.end(), l.bits()), ls.end());
}

TEST(LinearSpace, LinesBasedIn) {
    auto s = LinearSpace::create({"a", "b", "c", "d", "e"},
                                 std::vector<NamedTriple>{{"a", "b", "c"}, {"a", "d", "e"}});
    auto based = lines_based_in(s, named(s, {"a", "b"}));
    ASSERT_EQ(based.size(), 1u);
    EXPECT_EQ(based[0].members, named(s, {"a", "b", "c"}));
    EXPECT_EQ(lines_based_in(s, named(s, {"b", "d"})).size(), 0u);
}

TEST(LinearSpace, InducedKeepsNamesAndTraces) {
    auto f = build_fano();
    auto sub = induced(f, PointSet::of({0, 1, 2, 3}));
    EXPECT_EQ(sub.names(), (std::vector<std::string>{"0", "1", "2", "3"}));
    ASSERT_EQ(sub.lines().size(), 1u);
    EXPECT_EQ(sub.lines()[0], PointSet::of({0, 1, 2}));
}

TEST(LinearSpace, SteinerCheck) {
    EXPECT_TRUE(is_steiner_k(build_fano(), 3));
    EXPECT_FALSE(is_steiner_k(build_fano(), 4));
    EXPECT_TRUE(is_steiner_k(build_line(5), 5));
    EXPECT_FALSE(is_steiner_k(build_eta(), 3));
}

TEST(LinearSpace, LinesMatchOracleOnRandomSpaces) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(rng() % 8);
        auto s = oracle::random_space(rng, n, 6, 5);
        auto expected = oracle::lines(oracle::raw_of(s));
        std::vector<oracle::Mask> got;
        for (auto l : s.lines()) got.push_back(l.bits());
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, expected);
    }
}

TEST(LinearSpace, FreshNamesExceedNumericNames) {
    FreshNames fresh({"a", "3", "17", "x9"});
    EXPECT_EQ(fresh.next(), "18");
    EXPECT_EQ(fresh.next(), "19");
}
