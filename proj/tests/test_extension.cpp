#include <gtest/gtest.h>

#include "mikado/error.hpp"
#include "mikado/extension.hpp"
#include "mikado/predimension.hpp"
#include "oracles.hpp"

using namespace mikado;

namespace {

PointSet named(const LinearSpace& s, std::vector<std::string> names) { return subset_of_names(s, names); }

/// Triple {b1, b2, a} plus a point i on no line.
LinearSpace alpha_with_idle() {
    return LinearSpace::create({"b1", "b2", "a", "i"}, std::vector<NamedTriple>{{"b1", "b2", "a"}});
}

LinearSpace two_triples_through_p() {
    return LinearSpace::create({"p", "x1", "x2", "y1", "y2"},
                               std::vector<NamedTriple>{{"p", "x1", "x2"}, {"p", "y1", "y2"}});
}

LinearSpace relabel(const LinearSpace& s, const std::vector<int>& perm) {
    std::vector<PointSet> lines;
    for (auto l : s.lines()) {
        PointSet m;
        for (int p : l) m.insert(perm[p]);
        lines.push_back(m);
    }
    return LinearSpace::from_lines(s.size(), lines);
}

}  // namespace

TEST(Classify, AlphaIsZeroPrimitiveAndGood) {
    auto a = alpha_pair();
    EXPECT_EQ(classify(a.ambient(), a.base()), (Classification{Classification::Kind::Primitive, 0}));
    EXPECT_TRUE(is_good(a.ambient(), a.base()));
    EXPECT_EQ(a.code(), "2+1:0.1.2");
}

TEST(Classify, EtaOverAIsDecomposable) {
    // A - {d9} keeps delta = 1 (the 4-line shrinks to a triple), so it is an
    // intermediate strong set.
    auto eta = build_eta();
    const PointSet a = named(eta, {"a"});
    EXPECT_EQ(classify(eta, a).kind, Classification::Kind::Decomposable);
    EXPECT_EQ(classify(eta, a).k, 0);
    auto ls = oracle::lines(oracle::raw_of(eta));
    EXPECT_EQ(oracle::classify(ls, a.bits(), eta.universe().bits()), oracle::Kind::Decomposable);
    const PointSet without_d9 = eta.universe() - named(eta, {"d9"});
    EXPECT_EQ(delta(eta, without_d9), 1);
    EXPECT_TRUE(oracle::strong_in(ls, a.bits(), without_d9.bits()));
    EXPECT_TRUE(oracle::strong_in(ls, without_d9.bits(), eta.universe().bits()));
    EXPECT_THROW(is_good(eta, a), Error);
}

TEST(Classify, TwoTriplesThroughAPointAreDecomposable) {
    auto s = two_triples_through_p();
    EXPECT_EQ(classify(s, named(s, {"p"})).kind, Classification::Kind::Decomposable);
}

TEST(Classify, NotStrong) {
    auto eta = build_eta();
    EXPECT_EQ(classify(eta, named(eta, {"a", "b"})).kind, Classification::Kind::NotStrong);
}

TEST(Good, IdleBasePointIsDropped) {
    auto s = alpha_with_idle();
    const PointSet base = named(s, {"b1", "b2", "i"});
    ASSERT_TRUE(is_zero_primitive(s, base));
    EXPECT_FALSE(is_good(s, base));
    auto bases = find_bases(s, base);
    ASSERT_EQ(bases.size(), 1u);
    EXPECT_EQ(bases[0], named(s, {"b1", "b2"}));
}

TEST(Good, RequiresPrimitive) {
    auto s = two_triples_through_p();
    try {
        is_good(s, named(s, {"p"}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrimitive);
    }
}

TEST(Good, StrictImplications) {
    // Strong but not 0-primitive, and 0-primitive but not good.
    auto s = two_triples_through_p();
    EXPECT_TRUE(is_strong(s, named(s, {"p"})));
    EXPECT_FALSE(is_zero_primitive(s, named(s, {"p"})));
    auto t = alpha_with_idle();
    EXPECT_TRUE(is_zero_primitive(t, named(t, {"b1", "b2", "i"})));
    EXPECT_FALSE(is_good_pair(t, named(t, {"b1", "b2", "i"})));
}

TEST(Classify, MatchesOracleOnRandomPairs) {
    std::mt19937_64 rng(21);
    int primitive = 0;
    int good = 0;
    for (int round = 0; round < 600; ++round) {
        const int n = 3 + static_cast<int>(rng() % 6);
        auto s = oracle::random_space(rng, n, 2 + static_cast<int>(rng() % 6));
        const oracle::Mask all = s.universe().bits();
        const oracle::Mask base = oracle::random_mask(rng, n) & oracle::random_mask(rng, n);
        if (base == all) continue;
        auto ls = oracle::lines(oracle::raw_of(s));
        const auto c = classify(s, PointSet(base));
        const auto expected = oracle::classify(ls, base, all);
        ASSERT_EQ(static_cast<int>(c.kind), static_cast<int>(expected));
        if (c.kind != Classification::Kind::NotStrong) {
            ASSERT_EQ(c.k, oracle::delta(ls, all) - oracle::delta(ls, base));
        }
        ASSERT_EQ(is_good_pair(s, PointSet(base)), oracle::good(ls, base, all));
        primitive += c.kind == Classification::Kind::Primitive && c.k == 0;
        good += is_good_pair(s, PointSet(base));
    }
    EXPECT_GT(primitive, 10);
    EXPECT_GT(good, 5);
}

TEST(Code, RelabellingInvariant) {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 1000; ++round) {
        const int n = 3 + static_cast<int>(rng() % 7);
        auto s = oracle::random_space(rng, n, 2 + static_cast<int>(rng() % 6));
        const PointSet base(oracle::random_mask(rng, n) & oracle::random_mask(rng, n));
        if (base == s.universe()) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        PointSet moved;
        for (int b : base) moved.insert(perm[b]);
        ASSERT_EQ(ExtensionPair::create(s, base).code(), ExtensionPair::create(relabel(s, perm), moved).code());
    }
}

TEST(Code, DistinguishesAndDecodes) {
    EXPECT_NE(alpha_pair().code(), line_over_two(4).code());
    auto eta = eta_pair();
    auto renamed = LinearSpace::from_lines(
        {"z", "y", "x", "w1", "w2", "w3", "w4", "w5", "w6", "w7", "w8", "w9"}, eta.ambient().lines());
    EXPECT_EQ(ExtensionPair::create(renamed, std::vector<std::string>{"z"}).code(), eta.code());
    EXPECT_EQ(decode_pair(eta.code()).code(), eta.code());
    EXPECT_THROW(decode_pair("2+x:0.1"), Error);
}

TEST(Code, SeparatesNonIsomorphicPairsLikeBruteForce) {
    // Same code iff some bijection preserving base and lines exists.
    std::mt19937_64 rng(77);
    for (int round = 0; round < 150; ++round) {
        const int n = 4 + static_cast<int>(rng() % 3);
        auto s = oracle::random_space(rng, n, 4);
        auto t = oracle::random_space(rng, n, 4);
        const PointSet bs(oracle::random_mask(rng, n) & 0x3);
        const PointSet bt(oracle::random_mask(rng, n) & 0x3);
        if (bs == s.universe() || bt == t.universe()) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        bool iso = false;
        auto rs = oracle::raw_of(s);
        auto rt = oracle::raw_of(t);
        do {
            bool ok = true;
            for (int p = 0; p < n && ok; ++p) ok = bs.contains(p) == bt.contains(perm[p]);
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b)
                    for (int c = b + 1; c < n && ok; ++c) ok = rs.has(a, b, c) == rt.has(perm[a], perm[b], perm[c]);
            iso = iso || ok;
        } while (!iso && std::next_permutation(perm.begin(), perm.end()));
        ASSERT_EQ(ExtensionPair::create(s, bs).code() == ExtensionPair::create(t, bt).code(), iso);
    }
}

TEST(Chi, Examples) {
    auto fano = build_fano();
    EXPECT_EQ(chi(fano, alpha_pair(), {0, 1}), 1);
    EXPECT_EQ(chi(build_line(3), alpha_pair(), {0, 1}), 1);
    EXPECT_EQ(chi(build_line(5), alpha_pair(), {0, 1}), 3);
    EXPECT_EQ(annulus_copies(build_line(5), alpha_pair(), {0, 1}).size(), 3u);
    EXPECT_EQ(chi(fano, eta_pair(), {0}), 0);
}

TEST(Chi, MatchesOracle) {
    std::mt19937_64 rng(44);
    const auto& catalog = good_pair_catalog(6);
    for (int round = 0; round < 120; ++round) {
        const int n = 5 + static_cast<int>(rng() % 4);
        auto host = oracle::random_space(rng, n, 10);
        const ExtensionPair& pair = catalog[rng() % catalog.size()];
        auto rh = oracle::raw_of(host);
        auto rp = oracle::raw_of(pair.ambient());
        for (const auto& e : base_embeddings(host, pair)) {
            auto expected = oracle::copies(rh, rp, pair.base().to_vector(), e);
            auto got = annulus_copies(host, pair, e);
            std::vector<oracle::Mask> bits;
            for (auto g : got) bits.push_back(g.bits());
            std::sort(bits.begin(), bits.end());
            ASSERT_EQ(bits, expected);
            ASSERT_EQ(chi(host, pair, e), oracle::max_disjoint(expected));
        }
    }
}

TEST(Chi, MonotoneUnderSubstructure) {
    std::mt19937_64 rng(45);
    for (int round = 0; round < 200; ++round) {
        const int n = 5 + static_cast<int>(rng() % 5);
        auto host = oracle::random_space(rng, n, 12);
        const PointSet keep(oracle::random_mask(rng, n) | 0x3);
        auto sub = induced(host, keep);
        for (const auto& e : base_embeddings(sub, alpha_pair())) {
            std::vector<int> up;
            for (int m : e) up.push_back(keep.to_vector()[m]);
            ASSERT_LE(chi(sub, alpha_pair(), e), chi(host, alpha_pair(), up));
        }
    }
}

TEST(Determined, Examples) {
    auto eta = eta_pair();
    EXPECT_TRUE(determined_points(eta).contains(*eta.ambient().index_of("d9")));
    EXPECT_EQ(determined_points(alpha_pair()), PointSet::single(2));
    EXPECT_TRUE(determined_points(line_over_two(4)).empty());
}

TEST(Mu, Evaluation) {
    auto mu4 = MuFunction::create(4);
    EXPECT_EQ(mu_eval(mu4, alpha_pair()), 2);
    EXPECT_EQ(mu_eval(MuFunction::create(3), alpha_pair()), 1);
    const auto& catalog = good_pair_catalog(6);
    auto three_base = std::find_if(catalog.begin(), catalog.end(), [](const ExtensionPair& p) {
        return delta(p.ambient(), p.base()) == 3;
    });
    ASSERT_NE(three_base, catalog.end());
    EXPECT_EQ(mu_eval(mu4, *three_base), 3);
    auto overridden = MuFunction::create(4, MuRule::FloorDelta, 0, {{three_base->code(), 5}});
    EXPECT_EQ(mu_eval(overridden, *three_base), 5);
    EXPECT_EQ(mu_eval(MuFunction::create(4, MuRule::Constant, 7), *three_base), 7);
    EXPECT_THROW(mu_eval(mu4, ExtensionPair::create(two_triples_through_p(), PointSet::single(0))), Error);
}

TEST(Mu, RejectsBadOverrides) {
    EXPECT_THROW(MuFunction::create(4, MuRule::FloorDelta, 0, {{alpha_pair().code(), 1}}), Error);
    EXPECT_THROW(MuFunction::create(4, MuRule::FloorDelta, 0, {{"2+1:0.1", 1}}), Error);
    EXPECT_THROW(MuFunction::create(2), Error);
}

TEST(Mu, FlagsAreCheckedOnTheCatalogue) {
    EXPECT_NO_THROW(MuFunction::create(3, MuRule::FloorDelta, 0, {}, {MuClass::U}));
    try {
        MuFunction::create(3, MuRule::FloorDelta, 0, {}, {MuClass::T});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FlagViolation);
    }
    try {
        MuFunction::create(5, MuRule::Constant, 0, {}, {MuClass::U});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FlagViolation);
    }
    // T holds once every delta(B) = 2 pair gets at least 3.
    EXPECT_NO_THROW(MuFunction::create(5, MuRule::Constant, 3, {}, {MuClass::T, MuClass::U}));
}

TEST(Mu, AcceptedFlagsHoldOnEveryCataloguePair) {
    for (int q : {3, 4, 5, 6}) {
        for (int c : {0, 1, 2, 3, 4}) {
            for (auto flags : std::vector<std::set<MuClass>>{{MuClass::U}, {MuClass::T}, {MuClass::C}}) {
                try {
                    auto mu = MuFunction::create(q, MuRule::Constant, c, {}, flags);
                    for (const auto& p : good_pair_catalog(kFlagCatalogBound)) {
                        ASSERT_TRUE(flag_violations(mu, p).empty());
                    }
                } catch (const Error& e) {
                    ASSERT_EQ(e.code(), Errc::FlagViolation);
                }
            }
        }
    }
}

TEST(Catalogue, EntriesAreGoodAndInK0) {
    const auto& catalog = good_pair_catalog(6);
    ASSERT_GE(catalog.size(), 2u);
    EXPECT_EQ(catalog.front().code(), alpha_pair().code());
    for (const auto& p : catalog) {
        EXPECT_TRUE(in_K0(p.ambient()));
        auto ls = oracle::lines(oracle::raw_of(p.ambient()));
        EXPECT_TRUE(oracle::good(ls, p.base().bits(), p.ambient().universe().bits()));
    }
}

TEST(KMu, Examples) {
    auto fano = build_fano();
    EXPECT_TRUE(in_K_mu(fano, MuFunction::create(3)).ok);
    EXPECT_TRUE(in_K_mu(build_line(3), MuFunction::create(4)).ok);
    // Fano minus a point is a 6-point, 4-line configuration that is good over
    // two points whose line went through the removed point.
    const auto& catalog = good_pair_catalog(6);
    auto pasch = std::find_if(catalog.begin(), catalog.end(),
                              [](const ExtensionPair& p) { return p.code().rfind("2+4:", 0) == 0; });
    ASSERT_NE(pasch, catalog.end());
    auto capped = MuFunction::create(3, MuRule::FloorDelta, 0, {{pasch->code(), 0}});
    auto report = in_K_mu(fano, capped);
    EXPECT_FALSE(report.ok);
    ASSERT_TRUE(report.violation.has_value());
    EXPECT_EQ(report.violation->pair.code(), pasch->code());
    EXPECT_EQ(report.violation->bound, 0);
    EXPECT_EQ(report.violation->chi, 1);
}

TEST(KMu, LongLineViolatesAlphaBound) {
    auto report = in_K_mu(build_line(5), MuFunction::create(4));
    EXPECT_FALSE(report.ok);
    EXPECT_EQ(report.violation->pair.code(), alpha_pair().code());
    EXPECT_EQ(report.violation->chi, 3);
}

TEST(KMu, RealizedPairsMatchBruteForce) {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 40; ++round) {
        const int n = 5 + static_cast<int>(rng() % 3);
        auto host = oracle::random_space(rng, n, 10);
        auto ls = oracle::lines(oracle::raw_of(host));
        const int bound = 6;
        std::set<std::pair<oracle::Mask, oracle::Mask>> expected;
        const oracle::Mask all = host.universe().bits();
        for (oracle::Mask c = 1; c <= all; ++c) {
            for (oracle::Mask b = all & ~c;; b = (b - 1) & (all & ~c)) {
                if (oracle::popcount(b | c) <= bound && oracle::good(ls, b, b | c)) expected.insert({b, c});
                if (b == 0) break;
            }
        }
        std::set<std::pair<oracle::Mask, oracle::Mask>> got;
        for (const auto& r : realized_good_pairs(host, {bound, {}})) {
            got.insert({r.base.bits(), r.annulus.bits()});
            ASSERT_EQ(r.code, pair_code(host, r.base, r.annulus));
        }
        ASSERT_EQ(got, expected);
    }
}

TEST(KMu, FocusFindsEveryPairTouchingTheFocus) {
    std::mt19937_64 rng(56);
    for (int round = 0; round < 40; ++round) {
        const int n = 6 + static_cast<int>(rng() % 3);
        auto host = oracle::random_space(rng, n, 12);
        const PointSet focus = PointSet::single(static_cast<int>(rng() % n));
        std::set<std::pair<oracle::Mask, oracle::Mask>> full;
        for (const auto& r : realized_good_pairs(host, {7, {}})) {
            if ((r.base | r.annulus).intersects(focus)) full.insert({r.base.bits(), r.annulus.bits()});
        }
        std::set<std::pair<oracle::Mask, oracle::Mask>> focused;
        for (const auto& r : realized_good_pairs(host, {7, focus})) focused.insert({r.base.bits(), r.annulus.bits()});
        ASSERT_EQ(focused, full);
    }
}
