#include <gtest/gtest.h>

#include "mikado/coordinatize.hpp"
#include "mikado/equations.hpp"
#include "mikado/error.hpp"
#include "mikado/galois_field.hpp"
#include "mikado/predimension.hpp"
#include "oracles.hpp"

using namespace mikado;

namespace {

FiniteMagma steiner3() {
    return FiniteMagma::tabulate(3, [](int x, int y) { return x == y ? x : 3 - x - y; });
}

FiniteMagma gf4_block() { return block_algebra(GaloisField::create(2, 2), 2); }

/// Lines {b + i : b in block} mod n for each base block.
LinearSpace cyclic_design(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<PointSet> lines;
    for (const auto& block : blocks)
        for (int i = 0; i < n; ++i) {
            PointSet line;
            for (int b : block) line.insert((b + i) % n);
            lines.push_back(line);
        }
    return LinearSpace::from_lines(n, lines);
}

LinearSpace sts13() { return cyclic_design(13, {{0, 1, 4}, {0, 2, 7}}); }
LinearSpace pg23() { return cyclic_design(13, {{0, 1, 3, 9}}); }

LinearSpace two_lines_sharing_point(int q) {
    PointSet a = PointSet::range(q);
    PointSet b = PointSet::single(0);
    for (int i = q; i < 2 * q - 1; ++i) b.insert(i);
    return LinearSpace::from_lines(2 * q - 1, {a, b});
}

std::set<std::set<int>> line_sets(const LinearSpace& s) {
    std::set<std::set<int>> out;
    for (auto l : s.lines()) {
        auto v = l.to_vector();
        out.insert({v.begin(), v.end()});
    }
    return out;
}

/// Every H on two q-lines meeting in point 0 that is a copy of F2 per line,
/// counted up to isomorphism by trying all line-preserving permutations.
int brute_expansion_classes(const FiniteMagma& f2) {
    const int q = f2.order();
    const int n = 2 * q - 1;
    std::vector<std::vector<int>> lines{{}, {0}};
    for (int i = 0; i < q; ++i) lines[0].push_back(i);
    for (int i = q; i < n; ++i) lines[1].push_back(i);
    // Distinct operations a copy of F2 can induce on a line.
    auto copies_on = [&](const std::vector<int>& pts) {
        std::set<std::set<std::array<int, 3>>> out;
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::set<std::array<int, 3>> h;
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) h.insert({pts[perm[x]], pts[perm[y]], pts[perm[f2(x, y)]]});
            out.insert(h);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::vector<std::set<std::array<int, 3>>>(out.begin(), out.end());
    };
    std::vector<std::set<std::array<int, 3>>> structures;
    for (const auto& h0 : copies_on(lines[0]))
        for (const auto& h1 : copies_on(lines[1])) {
            auto h = h0;
            h.insert(h1.begin(), h1.end());
            structures.push_back(h);
        }
    // Line-preserving permutations: fix 0, optionally swap the lines, permute
    // the other q-1 points of each line.
    std::vector<std::vector<int>> symmetries;
    std::vector<int> rest(q - 1);
    std::iota(rest.begin(), rest.end(), 0);
    std::vector<std::vector<int>> arrangements;
    do arrangements.push_back(rest);
    while (std::next_permutation(rest.begin(), rest.end()));
    for (int swap = 0; swap < 2; ++swap)
        for (const auto& ra : arrangements)
            for (const auto& rb : arrangements) {
                std::vector<int> map(n, 0);
                const auto& from_a = lines[0];
                const auto& from_b = lines[1];
                const auto& to_a = swap ? lines[1] : lines[0];
                const auto& to_b = swap ? lines[0] : lines[1];
                for (int i = 0; i < q - 1; ++i) {
                    map[from_a[i + 1]] = to_a[ra[i] + 1];
                    map[from_b[i + 1]] = to_b[rb[i] + 1];
                }
                symmetries.push_back(map);
            }
    std::set<std::set<std::array<int, 3>>> seen;
    int classes = 0;
    for (const auto& h : structures) {
        if (seen.count(h)) continue;
        ++classes;
        for (const auto& map : symmetries) {
            std::set<std::array<int, 3>> image;
            for (auto t : h) image.insert({map[t[0]], map[t[1]], map[t[2]]});
            seen.insert(image);
        }
    }
    return classes;
}

}  // namespace

TEST(Coordinatize, FanoGivesSteinerQuasigroup) {
    auto alg = coordinatize(build_fano(), steiner3());
    EXPECT_EQ(alg.magma.order(), 7);
    EXPECT_TRUE(satisfies(alg.magma, EquationSet::steiner()));
    EXPECT_EQ(alg.provenance.size(), 7u);
    EXPECT_EQ(alg.magma, derive_steiner_mult(build_fano()));
}

TEST(Coordinatize, SingleLineIsF2) {
    auto f2 = gf4_block();
    auto alg = coordinatize(build_line(4), f2);
    EXPECT_EQ(alg.magma, f2);
    EXPECT_TRUE(isomorphic(coordinatize(build_line(4), f2, CoordinatizePolicy::seeded(5)).magma, f2));
}

TEST(Coordinatize, Sts13) {
    auto s = sts13();
    ASSERT_TRUE(is_steiner_k(s, 3));
    auto alg = coordinatize(s, steiner3());
    EXPECT_EQ(alg.magma.order(), 13);
    EXPECT_TRUE(is_quasigroup(alg.magma));
}

TEST(Coordinatize, Errors) {
    auto code_of = [](auto f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::ParseError;
    };
    EXPECT_EQ(code_of([] { coordinatize(build_line(4), steiner3()); }), Errc::NotSteiner);
    EXPECT_EQ(code_of([] { coordinatize(build_line(4), cyclic_group(4)); }), Errc::BadWitness);
    EXPECT_EQ(code_of([] { gamma_extract(cyclic_group(5)); }), Errc::UnevenBlocks);
    EXPECT_EQ(code_of([] { derive_steiner_mult(build_line(4)); }), Errc::NotSteiner3);
    EXPECT_EQ(code_of([] { complete_lines(build_line(5), 4); }), Errc::LineTooLong);
}

TEST(Coordinatize, RoundTripsAndPropagatesEquations) {
    struct Case {
        LinearSpace space;
        FiniteMagma f2;
    };
    auto f3 = GaloisField::create(3, 1);
    std::vector<Case> cases{{build_fano(), steiner3()},
                            {sts13(), steiner3()},
                            {pg23(), gf4_block()},
                            {build_line(5), block_algebra(GaloisField::create(5, 1), 2)},
                            {build_line(3), block_algebra(f3, 2)}};
    for (const auto& c : cases) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto policy = seed == 0 ? CoordinatizePolicy::canonical() : CoordinatizePolicy::seeded(seed);
            auto alg = coordinatize(c.space, c.f2, policy);
            ASSERT_TRUE(is_quasigroup(alg.magma));
            ASSERT_EQ(line_sets(gamma_extract(alg.magma)), line_sets(c.space));
            ASSERT_FALSE(find_identity_failure(c.f2, alg.magma, 2).has_value());
            ASSERT_EQ(line_sets(reduct_R_from_H(tau_prime_view(c.space, alg))), line_sets(c.space));
        }
    }
}

TEST(Extract, Examples) {
    auto fano = build_fano();
    EXPECT_EQ(line_sets(gamma_extract(coordinatize(fano, steiner3()).magma)), line_sets(fano));
    EXPECT_EQ(line_sets(gamma_extract(derive_steiner_mult(fano))), line_sets(fano));
    auto one = gamma_extract(gf4_block());
    ASSERT_EQ(one.lines().size(), 1u);
    EXPECT_EQ(one.lines()[0].size(), 4);
    auto named = gamma_extract(steiner3(), {"u", "v", "w"});
    EXPECT_EQ(names_of(named, named.universe()), (std::vector<std::string>{"u", "v", "w"}));
}

TEST(SteinerMult, SingleTriple) {
    auto m = derive_steiner_mult(build_line(3));
    EXPECT_EQ(m, steiner3());
    EXPECT_TRUE(satisfies(derive_steiner_mult(build_fano()), EquationSet::steiner()));
}

TEST(CompleteLines, Examples) {
    auto one = complete_lines(build_line(3), 4);
    ASSERT_EQ(one.lines().size(), 1u);
    EXPECT_EQ(one.lines()[0].size(), 4);
    EXPECT_EQ(line_sets(complete_lines(build_fano(), 3)), line_sets(build_fano()));
    auto two = complete_lines(two_lines_sharing_point(3), 5);
    EXPECT_EQ(two.size(), 9);
    EXPECT_EQ(two.lines().size(), 2u);
    EXPECT_EQ(delta(two_lines_sharing_point(3)), 3);
    EXPECT_EQ(delta(two), 3);
}

TEST(Expansions, OneLineAndTwoDisjointLines) {
    for (const auto& f2 : {steiner3(), gf4_block(), block_algebra(GaloisField::create(5, 1), 2)}) {
        const int q = f2.order();
        EXPECT_EQ(enumerate_expansions(build_line(q), f2).size(), 1u);
        PointSet b;
        for (int i = q; i < 2 * q; ++i) b.insert(i);
        auto disjoint = LinearSpace::from_lines(2 * q, {PointSet::range(q), b});
        EXPECT_EQ(enumerate_expansions(disjoint, f2).size(), 1u);
    }
}

TEST(Expansions, TwoLinesSharingAPointMatchBruteForce) {
    for (const auto& f2 : {steiner3(), gf4_block(), block_algebra(GaloisField::create(5, 1), 2),
                           block_algebra(GaloisField::create(5, 1), 3)}) {
        auto space = two_lines_sharing_point(f2.order());
        auto expansions = enumerate_expansions(space, f2);
        EXPECT_EQ(static_cast<int>(expansions.size()), brute_expansion_classes(f2)) << f2.order();
        for (const auto& e : expansions) {
            EXPECT_TRUE(lines_isomorphic_to(e, f2));
            EXPECT_EQ(reduct_R_from_H(e), space);
            EXPECT_EQ(delta(reduct_R_from_H(e)), delta(e.space()));
        }
    }
}

TEST(Expansions, RejectsUnevenOrLargeInputs) {
    EXPECT_THROW(enumerate_expansions(build_line(4), steiner3()), Error);
    EXPECT_THROW(enumerate_expansions(pg23(), gf4_block()), Error);
}

TEST(TauPrime, CreateValidates) {
    auto line = build_line(3);
    std::vector<Triple> h;
    auto m = steiner3();
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) h.push_back({x, y, m(x, y)});
    auto s = TauPrimeStructure::create(line, h);
    EXPECT_EQ(s.q(), 3);
    EXPECT_EQ(reduct_R_from_H(s), line);
    h.pop_back();
    EXPECT_THROW(TauPrimeStructure::create(line, h), Error);
}

TEST(MuPrime, Examples) {
    auto mu = MuFunction::create(4);
    auto line = enumerate_expansions(build_line(4), gf4_block()).front();
    EXPECT_EQ(derive_mu_prime(mu, {line, PointSet::of({0, 1})}), 1);

    // A good pair over three independent points, completed to triples.
    auto mu3 = MuFunction::create(3);
    const auto& catalog = good_pair_catalog(6);
    auto it = std::find_if(catalog.begin(), catalog.end(),
                           [](const ExtensionPair& p) { return p.code() == "3+3:0.3.4,1.3.5,2.4.5"; });
    ASSERT_NE(it, catalog.end());
    auto expansions = enumerate_expansions(it->ambient(), steiner3());
    ASSERT_FALSE(expansions.empty());
    for (const auto& e : expansions) EXPECT_EQ(derive_mu_prime(mu3, {e, it->base()}), 3);
}

TEST(MuPrime, ValueIgnoresTheChoiceOfH) {
    // Distinct H on the same reduct, made by relabelling the unshared points
    // of the first line of one expansion.
    auto f2 = block_algebra(GaloisField::create(5, 1), 2);
    auto mu = MuFunction::create(5);
    for (const auto& space : {build_line(5), two_lines_sharing_point(5)}) {
        const auto e = enumerate_expansions(space, f2).front();
        // Points of the first line lying on no other line.
        PointSet own = space.lines()[0];
        for (std::size_t i = 1; i < space.lines().size(); ++i) own -= space.lines()[i];
        const auto first = own.to_vector();
        std::vector<int> order(first.size());
        std::iota(order.begin(), order.end(), 0);
        std::set<std::vector<Triple>> variants;
        std::set<int> values;
        do {
            std::vector<int> map(space.size());
            std::iota(map.begin(), map.end(), 0);
            for (std::size_t i = 0; i < first.size(); ++i) map[first[i]] = first[order[i]];
            std::vector<Triple> h;
            for (auto t : e.h()) h.push_back({map[t[0]], map[t[1]], map[t[2]]});
            auto variant = TauPrimeStructure::create(space, h);
            variants.insert(variant.h());
            try {
                values.insert(derive_mu_prime(mu, {variant, PointSet::of({1, 2})}));
            } catch (const Error& err) {
                values.insert(-1 - static_cast<int>(err.code()));
            }
        } while (std::next_permutation(order.begin(), order.end()));
        EXPECT_GT(variants.size(), 1u);
        EXPECT_EQ(values.size(), 1u);
    }
    auto line = enumerate_expansions(build_line(5), f2).front();
    EXPECT_EQ(derive_mu_prime(mu, {line, PointSet::of({1, 2})}), 1);
}

TEST(OrbitCheck, Examples) {
    EXPECT_FALSE(invariance_orbit_check(build_line(4), 0, 1, coordinatize(build_line(4), gf4_block())));
    EXPECT_TRUE(invariance_orbit_check(build_line(3), 0, 1, coordinatize(build_line(3), steiner3())));
    auto f5 = block_algebra(GaloisField::create(5, 1), 2);
    EXPECT_FALSE(invariance_orbit_check(build_line(5), 0, 1, coordinatize(build_line(5), f5)));
    EXPECT_TRUE(invariance_orbit_check(build_fano(), 0, 1, coordinatize(build_fano(), steiner3())));
}
