#include "mikado/amalgam.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "mikado/error.hpp"
#include "mikado/predimension.hpp"

namespace mikado {

namespace {

using NamedLines = std::set<std::set<std::string>>;

NamedLines named_lines(const LinearSpace& space) {
    NamedLines out;
    for (PointSet line : space.lines()) {
        std::set<std::string> names;
        for (int p : line) names.insert(space.name(p));
        out.insert(std::move(names));
    }
    return out;
}

void require_compatible(const LinearSpace& side, const LinearSpace& shared, const char* which) {
    std::vector<std::string> names(shared.names());
    const PointSet image = subset_of_names(side, names);
    if (named_lines(induced(side, image)) != named_lines(shared)) {
        throw Error(Errc::NotCompatible, std::string("the shared part is not induced in the ") + which + " side");
    }
    if (!in_K0(side)) throw Error(Errc::NotCompatible, std::string("the ") + which + " side is not in K0");
}

}  // namespace

LinearSpace amalgam(const AmalgamInput& input) {
    const LinearSpace& left = input.left;
    const LinearSpace& right = input.right;
    const std::set<std::string> shared_names(input.shared.names().begin(), input.shared.names().end());
    std::set<std::string> common;
    for (const auto& n : left.names()) {
        if (right.index_of(n)) common.insert(n);
    }
    if (common != shared_names) {
        throw Error(Errc::NotCompatible, "the shared points must be exactly the points common to both sides");
    }
    if (!in_K0(input.shared)) throw Error(Errc::NotCompatible, "the shared part is not in K0");
    require_compatible(left, input.shared, "left");
    require_compatible(right, input.shared, "right");

    std::vector<std::string> names(left.names());
    std::vector<int> right_to_out(right.size());
    for (int p = 0; p < right.size(); ++p) {
        if (auto idx = left.index_of(right.name(p))) {
            right_to_out[p] = *idx;
        } else {
            right_to_out[p] = static_cast<int>(names.size());
            names.push_back(right.name(p));
        }
    }
    if (names.size() > static_cast<std::size_t>(kMaxPoints)) throw Error(Errc::TooLarge, "amalgam exceeds 64 points");

    std::vector<PointSet> lines(left.lines());
    for (PointSet line : right.lines()) {
        PointSet mapped;
        for (int p : line) mapped.insert(right_to_out[p]);
        lines.push_back(mapped);
    }
    // Lines sharing two points share them inside the common part; fuse them.
    std::vector<int> parent(lines.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if ((lines[i] & lines[j]).size() >= 2) parent[find(static_cast<int>(i))] = find(static_cast<int>(j));
        }
    std::map<int, PointSet> fused;
    for (std::size_t i = 0; i < lines.size(); ++i) fused[find(static_cast<int>(i))] |= lines[i];
    std::vector<PointSet> out_lines;
    for (auto& [root, line] : fused) out_lines.push_back(line);
    return LinearSpace::from_lines(std::move(names), std::move(out_lines));
}

std::string GrowthTrace::log() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const GrowthStep& s = steps[i];
        out << "step " << (i + 1) << " pair=" << s.pair_code << " base=";
        for (std::size_t j = 0; j < s.base.size(); ++j) out << (j ? "," : "") << s.base[j];
        out << " outcome=" << (s.outcome == GrowthOutcome::Accept ? "accept" : "reject") << "\n";
    }
    return out.str();
}

namespace {

struct Candidate {
    PointSet image;
    int base_delta;
    std::vector<int> embedding;
};

/// Fisher-Yates with a fixed reduction so traces do not depend on the
/// standard library's distribution implementations.
template <class T>
void shuffle_range(std::vector<T>& items, std::size_t begin, std::size_t end, std::mt19937_64& rng) {
    for (std::size_t i = end; i > begin + 1; --i) {
        const std::size_t j = begin + static_cast<std::size_t>(rng() % (i - begin));
        std::swap(items[i - 1], items[j]);
    }
}

std::vector<Candidate> candidates_for(const LinearSpace& host, const ExtensionPair& pair, int bound,
                                      std::mt19937_64& rng) {
    std::map<std::uint64_t, bool> strong;
    std::vector<Candidate> out;
    for (auto& e : base_embeddings(host, pair)) {
        PointSet image;
        for (int m : e) image.insert(m);
        auto it = strong.find(image.bits());
        if (it == strong.end()) it = strong.emplace(image.bits(), is_strong(host, image)).first;
        if (!it->second) continue;
        if (chi(host, pair, e) >= bound) continue;
        out.push_back({image, delta(host, image), std::move(e)});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.base_delta != b.base_delta) return a.base_delta < b.base_delta;
        if (a.image != b.image) return members_less(a.image, b.image);
        return a.embedding < b.embedding;
    });
    // Shuffle whole image groups within each run of equal base dimension.
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < out.size();) {
        std::size_t j = i;
        while (j < out.size() && out[j].image == out[i].image) ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    for (std::size_t g = 0; g < groups.size();) {
        std::size_t h = g;
        while (h < groups.size() && out[groups[h].first].base_delta == out[groups[g].first].base_delta) ++h;
        shuffle_range(groups, g, h, rng);
        g = h;
    }
    std::vector<Candidate> ordered;
    ordered.reserve(out.size());
    for (auto [b, e] : groups)
        for (std::size_t i = b; i < e; ++i) ordered.push_back(std::move(out[i]));
    return ordered;
}

LinearSpace attach(const LinearSpace& host, const ExtensionPair& pair, const std::vector<int>& embedding,
                   FreshNames fresh, PointSet& added) {
    const LinearSpace& a = pair.ambient();
    std::vector<std::string> names(a.size());
    PointSet image;
    std::size_t next_base = 0;
    for (int p = 0; p < a.size(); ++p) {
        if (pair.base().contains(p)) {
            names[p] = host.name(embedding[next_base]);
            image.insert(embedding[next_base]);
            ++next_base;
        } else {
            names[p] = fresh.next();
        }
    }
    LinearSpace right = LinearSpace::from_lines(std::move(names), a.lines());
    LinearSpace result = amalgam({host, right, induced(host, image)});
    added = result.universe() - host.universe();
    return result;
}

}  // namespace

GrowthTrace generic_grow(const LinearSpace& seed, const MuFunction& mu, int budget,
                         const std::vector<ExtensionPair>& catalog, std::uint64_t rng_seed,
                         const GrowthOptions& options) {
    if (!in_K0(seed)) throw Error(Errc::SeedNotInClass, "the seed is not in K0");
    if (!in_K_mu(seed, mu, {options.max_ambient, {}}).ok) {
        throw Error(Errc::SeedNotInClass, "the seed violates the mu bound");
    }
    std::vector<int> bounds;
    for (const auto& pair : catalog) bounds.push_back(mu_eval(mu, pair));

    GrowthTrace trace;
    trace.seed = rng_seed;
    trace.budget = budget;
    trace.states.push_back(seed);
    std::mt19937_64 rng(rng_seed);
    LinearSpace current = seed;

    for (std::size_t round = 0; !catalog.empty(); ++round) {
        bool accepted = false;
        for (std::size_t k = 0; k < catalog.size() && !accepted; ++k) {
            const std::size_t idx = (round + k) % catalog.size();
            const ExtensionPair& pair = catalog[idx];
            if (current.size() + pair.annulus().size() > budget) continue;
            for (const Candidate& cand : candidates_for(current, pair, bounds[idx], rng)) {
                PointSet added;
                LinearSpace next;
                bool ok = false;
                try {
                    next = attach(current, pair, cand.embedding, FreshNames(current.names()), added);
                    ok = in_K0(next) && in_K_mu(next, mu, {options.max_ambient, added}).ok;
                } catch (const Error& e) {
                    if (e.code() != Errc::NotCompatible) throw;
                }
                GrowthStep step;
                step.pair_code = pair.code();
                for (int m : cand.embedding) step.base.push_back(current.name(m));
                step.outcome = ok ? GrowthOutcome::Accept : GrowthOutcome::Reject;
                trace.steps.push_back(std::move(step));
                if (ok) {
                    current = std::move(next);
                    trace.states.push_back(current);
                    accepted = true;
                    break;
                }
            }
        }
        if (!accepted) break;
    }
    trace.result = current;
    return trace;
}

std::vector<std::size_t> smoothness_check(const std::vector<SmoothnessSample>& samples) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const SmoothnessSample& s = samples[i];
        if (!s.base.subset_of(s.middle) || !s.middle.subset_of(s.space.universe())) {
            throw Error(Errc::InvalidArgument, "smoothness samples must be nested");
        }
        const bool strong_in_space = is_strong(s.space, s.base);
        const bool strong_in_middle = min_delta_between(s.space, s.base, s.middle).value == delta(s.space, s.base);
        if (strong_in_space && !strong_in_middle) bad.push_back(i);
    }
    return bad;
}

}  // namespace mikado
