#pragma once

// Brute-force reference implementations. They work from raw triples and
// subset enumeration only, sharing no algorithm with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "mikado/linear_space.hpp"
#include "mikado/magma.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }

/// A structure as a plain triple set over n points.
struct Raw {
    int n = 0;
    std::set<std::array<int, 3>> triples;

    bool has(int a, int b, int c) const {
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        return triples.count(t) > 0;
    }
};

inline Raw raw_of(const mikado::LinearSpace& s) {
    Raw r;
    r.n = s.size();
    for (auto t : s.triples()) r.triples.insert(t);
    return r;
}

/// Lines as {a, b} plus every c completing a triple with a and b.
inline std::vector<Mask> lines(const Raw& r) {
    std::set<Mask> out;
    for (int a = 0; a < r.n; ++a)
        for (int b = a + 1; b < r.n; ++b) {
            Mask line = (Mask{1} << a) | (Mask{1} << b);
            for (int c = 0; c < r.n; ++c) {
                if (c != a && c != b && r.has(a, b, c)) line |= Mask{1} << c;
            }
            if (popcount(line) >= 3) out.insert(line);
        }
    return {out.begin(), out.end()};
}

inline int delta(const std::vector<Mask>& ls, Mask s) {
    int value = popcount(s);
    for (Mask l : ls) value -= std::max(0, popcount(l & s) - 2);
    return value;
}

/// Calls f on every superset of `lower` inside `upper`.
inline void supersets(Mask lower, Mask upper, const std::function<void(Mask)>& f) {
    const Mask free = upper & ~lower;
    for (Mask sub = free;; sub = (sub - 1) & free) {
        f(lower | sub);
        if (sub == 0) break;
    }
}

inline int min_delta(const std::vector<Mask>& ls, Mask lower, Mask upper) {
    int best = 1 << 20;
    supersets(lower, upper, [&](Mask x) { best = std::min(best, delta(ls, x)); });
    return best;
}

/// Intersection of all minimisers.
inline Mask min_witness(const std::vector<Mask>& ls, Mask lower, Mask upper) {
    const int best = min_delta(ls, lower, upper);
    Mask witness = upper;
    supersets(lower, upper, [&](Mask x) {
        if (delta(ls, x) == best) witness &= x;
    });
    return witness;
}

inline bool strong_in(const std::vector<Mask>& ls, Mask base, Mask upper) {
    return min_delta(ls, base, upper) >= delta(ls, base);
}

inline bool in_K0(const std::vector<Mask>& ls, int n) {
    return min_delta(ls, 0, n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1) >= 0;
}

enum class Kind { NotStrong, Primitive, Decomposable };

inline Kind classify(const std::vector<Mask>& ls, Mask base, Mask all) {
    if (!strong_in(ls, base, all)) return Kind::NotStrong;
    bool decomposable = false;
    supersets(base, all, [&](Mask mid) {
        if (mid == base || mid == all || decomposable) return;
        if (strong_in(ls, base, mid) && strong_in(ls, mid, all)) decomposable = true;
    });
    return decomposable ? Kind::Decomposable : Kind::Primitive;
}

inline bool zero_primitive(const std::vector<Mask>& ls, Mask base, Mask all) {
    return base != all && classify(ls, base, all) == Kind::Primitive && delta(ls, all) == delta(ls, base);
}

inline bool good(const std::vector<Mask>& ls, Mask base, Mask all) {
    if (!zero_primitive(ls, base, all)) return false;
    const Mask annulus = all & ~base;
    for (Mask sub = (base - 1) & base;; sub = (sub - 1) & base) {
        if (zero_primitive(ls, sub, annulus | sub)) return false;
        if (sub == 0) break;
    }
    return true;
}

/// Annulus images of all copies of (pattern, base) over `base_image` in host,
/// by trying every injective placement of the annulus.
inline std::vector<Mask> copies(const Raw& host, const Raw& pattern, const std::vector<int>& base,
                                const std::vector<int>& base_image) {
    std::vector<int> annulus;
    for (int p = 0; p < pattern.n; ++p) {
        if (std::find(base.begin(), base.end(), p) == base.end()) annulus.push_back(p);
    }
    std::vector<int> map(pattern.n, -1);
    for (std::size_t i = 0; i < base.size(); ++i) map[base[i]] = base_image[i];
    std::set<Mask> out;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == annulus.size()) {
            for (int a = 0; a < pattern.n; ++a)
                for (int b = a + 1; b < pattern.n; ++b)
                    for (int c = b + 1; c < pattern.n; ++c) {
                        if (pattern.has(a, b, c) != host.has(map[a], map[b], map[c])) return;
                    }
            Mask image = 0;
            for (int a : annulus) image |= Mask{1} << map[a];
            out.insert(image);
            return;
        }
        for (int m = 0; m < host.n; ++m) {
            if (std::find(map.begin(), map.end(), m) != map.end()) continue;
            map[annulus[i]] = m;
            rec(i + 1);
            map[annulus[i]] = -1;
        }
    };
    rec(0);
    return {out.begin(), out.end()};
}

inline int max_disjoint(const std::vector<Mask>& sets) {
    int best = 0;
    const std::size_t k = sets.size();
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
        Mask used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            if (!(choice >> i & 1)) continue;
            ok = (used & sets[i]) == 0;
            used |= sets[i];
        }
        if (ok) best = std::max(best, popcount(static_cast<Mask>(choice)));
    }
    return best;
}

/// Every permutation preserving the table.
inline std::vector<std::vector<int>> automorphisms(const mikado::FiniteMagma& m) {
    std::vector<int> perm(m.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int x = 0; x < m.order() && ok; ++x)
            for (int y = 0; y < m.order() && ok; ++y) ok = perm[m(x, y)] == m(perm[x], perm[y]);
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Random linear space: lines of 3..max_line points added while they meet
/// earlier lines in at most one point.
inline mikado::LinearSpace random_space(std::mt19937_64& rng, int n, int attempts, int max_line = 4) {
    std::vector<mikado::PointSet> chosen;
    for (int t = 0; t < attempts; ++t) {
        const int size = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_line - 2)));
        if (size > n) continue;
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(pts[i], pts[rng() % static_cast<std::uint64_t>(i + 1)]);
        mikado::PointSet line;
        for (int i = 0; i < size; ++i) line.insert(pts[i]);
        bool ok = true;
        for (auto l : chosen) ok = ok && (l & line).size() <= 1;
        if (ok) chosen.push_back(line);
    }
    std::vector<mikado::Triple> triples;
    for (auto l : chosen) {
        auto v = l.to_vector();
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                for (std::size_t c = b + 1; c < v.size(); ++c) triples.push_back({v[a], v[b], v[c]});
    }
    std::shuffle(triples.begin(), triples.end(), rng);
    return mikado::LinearSpace::create(n, triples);
}

inline Mask random_mask(std::mt19937_64& rng, int n) { return rng() & ((Mask{1} << n) - 1); }

}  // namespace oracle
