#include "mikado/coordinatize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mikado/canonical.hpp"
#include "mikado/error.hpp"

namespace mikado {

namespace {

constexpr int kMaxExpansionLines = 8;
constexpr long long kMaxExpansionWork = 2'000'000;

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

}  // namespace

CoordinatizedAlgebra coordinatize(const LinearSpace& space, const FiniteMagma& f2, CoordinatizePolicy policy) {
    const int q = f2.order();
    const auto witness = check_2q_variety_witness(f2, q);
    if (!witness.ok) throw Error(Errc::BadWitness, "F2 is not a variety witness: " + witness.reason);
    if (!is_steiner_k(space, q)) {
        throw Error(Errc::NotSteiner, "the structure is not a Steiner " + std::to_string(q) + "-system");
    }
    std::mt19937_64 rng(policy.seed);
    const int n = space.size();
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x) table[x * n + x] = x;
    CoordinatizedAlgebra out;
    out.names = space.names();
    for (PointSet line : space.lines()) {
        const std::vector<int> pts = line.to_vector();
        std::vector<int> elements(q);
        std::iota(elements.begin(), elements.end(), 0);
        if (policy.kind == CoordinatizePolicy::Kind::Seeded) {
            for (int i = q - 1; i > 0; --i) {
                std::swap(elements[i], elements[static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1))]);
            }
        }
        std::vector<int> point_of(q);
        for (int i = 0; i < q; ++i) point_of[elements[i]] = pts[i];
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) {
                if (i != j) table[pts[i] * n + pts[j]] = point_of[f2(elements[i], elements[j])];
            }
        out.provenance.push_back({line, std::move(elements)});
    }
    out.magma = FiniteMagma::create(n, std::move(table));
    return out;
}

LinearSpace gamma_extract(const FiniteMagma& q, std::vector<std::string> names) {
    const int n = q.order();
    if (n > kMaxPoints) throw Error(Errc::TooLarge, "structures are limited to 64 points");
    if (names.empty()) names = default_names(n);
    if (static_cast<int>(names.size()) != n) throw Error(Errc::InvalidArgument, "one name per element required");
    std::set<std::uint64_t> blocks;
    int size = -1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            const auto block = two_generated(q, x, y);
            if (size < 0) size = static_cast<int>(block.size());
            if (static_cast<int>(block.size()) != size) {
                throw Error(Errc::UnevenBlocks, "2-generated subalgebras have sizes " + std::to_string(size) +
                                                    " and " + std::to_string(block.size()));
            }
            blocks.insert(PointSet::of(block).bits());
        }
    std::vector<PointSet> lines;
    for (std::uint64_t bits : blocks) {
        const PointSet block(bits);
        const auto report = check_2q_variety_witness(submagma(q, block.to_vector()), size);
        if (!report.ok) {
            throw Error(Errc::UnevenBlocks, "subalgebra generated by " + names[block.lowest()] +
                                                " is not a variety witness: " + report.reason);
        }
        lines.push_back(block);
    }
    try {
        return LinearSpace::from_lines(std::move(names), std::move(lines));
    } catch (const Error& e) {
        throw Error(Errc::UnevenBlocks, std::string("subalgebras do not form a linear space: ") + e.what());
    }
}

FiniteMagma derive_steiner_mult(const LinearSpace& space) {
    if (!is_steiner_k(space, 3)) throw Error(Errc::NotSteiner3, "the structure is not a Steiner triple system");
    return FiniteMagma::tabulate(space.size(), [&](int x, int y) {
        if (x == y) return x;
        return (*space.line_through(x, y) - PointSet::of({x, y})).lowest();
    });
}

LinearSpace complete_lines(const LinearSpace& space, int q) {
    if (q < 3) throw Error(Errc::InvalidArgument, "line length must be at least 3");
    std::vector<std::string> names(space.names());
    FreshNames fresh(names);
    std::vector<PointSet> lines;
    for (PointSet line : space.lines()) {
        if (line.size() > q) {
            throw Error(Errc::LineTooLong, "a line has " + std::to_string(line.size()) + " points, more than " +
                                               std::to_string(q));
        }
        while (line.size() < q) {
            if (names.size() >= static_cast<std::size_t>(kMaxPoints)) {
                throw Error(Errc::TooLarge, "completion exceeds 64 points");
            }
            line.insert(static_cast<int>(names.size()));
            names.push_back(fresh.next());
        }
        lines.push_back(line);
    }
    return LinearSpace::from_lines(std::move(names), std::move(lines));
}

TauPrimeStructure TauPrimeStructure::create(LinearSpace space, std::vector<Triple> h) {
    int q = 0;
    for (PointSet line : space.lines()) {
        if (q == 0) q = line.size();
        if (line.size() != q) throw Error(Errc::InvalidArgument, "all lines must have the same length");
    }
    const int n = space.size();
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    std::vector<int> product(static_cast<std::size_t>(n) * n, -1);
    for (const Triple& t : h) {
        const auto [x, y, z] = t;
        if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n) {
            throw Error(Errc::InvalidArgument, "H uses a point outside the structure");
        }
        if (x == y) {
            if (z != x || space.lines_through(x).empty()) {
                throw Error(Errc::InvalidArgument, "H must be idempotent and only defined on lines");
            }
        } else {
            const auto line = space.line_through(x, y);
            if (!line || !line->contains(z)) throw Error(Errc::InvalidArgument, "H leaves the line of its arguments");
        }
        int& slot = product[x * n + y];
        if (slot >= 0 && slot != z) throw Error(Errc::InvalidArgument, "H is not a function");
        slot = z;
    }
    TauPrimeStructure s(std::move(space), std::move(h), q);
    for (std::size_t li = 0; li < s.space_.lines().size(); ++li) {
        for (int x : s.space_.lines()[li])
            for (int y : s.space_.lines()[li]) {
                if (product[x * n + y] < 0) throw Error(Errc::InvalidArgument, "H is not total on a line");
            }
        if (!is_quasigroup(s.line_magma(static_cast<int>(li)))) {
            throw Error(Errc::InvalidArgument, "H is not a quasigroup on a line");
        }
    }
    return s;
}

FiniteMagma TauPrimeStructure::line_magma(int line_index) const {
    const std::vector<int> pts = space_.lines()[line_index].to_vector();
    std::map<std::pair<int, int>, int> product;
    for (const Triple& t : h_) product[{t[0], t[1]}] = t[2];
    return FiniteMagma::tabulate(static_cast<int>(pts.size()), [&](int i, int j) {
        const int z = product.at({pts[i], pts[j]});
        return static_cast<int>(std::find(pts.begin(), pts.end(), z) - pts.begin());
    });
}

bool lines_isomorphic_to(const TauPrimeStructure& s, const FiniteMagma& f2) {
    for (std::size_t li = 0; li < s.space().lines().size(); ++li) {
        if (!isomorphic(s.line_magma(static_cast<int>(li)), f2)) return false;
    }
    return true;
}

namespace {

std::vector<int> code_with(const LinearSpace& space, const std::vector<Triple>& h, PointSet base) {
    std::vector<int> colors(space.size(), 0);
    for (int b : base) colors[b] = 1;
    ColoredStructure s = colored(space, std::move(colors));
    s.ordered_triples = h;
    return canonical_form(s).encoding;
}

}  // namespace

std::vector<int> tau_prime_code(const TauPrimeStructure& s, PointSet base) { return code_with(s.space(), s.h(), base); }

std::vector<TauPrimeStructure> enumerate_expansions(const LinearSpace& completed, const FiniteMagma& f2) {
    const int q = f2.order();
    const auto& lines = completed.lines();
    for (PointSet line : lines) {
        if (line.size() != q) throw Error(Errc::UnevenLines, "every line must have exactly |F2| points");
    }
    if (static_cast<int>(lines.size()) > kMaxExpansionLines) {
        throw Error(Errc::TooLarge, "expansion enumeration is limited to 8 lines");
    }

    // Bijections line -> F2 up to automorphisms of F2. When Aut(F2) is
    // sharply 2-transitive, fixing the images of two points picks one
    // bijection per coset.
    const bool anchored = is_sharply_2_transitive(f2);
    std::vector<std::vector<int>> bijections;
    std::vector<int> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!anchored || (perm[0] == 0 && perm[1] == 1)) bijections.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::vector<std::vector<Triple>>> options(lines.size());
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::vector<int> pts = lines[li].to_vector();
        std::set<std::vector<Triple>> distinct;
        for (const auto& phi : bijections) {
            std::vector<int> point_of(q);
            for (int i = 0; i < q; ++i) point_of[phi[i]] = pts[i];
            std::vector<Triple> h;
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) h.push_back({pts[i], pts[j], point_of[f2(phi[i], phi[j])]});
            std::sort(h.begin(), h.end());
            distinct.insert(std::move(h));
        }
        options[li].assign(distinct.begin(), distinct.end());
    }

    // Stage-wise: expansions of the first k lines up to isomorphism of the
    // partially decorated structure.
    std::map<std::vector<int>, std::vector<Triple>> reps;
    reps.emplace(code_with(completed, {}, {}), std::vector<Triple>{});
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (static_cast<long long>(reps.size()) * static_cast<long long>(options[li].size()) > kMaxExpansionWork) {
            throw Error(Errc::TooLarge, "too many expansions to enumerate");
        }
        std::map<std::vector<int>, std::vector<Triple>> next;
        for (const auto& [code, h] : reps) {
            for (const auto& option : options[li]) {
                std::vector<Triple> merged(h);
                merged.insert(merged.end(), option.begin(), option.end());
                std::sort(merged.begin(), merged.end());
                auto key = code_with(completed, merged, {});
                next.emplace(std::move(key), std::move(merged));
            }
        }
        reps = std::move(next);
    }
    std::vector<TauPrimeStructure> out;
    for (auto& [code, h] : reps) {
        std::vector<Triple> with_fixed(h);
        for (int p = 0; p < completed.size(); ++p) {
            if (!completed.lines_through(p).empty()) with_fixed.push_back({p, p, p});
        }
        out.push_back(TauPrimeStructure::create(completed, std::move(with_fixed)));
    }
    return out;
}

LinearSpace reduct_R_from_H(const TauPrimeStructure& s) {
    const int n = s.space().size();
    std::vector<int> product(static_cast<std::size_t>(n) * n, -1);
    for (const Triple& t : s.h()) product[t[0] * n + t[1]] = t[2];
    std::set<std::uint64_t> blocks;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (product[u * n + v] < 0) continue;
            std::vector<int> members{u, v};
            PointSet in = PointSet::of({u, v});
            for (std::size_t done = 0; done < members.size(); ++done)
                for (std::size_t j = 0; j <= done; ++j) {
                    for (auto [a, b] : {std::pair{members[done], members[j]}, std::pair{members[j], members[done]}}) {
                        const int z = product[a * n + b];
                        if (z >= 0 && !in.contains(z)) {
                            in.insert(z);
                            members.push_back(z);
                        }
                    }
                }
            if (in.size() >= 3) blocks.insert(in.bits());
        }
    std::vector<PointSet> lines;
    for (std::uint64_t b : blocks) lines.push_back(PointSet(b));
    return LinearSpace::from_lines(s.space().names(), std::move(lines));
}

TauPrimeStructure tau_prime_view(const LinearSpace& space, const CoordinatizedAlgebra& algebra) {
    std::vector<Triple> h;
    for (PointSet line : space.lines())
        for (int x : line)
            for (int y : line) h.push_back({x, y, algebra.magma(x, y)});
    return TauPrimeStructure::create(space, std::move(h));
}

int derive_mu_prime(const MuFunction& mu, const TauPrimePair& pair) {
    const ExtensionPair reduct = ExtensionPair::create(pair.ambient.space(), pair.base);
    if (reduct.code() == line_over_two(mu.q()).code()) return 1;
    return mu_eval(mu, reduct);
}

bool invariance_orbit_check(const LinearSpace& space, int a, int b, const CoordinatizedAlgebra& algebra) {
    if (a == b || a < 0 || b < 0 || a >= space.size() || b >= space.size() || space.line_index(a, b) < 0) {
        throw Error(Errc::InvalidArgument, "a and b must be distinct points on a common line");
    }
    if (algebra.magma.order() != space.size()) throw Error(Errc::InvalidArgument, "algebra does not match structure");
    const int c = algebra.magma(a, b);
    std::vector<int> colors(space.size(), 0);
    colors[a] = 1;
    colors[b] = 2;
    return orbit_within(colored(space, std::move(colors)), c, space.universe()) == PointSet::single(c);
}

}  // namespace mikado
