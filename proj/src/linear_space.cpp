#include "mikado/linear_space.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "mikado/error.hpp"

namespace mikado {

namespace {

void check_names(const std::vector<std::string>& names) {
    if (names.size() > static_cast<std::size_t>(kMaxPoints)) {
        throw Error(Errc::TooLarge, "structures are limited to 64 points");
    }
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!seen.insert(n).second) throw Error(Errc::InvalidArgument, "duplicate point name '" + n + "'");
    }
}

std::vector<std::string> numbered(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

long long choose3(long long k) { return k * (k - 1) * (k - 2) / 6; }

}  // namespace

LinearSpace::LinearSpace(std::vector<std::string> names, std::vector<PointSet> lines)
    : names_(std::move(names)), lines_(std::move(lines)) {
    std::sort(lines_.begin(), lines_.end(), members_less);
    const int n = size();
    pair_line_.assign(static_cast<std::size_t>(n) * n, -1);
    incidence_.assign(n, {});
    neighbours_.assign(n, PointSet{});
    for (int li = 0; li < static_cast<int>(lines_.size()); ++li) {
        const PointSet line = lines_[li];
        if (line.size() < 3) throw Error(Errc::InvalidArgument, "a line needs at least 3 points");
        if (!line.subset_of(universe())) throw Error(Errc::TripleNotSetLike, "line point outside universe");
        for (int a : line) {
            incidence_[a].push_back(li);
            neighbours_[a] |= line - PointSet::single(a);
            for (int b : line) {
                if (a == b) continue;
                auto& slot = pair_line_[a * n + b];
                if (slot != -1) {
                    throw Error(Errc::TwoLinesThroughPair,
                                "points '" + names_[a] + "' and '" + names_[b] + "' lie on two lines");
                }
                slot = static_cast<std::int16_t>(li);
            }
        }
    }
}

LinearSpace LinearSpace::create(std::vector<std::string> points, const std::vector<Triple>& triples) {
    check_names(points);
    const int n = static_cast<int>(points.size());
    std::set<Triple> unique;
    for (Triple t : triples) {
        for (int p : t) {
            if (p < 0 || p >= n) throw Error(Errc::TripleNotSetLike, "triple uses a point outside the universe");
        }
        if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
            throw Error(Errc::TripleNotSetLike, "triple repeats a point");
        }
        std::sort(t.begin(), t.end());
        unique.insert(t);
    }
    const std::vector<Triple> list(unique.begin(), unique.end());

    // Triples sharing a pair belong to the same line.
    UnionFind uf(list.size());
    std::unordered_map<int, int> pair_owner;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        const Triple& t = list[i];
        for (auto [x, y] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
            auto [it, inserted] = pair_owner.emplace(x * kMaxPoints + y, i);
            if (!inserted) uf.unite(i, it->second);
        }
    }
    std::map<int, std::pair<PointSet, long long>> components;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        auto& [members, count] = components[uf.find(i)];
        for (int p : list[i]) members.insert(p);
        ++count;
    }
    std::vector<PointSet> lines;
    for (const auto& [root, comp] : components) {
        const auto& [members, count] = comp;
        if (count != choose3(members.size())) {
            std::string msg = "triples through a shared pair do not form one line:";
            for (int p : members) msg += " " + points[p];
            throw Error(Errc::TwoLinesThroughPair, msg);
        }
        lines.push_back(members);
    }
    return LinearSpace(std::move(points), std::move(lines));
}

LinearSpace LinearSpace::create(std::vector<std::string> points, const std::vector<NamedTriple>& triples) {
    check_names(points);
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(points.size()); ++i) index.emplace(points[i], i);
    std::vector<Triple> resolved;
    resolved.reserve(triples.size());
    for (const auto& t : triples) {
        Triple r{};
        for (int k = 0; k < 3; ++k) {
            auto it = index.find(t[k]);
            if (it == index.end()) {
                throw Error(Errc::TripleNotSetLike, "triple uses undeclared point '" + t[k] + "'");
            }
            r[k] = it->second;
        }
        resolved.push_back(r);
    }
    return create(std::move(points), resolved);
}

LinearSpace LinearSpace::create(int n, const std::vector<Triple>& triples) {
    return create(numbered(n), triples);
}

LinearSpace LinearSpace::from_lines(std::vector<std::string> points, std::vector<PointSet> lines) {
    check_names(points);
    return LinearSpace(std::move(points), std::move(lines));
}

LinearSpace LinearSpace::from_lines(int n, std::vector<PointSet> lines) {
    return from_lines(numbered(n), std::move(lines));
}

std::optional<int> LinearSpace::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

std::optional<PointSet> LinearSpace::line_through(int a, int b) const {
    if (a == b) return std::nullopt;
    const int li = line_index(a, b);
    if (li < 0) return std::nullopt;
    return lines_[li];
}

bool LinearSpace::collinear(int a, int b, int c) const {
    if (a == b || b == c || a == c) return false;
    const int li = line_index(a, b);
    return li >= 0 && lines_[li].contains(c);
}

std::vector<Triple> LinearSpace::triples() const {
    std::vector<Triple> out;
    for (PointSet line : lines_) {
        const auto m = line.to_vector();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                for (std::size_t k = j + 1; k < m.size(); ++k) out.push_back({m[i], m[j], m[k]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Line> lines_of(const LinearSpace& space) {
    std::vector<Line> out;
    out.reserve(space.lines().size());
    for (PointSet l : space.lines()) out.push_back({l});
    return out;
}

std::vector<Line> lines_based_in(const LinearSpace& space, PointSet subset) {
    std::vector<Line> out;
    for (PointSet l : space.lines()) {
        if ((l & subset).size() >= 2) out.push_back({l});
    }
    return out;
}

LinearSpace induced(const LinearSpace& space, PointSet subset) {
    subset &= space.universe();
    std::vector<int> relabel(space.size(), -1);
    std::vector<std::string> names;
    for (int p : subset) {
        relabel[p] = static_cast<int>(names.size());
        names.push_back(space.name(p));
    }
    std::vector<PointSet> lines;
    for (PointSet l : space.lines()) {
        const PointSet trace = l & subset;
        if (trace.size() < 3) continue;
        PointSet mapped;
        for (int p : trace) mapped.insert(relabel[p]);
        lines.push_back(mapped);
    }
    return LinearSpace::from_lines(std::move(names), std::move(lines));
}

bool is_steiner_k(const LinearSpace& space, int k) {
    for (PointSet l : space.lines()) {
        if (l.size() != k) return false;
    }
    for (int a = 0; a < space.size(); ++a) {
        if (space.neighbours(a) != space.universe() - PointSet::single(a)) return false;
    }
    return true;
}

LinearSpace build_eta() {
    std::vector<std::string> names{"a", "b", "c"};
    for (int i = 1; i <= 9; ++i) names.push_back("d" + std::to_string(i));
    std::vector<NamedTriple> triples{
        {"a", "b", "c"},
        {"a", "d1", "d2"}, {"a", "d3", "d4"}, {"a", "d5", "d6"}, {"a", "d7", "d8"},
        {"b", "d2", "d3"}, {"b", "d4", "d5"}, {"b", "d6", "d7"}, {"b", "d8", "d1"},
        {"c", "d8", "d9"}, {"c", "d8", "d4"}, {"c", "d9", "d4"}, {"d8", "d9", "d4"},
    };
    return LinearSpace::create(std::move(names), triples);
}

LinearSpace build_fano() {
    return LinearSpace::create(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

LinearSpace build_line(int k) {
    return LinearSpace::from_lines(k, {PointSet::range(k)});
}

std::vector<std::string> names_of(const LinearSpace& space, PointSet subset) {
    std::vector<std::string> out;
    for (int p : subset) out.push_back(space.name(p));
    return out;
}

PointSet subset_of_names(const LinearSpace& space, const std::vector<std::string>& names) {
    PointSet s;
    for (const auto& n : names) {
        auto idx = space.index_of(n);
        if (!idx) throw Error(Errc::InvalidArgument, "unknown point '" + n + "'");
        s.insert(*idx);
    }
    return s;
}

FreshNames::FreshNames(const std::vector<std::string>& existing) {
    for (const auto& n : existing) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), v);
        if (ec == std::errc() && ptr == n.data() + n.size() && v >= 0) next_ = std::max(next_, v + 1);
    }
}

std::string FreshNames::next() { return std::to_string(next_++); }

}  // namespace mikado
