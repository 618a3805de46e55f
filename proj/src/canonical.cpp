#include "mikado/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mikado {

namespace {

class Canonizer {
public:
    explicit Canonizer(const ColoredStructure& s) : s_(s) {
        lines_at_.assign(s.n, {});
        for (std::size_t j = 0; j < s.lines.size(); ++j) {
            for (int p : s.lines[j]) lines_at_[p].push_back(static_cast<int>(j));
        }
        triples_at_.assign(s.n, {});
        for (std::size_t j = 0; j < s.ordered_triples.size(); ++j) {
            const Triple& t = s.ordered_triples[j];
            for (int k = 0; k < 3; ++k) {
                if (k > 0 && t[k] == t[0]) continue;
                if (k > 1 && t[k] == t[1]) continue;
                triples_at_[t[k]].push_back(static_cast<int>(j));
            }
        }
    }

    void run() {
        std::vector<int> cells(s_.n);
        std::vector<int> distinct = s_.colors;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < s_.n; ++v) {
            cells[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), s_.colors[v]) -
                                        distinct.begin());
        }
        std::vector<int> prefix;
        search(std::move(cells), prefix);
    }

    CanonicalForm form() const { return {best_, best_labeling_}; }
    const std::vector<std::vector<int>>& automorphisms() const { return autos_; }

private:
    using Signature = std::vector<int>;

    static int count_cells(const std::vector<int>& cells) {
        return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
    }

    Signature signature(const std::vector<int>& cells, int v) const {
        Signature sig{cells[v]};
        std::vector<std::vector<int>> parts;
        for (int j : lines_at_[v]) {
            std::vector<int> part;
            for (int u : s_.lines[j]) {
                if (u != v) part.push_back(cells[u]);
            }
            std::sort(part.begin(), part.end());
            parts.push_back(std::move(part));
        }
        std::sort(parts.begin(), parts.end());
        sig.push_back(static_cast<int>(parts.size()));
        for (const auto& part : parts) {
            sig.push_back(static_cast<int>(part.size()));
            sig.insert(sig.end(), part.begin(), part.end());
        }
        std::vector<std::array<int, 6>> hs;
        for (int j : triples_at_[v]) {
            const Triple& t = s_.ordered_triples[j];
            hs.push_back({cells[t[0]], cells[t[1]], cells[t[2]], t[0] == v, t[1] == v, t[2] == v});
        }
        std::sort(hs.begin(), hs.end());
        sig.push_back(static_cast<int>(hs.size()));
        for (const auto& h : hs) sig.insert(sig.end(), h.begin(), h.end());
        return sig;
    }

    void refine(std::vector<int>& cells) const {
        int count = count_cells(cells);
        while (true) {
            std::vector<std::pair<Signature, int>> keyed;
            keyed.reserve(s_.n);
            for (int v = 0; v < s_.n; ++v) keyed.emplace_back(signature(cells, v), v);
            std::sort(keyed.begin(), keyed.end());
            std::vector<int> next(s_.n);
            int id = -1;
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) ++id;
                next[keyed[i].second] = id;
            }
            cells = std::move(next);
            const int updated = count_cells(cells);
            if (updated == count) return;
            count = updated;
        }
    }

    std::vector<int> encode(const std::vector<int>& label) const {
        std::vector<int> enc{s_.n};
        std::vector<int> color_by_label(s_.n);
        for (int v = 0; v < s_.n; ++v) color_by_label[label[v]] = s_.colors[v];
        enc.insert(enc.end(), color_by_label.begin(), color_by_label.end());
        std::vector<std::vector<int>> lines;
        for (PointSet l : s_.lines) {
            std::vector<int> m;
            for (int p : l) m.push_back(label[p]);
            std::sort(m.begin(), m.end());
            lines.push_back(std::move(m));
        }
        std::sort(lines.begin(), lines.end());
        enc.push_back(static_cast<int>(lines.size()));
        for (const auto& m : lines) {
            enc.push_back(static_cast<int>(m.size()));
            enc.insert(enc.end(), m.begin(), m.end());
        }
        std::vector<Triple> hs;
        for (const Triple& t : s_.ordered_triples) hs.push_back({label[t[0]], label[t[1]], label[t[2]]});
        std::sort(hs.begin(), hs.end());
        enc.push_back(static_cast<int>(hs.size()));
        for (const Triple& t : hs) enc.insert(enc.end(), t.begin(), t.end());
        return enc;
    }

    void leaf(const std::vector<int>& cells) {
        std::vector<int> enc = encode(cells);
        if (!have_best_ || enc < best_) {
            best_ = std::move(enc);
            best_labeling_ = cells;
            have_best_ = true;
            return;
        }
        if (enc == best_) {
            std::vector<int> inverse(s_.n);
            for (int v = 0; v < s_.n; ++v) inverse[best_labeling_[v]] = v;
            std::vector<int> g(s_.n);
            bool identity = true;
            for (int v = 0; v < s_.n; ++v) {
                g[v] = inverse[cells[v]];
                identity = identity && g[v] == v;
            }
            if (!identity) autos_.push_back(std::move(g));
        }
    }

    int find(std::vector<int>& parent, int x) const {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void search(std::vector<int> cells, std::vector<int>& prefix) {
        refine(cells);
        const int count = count_cells(cells);
        if (count == s_.n) {
            leaf(cells);
            return;
        }
        std::vector<int> size(count, 0);
        for (int c : cells) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<int> members;
        for (int v = 0; v < s_.n; ++v) {
            if (cells[v] == target) members.push_back(v);
        }
        std::vector<int> explored;
        for (int w : members) {
            if (!explored.empty() && in_explored_orbit(w, explored, prefix)) continue;
            std::vector<int> child = cells;
            for (int& c : child) {
                if (c > target) ++c;
            }
            for (int v : members) {
                if (v != w) child[v] = target + 1;
            }
            prefix.push_back(w);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(w);
        }
    }

    bool in_explored_orbit(int w, const std::vector<int>& explored, const std::vector<int>& prefix) {
        std::vector<int> parent(s_.n);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& g : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < s_.n; ++v) parent[find(parent, v)] = find(parent, g[v]);
        }
        const int root = find(parent, w);
        return std::any_of(explored.begin(), explored.end(), [&](int v) { return find(parent, v) == root; });
    }

    const ColoredStructure& s_;
    std::vector<std::vector<int>> lines_at_;
    std::vector<std::vector<int>> triples_at_;
    std::vector<int> best_;
    std::vector<int> best_labeling_;
    bool have_best_ = false;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

CanonicalForm canonical_form(const ColoredStructure& s) {
    Canonizer c(s);
    c.run();
    return c.form();
}

std::vector<std::vector<int>> automorphism_generators(const ColoredStructure& s) {
    Canonizer c(s);
    c.run();
    return c.automorphisms();
}

ColoredStructure colored(const LinearSpace& space, std::vector<int> colors) {
    ColoredStructure s;
    s.n = space.size();
    s.colors = colors.empty() ? std::vector<int>(s.n, 0) : std::move(colors);
    s.lines = space.lines();
    return s;
}

PointSet orbit_within(const ColoredStructure& s, int p, PointSet targets) {
    // p and u share an orbit iff individualising either gives the same form.
    const int mark = s.colors.empty() ? 1 : *std::max_element(s.colors.begin(), s.colors.end()) + 1;
    auto individualised = [&](int v) {
        ColoredStructure t = s;
        t.colors[v] = mark;
        return canonical_form(t).encoding;
    };
    const auto reference = individualised(p);
    PointSet out;
    for (int u : targets) {
        if (u == p || s.colors[u] != s.colors[p]) {
            if (u == p) out.insert(u);
            continue;
        }
        if (individualised(u) == reference) out.insert(u);
    }
    return out;
}

}  // namespace mikado
