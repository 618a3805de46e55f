#include "mikado/predimension.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mikado/error.hpp"

namespace mikado {

int delta(const LinearSpace& space, PointSet subset) {
    int value = subset.size();
    for (PointSet l : space.lines()) {
        const int k = (l & subset).size();
        if (k > 2) value -= k - 2;
    }
    return value;
}

int delta(const LinearSpace& space) { return delta(space, space.universe()); }

int delta_rel(const LinearSpace& space, PointSet base) {
    return delta(space) - delta(space, base);
}

int delta_gain(const LinearSpace& space, PointSet subset, int p) {
    int gain = 1;
    for (int li : space.lines_through(p)) {
        if ((space.lines()[li] & subset).size() >= 2) --gain;
    }
    return gain;
}

namespace {

/// Dinic max-flow on a small dense-ish graph.
class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : adj_(nodes), level_(nodes), cursor_(nodes) {}

    void add_edge(int from, int to, long long cap) {
        adj_[from].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, cap});
        adj_[to].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0});
    }

    long long max_flow(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            std::fill(cursor_.begin(), cursor_.end(), 0);
            while (long long pushed = dfs(s, t, kInf)) total += pushed;
        }
        return total;
    }

    /// Nodes reachable from s in the residual graph (after max_flow).
    std::vector<bool> source_side(int s) const {
        std::vector<bool> seen(adj_.size(), false);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int e : adj_[u]) {
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = true;
                    stack.push_back(edges_[e].to);
                }
            }
        }
        return seen;
    }

    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

private:
    struct Edge {
        int to;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e : adj_[u]) {
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
            }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& i = cursor_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
            Edge& e = edges_[adj_[u][i]];
            if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
            if (long long pushed = dfs(e.to, t, std::min(limit, e.cap))) {
                e.cap -= pushed;
                edges_[adj_[u][i] ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<int> cursor_;
};

// delta(X) = sum_p x_p (1 - deg p) + sum_l min(|l & X|, 2), and
// min(k, 2) = min_y [2y + k(1 - y)], so the minimisation is a cut problem:
// point on the source side <=> in X, line on the source side <=> y = 1.
PointSet min_cut_minimiser(const LinearSpace& space, PointSet lower, PointSet upper) {
    std::vector<PointSet> traces;
    for (PointSet l : space.lines()) {
        const PointSet t = l & upper;
        if (t.size() >= 3) traces.push_back(t);
    }
    const int n = space.size();
    const int s = 0;
    const int t = 1;
    auto point_node = [](int p) { return 2 + p; };
    FlowNetwork net(2 + n + static_cast<int>(traces.size()));

    std::vector<int> degree(n, 0);
    for (std::size_t j = 0; j < traces.size(); ++j) {
        const int line_node = 2 + n + static_cast<int>(j);
        for (int p : traces[j]) {
            ++degree[p];
            net.add_edge(point_node(p), line_node, 1);
        }
        net.add_edge(line_node, t, 2);
    }
    for (int p : upper) {
        if (lower.contains(p)) {
            net.add_edge(s, point_node(p), FlowNetwork::kInf);
            continue;
        }
        const int w = 1 - degree[p];
        if (w > 0) net.add_edge(point_node(p), t, w);
        if (w < 0) net.add_edge(s, point_node(p), -w);
    }
    net.max_flow(s, t);
    const auto side = net.source_side(s);
    PointSet x;
    for (int p : upper) {
        if (side[point_node(p)]) x.insert(p);
    }
    return x | lower;
}

class BranchAndBound {
public:
    BranchAndBound(const LinearSpace& space, PointSet lower, PointSet upper)
        : space_(space) {
        free_ = (upper - lower).to_vector();
        std::reverse(free_.begin(), free_.end());
        lower_ = lower;
    }

    PointSet run() {
        search(0, lower_, delta(space_, lower_), PointSet::of(free_));
        return best_set_;
    }

private:
    // Points of `undecided` are still open; decisions go from the highest
    // index down and try exclusion first, so leaves arrive in increasing
    // bit-mask order and the first leaf at a value is the least mask.
    void search(std::size_t depth, PointSet in, int in_delta, PointSet undecided) {
        // A point with no helpful line even when everything open is present
        // can never lower delta.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int p : undecided) {
                if (delta_gain(space_, in | (undecided - PointSet::single(p)), p) >= 1) {
                    undecided.erase(p);
                    changed = true;
                }
            }
        }
        int bound = in_delta;
        for (int p : undecided) {
            bound += std::min(0, delta_gain(space_, in | (undecided - PointSet::single(p)), p));
        }
        if (bound >= best_) return;

        while (depth < free_.size() && !undecided.contains(free_[depth])) ++depth;
        if (depth == free_.size()) {
            best_ = in_delta;
            best_set_ = in;
            return;
        }
        const int p = free_[depth];
        const PointSet rest = undecided - PointSet::single(p);
        search(depth + 1, in, in_delta, rest);
        search(depth + 1, in | PointSet::single(p), in_delta + delta_gain(space_, in, p), rest);
    }

    const LinearSpace& space_;
    std::vector<int> free_;
    PointSet lower_;
    int best_ = std::numeric_limits<int>::max();
    PointSet best_set_;
};

}  // namespace

PredimensionReport min_delta_between(const LinearSpace& space, PointSet lower, PointSet upper,
                                     MinStrategy strategy) {
    upper &= space.universe();
    if (!lower.subset_of(upper)) throw Error(Errc::InvalidArgument, "lower bound is not inside upper bound");
    PredimensionReport report;
    report.witness = strategy == MinStrategy::MinCut ? min_cut_minimiser(space, lower, upper)
                                                     : BranchAndBound(space, lower, upper).run();
    report.value = delta(space, report.witness);
    for (PointSet l : space.lines()) {
        const PointSet t = l & report.witness;
        if (t.size() >= 3) report.breakdown.push_back({t, t.size() - 2});
    }
    return report;
}

PredimensionReport dim(const LinearSpace& space, PointSet subset, MinStrategy strategy) {
    return min_delta_between(space, subset, space.universe(), strategy);
}

PointSet closure(const LinearSpace& space, PointSet subset) { return dim(space, subset).witness; }

bool is_strong(const LinearSpace& space, PointSet base) {
    return dim(space, base).value == delta(space, base);
}

bool in_K0(const LinearSpace& space) { return dim(space, PointSet{}).value >= 0; }

}  // namespace mikado
