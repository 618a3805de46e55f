#include "mikado/magma.hpp"

#include <algorithm>
#include <numeric>

#include "mikado/error.hpp"

namespace mikado {

FiniteMagma FiniteMagma::create(int order, std::vector<int> table) {
    if (order < 1) throw Error(Errc::InvalidArgument, "a magma needs at least one element");
    if (table.size() != static_cast<std::size_t>(order) * order) {
        throw Error(Errc::InvalidArgument, "table must have order^2 entries");
    }
    for (int v : table) {
        if (v < 0 || v >= order) throw Error(Errc::InvalidArgument, "table entry out of range");
    }
    return FiniteMagma(order, std::move(table));
}

FiniteMagma FiniteMagma::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> table;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidArgument, "table must be square");
        table.insert(table.end(), row.begin(), row.end());
    }
    return create(n, std::move(table));
}

std::vector<std::vector<int>> FiniteMagma::rows() const {
    std::vector<std::vector<int>> out(order_);
    for (int x = 0; x < order_; ++x) out[x].assign(table_.begin() + x * order_, table_.begin() + (x + 1) * order_);
    return out;
}

bool is_quasigroup(const FiniteMagma& m) {
    const int n = m.order();
    for (int a = 0; a < n; ++a) {
        std::vector<bool> row(n, false);
        std::vector<bool> col(n, false);
        for (int b = 0; b < n; ++b) {
            if (row[m(a, b)] || col[m(b, a)]) return false;
            row[m(a, b)] = true;
            col[m(b, a)] = true;
        }
    }
    return true;
}

bool is_uniquely_solvable(const FiniteMagma& m) {
    const int n = m.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int right = 0;
            int left = 0;
            for (int x = 0; x < n; ++x) {
                right += m(a, x) == b;
                left += m(x, a) == b;
            }
            if (right != 1 || left != 1) return false;
        }
    return true;
}

bool is_idempotent(const FiniteMagma& m) {
    for (int x = 0; x < m.order(); ++x) {
        if (m(x, x) != x) return false;
    }
    return true;
}

bool is_commutative(const FiniteMagma& m) {
    for (int x = 0; x < m.order(); ++x)
        for (int y = x + 1; y < m.order(); ++y) {
            if (m(x, y) != m(y, x)) return false;
        }
    return true;
}

bool is_group(const FiniteMagma& m) {
    const int n = m.order();
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = m(e, x) == x && m(x, e) == x;
        if (ok) identity = e;
    }
    if (identity < 0 || !is_quasigroup(m)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (m(m(x, y), z) != m(x, m(y, z))) return false;
            }
    return true;
}

std::vector<int> generated(const FiniteMagma& m, const std::vector<int>& generators) {
    std::vector<bool> in(m.order(), false);
    std::vector<int> members;
    for (int g : generators) {
        if (g < 0 || g >= m.order()) throw Error(Errc::InvalidArgument, "element out of range");
        if (!in[g]) {
            in[g] = true;
            members.push_back(g);
        }
    }
    for (std::size_t done = 0; done < members.size(); ++done) {
        const int a = members[done];
        for (std::size_t j = 0; j <= done; ++j) {
            const int b = members[j];
            for (int z : {m(a, b), m(b, a)}) {
                if (!in[z]) {
                    in[z] = true;
                    members.push_back(z);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<int> two_generated(const FiniteMagma& m, int x, int y) { return generated(m, {x, y}); }

namespace {

/// Enumerates bijective homomorphisms from `a` onto `b` by choosing images
/// of a generating set and propagating through products.
class IsoSearch {
public:
    IsoSearch(const FiniteMagma& a, const FiniteMagma& b) : a_(a), b_(b) {
        std::vector<int> gens;
        for (int e = 0; e < a.order(); ++e) {
            const auto closure = generated(a, gens);
            if (!std::binary_search(closure.begin(), closure.end(), e)) gens.push_back(e);
        }
        gens_ = std::move(gens);
    }

    /// Visitor returns false to stop.
    template <class Visit>
    void run(Visit&& visit) {
        if (a_.order() != b_.order()) return;
        std::vector<int> map(a_.order(), -1);
        std::vector<bool> used(b_.order(), false);
        stop_ = false;
        extend(0, map, used, visit);
    }

private:
    bool propagate(std::vector<int>& map, std::vector<bool>& used) const {
        const int n = a_.order();
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (map[x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (map[y] < 0) continue;
                    const int z = a_(x, y);
                    const int fz = b_(map[x], map[y]);
                    if (map[z] < 0) {
                        if (used[fz]) return false;
                        map[z] = fz;
                        used[fz] = true;
                        changed = true;
                    } else if (map[z] != fz) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    template <class Visit>
    void extend(std::size_t i, const std::vector<int>& map, const std::vector<bool>& used, Visit& visit) {
        if (stop_) return;
        if (i == gens_.size()) {
            if (std::find(map.begin(), map.end(), -1) == map.end()) stop_ = !visit(map);
            return;
        }
        const int g = gens_[i];
        if (map[g] >= 0) {
            extend(i + 1, map, used, visit);
            return;
        }
        for (int image = 0; image < b_.order() && !stop_; ++image) {
            if (used[image]) continue;
            std::vector<int> next_map(map);
            std::vector<bool> next_used(used);
            next_map[g] = image;
            next_used[image] = true;
            if (propagate(next_map, next_used)) extend(i + 1, next_map, next_used, visit);
        }
    }

    const FiniteMagma& a_;
    const FiniteMagma& b_;
    std::vector<int> gens_;
    bool stop_ = false;
};

}  // namespace

std::vector<std::vector<int>> automorphisms(const FiniteMagma& m) {
    std::vector<std::vector<int>> out;
    IsoSearch(m, m).run([&](const std::vector<int>& perm) {
        out.push_back(perm);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_sharply_2_transitive(const FiniteMagma& m) {
    const int n = m.order();
    if (n < 2) return false;
    const long long target = static_cast<long long>(n) * (n - 1);
    long long count = 0;
    std::vector<bool> reached(static_cast<std::size_t>(n) * n, false);
    IsoSearch(m, m).run([&](const std::vector<int>& perm) {
        ++count;
        reached[perm[0] * n + perm[1]] = true;
        return count <= target;
    });
    if (count != target) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x != y && !reached[x * n + y]) return false;
        }
    return true;
}

bool isomorphic(const FiniteMagma& a, const FiniteMagma& b) {
    bool found = false;
    IsoSearch(a, b).run([&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

VarietyWitnessReport variety_witness_subchecks(const FiniteMagma& m) {
    if (!is_quasigroup(m)) return {false, "not a quasigroup"};
    if (!is_idempotent(m)) return {false, "not idempotent"};
    if (!is_sharply_2_transitive(m)) return {false, "automorphism group is not sharply 2-transitive"};
    for (int x = 0; x < m.order(); ++x)
        for (int y = x + 1; y < m.order(); ++y) {
            if (static_cast<int>(two_generated(m, x, y).size()) != m.order()) {
                return {false, "elements " + std::to_string(x) + " and " + std::to_string(y) +
                                   " generate a proper subalgebra"};
            }
        }
    return {true, ""};
}

VarietyWitnessReport check_2q_variety_witness(const FiniteMagma& m, int q) {
    if (prime_power_base(q) == 0) return {false, std::to_string(q) + " is not a prime power"};
    if (m.order() != q) return {false, "order is " + std::to_string(m.order()) + ", expected " + std::to_string(q)};
    return variety_witness_subchecks(m);
}

FiniteMagma block_algebra(const GaloisField& field, int a) {
    if (a <= 0 || a >= field.order() || field.multiplicative_order(a) != field.order() - 1) {
        throw Error(Errc::NotPrimitive, "element " + std::to_string(a) + " is not primitive");
    }
    return FiniteMagma::tabulate(field.order(),
                                 [&](int x, int y) { return field.add(y, field.mul(field.sub(x, y), a)); });
}

FiniteMagma cyclic_group(int n) {
    return FiniteMagma::tabulate(n, [n](int x, int y) { return (x + y) % n; });
}

FiniteMagma relabel(const FiniteMagma& m, const std::vector<int>& perm) {
    const int n = m.order();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[m(x, y)];
    return FiniteMagma::create(n, std::move(table));
}

FiniteMagma submagma(const FiniteMagma& m, const std::vector<int>& elements) {
    std::vector<int> index(m.order(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
    const int k = static_cast<int>(elements.size());
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const int z = index[m(elements[i], elements[j])];
            if (z < 0) throw Error(Errc::InvalidArgument, "subset is not closed under the operation");
            table[i * k + j] = z;
        }
    return FiniteMagma::create(k, std::move(table));
}

namespace {

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<int> lengths;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

void partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(n, max_part); part >= 2; --part) {
        current.push_back(part);
        partitions(n - part, part, current, out);
        current.pop_back();
    }
}

class LatinFill {
public:
    LatinFill(int n, std::vector<int> first_row, const std::function<bool(const FiniteMagma&)>& visit,
              QuasigroupSearchStats* stats)
        : n_(n), table_(static_cast<std::size_t>(n) * n, -1), col_used_(n, 0), visit_(visit), stats_(stats) {
        for (int y = 0; y < n; ++y) {
            table_[y] = first_row[y];
            col_used_[y] |= 1u << first_row[y];
        }
        row_type_ = cycle_type(first_row);
        for (int x = 1; x < n; ++x) {
            table_[x * n + x] = x;
            col_used_[x] |= 1u << x;
        }
    }

    bool run() { return cell(1, 0, 1u << 1); }

private:
    bool cell(int x, int y, std::uint32_t row_used) {
        if (stats_) ++stats_->nodes;
        if (y == n_) {
            std::vector<int> row(table_.begin() + x * n_, table_.begin() + (x + 1) * n_);
            if (cycle_type(row) != row_type_) return true;
            if (x + 1 == n_) return leaf();
            return cell(x + 1, 0, 1u << (x + 1));
        }
        if (y == x) return cell(x, y + 1, row_used);
        for (int v = 0; v < n_; ++v) {
            const std::uint32_t bit = 1u << v;
            if ((row_used & bit) || (col_used_[y] & bit)) continue;
            table_[x * n_ + y] = v;
            col_used_[y] |= bit;
            const bool go_on = cell(x, y + 1, row_used | bit);
            col_used_[y] &= ~bit;
            table_[x * n_ + y] = -1;
            if (!go_on) return false;
        }
        return true;
    }

    bool leaf() {
        std::vector<int> column_type;
        for (int y = 0; y < n_; ++y) {
            std::vector<int> col(n_);
            for (int x = 0; x < n_; ++x) col[x] = table_[x * n_ + y];
            const auto type = cycle_type(col);
            if (y == 0) column_type = type;
            else if (type != column_type) return true;
        }
        if (stats_) ++stats_->complete_tables;
        return visit_(FiniteMagma::create(n_, table_));
    }

    int n_;
    std::vector<int> table_;
    std::vector<std::uint32_t> col_used_;
    std::vector<int> row_type_;
    const std::function<bool(const FiniteMagma&)>& visit_;
    QuasigroupSearchStats* stats_;
};

}  // namespace

void search_transitive_idempotent_quasigroups(int order, const std::function<bool(const FiniteMagma&)>& visit,
                                              QuasigroupSearchStats* stats) {
    if (order < 1 || order > 16) throw Error(Errc::TooLarge, "search is limited to orders 1..16");
    if (order == 1) {
        visit(FiniteMagma::create(1, {0}));
        return;
    }
    // Row 0 fixes 0 and deranges the rest; conjugating by a relabelling
    // that fixes 0 brings it to consecutive cycles of non-increasing length.
    std::vector<std::vector<int>> types;
    std::vector<int> current;
    partitions(order - 1, order - 1, current, types);
    for (const auto& type : types) {
        std::vector<int> row(order);
        row[0] = 0;
        int start = 1;
        for (int len : type) {
            for (int i = 0; i < len; ++i) row[start + i] = start + (i + 1) % len;
            start += len;
        }
        if (!LatinFill(order, row, visit, stats).run()) return;
    }
}

std::optional<FiniteMagma> find_sharply_2_transitive_idempotent_quasigroup(int order, QuasigroupSearchStats* stats) {
    std::optional<FiniteMagma> found;
    search_transitive_idempotent_quasigroups(
        order,
        [&](const FiniteMagma& m) {
            if (is_sharply_2_transitive(m)) {
                found = m;
                return false;
            }
            return true;
        },
        stats);
    return found;
}

}  // namespace mikado
