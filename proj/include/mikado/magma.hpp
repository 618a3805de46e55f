#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mikado/galois_field.hpp"

namespace mikado {

/// A finite set {0..order-1} with one binary operation given by its table.
class FiniteMagma {
public:
    FiniteMagma() = default;
    /// Row-major table: entry x * order + y holds x*y. Entries must be < order.
    static FiniteMagma create(int order, std::vector<int> table);
    static FiniteMagma from_rows(const std::vector<std::vector<int>>& rows);
    template <class Op>
    static FiniteMagma tabulate(int order, Op op) {
        std::vector<int> table(static_cast<std::size_t>(order) * order);
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y) table[x * order + y] = op(x, y);
        return create(order, std::move(table));
    }

    int order() const { return order_; }
    int operator()(int x, int y) const { return table_[x * order_ + y]; }
    const std::vector<int>& table() const { return table_; }
    std::vector<std::vector<int>> rows() const;

    bool operator==(const FiniteMagma&) const = default;

private:
    FiniteMagma(int order, std::vector<int> table) : order_(order), table_(std::move(table)) {}

    int order_ = 0;
    std::vector<int> table_;
};

/// Every row and column is a permutation.
bool is_quasigroup(const FiniteMagma& m);
/// a*x = b and y*a = b have exactly one solution each, for all a, b.
bool is_uniquely_solvable(const FiniteMagma& m);
bool is_idempotent(const FiniteMagma& m);
bool is_commutative(const FiniteMagma& m);
/// Some element is a two-sided identity and the operation is associative
/// with inverses.
bool is_group(const FiniteMagma& m);

/// Least subset containing x and y closed under the operation, ascending.
std::vector<int> two_generated(const FiniteMagma& m, int x, int y);
/// Closure of an arbitrary generating set, ascending.
std::vector<int> generated(const FiniteMagma& m, const std::vector<int>& generators);

/// All table-preserving permutations (perm[x] is the image of x), sorted.
std::vector<std::vector<int>> automorphisms(const FiniteMagma& m);
/// |Aut| = n(n-1) and every ordered pair of distinct elements can be moved
/// to every other.
bool is_sharply_2_transitive(const FiniteMagma& m);

struct VarietyWitnessReport {
    bool ok = false;
    /// First failing check, empty when ok.
    std::string reason;
};

/// Finite witness for F2 of a (2, q)-variety: order q (a prime power), an
/// idempotent quasigroup, sharply 2-transitive, and generated by every pair
/// of distinct elements.
VarietyWitnessReport check_2q_variety_witness(const FiniteMagma& m, int q);
/// Same checks without the prime-power gate.
VarietyWitnessReport variety_witness_subchecks(const FiniteMagma& m);

/// x*y = y + (x - y)a over the field; throws NotPrimitive unless a generates
/// the multiplicative group.
FiniteMagma block_algebra(const GaloisField& field, int a);

/// x + y mod n.
FiniteMagma cyclic_group(int n);

/// Same operation with elements renamed by `perm`.
FiniteMagma relabel(const FiniteMagma& m, const std::vector<int>& perm);

/// The subalgebra on `elements` (closed under the operation), relabelled
/// 0..k-1 in the given order. Throws InvalidArgument when not closed.
FiniteMagma submagma(const FiniteMagma& m, const std::vector<int>& elements);

/// Whether some bijection carries one table onto the other.
bool isomorphic(const FiniteMagma& a, const FiniteMagma& b);

struct QuasigroupSearchStats {
    std::int64_t nodes = 0;
    std::int64_t complete_tables = 0;
};

/// Visits idempotent quasigroups of the given order. Up to isomorphism only:
/// the first row is a fixed representative of its cycle type and every row and
/// column is required to have that cycle type, which holds whenever the
/// automorphism group is transitive. The visitor returns false to stop.
/// Complete tables passed to the visitor still need their own checks.
void search_transitive_idempotent_quasigroups(int order, const std::function<bool(const FiniteMagma&)>& visit,
                                              QuasigroupSearchStats* stats = nullptr);

/// First sharply 2-transitive idempotent quasigroup of the order found by
/// the search above, if any.
std::optional<FiniteMagma> find_sharply_2_transitive_idempotent_quasigroup(int order,
                                                                         QuasigroupSearchStats* stats = nullptr);

}  // namespace mikado
