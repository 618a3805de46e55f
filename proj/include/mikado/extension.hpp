#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mikado/linear_space.hpp"

namespace mikado {

/// A pair (A/B): an ambient linear space A, a base B and the non-empty
/// annulus C = A - B. The code is a canonical isomorphism invariant of the
/// base/annulus-coloured structure.
class ExtensionPair {
public:
    static ExtensionPair create(LinearSpace ambient, PointSet base);
    static ExtensionPair create(LinearSpace ambient, const std::vector<std::string>& base_names);

    const LinearSpace& ambient() const { return ambient_; }
    PointSet base() const { return base_; }
    PointSet annulus() const { return ambient_.universe() - base_; }
    const std::string& code() const { return code_; }

    bool operator==(const ExtensionPair& o) const {
        return ambient_ == o.ambient_ && base_ == o.base_;
    }

private:
    ExtensionPair(LinearSpace ambient, PointSet base, std::string code)
        : ambient_(std::move(ambient)), base_(base), code_(std::move(code)) {}

    LinearSpace ambient_;
    PointSet base_;
    std::string code_;
};

/// Canonical code of the pair (base / annulus) inside `space`; the ambient
/// is the substructure induced on base | annulus.
///
/// Format: "<|B|>+<|C|>:" followed by the lines of the canonically relabelled
/// structure, points joined by '.', lines by ','. Base points take labels
/// 0..|B|-1.
std::string pair_code(const LinearSpace& space, PointSet base, PointSet annulus);

/// Rebuilds a representative pair from its code (points named by label).
ExtensionPair decode_pair(std::string_view code);

/// The pair ({b1, b2}, {a}) with R(b1, b2, a).
ExtensionPair alpha_pair();
/// A k-point line over two of its points.
ExtensionPair line_over_two(int k);
/// (eta - {a} / {a}).
ExtensionPair eta_pair();

struct Classification {
    enum class Kind { NotStrong, Primitive, Decomposable };
    Kind kind = Kind::NotStrong;
    /// delta(A/B); meaningful for Primitive and Decomposable.
    int k = 0;

    std::string to_string() const;
    bool operator==(const Classification&) const = default;
};

/// Strong, k-primitive or decomposable. Uses the fact that an intermediate
/// strong set exists iff the closure of B + c inside A is proper for some
/// annulus point c.
Classification classify(const LinearSpace& space, PointSet base);

/// classify(...) is Primitive with k = 0.
bool is_zero_primitive(const LinearSpace& space, PointSet base);

/// Requires a 0-primitive pair (NotPrimitive otherwise). Good iff no proper
/// subset of the base leaves the annulus 0-primitive over it.
bool is_good(const LinearSpace& space, PointSet base);

/// Subsets B' of the base over which the annulus is good.
std::vector<PointSet> find_bases(const LinearSpace& space, PointSet base);

/// 0-primitive and good, without throwing.
bool is_good_pair(const LinearSpace& space, PointSet base);

/// Annulus images of all copies of the pair over the embedded base inside
/// `host`. `base_image[i]` is the host point for the i-th base point in index
/// order. Copies are counted as sets of host points.
std::vector<PointSet> annulus_copies(const LinearSpace& host, const ExtensionPair& pair,
                                     const std::vector<int>& base_image);

/// Maximum number of pairwise disjoint annulus copies.
int chi(const LinearSpace& host, const ExtensionPair& pair, const std::vector<int>& base_image);

/// Size of a largest pairwise-disjoint subfamily.
int max_disjoint(std::vector<PointSet> sets);

/// Every isomorphism of the base onto an induced substructure of `host`.
std::vector<std::vector<int>> base_embeddings(const LinearSpace& host, const ExtensionPair& pair);

/// Annulus points fixed by every automorphism fixing the base pointwise.
PointSet determined_points(const ExtensionPair& pair);

enum class MuRule { FloorDelta, Constant };
enum class MuClass { U, T, C };

std::string_view mu_class_name(MuClass c);

/// Largest ambient size of the abstract good-pair catalogue used to verify
/// class flags of a MuFunction.
inline constexpr int kFlagCatalogBound = 6;

/// A bound on the number of disjoint copies of each good-pair type: a finite
/// override table, the line-length rule mu(alpha) = q - 2 and a default rule.
class MuFunction {
public:
    /// Throws InvalidArgument for q < 3 or a bad override, FlagViolation when
    /// a claimed class flag fails on the override pairs or on the catalogue of
    /// good pairs with at most `catalog_bound` points.
    static MuFunction create(int q, MuRule rule = MuRule::FloorDelta, int constant = 0,
                             std::map<std::string, int> overrides = {}, std::set<MuClass> flags = {},
                             int catalog_bound = kFlagCatalogBound);

    int q() const { return q_; }
    MuRule rule() const { return rule_; }
    int constant() const { return constant_; }
    /// "floor-delta" or "constant-<c>".
    std::string rule_name() const;
    const std::map<std::string, int>& overrides() const { return overrides_; }
    const std::set<MuClass>& flags() const { return flags_; }

    /// Value for a good pair given its code and delta(base); no goodness check.
    int value(const std::string& code, int base_delta) const;

    bool operator==(const MuFunction&) const = default;

private:
    MuFunction() = default;

    int q_ = 3;
    MuRule rule_ = MuRule::FloorDelta;
    int constant_ = 0;
    std::map<std::string, int> overrides_;
    std::set<MuClass> flags_;
};

/// Parses "floor-delta" or "constant-<c>".
std::pair<MuRule, int> parse_mu_rule(std::string_view name);

/// mu of a good pair (NotGood otherwise).
int mu_eval(const MuFunction& mu, const ExtensionPair& pair);

/// Flag conditions that fail for `pair` under `mu`, as human-readable text.
std::vector<std::string> flag_violations(const MuFunction& mu, const ExtensionPair& pair);

/// Iso types of good pairs whose ambient is in K0 and has at most
/// `max_ambient` points, sorted by code. Cached per bound.
const std::vector<ExtensionPair>& good_pair_catalog(int max_ambient);

struct RealizedPair {
    PointSet base;
    PointSet annulus;
    std::string code;
};

struct KMuOptions {
    /// Largest |B| + |C| of the good pairs enumerated inside the host.
    int max_ambient = 8;
    /// When non-empty, only pairs whose points meet this set are enumerated.
    PointSet focus;
};

/// Good pairs (B, C) realised inside `host` up to the size bound.
std::vector<RealizedPair> realized_good_pairs(const LinearSpace& host, const KMuOptions& options = {});

struct KMuViolation {
    ExtensionPair pair;
    PointSet base;
    int chi;
    int bound;
};

struct KMuReport {
    bool ok = true;
    std::optional<KMuViolation> violation;
    int pairs_checked = 0;
};

/// chi <= mu for every good pair realised in `host` within the bound.
KMuReport in_K_mu(const LinearSpace& host, const MuFunction& mu, const KMuOptions& options = {});

}  // namespace mikado
