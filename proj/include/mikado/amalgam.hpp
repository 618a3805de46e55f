#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mikado/extension.hpp"
#include "mikado/linear_space.hpp"

namespace mikado {

/// Two structures glued along a shared substructure. Points are matched by
/// name: the shared points are exactly the names common to both sides.
struct AmalgamInput {
    LinearSpace left;
    LinearSpace right;
    LinearSpace shared;
};

/// Free amalgam over the shared part. Lines of either side with two points
/// in the shared part are fused into one line. Points of `left` keep their
/// order and the new points of `right` follow.
///
/// Throws NotCompatible when the shared part is not the common part of both
/// sides, not induced in both, or one of the three is outside K0.
LinearSpace amalgam(const AmalgamInput& input);

enum class GrowthOutcome { Accept, Reject };

struct GrowthStep {
    std::string pair_code;
    /// Host names of the base image, in base index order.
    std::vector<std::string> base;
    GrowthOutcome outcome = GrowthOutcome::Reject;
};

struct GrowthTrace {
    std::vector<GrowthStep> steps;
    /// Structure after each accepted step; front() is the seed.
    std::vector<LinearSpace> states;
    LinearSpace result;
    std::uint64_t seed = 0;
    int budget = 0;

    /// One line per step: `step <n> pair=<code> base=<p,q,...> outcome=<accept|reject>`.
    std::string log() const;
};

struct GrowthOptions {
    /// Bound passed to the incremental K_mu checks.
    int max_ambient = 8;
};

/// Bounded generic growth: repeatedly attaches a fresh copy of a catalogue
/// pair over a strong base image that has fewer than mu copies, keeping the
/// step only if the result stays in K0 and K_mu. Stops at `budget` points or
/// when no attachment is accepted.
///
/// Throws SeedNotInClass for a seed outside K0 or K_mu and NotGood for a
/// catalogue entry that is not a good pair.
GrowthTrace generic_grow(const LinearSpace& seed, const MuFunction& mu, int budget,
                         const std::vector<ExtensionPair>& catalog, std::uint64_t rng_seed,
                         const GrowthOptions& options = {});

/// A nested chain base <= middle <= space inside one structure.
struct SmoothnessSample {
    LinearSpace space;
    PointSet middle;
    PointSet base;
};

/// Indices of samples where the base is strong in the whole space but not in
/// the middle set.
std::vector<std::size_t> smoothness_check(const std::vector<SmoothnessSample>& samples);

}  // namespace mikado
