#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mikado/extension.hpp"
#include "mikado/linear_space.hpp"
#include "mikado/magma.hpp"

namespace mikado {

struct CoordinatizePolicy {
    enum class Kind { Canonical, Seeded };
    Kind kind = Kind::Canonical;
    std::uint64_t seed = 0;

    static CoordinatizePolicy canonical() { return {Kind::Canonical, 0}; }
    static CoordinatizePolicy seeded(std::uint64_t s) { return {Kind::Seeded, s}; }
};

/// The copy of F2 placed on one line: `elements[i]` is the F2 element given
/// to the i-th point of the line in increasing point order.
struct LineChoice {
    PointSet line;
    std::vector<int> elements;
};

/// An operation on the points of a Steiner system, one copy of F2 per line.
struct CoordinatizedAlgebra {
    std::vector<std::string> names;
    FiniteMagma magma;
    std::vector<LineChoice> provenance;
};

/// x*x = x, and for x != y the product is taken inside their line through
/// the chosen bijection with F2. Canonical maps the sorted line to 0..q-1;
/// seeded draws a bijection per line.
/// Throws NotSteiner unless every pair is on a |F2|-point line, BadWitness
/// when F2 fails the variety witness checks.
CoordinatizedAlgebra coordinatize(const LinearSpace& space, const FiniteMagma& f2,
                                  CoordinatizePolicy policy = CoordinatizePolicy::canonical());

/// Lines are the 2-generated subalgebras. Throws UnevenBlocks when these
/// differ in size or one fails the variety witness checks. Names default to
/// "0".."n-1".
LinearSpace gamma_extract(const FiniteMagma& q, std::vector<std::string> names = {});

/// x*x = x and x*y = the third point of the line; NotSteiner3 unless every
/// pair is on a 3-point line.
FiniteMagma derive_steiner_mult(const LinearSpace& space);

/// Extends every line to exactly q points with fresh points lying on no
/// other line. Throws LineTooLong for a line longer than q.
LinearSpace complete_lines(const LinearSpace& space, int q);

/// A linear space whose lines all have q points, with a quasigroup H on each
/// line: triples (x, y, x*y) for x, y on a common line, and (x, x, x) for
/// every point on a line.
class TauPrimeStructure {
public:
    /// Throws InvalidArgument when H is not an idempotent quasigroup on every
    /// line, mentions pairs off the lines, or lines differ in size.
    static TauPrimeStructure create(LinearSpace space, std::vector<Triple> h);

    const LinearSpace& space() const { return space_; }
    /// Sorted.
    const std::vector<Triple>& h() const { return h_; }
    /// Common line size, 0 without lines.
    int q() const { return q_; }

    /// The operation restricted to one line as a magma on its points in
    /// increasing order.
    FiniteMagma line_magma(int line_index) const;

    bool operator==(const TauPrimeStructure& o) const { return space_ == o.space_ && h_ == o.h_; }

private:
    TauPrimeStructure(LinearSpace space, std::vector<Triple> h, int q)
        : space_(std::move(space)), h_(std::move(h)), q_(q) {}

    LinearSpace space_;
    std::vector<Triple> h_;
    int q_ = 0;
};

/// Each line's quasigroup is isomorphic to F2.
bool lines_isomorphic_to(const TauPrimeStructure& s, const FiniteMagma& f2);

/// Canonical isomorphism code of the structure with H; base points are
/// coloured apart when given.
std::vector<int> tau_prime_code(const TauPrimeStructure& s, PointSet base = {});

/// Every way of putting a copy of F2 on each line, one representative per
/// isomorphism class, sorted by canonical code. Throws UnevenLines unless all
/// lines have |F2| points, TooLarge above 8 lines.
std::vector<TauPrimeStructure> enumerate_expansions(const LinearSpace& completed, const FiniteMagma& f2);

/// Lines recovered as closures of pairs under the partial operation H.
LinearSpace reduct_R_from_H(const TauPrimeStructure& s);

/// The coordinatized algebra viewed as an H-expansion of its source.
TauPrimeStructure tau_prime_view(const LinearSpace& space, const CoordinatizedAlgebra& algebra);

struct TauPrimePair {
    TauPrimeStructure ambient;
    PointSet base;
};

/// 1 when the reduct is a full mu.q()-point line over two of its points,
/// otherwise mu of the reduct pair (NotGood unless the reduct is good).
int derive_mu_prime(const MuFunction& mu, const TauPrimePair& pair);

/// Whether every automorphism of `space` fixing a and b also fixes a*b.
bool invariance_orbit_check(const LinearSpace& space, int a, int b, const CoordinatizedAlgebra& algebra);

}  // namespace mikado
