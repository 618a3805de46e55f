#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mikado/point_set.hpp"

namespace mikado {

using Triple = std::array<int, 3>;
using NamedTriple = std::array<std::string, 3>;

/// A non-trivial line: a maximal collinearity clique of at least 3 points.
struct Line {
    PointSet members;
    int nullity() const { return members.size() - 2; }
    bool operator==(const Line&) const = default;
};

/// A finite linear space: points with a set-like ternary collinearity
/// relation in which two points lie on at most one line.
///
/// Points are stored as indices 0..n-1 with external names. The relation is
/// kept as its set of non-trivial lines; a triple holds exactly when its three
/// points share a line. Values are immutable once built.
class LinearSpace {
public:
    LinearSpace() = default;

    /// Validates raw input: every triple must consist of three distinct
    /// declared points, and triples sharing a pair must close up into cliques.
    static LinearSpace create(std::vector<std::string> points,
                              const std::vector<NamedTriple>& triples);
    static LinearSpace create(std::vector<std::string> points, const std::vector<Triple>& triples);
    /// Points named "0".."n-1".
    static LinearSpace create(int n, const std::vector<Triple>& triples);

    /// Builds from explicit lines (each of size >= 3, pairwise meeting in at
    /// most one point).
    static LinearSpace from_lines(std::vector<std::string> points, std::vector<PointSet> lines);
    static LinearSpace from_lines(int n, std::vector<PointSet> lines);

    int size() const { return static_cast<int>(names_.size()); }
    PointSet universe() const { return PointSet::range(size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int p) const { return names_[p]; }
    std::optional<int> index_of(const std::string& name) const;

    /// Non-trivial lines, sorted by member lists.
    const std::vector<PointSet>& lines() const { return lines_; }
    /// Indices into lines() of the lines through p.
    const std::vector<int>& lines_through(int p) const { return incidence_[p]; }
    /// Index of the non-trivial line through distinct points a, b, or -1.
    int line_index(int a, int b) const { return pair_line_[a * size() + b]; }
    std::optional<PointSet> line_through(int a, int b) const;
    bool collinear(int a, int b, int c) const;
    /// Points sharing a non-trivial line with p (p excluded).
    PointSet neighbours(int p) const { return neighbours_[p]; }

    /// All triples of the relation, each once in increasing order.
    std::vector<Triple> triples() const;

    bool operator==(const LinearSpace& other) const {
        return names_ == other.names_ && lines_ == other.lines_;
    }

private:
    LinearSpace(std::vector<std::string> names, std::vector<PointSet> lines);

    std::vector<std::string> names_;
    std::vector<PointSet> lines_;
    std::vector<std::int16_t> pair_line_;
    std::vector<std::vector<int>> incidence_;
    std::vector<PointSet> neighbours_;
};

std::vector<Line> lines_of(const LinearSpace& space);

/// Lines meeting `subset` in at least two points.
std::vector<Line> lines_based_in(const LinearSpace& space, PointSet subset);

/// Substructure on `subset`, renumbered in increasing index order with names
/// kept. A clique maximal there need not be maximal in `space`.
LinearSpace induced(const LinearSpace& space, PointSet subset);

/// Every pair of points is on a line and every line has exactly k points.
bool is_steiner_k(const LinearSpace& space, int k);

/// The 12-point structure on {a, b, c, d1..d9}: nine 3-point lines and the
/// 4-line {c, d8, d9, d4}. d9 lies on that line only.
LinearSpace build_eta();

/// The Fano plane on points "0".."6".
LinearSpace build_fano();

/// A single line on the given number of points, named "0".."k-1".
LinearSpace build_line(int k);

/// Names of the points of `subset`, in index order.
std::vector<std::string> names_of(const LinearSpace& space, PointSet subset);

/// Resolves names to a point set; throws InvalidArgument on unknown names.
PointSet subset_of_names(const LinearSpace& space, const std::vector<std::string>& names);

/// Generator for fresh point names: decimal integers above every numeric name
/// already present.
class FreshNames {
public:
    explicit FreshNames(const std::vector<std::string>& existing);
    std::string next();

private:
    long long next_ = 0;
};

}  // namespace mikado
