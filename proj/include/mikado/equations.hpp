#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mikado/magma.hpp"

namespace mikado {

/// A term over the variables x (0) and y (1) and one binary operation,
/// stored as a node list with the root last.
class Term {
public:
    static Term var(int v);
    static Term op(const Term& left, const Term& right);

    int eval(const FiniteMagma& m, int x, int y) const;
    int depth() const;
    /// Fully parenthesised, e.g. "(x*y)*y".
    std::string to_string() const;

    bool operator==(const Term&) const = default;

private:
    struct Node {
        int var = -1;
        int left = -1;
        int right = -1;
        bool operator==(const Node&) const = default;
    };
    std::string render(int node) const;

    std::vector<Node> nodes_;
};

struct Equation {
    Term lhs;
    Term rhs;
    std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

/// Equations in at most two variables.
class EquationSet {
public:
    /// Equations separated by ';' or newlines, e.g. "x*x = x; (x*y)*y = y*x".
    /// Variables are single identifiers; juxtaposition is not accepted.
    /// Throws ParseError, or InvalidArgument for more than two variables.
    static EquationSet parse(std::string_view text);

    static EquationSet steiner();
    static EquationSet stein();
    static EquationSet idempotent();
    static EquationSet commutative();

    const std::vector<Equation>& equations() const { return equations_; }

private:
    std::vector<Equation> equations_;
};

struct Counterexample {
    std::size_t equation = 0;
    int x = 0;
    int y = 0;
    int lhs = 0;
    int rhs = 0;
};

/// First assignment violating some equation, scanning equations in order and
/// assignments with x outer, y inner.
std::optional<Counterexample> find_counterexample(const FiniteMagma& m, const EquationSet& eqs);
bool satisfies(const FiniteMagma& m, const EquationSet& eqs);

/// All terms of depth at most `depth`, each once.
std::vector<Term> terms_up_to_depth(int depth);

struct IdentityFailure {
    Term lhs;
    Term rhs;
    int x = 0;
    int y = 0;
};

/// Checks that `algebra` satisfies every identity s = t that `reference`
/// satisfies, over all terms s, t of depth at most `depth`.
std::optional<IdentityFailure> find_identity_failure(const FiniteMagma& reference, const FiniteMagma& algebra,
                                                     int depth);

}  // namespace mikado
