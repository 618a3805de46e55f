#include "mikado/equations.hpp"

#include <cctype>
#include <map>

#include "mikado/error.hpp"

namespace mikado {

Term Term::var(int v) {
    Term t;
    t.nodes_.push_back({v, -1, -1});
    return t;
}

Term Term::op(const Term& left, const Term& right) {
    Term t;
    t.nodes_ = left.nodes_;
    const int l = static_cast<int>(t.nodes_.size()) - 1;
    const int offset = static_cast<int>(t.nodes_.size());
    for (Node n : right.nodes_) {
        if (n.var < 0) {
            n.left += offset;
            n.right += offset;
        }
        t.nodes_.push_back(n);
    }
    const int r = static_cast<int>(t.nodes_.size()) - 1;
    t.nodes_.push_back({-1, l, r});
    return t;
}

int Term::eval(const FiniteMagma& m, int x, int y) const {
    std::vector<int> value(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& n = nodes_[i];
        value[i] = n.var == 0 ? x : n.var == 1 ? y : m(value[n.left], value[n.right]);
    }
    return value.back();
}

int Term::depth() const {
    std::vector<int> d(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].var < 0) d[i] = 1 + std::max(d[nodes_[i].left], d[nodes_[i].right]);
    }
    return d.back();
}

std::string Term::render(int node) const {
    const Node& n = nodes_[node];
    if (n.var >= 0) return n.var == 0 ? "x" : "y";
    auto side = [&](int child) {
        const std::string s = render(child);
        return nodes_[child].var >= 0 ? s : "(" + s + ")";
    };
    return side(n.left) + "*" + side(n.right);
}

std::string Term::to_string() const { return render(static_cast<int>(nodes_.size()) - 1); }

namespace {

/// Recursive descent over: term := factor ('*' factor)*, left associative;
/// factor := identifier | '(' term ')'.
class EquationParser {
public:
    explicit EquationParser(std::string_view text) : text_(text) {}

    Equation equation() {
        Term lhs = term();
        skip();
        expect('=');
        Term rhs = term();
        skip();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return {std::move(lhs), std::move(rhs)};
    }

private:
    Term term() {
        Term t = factor();
        while (true) {
            skip();
            if (pos_ < text_.size() && (text_[pos_] == '*' || text_[pos_] == '.')) {
                ++pos_;
                t = Term::op(t, factor());
            } else {
                return t;
            }
        }
    }

    Term factor() {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            Term t = term();
            skip();
            expect(')');
            return t;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a variable or '('");
        const std::string name(text_.substr(start, pos_ - start));
        auto it = vars_.find(name);
        if (it == vars_.end()) {
            if (vars_.size() == 2) throw Error(Errc::InvalidArgument, "equations may use at most two variables");
            it = vars_.emplace(name, static_cast<int>(vars_.size())).first;
        }
        return Term::var(it->second);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::ParseError, what + " at column " + std::to_string(pos_ + 1) + " of '" +
                                          std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, int> vars_;
};

}  // namespace

EquationSet EquationSet::parse(std::string_view text) {
    EquationSet set;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view piece = text.substr(start, end - start);
        if (piece.find_first_not_of(" \t\r") != std::string_view::npos) {
            set.equations_.push_back(EquationParser(piece).equation());
        }
        start = end + 1;
    }
    return set;
}

EquationSet EquationSet::steiner() { return parse("x*x = x; x*y = y*x; x*(x*y) = y"); }
EquationSet EquationSet::stein() { return parse("x*x = x; (x*y)*y = y*x; (y*x)*y = x"); }
EquationSet EquationSet::idempotent() { return parse("x*x = x"); }
EquationSet EquationSet::commutative() { return parse("x*y = y*x"); }

std::optional<Counterexample> find_counterexample(const FiniteMagma& m, const EquationSet& eqs) {
    for (std::size_t i = 0; i < eqs.equations().size(); ++i) {
        const Equation& e = eqs.equations()[i];
        for (int x = 0; x < m.order(); ++x)
            for (int y = 0; y < m.order(); ++y) {
                const int l = e.lhs.eval(m, x, y);
                const int r = e.rhs.eval(m, x, y);
                if (l != r) return Counterexample{i, x, y, l, r};
            }
    }
    return std::nullopt;
}

bool satisfies(const FiniteMagma& m, const EquationSet& eqs) { return !find_counterexample(m, eqs); }

std::vector<Term> terms_up_to_depth(int depth) {
    std::vector<Term> terms{Term::var(0), Term::var(1)};
    for (int d = 1; d <= depth; ++d) {
        const std::vector<Term> previous(terms);
        std::vector<Term> next{Term::var(0), Term::var(1)};
        for (const Term& l : previous)
            for (const Term& r : previous) next.push_back(Term::op(l, r));
        terms = std::move(next);
    }
    return terms;
}

std::optional<IdentityFailure> find_identity_failure(const FiniteMagma& reference, const FiniteMagma& algebra,
                                                     int depth) {
    // Terms inducing the same function on the reference must induce the same
    // function on the algebra.
    std::map<std::vector<int>, std::pair<std::size_t, std::vector<int>>> classes;
    const std::vector<Term> terms = terms_up_to_depth(depth);
    const int n = reference.order();
    const int size = algebra.order();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::vector<int> on_reference(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) on_reference[x * n + y] = terms[i].eval(reference, x, y);
        std::vector<int> on_algebra(static_cast<std::size_t>(size) * size);
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y) on_algebra[x * size + y] = terms[i].eval(algebra, x, y);
        auto [it, fresh] = classes.emplace(std::move(on_reference), std::make_pair(i, on_algebra));
        if (fresh) continue;
        const auto& [first, first_values] = it->second;
        for (int x = 0; x < size; ++x)
            for (int y = 0; y < size; ++y) {
                if (first_values[x * size + y] != on_algebra[x * size + y]) {
                    return IdentityFailure{terms[first], terms[i], x, y};
                }
            }
    }
    return std::nullopt;
}

}  // namespace mikado
