#include "mikado/extension.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

#include "mikado/canonical.hpp"
#include "mikado/error.hpp"
#include "mikado/predimension.hpp"

namespace mikado {

namespace {

constexpr int kMaxBaseEnumeration = 20;

std::string format_code(int base_size, int annulus_size, const std::vector<int>& encoding) {
    // encoding = [n, colors..., L, (size, labels...)..., H, ...]
    const int n = encoding[0];
    std::size_t pos = 1 + static_cast<std::size_t>(n);
    const int line_count = encoding[pos++];
    std::string out = std::to_string(base_size) + "+" + std::to_string(annulus_size) + ":";
    for (int j = 0; j < line_count; ++j) {
        if (j > 0) out += ',';
        const int size = encoding[pos++];
        for (int k = 0; k < size; ++k) {
            if (k > 0) out += '.';
            out += std::to_string(encoding[pos++]);
        }
    }
    return out;
}

int parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
        throw Error(Errc::InvalidArgument, "malformed number '" + std::string(text) + "' in pair code");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = text.find(sep, start);
        parts.push_back(text.substr(start, at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

/// Strength of `base` inside the substructure on `upper`.
bool strong_within(const LinearSpace& space, PointSet base, PointSet upper) {
    return min_delta_between(space, base, upper).value == delta(space, base);
}

Classification classify_within(const LinearSpace& space, PointSet base, PointSet upper) {
    if (!strong_within(space, base, upper)) return {Classification::Kind::NotStrong, 0};
    const int k = delta(space, upper) - delta(space, base);
    for (int c : upper - base) {
        if (min_delta_between(space, base | PointSet::single(c), upper).witness != upper) {
            return {Classification::Kind::Decomposable, k};
        }
    }
    return {Classification::Kind::Primitive, k};
}

bool zero_primitive_within(const LinearSpace& space, PointSet base, PointSet upper) {
    if (base == upper) return false;
    // Cheap necessary condition before the cut computations.
    if (delta(space, upper) != delta(space, base)) return false;
    const auto cls = classify_within(space, base, upper);
    return cls.kind == Classification::Kind::Primitive && cls.k == 0;
}

/// Assumes (upper - base) is 0-primitive over base inside upper.
bool good_within(const LinearSpace& space, PointSet base, PointSet upper) {
    if (base.size() > kMaxBaseEnumeration) throw Error(Errc::TooLarge, "base too large to enumerate");
    const PointSet annulus = upper - base;
    const std::uint64_t full = base.bits();
    // Proper submasks of the base.
    for (std::uint64_t sub = (full - 1) & full;; sub = (sub - 1) & full) {
        const PointSet smaller(sub);
        if (zero_primitive_within(space, smaller, annulus | smaller)) return false;
        if (sub == 0) break;
    }
    return true;
}

void check_base(const LinearSpace& space, PointSet base) {
    if (!base.subset_of(space.universe())) throw Error(Errc::InvalidArgument, "base is not inside the structure");
    if (base == space.universe()) throw Error(Errc::InvalidArgument, "the annulus must be non-empty");
}

}  // namespace

std::string pair_code(const LinearSpace& space, PointSet base, PointSet annulus) {
    const PointSet all = base | annulus;
    const LinearSpace sub = induced(space, all);
    std::vector<int> colors;
    for (int p : all) colors.push_back(base.contains(p) ? 0 : 1);
    const CanonicalForm form = canonical_form(colored(sub, std::move(colors)));
    return format_code(base.size(), annulus.size(), form.encoding);
}

ExtensionPair ExtensionPair::create(LinearSpace ambient, PointSet base) {
    check_base(ambient, base);
    std::string code = pair_code(ambient, base, ambient.universe() - base);
    return ExtensionPair(std::move(ambient), base, std::move(code));
}

ExtensionPair ExtensionPair::create(LinearSpace ambient, const std::vector<std::string>& base_names) {
    const PointSet base = subset_of_names(ambient, base_names);
    return create(std::move(ambient), base);
}

ExtensionPair decode_pair(std::string_view code) {
    const std::size_t colon = code.find(':');
    const std::size_t plus = code.find('+');
    if (colon == std::string_view::npos || plus == std::string_view::npos || plus > colon) {
        throw Error(Errc::InvalidArgument, "malformed pair code '" + std::string(code) + "'");
    }
    const int base_size = parse_int(code.substr(0, plus));
    const int annulus_size = parse_int(code.substr(plus + 1, colon - plus - 1));
    const int n = base_size + annulus_size;
    if (annulus_size == 0 || n > kMaxPoints) {
        throw Error(Errc::InvalidArgument, "pair code has an empty annulus or too many points");
    }
    std::vector<PointSet> lines;
    const std::string_view body = code.substr(colon + 1);
    if (!body.empty()) {
        for (std::string_view line : split(body, ',')) {
            PointSet members;
            for (std::string_view label : split(line, '.')) {
                const int p = parse_int(label);
                if (p >= n) throw Error(Errc::InvalidArgument, "pair code label out of range");
                members.insert(p);
            }
            lines.push_back(members);
        }
    }
    return ExtensionPair::create(LinearSpace::from_lines(n, std::move(lines)), PointSet::range(base_size));
}

ExtensionPair alpha_pair() {
    return ExtensionPair::create(LinearSpace::create({"b1", "b2", "a"}, std::vector<NamedTriple>{{"b1", "b2", "a"}}),
                                 PointSet::of({0, 1}));
}

ExtensionPair line_over_two(int k) { return ExtensionPair::create(build_line(k), PointSet::of({0, 1})); }

ExtensionPair eta_pair() { return ExtensionPair::create(build_eta(), std::vector<std::string>{"a"}); }

std::string Classification::to_string() const {
    switch (kind) {
        case Kind::NotStrong: return "not_strong";
        case Kind::Primitive: return "k_primitive(" + std::to_string(k) + ")";
        case Kind::Decomposable: return "decomposable";
    }
    return "?";
}

Classification classify(const LinearSpace& space, PointSet base) {
    check_base(space, base);
    return classify_within(space, base, space.universe());
}

bool is_zero_primitive(const LinearSpace& space, PointSet base) {
    check_base(space, base);
    return zero_primitive_within(space, base, space.universe());
}

bool is_good(const LinearSpace& space, PointSet base) {
    if (!is_zero_primitive(space, base)) throw Error(Errc::NotPrimitive, "the pair is not 0-primitive");
    return good_within(space, base, space.universe());
}

std::vector<PointSet> find_bases(const LinearSpace& space, PointSet base) {
    if (!is_zero_primitive(space, base)) throw Error(Errc::NotPrimitive, "the pair is not 0-primitive");
    if (base.size() > kMaxBaseEnumeration) throw Error(Errc::TooLarge, "base too large to enumerate");
    const PointSet annulus = space.universe() - base;
    std::vector<PointSet> out;
    const std::uint64_t full = base.bits();
    for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
        const PointSet b(sub);
        if (zero_primitive_within(space, b, annulus | b) && good_within(space, b, annulus | b)) out.push_back(b);
        if (sub == 0) break;
    }
    std::sort(out.begin(), out.end(), members_less);
    return out;
}

bool is_good_pair(const LinearSpace& space, PointSet base) {
    if (!base.subset_of(space.universe()) || base == space.universe()) return false;
    return zero_primitive_within(space, base, space.universe()) && good_within(space, base, space.universe());
}

namespace {

bool preserves_base(const LinearSpace& host, const ExtensionPair& pair, const std::vector<int>& image) {
    const auto base = pair.base().to_vector();
    if (image.size() != base.size()) return false;
    PointSet used;
    for (int m : image) {
        if (m < 0 || m >= host.size() || used.contains(m)) return false;
        used.insert(m);
    }
    const LinearSpace& a = pair.ambient();
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            for (std::size_t k = j + 1; k < base.size(); ++k) {
                if (a.collinear(base[i], base[j], base[k]) != host.collinear(image[i], image[j], image[k])) {
                    return false;
                }
            }
    return true;
}

/// Backtracking extension of a partial map from the pair's ambient into the
/// host, over the points of `order` from position `depth`.
class EmbeddingSearch {
public:
    EmbeddingSearch(const LinearSpace& host, const LinearSpace& pattern, std::vector<int> order)
        : host_(host), pattern_(pattern), order_(std::move(order)), image_(pattern.size(), -1) {}

    template <class Visit>
    void run(const std::vector<std::pair<int, int>>& fixed, Visit&& visit) {
        for (auto [p, m] : fixed) {
            image_[p] = m;
            used_.insert(m);
            mapped_.push_back(p);
        }
        extend(0, visit);
    }

    const std::vector<int>& image() const { return image_; }

private:
    bool consistent(int a, int m) const {
        for (std::size_t i = 0; i < mapped_.size(); ++i)
            for (std::size_t j = i + 1; j < mapped_.size(); ++j) {
                const int u = mapped_[i];
                const int v = mapped_[j];
                if (pattern_.collinear(a, u, v) != host_.collinear(m, image_[u], image_[v])) return false;
            }
        return true;
    }

    PointSet candidates(int a) const {
        for (int li : pattern_.lines_through(a)) {
            int u = -1;
            int v = -1;
            for (int w : pattern_.lines()[li]) {
                if (w == a || image_[w] < 0) continue;
                if (u < 0) u = w;
                else if (v < 0) v = w;
            }
            if (v >= 0) {
                auto line = host_.line_through(image_[u], image_[v]);
                return line ? *line - used_ : PointSet{};
            }
        }
        return host_.universe() - used_;
    }

    template <class Visit>
    void extend(std::size_t depth, Visit& visit) {
        if (depth == order_.size()) {
            visit(image_);
            return;
        }
        const int a = order_[depth];
        for (int m : candidates(a)) {
            if (!consistent(a, m)) continue;
            image_[a] = m;
            used_.insert(m);
            mapped_.push_back(a);
            extend(depth + 1, visit);
            mapped_.pop_back();
            used_.erase(m);
            image_[a] = -1;
        }
    }

    const LinearSpace& host_;
    const LinearSpace& pattern_;
    std::vector<int> order_;
    std::vector<int> image_;
    PointSet used_;
    std::vector<int> mapped_;
};

/// Orders `todo` so each point sees as many already placed collinear pairs
/// as possible.
std::vector<int> search_order(const LinearSpace& pattern, PointSet placed, PointSet todo) {
    std::vector<int> order;
    while (!todo.empty()) {
        int best = -1;
        int best_score = -1;
        for (int a : todo) {
            int score = 0;
            for (int li : pattern.lines_through(a)) {
                if ((pattern.lines()[li] & placed).size() >= 2) score += 2;
                else if ((pattern.lines()[li] & placed).size() == 1) score += 1;
            }
            if (score > best_score) {
                best_score = score;
                best = a;
            }
        }
        order.push_back(best);
        placed.insert(best);
        todo.erase(best);
    }
    return order;
}

}  // namespace

std::vector<PointSet> annulus_copies(const LinearSpace& host, const ExtensionPair& pair,
                                     const std::vector<int>& base_image) {
    if (!preserves_base(host, pair, base_image)) {
        throw Error(Errc::InvalidArgument, "the base map is not an embedding into the host");
    }
    const LinearSpace& a = pair.ambient();
    if (a.size() > host.size()) return {};
    std::vector<std::pair<int, int>> fixed;
    const auto base = pair.base().to_vector();
    for (std::size_t i = 0; i < base.size(); ++i) fixed.emplace_back(base[i], base_image[i]);
    EmbeddingSearch search(host, a, search_order(a, pair.base(), pair.annulus()));
    std::vector<PointSet> copies;
    const PointSet annulus = pair.annulus();
    search.run(fixed, [&](const std::vector<int>& image) {
        PointSet s;
        for (int p : annulus) s.insert(image[p]);
        copies.push_back(s);
    });
    std::sort(copies.begin(), copies.end(), [](PointSet x, PointSet y) { return x.bits() < y.bits(); });
    copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
    return copies;
}

int max_disjoint(std::vector<PointSet> sets) {
    std::sort(sets.begin(), sets.end(), [](PointSet x, PointSet y) {
        return x.size() != y.size() ? x.size() < y.size() : x.bits() < y.bits();
    });
    int best = 0;
    auto rec = [&](auto&& self, std::size_t from, PointSet used, int count) -> void {
        best = std::max(best, count);
        if (from >= sets.size()) return;
        PointSet avail;
        for (std::size_t i = from; i < sets.size(); ++i) {
            if (!sets[i].intersects(used)) avail |= sets[i];
        }
        const int smallest = std::max(1, sets[from].size());
        if (count + avail.size() / smallest <= best) return;
        for (std::size_t i = from; i < sets.size(); ++i) {
            if (sets[i].intersects(used)) continue;
            self(self, i + 1, used | sets[i], count + 1);
        }
    };
    rec(rec, 0, PointSet{}, 0);
    return best;
}

int chi(const LinearSpace& host, const ExtensionPair& pair, const std::vector<int>& base_image) {
    return max_disjoint(annulus_copies(host, pair, base_image));
}

std::vector<std::vector<int>> base_embeddings(const LinearSpace& host, const ExtensionPair& pair) {
    const LinearSpace base_space = induced(pair.ambient(), pair.base());
    std::vector<std::vector<int>> out;
    if (base_space.size() > host.size()) return out;
    EmbeddingSearch search(host, base_space, search_order(base_space, PointSet{}, base_space.universe()));
    search.run({}, [&](const std::vector<int>& image) { out.push_back(image); });
    std::sort(out.begin(), out.end());
    return out;
}

PointSet determined_points(const ExtensionPair& pair) {
    std::vector<int> colors(pair.ambient().size(), 0);
    int next = 1;
    for (int b : pair.base()) colors[b] = next++;
    const ColoredStructure s = colored(pair.ambient(), colors);
    PointSet out;
    for (int p : pair.annulus()) {
        if (orbit_within(s, p, pair.annulus()) == PointSet::single(p)) out.insert(p);
    }
    return out;
}

std::string_view mu_class_name(MuClass c) {
    switch (c) {
        case MuClass::U: return "U";
        case MuClass::T: return "T";
        case MuClass::C: return "C";
    }
    return "?";
}

std::pair<MuRule, int> parse_mu_rule(std::string_view name) {
    if (name == "floor-delta") return {MuRule::FloorDelta, 0};
    constexpr std::string_view prefix = "constant-";
    if (name.substr(0, prefix.size()) == prefix) {
        return {MuRule::Constant, parse_int(name.substr(prefix.size()))};
    }
    throw Error(Errc::InvalidArgument, "unknown default rule '" + std::string(name) + "'");
}

std::string MuFunction::rule_name() const {
    return rule_ == MuRule::FloorDelta ? "floor-delta" : "constant-" + std::to_string(constant_);
}

int MuFunction::value(const std::string& code, int base_delta) const {
    if (auto it = overrides_.find(code); it != overrides_.end()) return it->second;
    static const std::string alpha = alpha_pair().code();
    if (code == alpha) return q_ - 2;
    return rule_ == MuRule::FloorDelta ? std::max(base_delta, 1) : constant_;
}

int mu_eval(const MuFunction& mu, const ExtensionPair& pair) {
    if (!is_good_pair(pair.ambient(), pair.base())) throw Error(Errc::NotGood, "mu is only defined on good pairs");
    return mu.value(pair.code(), delta(pair.ambient(), pair.base()));
}

std::vector<std::string> flag_violations(const MuFunction& mu, const ExtensionPair& pair) {
    std::vector<std::string> out;
    const int value = mu.value(pair.code(), delta(pair.ambient(), pair.base()));
    const int base_delta = delta(pair.ambient(), pair.base());
    const auto& flags = mu.flags();
    bool c_forces_zero = false;
    if (flags.count(MuClass::C) && pair.base().size() == 1 && !determined_points(pair).empty()) {
        c_forces_zero = true;
        if (value != 0) out.push_back("C: " + pair.code() + " has a determined point but mu = " + std::to_string(value));
    }
    if (flags.count(MuClass::U) && !c_forces_zero) {
        if (pair.annulus().size() >= 2 && value < base_delta) {
            out.push_back("U: " + pair.code() + " has mu = " + std::to_string(value) + " < delta(B) = " +
                          std::to_string(base_delta));
        }
        if (pair.code() == alpha_pair().code() && value < 1) out.push_back("U: mu(alpha) < 1");
    }
    if (flags.count(MuClass::T) && pair.ambient().size() > 1 && base_delta == 2 && value < 3) {
        out.push_back("T: " + pair.code() + " has delta(B) = 2 but mu = " + std::to_string(value) + " < 3");
    }
    return out;
}

MuFunction MuFunction::create(int q, MuRule rule, int constant, std::map<std::string, int> overrides,
                              std::set<MuClass> flags, int catalog_bound) {
    if (q < 3) throw Error(Errc::InvalidArgument, "line length q must be at least 3");
    if (constant < 0) throw Error(Errc::InvalidArgument, "constant rule must be non-negative");
    MuFunction mu;
    mu.q_ = q;
    mu.rule_ = rule;
    mu.constant_ = constant;
    mu.flags_ = std::move(flags);
    std::vector<ExtensionPair> override_pairs;
    for (const auto& [code, bound] : overrides) {
        ExtensionPair pair = decode_pair(code);
        if (pair.code() != code) {
            throw Error(Errc::InvalidArgument, "override code '" + code + "' is not canonical (expected '" +
                                                   pair.code() + "')");
        }
        if (bound < 0) throw Error(Errc::InvalidArgument, "override bounds must be non-negative");
        if (!is_good_pair(pair.ambient(), pair.base())) {
            throw Error(Errc::InvalidArgument, "override code '" + code + "' is not a good pair");
        }
        if (code == alpha_pair().code() && bound != q - 2) {
            throw Error(Errc::InvalidArgument, "mu(alpha) is fixed by the line length to q - 2");
        }
        override_pairs.push_back(std::move(pair));
    }
    mu.overrides_ = std::move(overrides);
    if (!mu.flags_.empty()) {
        std::vector<const ExtensionPair*> to_check;
        for (const auto& p : good_pair_catalog(catalog_bound)) to_check.push_back(&p);
        for (const auto& p : override_pairs) to_check.push_back(&p);
        for (const ExtensionPair* p : to_check) {
            const auto bad = flag_violations(mu, *p);
            if (!bad.empty()) throw Error(Errc::FlagViolation, bad.front());
        }
    }
    return mu;
}

const std::vector<ExtensionPair>& good_pair_catalog(int max_ambient) {
    static std::mutex guard;
    static std::map<int, std::vector<ExtensionPair>> cache;
    std::lock_guard lock(guard);
    if (auto it = cache.find(max_ambient); it != cache.end()) return it->second;

    std::map<std::string, ExtensionPair> found;
    for (int n = 1; n <= max_ambient; ++n) {
        std::vector<PointSet> candidates;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            if (PointSet(m).size() >= 3) candidates.push_back(PointSet(m));
        }
        std::set<std::vector<int>> seen;
        std::vector<PointSet> chosen;
        auto visit = [&](auto&& self, std::size_t from) -> void {
            const LinearSpace space = LinearSpace::from_lines(n, chosen);
            if (seen.insert(canonical_form(colored(space)).encoding).second && in_K0(space)) {
                const PointSet all = space.universe();
                for (std::uint64_t b = 0; b < all.bits(); ++b) {
                    if (!is_good_pair(space, PointSet(b))) continue;
                    std::string code = pair_code(space, PointSet(b), all - PointSet(b));
                    if (!found.count(code)) found.emplace(code, ExtensionPair::create(space, PointSet(b)));
                }
            }
            for (std::size_t i = from; i < candidates.size(); ++i) {
                const bool fits = std::all_of(chosen.begin(), chosen.end(),
                                              [&](PointSet l) { return (l & candidates[i]).size() <= 1; });
                if (!fits) continue;
                chosen.push_back(candidates[i]);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        visit(visit, 0);
    }
    std::vector<ExtensionPair> out;
    for (auto& [code, pair] : found) out.push_back(std::move(pair));
    return cache.emplace(max_ambient, std::move(out)).first->second;
}

namespace {

/// Enumerates connected point sets (adjacency = sharing a line) drawn from
/// `allowed`, each once, rooted at their least root-eligible point.
class ConnectedSets {
public:
    ConnectedSets(const LinearSpace& host, PointSet allowed, PointSet roots, int max_size)
        : host_(host), allowed_(allowed), roots_(roots), max_size_(max_size) {}

    template <class Visit>
    void run(Visit&& visit) {
        for (int v : roots_) {
            // Vertices usable in sets rooted at v: allowed, and not a smaller root.
            const PointSet smaller_roots(roots_.bits() & ((std::uint64_t{1} << v) - 1));
            const PointSet usable = allowed_ - smaller_roots - PointSet::single(v);
            extend(PointSet::single(v), host_.neighbours(v) & usable, usable, visit);
        }
    }

private:
    template <class Visit>
    void extend(PointSet current, PointSet extension, PointSet usable, Visit& visit) {
        visit(current);
        if (current.size() >= max_size_) return;
        PointSet closed_neighbourhood = current;
        for (int u : current) closed_neighbourhood |= host_.neighbours(u);
        while (!extension.empty()) {
            const int w = extension.lowest();
            extension.erase(w);
            const PointSet fresh = (host_.neighbours(w) & usable) - closed_neighbourhood - current;
            extend(current | PointSet::single(w), extension | fresh, usable, visit);
        }
    }

    const LinearSpace& host_;
    PointSet allowed_;
    PointSet roots_;
    int max_size_;
};

int lines_meeting_enough(const LinearSpace& host, int p, PointSet within) {
    int count = 0;
    for (int li : host.lines_through(p)) {
        if ((host.lines()[li] & within).size() >= 3) ++count;
    }
    return count;
}

}  // namespace

std::vector<RealizedPair> realized_good_pairs(const LinearSpace& host, const KMuOptions& options) {
    std::vector<RealizedPair> out;
    const PointSet focus = options.focus.empty() ? host.universe() : options.focus;
    const int max_ambient = options.max_ambient;
    static const std::string alpha = alpha_pair().code();

    // One-point annuli are exactly copies of alpha.
    if (max_ambient >= 3) {
        for (PointSet line : host.lines()) {
            for (int c : line) {
                const PointSet rest = line - PointSet::single(c);
                for (int x : rest) {
                    for (int y : rest) {
                        if (y <= x) continue;
                        const PointSet b = PointSet::of({x, y});
                        if ((b | PointSet::single(c)).intersects(focus)) {
                            out.push_back({b, PointSet::single(c), alpha});
                        }
                    }
                }
            }
        }
    }

    // Larger annuli: every annulus point needs two lines inside the pair,
    // the annulus is connected, and the base sits on lines through it.
    PointSet eligible;
    for (int p = 0; p < host.size(); ++p) {
        if (host.lines_through(p).size() >= 2) eligible.insert(p);
    }
    PointSet near_focus = focus;
    for (int p : focus) near_focus |= host.neighbours(p);
    const PointSet roots = eligible & near_focus;

    ConnectedSets sets(host, eligible, roots, max_ambient);
    sets.run([&](PointSet annulus) {
        if (annulus.size() < 2) return;
        PointSet around;
        for (int c : annulus) around |= host.neighbours(c);
        around -= annulus;
        if (!(annulus | around).intersects(focus)) return;
        const std::vector<int> cand = around.to_vector();
        const int room = max_ambient - annulus.size();

        auto accept = [&](PointSet base) {
            const PointSet all = base | annulus;
            if (!all.intersects(focus)) return;
            for (int c : annulus) {
                if (lines_meeting_enough(host, c, all) < 2) return;
            }
            for (int b : base) {
                bool justified = false;
                for (int li : host.lines_through(b)) {
                    const PointSet l = host.lines()[li];
                    if (l.intersects(annulus) && (l & base).size() <= 2 && (l & all).size() >= 3) {
                        justified = true;
                        break;
                    }
                }
                if (!justified) return;
            }
            if (zero_primitive_within(host, base, all) && good_within(host, base, all)) {
                out.push_back({base, annulus, pair_code(host, base, annulus)});
            }
        };

        // delta(B + C) - delta(B) only falls as B grows.
        auto rec = [&](auto&& self, PointSet base, std::size_t from) -> void {
            const int rel = delta(host, base | annulus) - delta(host, base);
            if (rel < 0) return;
            if (rel == 0) accept(base);
            if (base.size() >= room || from >= cand.size()) return;
            PointSet rest;
            for (std::size_t j = from; j < cand.size(); ++j) rest.insert(cand[j]);
            if (delta(host, base | rest | annulus) - delta(host, base | rest) > 0) return;
            for (std::size_t j = from; j < cand.size(); ++j) {
                self(self, base | PointSet::single(cand[j]), j + 1);
            }
        };
        rec(rec, PointSet{}, 0);
    });
    return out;
}

KMuReport in_K_mu(const LinearSpace& host, const MuFunction& mu, const KMuOptions& options) {
    KMuReport report;
    const auto realized = realized_good_pairs(host, options);
    report.pairs_checked = static_cast<int>(realized.size());

    std::map<std::pair<std::uint64_t, std::string>, std::vector<PointSet>> groups;
    for (const auto& r : realized) groups[{r.base.bits(), r.code}].push_back(r.annulus);

    for (auto& [key, annuli] : groups) {
        const PointSet base(key.first);
        const std::string& code = key.second;
        const int bound = mu.value(code, delta(host, base));
        // Copies are counted over the base pointwise; classes of annuli
        // related by a base-fixing isomorphism are counted separately.
        std::vector<bool> done(annuli.size(), false);
        std::sort(annuli.begin(), annuli.end(), [](PointSet x, PointSet y) { return x.bits() < y.bits(); });
        for (std::size_t i = 0; i < annuli.size(); ++i) {
            if (done[i]) continue;
            const LinearSpace sub = induced(host, base | annuli[i]);
            PointSet sub_base;
            std::vector<int> image;
            int idx = 0;
            for (int p : base | annuli[i]) {
                if (base.contains(p)) {
                    sub_base.insert(idx);
                    image.push_back(p);
                }
                ++idx;
            }
            ExtensionPair pair = ExtensionPair::create(sub, sub_base);
            const auto copies = annulus_copies(host, pair, image);
            for (std::size_t j = i; j < annuli.size(); ++j) {
                if (std::binary_search(copies.begin(), copies.end(), annuli[j],
                                       [](PointSet x, PointSet y) { return x.bits() < y.bits(); })) {
                    done[j] = true;
                }
            }
            const int count = max_disjoint(copies);
            if (count > bound) {
                report.ok = false;
                report.violation = KMuViolation{std::move(pair), base, count, bound};
                return report;
            }
        }
    }
    return report;
}

}  // namespace mikado
