#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mikado/amalgam.hpp"
#include "mikado/coordinatize.hpp"
#include "mikado/documents.hpp"
#include "mikado/error.hpp"
#include "mikado/extension.hpp"
#include "mikado/predimension.hpp"

namespace mikado::cli {

namespace {

using nlohmann::json;

struct Report {
    std::string text;
    json doc;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
    return out;
}

Report document_report(const json& doc) { return {print_document(doc), doc}; }

std::string yes(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Linear spaces, predimension, good pairs, generic growth and quasigroup coordinatization"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", as_json, "Print the report as one JSON document");
    app.add_option("--seed", seed, "Seed for every randomized choice");

    std::function<Report()> action;
    std::string input;
    std::string subset_names;
    auto add_in = [&](CLI::App* cmd, const std::string& what) {
        cmd->add_option("--in", input, what + " ('-' for standard input)")->required();
    };
    auto structure = [&] { return parse_structure(read_input(input, in)); };

    {
        auto* cmd = app.add_subcommand("validate", "Check a structure document is a linear space");
        add_in(cmd, "Structure document");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                json lines = json::array();
                for (PointSet l : s.lines()) lines.push_back(names_of(s, l));
                return Report{"valid: " + std::to_string(s.size()) + " points, " + std::to_string(s.lines().size()) +
                                  " lines\n",
                              {{"valid", true}, {"points", s.size()}, {"lines", lines}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("delta", "Predimension of a structure or of a subset");
        add_in(cmd, "Structure document");
        cmd->add_option("--subset", subset_names, "Comma-separated points (default: all)");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const PointSet subset =
                    subset_names.empty() ? s.universe() : subset_of_names(s, split_names(subset_names));
                const int value = delta(s, subset);
                return Report{"delta = " + std::to_string(value) + "\n", {{"delta", value}}};
            };
        });
    }
    std::string strategy = "mincut";
    {
        auto* cmd = app.add_subcommand("dim", "Least predimension over supersets of a subset, with the least witness");
        add_in(cmd, "Structure document");
        cmd->add_option("--subset", subset_names, "Comma-separated points");
        cmd->add_option("--strategy", strategy, "mincut or bnb")->check(CLI::IsMember({"mincut", "bnb"}));
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const PointSet subset = subset_of_names(s, split_names(subset_names));
                const auto r = dim(s, subset, strategy == "bnb" ? MinStrategy::BranchAndBound : MinStrategy::MinCut);
                const auto witness = names_of(s, r.witness);
                return Report{"dim = " + std::to_string(r.value) + "\nwitness = " + join(witness) + "\n",
                              {{"dim", r.value}, {"witness", witness}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("strong", "Whether a subset is strong in the structure");
        add_in(cmd, "Structure document");
        cmd->add_option("--subset", subset_names, "Comma-separated points");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const bool ok = is_strong(s, subset_of_names(s, split_names(subset_names)));
                return Report{"strong = " + yes(ok) + "\n", {{"strong", ok}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("classify", "Classify a pair: not strong, k-primitive or decomposable");
        add_in(cmd, "Pair document (structure with \"base\")");
        cmd->callback([&] {
            action = [&] {
                const PairDocument p = parse_pair(read_input(input, in));
                const Classification c = classify(p.space, p.base);
                const ExtensionPair pair = ExtensionPair::create(p.space, p.base);
                std::string text = "classification = " + c.to_string() + "\ncode = " + pair.code() + "\n";
                json doc{{"classification", c.to_string()}, {"code", pair.code()}};
                if (c.kind == Classification::Kind::Primitive && c.k == 0) {
                    const bool good = is_good(p.space, p.base);
                    json bases = json::array();
                    text += "good = " + yes(good) + "\n";
                    for (PointSet b : find_bases(p.space, p.base)) {
                        text += "base = {" + join(names_of(p.space, b)) + "}\n";
                        bases.push_back(names_of(p.space, b));
                    }
                    doc["good"] = good;
                    doc["bases"] = bases;
                }
                return Report{text, doc};
            };
        });
    }
    std::string host_path;
    std::string pair_path;
    std::string image_names;
    {
        auto* cmd = app.add_subcommand("chi", "Largest number of disjoint copies of a pair over an embedded base");
        cmd->add_option("--host", host_path, "Host structure document")->required();
        cmd->add_option("--pair", pair_path, "Pair document")->required();
        cmd->add_option("--base-image", image_names, "Host points for the base points, in document order");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace host = parse_structure(read_input(host_path, in));
                const PairDocument p = parse_pair(read_input(pair_path, in));
                std::vector<int> image;
                for (const auto& n : split_names(image_names)) {
                    auto idx = host.index_of(n);
                    if (!idx) throw Error(Errc::InvalidArgument, "unknown host point '" + n + "'");
                    image.push_back(*idx);
                }
                const int value = chi(host, ExtensionPair::create(p.space, p.base), image);
                return Report{"chi = " + std::to_string(value) + "\n", {{"chi", value}}};
            };
        });
    }
    std::string mu_path;
    int max_ambient = KMuOptions{}.max_ambient;
    {
        auto* cmd = app.add_subcommand("check-class", "Membership in K0 and in K_mu");
        add_in(cmd, "Structure document");
        cmd->add_option("--mu", mu_path, "mu document")->required();
        cmd->add_option("--max-ambient", max_ambient, "Largest good pair enumerated inside the structure");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const MuFunction mu = parse_mu(read_input(mu_path, in));
                const bool k0 = in_K0(s);
                const KMuReport r = in_K_mu(s, mu, {max_ambient, {}});
                std::string text = "in_K0 = " + yes(k0) + "\nin_K_mu = " + yes(r.ok) +
                                   "\npairs_checked = " + std::to_string(r.pairs_checked) + "\n";
                json doc{{"in_K0", k0}, {"in_K_mu", r.ok}, {"pairs_checked", r.pairs_checked}};
                if (r.violation) {
                    const auto& v = *r.violation;
                    const auto base = names_of(s, v.base);
                    text += "violation: pair=" + v.pair.code() + " base=" + join(base) +
                            " chi=" + std::to_string(v.chi) + " mu=" + std::to_string(v.bound) + "\n";
                    doc["violation"] = {{"pair", v.pair.code()}, {"base", base}, {"chi", v.chi}, {"mu", v.bound}};
                }
                return Report{text, doc};
            };
        });
    }
    std::string left_path;
    std::string right_path;
    std::string shared_path;
    {
        auto* cmd = app.add_subcommand("amalgamate", "Free amalgam of two structures over their common points");
        cmd->add_option("--left", left_path, "Left structure document")->required();
        cmd->add_option("--right", right_path, "Right structure document")->required();
        cmd->add_option("--shared", shared_path, "Shared structure (default: induced on the common points)");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace left = parse_structure(read_input(left_path, in));
                const LinearSpace right = parse_structure(read_input(right_path, in));
                LinearSpace shared;
                if (shared_path.empty()) {
                    std::vector<std::string> common;
                    for (const auto& n : left.names()) {
                        if (right.index_of(n)) common.push_back(n);
                    }
                    shared = induced(left, subset_of_names(left, common));
                } else {
                    shared = parse_structure(read_input(shared_path, in));
                }
                return document_report(structure_json(amalgam({left, right, shared})));
            };
        });
    }
    int budget = 0;
    int catalog_bound = kFlagCatalogBound;
    std::string result_path;
    {
        auto* cmd = app.add_subcommand("grow", "Bounded generic growth from a seed structure");
        add_in(cmd, "Seed structure document");
        cmd->add_option("--mu", mu_path, "mu document")->required();
        cmd->add_option("--budget", budget, "Point budget")->required();
        cmd->add_option("--catalog-bound", catalog_bound, "Largest catalogue pair");
        cmd->add_option("--max-ambient", max_ambient, "Largest good pair checked after each step");
        cmd->add_option("--result", result_path, "Also write the grown structure document here");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const MuFunction mu = parse_mu(read_input(mu_path, in));
                const GrowthTrace trace =
                    generic_grow(s, mu, budget, good_pair_catalog(catalog_bound), seed, {max_ambient});
                if (!result_path.empty()) {
                    std::ofstream file(result_path);
                    if (!file) throw Error(Errc::InvalidArgument, "cannot write '" + result_path + "'");
                    file << print_document(structure_json(trace.result));
                }
                json steps = json::array();
                for (const GrowthStep& step : trace.steps) {
                    steps.push_back({{"pair", step.pair_code},
                                     {"base", step.base},
                                     {"outcome", step.outcome == GrowthOutcome::Accept ? "accept" : "reject"}});
                }
                const std::string text = trace.log() + "result = " + std::to_string(trace.result.size()) +
                                         " points, " + std::to_string(trace.result.lines().size()) + " lines\n";
                return Report{text,
                              {{"seed", seed}, {"budget", budget}, {"steps", steps},
                               {"result", structure_json(trace.result)}}};
            };
        });
    }
    int p = 0;
    int n = 1;
    std::string modulus;
    int element = 0;
    {
        auto* cmd = app.add_subcommand("block-algebra", "x*y = y + (x - y)a over GF(p^n)");
        cmd->add_option("--p", p, "Characteristic")->required();
        cmd->add_option("--n", n, "Degree");
        cmd->add_option("--modulus", modulus, "Comma-separated coefficients, lowest degree first");
        cmd->add_option("--a", element, "Primitive element, as the integer with the coefficients as base-p digits")
            ->required();
        cmd->callback([&] {
            action = [&] {
                std::optional<Polynomial> poly;
                if (!modulus.empty()) {
                    poly.emplace();
                    for (const auto& c : split_names(modulus)) poly->push_back(std::stoi(c));
                }
                const GaloisField field = GaloisField::create(p, n, poly);
                return document_report(magma_json(block_algebra(field, element)));
            };
        });
    }
    int q = 0;
    {
        auto* cmd = app.add_subcommand("check-variety", "Check a magma is the 2-generated free algebra witness of order q");
        add_in(cmd, "Magma document");
        cmd->add_option("--q", q, "Expected order (must be a prime power)")->required();
        cmd->callback([&] {
            action = [&] {
                const MagmaDocument m = parse_magma(read_input(input, in));
                const auto r = check_2q_variety_witness(m.magma, q);
                std::string text = "witness = " + yes(r.ok) + (r.ok ? "" : " (" + r.reason + ")") + "\n";
                json doc{{"witness", r.ok}};
                if (!r.ok) doc["reason"] = r.reason;
                return Report{text, doc};
            };
        });
    }
    std::string f2_path;
    std::string policy = "canonical";
    auto coordinatized = [&](const LinearSpace& s) {
        const MagmaDocument f2 = parse_magma(read_input(f2_path, in));
        return coordinatize(s, f2.magma,
                            policy == "seeded" ? CoordinatizePolicy::seeded(seed) : CoordinatizePolicy::canonical());
    };
    {
        auto* cmd = app.add_subcommand("coordinatize", "Put a copy of F2 on every line of a Steiner system");
        add_in(cmd, "Structure document");
        cmd->add_option("--f2", f2_path, "Magma document for F2")->required();
        cmd->add_option("--policy", policy, "canonical or seeded")->check(CLI::IsMember({"canonical", "seeded"}));
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const CoordinatizedAlgebra alg = coordinatized(s);
                return document_report(magma_json(alg.magma, alg.names));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("extract", "Steiner system of the 2-generated subalgebras of a quasigroup");
        add_in(cmd, "Magma document");
        cmd->callback([&] {
            action = [&] {
                const MagmaDocument m = parse_magma(read_input(input, in));
                return document_report(structure_json(gamma_extract(m.magma, m.elements)));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("derive-stm", "Steiner quasigroup of a Steiner triple system");
        add_in(cmd, "Structure document");
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                return document_report(magma_json(derive_steiner_mult(s), s.names()));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("complete-lines", "Extend every line to q points with fresh points");
        add_in(cmd, "Structure document");
        cmd->add_option("--q", q, "Line length")->required();
        cmd->callback([&] { action = [&] { return document_report(structure_json(complete_lines(structure(), q))); }; });
    }
    {
        auto* cmd = app.add_subcommand("expand", "H-expansions of a full-line structure up to isomorphism");
        add_in(cmd, "Structure document");
        cmd->add_option("--f2", f2_path, "Magma document for F2")->required();
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const MagmaDocument f2 = parse_magma(read_input(f2_path, in));
                const auto all = enumerate_expansions(s, f2.magma);
                json docs = json::array();
                for (const auto& e : all) docs.push_back(tau_prime_json(e));
                return Report{"expansions = " + std::to_string(all.size()) + "\n",
                              {{"count", all.size()}, {"expansions", docs}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("mu-prime", "mu' of an H-expanded pair");
        add_in(cmd, "Document with \"H\" and \"base\"");
        cmd->add_option("--mu", mu_path, "mu document")->required();
        cmd->callback([&] {
            action = [&] {
                const TauPrimeDocument d = parse_tau_prime(read_input(input, in));
                const MuFunction mu = parse_mu(read_input(mu_path, in));
                const int value = derive_mu_prime(mu, {d.structure, d.base});
                return Report{"mu_prime = " + std::to_string(value) + "\n", {{"mu_prime", value}}};
            };
        });
    }
    std::string point_a;
    std::string point_b;
    {
        auto* cmd = app.add_subcommand("orbit-check",
                                       "Whether a*b is fixed by every automorphism fixing a and b (finite evidence)");
        add_in(cmd, "Structure document");
        cmd->add_option("--f2", f2_path, "Magma document for F2")->required();
        cmd->add_option("--a", point_a, "First point")->required();
        cmd->add_option("--b", point_b, "Second point")->required();
        cmd->add_option("--policy", policy, "canonical or seeded")->check(CLI::IsMember({"canonical", "seeded"}));
        cmd->callback([&] {
            action = [&] {
                const LinearSpace s = structure();
                const CoordinatizedAlgebra alg = coordinatized(s);
                const int a = subset_of_names(s, {point_a}).lowest();
                const int b = subset_of_names(s, {point_b}).lowest();
                const bool ok = invariance_orbit_check(s, a, b, alg);
                const std::string product = s.name(alg.magma(a, b));
                return Report{"product = " + product + "\ninvariant = " + yes(ok) +
                                  "\nevidence = automorphisms of this finite structure only\n",
                              {{"product", product}, {"invariant", ok}, {"evidence", "finite automorphisms"}}};
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("eta", "Print the 12-point structure on a, b, c, d1..d9");
        cmd->callback([&] { action = [&] { return document_report(structure_json(build_eta())); }; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        const Report report = action();
        if (as_json) out << print_document(report.doc);
        else out << report.text;
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << "\n";
        return e.code() == Errc::ParseError ? 2 : 1;
    }
}

}  // namespace mikado::cli
