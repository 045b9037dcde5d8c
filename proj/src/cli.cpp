#include "baxter/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "baxter/census.hpp"
#include "baxter/iso.hpp"
#include "baxter/json_io.hpp"
#include "baxter/patterns.hpp"
#include "baxter/render.hpp"

namespace baxter {

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt alternating_target(int n) {
    if (n % 2 == 0) return catalan(n / 2) * catalan(n / 2);
    return catalan((n - 1) / 2) * catalan((n + 1) / 2);
}

long long count_b_n(int n) {
    long long c = 0;
    for (const Permutation& p : enumerate_permutations(n))
        if (in_B(p)) ++c;
    return c;
}

BigInt count_class(const std::string& cls, int n, bool oracle) {
    if (cls == "tlt") return oracle ? BigInt(enumerate_tlts(n).size()) : factorial(n);
    if (cls == "baxter-tlt")
        return oracle ? BigInt(enumerate_baxter_tlts(n).size()) : baxter_number(n);
    if (cls == "pfp") return oracle ? BigInt(enumerate_pfps(n).size()) : baxter_number(n);
    if (cls == "nilp") return oracle ? BigInt(enumerate_triples(n).size()) : baxter_number(n);
    if (cls == "perm-twisted-inverse")
        return oracle ? BigInt(count_b_n(n)) : baxter_number(n);
    if (cls == "dyck-pair")
        return oracle ? BigInt(enumerate_dyck_pairs(n).size()) : alternating_target(n);
    if (cls == "almost-complete-tlt") {
        if (!oracle) return alternating_target(n);
        long long c = 0;
        for (const auto& t : enumerate_baxter_tlts(n))
            if (is_almost_complete(t)) ++c;
        return c;
    }
    if (cls == "alternating-pfp") {
        if (!oracle) return alternating_target(n);
        long long c = 0;
        for (const auto& f : enumerate_pfps(n))
            if (is_alternating(f)) ++c;
        return c;
    }
    if (cls == "alternating-perm-twisted-inverse") {
        if (!oracle) return alternating_target(n);
        long long c = 0;
        for (const Permutation& p : enumerate_permutations(n))
            if (in_B(p) && is_alternating_up(p)) ++c;
        return c;
    }
    fail(Err::UnsupportedRoute, "unknown class: " + cls);
}

Json read_input_json(const std::string& input, std::istream& in) {
    std::string text;
    if (input.empty() || input == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(input);
        require(file.good(), Err::InvalidObject, "cannot read input file: " + input);
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(Err::InvalidObject, std::string("input is not valid JSON: ") + e.what());
    }
}

// Reads the payload for `cls` from an envelope or a bare payload.
Json payload_for(const Json& j, const std::string& cls) {
    if (j.is_object() && j.contains("class") && j.contains("payload")) {
        auto [c, payload] = parse_envelope(j);
        require(c == cls, Err::InvalidObject, "envelope class is " + c + ", expected " + cls);
        return payload;
    }
    return j;
}

// The tableau hub the mapping routes pass through.
TreeLikeTableau to_hub(const std::string& cls, const Json& payload) {
    if (cls == "tlt") return tlt_from_json(payload);
    if (cls == "baxter-tlt") {
        TreeLikeTableau t = tlt_from_json(payload);
        require(is_baxter(t), Err::NotInDomain, "tableau is not Baxter");
        return t;
    }
    if (cls == "perm") return phi_inverse(permutation_from_json(payload));
    if (cls == "pfp") return psi_F(pfp_from_json(payload));
    if (cls == "nilp") return phi_P_inverse(triple_from_json(payload));
    if (cls == "dyck-pair") return from_dyck_pair(dyck_pair_from_json(payload));
    fail(Err::UnsupportedRoute, "cannot map from class: " + cls);
}

Json from_hub(const std::string& cls, const TreeLikeTableau& t) {
    if (cls == "tlt") return to_json(t);
    if (cls == "baxter-tlt") {
        require(is_baxter(t), Err::NotInDomain, "tableau is not Baxter");
        return to_json(t);
    }
    if (cls == "perm") return to_json(phi(t));
    if (cls == "pfp") {
        require(is_baxter(t), Err::NotInDomain, "tableau is not Baxter");
        return to_json(phi_F(t));
    }
    if (cls == "nilp") {
        require(is_baxter(t), Err::NotInDomain, "tableau is not Baxter");
        return to_json(phi_P(t));
    }
    if (cls == "dyck-pair") {
        require(is_baxter(t) && is_almost_complete(t), Err::NotInDomain,
                "tableau is not almost complete");
        return to_json(to_dyck_pair(t));
    }
    fail(Err::UnsupportedRoute, "cannot map to class: " + cls);
}

std::string render_payload(const std::string& cls, const Json& payload, const std::string& fmt) {
    bool svg = fmt == "svg";
    if (cls == "tlt" || cls == "baxter-tlt") {
        TreeLikeTableau t = tlt_from_json(payload);
        return svg ? render_tlt_svg(t) : render_tlt_ascii(t);
    }
    if (cls == "pfp") {
        PackedFloorplan f = pfp_from_json(payload);
        return svg ? render_floorplan_svg(f.height, f.width, f.tiles)
                   : render_floorplan_ascii(f.height, f.width, f.tiles);
    }
    if (cls == "floorplan") {
        Floorplan f = floorplan_from_json(payload);
        return svg ? render_floorplan_svg(f.height, f.width, f.tiles)
                   : render_floorplan_ascii(f.height, f.width, f.tiles);
    }
    if (cls == "nilp") {
        NilpTriple t = triple_from_json(payload);
        return svg ? render_triple_svg(t) : render_triple_ascii(t);
    }
    if (cls == "dyck-pair") {
        DyckPair d = dyck_pair_from_json(payload);
        return svg ? render_dyck_pair_svg(d) : render_dyck_pair_ascii(d);
    }
    if (cls == "perm") {
        Permutation p = permutation_from_json(payload);
        return svg ? render_permutation_svg(p) : render_permutation_ascii(p);
    }
    fail(Err::UnsupportedRoute, "cannot render class: " + cls);
}

void gen_class(const std::string& cls, int n, const std::string& fmt, std::ostream& out) {
    auto emit = [&](const std::string& envelope_class, const Json& payload) {
        if (fmt == "ascii")
            out << render_payload(envelope_class, payload, "ascii") << "\n";
        else
            out << make_envelope(envelope_class, payload).dump() << "\n";
    };
    if (cls == "tlt") {
        for (const auto& t : enumerate_tlts(n)) emit("tlt", to_json(t));
    } else if (cls == "baxter-tlt") {
        for (const auto& t : enumerate_baxter_tlts(n)) emit("baxter-tlt", to_json(t));
    } else if (cls == "almost-complete-tlt") {
        for (const auto& t : enumerate_baxter_tlts(n))
            if (is_almost_complete(t)) emit("baxter-tlt", to_json(t));
    } else if (cls == "pfp") {
        for (const auto& f : enumerate_pfps(n)) emit("pfp", to_json(f));
    } else if (cls == "alternating-pfp") {
        for (const auto& f : enumerate_pfps(n))
            if (is_alternating(f)) emit("pfp", to_json(f));
    } else if (cls == "nilp") {
        for (const auto& t : enumerate_triples(n)) emit("nilp", to_json(t));
    } else if (cls == "dyck-pair") {
        for (const auto& d : enumerate_dyck_pairs(n)) emit("dyck-pair", to_json(d));
    } else if (cls == "perm-twisted-inverse") {
        for (const Permutation& p : enumerate_permutations(n))
            if (in_B(p)) emit("perm", to_json(p));
    } else if (cls == "alternating-perm-twisted-inverse") {
        for (const Permutation& p : enumerate_permutations(n))
            if (in_B(p) && is_alternating_up(p)) emit("perm", to_json(p));
    } else {
        fail(Err::UnsupportedRoute, "unknown class: " + cls);
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Baxter tableaux, floorplans, twisted Baxter permutation inverses and "
                 "non-intersecting path triples"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "json";
    bool seedless = false;
    app.add_option("--format", format, "output format: json or ascii")
        ->check(CLI::IsMember({"json", "ascii"}));
    app.add_flag("--seedless", seedless,
                 "assert deterministic behavior (the tool uses no randomness)");

    std::string cls, method = "direct", input, from_cls, to_cls, perm_text, pattern_text;
    std::string render_fmt = "ascii";
    int size = 1, max_size = 4;
    int gn = 1, gk = 0, gr = 1, gp = 1, gs = 1, gq = 1;

    CLI::App* count = app.add_subcommand("count", "count a family at a given size");
    count->add_option("--class", cls, "object class")->required();
    count->add_option("--size", size, "object size")->required()->check(CLI::PositiveNumber);
    count->add_option("--method", method, "direct or oracle")
        ->check(CLI::IsMember({"direct", "oracle"}));

    CLI::App* gen = app.add_subcommand("gen", "enumerate a family in canonical order");
    gen->add_option("--class", cls, "object class")->required();
    gen->add_option("--size", size, "object size")->required()->check(CLI::PositiveNumber);

    CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection between classes");
    map_cmd->add_option("--from", from_cls, "input class")->required();
    map_cmd->add_option("--to", to_cls, "output class")->required();
    map_cmd->add_option("--input", input, "input file, or - for stdin");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--max-size", max_size, "largest object size to check")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* lgv_cmd = app.add_subcommand("lgv", "evaluate the path-counting determinant");
    lgv_cmd->add_option("--n", gn)->required();
    lgv_cmd->add_option("--k", gk)->required();
    lgv_cmd->add_option("--r", gr)->required();
    lgv_cmd->add_option("--p", gp)->required();
    lgv_cmd->add_option("--s", gs)->required();
    lgv_cmd->add_option("--q", gq)->required();

    CLI::App* pack_cmd = app.add_subcommand("pack", "canonicalize a floorplan");
    pack_cmd->add_option("--input", input, "input file, or - for stdin");

    CLI::App* patterns_cmd = app.add_subcommand("patterns", "list pattern occurrences");
    patterns_cmd->add_option("--perm", perm_text, "host permutation, one-line")->required();
    patterns_cmd->add_option("--pattern", pattern_text, "pattern, e.g. 3-14-2 or 2+-12")
        ->required();

    CLI::App* render_cmd = app.add_subcommand("render", "draw an object");
    render_cmd->add_option("--class", cls, "object class")->required();
    render_cmd->add_option("--input", input, "input file, or - for stdin");
    render_cmd->add_option("--render-format", render_fmt, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (count->parsed()) {
            out << count_class(cls, size, method == "oracle").str() << "\n";
        } else if (gen->parsed()) {
            gen_class(cls, size, format, out);
        } else if (map_cmd->parsed()) {
            Json j = read_input_json(input, in);
            TreeLikeTableau hub = to_hub(from_cls, payload_for(j, from_cls));
            out << make_envelope(to_cls, from_hub(to_cls, hub)).dump() << "\n";
        } else if (verify->parsed()) {
            VerificationReport report = verify_all(max_size);
            for (const CheckResult& c : report.checks) out << to_json(c).dump() << "\n";
            return report.all_passed() ? 0 : 1;
        } else if (lgv_cmd->parsed()) {
            out << lgv({gn, gk, gr, gp, gs, gq}).str() << "\n";
        } else if (pack_cmd->parsed()) {
            Json j = read_input_json(input, in);
            Floorplan f = floorplan_from_json(payload_for(j, "floorplan"));
            out << make_envelope("pfp", to_json(pack(f))).dump() << "\n";
        } else if (patterns_cmd->parsed()) {
            Permutation host = Permutation::parse(perm_text);
            BivincularPattern pat = parse_pattern(pattern_text);
            auto occs = occurrences(host, pat);
            if (format == "ascii") {
                for (const Occurrence& o : occs) {
                    for (size_t i = 0; i < o.indices.size(); ++i)
                        out << (i ? " " : "") << host(o.indices[i]);
                    out << "\n";
                }
            } else {
                Json arr = Json::array();
                for (const Occurrence& o : occs) {
                    Json vals = Json::array();
                    for (int idx : o.indices) vals.push_back(host(idx));
                    arr.push_back(Json{{"positions", o.indices}, {"values", vals}});
                }
                out << Json{{"count", occs.size()}, {"occurrences", arr}}.dump() << "\n";
            }
        } else if (render_cmd->parsed()) {
            Json j = read_input_json(input, in);
            out << render_payload(cls, payload_for(j, cls), render_fmt);
        }
    } catch (const BaxterError& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace baxter
