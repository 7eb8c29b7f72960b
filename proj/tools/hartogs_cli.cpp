// Command line front end. Everything goes through the C API in
// include/hartogs/hartogs.h; descriptors are JSON strings.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hartogs/hartogs.h"

using nlohmann::json;

namespace {

struct CtxDeleter { void operator()(htg_context* c) const { htg_context_free(c); } };
struct DomDeleter { void operator()(htg_domain* d) const { htg_domain_free(d); } };
struct MapDeleter { void operator()(htg_map* m) const { htg_map_free(m); } };

using Ctx = std::unique_ptr<htg_context, CtxDeleter>;
using Dom = std::unique_ptr<htg_domain, DomDeleter>;
using Map = std::unique_ptr<htg_map, MapDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    htg_string_free(s);
    return out;
}

int exit_code(htg_status s) {
    switch (s) {
        case HTG_OK: return 0;
        case HTG_ERR_PARSE: return 2;
        case HTG_ERR_NO_PROPER_MAP: return 3;
        case HTG_ERR_DIMENSION: return 4;
        case HTG_ERR_DOMAIN: return 5;
        case HTG_ERR_INVALID: return 6;
        case HTG_ERR_VERIFY_FAILED: return 6;
        default: return 1;
    }
}

[[noreturn]] void fail(const Ctx& ctx, htg_status s) {
    json err{{"error", htg_status_name(s)}, {"message", htg_last_error(ctx.get())}};
    std::cout << err.dump() << "\n";
    std::cerr << "error: " << htg_last_error(ctx.get()) << "\n";
    std::exit(exit_code(s));
}

void check(const Ctx& ctx, htg_status s) {
    if (s != HTG_OK) fail(ctx, s);
}

// Inline JSON or a path to a file holding it.
std::string read_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
    std::ifstream in(arg);
    if (!in) {
        std::cerr << "error: cannot open '" << arg << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Dom parse_domain(const Ctx& ctx, const std::string& arg) {
    htg_domain* d = nullptr;
    check(ctx, htg_domain_parse(ctx.get(), read_json_arg(arg).c_str(), &d));
    return Dom(d);
}

std::vector<double> parse_number_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proper holomorphic maps between generalized Hartogs triangles"};
    app.require_subcommand(1);

    double tol = 1e-9;
    double lambda = std::sqrt(2.0);
    std::uint64_t seed = 42;
    std::string out_format = "json";
    app.add_option("--tol", tol, "membership/boundary tolerance")->check(CLI::Range(1e-15, 1e-3));
    app.add_option("--lambda", lambda, "numeric value of the formal transcendental L")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for all sampling")->envname("HARTOGS_SEED");
    app.add_option("--out", out_format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string src_json, dst_json, map_arg, points_arg, suite = "all";
    std::string p_csv, q_str, point_csv, tangent_csv;
    std::size_t n_samples = 0, verify_samples = 200;

    CLI::App* cmd_exists = app.add_subcommand("exists", "decide existence of a proper map");
    cmd_exists->add_option("--src", src_json, "source domain JSON")->required();
    cmd_exists->add_option("--dst", dst_json, "target domain JSON")->required();

    CLI::App* cmd_construct = app.add_subcommand("construct", "emit the canonical proper map");
    cmd_construct->add_option("--src", src_json, "source domain JSON")->required();
    cmd_construct->add_option("--dst", dst_json, "target domain JSON")->required();

    CLI::App* cmd_aut = app.add_subcommand("aut", "describe Aut(F_{p,q}) and sample members");
    cmd_aut->add_option("--src", src_json, "domain JSON")->required();
    cmd_aut->add_option("--samples", n_samples, "number of seeded samples to emit");

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate a map at points");
    cmd_eval->add_option("--map", map_arg, "map JSON or path")->required();
    cmd_eval->add_option("--points", points_arg, "points JSON or path")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run verification sweeps on a map");
    cmd_verify->add_option("--map", map_arg, "map JSON or path")->required();
    cmd_verify->add_option("--suite", suite, "all | interior | boundary | holomorphy | ray");
    cmd_verify->add_option("--samples", verify_samples, "samples per sweep");

    CLI::App* cmd_levi = app.add_subcommand("levi", "restricted Levi identity at a K point (m = 1)");
    cmd_levi->add_option("--p", p_csv, "comma-separated z exponents, e.g. 1,1")->required();
    cmd_levi->add_option("--q", q_str, "w exponent")->required();
    cmd_levi->add_option("--point", point_csv, "re,im pairs for z then w")->required();
    cmd_levi->add_option("--tangent", tangent_csv, "re,im pairs for the z tangent X")->required();

    CLI11_PARSE(app, argc, argv);

    Ctx ctx(htg_context_new());
    htg_context_set_tolerance(ctx.get(), tol);
    htg_context_set_lambda(ctx.get(), lambda);
    htg_context_set_seed(ctx.get(), seed);

    const bool as_json = out_format == "json";

    if (cmd_exists->parsed()) {
        Dom src = parse_domain(ctx, src_json), dst = parse_domain(ctx, dst_json);
        char* witness = nullptr;
        check(ctx, htg_exists(ctx.get(), src.get(), dst.get(), &witness));
        std::string w = take_string(witness);
        if (as_json) std::cout << w << "\n";
        else std::cout << "proper map exists; witness " << w << "\n";
        return 0;
    }

    if (cmd_construct->parsed()) {
        Dom src = parse_domain(ctx, src_json), dst = parse_domain(ctx, dst_json);
        htg_map* m = nullptr;
        check(ctx, htg_construct(ctx.get(), src.get(), dst.get(), &m));
        Map map(m);
        char* js = nullptr;
        check(ctx, htg_map_to_json(ctx.get(), map.get(), &js));
        std::cout << take_string(js) << "\n";
        return 0;
    }

    if (cmd_aut->parsed()) {
        Dom d = parse_domain(ctx, src_json);
        char* fam = nullptr;
        check(ctx, htg_aut_family(ctx.get(), d.get(), &fam));
        json out;
        out["family"] = json::parse(take_string(fam));
        if (n_samples > 0) {
            json samples = json::array();
            for (std::size_t i = 0; i < n_samples; ++i) {
                htg_map* m = nullptr;
                check(ctx, htg_aut_sample(ctx.get(), d.get(), seed + i, &m));
                Map aut(m);
                char* js = nullptr;
                check(ctx, htg_map_to_json(ctx.get(), aut.get(), &js));
                samples.push_back(json::parse(take_string(js)));
            }
            out["samples"] = samples;
        }
        std::cout << out.dump() << "\n";
        return 0;
    }

    if (cmd_eval->parsed()) {
        htg_map* mp = nullptr;
        check(ctx, htg_map_parse(ctx.get(), read_json_arg(map_arg).c_str(), &mp));
        Map map(mp);
        const int n = htg_map_dim_z(map.get()), m = htg_map_dim_w(map.get());
        json pts = json::parse(read_json_arg(points_arg), nullptr, false);
        if (pts.is_discarded()) {
            std::cerr << "error: malformed points JSON\n";
            return 2;
        }
        // Points: array of [re,im] pairs (one point) or array of such arrays.
        json list = (!pts.empty() && pts.at(0).is_array() && !pts.at(0).empty() &&
                     pts.at(0).at(0).is_array())
                        ? pts
                        : json::array({pts});
        json images = json::array();
        for (const json& pt : list) {
            if (static_cast<int>(pt.size()) != n + m) {
                std::cerr << "error: each point needs " << (n + m) << " coordinates\n";
                return 2;
            }
            std::vector<double> in, out_coords(2 * (n + m));
            for (const json& c : pt) {
                in.push_back(c.at(0).get<double>());
                in.push_back(c.at(1).get<double>());
            }
            check(ctx, htg_map_eval(ctx.get(), map.get(), in.data(), out_coords.data()));
            json img = json::array();
            for (int j = 0; j < n + m; ++j)
                img.push_back(json::array({out_coords[2 * j], out_coords[2 * j + 1]}));
            images.push_back(img);
        }
        std::cout << images.dump() << "\n";
        return 0;
    }

    if (cmd_verify->parsed()) {
        htg_map* mp = nullptr;
        check(ctx, htg_map_parse(ctx.get(), read_json_arg(map_arg).c_str(), &mp));
        Map map(mp);
        char* report_json = nullptr;
        check(ctx, htg_map_validate(ctx.get(), map.get(), &report_json));
        htg_string_free(report_json);
        char* reports = nullptr;
        int all_pass = 0;
        htg_status s = htg_verify(ctx.get(), map.get(), suite.c_str(), verify_samples,
                                  &reports, &all_pass);
        std::string lines = take_string(reports);
        std::cout << lines;
        if (s != HTG_OK && s != HTG_ERR_VERIFY_FAILED) fail(ctx, s);
        if (!as_json) std::cerr << (all_pass ? "all properties passed\n" : "FAILURES above\n");
        return all_pass ? 0 : 6;
    }

    if (cmd_levi->parsed()) {
        std::vector<std::string> pitems = parse_string_list(p_csv);
        json pj = json(pitems);
        std::vector<double> point = parse_number_list(point_csv);
        std::vector<double> tangent = parse_number_list(tangent_csv);
        const std::size_t n = pitems.size();
        if (point.size() != 2 * (n + 1) || tangent.size() != 2 * n) {
            std::cerr << "error: point needs " << 2 * (n + 1) << " numbers, tangent " << 2 * n
                      << "\n";
            return 2;
        }
        double lhs = 0, rhs = 0;
        check(ctx, htg_levi(ctx.get(), pj.dump().c_str(), q_str.c_str(), point.data(),
                            tangent.data(), &lhs, &rhs));
        if (as_json) {
            std::cout << json{{"lhs", lhs}, {"rhs", rhs}, {"difference", lhs - rhs}}.dump() << "\n";
        } else {
            std::cout << "levi form (induced tangent): " << lhs << "\n"
                      << "sum-of-squares form:        " << rhs << "\n";
        }
        return 0;
    }

    return 1;
}
