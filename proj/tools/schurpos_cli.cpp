// schurpos: expansions, positivity filters, oracle verification and pruning
// statistics from the command line.
//
// Exit codes: 0 success, 1 verification or internal failure, 2 usage error.

#include "schurpos/json_io.hpp"
#include "schurpos/littlewood_richardson.hpp"
#include "schurpos/plethysm.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <string>

namespace {

using schurpos::Partition;
using schurpos::json_io::Json;

constexpr int kUsageError = 2;
constexpr int kFailure = 1;

struct GlobalFlags {
    bool pretty = false;
    bool json = true;
    bool no_timing = false;
    unsigned parallel = 1;
};

// Accepts "3,2", "(3,2)" or "[3,2]"; "" is the empty partition.
Partition parse_literal(std::string text) {
    if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') || (text.front() == '[' && text.back() == ']'))) {
        text = text.substr(1, text.size() - 2);
    }
    return schurpos::json_io::parse_partition_literal(text);
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const GlobalFlags& flags, const std::string& command, Json inputs, Json output, const Timer& timer) {
    Json result = {{"command", command}, {"inputs", std::move(inputs)}, {"output", std::move(output)}};
    if (!flags.no_timing) result["elapsed_ms"] = timer.elapsed_ms();
    std::cout << (flags.pretty ? result.dump(2) : result.dump()) << '\n';
}

schurpos::PlethysmOptions plethysm_options(const GlobalFlags& flags, bool prune) {
    schurpos::PlethysmOptions options;
    options.prune = prune;
    options.threads = flags.parallel;
    options.cache = &schurpos::CharacterCache::shared();
    return options;
}

std::string count_string(std::int64_t v) { return std::to_string(v); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schur function expansions, plethysm and positivity filters"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Emit JSON (default)");
    app.add_flag("--pretty", flags.pretty, "Indent JSON output");
    app.add_flag("--no-timing", flags.no_timing, "Omit wall-clock fields");
    app.add_option("--parallel", flags.parallel, "Worker threads for independent coefficients")->check(CLI::PositiveNumber);

    // expand
    auto* expand = app.add_subcommand("expand", "Schur expansion of a product or plethysm");
    std::string expand_kind, expand_mu, expand_nu, expand_lambda;
    std::int64_t expand_n = 1;
    bool expand_prune = false;
    expand->add_option("kind", expand_kind, "product | sxp | plethysm")
        ->required()
        ->check(CLI::IsMember({"product", "sxp", "plethysm"}));
    expand->add_option("-m,--mu", expand_mu, "First partition (product, plethysm)");
    expand->add_option("-v,--nu", expand_nu, "Second partition (product, plethysm)");
    expand->add_option("-l,--lambda", expand_lambda, "Partition for p_n o s_lambda");
    expand->add_option("-n", expand_n, "Power-sum index for sxp")->check(CLI::PositiveNumber);
    expand->add_flag("--prune", expand_prune, "Apply the positivity filters inside the computation");

    // filter
    auto* filter = app.add_subcommand("filter", "Positivity filters");
    std::string filter_kind, filter_lambda, filter_nu;
    std::vector<std::string> filter_mus;
    std::int64_t filter_n = 1;
    bool filter_candidates = false;
    filter->add_option("kind", filter_kind, "lr | sxp | plethysm")->required()->check(CLI::IsMember({"lr", "sxp", "plethysm"}));
    filter->add_option("-m,--mu", filter_mus, "Factor of the product (repeatable, lr)");
    filter->add_option("-n", filter_n, "Power-sum index (sxp)")->check(CLI::PositiveNumber);
    filter->add_option("-l,--lambda", filter_lambda, "Inner partition (sxp)");
    filter->add_option("-v,--nu", filter_nu, "Inner partition of the plethysm (plethysm)");
    filter->add_flag("--candidates", filter_candidates, "Also list candidate partitions (sxp)");

    // stats
    auto* stats = app.add_subcommand("stats", "Pruning statistics for s_mu o s_nu");
    std::string stats_mu, stats_nu;
    stats->add_option("mu", stats_mu, "Outer partition")->required();
    stats->add_option("nu", stats_nu, "Inner partition")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check the engine against the oracle and filters");
    std::string verify_scope = "all";
    std::int64_t verify_max = 8;
    verify->add_option("--scope", verify_scope, "all | lr | sxp | plethysm")->check(CLI::IsMember({"all", "lr", "sxp", "plethysm"}));
    verify->add_option("--max", verify_max, "Largest degree swept")->check(CLI::Range(0, 16));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    using namespace schurpos;
    using json_io::encode;
    const Timer timer;
    try {
        if (*expand) {
            SchurExpansion result;
            Json inputs = {{"kind", expand_kind}};
            if (expand_kind == "sxp") {
                const auto lambda = parse_literal(expand_lambda);
                inputs["n"] = count_string(expand_n);
                inputs["lambda"] = encode(lambda);
                result = sxp_plethysm(expand_n, lambda, plethysm_options(flags, expand_prune));
            } else {
                const auto mu = parse_literal(expand_mu);
                const auto nu = parse_literal(expand_nu);
                inputs["mu"] = encode(mu);
                inputs["nu"] = encode(nu);
                result = expand_kind == "product" ? lr_product(mu, nu)
                                                  : schur_plethysm(mu, nu, plethysm_options(flags, expand_prune));
            }
            emit(flags, "expand", std::move(inputs), encode(result), timer);
            return 0;
        }

        if (*filter) {
            if (filter_kind == "lr") {
                if (filter_mus.empty()) throw json_io::ParseError("filter lr needs at least one -m");
                std::vector<Partition> mus;
                Json listed = Json::array();
                for (const auto& m : filter_mus) {
                    mus.push_back(parse_literal(m));
                    listed.push_back(encode(mus.back()));
                }
                CornerSet corners{Point{0, 0}};
                for (const auto& mu : mus) corners = minkowski_sum(corners, outer_corners(mu));
                Json output = {{"theta", encode(lr_bound(mus))}, {"corner_sum", encode(corners)}};
                emit(flags, "filter", {{"kind", "lr"}, {"mus", listed}}, std::move(output), timer);
                return 0;
            }
            if (filter_kind == "sxp") {
                const auto lambda = parse_literal(filter_lambda);
                const auto bounds = sxp_upper_bound(filter_n, lambda);
                Json output = encode(bounds);
                output["lower"] = encode(lambda);
                if (filter_candidates) {
                    Json list = Json::array();
                    for (const auto& mu : enumerate_candidates(filter_n, lambda)) list.push_back(encode(mu));
                    output["candidates"] = std::move(list);
                }
                emit(flags, "filter", {{"kind", "sxp"}, {"n", count_string(filter_n)}, {"lambda", encode(lambda)}},
                     std::move(output), timer);
                return 0;
            }
            // plethysm: stream candidates from stdin, echo the survivors.
            const auto nu = parse_literal(filter_nu);
            std::string line;
            while (std::getline(std::cin, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                Json parsed;
                try {
                    parsed = Json::parse(line);
                } catch (const Json::parse_error&) {
                    throw json_io::ParseError("stdin line is not JSON: " + line);
                }
                const auto lambda = json_io::decode_partition(parsed);
                if (plethysm_filter_check(nu, lambda)) std::cout << encode(lambda).dump() << '\n';
            }
            return 0;
        }

        if (*stats) {
            const auto mu = parse_literal(stats_mu);
            const auto nu = parse_literal(stats_nu);
            const auto s = verify::pruning_stats(mu, nu, plethysm_options(flags, false));
            Json output = {{"total", count_string(s.total)},
                           {"after_filter", count_string(s.after_filter)},
                           {"actual_support", count_string(s.actual_support)}};
            if (!flags.no_timing) output["timings_ms"] = {{"filter", s.filter_ms}, {"expand", s.expand_ms}};
            emit(flags, "stats", {{"mu", encode(mu)}, {"nu", encode(nu)}}, std::move(output), timer);
            return 0;
        }

        if (*verify) {
            const auto scope = verify_scope == "lr"         ? verify::Scope::LR
                               : verify_scope == "sxp"      ? verify::Scope::SXP
                               : verify_scope == "plethysm" ? verify::Scope::Plethysm
                                                            : verify::Scope::All;
            const auto reports = verify::run_scope(scope, verify_max, flags.parallel);
            Json sweeps = Json::array();
            bool ok = true;
            for (const auto& r : reports) {
                Json entry = {{"name", r.name}, {"checked", count_string(static_cast<std::int64_t>(r.checked))},
                              {"passed", r.passed()}};
                if (r.counterexample) entry["counterexample"] = *r.counterexample;
                sweeps.push_back(std::move(entry));
                if (!r.passed()) {
                    ok = false;
                    break;
                }
            }
            emit(flags, "verify", {{"scope", verify_scope}, {"max", count_string(verify_max)}},
                 {{"passed", ok}, {"sweeps", std::move(sweeps)}}, timer);
            return ok ? 0 : kFailure;
        }
    } catch (const json_io::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const NonIntegralResult& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsageError;
}
