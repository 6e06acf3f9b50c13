#include "schurpos/verify.hpp"

#include "schurpos/littlewood_richardson.hpp"
#include "schurpos/oracle.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/quotient.hpp"

#include <chrono>
#include <sstream>

namespace schurpos::verify {

namespace {

std::vector<Partition> partitions_up_to(std::int64_t max_size, std::int64_t min_size = 0) {
    std::vector<Partition> out;
    for (auto n = min_size; n <= max_size; ++n) {
        for (auto& p : partitions_of(n)) out.push_back(std::move(p));
    }
    return out;
}

std::string describe_difference(const SchurExpansion& got, const SchurExpansion& want) {
    std::ostringstream os;
    for (const auto& [lambda, c] : got) {
        if (want.coeff(lambda) != c) {
            os << " s" << lambda.to_string() << ": " << c.get_str() << " vs " << want.coeff(lambda).get_str();
            return os.str();
        }
    }
    for (const auto& [lambda, c] : want) {
        if (got.coeff(lambda) != c) {
            os << " s" << lambda.to_string() << ": " << got.coeff(lambda).get_str() << " vs " << c.get_str();
            return os.str();
        }
    }
    return " (degree only)";
}

std::string tuple_string(std::span<const Partition> parts) {
    std::string out;
    for (const auto& p : parts) out += p.to_string();
    return out;
}

}  // namespace

SweepReport product_vs_oracle(std::int64_t max_degree, CharacterCache& cache) {
    SweepReport report{"product_vs_oracle", 0, std::nullopt};
    const auto all = partitions_up_to(max_degree);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            if (mu.size() + nu.size() > max_degree) continue;
            const auto main = schur_product(SchurExpansion::basis(mu), SchurExpansion::basis(nu));
            const auto reference = oracle::oracle_product(mu, nu, &cache);
            ++report.checked;
            if (!(main == reference)) {
                report.counterexample = "s" + mu.to_string() + " * s" + nu.to_string() + describe_difference(main, reference);
                return report;
            }
        }
    }
    return report;
}

SweepReport lr_symmetry(std::int64_t max_degree) {
    SweepReport report{"lr_symmetry", 0, std::nullopt};
    for (std::int64_t total = 0; total <= max_degree; ++total) {
        for (const auto& lambda : partitions_of(total)) {
            for (std::int64_t a = 0; a <= total; ++a) {
                for (const auto& mu : partitions_of(a)) {
                    if (!contains(lambda, mu)) continue;
                    for (const auto& nu : partitions_of(total - a)) {
                        if (!contains(lambda, nu)) continue;
                        ++report.checked;
                        if (lr_coefficient(lambda, mu, nu) != lr_coefficient(lambda, nu, mu)) {
                            report.counterexample = "c^" + lambda.to_string() + "_" + mu.to_string() + nu.to_string();
                            return report;
                        }
                    }
                }
            }
        }
    }
    return report;
}

SweepReport lr_support_bounds(std::int64_t max_degree) {
    SweepReport report{"lr_support_bounds", 0, std::nullopt};
    const auto all = partitions_up_to(max_degree);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            if (mu.size() + nu.size() > max_degree) continue;
            const auto top = sum(mu, nu);
            const auto bottom = union_of(mu, nu);
            const auto product = lr_product(mu, nu);
            for (const auto& [lambda, c] : product) {
                ++report.checked;
                if (!dominates(top, lambda) || !dominates(lambda, bottom)) {
                    report.counterexample = "s" + lambda.to_string() + " in s" + mu.to_string() + " * s" + nu.to_string() +
                                            " breaks dominance bounds";
                    return report;
                }
            }
            if (product.coeff(top) != 1 || product.coeff(bottom) != 1) {
                report.counterexample = "extreme coefficients of s" + mu.to_string() + " * s" + nu.to_string();
                return report;
            }
        }
    }
    return report;
}

SweepReport lr_bound_soundness(std::int64_t max_degree, std::size_t max_factors) {
    SweepReport report{"lr_bound_soundness", 0, std::nullopt};
    const auto all = partitions_up_to(max_degree, 1);
    std::vector<Partition> tuple;
    std::vector<SchurExpansion> prefix{SchurExpansion::basis(Partition{})};

    std::function<bool(std::size_t, std::int64_t)> walk = [&](std::size_t start, std::int64_t budget) {
        if (!tuple.empty()) {
            const auto theta = lr_bound(tuple);
            for (const auto& [lambda, c] : prefix.back()) {
                ++report.checked;
                if (!contains(theta, lambda)) {
                    report.counterexample = "s" + lambda.to_string() + " in product of " + tuple_string(tuple) +
                                            " escapes " + theta.to_string();
                    return false;
                }
            }
        }
        if (tuple.size() == max_factors) return true;
        for (std::size_t i = start; i < all.size(); ++i) {
            if (all[i].size() > budget) continue;
            tuple.push_back(all[i]);
            prefix.push_back(schur_product(prefix.back(), SchurExpansion::basis(all[i])));
            const bool ok = walk(i, budget - all[i].size());
            prefix.pop_back();
            tuple.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    walk(0, max_degree);
    return report;
}

SweepReport sxp_vs_oracle(std::int64_t max_n, std::int64_t max_size, std::int64_t max_degree, CharacterCache& cache) {
    SweepReport report{"sxp_vs_oracle", 0, std::nullopt};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (const auto& lambda : partitions_up_to(max_size)) {
            if (n * lambda.size() > max_degree) continue;
            PlethysmOptions options;
            options.cache = &cache;
            const auto main = sxp_plethysm(n, lambda, options);
            const auto reference = oracle::oracle_power_plethysm(n, lambda, &cache);
            ++report.checked;
            if (!(main == reference)) {
                report.counterexample = "p_" + std::to_string(n) + " o s" + lambda.to_string() +
                                        describe_difference(main, reference);
                return report;
            }
            options.prune = true;
            if (!(sxp_plethysm(n, lambda, options) == main)) {
                report.counterexample = "pruned p_" + std::to_string(n) + " o s" + lambda.to_string() + " differs";
                return report;
            }
        }
    }
    return report;
}

SweepReport sxp_bounds_soundness(std::int64_t max_n, std::int64_t max_size, std::int64_t max_degree) {
    SweepReport report{"sxp_bounds_soundness", 0, std::nullopt};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (const auto& lambda : partitions_up_to(max_size)) {
            if (n * lambda.size() > max_degree) continue;
            const auto bound = sxp_upper_bound(n, lambda).intersection;
            const auto candidates = enumerate_candidates(n, lambda);
            for (const auto& [mu, c] : sxp_plethysm(n, lambda)) {
                ++report.checked;
                const auto where = "s" + mu.to_string() + " in p_" + std::to_string(n) + " o s" + lambda.to_string();
                if (!sxp_lower_check(lambda, mu)) report.counterexample = where + " fails the lower bound";
                else if (!contains(bound, mu)) report.counterexample = where + " escapes " + bound.to_string();
                else if (!core_of(mu, n).empty()) report.counterexample = where + " has a nonempty core";
                else if (std::find(candidates.begin(), candidates.end(), mu) == candidates.end())
                    report.counterexample = where + " missing from candidates";
                if (report.counterexample) return report;
            }
        }
    }
    return report;
}

SweepReport sxp_extreme_terms(std::int64_t max_n, std::int64_t max_size) {
    SweepReport report{"sxp_extreme_terms", 0, std::nullopt};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (const auto& lambda : partitions_up_to(max_size, 1)) {
            const auto f = sxp_plethysm(n, lambda);
            const int union_sign = (lambda.size() * (n - 1)) % 2 == 0 ? 1 : -1;
            ++report.checked;
            if (f.coeff(scale(lambda, n)) != 1 || f.coeff(repeat_union(lambda, n)) != union_sign) {
                report.counterexample = "extreme terms of p_" + std::to_string(n) + " o s" + lambda.to_string();
                return report;
            }
        }
    }
    return report;
}

SweepReport plethysm_vs_oracle(std::int64_t max_degree, CharacterCache& cache) {
    SweepReport report{"plethysm_vs_oracle", 0, std::nullopt};
    const auto all = partitions_up_to(max_degree, 1);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            if (mu.size() * nu.size() > max_degree) continue;
            PlethysmOptions options;
            options.cache = &cache;
            const auto main = schur_plethysm(mu, nu, options);
            const auto reference = oracle::oracle_plethysm(mu, nu, &cache);
            ++report.checked;
            if (!(main == reference)) {
                report.counterexample = "s" + mu.to_string() + " o s" + nu.to_string() + describe_difference(main, reference);
                return report;
            }
        }
    }
    return report;
}

SweepReport plethysm_filter_soundness(std::int64_t max_degree, CharacterCache& cache) {
    SweepReport report{"plethysm_filter_soundness", 0, std::nullopt};
    const auto all = partitions_up_to(max_degree, 1);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            const auto degree = mu.size() * nu.size();
            if (degree > max_degree) continue;
            PlethysmOptions options;
            options.cache = &cache;
            const auto f = schur_plethysm(mu, nu, options);
            const auto where = "s" + mu.to_string() + " o s" + nu.to_string();
            for (const auto& [lambda, c] : f) {
                ++report.checked;
                if (!plethysm_filter_check(nu, lambda)) {
                    report.counterexample = "s" + lambda.to_string() + " in " + where + " does not contain " + nu.to_string();
                    return report;
                }
            }
            const auto predicted = trivial_sign_multiplicity(mu, nu);
            const auto trivial = f.coeff(Partition{degree});
            const auto sign = f.coeff(Partition(std::vector<Partition::Part>(static_cast<std::size_t>(degree), 1)));
            if (trivial != predicted.trivial || sign != predicted.sign) {
                report.counterexample = "trivial/sign multiplicities of " + where + ": expansion has (" + trivial.get_str() +
                                        "," + sign.get_str() + ")";
                return report;
            }
        }
    }
    return report;
}

SweepReport quotient_bijection(std::int64_t max_size, std::int64_t max_n) {
    SweepReport report{"quotient_bijection", 0, std::nullopt};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        for (const auto& mu : partitions_up_to(max_size)) {
            const auto q = decompose(mu, n);
            ++report.checked;
            if (reconstruct(n, q.core, q.quotient) != mu) {
                report.counterexample = "reconstruct(decompose(" + mu.to_string() + ", " + std::to_string(n) + "))";
                return report;
            }
        }
        // Other direction: every (core, quotient) pair of the right total size.
        for (const auto& core : partitions_up_to(max_size)) {
            if (!is_core(core, n)) continue;
            for (std::int64_t k = 0; core.size() + n * k <= max_size; ++k) {
                for (const auto& quotient : multipartitions(n, k)) {
                    const auto mu = reconstruct(n, core, quotient);
                    const auto q = decompose(mu, n);
                    ++report.checked;
                    if (q.core != core || q.quotient != quotient) {
                        report.counterexample = "decompose(reconstruct(" + std::to_string(n) + ", " + core.to_string() +
                                                ", " + tuple_string(quotient) + "))";
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

SweepReport quotient_size_formula(std::int64_t max_size, std::int64_t max_n) {
    SweepReport report{"quotient_size_formula", 0, std::nullopt};
    for (std::int64_t n = 2; n <= max_n; ++n) {
        for (const auto& mu : partitions_up_to(max_size)) {
            const auto q = decompose(mu, n);
            ++report.checked;
            if (mu.size() != q.core.size() + n * q.quotient_size() || !is_core(q.core, n)) {
                report.counterexample = "size formula for " + mu.to_string() + " n=" + std::to_string(n);
                return report;
            }
        }
    }
    return report;
}

SweepReport corner_round_trip(std::int64_t max_size) {
    SweepReport report{"corner_round_trip", 0, std::nullopt};
    for (const auto& lambda : partitions_up_to(max_size)) {
        ++report.checked;
        if (ideal_complement(outer_corners(lambda)) != lambda || conjugate(conjugate(lambda)) != lambda) {
            report.counterexample = lambda.to_string();
            return report;
        }
    }
    return report;
}

SweepReport character_orthogonality(std::int64_t max_size, CharacterCache& cache) {
    SweepReport report{"character_orthogonality", 0, std::nullopt};
    for (std::int64_t n = 0; n <= max_size; ++n) {
        const auto shapes = partitions_of(n);
        std::vector<Integer> z;
        for (const auto& rho : shapes) z.push_back(z_of(rho));
        for (const auto& mu : shapes) {
            for (const auto& nu : shapes) {
                Rational total = 0;
                for (std::size_t i = 0; i < shapes.size(); ++i) {
                    total += ratio(character(mu, shapes[i], &cache) * character(nu, shapes[i], &cache), z[i]);
                }
                total.canonicalize();
                ++report.checked;
                if (total != (mu == nu ? 1 : 0)) {
                    report.counterexample = "<chi" + mu.to_string() + ", chi" + nu.to_string() + "> = " + total.get_str();
                    return report;
                }
            }
        }
    }
    return report;
}

PruningStats pruning_stats(const Partition& mu, const Partition& nu, const PlethysmOptions& options) {
    using Clock = std::chrono::steady_clock;
    PruningStats stats;
    const auto degree = mu.size() * nu.size();
    stats.total = partition_count(degree);

    const auto t0 = Clock::now();
    for (const auto& lambda : partitions_of(degree)) {
        if (plethysm_filter_check(nu, lambda)) ++stats.after_filter;
    }
    const auto t1 = Clock::now();
    stats.actual_support = static_cast<std::int64_t>(schur_plethysm(mu, nu, options).size());
    const auto t2 = Clock::now();
    stats.filter_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    stats.expand_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return stats;
}

std::vector<SweepReport> run_scope(Scope scope, std::int64_t max_degree, unsigned threads) {
    std::vector<SweepReport> reports;
    CharacterCache cache;
    const bool all = scope == Scope::All;
    if (all || scope == Scope::LR) {
        reports.push_back(product_vs_oracle(max_degree, cache));
        reports.push_back(lr_symmetry(max_degree));
        reports.push_back(lr_support_bounds(max_degree));
        reports.push_back(lr_bound_soundness(max_degree));
    }
    if (all || scope == Scope::SXP) {
        reports.push_back(sxp_vs_oracle(3, max_degree, max_degree, cache));
        reports.push_back(sxp_bounds_soundness(3, max_degree, max_degree));
    }
    if (all || scope == Scope::Plethysm) {
        reports.push_back(plethysm_vs_oracle(max_degree, cache));
        reports.push_back(plethysm_filter_soundness(max_degree, cache));

        SweepReport remarks{"pruning_stats (1,1) o (4,2,2)", 1, std::nullopt};
        PlethysmOptions options;
        options.cache = &cache;
        options.threads = threads;
        const auto stats = pruning_stats(Partition{1, 1}, Partition{4, 2, 2}, options);
        if (stats.total != 231 || stats.after_filter != 142 || stats.actual_support != 40) {
            remarks.counterexample = "got " + std::to_string(stats.total) + "/" + std::to_string(stats.after_filter) + "/" +
                                     std::to_string(stats.actual_support);
        }
        reports.push_back(remarks);
    }
    if (all) {
        reports.push_back(quotient_bijection(std::min<std::int64_t>(max_degree, 14), 4));
        reports.push_back(quotient_size_formula(max_degree, 5));
        reports.push_back(corner_round_trip(max_degree));
        reports.push_back(character_orthogonality(std::min<std::int64_t>(max_degree, 9), cache));
    }
    return reports;
}

}  // namespace schurpos::verify
