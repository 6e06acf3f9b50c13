#include "schurpos/littlewood_richardson.hpp"

#include "schurpos/positivity.hpp"

#include <algorithm>
#include <limits>

namespace schurpos {

namespace {

class LREnumerator {
public:
    using Part = Partition::Part;

    LREnumerator(const Partition& mu, const Partition& nu, const std::optional<Partition>& bound)
        : nu_(nu), bound_(bound), shape_(mu.begin(), mu.end()) {
        const auto rows = mu.length() + nu.length() + 1;
        shape_.resize(rows, 0);
        counts_.assign(nu.length(), std::vector<Part>(rows, 0));
    }

    template <typename Emit>
    void run(Emit&& emit) {
        place_letter(0, emit);
    }

private:
    Part bound_at(std::size_t r) const {
        return bound_ ? (*bound_)[r] : std::numeric_limits<Part>::max();
    }

    template <typename Emit>
    void place_letter(std::size_t letter, Emit& emit) {
        if (letter == nu_.length()) {
            emit(shape_);
            return;
        }
        const auto before = shape_;
        std::size_t used_rows = 0;
        while (used_rows < before.size() && before[used_rows] > 0) ++used_rows;
        place_rows(letter, 0, nu_[letter], 0, 0, before, used_rows, emit);
    }

    // Distributes `remaining` copies of letter into rows r, r+1, ... as a
    // horizontal strip over `before`. `placed` counts copies in rows < r and
    // `prev_below` counts copies of letter - 1 in rows < r.
    template <typename Emit>
    void place_rows(std::size_t letter, std::size_t r, Part remaining, Part placed, Part prev_below,
                    const std::vector<Part>& before, std::size_t used_rows, Emit& emit) {
        if (remaining == 0) {
            place_letter(letter + 1, emit);
            return;
        }
        if (r > used_rows) return;
        const Part row_len = before[r];
        Part max_k = remaining;
        if (r > 0) max_k = std::min(max_k, before[r - 1] - row_len);
        max_k = std::min(max_k, bound_at(r) - row_len);
        if (letter > 0) max_k = std::min(max_k, prev_below - placed);
        const Part prev_here = letter > 0 ? counts_[letter - 1][r] : 0;
        for (Part k = std::max<Part>(max_k, 0); k >= 0; --k) {
            shape_[r] = row_len + k;
            counts_[letter][r] = k;
            place_rows(letter, r + 1, remaining - k, placed + k, prev_below + prev_here, before, used_rows, emit);
        }
        shape_[r] = row_len;
        counts_[letter][r] = 0;
    }

    const Partition& nu_;
    const std::optional<Partition>& bound_;
    std::vector<Part> shape_;
    std::vector<std::vector<Part>> counts_;
};

}  // namespace

SchurExpansion lr_product(const Partition& mu, const Partition& nu, const std::optional<Partition>& bound) {
    SchurExpansion out(mu.size() + nu.size());
    if (bound && !(contains(*bound, mu) && contains(*bound, nu))) return out;
    // Fewer letters to place when the second factor is the smaller one.
    const bool swap = nu.size() > mu.size();
    const auto& base = swap ? nu : mu;
    const auto& content = swap ? mu : nu;
    std::map<std::vector<Partition::Part>, long> tally;
    LREnumerator(base, content, bound).run([&](const std::vector<Partition::Part>& shape) { ++tally[shape]; });
    for (const auto& [shape, count] : tally) out.add(Partition(shape), Integer(count));
    return out;
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size() || !contains(lambda, mu) || !contains(lambda, nu)) return 0;
    const std::optional<Partition> bound = lambda;
    long count = 0;
    LREnumerator(mu, nu, bound).run([&](const std::vector<Partition::Part>&) { ++count; });
    return Integer(count);
}

SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g) {
    SchurExpansion out(f.degree() + g.degree());
    for (const auto& [mu, a] : f) {
        for (const auto& [nu, b] : g) {
            const Integer ab = a * b;
            for (const auto& [lambda, c] : lr_product(mu, nu)) out.add(lambda, ab * c);
        }
    }
    return out;
}

Integer generalized_lr_coefficient(const Partition& lambda, std::span<const Partition> factors, bool prune) {
    std::int64_t total = 0;
    for (const auto& f : factors) total += f.size();
    if (total != lambda.size()) return 0;

    std::vector<Partition> order;
    for (const auto& f : factors) {
        if (!f.empty()) order.push_back(f);
        if (!contains(lambda, f)) return 0;
    }
    if (order.empty()) return lambda.empty() ? 1 : 0;

    const std::optional<Partition> bound = lambda;
    SchurExpansion partial = SchurExpansion::basis(order.front());
    for (std::size_t k = 1; k < order.size(); ++k) {
        SchurExpansion next(partial.degree() + order[k].size());
        for (const auto& [tau, a] : partial) {
            if (prune) {
                std::vector<Partition> rest{tau};
                rest.insert(rest.end(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
                if (!contains(lr_bound(rest), lambda)) continue;
            }
            for (const auto& [theta, c] : lr_product(tau, order[k], bound)) next.add(theta, a * c);
        }
        partial = std::move(next);
    }
    return partial.coeff(lambda);
}

}  // namespace schurpos
