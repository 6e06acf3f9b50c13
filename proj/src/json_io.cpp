#include "schurpos/json_io.hpp"

#include <charconv>

namespace schurpos::json_io {

Json encode(const Partition& p) { return Json(p.parts()); }

Json encode(const Point& p) { return Json::array({p.c, p.r}); }

Json encode(const CornerSet& s) {
    Json out = Json::array();
    for (const auto& p : s) out.push_back(encode(p));
    return out;
}

Json encode(const SchurExpansion& f) {
    Json terms = Json::array();
    for (const auto& [lambda, c] : f) terms.push_back({{"partition", encode(lambda)}, {"coeff", c.get_str()}});
    return {{"degree", f.degree()}, {"terms", std::move(terms)}};
}

Json encode(const QuotientDecomposition& q) {
    Json quotient = Json::array();
    for (const auto& part : q.quotient) quotient.push_back(encode(part));
    return {{"n", q.n},
            {"core", encode(q.core)},
            {"quotient", std::move(quotient)},
            {"sign", q.sign ? Json(*q.sign) : Json(nullptr)}};
}

Json encode(const SignedTableau& t) { return {{"shape", encode(t.shape)}, {"rows", t.rows}}; }

Json encode(const BoundPair& b) {
    return {{"xi1", encode(b.xi1)}, {"xi2", encode(b.xi2)}, {"intersection", encode(b.intersection)}};
}

Partition decode_partition(const Json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array, got " + j.dump());
    std::vector<Partition::Part> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("partition entries must be integers, got " + j.dump());
        parts.push_back(v.get<Partition::Part>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

SchurExpansion decode_schur_expansion(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("terms")) {
        throw ParseError("expansion needs \"degree\" and \"terms\"");
    }
    try {
        SchurExpansion out(j.at("degree").get<std::int64_t>());
        for (const auto& term : j.at("terms")) {
            Integer c;
            if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient " + term.dump());
            out.add(decode_partition(term.at("partition")), c);
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    } catch (const SizeMismatch& e) {
        throw ParseError(e.what());
    }
}

Partition parse_partition_literal(std::string_view text) {
    std::vector<Partition::Part> parts;
    if (text.empty()) return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
        Partition::Part value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
            throw ParseError("bad partition literal '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace schurpos::json_io
