#include "ahg/manifold.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <json.hpp>

namespace ahg {

namespace {

using nlohmann::ordered_json;

StructureField field_from_asts(int dim, std::shared_ptr<std::vector<std::vector<ExprAst>>> hm,
                               std::shared_ptr<std::vector<std::vector<ExprAst>>> jm) {
    return [dim, hm, jm](std::span<const double> x, int order) {
        std::vector<Jet> args(dim);
        for (int i = 0; i < dim; ++i) args[i] = jet_coordinate(dim, order, i, x[i]);
        MatJ h(dim, dim), J(dim, dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                h(a, b) = eval_expr((*hm)[a][b], args);
                J(a, b) = eval_expr((*jm)[a][b], args);
            }
        return StructureJets{dim / 2, std::move(h), std::move(J)};
    };
}

std::vector<std::vector<ExprAst>> parse_matrix(const ordered_json& jm, int dim,
                                               const char* what) {
    if (!jm.is_array() || int(jm.size()) != dim)
        throw DomainError(std::string(what) + " must be a full " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix");
    std::vector<std::vector<ExprAst>> out(dim);
    for (int a = 0; a < dim; ++a) {
        if (!jm[a].is_array() || int(jm[a].size()) != dim)
            throw DomainError(std::string(what) + " row " + std::to_string(a) +
                              " has wrong length");
        out[a].reserve(dim);
        for (int b = 0; b < dim; ++b) out[a].push_back(parse_expr(jm[a][b].get<std::string>(), dim));
    }
    return out;
}

} // namespace

Manifold manifold_from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("manifold spec JSON: ") + e.what(), e.byte);
    }
    Manifold m;
    int dim = j.at("dim").get<int>();
    if (dim < 4 || dim % 2 != 0) throw DomainError("manifold spec: dim must be even and >= 4");
    m.n = dim / 2;
    m.name = j.value("name", std::string("user_manifold"));
    m.expected_class = j.value("expected_class", std::string());

    auto hm = std::make_shared<std::vector<std::vector<ExprAst>>>(
        parse_matrix(j.at("metric"), dim, "metric"));
    auto jm = std::make_shared<std::vector<std::vector<ExprAst>>>(parse_matrix(j.at("J"), dim, "J"));
    m.field = field_from_asts(dim, hm, jm);
    m.metric_exprs.assign(dim, std::vector<std::string>(dim));
    m.j_exprs.assign(dim, std::vector<std::string>(dim));
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            m.metric_exprs[a][b] = j.at("metric")[a][b].get<std::string>();
            m.j_exprs[a][b] = j.at("J")[a][b].get<std::string>();
        }
    m.exportable = true;

    bool all_periodic = false;
    m.domain.box.assign(dim, {0.0, 1.0});
    if (j.contains("domain")) {
        const auto& dj = j.at("domain");
        if (dj.contains("box")) {
            if (int(dj.at("box").size()) != dim)
                throw DomainError("manifold spec: domain.box must have one [lo, hi] per axis");
            for (int a = 0; a < dim; ++a)
                m.domain.box[a] = {dj.at("box")[a][0].get<double>(),
                                   dj.at("box")[a][1].get<double>()};
        }
        if (dj.contains("periodic")) {
            all_periodic = true;
            for (const auto& f : dj.at("periodic")) all_periodic = all_periodic && f.get<bool>();
        }
    }
    m.domain.kind = all_periodic ? Domain::Kind::PeriodicBox : Domain::Kind::HomogeneousAtlas;
    m.domain.volume = 0.0; // unknown unless periodic
    m.domain.sample_box = m.domain.box;
    m.domain.homogeneous = false;
    return m;
}

Manifold load_manifold_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open manifold spec: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return manifold_from_json_text(ss.str());
}

std::string manifold_to_json_text(const Manifold& m) {
    if (!m.exportable)
        throw DomainError("manifold '" + m.name + "' has no closed-form export");
    ordered_json j;
    j["name"] = m.name;
    j["dim"] = 2 * m.n;
    j["metric"] = m.metric_exprs;
    j["J"] = m.j_exprs;
    ordered_json dj;
    bool periodic = m.domain.kind == Domain::Kind::PeriodicBox;
    dj["periodic"] = std::vector<bool>(2 * m.n, periodic);
    ordered_json box = ordered_json::array();
    const auto& b = periodic ? m.domain.box : m.domain.sample_box;
    for (const auto& [lo, hi] : b) box.push_back({lo, hi});
    dj["box"] = box;
    j["domain"] = dj;
    if (!m.expected_class.empty()) j["expected_class"] = m.expected_class;
    return j.dump(2) + "\n";
}

} // namespace ahg
