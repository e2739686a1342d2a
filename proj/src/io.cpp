#include "simra/io.hpp"

#include <fstream>
#include <sstream>

namespace simra {

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    IntMatrix rows;
    std::string line;
    size_t ambient = 0;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::stringstream ss(line);
        std::vector<mpz_class> coords;
        std::string tok;
        while (ss >> tok) coords.emplace_back(tok, 10);
        if (coords.empty()) continue;
        if (ambient == 0) ambient = coords.size();
        if (coords.size() != ambient)
            throw std::runtime_error("matrix file: inconsistent row length in " + path);
        rows.emplace_back(std::move(coords));
    }
    return rows;
}

std::string interval_display(const Interval& v, int digits) {
    // midpoint rendering is fine for display; certified digits go through
    // certified_truncation instead
    return v.mid().to_decimal(digits, RoundDir::Down);
}

nlohmann::json subspace_json(const Subspace& v) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& b : v.basis()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : b.coords()) row.push_back(c.get_str());
        basis.push_back(std::move(row));
    }
    return {{"ambient", v.ambient_dim()},
            {"dim", v.dim()},
            {"basis", std::move(basis)},
            {"height_squared", v.height_squared().get_str()}};
}

nlohmann::json record_json(const MinimalPointRecord& r, int l_digits) {
    nlohmann::json x = nlohmann::json::array();
    for (const auto& c : r.x.coords()) x.push_back(c.get_str());
    return {{"i", r.index},
            {"x", std::move(x)},
            {"X_squared", r.X_squared.get_str()},
            {"L_lo", r.L.lo().to_decimal(l_digits, RoundDir::Down)},
            {"L_hi", r.L.hi().to_decimal(l_digits, RoundDir::Up)},
            {"in_I", r.in_I}};
}

std::string record_csv(const MinimalPointRecord& r, int l_digits) {
    std::string xs;
    for (size_t i = 0; i < r.x.coords().size(); ++i) {
        if (i) xs += " ";
        xs += r.x.coords()[i].get_str();
    }
    return std::to_string(r.index) + "," + xs + "," + r.X_squared.get_str() + "," +
           r.L.lo().to_decimal(l_digits, RoundDir::Down) + "," +
           r.L.hi().to_decimal(l_digits, RoundDir::Up) + "," + (r.in_I ? "1" : "0");
}

nlohmann::json profile_json(const DimensionProfile& p) {
    return {{"n", p.n}, {"values", p.values}, {"concave", p.concave()}, {"tail_law", p.tail_law()}};
}

nlohmann::json thm11_json(const Thm11Report& r, int digits) {
    return {{"n", r.n},
            {"ell", r.ell},
            {"k", r.k},
            {"lambda", interval_display(r.lambda, digits)},
            {"theta", interval_display(r.theta, digits)},
            {"theta_pow_k", interval_display(r.theta_pow_k, digits)},
            {"eta", interval_display(r.eta, digits)},
            {"inv_lambda", interval_display(r.inv_lambda, digits)},
            {"pass", r.pass}};
}

nlohmann::json structure_json(const StructureIndex& st, int digits) {
    nlohmann::json sigma = nlohmann::json::array();
    nlohmann::json ysq = nlohmann::json::array();
    for (size_t j = 0; j < st.sigma.size(); ++j) {
        nlohmann::json srow = nlohmann::json::array();
        nlohmann::json yrow = nlohmann::json::array();
        for (size_t i = 0; i < st.sigma[j].size(); ++i) {
            if (st.sigma[j][i] == kUndefinedIndex)
                srow.push_back(nullptr);
            else
                srow.push_back(st.sigma[j][i]);
            if (st.Y_squared[j][i] == 0)
                yrow.push_back(nullptr);
            else
                yrow.push_back(st.Y_squared[j][i].get_str());
        }
        sigma.push_back(std::move(srow));
        ysq.push_back(std::move(yrow));
    }
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& [pair, iv] : st.consecutive_ratios)
        ratios.push_back({{"i", pair.first}, {"j", pair.second}, {"ratio", interval_display(iv, digits)}});
    return {{"n", st.n}, {"I", st.I}, {"sigma", std::move(sigma)}, {"Y_squared", std::move(ysq)},
            {"lemma54_ratios", std::move(ratios)}};
}

nlohmann::json exponents_json(const ExponentEstimate& est, int digits) {
    nlohmann::json lam = nlohmann::json::array();
    for (size_t t = 0; t < est.lambda_terms.size(); ++t)
        lam.push_back({{"i", est.lambda_indices[t]},
                       {"value", interval_display(est.lambda_terms[t], digits)}});
    nlohmann::json lamh = nlohmann::json::array();
    for (size_t t = 0; t < est.lambda_hat_terms.size(); ++t)
        lamh.push_back({{"i", est.lambda_hat_indices[t]},
                        {"value", interval_display(est.lambda_hat_terms[t], digits)}});
    nlohmann::json out = {{"window", est.window},
                          {"lambda_terms", std::move(lam)},
                          {"lambda_hat_terms", std::move(lamh)}};
    if (est.lambda_raw_max) out["lambda_raw_max"] = interval_display(*est.lambda_raw_max, digits);
    if (est.lambda_hat_raw_min)
        out["lambda_hat_raw_min"] = interval_display(*est.lambda_hat_raw_min, digits);
    if (est.lambda_window_slope)
        out["lambda_window_slope"] = interval_display(*est.lambda_window_slope, digits);
    if (est.lambda_hat_window_slope)
        out["lambda_hat_window_slope"] = interval_display(*est.lambda_hat_window_slope, digits);
    return out;
}

} // namespace simra
