#include "report.hpp"

#include <sstream>

namespace shcalc::report {

json presentation_json(const RingPresentation& pres) {
    json rel = json::array();
    for (std::size_t k = 0; k < pres.relation.size(); ++k) {
        bool unknown = false;
        for (auto u : pres.unknown_powers) unknown = unknown || u == k;
        if (unknown)
            rel.push_back({"?", k});
        else if (!pres.relation[k].is_zero())
            rel.push_back({pres.relation[k].to_string(), k});
    }
    json out = {{"generator", to_string(pres.generator)},
                {"relation", rel},
                {"rank", pres.rank()},
                {"complete", pres.complete},
                {"text", pres.to_string()}};
    if (pres.is_zero_ring()) out["zero"] = true;
    return out;
}

json matrix_json(const LambdaMatrix& m) { return m.to_strings(); }

namespace {

json sh_json(const ShResult& res) {
    if (res.sh_kind == ShKind::Partial) {
        const PartialFacts& f = *res.partial;
        json unknown = json::array();
        for (auto [i, j] : f.unknown_positions) unknown.push_back({i, j});
        return {{"kind", "partial"},
                {"nonzero", f.sh_nonzero},
                {"rank_multiple_of", f.rank_multiple_of},
                {"rank_interval", {f.rank_min, f.rank_max}},
                {"leading_coefficient", f.leading_coefficient.to_string()},
                {"unknown_r_entries", unknown}};
    }
    json out = presentation_json(*res.sh());
    out["kind"] = to_string(res.sh_kind);
    if (res.sh_kind == ShKind::ZeroRing) out["reason"] = res.zero_reason;
    if (res.sh_omega) out["cq_form"] = presentation_json(*res.sh_cq);
    return out;
}

}  // namespace

json result_json(const ShResult& res) {
    json qh = presentation_json(res.qh());
    if (res.qh_omega) qh["cq_form"] = presentation_json(res.qh_cq);
    else qh["note"] = "n is not invertible in the field; c_Q form shown and c_Q does not generate";

    json rank;
    if (res.sh_rank)
        rank = *res.sh_rank;
    else
        rank = {{"multiple_of", res.partial->rank_multiple_of},
                {"min", res.partial->rank_min},
                {"max", res.partial->rank_max}};

    json char_poly = json::array();
    for (const auto& a : res.char_poly.a) char_poly.push_back(a.to_string());

    json diagnostics = json::array();
    for (const auto& d : res.diagnostics) diagnostics.push_back({{"name", d.name}, {"pass", d.pass}, {"detail", d.detail}});

    return {{"m", res.m},
            {"n", res.n},
            {"N", res.minimal_chern},
            {"field", to_string(res.field)},
            {"regime", {{"kind", to_string(res.regime.kind)}, {"exact_mode", res.regime.exact_mode}}},
            {"exact", res.exact},
            {"qh", qh},
            {"sh", sh_json(res)},
            {"sh_rank", rank},
            {"r_matrix", matrix_json(res.r_matrix)},
            {"char_poly", char_poly},
            {"diagnostics", diagnostics}};
}

std::string result_text(const json& r) {
    std::ostringstream os;
    os << "O(-" << r["n"].get<int>() << ") -> P^" << r["m"].get<int>() << "  over " << r["field"].get<std::string>()
       << "\n";
    os << "  N = " << r["N"].get<long>() << ", regime " << r["regime"]["kind"].get<std::string>()
       << (r["exact"].get<bool>() ? " (exact)" : " (partial)") << "\n";
    os << "  QH = " << r["qh"]["text"].get<std::string>() << "\n";
    const json& sh = r["sh"];
    if (sh["kind"] == "partial") {
        os << "  SH != 0, rank a multiple of " << sh["rank_multiple_of"].get<long>() << " in ["
           << sh["rank_interval"][0].get<long>() << ", " << sh["rank_interval"][1].get<long>() << "]\n";
        os << "  a_N = " << sh["leading_coefficient"].get<std::string>() << "\n";
    } else if (sh["kind"] == "zero") {
        os << "  SH = 0  (" << sh["reason"].get<std::string>() << ")\n";
    } else {
        os << "  SH = " << sh["text"].get<std::string>() << "\n";
        os << "  rank SH = " << r["sh_rank"].get<long>() << "\n";
    }
    os << "  r =\n";
    for (const auto& row : r["r_matrix"]) {
        os << "    [";
        bool first = true;
        for (const auto& e : row) {
            os << (first ? " " : ", ") << e.get<std::string>();
            first = false;
        }
        os << " ]\n";
    }
    os << "  diagnostics:\n";
    for (const auto& d : r["diagnostics"])
        os << "    [" << (d["pass"].get<bool>() ? "pass" : "FAIL") << "] " << d["name"].get<std::string>() << ": "
           << d["detail"].get<std::string>() << "\n";
    return os.str();
}

}  // namespace shcalc::report
