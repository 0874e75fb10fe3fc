#include "dualscope/serialize.hpp"

#include <sstream>

namespace dualscope {

json to_json(const FactoredInt& n) {
    json j;
    j["value"] = n.value;
    json fs = json::array();
    for (auto& [p, e] : n.factors) fs.push_back(json::array({p, e}));
    j["factors"] = fs;
    return j;
}

json to_json(const Premise& p) {
    json j;
    j["name"] = p.name;
    j["lhs"] = p.lhs.str();
    j["rhs"] = p.rhs.str();
    j["relation"] = p.relation;
    j["holds"] = p.holds;
    return j;
}

json to_json(const Verdict& v) {
    json j;
    j["n"] = v.n.value;
    j["factors"] = to_json(v.n)["factors"];
    j["mode"] = to_string(v.mode);
    j["outcome"] = to_string(v.outcome);
    if (v.criterion)
        j["criterion"] = to_string(*v.criterion);
    else
        j["criterion"] = nullptr;
    json premises = json::array();
    json trace = json::array();
    for (auto& cr : v.trace) {
        json t;
        t["criterion"] = to_string(cr.id);
        t["matched"] = cr.matched;
        if (cr.external_result) t["external_result"] = true;
        json ps = json::array();
        for (auto& p : cr.premises) ps.push_back(to_json(p));
        t["premises"] = ps;
        trace.push_back(t);
        if (v.criterion && cr.id == *v.criterion) premises = ps;
    }
    j["premises"] = premises;
    j["trace"] = trace;
    j["residual"] = v.residual.empty() ? json(nullptr) : json(v.residual);
    return j;
}

json to_json(const DualityReport& r) {
    json j;
    j["is_dual"] = r.is_dual;
    j["failure"] = r.is_dual ? json(nullptr) : json(to_string(r.failure));
    if (r.failure == DualityFailure::DivisorEquation) j["failing_divisor"] = r.failing_divisor;
    json checks = json::array();
    for (auto& c : r.checked_divisors) {
        json cj;
        cj["d"] = c.d;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs.str();
        cj["holds"] = c.holds;
        checks.push_back(cj);
    }
    j["checked_divisors"] = checks;
    return j;
}

json to_json(const DualPairOrbit& o) {
    json j;
    j["n"] = o.n;
    j["t"] = o.t_rep.elems;
    j["s"] = o.s_rep.elems;
    j["symmetries"] = o.symmetries;
    return j;
}

json to_json(const SplittingData& s) {
    json j;
    j["e"] = s.e;
    j["f"] = s.f;
    j["r"] = s.r;
    return j;
}

json to_json(const CensusReport& r) {
    json j;
    j["p_max"] = r.p_max;
    j["q_max"] = r.q_max;
    j["mode"] = to_string(r.mode);
    j["valid"] = r.valid;
    json totals;
    totals["all"] = r.totals.all;
    totals["even"] = r.totals.even;
    totals["odd"] = r.totals.odd;
    totals["pairs_with_exceptions"] = r.totals.pairs_with_exceptions;
    totals["pairs_scanned"] = r.totals.pairs_scanned;
    j["totals"] = totals;
    json pairs = json::array();
    for (auto& pr : r.pairs) {
        json pj;
        pj["p"] = pr.p;
        pj["q"] = pr.q;
        json ex = json::array();
        for (auto& e : pr.undecided) {
            json ej;
            ej["k"] = e.k;
            ej["l"] = e.l;
            ej["n"] = e.n_value;
            ex.push_back(ej);
        }
        pj["exceptions"] = ex;
        pairs.push_back(pj);
    }
    j["pairs"] = pairs;
    return j;
}

std::string census_tsv(const CensusReport& r) {
    std::ostringstream out;
    out << "p\tq\tk\tl\tN\n";
    for (auto& pr : r.pairs)
        for (auto& e : pr.undecided)
            out << e.p << '\t' << e.q << '\t' << e.k << '\t' << e.l << '\t' << e.n_value << '\n';
    return out.str();
}

TraceCheck verify_trace(const json& verdict) {
    TraceCheck out;
    try {
        i64 n = verdict.at("n").get<i64>();
        std::string mode_s = verdict.at("mode").get<std::string>();
        EliminationMode mode =
            mode_s == "extended" ? EliminationMode::Extended : EliminationMode::Paper;

        // layer 1: every recorded premise must be arithmetically consistent
        for (auto& t : verdict.at("trace")) {
            for (auto& pj : t.at("premises")) {
                Premise p;
                p.name = pj.at("name").get<std::string>();
                p.lhs = Rat::parse(pj.at("lhs").get<std::string>());
                p.rhs = Rat::parse(pj.at("rhs").get<std::string>());
                p.relation = pj.at("relation").get<std::string>();
                p.holds = pj.at("holds").get<bool>();
                out.premises_checked++;
                if (eval_premise(p) != p.holds) {
                    out.error = "premise does not replay: " + p.name;
                    return out;
                }
            }
        }

        // layer 2: re-deriving the verdict from N alone reproduces it
        Verdict fresh = eliminate(factorize(n), mode, /*want_trace=*/true);
        if (to_json(fresh) != verdict) {
            out.error = "re-derived verdict differs";
            return out;
        }
        out.valid = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace dualscope
