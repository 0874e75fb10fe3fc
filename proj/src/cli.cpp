#include "dualscope/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "dualscope/errors.hpp"
#include "dualscope/serialize.hpp"

namespace dualscope {

namespace {

std::vector<i64> parse_residues(const std::string& lit) {
    std::vector<i64> out;
    std::stringstream ss(lit);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("malformed set literal: " + lit);
        size_t pos = 0;
        i64 v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed set literal: " + lit);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty set literal");
    return out;
}

EliminationMode parse_mode(const std::string& s) {
    if (s == "paper") return EliminationMode::Paper;
    if (s == "extended") return EliminationMode::Extended;
    throw std::invalid_argument("mode must be 'paper' or 'extended'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json error_obj(const std::string& kind, const std::string& message) {
    json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    return j;
}

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact verification, search, and elimination for formally dual pairs in Z_N"};
    app.name("dualscope");
    app.require_subcommand(1);
    bool meta = false;
    app.add_flag("--meta", meta, "append run metadata (timings; breaks byte-determinism)");

    // check
    auto* check = app.add_subcommand("check", "verify formal duality of a pair (T, S) in Z_N");
    i64 check_n = 0;
    std::string check_t, check_s;
    check->add_option("--n", check_n, "modulus N")->required();
    check->add_option("--t", check_t, "comma-separated residues of T, e.g. 0,1")->required();
    check->add_option("--s", check_s, "comma-separated residues of S")->required();

    // search
    auto* search = app.add_subcommand("search", "exhaustive search for formally dual pairs in Z_N");
    i64 search_n = 0;
    i64 max_nodes = SearchOptions{}.max_nodes;
    bool include_imprimitive = false;
    int search_jobs = 1;
    search->add_option("--n", search_n, "modulus N")->required();
    search->add_option("--max-nodes", max_nodes, "enumeration node budget");
    search->add_flag("--include-imprimitive", include_imprimitive, "also report non-primitive pairs");
    search->add_option("--jobs", search_jobs, "worker threads (accepted; search runs single-threaded)");

    // eliminate
    auto* elim = app.add_subcommand("eliminate", "decide whether Z_N can carry a primitive formally dual pair");
    i64 elim_n = 0;
    std::string elim_mode = "paper";
    elim->add_option("--n", elim_n, "order N")->required();
    elim->add_option("--mode", elim_mode, "criteria set: paper | extended");

    // census
    auto* census = app.add_subcommand("census", "scan prime pairs for orders no criterion eliminates");
    i64 pmax = 0, qmax = 0;
    std::string census_mode = "paper";
    std::string census_out;
    std::string census_format = "json";
    int census_jobs = (int)std::max(1u, std::thread::hardware_concurrency());
    u64 census_budget = 100'000'000;
    census->add_option("--pmax", pmax, "inclusive bound on the smaller prime")->required();
    census->add_option("--qmax", qmax, "inclusive bound on the larger prime")->required();
    census->add_option("--mode", census_mode, "criteria set: paper | extended");
    census->add_option("--out", census_out, "write the report to this file (suffix .tsv selects TSV)");
    census->add_option("--format", census_format, "json | tsv");
    census->add_option("--jobs", census_jobs, "worker threads");
    census->add_option("--max-orders", census_budget, "budget on scanned orders");

    // fdm
    auto* fdm = app.add_subcommand("fdm", "field-descent modulus F(m,n) and the |X|^2 bound");
    i64 fdm_m = 0, fdm_n = 0, fdm_c = 1;
    fdm->add_option("--m", fdm_m, "cyclotomic order m")->required();
    fdm->add_option("--n", fdm_n, "target squared modulus n")->required();
    fdm->add_option("--c", fdm_c, "coefficient bound C (default 1)");

    // rsum
    auto* rsum = app.add_subcommand("rsum", "Ramanujan sums C_N(d)");
    i64 rsum_n = 0;
    i64 rsum_d = 0;
    bool rsum_has_d = false;
    rsum->add_option("--n", rsum_n, "modulus N")->required();
    auto* dopt = rsum->add_option("--d", rsum_d, "evaluate at d (omit for the full row)");

    // split
    auto* split = app.add_subcommand("split", "splitting data of a prime in the N-th cyclotomic field");
    i64 split_n = 0, split_p = 0;
    split->add_option("--n", split_n, "cyclotomic order N")->required();
    split->add_option("--p", split_p, "prime p")->required();

    // selfconj
    auto* selfconj = app.add_subcommand("selfconj", "self-conjugacy of a prime mod N");
    i64 sc_n = 0, sc_p = 0;
    selfconj->add_option("--n", sc_n, "order N")->required();
    selfconj->add_option("--p", sc_p, "prime p")->required();

    // verify-trace (hidden): re-validate a serialized verdict
    auto* vt = app.add_subcommand("verify-trace", "re-validate a verdict JSON");
    vt->group("");  // hidden
    std::string vt_in;
    vt->add_option("--in", vt_in, "verdict JSON file (stdin when omitted)");

    std::vector<const char*> argv;
    argv.push_back("dualscope");
    for (auto& a : args) argv.push_back(a.c_str());

    DispatchResult res;
    auto started = std::chrono::steady_clock::now();
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.output = os.str();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.output = dump(error_obj("argument", e.what()));
        res.exit_code = 2;
        return res;
    }

    json out;
    try {
        if (*check) {
            if (check_n > 10'000'000)
                throw std::invalid_argument("check: modulus limited to 10^7 (dense weight vectors)");
            ZnSubset t = make_subset(check_n, parse_residues(check_t));
            ZnSubset s = make_subset(check_n, parse_residues(check_s));
            out = to_json(check_formal_dual(t, s));
            out["n"] = check_n;
        } else if (*search) {
            if (search_n > 10'000'000)
                throw std::invalid_argument("search: modulus limited to 10^7 (dense weight vectors)");
            SearchOptions opt;
            opt.require_primitive = !include_imprimitive;
            opt.max_nodes = max_nodes;
            auto orbits = search_dual_pairs(search_n, opt);
            out["n"] = search_n;
            out["require_primitive"] = opt.require_primitive;
            json arr = json::array();
            for (auto& o : orbits) arr.push_back(to_json(o));
            out["orbits"] = arr;
            out["count"] = orbits.size();
        } else if (*elim) {
            Verdict v = eliminate(factorize(elim_n), parse_mode(elim_mode));
            out = to_json(v);
        } else if (*census) {
            CensusReport rep = census_engine(pmax, qmax, parse_mode(census_mode), census_jobs, census_budget);
            std::string payload;
            bool tsv = census_format == "tsv" || (census_out.size() > 4 && census_out.substr(census_out.size() - 4) == ".tsv");
            if (census_format != "json" && census_format != "tsv")
                throw std::invalid_argument("format must be 'json' or 'tsv'");
            payload = tsv ? census_tsv(rep) : dump(to_json(rep));
            if (!census_out.empty()) {
                std::ofstream f(census_out);
                if (!f) throw std::runtime_error("cannot open output file: " + census_out);
                f << payload;
                out["written"] = census_out;
                out["totals"] = to_json(rep)["totals"];
            } else {
                res.output = payload;
                res.exit_code = 0;
                return res;
            }
        } else if (*fdm) {
            FactoredInt m = factorize(fdm_m);
            FactoredInt n = factorize(fdm_n);
            FParams fp = field_descent_params(m, n);
            out["m"] = fdm_m;
            out["n"] = fdm_n;
            out["c"] = fdm_c;
            out["F"] = fp.F;
            json bvals;
            for (auto& [p, b] : fp.b_values) bvals[std::to_string(p)] = b;
            out["b"] = bvals;
            out["fbound"] = fbound(m, n, fdm_c).str();
            out["excludes"] = fbound_excludes(m, n, fdm_c);
        } else if (*rsum) {
            rsum_has_d = dopt->count() > 0;
            FactoredInt n = factorize(rsum_n);
            out["n"] = rsum_n;
            if (rsum_has_d) {
                out["d"] = rsum_d;
                out["value"] = ramanujan_sum(n, rsum_d);
            } else {
                if (rsum_n > 1'000'000) throw std::invalid_argument("full row limited to N <= 10^6; pass --d");
                json row = json::array();
                for (i64 d = 0; d < rsum_n; ++d) row.push_back(ramanujan_sum(n, d));
                out["values"] = row;
            }
        } else if (*split) {
            SplittingData s = prime_splitting(factorize(split_n), split_p);
            out = to_json(s);
            out["n"] = split_n;
            out["p"] = split_p;
            out["phi"] = s.e * s.f * s.r;
        } else if (*selfconj) {
            out["n"] = sc_n;
            out["p"] = sc_p;
            out["self_conjugate"] = is_self_conjugate(sc_p, factorize(sc_n));
        } else if (*vt) {
            json verdict;
            if (!vt_in.empty()) {
                std::ifstream f(vt_in);
                if (!f) throw std::runtime_error("cannot open input file: " + vt_in);
                f >> verdict;
            } else {
                std::cin >> verdict;
            }
            TraceCheck chk = verify_trace(verdict);
            out["valid"] = chk.valid;
            out["premises_checked"] = chk.premises_checked;
            if (!chk.valid) out["error"] = chk.error;
            if (meta) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                started);
                out["meta"]["elapsed_ms"] = ms.count();
            }
            res.output = dump(out);
            res.exit_code = chk.valid ? 0 : 1;
            return res;
        }
    } catch (const BudgetExceeded& e) {
        res.output = dump(error_obj("budget", e.what()));
        res.exit_code = 3;
        return res;
    } catch (const std::invalid_argument& e) {
        res.output = dump(error_obj("argument", e.what()));
        res.exit_code = 2;
        return res;
    } catch (const std::exception& e) {
        res.output = dump(error_obj("internal", e.what()));
        res.exit_code = 1;
        return res;
    }

    if (meta) {
        auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
        out["meta"]["elapsed_ms"] = ms.count();
        out["meta"]["threads_available"] = std::thread::hardware_concurrency();
    }
    res.output = dump(out);
    res.exit_code = 0;
    return res;
}

}  // namespace dualscope
