// qav: verifies the quasi-alternating surgery corpus and exposes the braid,
// tangle, and surgery calculators on the command line.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage/input error,
// 3 undecided (resource cap).

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qa/corpus.hpp"
#include "qa/invariants.hpp"
#include "qa/verify.hpp"

using namespace qa;
using nlohmann::json;

namespace {

std::string default_corpus() {
    if (const char* env = std::getenv("QA_CORPUS")) return env;
    return "data/corpus.json";
}

json poly_json(const Laurent& p) {
    json out = json::object();
    for (const auto& [e, c] : p.coeffs()) out[std::to_string(e)] = c.str();
    return out;
}

json report_json(const Report& r) {
    json checks = json::array();
    for (const auto& cr : r.results)
        checks.push_back({{"case", cr.subject},
                          {"check", cr.check},
                          {"verdict", to_string(cr.verdict)},
                          {"expected", cr.expected},
                          {"actual", cr.actual},
                          {"detail", cr.detail}});
    return {{"checks", checks},
            {"passed", r.passed()},
            {"failed", r.failed()},
            {"undecided", r.undecided()}};
}

void print_report(const Report& r) {
    std::string current;
    for (const auto& cr : r.results) {
        if (cr.subject != current) {
            current = cr.subject;
            std::cout << current << "\n";
        }
        std::cout << "  " << cr.check << ": " << to_string(cr.verdict);
        if (cr.verdict != Decision::Yes) {
            if (!cr.expected.empty())
                std::cout << " (expected " << cr.expected << ", got " << cr.actual << ")";
            if (!cr.detail.empty()) std::cout << " [" << cr.detail << "]";
        }
        std::cout << "\n";
    }
    std::cout << r.passed() << " passed, " << r.failed() << " failed, " << r.undecided()
              << " undecided\n";
}

int report_exit(const Report& r, const std::string& json_path) {
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return 2;
        }
        out << report_json(r).dump(2) << "\n";
    }
    print_report(r);
    return r.exit_code();
}

TwistScript script_from_json(const json& root) {
    TwistScript s;
    for (const auto& cj : root.at("components")) {
        SurgeryComponent c;
        c.id = cj.at("id").get<std::string>();
        c.coeff = ExtendedRational::parse(cj.at("coeff").get<std::string>());
        c.unknotted = cj.value("unknotted", true);
        s.initial.components.push_back(std::move(c));
    }
    for (const auto& rj : root.at("linking")) {
        std::vector<long long> row;
        for (const auto& vj : rj) row.push_back(vj.get<long long>());
        s.initial.linking.push_back(std::move(row));
    }
    for (const auto& mj : root.at("moves")) {
        TwistMove mv;
        mv.target = mj.at("target").get<std::string>();
        if (mj.contains("delete") && mj.at("delete").get<bool>())
            mv.is_delete = true;
        else
            mv.t = mj.at("t").get<long long>();
        s.moves.push_back(std::move(mv));
    }
    if (root.contains("assert")) {
        const json& asserts =
            root.at("assert").is_array() ? root.at("assert") : json::array({root.at("assert")});
        for (const auto& aj : asserts) {
            const std::size_t after = aj.at("after").get<std::size_t>();
            if (after >= s.moves.size()) throw surgery_error("assert index out of range");
            for (const auto& [id, vj] : aj.at("coeffs").items())
                s.moves[after].expect[id] = ExtendedRational::parse(vj.get<std::string>());
        }
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-alternating surgery verifier"};
    app.require_subcommand(1);

    std::string corpus_path = default_corpus();
    std::string json_path;
    std::string case_id, word1, word2, cf_text, mdet_text, script_file, link_id;
    int strands = 0;

    auto* verify = app.add_subcommand("verify", "run corpus verifications");
    verify->require_subcommand(1);
    auto* vall = verify->add_subcommand("all", "verify every case and knot");
    vall->add_option("--corpus", corpus_path, "corpus JSON path");
    vall->add_option("--json", json_path, "write a JSON report here");
    auto* vcase = verify->add_subcommand("case", "verify a single case");
    vcase->add_option("id", case_id, "case id, e.g. t12533-37")->required();
    vcase->add_option("--corpus", corpus_path, "corpus JSON path");
    vcase->add_option("--json", json_path, "write a JSON report here");

    auto* braid = app.add_subcommand("braid", "braid word utilities");
    braid->require_subcommand(1);
    auto* beq = braid->add_subcommand("eq", "decide group equality of two words");
    beq->add_option("--n", strands, "strand count")->required();
    beq->add_option("w1", word1)->required();
    beq->add_option("w2", word2)->required();
    auto* binv = braid->add_subcommand("inv", "invariants of a braid closure");
    binv->add_option("--n", strands, "strand count")->required();
    binv->add_option("w", word1)->required();

    auto* tangle = app.add_subcommand("tangle", "rational tangle arithmetic");
    tangle->require_subcommand(1);
    auto* tcf = tangle->add_subcommand("cf", "evaluate a continued fraction");
    tcf->add_option("cf", cf_text, "e.g. \"[6,-2]\"")->required();
    auto* tmd = tangle->add_subcommand("mdet", "Montesinos determinant");
    tmd->add_option("fractions", mdet_text, "e.g. \"3/5,2/3,-1/4\"")->required();

    auto* surgery = app.add_subcommand("surgery", "surgery presentation tools");
    surgery->require_subcommand(1);
    auto* srun = surgery->add_subcommand("run", "run a twist script file");
    srun->add_option("file", script_file)->required();

    auto* fit = app.add_subcommand("fit-linking", "fit a link's linking matrix");
    fit->add_option("link", link_id, "link id, e.g. L12n1968")->required();
    fit->add_option("--corpus", corpus_path, "corpus JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (vall->parsed()) {
            return report_exit(verify_all(load_corpus(corpus_path)), json_path);
        }
        if (vcase->parsed()) {
            Corpus c = load_corpus(corpus_path);
            for (const CaseData& cs : c.cases)
                if (cs.id == case_id) {
                    Report r;
                    r.results = verify_case(c, cs);
                    return report_exit(r, json_path);
                }
            std::cerr << "no case " << case_id << "\n";
            return 2;
        }
        if (beq->parsed()) {
            const Decision d =
                equals(expand(word1, strands), expand(word2, strands));
            std::cout << to_string(d) << "\n";
            return d == Decision::Yes ? 0 : d == Decision::No ? 1 : 3;
        }
        if (binv->parsed()) {
            const BraidWord w = expand(word1, strands);
            json out;
            out["components"] = closure_component_count(w);
            out["exponent_sum"] = exponent_sum(w);
            out["jones_q"] = poly_json(jones_q(w));
            if (closure_component_count(w) == 1) {
                out["alexander"] = poly_json(alexander(w));
                out["determinant"] = determinant(w).str();
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (tcf->parsed()) {
            std::cout << cf_value(parse_cf(cf_text)).str() << "\n";
            return 0;
        }
        if (tmd->parsed()) {
            std::cout << montesinos_determinant(parse_fraction_list(mdet_text)) << "\n";
            return 0;
        }
        if (srun->parsed()) {
            std::ifstream in(script_file);
            if (!in) {
                std::cerr << "cannot open " << script_file << "\n";
                return 2;
            }
            json root = json::parse(in);
            TwistScript s = script_from_json(root);
            auto [fin, rep] = run_script(s);
            for (const auto& step : rep.steps) {
                std::cout << step.description << " ->";
                for (const auto& [id, r] : step.coeffs) std::cout << " " << id << "=" << r.str();
                std::cout << "\n";
            }
            std::cout << "h1 = " << h1_order(fin) << "\n";
            return 0;
        }
        if (fit->parsed()) {
            Corpus c = load_corpus(corpus_path);
            FitProblem prob = fit_problem_for_link(c, link_id);
            auto sols = fit_linking_matrix(prob);
            std::cout << sols.size() << " solution(s)\n";
            for (const auto& m : sols) {
                for (const auto& row : m) {
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? " " : "") << row[j];
                    std::cout << "\n";
                }
                std::cout << "\n";
            }
            return sols.empty() ? 1 : 0;
        }
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const corpus_error& e) {
        std::cerr << "corpus error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
