#include "qa/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qa {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw corpus_error(path + ": " + msg);
}

ChainStep parse_step(const json& j, const std::string& where) {
    ChainStep s;
    if (!j.contains("op")) fail(where, "chain step missing op");
    const std::string op = j.at("op").get<std::string>();
    if (op == "conjugate") {
        s.op = ChainStep::Op::Conjugate;
        if (!j.contains("by")) fail(where, "conjugate step missing 'by'");
        s.word = j.at("by").get<std::string>();
    } else if (op == "flip") {
        s.op = ChainStep::Op::Flip;
    } else if (op == "mirror") {
        s.op = ChainStep::Op::Mirror;
    } else if (op == "reverse") {
        s.op = ChainStep::Op::Reverse;
    } else if (op == "group_eq" || op == "literal_eq") {
        s.op = op == "group_eq" ? ChainStep::Op::GroupEq : ChainStep::Op::LiteralEq;
        if (!j.contains("word")) fail(where, op + " step missing 'word'");
        s.word = j.at("word").get<std::string>();
        if (j.contains("label")) s.label = j.at("label").get<std::string>();
    } else {
        fail(where, "unknown chain op '" + op + "'");
    }
    if (j.contains("provenance")) s.provenance = j.at("provenance").get<std::string>();
    return s;
}

std::vector<ChainStep> parse_chain(const json& j, const std::string& where) {
    std::vector<ChainStep> out;
    int k = 0;
    for (const auto& sj : j) out.push_back(parse_step(sj, where + "/" + std::to_string(k++)));
    return out;
}

ScriptMoveData parse_move(const json& mj) {
    ScriptMoveData mv;
    mv.target = mj.at("target").get<std::string>();
    if (mj.contains("delete") && mj.at("delete").get<bool>()) {
        mv.is_delete = true;
    } else {
        mv.t = mj.at("t").get<long long>();
    }
    if (mj.contains("expect"))
        for (const auto& [cid, vj] : mj.at("expect").items())
            mv.expect[cid] = vj.get<std::string>();
    return mv;
}

}  // namespace

Corpus parse_corpus(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw corpus_error(std::string("corpus JSON parse error: ") + e.what());
    }
    Corpus c;
    if (!root.contains("links") || !root.contains("knots") || !root.contains("cases"))
        throw corpus_error("corpus must have top-level links, knots, cases");

    try {
    for (const auto& [id, lj] : root.at("links").items()) {
        const std::string where = "links/" + id;
        LinkData l;
        l.id = id;
        for (const auto& cj : lj.at("components")) l.components.push_back(cj.get<std::string>());
        for (const auto& uj : lj.at("unknotted")) l.unknotted.push_back(uj.get<bool>());
        for (const auto& rj : lj.at("linking")) {
            std::vector<long long> row;
            for (const auto& vj : rj) row.push_back(vj.get<long long>());
            l.linking.push_back(std::move(row));
        }
        if (lj.contains("linking_provenance"))
            l.linking_provenance = lj.at("linking_provenance").get<std::string>();
        const std::size_t m = l.components.size();
        if (l.unknotted.size() != m || l.linking.size() != m)
            fail(where, "component/unknotted/linking size mismatch");
        for (const auto& row : l.linking)
            if (row.size() != m) fail(where, "linking matrix is not square");
        c.links[id] = std::move(l);
    }

    for (const auto& [id, kj] : root.at("knots").items()) {
        const std::string where = "knots/" + id;
        KnotData k;
        k.id = id;
        k.strands = kj.at("strands").get<int>();
        k.word = kj.at("word").get<std::string>();
        k.genus = kj.at("genus").get<int>();
        if (kj.contains("chain")) k.chain = parse_chain(kj.at("chain"), where + "/chain");
        c.knots[id] = std::move(k);
    }

    for (const auto& cj : root.at("cases")) {
        CaseData cs;
        cs.id = cj.at("id").get<std::string>();
        const std::string where = "cases/" + cs.id;
        cs.knot = cj.at("knot").get<std::string>();
        cs.slope = cj.at("slope").get<long long>();
        cs.mirror = cj.at("mirror").get<bool>();
        cs.branching_set = cj.at("branching_set").at("name").get<std::string>();
        cs.branching_type = cj.at("branching_set").at("type").get<std::string>();

        const json& sj = cj.at("surgery");
        cs.surgery.link = sj.at("link").get<std::string>();
        for (const auto& fj : sj.at("coeffs"))
            cs.surgery.coeffs.push_back(fj.get<std::string>());
        if (sj.contains("coeffs_provenance"))
            cs.surgery.coeffs_provenance = sj.at("coeffs_provenance").get<std::string>();
        for (const auto& mj : sj.at("script")) cs.surgery.script.push_back(parse_move(mj));
        cs.surgery.final_coeff = sj.at("final").get<std::string>();
        if (sj.contains("aux"))
            for (const auto& aj : sj.at("aux")) {
                std::vector<ScriptMoveData> moves;
                for (const auto& mj : aj) moves.push_back(parse_move(mj));
                cs.surgery.aux.push_back(std::move(moves));
            }

        const json& bj = cj.at("braid");
        if (bj.contains("word")) cs.braid.word = bj.at("word").get<std::string>();
        if (bj.contains("diagram_mirror"))
            cs.braid.diagram_mirror = bj.at("diagram_mirror").get<bool>();
        if (bj.contains("chain"))
            cs.braid.chain = parse_chain(bj.at("chain"), where + "/braid/chain");
        cs.braid.attach.node = bj.at("attach").at("node").get<std::string>();
        cs.braid.attach.relation = bj.at("attach").at("relation").get<std::string>();

        if (cj.contains("tangle")) {
            const json& tj = cj.at("tangle");
            if (tj.contains("cf"))
                for (const auto& fj : tj.at("cf")) {
                    CfCheckData f;
                    f.terms = fj.at("terms").get<std::string>();
                    f.value = fj.at("value").get<std::string>();
                    if (fj.contains("provenance"))
                        f.provenance = fj.at("provenance").get<std::string>();
                    cs.tangle.cf_checks.push_back(std::move(f));
                }
            if (tj.contains("tricks"))
                for (const auto& kj : tj.at("tricks")) {
                    TrickData t;
                    t.coeff = kj.at("coeff").get<std::string>();
                    t.writhe = kj.at("writhe").get<long long>();
                    t.result = kj.at("result").get<std::string>();
                    if (kj.contains("provenance"))
                        t.provenance = kj.at("provenance").get<std::string>();
                    cs.tangle.tricks.push_back(std::move(t));
                }
            if (tj.contains("montesinos"))
                cs.tangle.montesinos = tj.at("montesinos").get<std::string>();
        }

        if (!c.links.count(cs.surgery.link))
            fail(where, "unknown link " + cs.surgery.link);
        if (!c.knots.count(cs.knot)) fail(where, "unknown knot " + cs.knot);
        if (cs.surgery.coeffs.size() != c.links.at(cs.surgery.link).components.size())
            fail(where, "coefficient count does not match link components");
        c.cases.push_back(std::move(cs));
    }
    } catch (const json::exception& e) {
        throw corpus_error(std::string("corpus schema error: ") + e.what());
    }
    return c;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw corpus_error("cannot open corpus file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus(buf.str());
}

SurgeryPresentation case_presentation(const Corpus& c, const CaseData& cs) {
    const LinkData& l = c.links.at(cs.surgery.link);
    SurgeryPresentation P;
    for (std::size_t i = 0; i < l.components.size(); ++i)
        P.components.push_back({l.components[i],
                                ExtendedRational::parse(cs.surgery.coeffs[i]),
                                l.unknotted[i]});
    P.linking = l.linking;
    P.validate();
    return P;
}

namespace {

TwistScript build_script(const Corpus& c, const CaseData& cs,
                         const std::vector<ScriptMoveData>& moves) {
    TwistScript s;
    s.initial = case_presentation(c, cs);
    for (const auto& mv : moves) {
        TwistMove m;
        m.target = mv.target;
        m.t = mv.t;
        m.is_delete = mv.is_delete;
        for (const auto& [id, v] : mv.expect) m.expect[id] = ExtendedRational::parse(v);
        s.moves.push_back(std::move(m));
    }
    return s;
}

}  // namespace

TwistScript case_script(const Corpus& c, const CaseData& cs) {
    return build_script(c, cs, cs.surgery.script);
}

TwistScript case_aux_script(const Corpus& c, const CaseData& cs, std::size_t k) {
    return build_script(c, cs, cs.surgery.aux.at(k));
}

FitProblem fit_problem_for_link(const Corpus& c, const std::string& link_id, long long bound) {
    const auto it = c.links.find(link_id);
    if (it == c.links.end()) throw corpus_error("unknown link " + link_id);
    FitProblem prob;
    prob.component_count = static_cast<int>(it->second.components.size());
    prob.bound = bound;
    for (const CaseData& cs : c.cases) {
        if (cs.surgery.link != link_id) continue;
        TwistScript s = case_script(c, cs);
        // the candidate matrix replaces the stored one
        s.initial.linking.assign(prob.component_count,
                                 std::vector<long long>(prob.component_count, 0));
        // the final single component must carry the printed coefficient:
        // encode it as an expectation on the last move
        if (!s.moves.empty()) {
            ExtendedRational fin = ExtendedRational::parse(cs.surgery.final_coeff);
            // the surviving component is the one never deleted
            std::vector<bool> deleted(prob.component_count, false);
            for (const auto& mv : s.moves)
                if (mv.is_delete) deleted[s.initial.index_of(mv.target)] = true;
            for (int i = 0; i < prob.component_count; ++i)
                if (!deleted[i])
                    s.moves.back().expect[s.initial.components[i].id] = fin;
        }
        prob.scripts.push_back(std::move(s));
        for (std::size_t k = 0; k < cs.surgery.aux.size(); ++k) {
            TwistScript a = case_aux_script(c, cs, k);
            a.initial.linking.assign(prob.component_count,
                                     std::vector<long long>(prob.component_count, 0));
            prob.scripts.push_back(std::move(a));
        }
        FitAssignment a;
        for (const auto& f : cs.surgery.coeffs) a.coeffs.push_back(ExtendedRational::parse(f));
        a.slope = cs.slope;
        prob.assignments.push_back(std::move(a));
    }
    return prob;
}

}  // namespace qa
