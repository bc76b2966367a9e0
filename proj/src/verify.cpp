#include "qa/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "qa/invariants.hpp"

namespace qa {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::Yes: return "pass";
        case Decision::No: return "fail";
        default: return "undecided";
    }
}

int Report::passed() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(),
                                          [](const CheckResult& r) {
                                              return r.verdict == Decision::Yes;
                                          }));
}

int Report::failed() const {
    return static_cast<int>(std::count_if(results.begin(), results.end(),
                                          [](const CheckResult& r) {
                                              return r.verdict == Decision::No;
                                          }));
}

int Report::undecided() const {
    return static_cast<int>(results.size()) - passed() - failed();
}

int Report::exit_code() const {
    if (failed() > 0) return 1;
    if (undecided() > 0) return 3;
    return 0;
}

namespace {

struct Node {
    BraidWord word;
    int parity = 0;  // mirror count accumulated on the trunk
};

struct ChainOutcome {
    BraidWord word;        // final running word
    int mirrors = 0;       // mirror steps applied
    Decision verdict = Decision::Yes;
    std::string detail;
};

// Runs a chain from `start`, checking every *_eq step and harvesting labeled
// nodes (with the parity at the moment of labeling).
ChainOutcome run_chain(const BraidWord& start, const std::vector<ChainStep>& chain,
                       std::map<std::string, Node>* nodes, const VerifyOptions& opts) {
    ChainOutcome out;
    out.word = start;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const ChainStep& s = chain[k];
        const std::string at = "step " + std::to_string(k);
        switch (s.op) {
            case ChainStep::Op::Conjugate:
                out.word = conjugate(out.word, expand(s.word, out.word.strands));
                break;
            case ChainStep::Op::Flip:
                out.word = flip(out.word);
                break;
            case ChainStep::Op::Mirror:
                out.word = mirror(out.word);
                ++out.mirrors;
                break;
            case ChainStep::Op::Reverse:
                out.word = reverse(out.word);
                break;
            case ChainStep::Op::GroupEq: {
                const BraidWord want = expand(s.word, out.word.strands);
                const Decision d = equals(out.word, want, opts.reduce);
                if (d != Decision::Yes) {
                    out.verdict = d;
                    out.detail = at + ": group equality with " + s.word + " " + to_string(d);
                    return out;
                }
                out.word = want;
                break;
            }
            case ChainStep::Op::LiteralEq: {
                const BraidWord want = expand(s.word, out.word.strands);
                if (free_reduce(out.word) != free_reduce(want)) {
                    out.verdict = Decision::No;
                    out.detail = at + ": literal equality with " + s.word + " failed";
                    return out;
                }
                out.word = want;
                break;
            }
        }
        if (!s.label.empty() && nodes)
            (*nodes)[s.label] = Node{out.word, out.mirrors};
    }
    return out;
}

std::map<std::string, Node> trunk_nodes(const KnotData& k, const VerifyOptions& opts,
                                        Decision* trunk_verdict, std::string* detail) {
    std::map<std::string, Node> nodes;
    const BraidWord gamma = expand(k.word, k.strands);
    ChainOutcome out = run_chain(gamma, k.chain, &nodes, opts);
    if (trunk_verdict) *trunk_verdict = out.verdict;
    if (detail) *detail = out.detail;
    return nodes;
}

CheckResult make(const std::string& subject, const std::string& check, Decision v,
                 std::string expected = "", std::string actual = "",
                 std::string detail = "") {
    return CheckResult{subject, check, v, std::move(expected), std::move(actual),
                       std::move(detail)};
}

CheckResult check_eq_ll(const std::string& subject, const std::string& check, long long want,
                        long long got) {
    return make(subject, check, want == got ? Decision::Yes : Decision::No,
                std::to_string(want), std::to_string(got));
}

}  // namespace

std::vector<CheckResult> verify_case(const Corpus& c, const CaseData& cs,
                                     const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const std::string& id = cs.id;

    // ---- surgery: h1 of the initial presentation equals the slope ----
    try {
        SurgeryPresentation P = case_presentation(c, cs);
        out.push_back(check_eq_ll(id, "surgery/h1", cs.slope, h1_order(P)));
    } catch (const std::exception& e) {
        out.push_back(make(id, "surgery/h1", Decision::No, "", "", e.what()));
    }

    // ---- surgery: the twist script with every printed intermediate ----
    try {
        TwistScript s = case_script(c, cs);
        auto [fin, report] = run_script(s);
        const ExtendedRational want = ExtendedRational::parse(cs.surgery.final_coeff);
        Decision v = Decision::Yes;
        std::string actual;
        if (fin.components.size() != 1) {
            v = Decision::No;
            actual = std::to_string(fin.components.size()) + " components left";
        } else {
            actual = fin.components[0].coeff.str();
            if (fin.components[0].coeff != want) v = Decision::No;
            if (std::llabs(want.p) != cs.slope || want.q != 1) v = Decision::No;
        }
        out.push_back(make(id, "surgery/script", v, want.str(), actual));
    } catch (const std::exception& e) {
        out.push_back(make(id, "surgery/script", Decision::No, "", "", e.what()));
    }

    // ---- surgery: side twists with printed coefficients ----
    if (!cs.surgery.aux.empty()) {
        Decision v = Decision::Yes;
        std::string detail;
        for (std::size_t k = 0; k < cs.surgery.aux.size(); ++k) {
            try {
                run_script(case_aux_script(c, cs, k));
            } catch (const std::exception& e) {
                v = Decision::No;
                detail = "aux " + std::to_string(k) + ": " + e.what();
                break;
            }
        }
        out.push_back(make(id, "surgery/aux", v, "", "", detail));
    }

    // ---- braid chain + attach + parity + invariant cross-check ----
    const KnotData& knot = c.knots.at(cs.knot);
    Decision trunk_v = Decision::Yes;
    std::string trunk_detail;
    const std::map<std::string, Node> nodes = trunk_nodes(knot, opts, &trunk_v, &trunk_detail);
    if (trunk_v != Decision::Yes) {
        out.push_back(make(id, "braid/chain", trunk_v, "", "", "trunk: " + trunk_detail));
        std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
            return a.check < b.check;
        });
        return out;
    }
    auto node_it = nodes.find(cs.braid.attach.node);
    if (node_it == nodes.end()) {
        out.push_back(make(id, "braid/chain", Decision::No, "", "",
                           "unknown attach node " + cs.braid.attach.node));
    } else {
        const Node& node = node_it->second;
        try {
            const BraidWord start = cs.braid.word.empty()
                                        ? node.word
                                        : expand(cs.braid.word, knot.strands);
            ChainOutcome run = run_chain(start, cs.braid.chain, nullptr, opts);
            Decision attach_v = run.verdict;
            std::string attach_detail = run.detail;
            int attach_mirror = 0;
            const std::string& rel = cs.braid.attach.relation;
            if (attach_v == Decision::Yes && !cs.braid.word.empty()) {
                if (rel == "equal") {
                    attach_v = equals(run.word, node.word, opts.reduce);
                } else if (rel == "mirror") {
                    attach_v = equals(run.word, mirror(node.word), opts.reduce);
                    attach_mirror = 1;
                } else if (rel == "invariant" || rel == "invariant-mirror") {
                    // figure-level deformation: bridge by invariants only
                    Laurent jn = jones_q(node.word);
                    if (rel == "invariant-mirror") {
                        jn = jn.invert_variable();
                        attach_mirror = 1;
                    }
                    attach_v = jones_q(run.word) == jn ? Decision::Yes : Decision::No;
                    if (attach_v == Decision::Yes &&
                        closure_component_count(run.word) == 1 &&
                        alexander(run.word) != alexander(node.word))
                        attach_v = Decision::No;
                } else {
                    attach_v = Decision::No;
                    attach_detail = "unknown attach relation " + rel;
                }
                if (attach_v != Decision::Yes && attach_detail.empty())
                    attach_detail =
                        "attach to " + cs.braid.attach.node + " (" + rel + ") failed";
            } else if (cs.braid.word.empty()) {
                if (rel == "mirror" || rel == "invariant-mirror") attach_mirror = 1;
            }
            out.push_back(make(id, "braid/chain", attach_v, "", "", attach_detail));

            // mirror-parity ledger: printed-diagram flag + chain mirrors +
            // attach relation + node parity must reproduce the lemma's claim
            const int parity = (cs.braid.diagram_mirror ? 1 : 0) + run.mirrors +
                               attach_mirror + node.parity;
            const bool claim = parity % 2 == 1;
            out.push_back(make(id, "braid/parity",
                               claim == cs.mirror ? Decision::Yes : Decision::No,
                               cs.mirror ? "mirror" : "plain",
                               claim ? "mirror" : "plain"));

            // independent cross-check: the printed knot word and the census
            // word must have matching polynomial invariants up to mirror
            if (!cs.braid.word.empty()) {
                const int start_to_node = run.mirrors + attach_mirror;
                Laurent jn = jones_q(node.word);
                if (start_to_node % 2 == 1) jn = jn.invert_variable();
                Decision inv_v = jones_q(start) == jn ? Decision::Yes : Decision::No;
                if (inv_v == Decision::Yes && closure_component_count(start) == 1 &&
                    alexander(start) != alexander(node.word))
                    inv_v = Decision::No;
                out.push_back(make(id, "braid/invariants", inv_v));
            }
        } catch (const std::exception& e) {
            out.push_back(make(id, "braid/chain", Decision::No, "", "", e.what()));
        }
    }

    // ---- tangle arithmetic ----
    try {
        Decision v = Decision::Yes;
        std::string detail;
        for (const auto& f : cs.tangle.cf_checks) {
            if (cf_value(parse_cf(f.terms)) != ExtendedRational::parse(f.value)) {
                v = Decision::No;
                detail = f.terms + " != " + f.value;
                break;
            }
        }
        for (const auto& t : cs.tangle.tricks) {
            if (v != Decision::Yes) break;
            if (montesinos_trick_fraction(ExtendedRational::parse(t.coeff), t.writhe) !=
                ExtendedRational::parse(t.result)) {
                v = Decision::No;
                detail = t.coeff + " - " + std::to_string(t.writhe) + " != " + t.result;
            }
        }
        out.push_back(make(id, "tangle/arithmetic", v, "", "", detail));
        if (!cs.tangle.montesinos.empty()) {
            const long long det =
                montesinos_determinant(parse_fraction_list(cs.tangle.montesinos));
            out.push_back(check_eq_ll(id, "tangle/montesinos", cs.slope, det));
        }
    } catch (const std::exception& e) {
        out.push_back(make(id, "tangle/arithmetic", Decision::No, "", "", e.what()));
    }

    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.check < b.check;
    });
    return out;
}

std::vector<CheckResult> verify_knot(const Corpus& c, const KnotData& k,
                                     const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    const std::string& id = k.id;
    try {
        const BraidWord gamma = expand(k.word, k.strands);
        out.push_back(make(id, "knot/closure",
                           closure_component_count(gamma) == 1 ? Decision::Yes : Decision::No,
                           "1", std::to_string(closure_component_count(gamma))));
        out.push_back(check_eq_ll(id, "knot/genus", k.genus, genus_positive_braid(gamma)));
        const Laurent delta = alexander(gamma);
        out.push_back(check_eq_ll(id, "knot/genus-degree", k.genus, delta.max_exp()));
        out.push_back(make(id, "knot/lspace-form",
                           is_lspace_alexander_form(delta) ? Decision::Yes : Decision::No));
        Decision trunk_v = Decision::Yes;
        std::string detail;
        trunk_nodes(k, opts, &trunk_v, &detail);
        out.push_back(make(id, "knot/trunk-chain", trunk_v, "", "", detail));
    } catch (const std::exception& e) {
        out.push_back(make(id, "knot/error", Decision::No, "", "", e.what()));
    }
    std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
        return a.check < b.check;
    });
    return out;
}

Report verify_all(const Corpus& c, const VerifyOptions& opts) {
    Report report;
    for (const auto& [kid, k] : c.knots) {
        auto rs = verify_knot(c, k, opts);
        report.results.insert(report.results.end(), rs.begin(), rs.end());
    }
    for (const CaseData& cs : c.cases) {
        auto rs = verify_case(c, cs, opts);
        report.results.insert(report.results.end(), rs.begin(), rs.end());
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return a.subject != b.subject ? a.subject < b.subject : a.check < b.check;
              });
    return report;
}

}  // namespace qa
