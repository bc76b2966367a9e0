#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qa/braid.hpp"
#include "qa/rational.hpp"
#include "qa/surgery.hpp"

namespace qa {

class corpus_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One step of a braid chain. `conjugate` transforms the running word;
/// `flip`/`mirror`/`reverse` apply the closure-preserving moves;
/// `group_eq`/`literal_eq` compare the running word with a printed one and
/// adopt it (optionally naming the node so cases can attach to it).
struct ChainStep {
    enum class Op { Conjugate, Flip, Mirror, Reverse, GroupEq, LiteralEq };
    Op op;
    std::string word;   // conjugator or expected word
    std::string label;  // node name for *_eq steps, may be empty
    std::string provenance;
};

struct LinkData {
    std::string id;
    std::vector<std::string> components;
    std::vector<bool> unknotted;
    std::vector<std::vector<long long>> linking;
    std::string linking_provenance;
};

struct KnotData {
    std::string id;
    int strands = 0;
    std::string word;  // census braid word, power-grouped syntax
    int genus = 0;
    std::vector<ChainStep> chain;  // trunk: from the census word to labeled nodes
};

struct ScriptMoveData {
    std::string target;
    long long t = 0;
    bool is_delete = false;
    std::map<std::string, std::string> expect;  // id -> "p/q"
};

struct SurgeryData {
    std::string link;
    std::vector<std::string> coeffs;
    std::string coeffs_provenance;
    std::vector<ScriptMoveData> script;
    std::string final_coeff;
    /// Side computations on the same initial presentation (for example the
    /// twist that produces a strongly invertible diagram, with its printed
    /// coefficients). Each entry is an independent move list.
    std::vector<std::vector<ScriptMoveData>> aux;
};

struct AttachData {
    std::string node;      // trunk label this case's word reaches
    std::string relation;  // "equal" | "mirror" | "invariant" | "invariant-mirror"
};

struct BraidCaseData {
    std::string word;  // printed word of the surgered knot ("" = attach directly)
    bool diagram_mirror = false;  // the paper prints the *mirror* of the knot
    std::vector<ChainStep> chain;
    AttachData attach;
};

struct CfCheckData {
    std::string terms;  // "[6,-2]"
    std::string value;  // "13/2"
    std::string provenance;
};

struct TrickData {
    std::string coeff;
    long long writhe = 0;
    std::string result;
    std::string provenance;
};

struct TangleData {
    std::vector<CfCheckData> cf_checks;
    std::vector<TrickData> tricks;
    std::string montesinos;  // "3/5,2/3,-1/4" or ""
};

struct CaseData {
    std::string id;
    std::string knot;
    long long slope = 0;
    bool mirror = false;
    std::string branching_set;
    std::string branching_type;  // "knot" | "link"
    SurgeryData surgery;
    BraidCaseData braid;
    TangleData tangle;
};

struct Corpus {
    std::map<std::string, LinkData> links;
    std::map<std::string, KnotData> knots;
    std::vector<CaseData> cases;
};

Corpus load_corpus(const std::string& path);
Corpus parse_corpus(const std::string& json_text);

/// Builds the surgery presentation of a case from its link + coefficients.
SurgeryPresentation case_presentation(const Corpus& c, const CaseData& cs);

/// Builds the complete TwistScript of a case (presentation + moves + expects).
TwistScript case_script(const Corpus& c, const CaseData& cs);

/// Builds the k-th auxiliary TwistScript of a case.
TwistScript case_aux_script(const Corpus& c, const CaseData& cs, std::size_t k);

/// Collects everything that constrains a link's matrix: all case scripts on
/// the link plus every slope assignment.
FitProblem fit_problem_for_link(const Corpus& c, const std::string& link_id,
                                long long bound = 10);

}  // namespace qa
