#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cpstrata/dga.hpp"

namespace cpstrata::ballmodels {

using dga::DgaSpec;
using gradedalg::GPolynomial;
using gradedalg::PresentedAlgebra;

/// Integer weights (a_i, b_i) of circle actions, one pair per circle.
class CircleWeights {
public:
    CircleWeights() = default;
    explicit CircleWeights(std::vector<std::pair<long, long>> pairs);

    const std::vector<std::pair<long, long>>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }
    bool empty() const { return pairs_.empty(); }

    long m(int i) const;  // a^2 + ab + b^2, the T_i^2 coefficient of d(beta)
    long n(int i) const;  // a^2 b + a b^2, the T_i^3 coefficient of d(gamma)

    friend bool operator==(const CircleWeights&, const CircleWeights&) = default;

private:
    std::vector<std::pair<long, long>> pairs_;
};

/// "1,1;2,-1" -> {(1,1),(2,-1)}; empty text gives no pairs.
CircleWeights parse_weights(const std::string& text);
std::string to_string(const CircleWeights& w);

/// Canonical chamber label for a ball count: "C_unique" (n=1,2), "big"/"small"
/// (n=3), "C_0".."C_5" (n=4). Accepts "unique" and "C0" style spellings.
std::string normalize_chamber(int n, const std::string& label);

/// Number of circle weights a chamber takes (torus circles excluded, they are fixed).
int free_circle_count(int n, const std::string& chamber);

int default_cap(int n, const std::string& chamber);

/// Rational model of the space of n unparametrized balls in the given chamber.
/// (4, C_5) is the configuration space of 4 points, i.e. the Kriz model E(CP^2, 4).
DgaSpec iemb_model(int n, const std::string& chamber, const CircleWeights& w = {}, int degree_cap = -1);

/// Cohomology of the classifying space of the stabilizer.
PresentedAlgebra bstab_presentation(int n, const std::string& chamber);

/// Candidate stabilizer cohomology for four small balls, Lambda(alpha1..alpha4, eta1, eta2)/I.
/// Literal: the five listed quadrics r1..r5 (only four of the five are independent).
/// SymmetricCompletion: every (a_j - a_k)(a_j + a_k + a_l), the quadrics through the
/// five points the listed ones single out; diagnostic only.
enum class Transcription { Literal, SymmetricCompletion };
PresentedAlgebra small_balls_stabilizer_algebra(Transcription t = Transcription::Literal);

struct Presentation {
    PresentedAlgebra algebra;
    std::map<std::string, GPolynomial> gen_map;  // generators of algebra -> cocycles of the model
};

/// Expected cohomology ring of iemb_model(n, chamber, w) (weighted form) and the
/// map sending its generators to representing cocycles. Not available for (4, C_5).
Presentation iemb_presentation(int n, const std::string& chamber, const CircleWeights& w = {});

/// Literal table form for n = 4, C_r (alpha_i in place of T_i), valid for weights with
/// every m_i = 1; alpha_i maps to T_i.
Presentation alpha_presentation(int r);
CircleWeights unit_m_weights(int r);

struct WeightIndependence {
    bool same = false;
    std::vector<std::vector<int>> rank_tables;
};

WeightIndependence weight_independence_check(int n, const std::string& chamber,
                                             const std::vector<CircleWeights>& weight_sets, int degree_cap = -1);

struct RelationImage {
    std::string source;
    std::string image;
    bool ideal_member = false;
};

struct AbIsomorphismReport {
    bool pass = false;
    std::vector<RelationImage> relations;
    std::vector<int> source_dims;
    std::vector<int> target_dims;
    bool onto = false;
};

/// Maps the classical presentation of H(Conf_3(CP^2)) into the computed
/// presentation for three small balls with third weight (1,1), so c = 1.
AbIsomorphismReport ab_isomorphism_check(int degree_cap = 10);

/// The pulled-back sigma_2, sigma_3 for a wedge of circle groups: each factor is
/// a list of circle weights sharing a torus; products of T's from different
/// factors are dropped. Exposed for tests.
std::pair<GPolynomial, GPolynomial> sigma_pullbacks(const gradedalg::TablePtr& table,
                                                    const std::vector<std::vector<std::pair<long, long>>>& factors);

}  // namespace cpstrata::ballmodels
