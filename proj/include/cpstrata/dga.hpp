#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cpstrata/gradedalg.hpp"
#include "cpstrata/sparse.hpp"

namespace cpstrata::dga {

using gradedalg::GPolynomial;
using gradedalg::PresentedAlgebra;
using gradedalg::TablePtr;

/// Presented algebra plus generator differentials; generators absent from the
/// map are closed. Construction rejects d(g) that is not homogeneous of degree |g|+1.
class DgaSpec {
public:
    DgaSpec(PresentedAlgebra algebra, const std::map<std::string, GPolynomial>& differential, int degree_cap);

    const PresentedAlgebra& algebra() const { return algebra_; }
    const TablePtr& table() const { return algebra_.table(); }
    const GPolynomial& d_generator(int index) const { return d_[static_cast<std::size_t>(index)]; }
    int degree_cap() const { return cap_; }

    DgaSpec with_cap(int cap) const;

    /// Matrix of d from degree q to q+1 in the complement bases, with its kernel.
    struct DegreeMap {
        std::vector<linalg::SparseVector> images;  // one per complement monomial of degree q
        linalg::KernelResult kernel;
    };
    std::shared_ptr<const DegreeMap> degree_map(int q) const;

private:
    struct Cache;

    PresentedAlgebra algebra_;
    std::vector<GPolynomial> d_;
    int cap_;
    std::shared_ptr<Cache> cache_;
};

GPolynomial differential(const DgaSpec& d, const GPolynomial& p);

struct CheckResult {
    bool ok = true;
    std::string detail;  // names the offending generator / relation on failure

    explicit operator bool() const { return ok; }
};

CheckResult check_d_squared(const DgaSpec& d);
CheckResult check_ideal_stability(const DgaSpec& d);

struct CohomologyReport {
    int degree_cap = 0;
    std::map<int, int> ranks;
    std::map<int, std::vector<GPolynomial>> representatives;
    bool d_squared_ok = false;
    bool ideal_stable_ok = false;
    bool top_degrees_vanish = false;  // ranks at cap-1 and cap are both zero

    int rank(int q) const;
    std::vector<int> rank_vector() const;  // degrees 0..cap
    long euler_characteristic() const;
};

/// Throws ModelError when d^2 or ideal stability fails.
CohomologyReport cohomology_ranks(const DgaSpec& d);

/// True iff p (homogeneous, degree <= cap) is zero in H, i.e. lies in im(d) + I.
bool is_coboundary(const DgaSpec& d, const GPolynomial& p);
bool is_cocycle(const DgaSpec& d, const GPolynomial& p);

struct PresentationReport {
    bool pass = false;
    std::string failure;          // empty on success
    int failed_degree = -1;
    std::map<int, int> expected;  // quotient dimensions of the presentation
    std::map<int, int> computed;  // cohomology ranks of the model
};

/// Checks that gen_map induces an isomorphism P -> H(D) through the cap:
/// images are cocycles, relations go to coboundaries, dimensions agree and
/// the induced map is onto in every degree.
PresentationReport verify_presentation(const DgaSpec& d, const PresentedAlgebra& p,
                                       const std::map<std::string, GPolynomial>& gen_map);

/// Same DGA with its generators listed in a different order (order[i] = old index
/// of the new i-th generator) and optionally renamed.
DgaSpec reorder_generators(const DgaSpec& d, const std::vector<int>& order,
                           const std::vector<std::string>& new_names = {});

}  // namespace cpstrata::dga
