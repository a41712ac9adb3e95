#pragma once

#include "skein/linalg.hpp"
#include "skein/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skein {

// Sparse tensor entries of a finite-dimensional ribbon Hopf algebra given by
// exact structure constants. Scalars live in the cyclotomic field whose order
// the data file declares.
struct HopfAlgebraData {
    std::string name;
    long field_order = 1;
    size_t dim = 0;
    std::vector<std::string> labels;

    // mult[(i,j)] = vector of coefficients of e_i e_j
    std::map<std::pair<size_t, size_t>, std::vector<Scalar>> mult;
    std::vector<Scalar> unit;
    // coprod[i] = list of (j, k, c): Delta(e_i) = sum c e_j (x) e_k
    std::vector<std::vector<std::tuple<size_t, size_t, Scalar>>> coprod;
    std::vector<Scalar> counit;
    Mat antipode;              // S e_j = sum_i antipode(i,j) e_i
    Mat rmatrix;               // R = sum rmatrix(i,j) e_i (x) e_j
    std::vector<Scalar> ribbon;
    std::vector<Scalar> pivot;
    std::vector<Scalar> rintegral;  // covector
    std::vector<Scalar> cointegral; // two-sided

    std::vector<Scalar> mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    std::vector<Scalar> basis(size_t i) const;
    Scalar eps(const std::vector<Scalar>& a) const;
    std::vector<Scalar> antipode_apply(const std::vector<Scalar>& a) const;
    std::vector<Scalar> invert_element(const std::vector<Scalar>& a) const; // throws if singular
};

// An explicit finite-dimensional module presented by its action tensor.
struct ModuleData {
    std::string name;
    size_t rank = 0;
    bool flag_simple = false;
    bool flag_projective = false;
    std::string covers; // simple it is the projective cover of, when declared
    // action[h] = rank x rank matrix of e_h
    std::vector<Mat> action;
};

struct AxiomReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_passed() const;
    std::string str() const;
};

struct HopfPackage {
    HopfAlgebraData algebra;
    std::vector<ModuleData> modules;
    const ModuleData& module(const std::string& name) const;
    bool has_module(const std::string& name) const;
};

// Text-format loader. Rejects data failing validate_hopf unless skip_validate.
HopfPackage load_hopf_file(const std::string& path, bool skip_validate = false);
HopfPackage parse_hopf_text(const std::string& text, bool skip_validate = false);
std::string hopf_to_text(const HopfPackage& pkg);

// Axiom suite: Hopf, quasitriangular, ribbon, unimodular, factorizable;
// module axioms for every shipped module. Stops early only if stop_at_first.
AxiomReport validate_hopf(const HopfPackage& pkg, bool stop_at_first = false);

// -------- module operations ------------------------------------------------

ModuleData module_dual(const HopfAlgebraData& H, const ModuleData& m);
ModuleData module_tensor(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b);
ModuleData module_direct_sum(const HopfAlgebraData& H, const ModuleData& a,
                             const ModuleData& b);
ModuleData module_trivial(const HopfAlgebraData& H);
ModuleData module_regular(const HopfAlgebraData& H);

// exact basis of the intertwiner space Hom_H(a, b)
std::vector<Mat> hom_space(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b);

// braiding a (x) b -> b (x) a: flip after acting by the R-matrix
Mat braiding(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b);
Mat braiding_inverse(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b);
Mat twist(const HopfAlgebraData& H, const ModuleData& m);         // ribbon action
Mat twist_inverse(const HopfAlgebraData& H, const ModuleData& m);
Mat pivot_action(const HopfAlgebraData& H, const ModuleData& m);
Scalar qdim(const HopfAlgebraData& H, const ModuleData& m);       // trace of pivot

// quantum trace of f in End(m) and right partial trace of f in End(a (x) b)
Scalar qtrace(const HopfAlgebraData& H, const ModuleData& m, const Mat& f);
Mat partial_qtrace_right(const HopfAlgebraData& H, const ModuleData& a, const ModuleData& b,
                         const Mat& f);

// duality morphisms with the pivot convention used by the engine:
//   coev : 1 -> m (x) m*        plain pairing
//   ev   : m* (x) m -> 1        plain contraction
//   coev': 1 -> m* (x) m        pivot-corrected
//   ev'  : m (x) m* -> 1        pivot-corrected (closing a loop gives qdim)
Mat coev(const HopfAlgebraData& H, const ModuleData& m);
Mat ev(const HopfAlgebraData& H, const ModuleData& m);
Mat coev_tilde(const HopfAlgebraData& H, const ModuleData& m);
Mat ev_tilde(const HopfAlgebraData& H, const ModuleData& m);

// projectivity: is m a direct summand of a free module H^rank(m)?
bool is_projective(const HopfAlgebraData& H, const ModuleData& m);

} // namespace skein
