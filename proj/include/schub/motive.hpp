#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "schub/grass.hpp"
#include "schub/ppring.hpp"

namespace schub {

// A hypersurface-and-planes problem instance: degree-d hypersurfaces in P^n
// probed by kappa-dimensional planes, with every derived quantity kept exact.
struct TripleParams {
    int n = 0, d = 0, kappa = 0;
    Int rank_qe;            // rank of Sym^d V* = C(d+kappa, kappa)
    Int dim_gr;             // (kappa+1)(n-kappa)
    Int s_excess;           // kappa(n-kappa) - rank_qe + kappa + 1
    Int codim_shift;        // n - 1 - s_excess
    Int big_n;              // C(n+d, d) - 1, dimension of the hypersurface space
    Int expected_fano_dim;  // dim_gr - rank_qe
    Int hf_dim;             // n - 2*kappa - 1

    GrContext context() const { return GrContext(n, kappa); }
};

TripleParams triple_params(int n, int d, int kappa);

struct ConditionBReport {
    TripleParams params;
    std::optional<Int> m;  // absent iff s_excess < 0 (the cycle is undefined there)
    bool holds = false;    // s_excess >= 0 and m != 0
    std::optional<Int> osculating_count;  // (-1)^(kappa-1) m / d
    bool elv_sufficient = false;  // d >= 3 and n-kappa+1 >= C(kappa-1+d, kappa)
    bool intro_bound = false;     // n >= C(kappa+d-1, kappa) + kappa - 1
};

// The hyperplane-power class c_1(V*)^s used by every top-level computation.
GrClass excess_class(const TripleParams& p);

// b_{p,q} = integral of xi_{n-k-p} xi_{n-k-q} c_{rk-n+p+q-1}(Sym^d V*) a;
// zero when the Chern index falls outside [0, rank]. `a` must be homogeneous
// of degree s_excess.
Int b_coeff(const TripleParams& p, int bp, int bq, const GrClass& a,
            IntegrateMode mode = IntegrateMode::schur);

// all b_{p,q} for 0 <= p,q <= n-kappa; symmetric
std::vector<std::vector<Int>> b_matrix(const TripleParams& p, const GrClass& a,
                                       IntegrateMode mode = IntegrateMode::schur);

// degree-i slice sum_{p+q=i} b_{p,q} H^p x H^q
PPClass t_class(const TripleParams& p, const GrClass& a, int i,
                IntegrateMode mode = IntegrateMode::schur);

// sum of the a_i: the b-polynomial divided by (1+d.HxI)(1+d.IxH); integral
// coefficients are asserted
PPClass sum_ai(const TripleParams& p, const GrClass& a,
               IntegrateMode mode = IntegrateMode::schur);

// m = d * sum_j (-d)^j int xi_{n-k} xi_{j-k+1} c_{rk-2-j}(Sym^d V*) a, checked
// against the diagonal-coefficient route d * sum_j (-d)^j b_{0,n-1-j}
Int m_value_with_a(const TripleParams& p, const GrClass& a,
                   IntegrateMode mode = IntegrateMode::schur);
Int m_value(const TripleParams& p, IntegrateMode mode = IntegrateMode::schur);

ConditionBReport condition_b(const TripleParams& p, IntegrateMode mode = IntegrateMode::schur);

// beta_i = (d/m) [H^(n-1-i) x H^i] of the degree-(n-1) part of sum_ai;
// requires m != 0
std::vector<Rat> betas(const TripleParams& p, IntegrateMode mode = IntegrateMode::schur);

// count of kappa-planes on a generic hypersurface when the expected Fano
// dimension is zero: the integral of the top Chern class of Sym^d V*
Int plane_count(const TripleParams& p, IntegrateMode mode = IntegrateMode::schur);

struct ClaimRecord {
    std::string id;
    std::string statement;
    bool pass = false;
    std::vector<std::string> details;  // failing triples, or notes
};

struct ScanDiagnostics {
    // d > 2 triples with nonnegative excess but m = 0 (none are known)
    std::vector<std::array<int, 3>> equivalence_counterexamples;
    // triples where the condition holds but (-1)^(kappa-1) m/d <= 0
    std::vector<std::array<int, 3>> nonpositive_counts;
};

struct ClaimsReport {
    int kappa_max = 0, d_max = 0, n_max = 0;
    std::vector<ClaimRecord> claims;
    ScanDiagnostics diagnostics;
    bool all_pass() const;
};

// Verifies the five recorded facts about the surjectivity condition over the
// given box of (n, d, kappa). Failures are recorded, never thrown. Bounds
// below (4, 6, 12) are rejected so the advertised facts are always covered.
ClaimsReport verify_claims(int kappa_max = 4, int d_max = 6, int n_max = 12,
                           IntegrateMode mode = IntegrateMode::both);

}  // namespace schub
