#pragma once

#include <memory>
#include <vector>

#include "finite_group.hpp"
#include "finite_model.hpp"
#include "model.hpp"
#include "shift_model.hpp"

namespace entropia {

/// Finite abelian group as invariant factors d_1 | d_2 | ... | d_k.
/// Elements are tuples x_i mod d_i, encoded mixed-radix with the first
/// factor most significant (matching FiniteGroup::direct_product_orders).
/// The fixed pairing <x,y> = sum_i x_i y_i (L/d_i) mod L with L = d_k
/// identifies the dual group with the group itself.
struct FinAbPresentation {
    std::vector<long long> factors;

    static FinAbPresentation make(std::vector<long long> factors);

    long long order() const;
    long long lcm() const { return factors.empty() ? 1 : factors.back(); }

    std::vector<long long> decode(long long code) const;
    long long encode(const std::vector<long long>& tuple) const;
    long long add(long long a, long long b) const;
    long long pairing(long long x, long long y) const; // valued in Z_L

    FiniteGroup as_table_group() const;
};

/// Integer matrix endomorphism x -> Mx of a presentation; entry (i,j)
/// must satisfy d_i | M_ij * d_j so the map is well defined.
struct MatrixEndo {
    std::vector<std::vector<long long>> entries; // row-major k x k
};

MatrixEndo make_matrix_endo(const FinAbPresentation& pres,
                            std::vector<std::vector<long long>> entries);
long long apply_matrix(const FinAbPresentation& pres, const MatrixEndo& m, long long code);
FiniteEndoMap matrix_to_map(const FinAbPresentation& pres, const MatrixEndo& m);

/// Adjoint matrix: the unique N with <Mx, y> = <x, Ny> for all x, y.
MatrixEndo dual_endo(const FinAbPresentation& pres, const MatrixEndo& m);

/// Subgroup utilities on encoded elements.
ElemSet span_of(const FinAbPresentation& pres, const std::vector<long long>& generator_codes);

/// Annihilator of the subgroup generated by the given elements, computed
/// by solving the pairing congruence system over the integers.
ElemSet annihilator(const FinAbPresentation& pres, const ElemSet& subgroup_codes);

/// Invariant factors of A/B for encoded subgroups B <= A.
std::vector<long long> subquotient_invariant_factors(const FinAbPresentation& pres,
                                                     const ElemSet& a, const ElemSet& b);

/// Diagonalize an integer matrix by unimodular row/column operations,
/// returning the diagonal and the accumulated column transform V with
/// A*V column-equivalent to the diagonalized form.  Only what the
/// congruence solve needs.
struct DiagonalizeResult {
    std::vector<long long> diagonal;               // length min(m,k)
    std::vector<std::vector<long long>> col_transform; // k x k unimodular
};
DiagonalizeResult integer_diagonalize(std::vector<std::vector<long long>> a, std::size_t cols);

/// Isomorphism from an abelian table group onto a presentation.
struct AbelianDecomposition {
    FinAbPresentation pres;
    std::vector<long long> elem_to_code; // group element -> presentation code
    std::vector<int> code_to_elem;       // presentation code -> group element
};
AbelianDecomposition decompose_abelian(const FiniteGroup& g);

/// The Pontryagin dual of an abelian shift model: orientation flipped,
/// coefficient group replaced by its (concretely realized) dual, shift
/// offset negated, coefficient map replaced by its adjoint.
struct DualModelResult {
    std::shared_ptr<const GroupModel> model;
    Endo endo;
};
DualModelResult dual_shift_model(const std::shared_ptr<const ShiftModel>& model, const Endo& phi);

/// Coordinatewise annihilator of a rectangular handle, in the dual model.
Subgroup dual_rect_subgroup(const std::shared_ptr<const ShiftModel>& model,
                            const std::shared_ptr<const ShiftModel>& dual, const Subgroup& rect);

/// Dual of a finite abelian model with a map endomorphism.
DualModelResult dual_finite_model(const std::shared_ptr<const FiniteModel>& model,
                                  const Endo& phi);

} // namespace entropia
