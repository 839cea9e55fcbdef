#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finite_group.hpp"
#include "finite_model.hpp"
#include "model.hpp"

namespace entropia {

/// Coordinatewise subgroup pattern: an explicit window of per-coordinate
/// normal subgroups of F, plus a constant subgroup value on each infinite
/// tail.  Canonical form trims window cells equal to the adjacent tail;
/// with an empty window `lo` is the first coordinate taking the right
/// tail value (normalized to 1 when both tails agree).
struct RectRep : SubgroupRep {
    ElemSet left_tail;
    ElemSet right_tail;
    long long lo = 1;
    std::vector<ElemSet> cells;

    long long hi() const { return lo + static_cast<long long>(cells.size()); }
    const ElemSet& cell_at(long long i) const
    {
        if (i < lo)
            return left_tail;
        if (i >= hi())
            return right_tail;
        return cells[static_cast<std::size_t>(i - lo)];
    }
};

/// Uniform shift-with-coefficient endomorphism: x |-> theta applied to the
/// coordinate s places to the right, (phi x)_n = theta(x_{n+s}).  The
/// classical right shift is (s = -1, theta = id), the left shift
/// (s = +1, theta = id).
struct ShiftEndoRep : EndoRep {
    long long s = 0;
    FiniteEndoMap theta;
};

/// The group (product of F over the compact tail) + (direct sum of F over
/// the discrete tail) for a finite coefficient group F.  Orientation says
/// which tail carries the product topology; duals of shift models flip it.
/// Strongly compactly covered by construction: every element lies in some
/// chain member.
class ShiftModel : public GroupModel {
public:
    static std::shared_ptr<const ShiftModel> create(FiniteGroup coeff, bool left_compact = true,
                                                    std::string coeff_name = {});

    const FiniteGroup& coefficient_group() const { return coeff_; }
    const std::string& coefficient_name() const { return coeff_name_; }
    bool left_compact() const { return left_compact_; }

    Subgroup rect_subgroup(ElemSet left_tail, ElemSet right_tail, long long lo,
                           std::vector<ElemSet> cells) const;
    Subgroup constant_pattern(const ElemSet& value) const;
    Endo shift_endo(long long s, FiniteEndoMap theta) const;

    static const RectRep& rect_of(const Subgroup& s);
    static const ShiftEndoRep& shift_of(const Endo& e);

    ModelKind kind() const override { return ModelKind::Shift; }
    std::string describe() const override;
    bool is_compact() const override { return false; }
    bool is_discrete() const override { return false; }
    bool is_abelian() const override { return coeff_.is_abelian(); }

    Subgroup chain_member(int k) const override;
    int family_cutoff(const Endo& phi) const override;
    Subgroup whole_group() const override;
    Subgroup trivial_subgroup() const override;

    Subgroup product(const Subgroup& a, const Subgroup& b) const override;
    Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
    Subgroup preimage(const Endo& phi, const Subgroup& a) const override;
    Subgroup image(const Endo& phi, const Subgroup& a) const override;
    Index index(const Subgroup& a, const Subgroup& b) const override;
    bool contains(const Subgroup& a, const Subgroup& b) const override;
    bool subgroup_equal(const Subgroup& a, const Subgroup& b) const override;

    Endo identity_endo() const override;
    Endo compose(const Endo& f, const Endo& g) const override;
    bool is_automorphism(const Endo& phi) const override;
    Endo inverse_endo(const Endo& phi) const override;
    bool endo_equal(const Endo& f, const Endo& g) const override;
    std::optional<Subgroup> kernel(const Endo& phi) const override;
    bool whole_image_contains(const Endo& phi, const Subgroup& h) const override;

    std::optional<int> stabilization_bound(const Endo& phi, const Subgroup& u) const override;
    std::optional<Subgroup> inverse_invariant_hull_closed_form(const Endo& phi,
                                                               const Subgroup& u) const override;
    InducedPair restriction_and_quotient(const Endo& phi, const Subgroup& h) const override;

    std::string describe_subgroup(const Subgroup& s) const override;
    std::string describe_endo(const Endo& e) const override;

    /// Oracle bridge: the finite window [lo, hi] as a direct power of F,
    /// with rectangular handles projected to element sets.
    struct Truncation {
        std::shared_ptr<const FiniteModel> model;
        long long lo = 0;
        long long hi = 0;
    };
    Truncation truncate(long long lo, long long hi) const;
    Subgroup truncate_handle(const Truncation& t, const Subgroup& rect) const;

private:
    ShiftModel(FiniteGroup coeff, bool left_compact, std::string coeff_name)
        : coeff_(std::move(coeff)), left_compact_(left_compact),
          coeff_name_(std::move(coeff_name)) {}

    FiniteGroup coeff_;
    bool left_compact_;
    std::string coeff_name_;

    ElemSet full_cell() const { return whole_set(coeff_); }
    ElemSet trivial_cell() const { return trivial_set(coeff_); }

    Subgroup wrap(RectRep rep) const; // canonicalizes and derives flags
};

} // namespace entropia
