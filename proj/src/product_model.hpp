#pragma once

#include <memory>

#include "model.hpp"

namespace entropia {

struct ProductSubgroupRep : SubgroupRep {
    Subgroup first;
    Subgroup second;
};

struct ProductEndoRep : EndoRep {
    Endo first;
    Endo second;
};

/// Direct product of two models; subgroups and endomorphisms are pairs and
/// every operation acts componentwise.  The chain of pairwise products of
/// the factor chains is cofinal.
class ProductModel : public GroupModel {
public:
    static std::shared_ptr<const ProductModel> create(std::shared_ptr<const GroupModel> a,
                                                      std::shared_ptr<const GroupModel> b);

    const std::shared_ptr<const GroupModel>& first() const { return a_; }
    const std::shared_ptr<const GroupModel>& second() const { return b_; }

    Subgroup pair_subgroup(Subgroup a, Subgroup b) const;
    Endo pair_endo(Endo a, Endo b) const;

    static const ProductSubgroupRep& parts_of(const Subgroup& s);
    static const ProductEndoRep& parts_of(const Endo& e);

    ModelKind kind() const override { return ModelKind::Product; }
    std::string describe() const override;
    bool is_compact() const override { return a_->is_compact() && b_->is_compact(); }
    bool is_discrete() const override { return a_->is_discrete() && b_->is_discrete(); }
    bool is_abelian() const override { return a_->is_abelian() && b_->is_abelian(); }

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

    std::string describe_subgroup(const Subgroup& s) const override;
    std::string describe_endo(const Endo& e) const override;

private:
    ProductModel(std::shared_ptr<const GroupModel> a, std::shared_ptr<const GroupModel> b)
        : a_(std::move(a)), b_(std::move(b)) {}

    std::shared_ptr<const GroupModel> a_;
    std::shared_ptr<const GroupModel> b_;

    Subgroup wrap(Subgroup a, Subgroup b) const;
};

} // namespace entropia
