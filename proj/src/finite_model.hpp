#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finite_group.hpp"
#include "model.hpp"

namespace entropia {

struct FiniteSubgroupRep : SubgroupRep {
    ElemSet elements;
};

struct FiniteEndoRep : EndoRep {
    FiniteEndoMap map;
};

/// Finite groups as a group model.  The whole group is the single chain
/// member (compact open normal, trivially cofinal), so every entropy of a
/// finite model is zero.  Doubles as the brute-force oracle backend for
/// the other models.
class FiniteModel : public GroupModel {
public:
    static std::shared_ptr<const FiniteModel> create(FiniteGroup group, std::string name = {});

    const FiniteGroup& group() const { return group_; }
    const std::string& name() const { return name_; }

    Subgroup subgroup_from_elements(ElemSet elements) const;
    Subgroup subgroup_from_generators(const std::vector<int>& gens) const;
    Endo endo_from_map(std::vector<int> map) const;
    Endo endo_from_multiplier(long long m) const;

    static const ElemSet& elements_of(const Subgroup& s);
    static const FiniteEndoMap& map_of(const Endo& e);

    ModelKind kind() const override { return ModelKind::Finite; }
    std::string describe() const override;
    bool is_compact() const override { return true; }
    bool is_discrete() const override { return true; }
    bool is_abelian() const override { return group_.is_abelian(); }

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
    InducedPair restriction_and_quotient(const Endo& phi, const Subgroup& h) const override;

    std::string describe_subgroup(const Subgroup& s) const override;
    std::string describe_endo(const Endo& e) const override;

private:
    explicit FiniteModel(FiniteGroup group, std::string name)
        : group_(std::move(group)), name_(std::move(name)) {}

    FiniteGroup group_;
    std::string name_;

    Subgroup wrap(ElemSet elements) const;
};

} // namespace entropia
