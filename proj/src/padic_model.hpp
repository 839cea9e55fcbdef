#pragma once

#include <memory>
#include <optional>

#include "model.hpp"

namespace entropia {

/// Compact open subgroup p^k Z_p (level k), the whole group, or {0}.
struct LevelRep : SubgroupRep {
    enum class Kind { Level, Whole, Trivial } which = Kind::Level;
    long long level = 0;
};

/// Multiplication by a nonzero rational r, reduced to its valuation
/// v = v_p(r); the unit part acts trivially on every level subgroup.
/// An absent valuation means the zero map.
struct MultEndoRep : EndoRep {
    std::optional<long long> valuation;
};

/// Q_p as a pure subgroup-lattice model; elements are never represented.
class PAdicModel : public GroupModel {
public:
    static std::shared_ptr<const PAdicModel> create(long long p);

    long long prime() const { return p_; }

    Subgroup level_subgroup(long long k) const;
    Endo mult_endo(std::optional<long long> valuation) const;

    static const LevelRep& level_of(const Subgroup& s);
    static const MultEndoRep& mult_of(const Endo& e);

    /// log p^max(0,-v); the closed-form value the generic engine must match.
    EntropyValue closed_form_entropy(const Endo& phi) const;

    ModelKind kind() const override { return ModelKind::PAdic; }
    std::string describe() const override;
    bool is_compact() const override { return false; }
    bool is_discrete() const override { return false; }
    bool is_abelian() const override { return true; }

    Subgroup chain_member(int k) const override; // p^{-k} Z_p
    int family_cutoff(const Endo& phi) const override;
    Subgroup whole_group() const override;
    Subgroup trivial_subgroup() const override;

    Subgroup product(const Subgroup& a, const Subgroup& b) const override;
    Subgroup intersect(const Subgroup& a, const Subgroup& b) const override;
    Subgroup preimage(const Endo& phi, const Subgroup& a) const override;
    Subgroup image(const Endo& phi, const Subgroup& a) const override;
    Index index(const Subgroup& a, const Subgroup& b) const override;
    bool contains(const Subgroup& a, const Subgroup& b) const override;

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

private:
    explicit PAdicModel(long long p) : p_(p) {}

    long long p_;

    Subgroup wrap(LevelRep rep) const;
};

} // namespace entropia
