#pragma once

#include <memory>
#include <optional>
#include <string>

#include "errors.hpp"
#include "factored.hpp"

namespace entropia {

class GroupModel;
class Subgroup;
class Endo;

enum class ModelKind { Finite, Shift, PAdic, Product };

const char* model_kind_name(ModelKind kind);

/// Model-specific subgroup payload; concrete models downcast.
struct SubgroupRep {
    virtual ~SubgroupRep() = default;
};

/// Model-specific endomorphism payload.
struct EndoRep {
    virtual ~EndoRep() = default;
};

struct SubgroupFlags {
    bool compact = false;
    bool open = false;
    bool normal = false;
};

/// Immutable handle to a subgroup of one model.  All flags are derived at
/// construction; operations on handles from different models error.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(std::shared_ptr<const GroupModel> model, std::shared_ptr<const SubgroupRep> rep,
             SubgroupFlags flags)
        : model_(std::move(model)), rep_(std::move(rep)), flags_(flags) {}

    bool valid() const { return static_cast<bool>(rep_); }
    const GroupModel& model() const { return *model_; }
    const std::shared_ptr<const GroupModel>& model_ptr() const { return model_; }
    const SubgroupRep& rep() const { return *rep_; }

    bool compact() const { return flags_.compact; }
    bool open() const { return flags_.open; }
    bool normal() const { return flags_.normal; }

    std::string describe() const;

private:
    std::shared_ptr<const GroupModel> model_;
    std::shared_ptr<const SubgroupRep> rep_;
    SubgroupFlags flags_;
};

/// Immutable handle to a continuous endomorphism of one model.
class Endo {
public:
    Endo() = default;
    Endo(std::shared_ptr<const GroupModel> model, std::shared_ptr<const EndoRep> rep)
        : model_(std::move(model)), rep_(std::move(rep)) {}

    bool valid() const { return static_cast<bool>(rep_); }
    const GroupModel& model() const { return *model_; }
    const std::shared_ptr<const GroupModel>& model_ptr() const { return model_; }
    const EndoRep& rep() const { return *rep_; }

    std::string describe() const;

private:
    std::shared_ptr<const GroupModel> model_;
    std::shared_ptr<const EndoRep> rep_;
};

/// Restriction/quotient data for the Addition Theorem machinery.
struct InducedPair {
    std::shared_ptr<const GroupModel> sub_model;
    Endo sub_endo;
    std::shared_ptr<const GroupModel> quot_model;
    Endo quot_endo;
};

/// The contract every group model implements.  A model is a finitely
/// representable locally compact group together with a declared ascending
/// chain of compact open normal subgroups, cofinal in the family of all
/// compact open normal subgroups.  Everything is pure and immutable.
class GroupModel : public std::enable_shared_from_this<GroupModel> {
public:
    virtual ~GroupModel() = default;

    virtual ModelKind kind() const = 0;
    virtual std::string describe() const = 0;
    virtual bool is_compact() const = 0;
    virtual bool is_discrete() const = 0;
    virtual bool is_abelian() const = 0;

    /// k-th chain member, k >= 1; ascending in k.
    virtual Subgroup chain_member(int k) const = 0;

    /// How many chain members the entropy supremum needs for this
    /// endomorphism; the engine verifies a prefix independently.
    virtual int family_cutoff(const Endo& phi) const = 0;

    virtual Subgroup whole_group() const = 0;
    virtual Subgroup trivial_subgroup() const = 0;

    virtual Subgroup product(const Subgroup& a, const Subgroup& b) const = 0;
    virtual Subgroup intersect(const Subgroup& a, const Subgroup& b) const = 0;
    virtual Subgroup preimage(const Endo& phi, const Subgroup& a) const = 0;
    virtual Subgroup image(const Endo& phi, const Subgroup& a) const = 0;
    virtual Index index(const Subgroup& a, const Subgroup& b) const = 0; // [a:b], b <= a checked
    virtual bool contains(const Subgroup& a, const Subgroup& b) const = 0;
    virtual bool subgroup_equal(const Subgroup& a, const Subgroup& b) const;

    virtual Endo identity_endo() const = 0;
    virtual Endo compose(const Endo& f, const Endo& g) const = 0; // f after g
    virtual bool is_automorphism(const Endo& phi) const = 0;
    virtual Endo inverse_endo(const Endo& phi) const = 0;
    virtual bool endo_equal(const Endo& f, const Endo& g) const = 0;

    /// Kernel as a handle when the model can represent it.
    virtual std::optional<Subgroup> kernel(const Endo& phi) const = 0;

    /// Whether h is contained in the image of the whole group under phi.
    virtual bool whole_image_contains(const Endo& phi, const Subgroup& h) const = 0;

    /// Certified step count after which the trajectory index ratios are
    /// constant, when the model can supply one.
    virtual std::optional<int> stabilization_bound(const Endo& phi, const Subgroup& u) const = 0;

    /// Closed form for the smallest inversely invariant subgroup above u,
    /// for models where fixed-point iteration may ascend forever.
    virtual std::optional<Subgroup> inverse_invariant_hull_closed_form(const Endo& phi,
                                                                       const Subgroup& u) const
    {
        (void)phi;
        (void)u;
        return std::nullopt;
    }

    /// Restriction to h and quotient by h, both as models with endos.
    virtual InducedPair restriction_and_quotient(const Endo& phi, const Subgroup& h) const
    {
        (void)phi;
        (void)h;
        fail(ErrorCode::QuotientNotRepresentable,
             describe() + ": restriction/quotient models are not representable");
    }

    virtual std::string describe_subgroup(const Subgroup& s) const = 0;
    virtual std::string describe_endo(const Endo& e) const = 0;
};

// --- free dispatch helpers; these check model compatibility ---

void require_same_model(const Subgroup& a, const Subgroup& b);
void require_same_model(const Endo& phi, const Subgroup& a);

Subgroup product(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup preimage(const Endo& phi, const Subgroup& a);
Subgroup image(const Endo& phi, const Subgroup& a);
Index index(const Subgroup& a, const Subgroup& b);
bool contains(const Subgroup& a, const Subgroup& b);
bool equal(const Subgroup& a, const Subgroup& b);

Endo compose(const Endo& f, const Endo& g);
Endo inverse(const Endo& phi);
Endo endo_power(const Endo& phi, int m); // m >= 0
bool is_automorphism(const Endo& phi);

} // namespace entropia
