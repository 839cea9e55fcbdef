#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace entropia {

/// Elements of a subgroup as a sorted vector of element indices.
using ElemSet = std::vector<int>;

/// A finite group given by its composition table.  Immutable after
/// construction; tables of order <= kExhaustiveCap are fully validated
/// (identity, inverses, associativity via Light's test), larger tables get
/// the same structural checks but exhaustive enumeration is refused.
class FiniteGroup {
public:
    static constexpr int kExhaustiveCap = 512;

    static FiniteGroup from_table(int n, std::vector<int> table);
    static FiniteGroup cyclic(int n);
    static FiniteGroup direct_product(const std::vector<FiniteGroup>& parts);
    static FiniteGroup direct_product_orders(const std::vector<int>& orders);

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }

    bool is_abelian() const { return abelian_; }
    int element_order(int a) const;
    int power(int a, long long e) const;

    const std::vector<int>& table() const { return table_; }

private:
    FiniteGroup() = default;

    int n_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    bool abelian_ = true;

    void finish_construction(bool full_validation);
};

// --- element-set subgroup utilities (brute force, the oracle backend) ---

ElemSet closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const ElemSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElemSet& s);
ElemSet set_product(const FiniteGroup& g, const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& a, const ElemSet& b); // b subset of a
ElemSet whole_set(const FiniteGroup& g);
ElemSet trivial_set(const FiniteGroup& g);

/// Greedy small generating set (used by validation and endo generation).
std::vector<int> generating_set(const FiniteGroup& g);

/// Complete subgroup enumeration by iterated joins of cyclic subgroups.
/// Errors TooLarge above the exhaustive cap.
std::vector<ElemSet> all_subgroups(const FiniteGroup& g);
std::vector<ElemSet> all_normal_subgroups(const FiniteGroup& g);

/// Witness that the group is strongly compactly covered as a discrete
/// group: every element lies in a finite normal subgroup (here, its
/// normal closure).  Trivially true for finite groups.
bool strongly_compactly_covered_witness(const FiniteGroup& g);

// --- quotients, restrictions, endomorphisms ---

struct QuotientResult {
    FiniteGroup group;
    std::vector<int> projection;   // parent element -> coset index
    std::vector<int> coset_rep;    // coset index -> a representative
};
QuotientResult quotient_group(const FiniteGroup& g, const ElemSet& normal);

struct SubgroupAsGroup {
    FiniteGroup group;
    std::vector<int> to_parent;    // child index -> parent element
    std::vector<int> from_parent;  // parent element -> child index or -1
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& g, const ElemSet& subgroup);

/// Validated endomorphism, stored as a full element map.
struct FiniteEndoMap {
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
    bool operator==(const FiniteEndoMap& other) const { return map == other.map; }
};

FiniteEndoMap make_endo(const FiniteGroup& g, std::vector<int> map);
std::optional<FiniteEndoMap> try_make_endo(const FiniteGroup& g, std::vector<int> map);
FiniteEndoMap identity_endo(const FiniteGroup& g);
FiniteEndoMap compose_endos(const FiniteEndoMap& f, const FiniteEndoMap& g); // f after g
bool endo_is_bijective(const FiniteEndoMap& f);
FiniteEndoMap invert_endo(const FiniteGroup& g, const FiniteEndoMap& f);
FiniteEndoMap power_endo(const FiniteGroup& g, long long m); // x -> x^m

ElemSet endo_image_set(const FiniteGroup& g, const FiniteEndoMap& f, const ElemSet& s);
ElemSet endo_preimage_set(const FiniteGroup& g, const FiniteEndoMap& f, const ElemSet& s);
ElemSet endo_kernel(const FiniteGroup& g, const FiniteEndoMap& f);

/// phi(N) <= N required; the induced map on cosets.
FiniteEndoMap induced_on_quotient(const FiniteGroup& g, const FiniteEndoMap& f,
                                  const QuotientResult& q, const ElemSet& normal);
/// phi(H) <= H required; the restriction in child coordinates.
FiniteEndoMap restricted_to(const FiniteGroup& g, const FiniteEndoMap& f,
                            const SubgroupAsGroup& sub);

/// All endomorphisms found by extending every assignment of images to a
/// generating set.  Exact but exponential in the generator count; meant
/// for small orders only.
std::vector<FiniteEndoMap> all_endos(const FiniteGroup& g);
std::vector<FiniteEndoMap> all_automorphisms(const FiniteGroup& g);

// --- catalog and IO ---

FiniteGroup dihedral_group(int n);     // order 2n, n >= 1
FiniteGroup quaternion_group();        // Q8
FiniteGroup symmetric_group(int n);    // n <= 5
FiniteGroup alternating_group(int n);  // n <= 5

/// Named small groups up to the given order, for sweeps.
std::vector<std::pair<std::string, FiniteGroup>> group_catalog(int max_order);

/// Text format: first line n, then n lines of n indices.
FiniteGroup read_table_stream(std::istream& in);
FiniteGroup read_table_file(const std::string& path);

} // namespace entropia
