#pragma once

// Catalan pairs: graded families C with a unit and a compose map
// C_k x C_l -> C_{k+l+1} that is a levelwise bijection onto C_{n+1}.
// Any two such families are uniquely isomorphic; catalan_iso computes that
// isomorphism by structural recursion.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "freeconv/partition.hpp"
#include "freeconv/tree.hpp"

namespace freeconv {

// Ordered rooted tree; a vertex with no children is a leaf.
struct PlanarTree {
    std::vector<PlanarTree> children;

    std::size_t edges() const;
    std::size_t leaves() const;
    // Nested brackets, leaf = "[]".
    std::string str() const;

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children == b.children; }
    friend bool operator<(const PlanarTree& a, const PlanarTree& b) { return a.children < b.children; }
};

PlanarTree parse_planar_tree(const std::string& text);

// Non-decreasing parking function a(1..n): a non-decreasing, a(i) <= i.
struct ParkingFn {
    std::vector<int> values;

    bool valid() const;
    std::string str() const;

    friend bool operator==(const ParkingFn& a, const ParkingFn& b) { return a.values == b.values; }
    friend bool operator<(const ParkingFn& a, const ParkingFn& b) { return a.values < b.values; }
};

ParkingFn parse_parking_fn(const std::string& text);

enum class Family { Y, NCP1, NCP2, NCP3, NCP4, NCP5, NCP6, NCP7, NCP8, PT1, PT2, RST1, RST2, LST1, LST2, NDPF };

struct FamilyId {
    Family base = Family::Y;
    // Compose with swapped arguments.
    bool reversed = false;

    friend bool operator==(const FamilyId& a, const FamilyId& b)
    {
        return a.base == b.base && a.reversed == b.reversed;
    }
};

inline constexpr FamilyId kYp{Family::Y, true};

// "Y", "Yp", "NCP1".."NCP8", "PT1", "PT2", "RST1", "RST2", "LST1", "LST2",
// "NDPF"; a trailing "'" selects the reversed pair.
FamilyId parse_family(const std::string& name);
std::string family_name(FamilyId f);
std::vector<FamilyId> all_families();

using Payload = std::variant<Tree, Partition, PlanarTree, ParkingFn>;

struct CatalanObject {
    FamilyId family;
    Payload payload;

    // The grading of the family: vertices (Y), ground set (NCP), edges (PT),
    // leaves minus one (Schroeder trees), length (NDPF).
    std::size_t size() const;
    std::string str() const;

    friend bool operator==(const CatalanObject& a, const CatalanObject& b)
    {
        return a.family == b.family && a.payload == b.payload;
    }
};

// Checks the payload type and the family's shape constraints.
bool belongs(const CatalanObject& x);

CatalanObject catalan_unit(FamilyId fam);
CatalanObject catalan_compose(FamilyId fam, const CatalanObject& x, const CatalanObject& y);
std::pair<CatalanObject, CatalanObject> catalan_decompose(FamilyId fam, const CatalanObject& z);
CatalanObject catalan_iso(FamilyId src, FamilyId dst, const CatalanObject& x);

// Level n of a family, as the image of Y_n.
std::vector<CatalanObject> enumerate_family(FamilyId fam, std::size_t n);

// Payload parsing by family: tree text, partition JSON, nested arrays, int arrays.
CatalanObject parse_object(FamilyId fam, const std::string& text);

struct NamedBijection {
    std::string name;
    FamilyId source;
    FamilyId target;
};

const std::vector<NamedBijection>& named_bijections();
const NamedBijection& find_bijection(const std::string& name);
CatalanObject named_bijection(const std::string& name, const CatalanObject& x);

Partition phi(const Tree& t);
Tree phi_inv(const Partition& p);
// phi through the closure of the "right child of" relation.
Partition phi_explicit(const Tree& t);
Partition psi(const Tree& t);
// Kreweras complement as the isomorphism NCP2 -> NCP1.
Partition kreweras_via_catalan(const Partition& p);
Partition kreweras_inverse(const Partition& p);

Tree mirror(const Tree& t);
// Adds a leaf as new rightmost (leftmost) child of every internal vertex.
PlanarTree add_rightmost_leaves(const PlanarTree& t);
PlanarTree add_leftmost_leaves(const PlanarTree& t);

struct DiagramResult {
    bool pass = true;
    std::size_t checked = 0;
    std::string witness;
};

// Hook used by tests to corrupt one leg of a diagram.
using DiagramLeg = CatalanObject (*)(const CatalanObject&);

// Element-wise check of the three commuting squares on level n.
DiagramResult verify_diagram(int id, std::size_t n, DiagramLeg corrupt = nullptr);

// All planar trees with n edges, Schroeder trees with n+1 leaves, and
// parking functions of length n, generated directly (not through iso).
std::vector<PlanarTree> enumerate_planar_trees(std::size_t edges);
std::vector<PlanarTree> enumerate_schroeder(std::size_t n, bool right);
std::vector<ParkingFn> enumerate_parking(std::size_t n);
// Level n of a family from its direct generator above, not through iso.
std::vector<CatalanObject> enumerate_direct(FamilyId fam, std::size_t n);

} // namespace freeconv
