#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bunq/bigint.hpp"

namespace bunq {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple Dynkin type. Rank restrictions (D_n needs n >= 3, E_n needs
/// n in {6,7,8}, F_4, G_2) are enforced at construction.
class SimpleType {
  public:
    SimpleType(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }

    /// Canonical spelling, e.g. "E8".
    std::string name() const;

    friend bool operator==(const SimpleType&, const SimpleType&) = default;

  private:
    Family family_;
    int rank_;
};

/// Sorted fundamental invariant degrees n_i of the Weyl group. The generators
/// of H^*(BG, Q) sit in cohomological degrees 2*n_i.
std::vector<int> invariant_degrees(const SimpleType& s);

/// A product of simple types with the invariant degrees of the product Weyl
/// group, concatenated factor by factor.
struct GroupSpec {
    std::vector<SimpleType> factors;
    std::vector<int> degrees;

    int total_rank() const;

    /// Canonical spelling, e.g. "A2xG2".
    std::string name() const;
};

GroupSpec make_group(std::vector<SimpleType> factors);

/// Parses the grammar SIMPLE ("x" SIMPLE)* with SIMPLE = letter A-G followed
/// by the rank in decimal, e.g. "A2xG2". Throws ParseError naming the
/// offending token.
GroupSpec parse_group(std::string_view text);

/// Order of the product Weyl group, computed as the product of the invariant
/// degrees.
Int weyl_order(const GroupSpec& g);

/// Cartan matrix a with a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i);
/// the simple reflection s_i acts on root coordinates by
/// v_i -> v_i - sum_j a[i][j] v_j.
std::vector<std::vector<int>> cartan_matrix(const SimpleType& s);

/// Order of the reflection group generated by the simple reflections, by
/// breadth-first closure of integer matrices on the root lattice. Intended
/// as a brute-force cross-check for small ranks; throws UsageError if the
/// closure exceeds `element_cap`.
std::uint64_t reflection_group_order(const SimpleType& s, std::uint64_t element_cap = 2000000);

/// Number of positive roots, by breadth-first closure of the simple roots
/// under the simple reflections. Cheap for every supported type.
long long positive_root_count(const SimpleType& s);

} // namespace bunq
