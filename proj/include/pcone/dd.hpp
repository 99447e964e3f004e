#pragma once

#include "pcone/linalg.hpp"

#include <vector>

namespace pcone::detail {

using IntVec = std::vector<Int>;

// Constraint systems handled by the double description pass. Enough for the
// intended desk scale (dim <= ~7 homogenized, a few dozen generators).
inline constexpr int kMaxConstraints = 256;

// How candidate ray pairs are screened during a double description step.
// Both tests are exact; Combinatorial is the cheap subset test on tight
// constraint sets, Rank recomputes the rank of the common tight normals.
enum class AdjacencyTest { Combinatorial, Rank };

struct GeneratorCone {
    std::vector<IntVec> rays;   // extreme rays modulo lineality, primitive
    std::vector<IntVec> lines;  // basis of the lineality space, primitive
};

/// Generators of the cone {x in R^dim : <row, x> <= 0 for every row}.
/// Rows are inserted in lexicographic order after a simplicial start; the
/// lineality space is split off first so the working cone is pointed.
GeneratorCone polar_generators(const std::vector<IntVec>& rows, int dim,
                               AdjacencyTest adjacency = AdjacencyTest::Combinatorial);

/// Divides by the gcd of the entries; the direction is preserved.
IntVec primitive(IntVec v);

/// Clears denominators and divides by the gcd: the unique primitive integer
/// vector that is a positive multiple of `v`.
IntVec integerize(const Vector& v);

Vector to_rational(const IntVec& v);

Int idot(const IntVec& a, const IntVec& b);

bool is_zero(const IntVec& v);

}  // namespace pcone::detail
