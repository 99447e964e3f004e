#pragma once

#include "pcone/pseudocone.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pcone {

// Finite-lattice engine. Everything here is table-driven and exhaustive; it
// exercises the order-theoretic laws independently of the geometry.

struct PosetViolation {
    enum class Axiom { Reflexivity, Antisymmetry, Transitivity };
    Axiom axiom;
    int a = -1, b = -1, c = -1;
    std::string to_string() const;
};

// A pair with no least upper bound or no greatest lower bound.
struct LatticeWitness {
    int a = -1, b = -1;
    bool missing_join = false;  // otherwise the meet is missing
    std::string to_string() const;
};

class FiniteLattice {
public:
    /// Builds meet/join tables from a <= relation (leq[a][b]: a precedes b).
    /// Reports the violated poset axiom, or the pair missing a bound.
    static std::variant<FiniteLattice, PosetViolation, LatticeWitness> from_order(
        const std::vector<std::vector<bool>>& leq);

    int size() const { return size_; }
    bool leq(int a, int b) const { return leq_[idx(a, b)]; }
    int meet(int a, int b) const { return meet_[idx(a, b)]; }
    int join(int a, int b) const { return join_[idx(a, b)]; }

private:
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
               static_cast<std::size_t>(b);
    }
    int size_ = 0;
    std::vector<bool> leq_;
    std::vector<int> meet_;
    std::vector<int> join_;
};

// Total self-map of a lattice, as an image table.
struct LatticeMap {
    std::vector<int> table;
    int operator()(int x) const { return table[static_cast<std::size_t>(x)]; }
    bool is_bijection() const;
};

/// First pair breaking meet- or join-preservation, if any.
std::optional<std::pair<int, int>> endomorphism_witness(const FiniteLattice& L,
                                                        const LatticeMap& f);

inline bool is_endomorphism(const FiniteLattice& L, const LatticeMap& f) {
    return !endomorphism_witness(L, f).has_value();
}

/// Monotonicity of an endomorphism. The precondition is checked; the result
/// must always be true for genuine endomorphisms.
bool check_endo_monotone(const FiniteLattice& L, const LatticeMap& f);

struct DualityTriple {
    bool order_reversing = false;
    bool join_to_meet = false;  // f(x v y) = f(x) ^ f(y)
    bool meet_to_join = false;  // f(x ^ y) = f(x) v f(y)
    bool tri_equivalent() const {
        return order_reversing == join_to_meet && join_to_meet == meet_to_join;
    }
};

/// Exhaustively evaluates the three duality properties of a bijection.
/// Throws std::invalid_argument if f is not a bijection.
DualityTriple check_dual_for_lattice(const FiniteLattice& L, const LatticeMap& f);

/// All lattices on exactly `size` labeled elements, by filtering every
/// partial order. Feasible through size 5.
std::vector<FiniteLattice> enumerate_lattices(int size);

/// Number of partial orders on `size` labeled elements (enumeration
/// cross-check).
std::uint64_t count_partial_orders(int size);

std::vector<LatticeMap> all_bijections(int size);
std::vector<LatticeMap> all_maps(int size);

// Text format: first line the size, then one row of 0/1 digits per element
// (row a, column b holds leq(a,b)); maps are whitespace-separated images.
FiniteLattice parse_lattice(std::istream& in);
std::string format_lattice(const FiniteLattice& L);
LatticeMap parse_lattice_map(std::istream& in, int expected_size);

// Bridge to the geometric side: a small family of pseudo-cone elements
// closed under meet and join, exported with tables computed by the
// geometric operators.
struct PCLatticeBridge {
    std::vector<PCElem> elements;
    FiniteLattice lattice;
};

/// {empty, xbar, ybar, xbar v ybar, R^2} for x=(2,0), y=(0,2).
PCLatticeBridge pc_lattice_sample();

}  // namespace pcone
