#include "pcone/lattice.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pcone {

std::string PosetViolation::to_string() const {
    switch (axiom) {
        case Axiom::Reflexivity:
            return "reflexivity fails at " + std::to_string(a);
        case Axiom::Antisymmetry:
            return "antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Axiom::Transitivity:
            return "transitivity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                   "," + std::to_string(c) + ")";
    }
    return "unknown axiom";
}

std::string LatticeWitness::to_string() const {
    return std::string("pair (") + std::to_string(a) + "," + std::to_string(b) + ") has no " +
           (missing_join ? "join" : "meet");
}

std::variant<FiniteLattice, PosetViolation, LatticeWitness> FiniteLattice::from_order(
    const std::vector<std::vector<bool>>& leq) {
    const int m = static_cast<int>(leq.size());
    for (const auto& row : leq) {
        if (static_cast<int>(row.size()) != m) {
            throw std::invalid_argument("from_order: relation matrix is not square");
        }
    }
    for (int a = 0; a < m; ++a) {
        if (!leq[a][a]) return PosetViolation{PosetViolation::Axiom::Reflexivity, a, -1, -1};
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (a != b && leq[a][b] && leq[b][a]) {
                return PosetViolation{PosetViolation::Axiom::Antisymmetry, a, b, -1};
            }
        }
    }
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (!leq[a][b]) continue;
            for (int c = 0; c < m; ++c) {
                if (leq[b][c] && !leq[a][c]) {
                    return PosetViolation{PosetViolation::Axiom::Transitivity, a, b, c};
                }
            }
        }
    }

    FiniteLattice L;
    L.size_ = m;
    L.leq_.assign(static_cast<std::size_t>(m) * m, false);
    L.meet_.assign(static_cast<std::size_t>(m) * m, -1);
    L.join_.assign(static_cast<std::size_t>(m) * m, -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) L.leq_[L.idx(a, b)] = leq[a][b];
    }
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            // Greatest lower bound: a candidate below both that dominates
            // every other common lower bound.
            int meet = -1;
            for (int c = 0; c < m; ++c) {
                if (!(leq[c][a] && leq[c][b])) continue;
                bool greatest = true;
                for (int d = 0; d < m; ++d) {
                    if (leq[d][a] && leq[d][b] && !leq[d][c]) {
                        greatest = false;
                        break;
                    }
                }
                if (greatest) {
                    meet = c;
                    break;
                }
            }
            if (meet < 0) return LatticeWitness{a, b, false};
            int join = -1;
            for (int c = 0; c < m; ++c) {
                if (!(leq[a][c] && leq[b][c])) continue;
                bool least = true;
                for (int d = 0; d < m; ++d) {
                    if (leq[a][d] && leq[b][d] && !leq[c][d]) {
                        least = false;
                        break;
                    }
                }
                if (least) {
                    join = c;
                    break;
                }
            }
            if (join < 0) return LatticeWitness{a, b, true};
            L.meet_[L.idx(a, b)] = L.meet_[L.idx(b, a)] = meet;
            L.join_[L.idx(a, b)] = L.join_[L.idx(b, a)] = join;
        }
    }
    return L;
}

bool LatticeMap::is_bijection() const {
    std::vector<bool> hit(table.size(), false);
    for (int v : table) {
        if (v < 0 || v >= static_cast<int>(table.size()) || hit[static_cast<std::size_t>(v)]) {
            return false;
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

std::optional<std::pair<int, int>> endomorphism_witness(const FiniteLattice& L,
                                                        const LatticeMap& f) {
    if (static_cast<int>(f.table.size()) != L.size()) {
        throw std::invalid_argument("endomorphism_witness: map size mismatch");
    }
    for (int a = 0; a < L.size(); ++a) {
        for (int b = a; b < L.size(); ++b) {
            if (f(L.meet(a, b)) != L.meet(f(a), f(b))) return std::make_pair(a, b);
            if (f(L.join(a, b)) != L.join(f(a), f(b))) return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

bool check_endo_monotone(const FiniteLattice& L, const LatticeMap& f) {
    if (!is_endomorphism(L, f)) {
        throw std::invalid_argument("check_endo_monotone: map is not an endomorphism");
    }
    for (int a = 0; a < L.size(); ++a) {
        for (int b = 0; b < L.size(); ++b) {
            if (L.leq(a, b) && !L.leq(f(a), f(b))) return false;
        }
    }
    return true;
}

DualityTriple check_dual_for_lattice(const FiniteLattice& L, const LatticeMap& f) {
    if (static_cast<int>(f.table.size()) != L.size()) {
        throw std::invalid_argument("check_dual_for_lattice: map size mismatch");
    }
    if (!f.is_bijection()) {
        throw std::invalid_argument("check_dual_for_lattice: map is not a bijection");
    }
    DualityTriple t;
    t.order_reversing = true;
    t.join_to_meet = true;
    t.meet_to_join = true;
    for (int a = 0; a < L.size(); ++a) {
        for (int b = 0; b < L.size(); ++b) {
            if (L.leq(a, b) != L.leq(f(b), f(a))) t.order_reversing = false;
            if (f(L.join(a, b)) != L.meet(f(a), f(b))) t.join_to_meet = false;
            if (f(L.meet(a, b)) != L.join(f(a), f(b))) t.meet_to_join = false;
        }
    }
    return t;
}

namespace {

// Iterates every orientation of the unordered pairs: each pair is either
// incomparable or ordered one of two ways. Reflexivity is implied;
// antisymmetry holds by construction; transitivity is checked by the
// caller via from_order.
template <typename Fn>
void for_each_relation(int size, Fn&& fn) {
    const int pairs = size * (size - 1) / 2;
    std::vector<int> state(static_cast<std::size_t>(pairs), 0);
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(size),
                                       std::vector<bool>(static_cast<std::size_t>(size), false));
    while (true) {
        for (int a = 0; a < size; ++a) {
            std::fill(leq[static_cast<std::size_t>(a)].begin(),
                      leq[static_cast<std::size_t>(a)].end(), false);
            leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
        }
        int p = 0;
        for (int a = 0; a < size; ++a) {
            for (int b = a + 1; b < size; ++b, ++p) {
                if (state[static_cast<std::size_t>(p)] == 1) {
                    leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                } else if (state[static_cast<std::size_t>(p)] == 2) {
                    leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
                }
            }
        }
        fn(leq);
        int i = 0;
        while (i < pairs && state[static_cast<std::size_t>(i)] == 2) {
            state[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == pairs) break;
        ++state[static_cast<std::size_t>(i)];
    }
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(int size) {
    if (size < 1 || size > 6) {
        throw std::invalid_argument("enumerate_lattices: size out of the supported range");
    }
    std::vector<FiniteLattice> out;
    for_each_relation(size, [&](const std::vector<std::vector<bool>>& leq) {
        auto r = FiniteLattice::from_order(leq);
        if (auto* L = std::get_if<FiniteLattice>(&r)) out.push_back(std::move(*L));
    });
    return out;
}

std::uint64_t count_partial_orders(int size) {
    std::uint64_t count = 0;
    for_each_relation(size, [&](const std::vector<std::vector<bool>>& leq) {
        auto r = FiniteLattice::from_order(leq);
        if (!std::holds_alternative<PosetViolation>(r)) ++count;
    });
    return count;
}

std::vector<LatticeMap> all_bijections(int size) {
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<LatticeMap> out;
    do {
        out.push_back(LatticeMap{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<LatticeMap> all_maps(int size) {
    std::vector<LatticeMap> out;
    std::vector<int> table(static_cast<std::size_t>(size), 0);
    while (true) {
        out.push_back(LatticeMap{table});
        int i = 0;
        while (i < size && table[static_cast<std::size_t>(i)] == size - 1) {
            table[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == size) break;
        ++table[static_cast<std::size_t>(i)];
    }
    return out;
}

FiniteLattice parse_lattice(std::istream& in) {
    int size = 0;
    if (!(in >> size) || size < 1) {
        throw std::invalid_argument("lattice text: bad size line");
    }
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(size));
    for (int a = 0; a < size; ++a) {
        std::string row;
        if (!(in >> row) || static_cast<int>(row.size()) != size) {
            throw std::invalid_argument("lattice text: bad relation row " + std::to_string(a));
        }
        for (char ch : row) {
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("lattice text: relation rows must be 0/1");
            }
            leq[static_cast<std::size_t>(a)].push_back(ch == '1');
        }
    }
    auto r = FiniteLattice::from_order(leq);
    if (auto* v = std::get_if<PosetViolation>(&r)) {
        throw std::invalid_argument("lattice text: not a partial order: " + v->to_string());
    }
    if (auto* w = std::get_if<LatticeWitness>(&r)) {
        throw std::invalid_argument("lattice text: not a lattice: " + w->to_string());
    }
    return std::get<FiniteLattice>(std::move(r));
}

std::string format_lattice(const FiniteLattice& L) {
    std::ostringstream out;
    out << L.size() << "\n";
    for (int a = 0; a < L.size(); ++a) {
        for (int b = 0; b < L.size(); ++b) out << (L.leq(a, b) ? '1' : '0');
        out << "\n";
    }
    return out.str();
}

LatticeMap parse_lattice_map(std::istream& in, int expected_size) {
    LatticeMap f;
    int v = 0;
    while (in >> v) f.table.push_back(v);
    if (static_cast<int>(f.table.size()) != expected_size) {
        throw std::invalid_argument("lattice map: expected " + std::to_string(expected_size) +
                                    " images, got " + std::to_string(f.table.size()));
    }
    for (int img : f.table) {
        if (img < 0 || img >= expected_size) {
            throw std::invalid_argument("lattice map: image out of range");
        }
    }
    return f;
}

PCLatticeBridge pc_lattice_sample() {
    const RaySet x{{Rational(2), Rational(0)}};
    const RaySet y{{Rational(0), Rational(2)}};
    PCLatticeBridge bridge;
    bridge.elements.push_back(PCElem::empty(2));
    bridge.elements.push_back(x.to_pcelem());
    bridge.elements.push_back(y.to_pcelem());
    bridge.elements.push_back(join(bridge.elements[1], bridge.elements[2]));
    bridge.elements.push_back(PCElem::all(2));

    const int m = static_cast<int>(bridge.elements.size());
    auto index_of = [&](const PCElem& e) {
        for (int i = 0; i < m; ++i) {
            if (pc_equal(bridge.elements[static_cast<std::size_t>(i)], e)) return i;
        }
        throw std::logic_error("pc_lattice_sample: family is not closed under the operators");
    };

    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m),
                                       std::vector<bool>(static_cast<std::size_t>(m), false));
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                pc_leq(bridge.elements[static_cast<std::size_t>(a)],
                       bridge.elements[static_cast<std::size_t>(b)]);
        }
    }
    auto r = FiniteLattice::from_order(leq);
    auto* L = std::get_if<FiniteLattice>(&r);
    if (!L) throw std::logic_error("pc_lattice_sample: order is not a lattice");

    // The table-derived meet/join must match the geometric operators.
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const PCElem gm = meet(bridge.elements[static_cast<std::size_t>(a)],
                                   bridge.elements[static_cast<std::size_t>(b)]);
            const PCElem gj = join(bridge.elements[static_cast<std::size_t>(a)],
                                   bridge.elements[static_cast<std::size_t>(b)]);
            if (L->meet(a, b) != index_of(gm) || L->join(a, b) != index_of(gj)) {
                throw std::logic_error("pc_lattice_sample: geometric and table lattices differ");
            }
        }
    }
    bridge.lattice = std::move(*L);
    return bridge;
}

}  // namespace pcone
