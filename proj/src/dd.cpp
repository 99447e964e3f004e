#include "pcone/dd.hpp"

#include <algorithm>
#include <bitset>
#include <set>
#include <stdexcept>
#include <utility>

namespace pcone::detail {

Int idot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("idot: dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; });
}

IntVec primitive(IntVec v) {
    Int g = 0;
    for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
    if (g > 1) {
        for (Int& c : v) c /= g;
    }
    return v;
}

IntVec integerize(const Vector& v) {
    Int l = 1;
    for (const auto& c : v) l = boost::multiprecision::lcm(l, denominator_of(c));
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        r[i] = numerator_of(v[i]) * (l / denominator_of(v[i]));
    }
    return primitive(std::move(r));
}

Vector to_rational(const IntVec& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

namespace {

using Tight = std::bitset<kMaxConstraints>;

struct Ray {
    IntVec coords;  // in the coordinates of the pointed quotient
    Tight tight;    // inserted constraints satisfied with equality
};

Matrix to_rational_rows(const std::vector<IntVec>& rows) {
    Matrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_rational(r));
    return m;
}

// Indices of a maximal linearly independent subset, scanning in order.
std::vector<int> independent_rows(const std::vector<IntVec>& rows) {
    std::vector<int> chosen;
    Matrix reduced;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Matrix probe = reduced;
        probe.push_back(to_rational(rows[i]));
        if (rank(probe) > static_cast<int>(reduced.size())) {
            reduced = std::move(probe);
            chosen.push_back(static_cast<int>(i));
        }
    }
    return chosen;
}

// Rank of the constraint rows tight at both rays; adjacency in a pointed
// m-dimensional cone means rank m-2.
bool adjacent_by_rank(const Ray& p, const Ray& q, const std::vector<IntVec>& coord_rows,
                      int m) {
    const Tight common = p.tight & q.tight;
    Matrix tight_rows;
    for (std::size_t i = 0; i < coord_rows.size(); ++i) {
        if (common.test(i)) tight_rows.push_back(to_rational(coord_rows[i]));
    }
    return rank(tight_rows) == m - 2;
}

bool adjacent_combinatorially(const Ray& p, const Ray& q, const std::vector<Ray>& rays,
                              std::size_t pi, std::size_t qi) {
    const Tight common = p.tight & q.tight;
    for (std::size_t t = 0; t < rays.size(); ++t) {
        if (t == pi || t == qi) continue;
        if ((rays[t].tight & common) == common) return false;
    }
    return true;
}

}  // namespace

GeneratorCone polar_generators(const std::vector<IntVec>& input_rows, int dim,
                               AdjacencyTest adjacency) {
    if (dim < 0) throw std::invalid_argument("polar_generators: negative dimension");

    std::vector<IntVec> rows;
    for (const auto& r : input_rows) {
        if (static_cast<int>(r.size()) != dim) {
            throw std::invalid_argument("polar_generators: row dimension mismatch");
        }
        if (!is_zero(r)) rows.push_back(primitive(r));
    }
    if (static_cast<int>(rows.size()) > kMaxConstraints) {
        throw std::invalid_argument("polar_generators: too many constraints");
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    GeneratorCone out;
    if (rows.empty()) {
        for (int i = 0; i < dim; ++i) {
            IntVec e(static_cast<std::size_t>(dim), 0);
            e[static_cast<std::size_t>(i)] = 1;
            out.lines.push_back(std::move(e));
        }
        return out;
    }

    // Lineality space: common kernel of the rows.
    for (const Vector& v : nullspace(to_rational_rows(rows), dim)) {
        out.lines.push_back(integerize(v));
    }

    // Work inside the row space, where the constrained cone is pointed.
    const std::vector<int> basis_idx = independent_rows(rows);
    const int m = static_cast<int>(basis_idx.size());
    std::vector<IntVec> basis;
    for (int i : basis_idx) basis.push_back(rows[static_cast<std::size_t>(i)]);

    // Constraint rows expressed in basis coordinates: the value of row i on
    // x = sum_k c_k basis_k is <coord_rows[i], c>.
    std::vector<IntVec> coord_rows(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        IntVec cr(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            cr[static_cast<std::size_t>(k)] = idot(rows[i], basis[static_cast<std::size_t>(k)]);
        }
        coord_rows[i] = std::move(cr);
    }

    // Simplicial start: rays r_j with <coord_rows[basis_idx[i]], r_j> = -delta_ij,
    // i.e. the negated inverse of the basis Gram matrix.
    Matrix gram(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        gram[static_cast<std::size_t>(i)] =
            to_rational(coord_rows[static_cast<std::size_t>(basis_idx[static_cast<std::size_t>(i)])]);
    }
    const LinMap gram_map{gram};
    std::vector<Ray> rays;
    for (int j = 0; j < m; ++j) {
        Vector col = zero_vector(m);
        col[static_cast<std::size_t>(j)] = -1;
        Ray r;
        r.coords = integerize(gram_map.inverse().apply(col));
        for (int i = 0; i < m; ++i) {
            if (i != j) r.tight.set(static_cast<std::size_t>(basis_idx[static_cast<std::size_t>(i)]));
        }
        rays.push_back(std::move(r));
    }

    std::vector<bool> inserted(rows.size(), false);
    for (int i : basis_idx) inserted[static_cast<std::size_t>(i)] = true;

    for (std::size_t ci = 0; ci < rows.size(); ++ci) {
        if (inserted[ci]) continue;
        inserted[ci] = true;
        const IntVec& c = coord_rows[ci];

        std::vector<std::size_t> pos, zero, neg;
        std::vector<Int> values(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            values[r] = idot(c, rays[r].coords);
            const int s = values[r].sign();
            if (s > 0) {
                pos.push_back(r);
            } else if (s < 0) {
                neg.push_back(r);
            } else {
                zero.push_back(r);
            }
        }
        if (pos.empty()) {
            for (std::size_t r : zero) rays[r].tight.set(ci);
            continue;
        }

        std::vector<Ray> next;
        std::set<IntVec> seen;
        for (std::size_t r : zero) {
            Ray kept = rays[r];
            kept.tight.set(ci);
            seen.insert(kept.coords);
            next.push_back(std::move(kept));
        }
        for (std::size_t r : neg) {
            seen.insert(rays[r].coords);
            next.push_back(rays[r]);
        }
        for (std::size_t p : pos) {
            for (std::size_t q : neg) {
                const bool adj = adjacency == AdjacencyTest::Rank
                                     ? adjacent_by_rank(rays[p], rays[q], coord_rows, m)
                                     : adjacent_combinatorially(rays[p], rays[q], rays, p, q);
                if (!adj) continue;
                IntVec combo(static_cast<std::size_t>(m));
                for (int k = 0; k < m; ++k) {
                    const auto ku = static_cast<std::size_t>(k);
                    combo[ku] = values[p] * rays[q].coords[ku] - values[q] * rays[p].coords[ku];
                }
                combo = primitive(std::move(combo));
                if (!seen.insert(combo).second) continue;
                Ray nr;
                nr.coords = std::move(combo);
                nr.tight = (rays[p].tight & rays[q].tight);
                nr.tight.set(ci);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    for (const Ray& r : rays) {
        IntVec lifted(static_cast<std::size_t>(dim), 0);
        for (int k = 0; k < m; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            for (int d = 0; d < dim; ++d) {
                const auto du = static_cast<std::size_t>(d);
                lifted[du] += r.coords[ku] * basis[ku][du];
            }
        }
        out.rays.push_back(primitive(std::move(lifted)));
    }
    return out;
}

}  // namespace pcone::detail
