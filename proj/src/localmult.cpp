#include "effjet/localmult.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace effjet {

void ChartIdeal::validate() const {
    for (const auto& g : gens) {
        if (g.num_vars() != num_vars())
            throw std::invalid_argument("generator variable count does not match the chart");
        if (sgn(g.eval(base_point)) != 0)
            throw std::invalid_argument("generator does not vanish at the base point");
    }
}

namespace {

struct ExpHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ull;
        for (unsigned v : e) {
            h ^= v + 0x9e3779b9u;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using SparseRow = std::vector<std::pair<int, Rational>>;  // ascending column index

// row -= factor * pivot (pivot is monic on its leading column).
SparseRow subtract_scaled(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -factor * pivot[j].second);
            ++j;
        } else {
            Rational v = row[i].second - factor * pivot[j].second;
            if (sgn(v) != 0) out.emplace_back(row[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

template <typename F>
void for_each_monomial_below(int vars, int maxdeg, Exponents& buf, int slot, int used, F&& f) {
    if (slot == vars) {
        f(buf);
        return;
    }
    for (int e = 0; e + used <= maxdeg; ++e) {
        buf[static_cast<std::size_t>(slot)] = static_cast<unsigned>(e);
        for_each_monomial_below(vars, maxdeg, buf, slot + 1, used + e, f);
    }
    buf[static_cast<std::size_t>(slot)] = 0;
}

int order_at_origin(const MultiPoly& g) {
    int o = -1;
    for (const auto& [e, c] : g.terms()) {
        int d = static_cast<int>(total_degree(e));
        if (o < 0 || d < o) o = d;
    }
    return o;
}

// dim of C[x]/(I + m^d): monomial generators kill the columns they divide;
// the remaining generators contribute sparse Macaulay rows x^alpha * g
// reduced by Gaussian elimination over the surviving columns.
long macaulay_dim(const std::vector<MultiPoly>& gens, int vars, int d) {
    std::vector<Exponents> mono_gens;
    std::vector<const MultiPoly*> general;
    for (const auto& g : gens) {
        if (g.term_count() == 1)
            mono_gens.push_back(g.terms().begin()->first);
        else
            general.push_back(&g);
    }
    std::unordered_map<Exponents, int, ExpHash> survivor;
    long survivors = 0;
    Exponents buf(static_cast<std::size_t>(vars), 0);
    for_each_monomial_below(vars, d - 1, buf, 0, 0, [&](const Exponents& e) {
        for (const auto& m : mono_gens) {
            bool divisible = true;
            for (int i = 0; i < vars; ++i)
                if (e[static_cast<std::size_t>(i)] < m[static_cast<std::size_t>(i)]) {
                    divisible = false;
                    break;
                }
            if (divisible) return;
        }
        survivor.emplace(e, static_cast<int>(survivors));
        ++survivors;
    });
    if (general.empty()) return survivors;

    std::unordered_map<int, SparseRow> pivots;
    long rank = 0;
    Exponents prod(static_cast<std::size_t>(vars), 0);
    for (const MultiPoly* g : general) {
        int ord = order_at_origin(*g);
        if (ord >= d) continue;
        Exponents alpha(static_cast<std::size_t>(vars), 0);
        for_each_monomial_below(vars, d - 1 - ord, alpha, 0, 0, [&](const Exponents& a) {
            SparseRow row;
            for (const auto& [e, c] : g->terms()) {
                unsigned deg = 0;
                for (int i = 0; i < vars; ++i) {
                    prod[static_cast<std::size_t>(i)] =
                        a[static_cast<std::size_t>(i)] + e[static_cast<std::size_t>(i)];
                    deg += prod[static_cast<std::size_t>(i)];
                }
                if (deg >= static_cast<unsigned>(d)) continue;
                auto it = survivor.find(prod);
                if (it == survivor.end()) continue;  // killed by a monomial generator
                row.emplace_back(it->second, c);
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            // Accumulate duplicate columns (possible after the shift).
            SparseRow packed;
            for (const auto& [col, v] : row) {
                if (!packed.empty() && packed.back().first == col) {
                    packed.back().second += v;
                    if (sgn(packed.back().second) == 0) packed.pop_back();
                } else {
                    packed.emplace_back(col, v);
                }
            }
            while (!packed.empty()) {
                int lead = packed.back().first;
                auto pit = pivots.find(lead);
                if (pit == pivots.end()) {
                    Rational inv = Rational(1) / packed.back().second;
                    for (auto& [col, v] : packed) v *= inv;
                    pivots.emplace(lead, std::move(packed));
                    ++rank;
                    break;
                }
                packed = subtract_scaled(packed, packed.back().second, pit->second);
            }
        });
    }
    return survivors - rank;
}

}  // namespace

LocalLengthResult local_length(const ChartIdeal& ideal, int degree_cap) {
    ideal.validate();
    int vars = ideal.num_vars();

    // Move the base point to the origin.
    std::vector<MultiPoly> shift;
    for (int i = 0; i < vars; ++i)
        shift.push_back(MultiPoly::variable(vars, i) +
                        MultiPoly::constant(vars, ideal.base_point[static_cast<std::size_t>(i)]));
    std::vector<MultiPoly> gens;
    int degree_sum = 0;
    for (const auto& g : ideal.gens) {
        MultiPoly t = g.substitute_all(shift);
        if (t.is_zero()) continue;
        degree_sum += t.degree();
        gens.push_back(std::move(t));
    }
    int cap = degree_cap >= 0 ? degree_cap : 2 + degree_sum;

    // Implicit-function elimination: a generator with a bare linear term
    // c*x_v defines x_v as a series in the other variables; substituting it
    // is a local isomorphism, so every truncated dimension is preserved.
    bool changed = true;
    while (changed && vars > 0) {
        changed = false;
        std::size_t best_gen = gens.size();
        int best_var = -1;
        std::size_t best_terms = 0;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            for (const auto& [e, c] : gens[gi].terms()) {
                if (total_degree(e) != 1) continue;
                int v = 0;
                while (e[static_cast<std::size_t>(v)] == 0) ++v;
                if (best_gen == gens.size() || gens[gi].term_count() < best_terms) {
                    best_gen = gi;
                    best_var = v;
                    best_terms = gens[gi].term_count();
                }
                break;
            }
        }
        if (best_gen == gens.size()) break;

        const MultiPoly g = gens[static_cast<std::size_t>(best_gen)];
        Exponents unit(static_cast<std::size_t>(vars), 0);
        unit[static_cast<std::size_t>(best_var)] = 1;
        Rational c = g.coeff(unit);
        MultiPoly rest = g - MultiPoly::monomial(unit, c);
        Rational scale = Rational(-1) / c;
        MultiPoly phi(vars);  // x_v as a truncated series in the others
        for (int iter = 0; iter <= cap + 1; ++iter) {
            MultiPoly next = (rest.substitute(best_var, phi) * scale).truncate_total_degree(cap);
            if (next == phi) break;
            phi = next;
        }
        if (!(g.substitute(best_var, phi).truncate_total_degree(cap).is_zero()))
            throw std::logic_error("implicit-function substitution did not close");

        std::vector<MultiPoly> next_gens;
        std::vector<bool> keep(static_cast<std::size_t>(vars), true);
        keep[static_cast<std::size_t>(best_var)] = false;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            if (gi == best_gen) continue;
            MultiPoly t = gens[gi]
                              .substitute(best_var, phi)
                              .truncate_total_degree(cap)
                              .restrict_variables(keep);
            if (!t.is_zero()) next_gens.push_back(std::move(t));
        }
        gens = std::move(next_gens);
        --vars;
        changed = true;
    }

    LocalLengthResult out;
    out.cap = cap;
    if (vars == 0) {
        out.stabilized = true;
        out.length = 1;
        out.stabilized_at = 1;
        out.dims = {1, 1};
        return out;
    }
    for (int d = 1; d <= cap; ++d) {
        long dim = macaulay_dim(gens, vars, d);
        if (!out.dims.empty() && dim < out.dims.back())
            throw std::logic_error("truncated local dimensions must be non-decreasing");
        if (!out.dims.empty() && dim == out.dims.back()) {
            out.dims.push_back(dim);
            out.stabilized = true;
            out.length = dim;
            out.stabilized_at = d - 1;
            return out;
        }
        out.dims.push_back(dim);
    }
    out.stabilized = false;
    return out;
}

}  // namespace effjet
