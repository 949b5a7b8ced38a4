#include "effjet/incidence.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "effjet/gf.hpp"

namespace effjet {

namespace {

const char* kLayoutNote = "coordinate layout n=(k+1)c; section l of factor m uses z_{lc+m}";

std::vector<std::string> chart_names(int coords) {
    std::vector<std::string> names;
    for (int i = 1; i <= coords; ++i) names.push_back("z" + std::to_string(i));
    names.push_back("t");
    return names;
}

}  // namespace

ChartIdeal build_single_instance(int N, int delta) {
    if (N < 2) throw std::invalid_argument("single instance needs N >= 2");
    if (delta < 1) throw std::invalid_argument("single instance needs delta >= 1");
    int vars = N + 1;  // z_1..z_N, t
    ChartIdeal ideal;
    ideal.var_names = chart_names(N);
    for (int i = 0; i < N - 1; ++i)
        ideal.gens.push_back(MultiPoly::variable(vars, i).pow(static_cast<unsigned>(delta)));
    ideal.gens.push_back(MultiPoly::variable(vars, N - 1).pow(static_cast<unsigned>(delta)) +
                         MultiPoly::variable(vars, N));
    ideal.gens.push_back(MultiPoly::constant(vars, Rational(1)) + MultiPoly::variable(vars, N - 1));
    ideal.base_point.assign(static_cast<std::size_t>(vars), Rational(0));
    ideal.base_point[static_cast<std::size_t>(N - 1)] = Rational(-1);
    ideal.base_point[static_cast<std::size_t>(N)] = (delta % 2 == 0) ? Rational(-1) : Rational(1);
    ideal.validate();
    return ideal;
}

ChartIdeal build_product_instance(int c, int k, const std::vector<int>& deltas, int i) {
    if (c < 1) throw std::invalid_argument("product instance needs c >= 1");
    if (k < 0) throw std::invalid_argument("product instance needs k >= 0");
    if (static_cast<int>(deltas.size()) != c)
        throw std::invalid_argument("product instance needs c degrees");
    if (i < 1 || i > c) throw std::invalid_argument("moving index out of range");
    for (int d : deltas)
        if (d < 1) throw std::invalid_argument("degrees must be >= 1");
    int n = (k + 1) * c;
    int vars = n + 1;  // z_1..z_n, t
    int delta_i = deltas[static_cast<std::size_t>(i - 1)];
    ChartIdeal ideal;
    ideal.var_names = chart_names(n);
    for (int m = 1; m <= c; ++m) {
        unsigned dm = static_cast<unsigned>(deltas[static_cast<std::size_t>(m - 1)]);
        for (int l = 0; l <= k; ++l) {
            int coord = l * c + m;  // 1-based
            if (m == i && l == 0) {
                ideal.gens.push_back(MultiPoly::variable(vars, coord - 1).pow(dm) +
                                     MultiPoly::variable(vars, n));
            } else {
                ideal.gens.push_back(MultiPoly::variable(vars, coord - 1).pow(dm));
            }
        }
    }
    ideal.gens.push_back(MultiPoly::constant(vars, Rational(1)) + MultiPoly::variable(vars, i - 1));
    ideal.base_point.assign(static_cast<std::size_t>(vars), Rational(0));
    ideal.base_point[static_cast<std::size_t>(i - 1)] = Rational(-1);
    ideal.base_point[static_cast<std::size_t>(n)] = (delta_i % 2 == 0) ? Rational(-1) : Rational(1);
    ideal.validate();
    return ideal;
}

namespace {

MultReport run_mult(const ChartIdeal& ideal, const BigInt& expected, std::string instance,
                    std::string note, int cap) {
    MultReport rep;
    rep.instance = std::move(instance);
    rep.layout_note = std::move(note);
    rep.ideal = ideal;
    rep.expected = expected;
    rep.detail = local_length(ideal, cap);
    if (!rep.detail.stabilized) {
        rep.cap_exceeded = true;
        rep.pass = false;
        return rep;
    }
    rep.computed = rep.detail.length;
    rep.pass = (BigInt(rep.computed) == expected);
    return rep;
}

}  // namespace

MultReport verify_single_mult(int N, int delta, int degree_cap) {
    std::ostringstream name;
    name << "single N=" << N << " delta=" << delta;
    BigInt expected = bigint_pow(BigInt(delta), static_cast<unsigned long>(N - 1));
    return run_mult(build_single_instance(N, delta), expected, name.str(), "", degree_cap);
}

MultReport verify_product_mult(int c, int k, const std::vector<int>& deltas, int i,
                               int degree_cap) {
    std::ostringstream name;
    name << "product c=" << c << " k=" << k << " deltas=(";
    for (std::size_t j = 0; j < deltas.size(); ++j)
        name << (j ? "," : "") << deltas[j];
    name << ") i=" << i;
    std::vector<BigInt> big;
    for (int d : deltas) big.emplace_back(d);
    BigInt expected = b_coeffs(big, k)[static_cast<std::size_t>(i - 1)];
    return run_mult(build_product_instance(c, k, deltas, i), expected, name.str(), kLayoutNote,
                    degree_cap);
}

// ---------------------------------------------------------------------------
// Pluecker degrees
// ---------------------------------------------------------------------------

namespace {

// Column index of z_j^delta in the descending-lex degree-delta basis.
int column_of_power(const std::vector<Exponents>& basis, int var, int delta) {
    Exponents want(basis.front().size(), 0);
    want[static_cast<std::size_t>(var)] = static_cast<unsigned>(delta);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == want) return static_cast<int>(i);
    throw std::logic_error("power monomial missing from basis");
}

MultiPoly t_poly(int which) { return MultiPoly::variable(2, which); }

}  // namespace

ParamMatrix plucker_matrix_single(int N, int delta) {
    if (N < 2 || delta < 1) throw std::invalid_argument("bad single curve parameters");
    auto basis = monomials_of_degree(N + 1, delta);
    std::size_t cols = basis.size();
    ParamMatrix m(static_cast<std::size_t>(N),
                  std::vector<MultiPoly>(cols, MultiPoly(2)));
    for (int j = 1; j <= N - 1; ++j)
        m[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(column_of_power(basis, j, delta))] =
            MultiPoly::constant(2, Rational(1));
    m[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(column_of_power(basis, N, delta))] =
        t_poly(0);
    m[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(column_of_power(basis, 0, delta))] =
        t_poly(1);
    return m;
}

ParamMatrix plucker_matrix_product(const GrassCurveSpec& spec, int factor) {
    if (spec.c < 1 || spec.k < 0 || static_cast<int>(spec.deltas.size()) != spec.c)
        throw std::invalid_argument("bad product curve parameters");
    if (factor < 1 || factor > spec.c || spec.moving < 1 || spec.moving > spec.c)
        throw std::invalid_argument("factor index out of range");
    int n = (spec.k + 1) * spec.c;
    int dm = spec.deltas[static_cast<std::size_t>(factor - 1)];
    auto basis = monomials_of_degree(n + 1, dm);
    std::size_t cols = basis.size();
    ParamMatrix m(static_cast<std::size_t>(spec.k + 1),
                  std::vector<MultiPoly>(cols, MultiPoly(2)));
    for (int l = 0; l <= spec.k; ++l) {
        int coord = l * spec.c + factor;  // z_coord, 1-based; z_0 is index 0
        if (factor == spec.moving && l == 0) {
            m[static_cast<std::size_t>(l)][static_cast<std::size_t>(column_of_power(basis, coord, dm))] =
                t_poly(0);
            m[static_cast<std::size_t>(l)][static_cast<std::size_t>(column_of_power(basis, 0, dm))] =
                t_poly(1);
        } else {
            m[static_cast<std::size_t>(l)][static_cast<std::size_t>(column_of_power(basis, coord, dm))] =
                MultiPoly::constant(2, Rational(1));
        }
    }
    return m;
}

namespace {

MultiPoly det_recursive(const ParamMatrix& m, const std::vector<int>& cols, std::size_t row,
                        std::vector<bool>& used) {
    if (row == m.size()) return MultiPoly::constant(2, Rational(1));
    MultiPoly acc(2);
    int sign = 1;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        if (used[ci]) continue;
        used[ci] = true;
        MultiPoly sub = det_recursive(m, cols, row + 1, used);
        used[ci] = false;
        const MultiPoly& entry = m[row][static_cast<std::size_t>(cols[ci])];
        if (!entry.is_zero() && !sub.is_zero()) {
            MultiPoly contrib = entry * sub;
            acc = (sign > 0) ? acc + contrib : acc - contrib;
        }
        sign = -sign;
    }
    return acc;
}

// Dense univariate polynomials over Q, low-degree first.
using UniPoly = std::vector<Rational>;

int uni_deg(const UniPoly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (sgn(p[i]) != 0) return static_cast<int>(i);
    return -1;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    int db = uni_deg(b);
    for (int da = uni_deg(a); da >= db; da = uni_deg(a)) {
        Rational f = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
    }
    return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (uni_deg(b) >= 0) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = uni_deg(a);
    if (d >= 0) {
        Rational inv = Rational(1) / a[static_cast<std::size_t>(d)];
        for (auto& c : a) c *= inv;
    }
    return a;
}

}  // namespace

long plucker_degree_matrix(const ParamMatrix& m) {
    std::size_t rows = m.size();
    std::vector<int> support;
    for (std::size_t c = 0; c < m[0].size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                support.push_back(static_cast<int>(c));
                break;
            }
    std::vector<MultiPoly> minors;
    if (support.size() >= rows && rows > 0) {
        std::vector<int> pick(rows);
        std::vector<bool> used(rows, false);
        // Enumerate row-count-sized subsets of the support columns.
        std::vector<std::size_t> idx(rows);
        for (std::size_t i = 0; i < rows; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            for (std::size_t i = 0; i < rows; ++i) pick[i] = support[idx[i]];
            MultiPoly d = det_recursive(m, pick, 0, used);
            if (!d.is_zero()) minors.push_back(std::move(d));
            more = false;
            for (std::size_t i = rows; i-- > 0;) {
                if (idx[i] != support.size() - rows + i) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < rows; ++j) idx[j] = idx[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
    if (minors.empty())
        throw std::invalid_argument("rank-deficient parametrized matrix: all maximal minors vanish");
    std::optional<int> degree;
    for (const auto& mi : minors) {
        auto h = mi.homogeneous_degree();
        if (!h) throw std::invalid_argument("parametrized matrix yields an inhomogeneous minor");
        if (degree && *degree != *h)
            throw std::invalid_argument("parametrized matrix minors have mixed degrees");
        degree = *h;
    }
    int D = *degree;
    // Write each minor as sum c_j t0^j t1^(D-j) and dehomogenize at t1 = 1.
    UniPoly g;
    int tail = D + 1;
    for (const auto& mi : minors) {
        UniPoly p(static_cast<std::size_t>(D) + 1, Rational(0));
        for (const auto& [e, c] : mi.terms()) p[e[0]] = c;
        tail = std::min(tail, D - uni_deg(p));
        g = g.empty() ? p : uni_gcd(g, p);
    }
    return D - uni_deg(g) - tail;
}

std::vector<long> plucker_degrees(const GrassCurveSpec& spec) {
    if (spec.mode == GrassCurveSpec::Mode::Single)
        return {plucker_degree_matrix(plucker_matrix_single(spec.N, spec.delta))};
    if (spec.c < 1 || spec.k < 0) throw std::invalid_argument("bad product curve parameters");
    if (static_cast<int>(spec.deltas.size()) != spec.c)
        throw std::invalid_argument("product curve needs c degrees");
    if (spec.moving < 1 || spec.moving > spec.c)
        throw std::invalid_argument("moving index out of range");
    std::vector<long> out;
    for (int factor = 1; factor <= spec.c; ++factor)
        out.push_back(plucker_degree_matrix(plucker_matrix_product(spec, factor)));
    return out;
}

// ---------------------------------------------------------------------------
// Fiber finiteness
// ---------------------------------------------------------------------------

void GrassPointFq::canonicalize() {
    if (!is_prime(p)) throw std::invalid_argument("grassmannian point needs a prime modulus");
    if (N < 1 || delta < 1) throw std::invalid_argument("bad grassmannian point parameters");
    std::size_t dim = monomials_of_degree(N + 1, delta).size();
    if (rows.empty()) throw std::invalid_argument("grassmannian point needs at least one row");
    for (auto& row : rows) {
        if (row.size() != dim)
            throw std::invalid_argument("row length must match dim of the degree-delta forms");
        for (auto& v : row) v = mod_pos(v, p);
    }
    int rank = rref_mod_p(rows, p);
    if (rank != static_cast<int>(rows.size()))
        throw std::invalid_argument("rows are linearly dependent: not a Grassmannian point");
}

namespace {

// Counts fiber points in P_J over F_p or F_{p^2}; `free_idx` lists the
// coordinates allowed to be nonzero. Points are enumerated chart by chart
// (first nonzero coordinate normalized to 1); charts are independent, so
// they can run on separate workers and the merged sum is canonical.
// `make_vanish` builds a fresh evaluator (with its own buffers) per chart.
template <typename VanishFactory>
long count_points(const std::vector<int>& free_idx, long field_size, int workers,
                  VanishFactory&& make_vanish) {
    std::vector<long> per_chart(free_idx.size(), 0);
    auto run_chart = [&](std::size_t pivot) {
        auto vanish_at = make_vanish();
        std::size_t tail = free_idx.size() - pivot - 1;
        std::vector<long> digits(tail, 0);
        long total = 0;
        while (true) {
            if (vanish_at(pivot, digits)) ++total;
            std::size_t i = 0;
            while (i < tail) {
                if (++digits[i] < field_size) break;
                digits[i] = 0;
                ++i;
            }
            if (i == tail) break;
        }
        per_chart[pivot] = total;
    };
    if (workers <= 1 || free_idx.size() <= 1) {
        for (std::size_t pivot = 0; pivot < free_idx.size(); ++pivot) run_chart(pivot);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        int count = std::min<int>(workers, static_cast<int>(free_idx.size()));
        for (int w = 0; w < count; ++w)
            pool.emplace_back([&]() {
                for (std::size_t pivot = next.fetch_add(1); pivot < free_idx.size();
                     pivot = next.fetch_add(1))
                    run_chart(pivot);
            });
        for (auto& th : pool) th.join();
    }
    long total = 0;
    for (long v : per_chart) total += v;
    return total;
}

}  // namespace

FiberReport fiber_finite(const GrassPointFq& input, const std::vector<int>& J, long budget,
                         int workers) {
    GrassPointFq pt = input;
    pt.canonicalize();
    std::vector<bool> zeroed(static_cast<std::size_t>(pt.N) + 1, false);
    for (int j : J) {
        if (j < 0 || j > pt.N) throw std::invalid_argument("J index out of range");
        zeroed[static_cast<std::size_t>(j)] = true;
    }
    std::vector<int> free_idx;
    for (int i = 0; i <= pt.N; ++i)
        if (!zeroed[static_cast<std::size_t>(i)]) free_idx.push_back(i);

    FiberReport rep;
    if (free_idx.empty()) {
        rep.kind = FiberReport::Kind::Finite;
        rep.count = 0;
        rep.note = "empty ambient stratum";
        return rep;
    }

    if (pt.delta == 1) {
        // Fiber is a projective linear subspace; rank decides exactly.
        std::vector<std::vector<long>> rows = pt.rows;
        for (int j : J) {
            std::vector<long> unit(rows[0].size(), 0);
            unit[static_cast<std::size_t>(j)] = 1;
            rows.push_back(std::move(unit));
        }
        int rank = rank_mod_p(rows, pt.p);
        int cone_dim = pt.N + 1 - rank;
        if (cone_dim <= 0) {
            rep.kind = FiberReport::Kind::Finite;
            rep.count = 0;
        } else if (cone_dim == 1) {
            rep.kind = FiberReport::Kind::Finite;
            rep.count = 1;
        } else {
            rep.kind = FiberReport::Kind::PositiveDim;
        }
        rep.note = "exact linear rank";
        return rep;
    }

    auto basis = monomials_of_degree(pt.N + 1, pt.delta);
    int f = static_cast<int>(free_idx.size());
    // Projective point counts (q^f - 1)/(q - 1) for both fields.
    auto proj_count = [&](long q) {
        long total = 0, power = 1;
        for (int i = 0; i < f; ++i) {
            total += power;
            if (total > budget) return budget + 1;
            if (i + 1 < f) {
                if (power > budget / q + 1) return budget + 1;
                power *= q;
            }
        }
        return total;
    };
    if (proj_count(pt.p) > budget || proj_count(pt.p * pt.p) > budget)
        throw std::invalid_argument("enumeration budget exceeded");

    // F_p count.
    auto make_vanish_p = [&]() {
        return [&pt, &free_idx, &basis,
                point = std::vector<long>(static_cast<std::size_t>(pt.N) + 1, 0)](
                   std::size_t pivot, const std::vector<long>& digits) mutable {
            std::fill(point.begin(), point.end(), 0);
            point[static_cast<std::size_t>(free_idx[pivot])] = 1;
            for (std::size_t i = 0; i < digits.size(); ++i)
                point[static_cast<std::size_t>(free_idx[pivot + 1 + i])] = digits[i];
            for (const auto& row : pt.rows) {
                long acc = 0;
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (row[c] == 0) continue;
                    long term = row[c];
                    for (int v = 0; v <= pt.N; ++v) {
                        unsigned e = basis[c][static_cast<std::size_t>(v)];
                        if (e) term = (term * pow_mod(point[static_cast<std::size_t>(v)], e, pt.p)) % pt.p;
                    }
                    acc = (acc + term) % pt.p;
                }
                if (acc != 0) return false;
            }
            return true;
        };
    };
    rep.count_q = count_points(free_idx, pt.p, workers, make_vanish_p);

    // F_{p^2} count.
    QuadExt ext(pt.p);
    auto make_vanish_q = [&]() {
        return [&pt, &free_idx, &basis, &ext,
                point = std::vector<Fp2>(static_cast<std::size_t>(pt.N) + 1)](
                   std::size_t pivot, const std::vector<long>& digits) mutable {
            for (auto& v : point) v = ext.from_base(0);
            point[static_cast<std::size_t>(free_idx[pivot])] = ext.from_base(1);
            for (std::size_t i = 0; i < digits.size(); ++i)
                point[static_cast<std::size_t>(free_idx[pivot + 1 + i])] = ext.element(digits[i]);
            for (const auto& row : pt.rows) {
                Fp2 acc = ext.from_base(0);
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (row[c] == 0) continue;
                    Fp2 term = ext.from_base(row[c]);
                    for (int v = 0; v <= pt.N; ++v) {
                        unsigned e = basis[c][static_cast<std::size_t>(v)];
                        if (e) term = ext.mul(term, ext.pow(point[static_cast<std::size_t>(v)], e));
                    }
                    acc = ext.add(acc, term);
                }
                if (!ext.is_zero(acc)) return false;
            }
            return true;
        };
    };
    rep.count_q2 = count_points(free_idx, ext.size(), workers, make_vanish_q);

    rep.heuristic = true;
    if (rep.count_q2 == rep.count_q) {
        rep.kind = FiberReport::Kind::Finite;
        rep.count = rep.count_q;
        rep.note = "counts agree across F_q and F_{q^2}";
    } else if (rep.count_q2 >= pt.p &&
               2 * rep.count_q2 >= pt.p * std::max(rep.count_q, 1L)) {
        rep.kind = FiberReport::Kind::PositiveDim;
        rep.note = "count grows by about a factor q";
    } else {
        rep.kind = FiberReport::Kind::Unknown;
        rep.note = "counts neither stable nor growing by q";
    }
    return rep;
}

}  // namespace effjet
