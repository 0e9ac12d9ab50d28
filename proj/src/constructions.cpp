#include "hullforge/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace hullforge {

namespace {

uint64_t gcd_u64(uint64_t a, uint64_t b) { return b == 0 ? a : gcd_u64(b, a % b); }

// Smallest positive m' with q^m' = 1 mod n.
uint64_t mult_order_mod(uint64_t q, uint64_t n) {
    uint64_t x = q % n, ord = 1;
    while (x != 1) {
        x = x * (q % n) % n;
        ++ord;
    }
    return ord;
}

// GF(p)-linear embedding of a small field into its splitting extension,
// determined by a root of the subfield's modulus.
struct Embedding {
    const Field* from;
    const Field* to;
    std::vector<uint32_t> basis_image;  // image of x^j, j < m

    uint32_t map(uint32_t a) const {
        uint32_t r = 0, t = a;
        for (int j = 0; j < from->m(); ++j) {
            uint32_t digit = t % from->p();
            t /= from->p();
            uint32_t term = 0;
            for (uint32_t i = 0; i < digit; ++i) term = to->add(term, basis_image[j]);
            r = to->add(r, term);
        }
        return r;
    }

    // Inverse on the image: solve for base-p digits. nullopt off the image.
    std::optional<uint32_t> preimage(uint32_t e) const {
        const Field& fp = Field::get(from->p(), 1);
        GFMatrix sys(fp, static_cast<size_t>(to->m()), static_cast<size_t>(from->m()));
        for (int j = 0; j < from->m(); ++j) {
            uint32_t img = basis_image[j];
            for (int i = 0; i < to->m(); ++i) {
                sys.set(i, j, img % to->p());
                img /= to->p();
            }
        }
        std::vector<uint32_t> rhs(static_cast<size_t>(to->m()));
        for (int i = 0; i < to->m(); ++i) {
            rhs[i] = e % to->p();
            e /= to->p();
        }
        auto sol = solve_left(sys.transpose(), rhs);
        if (!sol) return std::nullopt;
        uint32_t a = 0;
        for (int j = from->m() - 1; j >= 0; --j) a = a * from->p() + (*sol)[j];
        if (map(a) != ([&] { uint32_t v = 0; for (int i = to->m() - 1; i >= 0; --i) v = v * to->p() + rhs[i]; return v; }()))
            return std::nullopt;
        return a;
    }
};

Embedding embed(const Field& from, const Field& to) {
    // root of `from`'s modulus inside `to`, smallest rep
    for (uint32_t r = 0; r < to.q(); ++r) {
        // evaluate modulus at r with prime-field coefficients lifted to `to`
        uint32_t val = 0;
        for (int i = from.m(); i >= 0; --i) {
            val = to.mul(val, r);
            uint32_t c = static_cast<uint32_t>(from.modulus()[i]);
            for (uint32_t t = 0; t < c; ++t) val = to.add(val, 1);
        }
        if (val == 0) {
            Embedding e{&from, &to, {}};
            uint32_t power = 1;
            for (int j = 0; j < from.m(); ++j) {
                e.basis_image.push_back(power);
                power = to.mul(power, r);
            }
            return e;
        }
    }
    throw TheoremCaseViolation("no root of subfield modulus in splitting field");
}

}  // namespace

std::set<uint64_t> cyclotomic_coset(uint64_t q, uint64_t n, uint64_t i) {
    if (gcd_u64(n, q) != 1) throw NotCoprime("gcd(n, q) must be 1");
    std::set<uint64_t> coset;
    uint64_t x = i % n;
    while (coset.insert(x).second) x = x * (q % n) % n;
    return coset;
}

Poly minimal_poly(const Field& f, uint64_t n, uint64_t i) {
    if (gcd_u64(n, f.q()) != 1) throw NotCoprime("gcd(n, q) must be 1");
    uint64_t mprime = mult_order_mod(f.q(), n);
    const Field& ext = Field::get(f.p(), static_cast<int>(f.m() * mprime));
    Embedding phi = embed(f, ext);

    uint32_t beta = ext.pow(ext.generator(), (ext.q() - 1) / n);
    Poly prod = Poly::constant(ext, 1);
    for (uint64_t j : cyclotomic_coset(f.q(), n, i)) {
        uint32_t root = ext.pow(beta, j);
        prod = prod * Poly(ext, {ext.neg(root), 1});
    }
    // pull coefficients back into GF(q)
    std::vector<uint32_t> coeffs;
    for (int d = 0; d <= prod.degree(); ++d) {
        auto pre = phi.preimage(prod.coeff(d));
        if (!pre) throw TheoremCaseViolation("minimal polynomial coefficient outside GF(q)");
        coeffs.push_back(*pre);
    }
    return Poly(f, std::move(coeffs));
}

Poly bch_generator(const Field& f, uint64_t n, uint64_t delta, uint64_t b) {
    if (delta < 2) throw PreconditionFailed("designed distance must be >= 2");
    if (gcd_u64(n, f.q()) != 1) throw NotCoprime("gcd(n, q) must be 1");
    std::set<uint64_t> covered;
    Poly g = Poly::constant(f, 1);
    for (uint64_t e = b; e + 2 <= b + delta; ++e) {
        uint64_t rep = e % n;
        if (covered.count(rep)) continue;
        auto coset = cyclotomic_coset(f.q(), n, rep);
        covered.insert(coset.begin(), coset.end());
        g = g * minimal_poly(f, n, rep);
    }
    return g.monic();
}

LinearCode constacyclic_code(const Poly& g, uint32_t lambda, size_t n) {
    const Field& f = g.field();
    if (lambda == 0) throw PreconditionFailed("lambda must be nonzero");
    if (g.is_zero() || g.degree() > static_cast<int>(n)) throw NonDivisor("generator degree exceeds n");
    if (!g.divides(Poly::x_pow_minus(f, n, lambda))) throw NonDivisor("g does not divide x^n - lambda");
    size_t k = n - static_cast<size_t>(g.degree());
    if (k == 0) return LinearCode::zero_code(f, n);
    GFMatrix rows(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (int j = 0; j <= g.degree(); ++j) rows.set(i, i + j, g.coeff(j));
    return LinearCode::from_generator(rows);
}

Poly constacyclic_dual_generator(const Poly& g, uint32_t lambda, size_t n) {
    const Field& f = g.field();
    if (lambda == 0) throw PreconditionFailed("lambda must be nonzero");
    Poly xn = Poly::x_pow_minus(f, n, lambda);
    auto [h, rem] = xn.divmod(g);
    if (!rem.is_zero()) throw NonDivisor("g does not divide x^n - lambda");
    // x^k·h(1/x)/h(0): reversed coefficients, normalized by the constant term
    int k = h.degree();
    uint32_t h0_inv = f.inv(h.coeff(0));
    std::vector<uint32_t> coeffs(k + 1);
    for (int i = 0; i <= k; ++i) coeffs[i] = f.mul(h.coeff(k - i), h0_inv);
    return Poly(f, std::move(coeffs));
}

ConstacyclicTransform negate_variable(const Poly& g, size_t n) {
    const Field& f = g.field();
    if (f.p() == 2) throw OddCharacteristicRequired("x -> -x is trivial in characteristic 2");
    uint32_t minus_one = f.neg(1);
    Poly g2 = g.substitute_scaled(minus_one).monic();
    uint32_t lambda = (n % 2 == 1) ? minus_one : 1;
    std::vector<uint32_t> v(n);
    uint32_t power = 1;
    for (size_t i = 0; i < n; ++i) {
        v[i] = power;
        power = f.mul(power, minus_one);
    }
    return {constacyclic_code(g2, lambda, n), g2, lambda, std::move(v)};
}

ConstacyclicTransform eta_transform(const Poly& g, size_t n, uint32_t eta, uint32_t lambda_in) {
    const Field& f = g.field();
    if (eta == 0) throw NotRootOfUnity("eta must be nonzero");
    uint32_t en = f.pow(eta, n);
    if (en != 1 && en != f.neg(1)) throw NotRootOfUnity("eta^n must be 1 or -1");
    // g | x^n - lambda_in implies g(eta x) | x^n - lambda_in*eta^{-n}, and
    // eta^{-n} = eta^n because eta^n = +-1
    uint32_t lambda_out = f.mul(lambda_in, en);
    Poly g2 = g.substitute_scaled(eta).monic();
    std::vector<uint32_t> v(n);
    uint32_t power = 1;
    for (size_t i = 0; i < n; ++i) {
        v[i] = power;
        power = f.mul(power, eta);
    }
    return {constacyclic_code(g2, lambda_out, n), g2, lambda_out, std::move(v)};
}

ScaledCodeWitness selfdual_to_hull(const LinearCode& c, size_t h, Kind kind) {
    const Field& f = c.field();
    size_t k = c.k();
    if (c.n() != 2 * k) throw PreconditionFailed("self-dual codes have n = 2k");
    if (h >= k) throw PreconditionFailed("h must satisfy 0 <= h < n/2; h = n/2 is the identity");
    if (kind == Kind::euclidean) {
        if (!c.predicate(Predicate::self_dual)) throw PreconditionFailed("input is not self-dual");
    } else {
        if (!c.predicate(Predicate::hermitian_self_dual))
            throw PreconditionFailed("input is not Hermitian self-dual");
    }
    // smallest-rep lambda with lambda^2 != 1 (Euclidean) or lambda^{q0+1} != 1
    uint32_t lambda = 0;
    for (uint32_t t = 1; t < f.q(); ++t) {
        uint32_t norm = kind == Kind::euclidean ? f.mul(t, t) : f.pow(t, f.q0() + 1);
        if (norm != 1) {
            lambda = t;
            break;
        }
    }
    if (lambda == 0) throw NoValidLambda("no scaling element with non-unit square/norm in this field");

    StandardForm sf = c.standard_form();
    LinearCode permuted = LinearCode::from_generator(c.generator().permute_cols(sf.perm));
    std::vector<uint32_t> v(c.n(), 1);
    for (size_t i = 0; i < k - h; ++i) v[i] = lambda;
    LinearCode out = permuted.scale(v);
    if (out.hull_dim(kind) != h) throw TheoremCaseViolation("transformed hull dimension differs from h");
    return {std::move(out), std::move(v), std::move(sf.perm), lambda};
}

namespace {

bool has_zero_column(const GFMatrix& g) {
    for (size_t j = 0; j < g.cols(); ++j) {
        bool all_zero = true;
        for (size_t i = 0; i < g.rows(); ++i)
            if (g.at(i, j) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return true;
    }
    return false;
}

// Row-reduce `g` so exactly one row is nonzero at `pos` (returned first),
// the rest zero there.
std::pair<std::vector<uint32_t>, GFMatrix> split_at_position(const GFMatrix& g, size_t pos, bool normalize) {
    const Field& f = g.field();
    std::vector<std::vector<uint32_t>> rows(g.rows());
    for (size_t i = 0; i < g.rows(); ++i) rows[i] = g.row(i);
    size_t r0 = g.rows();
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i][pos] != 0) {
            r0 = i;
            break;
        }
    if (r0 == g.rows()) throw PreconditionFailed("no generator row is nonzero at the position");
    if (normalize) {
        uint32_t inv = f.inv(rows[r0][pos]);
        for (uint32_t& x : rows[r0]) x = f.mul(x, inv);
    }
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i == r0 || rows[i][pos] == 0) continue;
        uint32_t factor = f.div(rows[i][pos], rows[r0][pos]);
        for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r0][j]));
    }
    GFMatrix rest(f, g.rows() - 1, g.cols());
    size_t out = 0;
    for (size_t i = 0; i < rows.size(); ++i)
        if (i != r0) rest.set_row(out++, rows[i]);
    return {rows[r0], rest};
}

}  // namespace

LambdaDisturbResult lambda_disturb(const LinearCode& c, size_t position) {
    const Field& f = c.field();
    size_t n = c.n();
    if (position >= n) throw IndexOutOfRange("position out of range");
    if (f.p() != 2 || f.q() < 4) throw EvenCharacteristicRequired("requires GF(2^s), s >= 2");
    if (!c.predicate(Predicate::lcd)) throw PreconditionFailed("input is not LCD");
    LinearCode dual = c.dual();
    // d >= 2 and d⊥ >= 2, the cheap way: no zero column on either side
    if (has_zero_column(dual.generator())) throw PreconditionFailed("d < 2 (zero parity-check column)");
    if (has_zero_column(c.generator())) throw PreconditionFailed("dual distance < 2 (zero generator column)");
    if (!c.shorten(position).predicate(Predicate::lcd))
        throw PreconditionFailed("shortening of C at the position is not LCD");
    if (!dual.shorten(position).predicate(Predicate::lcd))
        throw PreconditionFailed("shortening of the dual at the position is not LCD");

    auto [a_row, g1] = split_at_position(c.generator(), position, /*normalize=*/true);
    auto [b_row, g2] = split_at_position(dual.generator(), position, /*normalize=*/false);
    uint32_t cc = b_row[position];

    // e = w1·A + w2·B + (C2 part) + (C3 part) over the n spanning vectors
    GFMatrix sys(f, 2, n);
    sys.set_row(0, a_row);
    sys.set_row(1, b_row);
    GFMatrix m = sys.vstack(g1).vstack(g2);
    std::vector<uint32_t> e(n, 0);
    e[position] = 1;
    auto sol = solve_left(m, e);
    if (!sol) throw TheoremCaseViolation("unit vector not expressible in the spanning set");
    uint32_t w1 = (*sol)[0], w2 = (*sol)[1];
    if (f.add(w1, f.mul(w2, cc)) != 1)
        throw TheoremCaseViolation("decomposition identity w1 + w2·c = 1 failed");

    uint32_t lambda;
    DisturbCase which;
    if (w2 == 0) {
        which = DisturbCase::w2_zero;
        lambda = f.sub(w1, 1);
    } else if (w1 == 0) {
        which = DisturbCase::w1_zero;
        lambda = f.inv(f.sub(f.mul(w2, cc), 1));
    } else {
        which = DisturbCase::generic;
        uint32_t s = f.mul(w2, cc);
        lambda = *f.sqrt(f.div(s, f.sub(s, 1)));
    }
    if (lambda == 0) throw TheoremCaseViolation("degenerate lambda = 0");

    std::vector<uint32_t> v(n, 1);
    v[position] = lambda;
    LinearCode out = c.scale(v);
    if (out.hull_dim(Kind::euclidean) != 1) throw TheoremCaseViolation("disturbed hull dimension is not 1");
    return {std::move(out), lambda, position, which, w1, w2, cc};
}

LambdaDisturbResult lambda_disturb_search(const LinearCode& c) {
    LinearCode dual = c.dual();
    for (size_t pos = 0; pos < c.n(); ++pos) {
        if (!c.shorten(pos).predicate(Predicate::lcd)) continue;
        if (!dual.shorten(pos).predicate(Predicate::lcd)) continue;
        return lambda_disturb(c, pos);
    }
    throw PreconditionFailed("no coordinate position satisfies the shortening-LCD hypothesis");
}

LinearCode grs(const GrsSpec& spec) {
    const Field& f = *spec.field;
    size_t n = spec.points.size();
    if (spec.multipliers.size() != n) throw ShapeMismatch("points and multipliers differ in length");
    std::set<uint32_t> distinct(spec.points.begin(), spec.points.end());
    if (distinct.size() != n) throw DuplicatePoints();
    for (uint32_t v : spec.multipliers)
        if (v == 0) throw NotFullWeight("column multipliers must be nonzero");
    if (spec.k < 1 || spec.k > n) throw PreconditionFailed("dimension k out of range");
    GFMatrix rows(f, spec.k, n);
    for (size_t j = 0; j < n; ++j) {
        uint32_t power = 1;
        for (size_t i = 0; i < spec.k; ++i) {
            rows.set(i, j, f.mul(spec.multipliers[j], power));
            power = f.mul(power, spec.points[j]);
        }
    }
    return LinearCode::from_generator(rows);
}

LinearCode rs(const Field& f, const std::vector<uint32_t>& points, size_t k) {
    return grs({&f, points, std::vector<uint32_t>(points.size(), 1), k});
}

std::vector<uint32_t> rs_dual_vector(const Field& f, const std::vector<uint32_t>& points) {
    size_t n = points.size();
    if (n < 2) throw PreconditionFailed("need at least two points");
    std::set<uint32_t> distinct(points.begin(), points.end());
    if (distinct.size() != n) throw DuplicatePoints();
    GFMatrix vand(f, n - 1, n);
    for (size_t j = 0; j < n; ++j) {
        uint32_t power = 1;
        for (size_t i = 0; i + 1 < n; ++i) {
            vand.set(i, j, power);
            power = f.mul(power, points[j]);
        }
    }
    GFMatrix ker = kernel(vand);
    if (ker.rows() != 1) throw TheoremCaseViolation("Vandermonde kernel is not one-dimensional");
    std::vector<uint32_t> x = ker.row(0);
    uint32_t inv = f.inv(x[0]);
    for (uint32_t& xi : x) {
        if (xi == 0) throw TheoremCaseViolation("Vandermonde kernel vector has a zero coordinate");
        xi = f.mul(xi, inv);
    }
    return x;
}

HullCodeWitness grs_with_hull(const Field& f, const std::vector<uint32_t>& points, size_t k, size_t l) {
    size_t n = points.size();
    if (f.p() != 2) throw EvenCharacteristicRequired();
    for (uint32_t a : points)
        if (a == 0) throw NonzeroPointsRequired();
    if (k < 1 || k >= n) throw PreconditionFailed("need 1 <= k < n");
    if (l > std::min(k, n - k)) throw PreconditionFailed("l exceeds min(k, n-k)");
    std::vector<uint32_t> x = rs_dual_vector(f, points);
    std::vector<uint32_t> v(n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t u = f.pow(points[i], k - l);
        v[i] = *f.sqrt(f.div(x[i], u));
    }
    LinearCode code = grs({&f, points, v, k});
    if (code.hull_dim(Kind::euclidean) != l) throw TheoremCaseViolation("GRS hull dimension differs from l");
    return {std::move(code), std::move(v)};
}

namespace {

void check_subgroup(const Field& f, const std::vector<uint32_t>& subgroup) {
    std::set<uint32_t> s(subgroup.begin(), subgroup.end());
    if (s.size() != subgroup.size() || s.count(0)) throw NotASubgroup("elements must be distinct and nonzero");
    if (!s.count(1)) throw NotASubgroup("a subgroup contains 1");
    for (uint32_t a : s)
        for (uint32_t b : s)
            if (!s.count(f.mul(a, b))) throw NotASubgroup("set not closed under multiplication");
}

GFMatrix eval_matrix(const Field& f, const std::vector<Poly>& basis, const std::vector<uint32_t>& points) {
    GFMatrix rows(f, basis.size(), points.size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < points.size(); ++j) rows.set(i, j, basis[i].eval(points[j]));
    return rows;
}

}  // namespace

LinearCode trs(const TrsSpec& spec) {
    const Field& f = *spec.field;
    if (spec.eta == 0) throw PreconditionFailed("eta must be nonzero");
    check_subgroup(f, spec.subgroup);
    size_t n = spec.subgroup.size();
    if (spec.k < 1 || spec.k > n - 1) throw PreconditionFailed("need 1 <= k <= n-1");
    std::vector<Poly> basis;
    Poly g0 = Poly::constant(f, 1) + Poly::monomial(f, spec.k, spec.eta);
    basis.push_back(g0);
    for (size_t i = 1; i < spec.k; ++i) basis.push_back(Poly::monomial(f, i));
    return LinearCode::from_generator(eval_matrix(f, basis, spec.subgroup));
}

TrsDual trs_dual(const TrsSpec& spec) {
    const Field& f = *spec.field;
    if (spec.eta == 0) throw PreconditionFailed("eta must be nonzero");
    check_subgroup(f, spec.subgroup);
    size_t n = spec.subgroup.size();
    size_t dk = n - spec.k;
    std::vector<Poly> basis;
    for (size_t i = 0; i + 1 < dk; ++i) basis.push_back(Poly::monomial(f, i));
    basis.push_back(Poly::monomial(f, dk - 1) - Poly::monomial(f, n - 1, spec.eta));
    LinearCode companion = LinearCode::from_generator(eval_matrix(f, basis, spec.subgroup));
    return {std::move(companion), rs_dual_vector(f, spec.subgroup)};
}

HullCodeWitness trs_with_hull(const TrsSpec& spec, size_t l) {
    const Field& f = *spec.field;
    if (f.p() != 2) throw EvenCharacteristicRequired();
    size_t n = spec.subgroup.size();
    if ((f.q() - 1) % n != 0) throw PreconditionFailed("subgroup order must divide q-1");
    if (2 * spec.k > n) throw PreconditionFailed("need k <= n/2");
    if (l < 1 || l + 2 > spec.k) throw PreconditionFailed("need 1 <= l <= k-2");
    std::vector<uint32_t> x = rs_dual_vector(f, spec.subgroup);
    std::vector<uint32_t> v(n);
    for (size_t i = 0; i < n; ++i) {
        uint32_t u = f.pow(spec.subgroup[i], spec.k - l);
        v[i] = *f.sqrt(f.div(x[i], u));
    }
    LinearCode code = trs(spec).scale(v);
    if (code.hull_dim(Kind::euclidean) != l) throw TheoremCaseViolation("twisted-RS hull dimension differs from l");
    return {std::move(code), std::move(v)};
}

std::vector<uint32_t> multiplicative_subgroup(const Field& f, size_t n) {
    if (n == 0 || (f.q() - 1) % n != 0) throw NotASubgroup("order must divide q-1");
    uint32_t g = f.pow(f.generator(), (f.q() - 1) / n);
    std::vector<uint32_t> s;
    uint32_t x = 1;
    for (size_t i = 0; i < n; ++i) {
        s.push_back(x);
        x = f.mul(x, g);
    }
    return s;
}

}  // namespace hullforge
