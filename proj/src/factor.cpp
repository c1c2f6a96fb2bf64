#include "gaend/factor.hpp"

#include <algorithm>

namespace gaend {

namespace {

bool poly_less(const IntPoly& a, const IntPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    return false;
}

void sort_factors(Factorization& fs)
{
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

IntPoly divide_by_x_power(const IntPoly& f, std::size_t k)
{
    std::vector<Integer> c(f.coeffs().begin() + k, f.coeffs().end());
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- F_p

IntPoly pth_root(const IntPoly& f, const Integer& p)
{
    unsigned long pu = p.get_ui();
    std::vector<Integer> c;
    for (std::size_t i = 0; i < f.size(); i += pu) c.push_back(f.coeffs()[i]);
    return IntPoly(std::move(c));
}

IntPoly exact_div_mod(const IntPoly& a, const IntPoly& b, const Integer& p)
{
    IntPoly q, r;
    divrem_mod(a, b, p, q, r);
    return q;
}

// Squarefree factorization of a monic polynomial over F_p.
void squarefree_mod_p(const IntPoly& f, const Integer& p, int mult, Factorization& out)
{
    if (f.degree() < 1) return;
    IntPoly d = reduce_mod(f.derivative(), p);
    if (d.is_zero()) {
        squarefree_mod_p(pth_root(f, p), p, mult * static_cast<int>(p.get_ui()), out);
        return;
    }
    IntPoly c = gcd_mod_p(f, d, p);
    IntPoly w = exact_div_mod(f, c, p);
    int i = 1;
    while (w.degree() > 0) {
        IntPoly y = gcd_mod_p(w, c, p);
        IntPoly z = exact_div_mod(w, y, p);
        if (z.degree() > 0) out.emplace_back(z, i * mult);
        ++i;
        w = y;
        c = exact_div_mod(c, y, p);
    }
    if (c.degree() > 0) squarefree_mod_p(pth_root(c, p), p, mult * static_cast<int>(p.get_ui()), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<IntPoly, int>> distinct_degree(IntPoly f, const Integer& p)
{
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly x = IntPoly::x();
    IntPoly h = rem_mod(x, f, p);
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, p, f, p);
        IntPoly g = gcd_mod_p(sub_mod(h, x, p), f, p);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = exact_div_mod(f, g, p);
            h = rem_mod(h, f, p);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<int>(f.degree()));
    return out;
}

void equal_degree(const IntPoly& g, int d, const Integer& p, gmp_randclass& rng, std::vector<IntPoly>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const long n = g.degree();
    for (;;) {
        std::vector<Integer> c(n);
        for (auto& a : c) a = rng.get_z_range(p);
        IntPoly a(std::move(c));
        if (a.degree() < 1) continue;
        IntPoly b;
        if (p == 2) {
            IntPoly s = rem_mod(a, g, p), t = s;
            for (int i = 1; i < d; ++i) {
                t = rem_mod(t * t, g, p);
                s = add_mod(s, t, p);
            }
            b = s;
        } else {
            Integer e = (pow_int(p, d) - 1) / 2;
            b = sub_mod(powmod(a, e, g, p), IntPoly::constant(1), p);
        }
        IntPoly c2 = gcd_mod_p(b, g, p);
        if (c2.degree() > 0 && c2.degree() < n) {
            equal_degree(c2, d, p, rng, out);
            equal_degree(exact_div_mod(g, c2, p), d, p, rng, out);
            return;
        }
    }
}

// ---------------------------------------------------------------- Hensel

// F monic mod p^N, F = g h mod p with g, h monic and coprime mod p.
std::pair<IntPoly, IntPoly> hensel_lift2(const IntPoly& F, const IntPoly& g, const IntPoly& h, const Integer& p,
                                         unsigned N)
{
    IntPoly s, t;
    IntPoly one = xgcd_mod_p(g, h, p, s, t);
    if (one != IntPoly::constant(1)) throw MathError("Hensel lifting needs coprime factors");
    IntPoly G = g, H = h;
    Integer pk = p;
    for (unsigned k = 1; k < N; ++k) {
        IntPoly E = F - G * H;
        std::vector<Integer> ec;
        for (const auto& a : E.coeffs()) {
            if (!mpz_divisible_p(a.get_mpz_t(), pk.get_mpz_t())) throw MathError("Hensel lifting lost precision");
            ec.push_back(nonneg_mod(a / pk, p));
        }
        IntPoly e(std::move(ec));
        IntPoly dG = rem_mod(t * e, g, p);
        IntPoly dH = rem_mod(s * e, h, p);
        G += dG * pk;
        H += dH * pk;
        pk *= p;
    }
    return {reduce_mod(G, pk), reduce_mod(H, pk)};
}

IntPoly product_mod(const std::vector<IntPoly>& fs, std::size_t lo, std::size_t hi, const Integer& m)
{
    IntPoly r = IntPoly::constant(1);
    for (std::size_t i = lo; i < hi; ++i) r = mul_mod(r, fs[i], m);
    return r;
}

// Monic G_i with F = prod G_i mod p^N, F monic mod p^N.
void hensel_multi(const IntPoly& F, const std::vector<IntPoly>& gs, std::size_t lo, std::size_t hi, const Integer& p,
                  unsigned N, std::vector<IntPoly>& out)
{
    if (hi - lo == 1) {
        out.push_back(F);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    auto [G, H] = hensel_lift2(F, product_mod(gs, lo, mid, p), product_mod(gs, mid, hi, p), p, N);
    hensel_multi(G, gs, lo, mid, p, N, out);
    hensel_multi(H, gs, mid, hi, p, N, out);
}

IntPoly symmetric_reduce(const IntPoly& f, const Integer& m)
{
    std::vector<Integer> c(f.coeffs());
    for (auto& a : c) a = symmetric_mod(a, m);
    return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- Z

std::vector<IntPoly> rational_roots(IntPoly& f)
{
    std::vector<IntPoly> out;
    static const Integer kLimit("1000000000000000000");
    if (f.degree() < 2 || abs(f.coeffs()[0]) > kLimit || abs(f.lead()) > kLimit) return out;
    auto nums = divisors(f.coeffs()[0]);
    auto dens = divisors(f.lead());
    for (const auto& q : dens)
        for (const auto& a : nums)
            for (int sgn_ : {1, -1}) {
                if (f.degree() < 1) return out;
                Integer pnum = sgn_ * a;
                Integer g;
                mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                // evaluate q^deg f(p/q) exactly
                Integer acc = 0, qpow = 1;
                std::vector<Integer> qp(f.size());
                for (std::size_t i = 0; i < f.size(); ++i) {
                    qp[i] = qpow;
                    qpow *= q;
                }
                Integer ppow = 1;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    acc += f.coeffs()[i] * ppow * qp[f.size() - 1 - i];
                    ppow *= pnum;
                }
                if (acc == 0) {
                    IntPoly lin{-pnum, q};
                    out.push_back(lin);
                    f = exact_div(f, lin);
                }
            }
    return out;
}

Integer max_abs_coeff(const IntPoly& f)
{
    Integer m = 0;
    for (const auto& a : f.coeffs())
        if (abs(a) > m) m = abs(a);
    return m;
}

// f primitive, squarefree, positive lead, f(0) != 0, degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f)
{
    const long n = f.degree();
    IntPoly df = f.derivative();
    Integer best_p = 0;
    std::vector<IntPoly> best;
    int good = 0;
    for (Integer p = 2; good < 6 && p < 2000; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (mpz_divisible_p(f.lead().get_mpz_t(), p.get_mpz_t())) continue;
        if (gcd_mod_p(f, df, p).degree() != 0) continue;
        ++good;
        auto fac = factor_mod_p(f, p);
        std::vector<IntPoly> gs;
        for (auto& [g, e] : fac)
            if (g.degree() > 0) gs.push_back(g);
        if (best_p == 0 || gs.size() < best.size()) {
            best_p = p;
            best = gs;
        }
        if (gs.size() == 1) break;
    }
    if (best_p == 0) throw MathError("no suitable prime for factorization");
    if (best.size() == 1) return {f};
    const Integer& p = best_p;

    Integer bound = pow_int(2, n) * (n + 1) * max_abs_coeff(f) * abs(f.lead());
    Integer limit = 2 * bound * abs(f.lead());
    unsigned N = 1;
    Integer pN = p;
    while (pN <= limit) {
        pN *= p;
        ++N;
    }
    IntPoly F = monic_mod(f, pN);
    std::vector<IntPoly> lifted;
    hensel_multi(F, best, 0, best.size(), p, N, lifted);

    std::vector<IntPoly> found;
    std::vector<std::size_t> rem(lifted.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    IntPoly frem = f;
    std::size_t s = 1;
    while (2 * s <= rem.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            IntPoly g = IntPoly::constant(frem.lead());
            for (auto i : idx) g = mul_mod(g, lifted[rem[i]], pN);
            g = primitive_part(symmetric_reduce(g, pN));
            if (g.degree() > 0 && divides(g, frem)) {
                found.push_back(g);
                frem = exact_div(frem, g);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, k = 0; i < rem.size(); ++i) {
                    if (k < s && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    keep.push_back(rem[i]);
                }
                rem = keep;
                hit = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == rem.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (frem.degree() > 0) found.push_back(primitive_part(frem));
    return found;
}

std::vector<IntPoly> factor_squarefree(IntPoly f)
{
    std::vector<IntPoly> out = rational_roots(f);
    for (auto& g : out) g = primitive_part(g);
    if (f.degree() == 1)
        out.push_back(primitive_part(f));
    else if (f.degree() >= 2)
        for (auto& g : zassenhaus(primitive_part(f))) out.push_back(g);
    return out;
}

}  // namespace

Factorization factor_over_z(const IntPoly& f)
{
    if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
    if (f.degree() > kMaxFactorDegree)
        throw MathError("factor_over_z: degree " + std::to_string(f.degree()) + " exceeds supported bound " +
                        std::to_string(kMaxFactorDegree));
    Factorization out;
    Integer c = content(f);
    if (f.lead() < 0) c = -c;
    if (c != 1) out.emplace_back(IntPoly::constant(c), 1);
    if (f.degree() == 0) return out;
    IntPoly g = primitive_part(f);
    std::size_t k = 0;
    while (g.coeffs()[k] == 0) ++k;
    Factorization body;
    if (k > 0) {
        body.emplace_back(IntPoly::x(), static_cast<int>(k));
        g = divide_by_x_power(g, k);
    }
    // Yun's squarefree decomposition over Q
    if (g.degree() > 0) {
        RatPoly b = to_rational(g), db = b.derivative();
        RatPoly c0 = gcd(b, db), q, r;
        divrem(b, c0, q, r);
        RatPoly w = q;
        divrem(db, c0, q, r);
        RatPoly y = q - w.derivative();
        int i = 1;
        while (w.degree() > 0) {
            RatPoly z = gcd(w, y);
            divrem(w, z, q, r);
            w = q;
            divrem(y, z, q, r);
            y = q - w.derivative();
            if (z.degree() > 0)
                for (auto& h : factor_squarefree(primitive_part(z))) body.emplace_back(h, i);
            ++i;
        }
    }
    sort_factors(body);
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

bool is_irreducible(const IntPoly& f)
{
    if (f.degree() < 1) return false;
    auto fs = factor_over_z(f);
    int nonconst = 0;
    for (auto& [g, e] : fs) {
        if (g.degree() == 0) continue;
        nonconst += e;
    }
    return nonconst == 1;
}

Factorization factor_mod_p(const IntPoly& f, const Integer& p)
{
    if (!is_prime(p)) throw MathError("factor_mod_p: modulus is not prime");
    IntPoly fp = reduce_mod(f, p);
    if (fp.is_zero()) throw MathError("polynomial vanishes modulo " + p.get_str());
    Integer lc = fp.lead();
    Factorization out;
    if (lc != 1) out.emplace_back(IntPoly::constant(lc), 1);
    if (fp.degree() == 0) return out;
    IntPoly g = monic_mod(fp, p);

    Factorization sqf;
    squarefree_mod_p(g, p, 1, sqf);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    Factorization body;
    for (auto& [a, e] : sqf)
        for (auto& [gd, d] : distinct_degree(a, p)) {
            std::vector<IntPoly> irr;
            equal_degree(gd, d, p, rng, irr);
            for (auto& h : irr) body.emplace_back(h, e);
        }
    sort_factors(body);
    // merge duplicates (possible only through p-th power branches)
    Factorization merged;
    for (auto& fe : body) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(fe);
    }
    out.insert(out.end(), merged.begin(), merged.end());
    return out;
}

int t_multiplicity(const IntPoly& f, const Integer& p)
{
    int t = 0;
    while (t < f.degree() && mpz_divisible_p(f.coeffs()[t].get_mpz_t(), p.get_mpz_t())) ++t;
    return t;
}

std::pair<IntPoly, IntPoly> hensel_split(const IntPoly& h, const Integer& p, unsigned N)
{
    if (h.degree() < 1 || h.lead() != 1) throw MathError("hensel_split expects a monic polynomial");
    if (N < 1) throw MathError("hensel_split: precision exponent must be positive");
    Integer pN = pow_int(p, N);
    int t = t_multiplicity(h, p);
    if (t == 0) return {reduce_mod(h, pN), IntPoly::constant(1)};
    if (t == h.degree()) return {IntPoly::constant(1), reduce_mod(h, pN)};
    IntPoly f1 = divide_by_x_power(reduce_mod(h, p), t);
    auto [H1, H2] = hensel_lift2(reduce_mod(h, pN), f1, IntPoly::monomial(1, t), p, N);
    return {H1, H2};
}

}  // namespace gaend
