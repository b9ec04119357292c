#include "freeconv/transforms.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/json_io.hpp"
#include "freeconv/treeeval.hpp"

namespace freeconv {

using nlohmann::json;

BoxVariant parse_box_variant(const std::string& name)
{
    if (name == "box")
        return BoxVariant::box;
    if (name == "line")
        return BoxVariant::line;
    if (name == "red")
        return BoxVariant::red;
    if (name == "redred")
        return BoxVariant::redred;
    throw ParseError("unknown convolution variant \"" + name + "\" (box|line|red|redred)");
}

std::string to_string(BoxVariant v)
{
    switch (v) {
    case BoxVariant::box:
        return "box";
    case BoxVariant::line:
        return "line";
    case BoxVariant::red:
        return "red";
    case BoxVariant::redred:
        return "redred";
    }
    return "?";
}

TruncSeries boxconv(BoxVariant variant, const TruncSeries& f, const TruncSeries& g)
{
    if (f.dim() != g.dim())
        throw DomainError("boxconv: algebra dimensions differ");
    const std::size_t d = f.dim();
    std::size_t order = std::min(f.order(), g.order());
    if (variant == BoxVariant::red)
        order = std::min(f.order(), g.order() + 1);
    if (variant == BoxVariant::redred) {
        if (g.order() == 0)
            throw DomainError("boxconv redred: g must have order at least 1");
        order = std::min(f.order(), g.order() - 1);
    }

    const bool planted = variant == BoxVariant::red || variant == BoxVariant::redred;
    const FreeSlots slots =
        (variant == BoxVariant::box || variant == BoxVariant::red) ? FreeSlots::odd : FreeSlots::even;
    TreeTensorEvaluator ev(d, slots,
                           variant == BoxVariant::red ? alternating_selector(g, f) : alternating_selector(f, g));

    auto h = TruncSeries::zero(d, order);
    if (variant == BoxVariant::box || variant == BoxVariant::line)
        h[0] = g[0];
    // The redred sum is also valid at n = 0, where it gives g_1(1).
    const std::size_t first = variant == BoxVariant::redred ? 0 : 1;
    for (std::size_t n = first; n <= order; ++n) {
        const std::size_t trees_at = variant == BoxVariant::red ? n - 1 : n;
        for (const auto& t : enumerate_trees(trees_at)) {
            const Tree r = rmap(t);
            h[n] += ev.eval(planted ? wedge(Tree(), r) : r);
        }
    }
    return h;
}

namespace {

void require_gi(const TruncSeries& f, const char* what)
{
    if (!in_gi(f))
        throw DomainError(std::string(what) + ": series is not in G^I");
}

} // namespace

TruncSeries s_transform_by_inverse(const TruncSeries& f)
{
    require_gi(f, "s_transform");
    return strip_left_I(comp_inverse(f));
}

TruncSeries s_transform_by_fixed_point(const TruncSeries& f)
{
    require_gi(f, "s_transform");
    const TruncSeries big_f = strip_left_I(f);
    TruncSeries s = TruncSeries::constant(*inverse(big_f[0][0]), big_f.order());
    for (std::size_t pass = 0; pass < f.order(); ++pass)
        s = mult_inverse(compose(big_f, left_I(s)));
    return s;
}

TruncSeries s_transform(const TruncSeries& f)
{
    TruncSeries a = s_transform_by_inverse(f);
    TruncSeries b = s_transform_by_fixed_point(f);
    if (a.order() != b.order() || !agree(a, b))
        throw std::logic_error("s_transform: inverse and fixed-point routes disagree");
    return a;
}

TruncSeries u_transform(const TruncSeries& f)
{
    const TruncSeries s = s_transform(f);
    return mul(mul(mult_inverse(s), TruncSeries::identity(f.dim(), f.order())), s);
}

TruncSeries u_transform_by_s(const TruncSeries& f)
{
    require_gi(f, "u_transform");
    return compose(right_I(strip_left_I(f)), left_I(s_transform_by_inverse(f)));
}

TruncSeries u_transform_by_inverse(const TruncSeries& f)
{
    require_gi(f, "u_transform");
    return compose(right_I(strip_left_I(f)), comp_inverse(f));
}

TruncSeries s_prime(const TruncSeries& f)
{
    require_gi(f, "s_prime");
    return strip_right_I(comp_inverse(right_I(strip_left_I(f))));
}

FactorizationWitness factorization_counterexample(std::size_t dim, std::size_t order)
{
    if (dim < 2 || order < 1)
        throw DomainError("factorization_counterexample: needs d >= 2 and N >= 1");
    // f = I and g_1 = transpose: (f box g)_1(x) = x^T but the product gives x g_1(1) = x.
    auto f = TruncSeries::identity(dim, order);
    auto g = TruncSeries::zero(dim, order);
    for (std::size_t c = 0; c < g[1].size(); ++c) {
        const std::size_t p = c / dim, q = c % dim;
        g[1][c] = Matrix::unit(dim, q, p);
    }
    return {f, g};
}

namespace {

constexpr std::int64_t kBound = 2;

json trial_context(std::size_t trial, const TruncSeries& f, const TruncSeries& g)
{
    return json{{"trial", trial}, {"f", to_json(f)}, {"g", to_json(g)}};
}

std::vector<Matrix> random_args(Rng& rng, std::size_t n, std::size_t d)
{
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < n; ++i)
        xs.push_back(rng.element(3, d));
    return xs;
}

Matrix ev(const TruncSeries& f, std::size_t k, std::vector<Matrix> args) { return f[k].eval(args); }

// The first terms of the four convolutions written out by hand.
bool low_order_examples_hold(Rng& rng, const TruncSeries& f, const TruncSeries& g)
{
    const std::size_t d = f.dim();
    const Matrix one = Matrix::identity(d);
    const auto x = random_args(rng, 2, d);
    const Matrix x1 = x[0], x2 = x[1];
    const Matrix g1one = ev(g, 1, {one});
    const Matrix f1one = ev(f, 1, {one});

    const auto box = boxconv(BoxVariant::box, f, g);
    const auto line = boxconv(BoxVariant::line, f, g);
    const auto red = boxconv(BoxVariant::red, f, g);
    const auto redred = boxconv(BoxVariant::redred, f, g);
    bool ok = true;
    ok = ok && box[0][0] == g[0][0] && line[0][0] == g[0][0] && red[0].is_zero() && redred[0][0] == g1one;
    ok = ok && ev(box, 1, {x1}) == ev(g, 1, {ev(f, 1, {x1})});
    ok = ok && ev(box, 2, {x1, x2}) ==
                   ev(g, 1, {ev(f, 2, {x1, g1one * x2})}) + ev(g, 2, {ev(f, 1, {x1}), ev(f, 1, {x2})});
    ok = ok && ev(line, 1, {x1}) == ev(g, 1, {f1one * x1});
    ok = ok && ev(line, 2, {x1, x2}) ==
                   ev(g, 1, {ev(f, 2, {one, ev(g, 1, {x1})}) * x2}) + ev(g, 2, {f1one * x1, f1one * x2});
    ok = ok && ev(red, 1, {x1}) == ev(f, 1, {x1});
    ok = ok && ev(red, 2, {x1, x2}) == ev(f, 2, {x1, g1one * x2});
    ok = ok && ev(redred, 1, {x1}) == ev(g, 2, {one, ev(f, 1, {x1})});
    ok = ok && ev(redred, 2, {x1, x2}) == ev(g, 2, {one, ev(f, 2, {x1, g1one * x2})}) +
                                               ev(g, 3, {one, ev(f, 1, {x1}), ev(f, 1, {x2})});
    return ok;
}

} // namespace

Report verify_series_laws(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.suite = "series";
    r.seed = seed;
    r.order = order;
    r.dim = dim;
    r.trials = trials;
    if (order < 2 || dim < 1 || trials < 1)
        throw DomainError("verify: needs order >= 2, dim >= 1, trials >= 1");
    Rng rng(seed);
    const json p{{"order", order}, {"dim", dim}, {"trials", trials}};
    const auto one = TruncSeries::one(dim, order);
    const auto id = TruncSeries::identity(dim, order);

    auto& monoid = r.add("series.monoid", "(f.g).h = f.(g.h), 1.f = f.1 = f, I o h = h o I = h", p);
    auto& group_inv = r.add("series.group.inv", "f.f^{-1} = f^{-1}.f = 1 on G^inv", p);
    auto& group_dif = r.add("series.group.dif", "f o f^{o-1} = f^{o-1} o f = I and (f o g) o h = f o (g o h)", p);
    auto& gi_closure = r.add("series.gi.closure", "G^I is closed under o and o-inverse", p);
    auto& gi_alt = r.add("series.gi.alternative", "I.G^inv equals the G^dif elements with f_1(1) invertible and "
                                                  "f_n(x_1, ...) = x_1 f_n(1, ...)",
                         p);
    auto& distrib = r.add("series.right_distributive", "(f.g) o h = (f o h).(g o h)", p);
    auto& s_dual = r.add("s.dual_path", "S_f from the o-inverse equals the fixed point of S = (F o (I S))^{-1}", p);
    auto& s_class = r.add("s.class", "S_f lies in G^inv", p);
    auto& u_three = r.add("u.expressions", "S_f^{-1} I S_f = (F I) o (I S_f) = (F I) o (I F)^{o-1}, in G^dif", p);
    auto& sp_rel = r.add("sprime.relations", "S'_F I = (F I)^{o-1}, S_F = S'_F o U_F, U_F^{o-1} = S'_F I S'_F^{-1}", p);
    auto& examples = r.add("transforms.examples", "F = c constant: S = S' = c^{-1}, U = c I c^{-1}; F = 1: U = I; d = 1: U = I, S' = S", p);

    for (std::size_t t = 0; t < trials; ++t) {
        const auto f = random_series(rng, dim, order, kBound);
        const auto g = random_series(rng, dim, order, kBound);
        auto h = random_series(rng, dim, order, kBound);
        h[0] = MultiMap(dim, 0);
        const json ctx = trial_context(t, f, g);

        monoid.expect_agree(mul(mul(f, g), h), mul(f, mul(g, h)), order, ctx);
        monoid.expect_agree(mul(one, f), f, order, ctx);
        monoid.expect_agree(mul(f, one), f, order, ctx);
        monoid.expect_agree(compose(id, h), h, order, ctx);
        monoid.expect_agree(compose(h, id), h, order, ctx);
        distrib.expect_agree(compose(mul(f, g), h), mul(compose(f, h), compose(g, h)), order, ctx);

        const auto fi = random_ginv(rng, dim, order, kBound);
        const auto fi_inv = mult_inverse(fi);
        group_inv.expect_agree(mul(fi, fi_inv), one, order, ctx);
        group_inv.expect_agree(mul(fi_inv, fi), one, order, ctx);

        const auto a = random_gi(rng, dim, order, kBound);
        const auto b = random_gi(rng, dim, order, kBound);
        const json gctx = trial_context(t, a, b);
        const auto a_inv = comp_inverse(a);
        group_dif.expect_agree(compose(a, a_inv), id, order, gctx);
        group_dif.expect_agree(compose(a_inv, a), id, order, gctx);
        group_dif.expect_agree(compose(compose(a, b), h), compose(a, compose(b, h)), order, gctx);
        gi_closure.expect(in_gi(a_inv) && in_gi(compose(a, b)) && in_gi(comp_inverse(compose(b, a))), gctx);

        // Both directions of the alternative description.
        gi_alt.expect(in_gi(left_I(fi.truncated(order - 1))), ctx);
        gi_alt.expect(in_gi(a) && in_ginv(strip_left_I(a)) && agree(left_I(strip_left_I(a)), a), gctx);
        auto not_absorbing = a;
        not_absorbing[1] = MultiMap::identity(dim);
        // (x_1, x_2) -> x_2 x_1 is in G^dif but does not absorb x_1 on the left.
        if (dim > 1) {
            MultiMap swapped(dim, 2);
            for (std::size_t i = 0; i < swapped.basis_size(); ++i)
                for (std::size_t j = 0; j < swapped.basis_size(); ++j)
                    swapped[i * swapped.basis_size() + j] = Matrix::basis(dim, j) * Matrix::basis(dim, i);
            not_absorbing[2] = swapped;
            gi_alt.expect(in_gdif(not_absorbing) && !in_gi(not_absorbing), gctx);
        }

        const auto s_a = s_transform_by_inverse(a);
        const auto s_b = s_transform_by_fixed_point(a);
        s_dual.expect_agree(s_a, s_b, order - 1, gctx);
        s_class.expect(in_ginv(s_a), gctx);

        const auto u1 = u_transform(a);
        const auto u2 = u_transform_by_s(a);
        const auto u3 = u_transform_by_inverse(a);
        u_three.expect_agree(u1, u2, order, gctx);
        u_three.expect_agree(u1, u3, order, gctx);
        u_three.expect(in_gdif(u1), gctx);

        const auto sp = s_prime(a);
        sp_rel.expect_agree(mul(sp, id), comp_inverse(right_I(strip_left_I(a))), order, gctx);
        sp_rel.expect_agree(s_a, compose(sp, u1), order - 1, gctx);
        sp_rel.expect_agree(comp_inverse(u1), mul(mul(sp, id), mult_inverse(sp)), order, gctx);
    }

    // Constant F.
    const Matrix c = rng.invertible_element(3, dim);
    const auto fc = left_I(TruncSeries::constant(c, order - 1));
    const auto c_inv = TruncSeries::constant(*inverse(c), order - 1);
    const json cctx{{"c", to_json(c)}};
    examples.expect_agree(s_transform(fc), c_inv, order - 1, cctx);
    examples.expect_agree(s_prime(fc), c_inv, order - 1, cctx);
    examples.expect_agree(u_transform(fc),
                          mul(mul(TruncSeries::constant(c, order), id), TruncSeries::constant(*inverse(c), order)),
                          order, cctx);
    examples.expect_agree(u_transform(left_I(TruncSeries::one(dim, order - 1))), id, order, cctx);
    // Commutative B.
    Rng scalar_rng(seed ^ 0x5eedULL);
    const auto s1 = random_gi(scalar_rng, 1, order, kBound);
    const json sctx{{"f", to_json(s1)}};
    examples.expect_agree(u_transform(s1), TruncSeries::identity(1, order), order, sctx);
    examples.expect_agree(s_prime(s1), s_transform(s1), order - 1, sctx);

    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report verify_boxconv_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    r.suite = "boxconv";
    r.seed = seed;
    r.order = order;
    r.dim = dim;
    r.trials = trials;
    if (order < 3 || dim < 1 || trials < 1)
        throw DomainError("verify: needs order >= 3, dim >= 1, trials >= 1");
    Rng rng(seed);
    const json p{{"order", order}, {"dim", dim}, {"trials", trials}};

    auto& compo = r.add("boxconv.compose", "f box g = g o (f red g) for f, g in Mult[[B]]", p);
    auto& compo_line = r.add("boxconv.line.compose", "g line f = f o ((f redred g) I) for f, g in Mult[[B]]", p);
    auto& mult = r.add("boxconv.mult", "f box g = (f red g).(f redred g) for f, g in I.Mult[[B]]", p);
    auto& mult_line = r.add("boxconv.line.mult", "g line f = (f redred g).(f red g) for f, g in I.Mult[[B]]", p);
    auto& negative = r.add("boxconv.mult.negative",
                           "the product factorizations fail for some f, g outside I.Mult[[B]]", p);
    auto& classes = r.add("boxconv.classes",
                          "f, g in G^I: box and red in G^I, redred in G^inv, line in G^dif", p);
    auto& s_rule = r.add("s.boxconv", "S_{f box g} = S_g.(S_f o U_g) for f, g in G^I", p);
    auto& u_comp = r.add("u.boxconv", "U_{f box g} = U_f o U_g for f, g in G^I", p);
    auto& examples = r.add("boxconv.examples", "degree 0 to 2 terms of the four convolutions", p);
    Check* commutative = nullptr;
    if (dim == 1)
        commutative = &r.add("s.boxconv.commutative", "d = 1: S_{f box g} = S_g.S_f", p);

    for (std::size_t t = 0; t < trials; ++t) {
        const auto f = random_series(rng, dim, order, kBound);
        const auto g = random_series(rng, dim, order, kBound);
        const json ctx = trial_context(t, f, g);
        compo.expect_agree(boxconv(BoxVariant::box, f, g), compose(g, boxconv(BoxVariant::red, f, g)), order, ctx);
        compo_line.expect_agree(boxconv(BoxVariant::line, g, f),
                                compose(f, right_I(boxconv(BoxVariant::redred, f, g))), order, ctx);

        const auto fi = left_I(random_series(rng, dim, order - 1, kBound));
        const auto gi = left_I(random_series(rng, dim, order - 1, kBound));
        const json ictx = trial_context(t, fi, gi);
        mult.expect_agree(boxconv(BoxVariant::box, fi, gi),
                          mul(boxconv(BoxVariant::red, fi, gi), boxconv(BoxVariant::redred, fi, gi)), order, ictx);
        mult_line.expect_agree(boxconv(BoxVariant::line, gi, fi),
                               mul(boxconv(BoxVariant::redred, fi, gi), boxconv(BoxVariant::red, fi, gi)), order,
                               ictx);

        const auto a = random_gi(rng, dim, order, kBound);
        const auto b = random_gi(rng, dim, order, kBound);
        const json gctx = trial_context(t, a, b);
        const auto ab = boxconv(BoxVariant::box, a, b);
        classes.expect(in_gi(ab) && in_gi(boxconv(BoxVariant::red, a, b)) &&
                           in_ginv(boxconv(BoxVariant::redred, a, b)) && in_gdif(boxconv(BoxVariant::line, a, b)),
                       gctx);
        compo.expect_agree(ab, compose(b, boxconv(BoxVariant::red, a, b)), order, gctx);
        mult.expect_agree(ab, mul(boxconv(BoxVariant::red, a, b), boxconv(BoxVariant::redred, a, b)), order, gctx);

        const auto s_ab = s_transform(ab);
        const auto s_a = s_transform(a);
        const auto s_b = s_transform(b);
        const auto u_b = u_transform(b);
        s_rule.expect_agree(s_ab, mul(s_b, compose(s_a, u_b)), order - 1, gctx);
        u_comp.expect_agree(u_transform(ab), compose(u_transform(a), u_b), order, gctx);
        if (commutative)
            commutative->expect_agree(s_ab, mul(s_b, s_a), order - 1, gctx);

        examples.expect(low_order_examples_hold(rng, f, g), ctx);
        examples.expect(low_order_examples_hold(rng, a, b), gctx);
    }

    if (dim >= 2) {
        const auto w = factorization_counterexample(dim, order);
        const auto box = boxconv(BoxVariant::box, w.f, w.g);
        const auto line = boxconv(BoxVariant::line, w.g, w.f);
        const auto red = boxconv(BoxVariant::red, w.f, w.g);
        const auto redred = boxconv(BoxVariant::redred, w.f, w.g);
        const bool fails = !agree(box, mul(red, redred)) || !agree(line, mul(redred, red));
        negative.expect(fails && !in_I_mult(w.g), trial_context(0, w.f, w.g));
        negative.params["witness"] = trial_context(0, w.f, w.g);
    } else {
        // At d = 1 left absorption always holds, so only a nonzero constant term leaves I.Mult[[B]].
        negative.params["note"] = "d = 1 witness has nonzero constant terms";
        Rng wrng(seed ^ 0xbadULL);
        bool fails = false;
        TruncSeries f = TruncSeries::zero(1, order), g = f;
        for (int attempt = 0; attempt < 32 && !fails; ++attempt) {
            f = random_series(wrng, 1, order, kBound);
            g = random_series(wrng, 1, order, kBound);
            f[0] = MultiMap::constant(Matrix::identity(1));
            fails = !agree(boxconv(BoxVariant::box, f, g),
                           mul(boxconv(BoxVariant::red, f, g), boxconv(BoxVariant::redred, f, g)));
        }
        negative.expect(fails && !in_I_mult(f), trial_context(0, f, g));
    }

    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

Report verify_transform_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    Report r = verify_series_laws(order, dim, trials, seed);
    r.append(verify_boxconv_identities(order, dim, trials, seed + 1));
    r.suite = "transforms";
    return r;
}

} // namespace freeconv
