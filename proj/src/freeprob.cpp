#include "freeconv/freeprob.hpp"

#include <chrono>
#include <set>
#include <vector>

#include "freeconv/error.hpp"
#include "freeconv/json_io.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/treeeval.hpp"

namespace freeconv {

using nlohmann::json;

namespace {

void require_gi(const TruncSeries& f, const char* what)
{
    if (!in_gi(f))
        throw DomainError(std::string(what) + ": series is not in G^I");
}

} // namespace

TruncSeries moments_from_cumulants(const TruncSeries& k)
{
    require_gi(k, "moments_from_cumulants");
    TreeTensorEvaluator ev(k.dim(), FreeSlots::all, [&k](std::size_t, std::span<const std::size_t>) { return &k; });
    auto m = TruncSeries::zero(k.dim(), k.order());
    for (std::size_t n = 1; n <= k.order(); ++n)
        for (const auto& t : enumerate_trees(n))
            m[n] += ev.eval(t);
    return m;
}

TruncSeries cumulants_from_moments(const TruncSeries& m)
{
    require_gi(m, "cumulants_from_moments");
    auto k = TruncSeries::zero(m.dim(), m.order());
    // At step n only trees of size n other than the comb are evaluated; they
    // and their subtrees use degrees below n, which are final.
    TreeTensorEvaluator ev(m.dim(), FreeSlots::all, [&k](std::size_t, std::span<const std::size_t>) { return &k; });
    for (std::size_t n = 1; n <= m.order(); ++n) {
        const Tree comb_n = right_comb(n);
        MultiMap acc = m[n];
        for (const auto& t : enumerate_trees(n))
            if (!(t == comb_n))
                acc -= ev.eval(t);
        k[n] = std::move(acc);
    }
    return k;
}

Report speicher_relation_check(const TruncSeries& k, const TruncSeries& m)
{
    require_gi(k, "speicher_relation_check");
    require_gi(m, "speicher_relation_check");
    Report r;
    r.suite = "speicher";
    r.dim = k.dim();
    r.order = std::min(k.order(), m.order());
    const std::size_t d = k.dim();
    const TruncSeries big_k = strip_left_I(k);
    const TruncSeries big_m = strip_left_I(m);
    const std::size_t order = r.order;
    const auto inner = TruncSeries::identity(d, order) + left_I(right_I(big_m));
    const auto k_inner = compose(big_k, inner);
    const auto rhs1 = mul(k_inner, TruncSeries::one(d, order) + left_I(big_m));
    const auto rhs2 = mul(TruncSeries::one(d, order) + right_I(big_m), k_inner);
    // Compare I.M with I.rhs so witnesses carry the degree of m.
    const json ctx{{"k", to_json(k)}, {"m", to_json(m)}};
    r.add("speicher.right", "M = K o (I + I M I).(1 + I M)").expect_agree(m, left_I(rhs1), order, ctx);
    r.add("speicher.left", "M = (1 + M I).K o (I + I M I)").expect_agree(m, left_I(rhs2), order, ctx);
    return r;
}

Matrix mixed_tree_cumulant(const Tree& t, std::span<const LetterArg> args, const TruncSeries& ka,
                           const TruncSeries& kb)
{
    if (args.size() != t.size())
        throw DomainError("mixed_tree_cumulant: tree has " + std::to_string(t.size()) + " vertices but " +
                          std::to_string(args.size()) + " arguments were given");
    if (ka.dim() != kb.dim())
        throw DomainError("mixed_tree_cumulant: dimensions differ");
    const std::size_t d = ka.dim();
    if (t.is_leaf())
        return Matrix::identity(d);
    const auto parts = comb_decompose(t);
    std::vector<Matrix> inner;
    std::size_t pos = 0;
    Letter letter = args[parts.front().size()].letter;
    for (const auto& p : parts) {
        const LetterArg& root = args[pos + p.size()];
        if (root.letter != letter)
            return Matrix(d);
        inner.push_back(mixed_tree_cumulant(p, args.subspan(pos, p.size()), ka, kb) * root.coeff);
        pos += p.size() + 1;
    }
    const TruncSeries& k = letter == Letter::A ? ka : kb;
    if (parts.size() > k.order())
        throw DomainError("mixed_tree_cumulant: needs a cumulant degree beyond the series order");
    return k[parts.size()].eval(inner);
}

TruncSeries product_moments_oracle(const TruncSeries& ka, const TruncSeries& kb, std::size_t order, bool only_ybe)
{
    require_gi(ka, "product oracle");
    require_gi(kb, "product oracle");
    if (ka.dim() != kb.dim())
        throw DomainError("product oracle: dimensions differ");
    if (order > ka.order() || order > kb.order())
        throw DomainError("product oracle: order exceeds the input orders");
    // Arguments (x_1 a, 1 b, x_2 a, 1 b, ...): letter a at odd positions.
    auto letters = [&ka, &kb](std::size_t, std::span<const std::size_t> spine) -> const TruncSeries* {
        const std::size_t parity = spine.front() % 2;
        for (std::size_t p : spine)
            if (p % 2 != parity)
                return nullptr;
        return parity == 1 ? &ka : &kb;
    };
    TreeTensorEvaluator ev(ka.dim(), FreeSlots::odd, letters);
    auto m = TruncSeries::zero(ka.dim(), order);
    for (std::size_t n = 1; n <= order; ++n) {
        if (only_ybe) {
            for (const auto& t : enumerate_ybe(2 * n))
                m[n] += ev.eval(t);
        } else {
            for (const auto& t : enumerate_trees(2 * n))
                m[n] += ev.eval(t);
        }
    }
    return m;
}

TruncSeries product_cumulants_oracle(const TruncSeries& ka, const TruncSeries& kb, std::size_t order)
{
    return cumulants_from_moments(product_moments_oracle(ka, kb, order));
}

namespace {

constexpr std::int64_t kBound = 2;

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

json pair_context(std::size_t trial, const TruncSeries& ka, const TruncSeries& kb)
{
    return json{{"trial", trial}, {"ka", to_json(ka)}, {"kb", to_json(kb)}};
}

// x_1 ... x_n; the constant 1 for n = 0.
MultiMap word_map(std::size_t dim, std::size_t n)
{
    MultiMap w = MultiMap::constant(Matrix::identity(dim));
    for (std::size_t i = 0; i < n; ++i)
        w = times(w, MultiMap::identity(dim));
    return w;
}

// m = I.M with M_n(x_1..x_n) = lambda_n x_1...x_n and lambda_0 != 0, so M I = I M.
TruncSeries central_moments(Rng& rng, std::size_t dim, std::size_t order)
{
    auto big_m = TruncSeries::zero(dim, order - 1);
    for (std::size_t n = 0; n < order; ++n) {
        Rational lambda = n == 0 ? Rational(rng.uniform(1, 3)) : rng.rational(kBound);
        big_m[n] = word_map(dim, n);
        big_m[n] *= lambda;
    }
    return left_I(big_m);
}

} // namespace

Report verify_freeprob_identities(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    if (order < 2 || dim < 1 || trials < 1)
        throw DomainError("verify: needs order >= 2, dim >= 1, trials >= 1");
    Report r;
    r.suite = "freeprob";
    r.seed = seed;
    r.order = order;
    r.dim = dim;
    r.trials = trials;
    Rng rng(seed);
    const json p{{"order", order}, {"dim", dim}, {"trials", trials}};

    auto& roundtrip = r.add("moments.roundtrip", "cumulants and moments are mutually inverse", p);
    auto& speicher = r.add("moments.speicher", "M = K o (I + I M I).(1 + I M) = (1 + M I).K o (I + I M I)", p);
    auto& speicher_neg = r.add("moments.speicher.corrupted", "a corrupted m_3 breaks the relations at degree 3", p);
    auto& prop = r.add("prop.kab", "k^{ab} from the tree-sum oracle equals k^a box k^b", p);
    auto& prop1 = r.add("prop.kab.degree1", "k^{ab}_1(x) = x kappa_1(a) kappa_1(b)", p);
    auto& s_three = r.add("s_ab.three_ways", "S_ab from the oracle, from k^a box k^b, and as S_b.(S_a o U_b) agree", p);
    auto& u_moments = r.add("u_a.expressions", "U_a = (K^a I) o (I K^a)^{o-1} = (M^a I) o (I M^a)^{o-1}", p);
    auto& u_ab = r.add("u_ab.composition", "U_ab = U_a o U_b", p);
    auto& sp_f = r.add("sprime.factor", "S_a = S'_a o U_a and U_a^{o-1} = S'_a I S'_a^{-1}", p);
    auto& sp_ab = r.add("sprime.product",
                        "S_ab = (S'_b.S_a) o U_b and S'_ab = (S'_b o U_a^{o-1}).S'_a = (S'_b.S_a) o U_a^{o-1}", p);
    auto& special_d1 = r.add("special.commutative", "d = 1: S_ab = S_b.S_a", p);
    auto& special_const = r.add("special.constant_ka", "K^a constant: S_ab = S_b.S_a", p);
    auto& special_central = r.add("special.central_mb", "M^b I = I M^b: U_b = I and S_ab = S_b.S_a", p);

    const auto id = TruncSeries::identity(dim, order);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto ka = random_gi(rng, dim, order, kBound);
        const auto kb = random_gi(rng, dim, order, kBound);
        const json ctx = pair_context(t, ka, kb);

        const auto ma = moments_from_cumulants(ka);
        roundtrip.expect_agree(cumulants_from_moments(ma), ka, order, ctx);
        const auto m_rand = random_gi(rng, dim, order, kBound);
        roundtrip.expect_agree(moments_from_cumulants(cumulants_from_moments(m_rand)), m_rand, order,
                               json{{"trial", t}, {"m", to_json(m_rand)}});
        const Report sr = speicher_relation_check(ka, ma);
        for (const auto& c : sr.checks)
            if (!c.pass)
                speicher.fail(*c.witness);

        const auto kab = product_cumulants_oracle(ka, kb, order);
        const auto box = boxconv(BoxVariant::box, ka, kb);
        prop.expect_agree(kab, box, order, ctx);
        const Matrix x = rng.element(3, dim);
        const Matrix one = Matrix::identity(dim);
        prop1.expect(kab[1].eval(std::vector<Matrix>{x}) ==
                         x * ka[1].eval(std::vector<Matrix>{one}) * kb[1].eval(std::vector<Matrix>{one}),
                     ctx);

        const auto s_a = s_transform(ka);
        const auto s_b = s_transform(kb);
        const auto u_a = u_transform(ka);
        const auto u_b = u_transform(kb);
        const auto s_ab = s_transform(kab);
        s_three.expect_agree(s_ab, s_transform(box), order - 1, ctx);
        s_three.expect_agree(s_ab, mul(s_b, compose(s_a, u_b)), order - 1, ctx);

        const auto big_k = strip_left_I(ka);
        const auto big_m = strip_left_I(ma);
        u_moments.expect_agree(u_a, compose(right_I(big_k), comp_inverse(left_I(big_k))), order, ctx);
        u_moments.expect_agree(u_a, compose(right_I(big_m), comp_inverse(left_I(big_m))), order, ctx);

        const auto u_ab_series = u_transform(kab);
        u_ab.expect_agree(u_ab_series, compose(u_a, u_b), order, ctx);

        const auto sp_a = s_prime(ka);
        const auto sp_b = s_prime(kb);
        sp_f.expect_agree(s_a, compose(sp_a, u_a), order - 1, ctx);
        sp_f.expect_agree(comp_inverse(u_a), mul(mul(sp_a, id), mult_inverse(sp_a)), order, ctx);
        const auto u_a_inv = comp_inverse(u_a);
        sp_ab.expect_agree(s_ab, compose(mul(sp_b, s_a), u_b), order - 1, ctx);
        const auto sp_ab_series = s_prime(kab);
        sp_ab.expect_agree(sp_ab_series, mul(compose(sp_b, u_a_inv), sp_a), order - 1, ctx);
        sp_ab.expect_agree(sp_ab_series, compose(mul(sp_b, s_a), u_a_inv), order - 1, ctx);

        // K^a constant at the working dimension.
        const auto kc = left_I(TruncSeries::constant(rng.invertible_element(3, dim), order - 1));
        const json cctx = pair_context(t, kc, kb);
        special_const.expect_agree(s_transform(product_cumulants_oracle(kc, kb, order)), mul(s_b, s_transform(kc)),
                                   order - 1, cctx);

        // b with moments commuting with I.
        const auto mb_central = central_moments(rng, dim, order);
        const auto kb_central = cumulants_from_moments(mb_central);
        const auto big_mb = strip_left_I(mb_central);
        const json mctx = pair_context(t, ka, kb_central);
        special_central.expect(agree(right_I(big_mb), left_I(big_mb)), mctx);
        special_central.expect_agree(u_transform(kb_central), id, order, mctx);
        special_central.expect_agree(s_transform(product_cumulants_oracle(ka, kb_central, order)),
                                     mul(s_transform(kb_central), s_a), order - 1, mctx);

        // Commutative scalars.
        const auto a1 = random_gi(rng, 1, order, kBound);
        const auto b1 = random_gi(rng, 1, order, kBound);
        special_d1.expect_agree(s_transform(product_cumulants_oracle(a1, b1, order)),
                                mul(s_transform(b1), s_transform(a1)), order - 1, pair_context(t, a1, b1));
    }

    // Detector sanity: perturb m_3 of a matched pair.
    if (order >= 3) {
        const auto ka = random_gi(rng, dim, order, kBound);
        auto ma = moments_from_cumulants(ka);
        ma[3] += word_map(dim, 3);
        const Report sr = speicher_relation_check(ka, ma);
        bool both_fail_at_3 = true;
        for (const auto& c : sr.checks)
            both_fail_at_3 = both_fail_at_3 && !c.pass && c.witness && c.witness->contains("degree") &&
                             (*c.witness)["degree"] == 3;
        speicher_neg.expect(both_fail_at_3, sr.to_json(false));
    }

    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_freeprob_structure(std::size_t order, std::size_t dim, std::uint64_t seed)
{
    const auto start = std::chrono::steady_clock::now();
    if (order < 1 || dim < 1)
        throw DomainError("verify: needs order >= 1, dim >= 1");
    Report r;
    r.suite = "structure";
    r.seed = seed;
    r.order = order;
    r.dim = dim;
    r.trials = 1;
    Rng rng(seed);
    const std::size_t max_size = 2 * order;
    const std::size_t small = order >= 2 ? order - 1 : 1;

    auto& split = r.add("split.parity", "a tree splits iff it lies in Y^be (even size) or Y^bo (odd size)",
                        json{{"max_size", max_size}});
    for (std::size_t n = 0; n <= max_size; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const bool in_class = n % 2 == 0 ? in_ybe(t) : in_ybo(t);
            split.expect(splits(t) == in_class, json{{"tree", t.str()}});
        }

    const auto ka = random_gi(rng, dim, order, kBound);
    const auto kb = random_gi(rng, dim, order, kBound);
    const json ctx = pair_context(0, ka, kb);

    auto alternating_args = [&](std::size_t len) {
        std::vector<LetterArg> args;
        for (std::size_t i = 1; i <= len; ++i)
            args.push_back(LetterArg{rng.element(3, dim), i % 2 == 1 ? Letter::A : Letter::B});
        return args;
    };
    auto coeffs = [](const std::vector<LetterArg>& args) {
        std::vector<Matrix> xs;
        for (const auto& a : args)
            xs.push_back(a.coeff);
        return xs;
    };

    auto& vanish = r.add("nonsplit.vanish", "kappa_t(x_1 a, y_1 b, ...) = 0 for t in Y_2n that does not split",
                         json{{"max_size", max_size}});
    for (std::size_t n = 2; n <= max_size; n += 2)
        for (const auto& t : enumerate_trees(n))
            if (!splits(t)) {
                const auto args = alternating_args(n);
                vanish.expect(mixed_tree_cumulant(t, args, ka, kb).is_zero(), json{{"tree", t.str()}});
            }

    auto& be_alt = r.add("ybe.mixed_equals_alt",
                         "kappa_t(x_1 a, y_1 b, ...) = (k^a u k^b)_t on Y^be and (k^b u k^a)_t on Y^bo",
                         json{{"max_size", 2 * small + 1}});
    for (std::size_t n = 0; n <= small; ++n) {
        for (const auto& t : enumerate_ybe(2 * n)) {
            const auto args = alternating_args(2 * n);
            const auto xs = coeffs(args);
            be_alt.expect(mixed_tree_cumulant(t, args, ka, kb) == alt_tree_eval(ka, kb, t, xs),
                          json{{"tree", t.str()}});
        }
        for (const auto& t : enumerate_trees(2 * n + 1)) {
            if (!in_ybo(t))
                continue;
            const auto args = alternating_args(2 * n + 1);
            const auto xs = coeffs(args);
            be_alt.expect(mixed_tree_cumulant(t, args, ka, kb) == alt_tree_eval(kb, ka, t, xs),
                          json{{"tree", t.str()}});
        }
    }

    auto& restricted = r.add("ybe.restricted_sum",
                             "sum over Y_2n of mixed cumulants = sum over Y^be_2n = sum over Y^be_2n of (k^a u k^b)",
                             json{{"order", order}});
    {
        const auto full = product_moments_oracle(ka, kb, order);
        const auto be = product_moments_oracle(ka, kb, order, true);
        restricted.expect_agree(full, be, order, ctx);
        auto alt = TruncSeries::zero(dim, order);
        TreeTensorEvaluator ev(dim, FreeSlots::odd, alternating_selector(ka, kb));
        for (std::size_t n = 1; n <= order; ++n)
            for (const auto& t : enumerate_ybe(2 * n))
                alt[n] += ev.eval(t);
        restricted.expect_agree(full, alt, order, ctx);
    }

    auto& pi_union = r.add("pi.disjoint_union", "the sets Pi(t), t in Y_n, partition Y^be_2n",
                           json{{"max_n", order}});
    for (std::size_t n = 0; n <= order; ++n) {
        std::set<std::string> seen;
        std::size_t total = 0;
        bool inside = true;
        for (const auto& t : enumerate_trees(n))
            for (const auto& s : pi_set(t)) {
                ++total;
                seen.insert(s.str());
                inside = inside && in_ybe(s) && s.size() == 2 * n;
            }
        const auto be = enumerate_ybe(2 * n);
        pi_union.expect(inside && total == seen.size() && seen.size() == be.size(), json{{"n", n}});
    }

    auto& extraction = r.add("pi.extraction",
                             "k^{ab}_t(x_1..x_n) = sum over Pi(t) of (k^a u k^b)_s(x_1, 1, ..., x_n, 1)",
                             json{{"max_n", small}});
    {
        const auto kab = boxconv(BoxVariant::box, ka, kb);
        for (std::size_t n = 1; n <= small; ++n)
            for (const auto& t : enumerate_trees(n)) {
                std::vector<Matrix> xs, padded;
                for (std::size_t i = 0; i < n; ++i) {
                    xs.push_back(rng.element(3, dim));
                    padded.push_back(xs.back());
                    padded.push_back(Matrix::identity(dim));
                }
                Matrix sum(dim);
                for (const auto& s : pi_set(t))
                    sum += alt_tree_eval(ka, kb, s, padded);
                extraction.expect(tree_eval(kab, t, xs) == sum, json{{"tree", t.str()}});
            }
    }

    r.elapsed_seconds = seconds_since(start);
    return r;
}

} // namespace freeconv
