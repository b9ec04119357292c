#include "freeconv/verify.hpp"

#include <chrono>
#include <set>

#include "freeconv/catalan.hpp"
#include "freeconv/error.hpp"
#include "freeconv/freeprob.hpp"
#include "freeconv/operad.hpp"
#include "freeconv/partition.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/treeeval.hpp"

namespace freeconv {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Report make_report(std::string suite)
{
    Report r;
    r.suite = std::move(suite);
    return r;
}

std::vector<FamilyId> families_with_reversed()
{
    std::vector<FamilyId> out;
    for (auto f : all_families()) {
        out.push_back(f);
        if (!f.reversed && f.base != Family::Y)
            out.push_back(FamilyId{f.base, true});
    }
    return out;
}

} // namespace

Report verify_catalan_counts(std::size_t max_n)
{
    static const std::size_t kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    if (max_n > 10)
        throw DomainError("verify_catalan_counts: max_n is at most 10");
    const auto start = Clock::now();
    Report r = make_report("catalan-counts");
    auto& trees = r.add("count.trees", "|Y_n| = C_n", json{{"max_n", max_n}});
    auto& ncp = r.add("count.ncp", "|NCP_n| = C_n", json{{"max_n", max_n}});
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::size_t t = enumerate_trees(n).size();
        const std::size_t p = enumerate_ncp(n).size();
        trees.expect(t == kCatalan[n], json{{"n", n}, {"count", t}, {"expected", kCatalan[n]}});
        ncp.expect(p == kCatalan[n], json{{"n", n}, {"count", p}, {"expected", kCatalan[n]}});
    }
    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_phi_golden()
{
    const auto start = Clock::now();
    Report r = make_report("phi-golden");
    struct Golden {
        const char* tree;
        const char* partition;
    };
    static const Golden kValues[] = {
        {"(|,|)", "[[1]]"},
        {"((|,|),|)", "[[1],[2]]"},
        {"(|,(|,|))", "[[1,2]]"},
        {"(((|,|),((|,|),|)),(|,((|,(|,|)),|)))", "[[1],[2,4],[3],[5,6,9],[7,8]]"},
    };
    auto& golden = r.add("phi.golden", "phi on the first values and the nine-vertex tree");
    for (const auto& g : kValues) {
        const std::string got = phi(parse_tree(g.tree)).str();
        golden.expect(got == g.partition, json{{"tree", g.tree}, {"expected", g.partition}, {"got", got}});
    }
    auto& rimage = r.add("phi.rmap_example", "phi(R((., |))) = [[1,3],[2],[4]]");
    const std::string got = phi(rmap(wedge(dot(), Tree::leaf()))).str();
    rimage.expect(got == "[[1,3],[2],[4]]", json{{"got", got}});
    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_kreweras(std::size_t max_n)
{
    const auto start = Clock::now();
    Report r = make_report("kreweras");
    auto& dual = r.add("kreweras.dual_path", "brute-force Kreweras = the Catalan isomorphism NCP2 -> NCP1",
                       json{{"max_n", max_n}});
    for (std::size_t n = 0; n <= max_n; ++n)
        for (const auto& p : enumerate_ncp(n)) {
            const Partition a = kreweras(p);
            const Partition b = kreweras_via_catalan(p);
            if (!(a == b))
                dual.fail(json{{"partition", p.str()}, {"brute_force", a.str()}, {"catalan", b.str()}});
        }
    auto& example = r.add("kreweras.example", "K([[1,2],[3,6,8],[4],[5],[7]]) = [[1],[2,8],[3,4,5],[6,7]]");
    const Partition p = parse_partition("[[1,2],[3,6,8],[4],[5],[7]]");
    const std::string expected = "[[1],[2,8],[3,4,5],[6,7]]";
    const std::string brute = kreweras(p).str();
    const std::string iso = kreweras_via_catalan(p).str();
    example.expect(brute == expected && iso == expected,
                   json{{"expected", expected}, {"brute_force", brute}, {"catalan", iso}});
    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_phi_rmap(std::size_t max_n)
{
    const auto start = Clock::now();
    Report r = make_report("phi-rmap");
    auto& sets = r.add("phi.rmap_image", "{phi(R(t)) : t in Y_n} = {P u K(P) : P in NCP_n}", json{{"max_n", max_n}});
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::set<std::string> lhs, rhs;
        for (const auto& t : enumerate_trees(n))
            lhs.insert(phi(rmap(t)).str());
        for (const auto& p : enumerate_ncp(n))
            rhs.insert(interleave(p, kreweras(p)).str());
        sets.expect(lhs == rhs, json{{"n", n}, {"lhs_size", lhs.size()}, {"rhs_size", rhs.size()}});
    }
    auto& negative = r.add("phi.rmap_not_pointwise", "some t in Y_2 has phi(R(t)) != phi(t) u K(phi(t))");
    bool found = false;
    json example;
    for (const auto& t : enumerate_trees(2)) {
        const Partition lhs = phi(rmap(t));
        const Partition rhs = interleave(phi(t), kreweras(phi(t)));
        if (!(lhs == rhs) && !found) {
            found = true;
            example = json{{"tree", t.str()}, {"phi_R", lhs.str()}, {"interleaved", rhs.str()}};
        }
    }
    negative.expect(found, json{{"reason", "no tree of size 2 separates the two sides"}});
    if (found)
        negative.params["example"] = example;
    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_bijections(std::size_t max_n)
{
    const auto start = Clock::now();
    Report r = make_report("bijections");
    const json p{{"max_n", max_n}};

    auto& diagrams = r.add("catalan.diagrams", "the three commuting squares of Catalan maps", p);
    for (int id = 1; id <= 3; ++id)
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto d = verify_diagram(id, n);
            if (!d.pass)
                diagrams.fail(json{{"diagram", id}, {"n", n}, {"witness", d.witness}});
        }

    auto& roundtrip = r.add("family.roundtrip", "compose and decompose are inverse in every family", p);
    for (auto fam : families_with_reversed())
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::set<std::string> seen;
            const auto lvl = enumerate_direct(fam, n);
            for (const auto& z : lvl) {
                const auto [x, y] = catalan_decompose(fam, z);
                if (!(catalan_compose(fam, x, y) == z) || x.size() + y.size() + 1 != n)
                    roundtrip.fail(json{{"family", family_name(fam)}, {"object", z.str()}});
            }
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& x : enumerate_direct(fam, k))
                    for (const auto& y : enumerate_direct(fam, n - 1 - k)) {
                        const auto z = catalan_compose(fam, x, y);
                        seen.insert(z.str());
                        const auto back = catalan_decompose(fam, z);
                        if (!belongs(z) || !(back.first == x) || !(back.second == y))
                            roundtrip.fail(json{{"family", family_name(fam)}, {"x", x.str()}, {"y", y.str()}});
                    }
            if (seen.size() != lvl.size())
                roundtrip.fail(json{{"family", family_name(fam)}, {"n", n}, {"images", seen.size()},
                                    {"level", lvl.size()}});
        }

    auto& named = r.add("named.bijective", "every named map is a size-preserving bijection onto its target", p);
    for (const auto& b : named_bijections())
        for (std::size_t n = 0; n <= max_n; ++n) {
            const auto src = enumerate_direct(b.source, n);
            std::set<std::string> image;
            for (const auto& x : src) {
                const auto y = named_bijection(b.name, x);
                if (!(y.family == b.target) || !belongs(y) || y.size() != n)
                    named.fail(json{{"bijection", b.name}, {"input", x.str()}, {"output", y.str()}});
                image.insert(y.str());
            }
            const std::size_t target = enumerate_direct(b.target, n).size();
            if (image.size() != src.size() || image.size() != target)
                named.fail(json{{"bijection", b.name}, {"n", n}, {"images", image.size()}, {"level", target}});
        }

    r.elapsed_seconds = seconds_since(start);
    return r;
}

Report verify_operad(std::size_t max_n, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    if (dim < 1 || trials < 1)
        throw DomainError("verify: needs dim >= 1 and trials >= 1");
    constexpr std::int64_t kBound = 2;
    const auto start = Clock::now();
    Report r = make_report("operad");
    r.seed = seed;
    r.order = max_n;
    r.dim = dim;
    r.trials = trials;
    Rng rng(seed);
    const std::size_t order = std::max<std::size_t>(max_n, 5);
    const json p{{"max_n", max_n}, {"dim", dim}, {"trials", trials}};

    auto& eval = r.add("operad.tree_eval", "f(Phi_f(t)(x_1 | ... | x_n)) = f_t(x_1..x_n) for t in Y_n", p);
    auto& dup = r.add("operad.duplicial", "the three duplicial relations hold on random tensor words", p);
    auto& generic = r.add("operad.duplicial.generic",
                          "the nested-action relation fails for some series outside I.Mult[[B]]", p);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto f = random_gi(rng, dim, order, kBound);
        for (std::size_t n = 0; n <= max_n; ++n)
            for (const auto& tree : enumerate_trees(n)) {
                std::vector<Matrix> xs;
                for (std::size_t i = 0; i < n; ++i)
                    xs.push_back(rng.element(3, dim));
                if (!(operad_eval(f, tree, xs) == tree_eval(f, tree, xs)))
                    eval.fail(json{{"trial", t}, {"tree", tree.str()}});
            }
        for (int w = 0; w < 4; ++w) {
            const auto u = random_tensor_element(rng, dim, 2, kBound);
            const auto v = random_tensor_element(rng, dim, 2, kBound);
            const auto x = random_tensor_element(rng, dim, 1, kBound);
            const auto c = check_duplicial(f, u, v, x);
            dup.expect(c.all(), json{{"trial", t},
                                     {"nested_action", c.nested_action},
                                     {"associative", c.associative},
                                     {"mixed", c.mixed}});
        }
    }
    bool some_fail = false;
    for (int attempt = 0; attempt < 8 && !some_fail; ++attempt) {
        const auto h = random_series(rng, dim, order, kBound);
        const auto u = random_tensor_element(rng, dim, 2, kBound);
        const auto v = random_tensor_element(rng, dim, 2, kBound);
        const auto x = random_tensor_element(rng, dim, 1, kBound);
        some_fail = !check_duplicial(h, u, v, x).nested_action;
    }
    generic.expect(some_fail, json{{"reason", "no generic series broke the relation"}});

    r.elapsed_seconds = seconds_since(start);
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"transforms", "freeprob", "bijections", "operad", "all"};
    return names;
}

Report run_suite(const std::string& name, std::size_t order, std::size_t dim, std::size_t trials,
                 std::uint64_t seed)
{
    const auto start = Clock::now();
    Report r;
    if (name == "transforms") {
        r = verify_transform_identities(order, dim, trials, seed);
    } else if (name == "freeprob") {
        r = verify_freeprob_identities(order, dim, trials, seed);
        r.append(verify_freeprob_structure(order, dim, seed + 2));
    } else if (name == "bijections") {
        r = verify_catalan_counts();
        r.append(verify_phi_golden());
        r.append(verify_kreweras());
        r.append(verify_phi_rmap());
        r.append(verify_bijections());
    } else if (name == "operad") {
        r = verify_operad(5, dim, trials, seed);
    } else if (name == "all") {
        r = run_suite("bijections", order, dim, trials, seed);
        r.append(run_suite("transforms", order, dim, trials, seed));
        r.append(run_suite("freeprob", order, dim, trials, seed));
        r.append(run_suite("operad", order, dim, trials, seed));
    } else {
        throw ParseError("unknown suite '" + name + "'");
    }
    r.suite = name;
    r.seed = seed;
    r.order = order;
    r.dim = dim;
    r.trials = trials;
    r.elapsed_seconds = seconds_since(start);
    return r;
}

} // namespace freeconv
