#include "freeconv/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "freeconv/error.hpp"
#include "freeconv/freeprob.hpp"
#include "freeconv/json_io.hpp"
#include "freeconv/partition.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/verify.hpp"

namespace freeconv {

using nlohmann::json;

json object_to_json(const CatalanObject& x)
{
    if (const auto* t = std::get_if<Tree>(&x.payload))
        return t->str();
    return parse_json_text(x.str());
}

CatalanObject object_from_text(FamilyId fam, const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '"') {
        const json j = parse_json_text(text);
        if (!j.is_string())
            throw ParseError("expected a quoted tree string");
        return parse_object(fam, j.get<std::string>());
    }
    return parse_object(fam, text);
}

namespace {

struct Kind {
    const char* name;
    FamilyId family;
};

const Kind kKinds[] = {
    {"trees", FamilyId{Family::Y}}, {"ncp", FamilyId{Family::NCP1}},  {"pt", FamilyId{Family::PT1}},
    {"rst", FamilyId{Family::RST1}}, {"lst", FamilyId{Family::LST1}}, {"ndpf", FamilyId{Family::NDPF}},
};

FamilyId kind_family(const std::string& kind)
{
    for (const auto& k : kKinds)
        if (kind == k.name)
            return k.family;
    throw ParseError("unknown kind '" + kind + "'");
}

std::uint64_t parse_seed(const std::string& text)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoull(text, &used);
        if (used != text.size())
            throw ParseError("seed '" + text + "' is not an unsigned integer");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("seed '" + text + "' is not an unsigned integer");
    }
}

TruncSeries at_order(const TruncSeries& f, std::size_t order, const char* what)
{
    if (order > f.order())
        throw DomainError(std::string(what) + " has order " + std::to_string(f.order()) + ", below the requested " +
                          std::to_string(order));
    return f.truncated(order);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Looks for pairs with S_ab = S_b.S_a where neither sufficient condition
// holds. Small sparse entries make accidental coincidences likelier.
json search_commuting(std::size_t order, std::size_t dim, std::size_t trials, std::uint64_t seed)
{
    Rng rng(seed);
    json hits = json::array();
    std::size_t skipped = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto ka = random_gi(rng, dim, order, 1);
        const auto kb = random_gi(rng, dim, order, 1);
        const auto big_ka = strip_left_I(ka);
        bool ka_constant = true;
        for (std::size_t n = 1; n <= big_ka.order(); ++n)
            ka_constant = ka_constant && big_ka[n].is_zero();
        const auto big_mb = strip_left_I(moments_from_cumulants(kb));
        if (ka_constant || agree(right_I(big_mb), left_I(big_mb))) {
            ++skipped;
            continue;
        }
        const auto s_ab = s_transform(boxconv(BoxVariant::box, ka, kb));
        if (agree(s_ab, mul(s_transform(kb), s_transform(ka))))
            hits.push_back(json{{"trial", t}, {"ka", to_json(ka)}, {"kb", to_json(kb)}});
    }
    return json{{"order", order}, {"dim", dim}, {"trials", trials}, {"seed", seed},
                {"skipped_sufficient", skipped}, {"hits", hits}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_seed)
{
    CLI::App app{"Exact operator-valued S-transform and Catalan toolkit", "freeconv"};
    app.require_subcommand(1);

    std::string kind, format = "json", name, from, to, input, variant, f_path, g_path, suite = "all";
    std::string ka_path, kb_path, m_path, k_path, seed_text;
    std::size_t n = 0, order = 4, dim = 2, trials = 10;
    bool check = false;

    auto* enumerate = app.add_subcommand("enumerate", "list a Catalan family at one level");
    enumerate->add_option("--kind", kind, "trees|ncp|pt|rst|lst|ndpf")->required();
    enumerate->add_option("--n", n, "level")->required();
    enumerate->add_option("--format", format, "json|ascii|count")->check(CLI::IsMember({"json", "ascii", "count"}));

    auto* map = app.add_subcommand("map", "apply a named bijection or a Catalan isomorphism");
    auto* map_name = map->add_option("--name", name, "named bijection");
    auto* map_from = map->add_option("--from", from, "source family");
    auto* map_to = map->add_option("--to", to, "target family");
    map->add_option("--input", input, "object text")->required();
    map_name->excludes(map_from)->excludes(map_to);
    map_from->needs(map_to);
    map_to->needs(map_from);

    auto* rmap_cmd = app.add_subcommand("rmap", "size-doubling tree map R");
    rmap_cmd->add_option("--input", input, "tree text")->required();

    auto* kreweras_cmd = app.add_subcommand("kreweras", "Kreweras complement of a noncrossing partition");
    kreweras_cmd->add_option("--input", input, "partition JSON")->required();
    kreweras_cmd->add_option("--format", format, "json|ascii")->check(CLI::IsMember({"json", "ascii"}));

    auto* convolve = app.add_subcommand("convolve", "boxed convolution of two series");
    convolve->add_option("--variant", variant, "box|line|red|redred")->required();
    convolve->add_option("--f", f_path, "series JSON file")->required();
    convolve->add_option("--g", g_path, "series JSON file")->required();
    convolve->add_option("--order", order, "truncation order of the inputs")->required();

    auto* stransform = app.add_subcommand("stransform", "S-transform of a series in G^I");
    auto* utransform = app.add_subcommand("utransform", "U-transform of a series in G^I");
    auto* sprime = app.add_subcommand("sprime", "S'-transform of a series in G^I");
    for (auto* sub : {stransform, utransform, sprime})
        sub->add_option("--f", f_path, "series JSON file")->required();

    auto* cumulants = app.add_subcommand("cumulants", "cumulant series from a moment series");
    cumulants->add_option("--moments", m_path, "moment series JSON file")->required();
    auto* moments = app.add_subcommand("moments", "moment series from a cumulant series");
    moments->add_option("--cumulants", k_path, "cumulant series JSON file")->required();

    auto* product = app.add_subcommand("product", "cumulants of the product of two free variables");
    product->add_option("--ka", ka_path, "cumulant series of a")->required();
    product->add_option("--kb", kb_path, "cumulant series of b")->required();
    product->add_option("--order", order, "order")->required();
    product->add_flag("--check", check, "compare with the tree-sum oracle");

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", suite, "transforms|freeprob|bijections|operad|all")
        ->check(CLI::IsMember(suite_names()));
    auto* search = app.add_subcommand("search-commuting", "random search for S_ab = S_b S_a without a known reason");
    for (auto* sub : {verify, search}) {
        sub->add_option("--order", order, "series order")->check(CLI::Range(2, 8));
        sub->add_option("--dim", dim, "matrix size d")->check(CLI::Range(1, 4));
        sub->add_option("--trials", trials, "random instances")->check(CLI::Range(1, 100000));
        sub->add_option("--seed", seed_text, "seed, overrides FREECONV_SEED");
    }

    std::vector<const char*> argv{"freeconv"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) {
            const auto objs = enumerate_direct(kind_family(kind), n);
            if (format == "count") {
                out << objs.size() << '\n';
            } else if (format == "ascii") {
                for (const auto& x : objs) {
                    if (const auto* p = std::get_if<Partition>(&x.payload))
                        out << p->str() << '\n' << render_ascii(*p) << '\n';
                    else
                        out << x.str() << '\n';
                }
            } else {
                json arr = json::array();
                for (const auto& x : objs)
                    arr.push_back(object_to_json(x));
                out << arr.dump() << '\n';
            }
            return kExitOk;
        }
        if (map->parsed()) {
            if (name.empty() && from.empty())
                throw ParseError("map needs --name or --from/--to");
            CatalanObject result;
            if (!name.empty()) {
                const auto& b = find_bijection(name);
                result = named_bijection(name, object_from_text(b.source, input));
            } else {
                const FamilyId src = parse_family(from);
                result = catalan_iso(src, parse_family(to), object_from_text(src, input));
            }
            out << object_to_json(result).dump() << '\n';
            return kExitOk;
        }
        if (rmap_cmd->parsed()) {
            const auto t = object_from_text(FamilyId{Family::Y}, input);
            out << json(rmap(std::get<Tree>(t.payload)).str()).dump() << '\n';
            return kExitOk;
        }
        if (kreweras_cmd->parsed()) {
            const Partition p = parse_partition(input);
            const Partition k = kreweras(p);
            if (format == "ascii")
                out << render_ascii(k);
            else
                out << k.str() << '\n';
            return kExitOk;
        }
        if (convolve->parsed()) {
            const auto f = at_order(read_series_file(f_path), order, "--f");
            const auto g = at_order(read_series_file(g_path), order, "--g");
            print_json(out, to_json(boxconv(parse_box_variant(variant), f, g)));
            return kExitOk;
        }
        if (stransform->parsed() || utransform->parsed() || sprime->parsed()) {
            const auto f = read_series_file(f_path);
            const auto r = stransform->parsed() ? s_transform(f) : utransform->parsed() ? u_transform(f) : s_prime(f);
            print_json(out, to_json(r));
            return kExitOk;
        }
        if (cumulants->parsed()) {
            print_json(out, to_json(cumulants_from_moments(read_series_file(m_path))));
            return kExitOk;
        }
        if (moments->parsed()) {
            print_json(out, to_json(moments_from_cumulants(read_series_file(k_path))));
            return kExitOk;
        }
        if (product->parsed()) {
            const auto ka = at_order(read_series_file(ka_path), order, "--ka");
            const auto kb = at_order(read_series_file(kb_path), order, "--kb");
            if (!in_gi(ka) || !in_gi(kb))
                throw DomainError("product: cumulant series must lie in G^I");
            const auto kab = boxconv(BoxVariant::box, ka, kb);
            if (!check) {
                print_json(out, to_json(kab));
                return kExitOk;
            }
            Check c;
            c.id = "prop.kab";
            c.statement = "k^{ab} from the tree-sum oracle equals k^a box k^b";
            c.expect_agree(product_cumulants_oracle(ka, kb, order), kab, order, json::object());
            json j{{"kab", to_json(kab)}, {"check", {{"id", c.id}, {"status", c.pass ? "pass" : "fail"}}}};
            if (c.witness)
                j["check"]["witness"] = *c.witness;
            print_json(out, j);
            return c.pass ? kExitOk : kExitVerifyFail;
        }

        std::uint64_t seed = 0;
        if (!seed_text.empty())
            seed = parse_seed(seed_text);
        else if (env_seed && !env_seed->empty())
            seed = parse_seed(*env_seed);
        if (verify->parsed()) {
            const Report r = run_suite(suite, order, dim, trials, seed);
            print_json(out, r.to_json());
            return r.all_pass() ? kExitOk : kExitVerifyFail;
        }
        if (search->parsed()) {
            print_json(out, search_commuting(order, dim, trials, seed));
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::logic_error& e) {
        // Two computation routes disagreed: a failed internal verification.
        err << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace freeconv
