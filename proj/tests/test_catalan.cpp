#include <doctest.h>

#include <set>

#include "freeconv/catalan.hpp"
#include "freeconv/error.hpp"

using namespace freeconv;

namespace {

const Tree L;
const Tree D = dot();

Tree W(const Tree& l, const Tree& r) { return Tree::wedge(l, r); }

CatalanObject obj(const std::string& fam, const std::string& text)
{
    return parse_object(parse_family(fam), text);
}

const char* kNineVertex = "(((|,|),((|,|),|)),(|,((|,(|,|)),|)))";

std::vector<CatalanObject> level(FamilyId fam, std::size_t n) { return enumerate_direct(fam, n); }

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

TEST_CASE("family names")
{
    CHECK(parse_family("Yp") == kYp);
    CHECK(parse_family("Y'") == kYp);
    CHECK(family_name(parse_family("NCP3'")) == "NCP3'");
    CHECK_THROWS_AS(parse_family("NCP9"), ParseError);
}

TEST_CASE("compose examples")
{
    auto one = obj("NCP1", "[[1]]");
    CHECK(catalan_compose(parse_family("NCP1"), one, one).str() == "[[1],[2,3]]");
    auto [a, b] = catalan_decompose(parse_family("NCP1"), obj("NCP1", "[[1],[2,3]]"));
    CHECK(a == one);
    CHECK(b == one);
    auto p = obj("NDPF", "[1]");
    CHECK(catalan_compose(parse_family("NDPF"), p, p).str() == "[1,2,2]");
    auto u = catalan_unit(FamilyId{});
    CHECK(std::get<Tree>(catalan_compose(FamilyId{}, u, u).payload) == D);
    CHECK_THROWS_AS(catalan_decompose(FamilyId{}, u), DomainError);
    CHECK_THROWS_AS(catalan_compose(FamilyId{}, one, u), DomainError);
}

TEST_CASE("every family has Catalan-many elements per level")
{
    const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (auto fam : all_families())
        for (std::size_t n = 0; n <= 7; ++n) {
            auto image = enumerate_family(fam, n);
            std::set<std::string> distinct;
            for (const auto& x : image) {
                CHECK(belongs(x));
                CHECK(x.size() == n);
                distinct.insert(x.str());
            }
            CHECK(distinct.size() == catalan[n]);
            if (n <= 6)
                CHECK(level(fam, n).size() == catalan[n]);
        }
}

TEST_CASE("compose and decompose are inverse")
{
    for (auto fam : families_with_reversed())
        for (std::size_t n = 1; n <= 6; ++n) {
            std::set<std::string> seen;
            for (const auto& z : level(fam, n)) {
                auto [x, y] = catalan_decompose(fam, z);
                CHECK(x.size() + y.size() + 1 == n);
                CHECK(catalan_compose(fam, x, y) == z);
            }
            for (std::size_t k = 0; k < n; ++k)
                for (const auto& x : level(fam, k))
                    for (const auto& y : level(fam, n - 1 - k)) {
                        auto z = catalan_compose(fam, x, y);
                        CHECK(belongs(z));
                        CHECK(z.size() == n);
                        seen.insert(z.str());
                        auto back = catalan_decompose(fam, z);
                        CHECK(back.first == x);
                        CHECK(back.second == y);
                    }
            CHECK(seen.size() == level(fam, n).size());
        }
}

TEST_CASE("isomorphisms")
{
    auto fams = all_families();
    for (auto a : fams)
        CHECK(catalan_iso(a, fams[1], catalan_unit(a)) == catalan_unit(fams[1]));
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) {
            CatalanObject x{FamilyId{}, t};
            CHECK(catalan_iso(FamilyId{}, FamilyId{}, x) == x);
            for (auto b : fams) {
                auto xb = catalan_iso(FamilyId{}, b, x);
                CHECK(xb.size() == n);
                CHECK(catalan_iso(b, FamilyId{}, xb) == x);
                for (auto c : {parse_family("NCP5"), parse_family("LST2"), parse_family("NDPF")})
                    CHECK(catalan_iso(b, c, xb) == catalan_iso(FamilyId{}, c, x));
            }
        }
}

TEST_CASE("phi golden values")
{
    CHECK(phi(D).str() == "[[1]]");
    CHECK(phi(W(D, L)).str() == "[[1],[2]]");
    CHECK(phi(W(L, D)).str() == "[[1,2]]");
    CHECK(phi(parse_tree(kNineVertex)).str() == "[[1],[2,4],[3],[5,6,9],[7,8]]");
    CHECK(phi(rmap(W(D, L))).str() == "[[1,3],[2],[4]]");
    CHECK(named_bijection("phi", obj("Y", "((|,|),|)")).str() == "[[1],[2]]");
}

TEST_CASE("phi agrees with the right-arm description")
{
    for (std::size_t n = 0; n <= 8; ++n)
        for (const auto& t : enumerate_trees(n))
            CHECK(phi(t) == phi_explicit(t));
}

TEST_CASE("phi turns grafting into products")
{
    for (std::size_t a = 0; a <= 5; ++a)
        for (std::size_t b = 0; a + b <= 5; ++b)
            for (const auto& s : enumerate_trees(a))
                for (const auto& t : enumerate_trees(b)) {
                    CHECK(phi(over(s, t)) == concat(phi(s), phi(t)));
                    if (a > 0 && b > 0)
                        CHECK(phi(under(s, t)) == right_merge(phi(s), phi(t)));
                }
}

TEST_CASE("kreweras via Catalan pairs equals the brute force")
{
    for (std::size_t n = 0; n <= 7; ++n)
        for (const auto& p : enumerate_ncp(n)) {
            CHECK(kreweras_via_catalan(p) == kreweras(p));
            CHECK(kreweras_inverse(kreweras_via_catalan(p)) == p);
        }
    auto k = named_bijection("kreweras_iso", obj("NCP2", "[[1,2],[3,6,8],[4],[5],[7]]"));
    CHECK(k.str() == "[[1],[2,8],[3,4,5],[6,7]]");
}

TEST_CASE("phi of R images")
{
    for (std::size_t n = 0; n <= 5; ++n) {
        std::set<std::string> lhs, rhs;
        for (const auto& t : enumerate_trees(n))
            lhs.insert(phi(rmap(t)).str());
        for (const auto& p : enumerate_ncp(n))
            rhs.insert(interleave(p, kreweras(p)).str());
        CHECK(lhs == rhs);
    }
    Tree t = W(D, L);
    CHECK_FALSE(phi(rmap(t)) == interleave(phi(t), kreweras(phi(t))));
}

TEST_CASE("named bijections")
{
    std::set<std::string> names;
    for (const auto& b : named_bijections()) {
        names.insert(b.name);
        for (std::size_t n = 0; n <= 6; ++n) {
            std::set<std::string> image;
            auto src = level(b.source, n);
            for (const auto& x : src) {
                auto y = named_bijection(b.name, x);
                CHECK(y.family == b.target);
                CHECK(belongs(y));
                CHECK(y.size() == n);
                image.insert(y.str());
            }
            CHECK(image.size() == src.size());
        }
    }
    CHECK(names.size() == 14);
    CHECK_THROWS_AS(named_bijection("nope", obj("Y", "|")), ParseError);
    CHECK_THROWS_AS(named_bijection("phi", obj("NCP1", "[[1]]")), DomainError);
}

TEST_CASE("concrete maps match their Catalan descriptions")
{
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            CHECK(mirror(mirror(t)) == t);
            CHECK(std::get<Tree>(catalan_iso(FamilyId{}, kYp, {FamilyId{}, t}).payload) == mirror(t));
        }
        for (const auto& x : enumerate_planar_trees(n)) {
            auto pt = [&](Family f) { return CatalanObject{FamilyId{f}, x}; };
            auto r = add_rightmost_leaves(x);
            auto l = add_leftmost_leaves(x);
            CHECK(std::get<PlanarTree>(catalan_iso({Family::PT1}, {Family::RST1}, pt(Family::PT1)).payload) == r);
            CHECK(std::get<PlanarTree>(catalan_iso({Family::PT2}, {Family::RST2}, pt(Family::PT2)).payload) == r);
            CHECK(std::get<PlanarTree>(catalan_iso({Family::PT2}, {Family::LST1}, pt(Family::PT2)).payload) == l);
            CHECK(std::get<PlanarTree>(catalan_iso({Family::PT1}, {Family::LST2}, pt(Family::PT1)).payload) == l);
        }
    }
}

TEST_CASE("several Catalan pairs give the Kreweras complement")
{
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& p : enumerate_ncp(n)) {
            auto k = kreweras(p);
            CHECK(std::get<Partition>(catalan_iso({Family::NCP3}, {Family::NCP4}, {FamilyId{Family::NCP3}, p}).payload) == k);
            CHECK(std::get<Partition>(catalan_iso({Family::NCP5}, {Family::NCP6}, {FamilyId{Family::NCP5}, p}).payload) == k);
        }
}

TEST_CASE("commuting diagrams")
{
    for (int id = 1; id <= 3; ++id)
        for (std::size_t n = 0; n <= 6; ++n) {
            auto r = verify_diagram(id, n);
            CHECK(r.pass);
            CHECK(r.checked == level(FamilyId{Family::PT1}, n).size());
        }
    auto corrupt = [](const CatalanObject& x) {
        auto p = std::get<Partition>(x.payload);
        return CatalanObject{x.family, kreweras(p)};
    };
    auto r = verify_diagram(1, 3, corrupt);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witness.empty());
    CHECK_THROWS_AS(verify_diagram(4, 1), DomainError);
}

TEST_CASE("parsing objects")
{
    CHECK(obj("PT1", "[[],[[]]]").size() == 3);
    CHECK(obj("RST1", "[[],[]]").size() == 1);
    CHECK_THROWS_AS(obj("RST1", "[[[]],[]]"), DomainError);
    CHECK_THROWS_AS(obj("LST1", "[[[],[]],[]]"), DomainError);
    CHECK_THROWS_AS(obj("NCP1", "[[1,3],[2,4]]"), DomainError);
    CHECK_THROWS_AS(obj("NDPF", "[1,3]"), DomainError);
    CHECK_THROWS_AS(obj("PT1", "[[],"), ParseError);
}
