#include "freeconv/catalan.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include <json.hpp>

#include "freeconv/error.hpp"

namespace freeconv {

std::size_t PlanarTree::edges() const
{
    std::size_t e = children.size();
    for (const auto& c : children)
        e += c.edges();
    return e;
}

std::size_t PlanarTree::leaves() const
{
    if (children.empty())
        return 1;
    std::size_t l = 0;
    for (const auto& c : children)
        l += c.leaves();
    return l;
}

std::string PlanarTree::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < children.size(); ++i)
        s += (i ? "," : "") + children[i].str();
    return s + "]";
}

namespace {

nlohmann::json parse_json(const std::string& text, const char* what)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

PlanarTree planar_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw ParseError("planar tree: expected nested arrays");
    PlanarTree t;
    for (const auto& c : j)
        t.children.push_back(planar_from_json(c));
    return t;
}

} // namespace

PlanarTree parse_planar_tree(const std::string& text)
{
    return planar_from_json(parse_json(text, "planar tree"));
}

bool ParkingFn::valid() const
{
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1 || values[i] > static_cast<int>(i + 1))
            return false;
        if (i > 0 && values[i] < values[i - 1])
            return false;
    }
    return true;
}

std::string ParkingFn::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i)
        s += (i ? "," : "") + std::to_string(values[i]);
    return s + "]";
}

ParkingFn parse_parking_fn(const std::string& text)
{
    auto j = parse_json(text, "parking function");
    if (!j.is_array())
        throw ParseError("parking function: expected an integer array");
    ParkingFn p;
    for (const auto& e : j) {
        if (!e.is_number_integer())
            throw ParseError("parking function: expected an integer array");
        p.values.push_back(e.get<int>());
    }
    if (!p.valid())
        throw DomainError("not a non-decreasing parking function: " + p.str());
    return p;
}

namespace {

struct FamilyInfo {
    Family base;
    const char* name;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Y, "Y"},       {Family::NCP1, "NCP1"}, {Family::NCP2, "NCP2"}, {Family::NCP3, "NCP3"},
    {Family::NCP4, "NCP4"}, {Family::NCP5, "NCP5"}, {Family::NCP6, "NCP6"}, {Family::NCP7, "NCP7"},
    {Family::NCP8, "NCP8"}, {Family::PT1, "PT1"},   {Family::PT2, "PT2"},   {Family::RST1, "RST1"},
    {Family::RST2, "RST2"}, {Family::LST1, "LST1"}, {Family::LST2, "LST2"}, {Family::NDPF, "NDPF"},
};

bool is_ncp(Family f) { return f >= Family::NCP1 && f <= Family::NCP8; }
bool is_pt(Family f) { return f == Family::PT1 || f == Family::PT2; }
bool is_rst(Family f) { return f == Family::RST1 || f == Family::RST2; }

} // namespace

FamilyId parse_family(const std::string& name)
{
    if (name == "Yp")
        return kYp;
    std::string base = name;
    bool reversed = false;
    if (!base.empty() && base.back() == '\'') {
        reversed = true;
        base.pop_back();
    }
    for (const auto& f : kFamilies)
        if (base == f.name)
            return FamilyId{f.base, reversed};
    throw ParseError("unknown Catalan family '" + name + "'");
}

std::string family_name(FamilyId f)
{
    if (f == kYp)
        return "Yp";
    for (const auto& info : kFamilies)
        if (info.base == f.base)
            return std::string(info.name) + (f.reversed ? "'" : "");
    return "?";
}

std::vector<FamilyId> all_families()
{
    std::vector<FamilyId> out;
    for (const auto& f : kFamilies)
        out.push_back(FamilyId{f.base, false});
    out.push_back(kYp);
    return out;
}

std::size_t CatalanObject::size() const
{
    return std::visit(
        [this](const auto& p) -> std::size_t {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Tree>)
                return p.size();
            else if constexpr (std::is_same_v<T, Partition>)
                return p.size();
            else if constexpr (std::is_same_v<T, PlanarTree>)
                return is_pt(family.base) ? p.edges() : p.leaves() - 1;
            else
                return p.values.size();
        },
        payload);
}

std::string CatalanObject::str() const
{
    return std::visit([](const auto& p) { return p.str(); }, payload);
}

namespace {

bool schroeder_shape(const PlanarTree& t, bool right)
{
    if (t.children.empty())
        return true;
    if (t.children.size() < 2)
        return false;
    const auto& marked = right ? t.children.back() : t.children.front();
    if (!marked.children.empty())
        return false;
    for (const auto& c : t.children)
        if (!schroeder_shape(c, right))
            return false;
    return true;
}

} // namespace

bool belongs(const CatalanObject& x)
{
    Family f = x.family.base;
    if (f == Family::Y)
        return std::holds_alternative<Tree>(x.payload);
    if (is_ncp(f))
        return std::holds_alternative<Partition>(x.payload) && std::get<Partition>(x.payload).is_noncrossing();
    if (f == Family::NDPF)
        return std::holds_alternative<ParkingFn>(x.payload) && std::get<ParkingFn>(x.payload).valid();
    if (!std::holds_alternative<PlanarTree>(x.payload))
        return false;
    if (is_pt(f))
        return true;
    return schroeder_shape(std::get<PlanarTree>(x.payload), is_rst(f));
}

namespace {

const Partition kBar = Partition::full(1);

// Merges where an empty operand yields the other one.
Partition rm(const Partition& p, const Partition& q)
{
    if (p.empty())
        return q;
    if (q.empty())
        return p;
    return right_merge(p, q);
}

Partition lm(const Partition& p, const Partition& q)
{
    if (p.empty())
        return q;
    if (q.empty())
        return p;
    return left_merge(p, q);
}

Partition ncp_compose(Family f, const Partition& p, const Partition& q)
{
    switch (f) {
    case Family::NCP1:
        return concat(p, rm(kBar, q));
    case Family::NCP2:
        return concat(lm(p, kBar), q);
    case Family::NCP3:
        return lm(concat(kBar, p), q);
    case Family::NCP4:
        return concat(rm(kBar, p), q);
    case Family::NCP5:
        return concat(p, lm(q, kBar));
    case Family::NCP6:
        return rm(p, concat(q, kBar));
    case Family::NCP7:
        return ncp_compose(Family::NCP4, kreweras_via_catalan(p), q);
    case Family::NCP8:
        return ncp_compose(Family::NCP1, p, kreweras_via_catalan(q));
    default:
        throw DomainError("not a partition family");
    }
}

std::pair<Partition, Partition> ncp_decompose(Family f, const Partition& z)
{
    const int n = static_cast<int>(z.size());
    auto minmax = [&](int i) {
        auto b = z.block_containing(i);
        return std::pair<int, int>{b.front(), b.back()};
    };
    switch (f) {
    case Family::NCP1: {
        int m = minmax(n).first;
        return {restrict_range(z, 1, m - 1), restrict_range(z, m + 1, n)};
    }
    case Family::NCP2: {
        int m = minmax(1).second;
        return {restrict_range(z, 1, m - 1), restrict_range(z, m + 1, n)};
    }
    case Family::NCP3: {
        auto b = z.block_containing(1);
        if (b.size() == 1)
            return {restrict_range(z, 2, n), Partition()};
        int m = b[1];
        return {restrict_range(z, 2, m - 1), restrict_range(z, m, n)};
    }
    case Family::NCP4: {
        int m = minmax(1).second;
        return {restrict_range(z, 2, m), restrict_range(z, m + 1, n)};
    }
    case Family::NCP5: {
        int m = minmax(n).first;
        return {restrict_range(z, 1, m - 1), restrict_range(z, m, n - 1)};
    }
    case Family::NCP6: {
        auto b = z.block_containing(n);
        if (b.size() == 1)
            return {Partition(), restrict_range(z, 1, n - 1)};
        int p = b[b.size() - 2];
        return {restrict_range(z, 1, p), restrict_range(z, p + 1, n - 1)};
    }
    case Family::NCP7: {
        auto [p, q] = ncp_decompose(Family::NCP4, z);
        return {kreweras_inverse(p), q};
    }
    case Family::NCP8: {
        auto [p, q] = ncp_decompose(Family::NCP1, z);
        return {p, kreweras_inverse(q)};
    }
    default:
        throw DomainError("not a partition family");
    }
}

const PlanarTree kVertex{};

std::vector<PlanarTree> inner_right(const PlanarTree& t)
{
    if (t.children.empty())
        return {};
    return {t.children.begin(), t.children.end() - 1};
}

std::vector<PlanarTree> inner_left(const PlanarTree& t)
{
    if (t.children.empty())
        return {};
    return {t.children.begin() + 1, t.children.end()};
}

PlanarTree planar_compose(Family f, const PlanarTree& s, const PlanarTree& t)
{
    PlanarTree out;
    auto& c = out.children;
    switch (f) {
    case Family::PT1:
        c.push_back(s);
        c.insert(c.end(), t.children.begin(), t.children.end());
        break;
    case Family::PT2:
        c = s.children;
        c.push_back(t);
        break;
    case Family::RST1: {
        c.push_back(s);
        auto in = inner_right(t);
        c.insert(c.end(), in.begin(), in.end());
        c.push_back(kVertex);
        break;
    }
    case Family::RST2:
        c = inner_right(s);
        c.push_back(t);
        c.push_back(kVertex);
        break;
    case Family::LST1: {
        c.push_back(kVertex);
        auto in = inner_left(s);
        c.insert(c.end(), in.begin(), in.end());
        c.push_back(t);
        break;
    }
    case Family::LST2: {
        c.push_back(kVertex);
        c.push_back(s);
        auto in = inner_left(t);
        c.insert(c.end(), in.begin(), in.end());
        break;
    }
    default:
        throw DomainError("not a planar tree family");
    }
    return out;
}

PlanarTree make_node(std::vector<PlanarTree> children) { return PlanarTree{std::move(children)}; }

std::pair<PlanarTree, PlanarTree> planar_decompose(Family f, const PlanarTree& z)
{
    const auto& c = z.children;
    const std::size_t m = c.size();
    switch (f) {
    case Family::PT1:
        return {c.front(), make_node({c.begin() + 1, c.end()})};
    case Family::PT2:
        return {make_node({c.begin(), c.end() - 1}), c.back()};
    case Family::RST1: {
        PlanarTree t = m == 2 ? kVertex : make_node({c.begin() + 1, c.end()});
        return {c.front(), t};
    }
    case Family::RST2: {
        std::vector<PlanarTree> rest(c.begin(), c.end() - 2);
        rest.push_back(kVertex);
        PlanarTree s = m == 2 ? kVertex : make_node(std::move(rest));
        return {s, c[m - 2]};
    }
    case Family::LST1: {
        PlanarTree s = m == 2 ? kVertex : make_node({c.begin(), c.end() - 1});
        return {s, c.back()};
    }
    case Family::LST2: {
        std::vector<PlanarTree> rest{kVertex};
        rest.insert(rest.end(), c.begin() + 2, c.end());
        PlanarTree t = m == 2 ? kVertex : make_node(std::move(rest));
        return {c[1], t};
    }
    default:
        throw DomainError("not a planar tree family");
    }
}

ParkingFn parking_compose(const ParkingFn& u, const ParkingFn& v)
{
    ParkingFn out = u;
    const int k = static_cast<int>(u.values.size());
    out.values.push_back(k + 1);
    for (int x : v.values)
        out.values.push_back(x + k);
    return out;
}

std::pair<ParkingFn, ParkingFn> parking_decompose(const ParkingFn& a)
{
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] == static_cast<int>(i + 1))
            fixed = i;
    const int k = static_cast<int>(fixed);
    ParkingFn u, v;
    u.values.assign(a.values.begin(), a.values.begin() + k);
    for (std::size_t i = fixed + 1; i < a.values.size(); ++i)
        v.values.push_back(a.values[i] - k);
    return {u, v};
}

void check_member(FamilyId fam, const CatalanObject& x)
{
    if (!(x.family == fam))
        throw DomainError("object of family " + family_name(x.family) + " used as " + family_name(fam));
    if (!belongs(x))
        throw DomainError("object " + x.str() + " is not an element of " + family_name(fam));
}

CatalanObject raw_compose(Family f, const CatalanObject& x, const CatalanObject& y)
{
    FamilyId fam{f, false};
    if (f == Family::Y)
        return {fam, Tree::wedge(std::get<Tree>(x.payload), std::get<Tree>(y.payload))};
    if (is_ncp(f))
        return {fam, ncp_compose(f, std::get<Partition>(x.payload), std::get<Partition>(y.payload))};
    if (f == Family::NDPF)
        return {fam, parking_compose(std::get<ParkingFn>(x.payload), std::get<ParkingFn>(y.payload))};
    return {fam, planar_compose(f, std::get<PlanarTree>(x.payload), std::get<PlanarTree>(y.payload))};
}

std::pair<CatalanObject, CatalanObject> raw_decompose(Family f, const CatalanObject& z)
{
    FamilyId fam{f, false};
    auto wrap = [&](auto pair) {
        return std::pair<CatalanObject, CatalanObject>{CatalanObject{fam, std::move(pair.first)},
                                                       CatalanObject{fam, std::move(pair.second)}};
    };
    if (f == Family::Y)
        return wrap(unwedge(std::get<Tree>(z.payload)));
    if (is_ncp(f))
        return wrap(ncp_decompose(f, std::get<Partition>(z.payload)));
    if (f == Family::NDPF)
        return wrap(parking_decompose(std::get<ParkingFn>(z.payload)));
    return wrap(planar_decompose(f, std::get<PlanarTree>(z.payload)));
}

} // namespace

CatalanObject catalan_unit(FamilyId fam)
{
    Family f = fam.base;
    if (f == Family::Y)
        return {fam, Tree()};
    if (is_ncp(f))
        return {fam, Partition()};
    if (f == Family::NDPF)
        return {fam, ParkingFn{}};
    return {fam, PlanarTree{}};
}

CatalanObject catalan_compose(FamilyId fam, const CatalanObject& x, const CatalanObject& y)
{
    check_member(fam, x);
    check_member(fam, y);
    CatalanObject z = fam.reversed ? raw_compose(fam.base, y, x) : raw_compose(fam.base, x, y);
    z.family = fam;
    return z;
}

std::pair<CatalanObject, CatalanObject> catalan_decompose(FamilyId fam, const CatalanObject& z)
{
    check_member(fam, z);
    if (z.size() == 0)
        throw DomainError("catalan_decompose: the unit has no decomposition");
    auto [a, b] = raw_decompose(fam.base, z);
    a.family = fam;
    b.family = fam;
    if (fam.reversed)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

namespace {

CatalanObject iso_rec(FamilyId src, FamilyId dst, const CatalanObject& x)
{
    if (x.size() == 0)
        return catalan_unit(dst);
    static std::mutex mu;
    static std::unordered_map<std::string, CatalanObject> memo;
    std::string key = family_name(src) + ">" + family_name(dst) + ":" + x.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
    }
    auto [a, b] = catalan_decompose(src, x);
    CatalanObject y = catalan_compose(dst, iso_rec(src, dst, a), iso_rec(src, dst, b));
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::move(key), y);
    return y;
}

} // namespace

CatalanObject catalan_iso(FamilyId src, FamilyId dst, const CatalanObject& x)
{
    check_member(src, x);
    if (src == dst)
        return x;
    return iso_rec(src, dst, x);
}

std::vector<CatalanObject> enumerate_family(FamilyId fam, std::size_t n)
{
    std::vector<CatalanObject> out;
    for (const auto& t : enumerate_trees(n))
        out.push_back(catalan_iso(FamilyId{}, fam, CatalanObject{FamilyId{}, t}));
    return out;
}

CatalanObject parse_object(FamilyId fam, const std::string& text)
{
    CatalanObject x = catalan_unit(fam);
    Family f = fam.base;
    if (f == Family::Y)
        x.payload = parse_tree(text);
    else if (is_ncp(f))
        x.payload = parse_partition(text);
    else if (f == Family::NDPF)
        x.payload = parse_parking_fn(text);
    else
        x.payload = parse_planar_tree(text);
    if (!belongs(x))
        throw DomainError("input " + text + " is not an element of " + family_name(fam));
    return x;
}

const std::vector<NamedBijection>& named_bijections()
{
    static const std::vector<NamedBijection> table = {
        {"phi", {Family::Y}, {Family::NCP1}},
        {"phi_inv", {Family::NCP1}, {Family::Y}},
        {"psi", {Family::Y}, {Family::NCP2}},
        {"kreweras_iso", {Family::NCP2}, {Family::NCP1}},
        {"rot", {Family::PT1}, {Family::Y}},
        {"mirror", {Family::Y}, kYp},
        {"edelman", {Family::Y}, {Family::NCP3}},
        {"prodinger", {Family::PT1}, {Family::NCP4}},
        {"dershowitz_zaks", {Family::PT2}, {Family::NCP2}},
        {"gaps_rst", {Family::RST1}, {Family::NCP1}},
        {"gaps_lst", {Family::LST1}, {Family::NCP3}},
        {"bernardi", {Family::NCP7}, {Family::PT1}},
        {"add_right", {Family::PT1}, {Family::RST1}},
        {"add_left", {Family::PT2}, {Family::LST1}},
    };
    return table;
}

const NamedBijection& find_bijection(const std::string& name)
{
    for (const auto& b : named_bijections())
        if (b.name == name)
            return b;
    throw ParseError("unknown bijection '" + name + "'");
}

CatalanObject named_bijection(const std::string& name, const CatalanObject& x)
{
    const auto& b = find_bijection(name);
    if (!(x.family == b.source))
        throw DomainError(name + " expects an element of " + family_name(b.source) + ", got " +
                          family_name(x.family));
    return catalan_iso(b.source, b.target, x);
}

namespace {

Partition tree_to(Family f, const Tree& t)
{
    return std::get<Partition>(catalan_iso(FamilyId{}, FamilyId{f}, CatalanObject{FamilyId{}, t}).payload);
}

Partition ncp_to_ncp(Family from, Family to, const Partition& p)
{
    return std::get<Partition>(catalan_iso(FamilyId{from}, FamilyId{to}, CatalanObject{FamilyId{from}, p}).payload);
}

} // namespace

Partition phi(const Tree& t) { return tree_to(Family::NCP1, t); }

Tree phi_inv(const Partition& p)
{
    return std::get<Tree>(catalan_iso(FamilyId{Family::NCP1}, FamilyId{}, CatalanObject{FamilyId{Family::NCP1}, p}).payload);
}

Partition phi_explicit(const Tree& t)
{
    auto arms = right_arms(t);
    std::vector<std::vector<int>> blocks;
    for (const auto& arm : arms)
        blocks.emplace_back(arm.begin(), arm.end());
    return Partition::from_blocks(t.size(), blocks);
}

Partition psi(const Tree& t) { return tree_to(Family::NCP2, t); }

Partition kreweras_via_catalan(const Partition& p) { return ncp_to_ncp(Family::NCP2, Family::NCP1, p); }

Partition kreweras_inverse(const Partition& p) { return ncp_to_ncp(Family::NCP1, Family::NCP2, p); }

Tree mirror(const Tree& t)
{
    if (t.is_leaf())
        return t;
    return Tree::wedge(mirror(t.right()), mirror(t.left()));
}

PlanarTree add_rightmost_leaves(const PlanarTree& t)
{
    if (t.children.empty())
        return t;
    PlanarTree out;
    for (const auto& c : t.children)
        out.children.push_back(add_rightmost_leaves(c));
    out.children.push_back(kVertex);
    return out;
}

PlanarTree add_leftmost_leaves(const PlanarTree& t)
{
    if (t.children.empty())
        return t;
    PlanarTree out;
    out.children.push_back(kVertex);
    for (const auto& c : t.children)
        out.children.push_back(add_leftmost_leaves(c));
    return out;
}

namespace {

CatalanObject as(Family f, Payload p) { return CatalanObject{FamilyId{f}, std::move(p)}; }

} // namespace

DiagramResult verify_diagram(int id, std::size_t n, DiagramLeg corrupt)
{
    if (id < 1 || id > 3)
        throw DomainError("diagram id must be 1, 2 or 3");
    DiagramResult res;
    for (const auto& x : enumerate_planar_trees(n)) {
        Tree rotated = std::get<Tree>(catalan_iso(FamilyId{Family::PT1}, FamilyId{}, as(Family::PT1, x)).payload);
        CatalanObject top, bottom;
        if (id == 1) {
            top = as(Family::NCP1, phi_explicit(rotated));
            bottom = catalan_iso(FamilyId{Family::RST1}, FamilyId{Family::NCP1},
                                 as(Family::RST1, add_rightmost_leaves(x)));
            bottom.family = top.family;
        } else if (id == 2) {
            // L is the PT2 -> LST1 map, so rot is read from PT2 here.
            Tree rot2 = std::get<Tree>(catalan_iso(FamilyId{Family::PT2}, FamilyId{}, as(Family::PT2, x)).payload);
            top = catalan_iso(FamilyId{}, FamilyId{Family::NCP3}, as(Family::Y, rot2));
            bottom = catalan_iso(FamilyId{Family::LST1}, FamilyId{Family::NCP3},
                                 as(Family::LST1, add_leftmost_leaves(x)));
            bottom.family = top.family;
        } else {
            Partition edel = tree_to(Family::NCP3, rotated);
            top = as(Family::NCP4, kreweras(edel));
            bottom = catalan_iso(FamilyId{Family::PT1}, FamilyId{Family::NCP4}, as(Family::PT1, x));
        }
        if (corrupt)
            top = corrupt(top);
        ++res.checked;
        if (!(top.payload == bottom.payload)) {
            res.pass = false;
            res.witness = "planar tree " + x.str() + ": " + top.str() + " != " + bottom.str();
            return res;
        }
    }
    return res;
}

namespace {

std::vector<std::vector<PlanarTree>> forests(std::size_t edges);

std::vector<PlanarTree> planar_trees(std::size_t edges)
{
    std::vector<PlanarTree> out;
    for (auto& f : forests(edges))
        out.push_back(PlanarTree{std::move(f)});
    return out;
}

// Ordered forests whose trees, each counted with the edge to its parent,
// use `edges` edges in total.
std::vector<std::vector<PlanarTree>> forests(std::size_t edges)
{
    if (edges == 0)
        return {{}};
    std::vector<std::vector<PlanarTree>> out;
    for (std::size_t e = 0; e < edges; ++e)
        for (const auto& first : planar_trees(e))
            for (auto& rest : forests(edges - 1 - e)) {
                rest.insert(rest.begin(), first);
                out.push_back(std::move(rest));
            }
    return out;
}

std::vector<PlanarTree> schroeder_by_leaves(std::size_t leaves, bool right);

// Nonempty ordered forests of Schroeder trees with the given leaf total.
std::vector<std::vector<PlanarTree>> schroeder_forests(std::size_t leaves, bool right)
{
    std::vector<std::vector<PlanarTree>> out;
    for (std::size_t l = 1; l <= leaves; ++l)
        for (const auto& first : schroeder_by_leaves(l, right)) {
            if (l == leaves) {
                out.push_back({first});
                continue;
            }
            for (auto& rest : schroeder_forests(leaves - l, right)) {
                rest.insert(rest.begin(), first);
                out.push_back(std::move(rest));
            }
        }
    return out;
}

std::vector<PlanarTree> schroeder_by_leaves(std::size_t leaves, bool right)
{
    if (leaves == 1)
        return {kVertex};
    std::vector<PlanarTree> out;
    for (auto& f : schroeder_forests(leaves - 1, right)) {
        if (right)
            f.push_back(kVertex);
        else
            f.insert(f.begin(), kVertex);
        out.push_back(PlanarTree{std::move(f)});
    }
    return out;
}

void parking_rec(std::vector<int>& cur, std::size_t n, std::vector<ParkingFn>& out)
{
    if (cur.size() == n) {
        out.push_back(ParkingFn{cur});
        return;
    }
    int lo = cur.empty() ? 1 : cur.back();
    for (int v = lo; v <= static_cast<int>(cur.size() + 1); ++v) {
        cur.push_back(v);
        parking_rec(cur, n, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<PlanarTree> enumerate_planar_trees(std::size_t edges) { return planar_trees(edges); }

std::vector<PlanarTree> enumerate_schroeder(std::size_t n, bool right) { return schroeder_by_leaves(n + 1, right); }

std::vector<ParkingFn> enumerate_parking(std::size_t n)
{
    std::vector<ParkingFn> out;
    std::vector<int> cur;
    parking_rec(cur, n, out);
    return out;
}

std::vector<CatalanObject> enumerate_direct(FamilyId fam, std::size_t n)
{
    std::vector<CatalanObject> out;
    const Family f = fam.base;
    if (f == Family::Y) {
        for (const auto& t : enumerate_trees(n))
            out.push_back({fam, t});
    } else if (f >= Family::NCP1 && f <= Family::NCP8) {
        for (const auto& p : enumerate_ncp(n))
            out.push_back({fam, p});
    } else if (f == Family::PT1 || f == Family::PT2) {
        for (auto& p : enumerate_planar_trees(n))
            out.push_back({fam, std::move(p)});
    } else if (f == Family::NDPF) {
        for (auto& p : enumerate_parking(n))
            out.push_back({fam, std::move(p)});
    } else {
        const bool right = f == Family::RST1 || f == Family::RST2;
        for (auto& p : enumerate_schroeder(n, right))
            out.push_back({fam, std::move(p)});
    }
    return out;
}

} // namespace freeconv
