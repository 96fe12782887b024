#include "gmac/io.hpp"

#include <fstream>
#include <sstream>

#include "gmac/error.hpp"

namespace gmac {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw InvalidInput(path + ": " + what);
}

const json& member(const json& j, const std::string& path, const char* key)
{
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string join(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

long get_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long>();
}

std::string get_string(const json& j, const std::string& path)
{
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& path)
{
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

Field parse_field(const json& j, const std::string& path)
{
    const std::string type = get_string(member(j, path, "type"), join(path, "type"));
    if (type == "rational") return Field::rationals();
    if (type == "prime") {
        const long p = get_int(member(j, path, "p"), join(path, "p"));
        if (p < 2 || p >= (1L << 31)) fail(join(path, "p"), "prime must lie in [2, 2^31)");
        try {
            return Field::prime(static_cast<std::uint64_t>(p));
        } catch (const InvalidInput& e) {
            fail(join(path, "p"), e.what());
        }
    }
    fail(join(path, "type"), "expected \"rational\" or \"prime\", got \"" + type + "\"");
}

VertexSet parse_simplex(const json& j, const std::string& path, int ground)
{
    VertexSet s;
    const json& a = get_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long v = get_int(a[i], join(path, i));
        if (v < 1 || v > ground) {
            fail(join(path, i), "vertex " + std::to_string(v) + " outside [1, " + std::to_string(ground) + "]");
        }
        s = s | VertexSet::singleton(static_cast<int>(v));
    }
    return s;
}

std::vector<VertexSet> parse_facets(const json& j, const std::string& path, int ground)
{
    std::vector<VertexSet> out;
    const json& a = get_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(parse_simplex(a[i], join(path, i), ground));
    return out;
}

int max_vertex(const json& facets, const std::string& path)
{
    long top = 0;
    const json& a = get_array(facets, path);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const json& f = get_array(a[i], join(path, i));
        for (std::size_t k = 0; k < f.size(); ++k) top = std::max(top, get_int(f[k], join(join(path, i), k)));
    }
    if (top > kMaxGround) fail(path, "vertex " + std::to_string(top) + " exceeds " + std::to_string(kMaxGround));
    return static_cast<int>(top);
}

Scalar parse_coefficient(const json& j, const std::string& path, const Field& field)
{
    if (j.is_number_integer()) return Scalar(field, j.get<long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(field, j.get<std::string>());
        } catch (const InvalidInput& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a string such as \"-2/5\"");
}

Role parse_role(const json& j, const std::string& path)
{
    const std::string r = get_string(j, path);
    if (r == "kernel") return Role::kernel;
    if (r == "image") return Role::image;
    if (r == "coker") return Role::coker;
    fail(path, "expected \"kernel\", \"image\" or \"coker\", got \"" + r + "\"");
}

FactorData parse_raw(const json& j, const std::string& path, const Field& field)
{
    RawFactor raw;
    raw.field = field;
    const std::string ep = join(path, "elements");
    const json& elems = get_array(member(j, path, "elements"), ep);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::string p = join(ep, i);
        FactorElement e;
        e.role = parse_role(member(elems[i], p, "role"), join(p, "role"));
        e.degree = static_cast<int>(get_int(member(elems[i], p, "degree"), join(p, "degree")));
        e.label = get_string(member(elems[i], p, "label"), join(p, "label"));
        raw.elements.push_back(e);
    }
    raw.unit = get_string(member(j, path, "unit"), join(path, "unit"));
    for (const char* key : {"coproduct_a", "coproduct_x"}) {
        auto it = j.find(key);
        if (it == j.end()) continue;
        const std::string cp = join(path, key);
        if (!it->is_object()) fail(cp, "expected an object mapping labels to term lists");
        auto& target = std::string(key) == "coproduct_a" ? raw.coproduct_a : raw.coproduct_x;
        for (const auto& [label, terms] : it->items()) {
            const std::string lp = cp + "." + label;
            get_array(terms, lp);
            auto& out = target[label];
            for (std::size_t i = 0; i < terms.size(); ++i) {
                const std::string tp = join(lp, i);
                const json& t = get_array(terms[i], tp);
                if (t.size() != 3) fail(tp, "expected [left, right, coefficient]");
                out.emplace_back(get_string(t[0], join(tp, std::size_t{0})), get_string(t[1], join(tp, std::size_t{1})),
                                 parse_coefficient(t[2], join(tp, std::size_t{2}), field));
            }
        }
    }
    try {
        return from_raw(raw);
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

FactorData parse_factor(const json& j, const std::string& path, const Field& field)
{
    const std::string kind = get_string(member(j, path, "kind"), join(path, "kind"));
    if (kind == "simplicial_pair") {
        const std::string xp = join(path, "x_facets"), ap = join(path, "a_facets");
        const json& xf = member(j, path, "x_facets");
        const json& af = member(j, path, "a_facets");
        const int ground = std::max(max_vertex(xf, xp), max_vertex(af, ap));
        SimplicialComplex x = SimplicialComplex::from_facets(ground, parse_facets(xf, xp, ground));
        std::vector<VertexSet> a = parse_facets(af, ap, ground);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!x.contains(a[i])) fail(join(ap, i), a[i].to_string() + " is not a simplex of X");
        }
        if (a.empty()) fail(ap, "A must be nonempty");
        return analyze_pair({x, SimplicialComplex::from_facets(ground, a)}, field);
    }
    if (kind == "sphere_pair") {
        const long r = get_int(member(j, path, "r"), join(path, "r"));
        const long k = get_int(member(j, path, "k"), join(path, "k"));
        if (k < 0 || r < k) fail(path, "need 0 <= k <= r");
        if (r + 3 > kMaxGround) fail(join(path, "r"), "too large");
        return sphere_pair(static_cast<int>(r), static_cast<int>(k), field);
    }
    if (kind == "disk_sphere") {
        const long n = get_int(member(j, path, "n"), join(path, "n"));
        if (n < 1 || n + 1 > kMaxGround) fail(join(path, "n"), "need 1 <= n <= " + std::to_string(kMaxGround - 1));
        FactorData f = analyze_pair(disk_sphere_pair(static_cast<int>(n)), field);
        return f;
    }
    if (kind == "raw") return parse_raw(j, path, field);
    fail(join(path, "kind"), "unknown factor kind \"" + kind + "\"");
}

json facets_to_json(const SimplicialComplex& k)
{
    json out = json::array();
    if (k.is_void()) return out;
    for (VertexSet f : k.facets()) out.push_back(vertex_set_to_json(f));
    return out;
}

}  // namespace

Instance parse_instance(const json& j, const std::optional<Field>& field)
{
    if (!j.is_object()) fail("(root)", "expected an object");
    Instance inst;
    inst.field = field ? *field : parse_field(member(j, "", "field"), "field");

    const json& c = member(j, "", "complex");
    const long m = get_int(member(c, "complex", "m"), "complex.m");
    if (m < 0 || m > kMaxGround) fail("complex.m", "must lie in [0, " + std::to_string(kMaxGround) + "]");
    bool is_void = false;
    if (auto it = c.find("void"); it != c.end()) {
        if (!it->is_boolean()) fail("complex.void", "expected a boolean");
        is_void = it->get<bool>();
    }
    std::vector<VertexSet> facets;
    if (auto it = c.find("facets"); it != c.end()) {
        facets = parse_facets(*it, "complex.facets", static_cast<int>(m));
    } else if (!is_void) {
        fail("complex.facets", "missing");
    }
    if (is_void && !facets.empty()) fail("complex.facets", "a void complex has no facets");
    inst.k = SimplicialComplex::from_facets(static_cast<int>(m), facets, is_void);

    const json& fs = get_array(member(j, "", "factors"), "factors");
    if (static_cast<long>(fs.size()) != m) {
        fail("factors", "expected " + std::to_string(m) + " factors, got " + std::to_string(fs.size()));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) inst.factors.push_back(parse_factor(fs[i], join("factors", i), inst.field));
    inst.validate();
    return inst;
}

Instance load_instance(const std::string& path, const std::optional<Field>& field)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput(path + ": cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": JSON parse error at byte " + std::to_string(e.byte));
    }
    return parse_instance(j, field);
}

json field_to_json(const Field& f)
{
    if (f.is_rational()) return {{"type", "rational"}};
    return {{"type", "prime"}, {"p", f.characteristic()}};
}

json dims_to_json(const GradedDims& g)
{
    return {{"min_degree", g.min_degree}, {"dims", g.dims}};
}

json vertex_set_to_json(VertexSet s)
{
    return json(s.vertices());
}

json instance_to_json(const Instance& inst)
{
    json j;
    j["field"] = field_to_json(inst.field);
    j["complex"] = {{"m", inst.m()}, {"facets", facets_to_json(inst.k)}};
    if (inst.k.is_void()) j["complex"]["void"] = true;
    j["factors"] = json::array();
    for (const auto& f : inst.factors) {
        json fj;
        if (f.sphere) {
            fj = {{"kind", "sphere_pair"}, {"r", f.sphere->first}, {"k", f.sphere->second}};
        } else if (f.pair) {
            fj = {{"kind", "simplicial_pair"}, {"x_facets", facets_to_json(f.pair->x)},
                  {"a_facets", facets_to_json(f.pair->a)}};
        } else {
            RawFactor raw = to_raw(f);
            fj["kind"] = "raw";
            fj["elements"] = json::array();
            for (const auto& e : raw.elements) {
                fj["elements"].push_back({{"role", role_name(e.role)}, {"degree", e.degree}, {"label", e.label}});
            }
            fj["unit"] = raw.unit;
            for (const auto* which : {&raw.coproduct_a, &raw.coproduct_x}) {
                json terms = json::object();
                for (const auto& [label, ts] : *which) {
                    json list = json::array();
                    for (const auto& [l, r, c] : ts) list.push_back({l, r, c.to_string()});
                    terms[label] = list;
                }
                fj[which == &raw.coproduct_a ? "coproduct_a" : "coproduct_x"] = terms;
            }
        }
        j["factors"].push_back(fj);
    }
    return j;
}

}  // namespace gmac
