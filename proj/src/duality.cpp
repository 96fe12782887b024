#include "gmac/duality.hpp"

#include <algorithm>
#include <sstream>

#include "gmac/error.hpp"

namespace gmac {

void SpherePairInstance::validate() const
{
    if (k.ground_size() != static_cast<int>(params.size())) {
        throw InvalidInput("sphere instance: complex has ground set [" + std::to_string(k.ground_size()) + "] but " +
                           std::to_string(params.size()) + " sphere pairs were given");
    }
    for (auto [r, kk] : params) {
        if (kk < 0 || r < kk) throw InvalidInput("sphere instance: need 0 <= k <= r");
    }
}

Instance SpherePairInstance::instance() const
{
    validate();
    Instance inst{field, k, {}};
    for (auto [r, kk] : params) inst.factors.push_back(sphere_pair(r, kk, field));
    return inst;
}

int SpherePairInstance::ambient_dimension() const
{
    int d = 0;
    for (auto [r, kk] : params) d += r + 1;
    return d;
}

std::optional<SpherePairInstance> as_sphere_instance(const Instance& inst)
{
    SpherePairInstance s{inst.k, {}, inst.field};
    for (const auto& f : inst.factors) {
        if (!f.sphere) return std::nullopt;
        s.params.push_back(*f.sphere);
    }
    return s;
}

SpherePairInstance complementary_instance(const SpherePairInstance& s)
{
    s.validate();
    SpherePairInstance c{alexander_dual(s.k, static_cast<int>(s.params.size())), {}, s.field};
    for (auto [r, kk] : s.params) c.params.emplace_back(r, r - kk);
    return c;
}

namespace {

// Offsets c with a(d) = b(c - d) for every d, searched over c in [lo, hi].
std::vector<int> mirror_offsets(const std::vector<std::pair<GradedDims, GradedDims>>& pairs, int lo, int hi)
{
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c) {
        bool ok = true;
        for (const auto& [a, b] : pairs) {
            const int top = std::max({a.max_degree(), b.max_degree(), c - a.min_degree, c - b.min_degree});
            const int bottom = std::min({a.min_degree, b.min_degree, c - a.max_degree(), c - b.max_degree()});
            for (int d = bottom; d <= top && ok; ++d) ok = a.dim(d) == b.dim(c - d);
            if (!ok) break;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

}  // namespace

bool DualityReport::passed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const DualityEntry& e) { return e.passed; });
}

std::string DualityReport::to_string() const
{
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& e : entries) failed += e.passed ? 0 : 1;
    if (failed == 0) {
        os << "duality: PASS (all " << entries.size() << " pairs)\n";
    } else {
        os << "duality: FAIL (" << failed << " of " << entries.size() << " pairs)\n";
    }
    os << "ambient dimension R = " << ambient_dimension << "; pairing H_d <-> H^{R-d-1}\n";
    os << "consistent offsets:";
    if (offsets.empty()) os << " none";
    for (int c : offsets) os << " " << c;
    os << "\n";
    for (const auto& e : entries) {
        os << "  (" << e.pair.sigma.to_string() << "," << e.pair.omega.to_string() << ") <-> ("
           << e.dual_pair.sigma.to_string() << "," << e.dual_pair.omega.to_string() << "): " << e.dims.to_string()
           << " | " << e.dual_dims.to_string() << (e.passed ? "" : "  MISMATCH") << "\n";
    }
    return os.str();
}

DualityReport duality_check(const SpherePairInstance& s)
{
    const SpherePairInstance c = complementary_instance(s);
    const BettiTable bm = betti(s.instance());
    const BettiTable bc = betti(c.instance());
    const int m = static_cast<int>(s.params.size());
    const int r = s.ambient_dimension();

    DualityReport report;
    report.ambient_dimension = r;
    std::vector<std::pair<GradedDims, GradedDims>> pairs;
    for (const BettiEntry& e : bm.entries) {
        if (e.pair.omega.empty()) continue;
        DualityEntry d;
        d.pair = e.pair;
        d.dual_pair = {VertexSet::range(m) - (e.pair.sigma | e.pair.omega), e.pair.omega};
        d.dims = e.dims;
        const BettiEntry* other = bc.find(d.dual_pair);
        d.dual_dims = other ? other->dims : GradedDims{0, {}};
        d.passed = true;
        const int top = std::max(d.dims.max_degree(), r);
        for (int deg = 0; deg <= top; ++deg) {
            if (d.dims.dim(deg) != d.dual_dims.dim(r - deg - 1)) d.passed = false;
        }
        // Degrees of M^c beyond R - 1 would have no partner.
        if (d.dual_dims.max_degree() > r - 1) d.passed = false;
        pairs.emplace_back(d.dims, d.dual_dims);
        report.entries.push_back(std::move(d));
    }
    report.offsets = mirror_offsets(pairs, -2, 2 * r + 2);
    return report;
}

bool AdReport::expected_shift_holds() const
{
    return std::find(shifts.begin(), shifts.end(), t - 3) != shifts.end();
}

AdReport ad_check(const SimplicialComplex& l, const Field& field)
{
    AdReport r;
    r.t = l.ground_size();
    const SimplicialComplex dual = alexander_dual(l, r.t);
    r.homology = normalized(Homology(augmented_complex(l, field).complex, {false}).dims(), -1);
    r.dual_homology = normalized(Homology(augmented_complex(dual, field).complex, {false}).dims(), -1);
    r.shifts = mirror_offsets({{r.homology, r.dual_homology}}, -2, r.t + 2);
    return r;
}

}  // namespace gmac
