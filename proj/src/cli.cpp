#include "gmac/cli.hpp"

#include <optional>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmac/compare.hpp"
#include "gmac/corpus.hpp"
#include "gmac/duality.hpp"
#include "gmac/error.hpp"
#include "gmac/io.hpp"
#include "gmac/structure.hpp"

namespace gmac {

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kCheckFailed = 2;

std::string facets_string(const SimplicialComplex& k)
{
    if (k.is_void()) return "{}";
    std::string s = "[";
    bool first = true;
    for (VertexSet f : k.facets()) {
        s += (first ? "" : " ") + (f.empty() ? std::string("φ") : f.to_string());
        first = false;
    }
    return s + "]";
}

std::string pair_string(const IndexPair& p)
{
    return "(" + p.sigma.to_string() + "," + p.omega.to_string() + ")";
}

void header(std::ostream& out, const Instance& inst)
{
    out << "m=" << inst.m() << " field=" << inst.field.name() << " K=" << facets_string(inst.k) << "\n";
}

int cmd_betti(const Instance& inst, bool as_json, bool crosscheck, std::ostream& out)
{
    const BettiTable t = betti(inst);
    std::optional<CompareReport> cr;
    if (crosscheck) {
        CompareOptions o;
        o.ring = false;
        cr = compare(inst, o);
    }
    const bool agree = !cr || (!cr->failed_internally && cr->betti_agree());

    if (as_json) {
        json j;
        j["field"] = field_to_json(inst.field);
        j["entries"] = json::array();
        for (const auto& e : t.entries) {
            if (e.dims.total() == 0) continue;
            j["entries"].push_back({{"sigma", vertex_set_to_json(e.pair.sigma)},
                                    {"omega", vertex_set_to_json(e.pair.omega)},
                                    {"link_homology", dims_to_json(e.link_homology)},
                                    {"dims", dims_to_json(e.dims)}});
        }
        j["totals"] = dims_to_json(t.totals);
        if (cr) {
            j["crosscheck"] = {{"minimal_model", dims_to_json(cr->model)},
                               {"cover", dims_to_json(cr->cover)},
                               {"agree", agree}};
            if (cr->oracle) j["crosscheck"]["oracle"] = dims_to_json(*cr->oracle);
            if (!cr->note.empty()) j["crosscheck"]["note"] = cr->note;
        }
        out << j.dump(2) << "\n";
    } else {
        header(out, inst);
        for (const auto& e : t.entries) {
            if (e.dims.total() == 0) continue;
            out << pair_string(e.pair) << " link H~ from -1: " << e.link_homology.to_string()
                << " | dims from 0: " << e.dims.to_string() << "\n";
        }
        out << "totals: " << t.totals.to_string() << "\n";
        if (cr) {
            out << "minimal model: " << cr->model.to_string() << "\n";
            out << "cover: " << (cr->failed_internally ? std::string("failed") : cr->cover.to_string()) << "\n";
            out << "oracle: " << (cr->oracle ? cr->oracle->to_string() : std::string("skipped")) << "\n";
            if (!cr->note.empty()) out << "note: " << cr->note << "\n";
            out << "crosscheck: " << (agree ? "agree" : "MISMATCH") << "\n";
        }
    }
    return agree ? kOk : kCheckFailed;
}

std::string terms_string(const std::vector<std::pair<std::size_t, Scalar>>& terms)
{
    std::string s;
    for (const auto& [h, c] : terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")h" + std::to_string(h);
    }
    return s;
}

int cmd_ring(const Instance& inst, bool as_json, bool coalgebra, std::ostream& out)
{
    const StructureTable t = homology_coproduct(inst);
    const auto products = t.product();

    if (as_json) {
        json j;
        j["field"] = field_to_json(inst.field);
        j["basis"] = json::array();
        for (std::size_t h = 0; h < t.basis.size(); ++h) {
            j["basis"].push_back({{"index", h}, {"degree", t.basis[h].degree}, {"label", t.label(inst, h)}});
        }
        j["unit"] = t.unit;
        if (coalgebra) {
            j["coproduct"] = json::array();
            for (std::size_t h = 0; h < t.coproduct.size(); ++h) {
                json terms = json::array();
                for (const auto& term : t.coproduct[h]) terms.push_back({term.left, term.right, term.coeff.to_string()});
                j["coproduct"].push_back({{"class", h}, {"terms", terms}});
            }
        } else {
            j["products"] = json::array();
            for (const auto& [ab, terms] : products) {
                json tj = json::array();
                for (const auto& [h, c] : terms) tj.push_back({h, c.to_string()});
                j["products"].push_back({{"left", ab.first}, {"right", ab.second}, {"terms", tj}});
            }
            j["mult_ranks"] = json::array();
            for (const auto& [pq, r] : t.mult_ranks()) j["mult_ranks"].push_back({pq.first, pq.second, r});
        }
        out << j.dump(2) << "\n";
        return kOk;
    }

    header(out, inst);
    out << (coalgebra ? "H_*(M)" : "H^*(M)") << " basis (" << t.basis.size() << " classes):\n";
    for (std::size_t h = 0; h < t.basis.size(); ++h) {
        out << "  h" << h << " deg " << t.basis[h].degree << "  " << t.label(inst, h) << (h == t.unit ? "  [unit]" : "")
            << "\n";
    }
    if (coalgebra) {
        out << "coproduct:\n";
        for (std::size_t h = 0; h < t.coproduct.size(); ++h) {
            out << "  D(h" << h << ") =";
            bool first = true;
            for (const auto& term : t.coproduct[h]) {
                out << (first ? " " : " + ") << "(" << term.coeff.to_string() << ")h" << term.left << "⊗h" << term.right;
                first = false;
            }
            out << "\n";
        }
        out << "coalgebra check: " << coalgebra_check(inst).to_string() << "\n";
        return kOk;
    }
    out << "nonzero products:\n";
    for (const auto& [ab, terms] : products) {
        out << "  h" << ab.first << "·h" << ab.second << " = " << terms_string(terms) << "\n";
    }
    out << "multiplication ranks: " << ranks_to_string(t.mult_ranks()) << "\n";
    return kOk;
}

int cmd_dual(const Instance& inst, std::ostream& out, std::ostream& err)
{
    const auto s = as_sphere_instance(inst);
    if (!s) {
        err << "error: dual needs every factor to be a sphere_pair\n";
        return kBadInput;
    }
    const DualityReport r = duality_check(*s);
    out << r.to_string();
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_adcheck(int exhaustive, std::optional<std::uint64_t> seed, int random_count, int max_vertices,
                const Field& field, std::ostream& out)
{
    std::size_t checked = 0;
    std::vector<std::string> failures;
    auto run = [&](const SimplicialComplex& l) {
        ++checked;
        const AdReport r = ad_check(l, field);
        if (!r.expected_shift_holds()) {
            failures.push_back("t=" + std::to_string(r.t) + " L=" + facets_string(l) + " H~(L)=" +
                               r.homology.to_string() + " H~(L*)=" + r.dual_homology.to_string());
        }
    };
    if (exhaustive > 0) {
        std::size_t before = checked;
        for (int t = 1; t <= exhaustive; ++t) {
            for (const auto& l : all_complexes(t)) run(l);
        }
        out << "exhaustive t=1.." << exhaustive << ": " << (checked - before) << " complexes\n";
    }
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::uniform_int_distribution<int> size(1, max_vertices);
        for (int i = 0; i < random_count; ++i) run(random_complex(rng, size(rng)));
        out << "random (seed " << *seed << ", t<=" << max_vertices << "): " << random_count << " complexes\n";
    }
    for (const auto& f : failures) out << "FAIL " << f << "\n";
    if (failures.empty()) {
        out << "shift t-s-3 confirmed on " << checked << " complexes\n";
        return kOk;
    }
    out << "shift t-s-3 failed on " << failures.size() << " of " << checked << " complexes\n";
    return kCheckFailed;
}

int cmd_verify(const Instance& inst, bool as_json, std::ostream& out)
{
    const CompareReport r = compare(inst);
    if (as_json) {
        json j;
        j["betti"] = dims_to_json(r.betti);
        j["minimal_model"] = dims_to_json(r.model);
        j["cover"] = dims_to_json(r.cover);
        if (r.oracle) j["oracle"] = dims_to_json(*r.oracle);
        j["structure_ranks"] = ranks_to_string(r.structure_ranks);
        if (r.oracle_ranks) j["oracle_ranks"] = ranks_to_string(*r.oracle_ranks);
        j["cocommutative"] = r.cocommutative;
        if (!r.note.empty()) j["note"] = r.note;
        j["passed"] = r.passed();
        out << j.dump(2) << "\n";
    } else {
        header(out, inst);
        out << r.to_string();
    }
    return r.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Homology coalgebras and cohomology rings of polyhedral products Z_K(X,A)", "gmac"};
    app.require_subcommand(1);
    std::string field_text;
    app.add_option("--field", field_text, "Override the instance field: Q or GF(p)");

    std::string path;
    bool as_json = false, crosscheck = false, coalgebra = false;

    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers per (sigma,omega) and in total");
    betti_cmd->add_option("instance", path, "Instance JSON file")->required();
    betti_cmd->add_flag("--json", as_json, "Emit JSON");
    betti_cmd->add_flag("--crosscheck", crosscheck, "Compare with the minimal model, cover and oracle pipelines");

    auto* ring_cmd = app.add_subcommand("ring", "Cohomology ring structure constants");
    ring_cmd->add_option("instance", path, "Instance JSON file")->required();
    ring_cmd->add_flag("--json", as_json, "Emit JSON");
    ring_cmd->add_flag("--coalgebra", coalgebra, "List the homology coproduct instead");

    auto* dual_cmd = app.add_subcommand("dual", "Duality between sphere-pair instances and their complements");
    dual_cmd->add_option("instance", path, "Instance JSON file")->required();

    int exhaustive = 0, random_count = 100, max_vertices = 7;
    std::optional<std::uint64_t> seed;
    auto* ad_cmd = app.add_subcommand("ad-check", "Combinatorial Alexander duality on small complexes");
    ad_cmd->add_option("--exhaustive", exhaustive, "Check every complex on 1..N vertices")->check(CLI::Range(0, 5));
    ad_cmd->add_option("--seed", seed, "Also check random complexes drawn with this seed");
    ad_cmd->add_option("--count", random_count, "Number of random complexes")->check(CLI::Range(0, 100000));
    ad_cmd->add_option("--max-vertices", max_vertices, "Largest ground set for random complexes")
        ->check(CLI::Range(1, 12));

    auto* verify_cmd = app.add_subcommand("verify", "Run every pipeline and the oracle and compare");
    verify_cmd->add_option("instance", path, "Instance JSON file")->required();
    verify_cmd->add_flag("--json", as_json, "Emit JSON");

    for (auto* sub : {betti_cmd, ring_cmd, dual_cmd, ad_cmd, verify_cmd}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        std::optional<Field> field;
        if (!field_text.empty()) field = Field::parse(field_text);
        if (ad_cmd->parsed()) {
            if (exhaustive == 0 && !seed) exhaustive = 4;
            return cmd_adcheck(exhaustive, seed, random_count, max_vertices, field.value_or(Field::rationals()), out);
        }
        const Instance inst = load_instance(path, field);
        if (betti_cmd->parsed()) return cmd_betti(inst, as_json, crosscheck, out);
        if (ring_cmd->parsed()) return cmd_ring(inst, as_json, coalgebra, out);
        if (dual_cmd->parsed()) return cmd_dual(inst, out, err);
        return cmd_verify(inst, as_json, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kCheckFailed;
    }
}

}  // namespace gmac
