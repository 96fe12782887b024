#include "gmac/compare.hpp"

#include <sstream>

#include "gmac/error.hpp"
#include "gmac/structure.hpp"

namespace gmac {

std::string ranks_to_string(const MultRanks& r)
{
    std::string s;
    for (const auto& [pq, rank] : r) {
        if (rank == 0) continue;
        if (!s.empty()) s += " ";
        s += "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")=" + std::to_string(rank);
    }
    return s.empty() ? "none" : s;
}

bool CompareReport::betti_agree() const
{
    return model == betti && cover == betti && (!oracle || *oracle == betti);
}

bool CompareReport::ranks_agree() const
{
    return !oracle_ranks || *oracle_ranks == structure_ranks;
}

bool CompareReport::passed() const
{
    return !failed_internally && betti_agree() && ranks_agree() && cocommutative;
}

std::string CompareReport::to_string() const
{
    std::ostringstream os;
    auto mark = [&](const GradedDims& g) { return g == betti ? "" : "  MISMATCH"; };
    os << "betti (sigma,omega): " << betti.to_string() << "\n";
    os << "minimal model:       " << model.to_string() << mark(model) << "\n";
    os << "cover components:    " << cover.to_string() << mark(cover) << "\n";
    if (oracle) {
        os << "oracle:              " << oracle->to_string() << mark(*oracle) << "\n";
    } else {
        os << "oracle:              skipped\n";
    }
    os << "ring ranks (structure): " << ranks_to_string(structure_ranks) << "\n";
    if (oracle_ranks) {
        os << "ring ranks (oracle):    " << ranks_to_string(*oracle_ranks) << (ranks_agree() ? "" : "  MISMATCH")
           << "\n";
    }
    os << "coproduct graded-cocommutative: " << (cocommutative ? "yes" : "no") << "\n";
    if (!note.empty()) os << "note: " << note << "\n";
    os << "verify: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

CompareReport compare(const Instance& inst, CompareOptions options)
{
    inst.validate();
    CompareReport r;
    r.betti = betti(inst).totals;
    r.model = minimal_model(inst).totals;
    try {
        StructureTable t = homology_coproduct(inst);
        r.cover = t.totals();
        r.structure_ranks = t.mult_ranks();
        r.cocommutative = is_cocommutative(t.coalgebra());
    } catch (const InternalError& e) {
        r.failed_internally = true;
        r.note = e.what();
        return r;
    }

    bool simplicial = true;
    for (const auto& f : inst.factors) simplicial = simplicial && (f.pair || f.sphere);
    if (!simplicial) {
        r.note = "oracle needs simplicial factors";
        return r;
    }
    const std::size_t n = BlockComplex::count_tuples(inst, options.oracle.max_tuples);
    if (n > options.oracle.max_tuples) {
        r.note = "oracle block complex exceeds " + std::to_string(options.oracle.max_tuples) + " tuples";
        return r;
    }
    BlockComplex block(inst, options.oracle);
    r.oracle = block.betti();
    if (options.ring) r.oracle_ranks = block.mult_ranks();
    return r;
}

}  // namespace gmac
