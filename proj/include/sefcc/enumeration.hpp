#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sefcc/fcc.hpp"
#include "sefcc/hamming.hpp"

namespace sefcc {

/// How a census traverses the space of parity assignments. Backtracking
/// visits exactly the valid assignments; full_sweep examines all 4^16
/// candidates and serves as the independent completeness oracle.
struct SearchStrategy {
    enum class Mode { backtracking, full_sweep };
    Mode mode = Mode::backtracking;
    int worker_count = 1;
};

/// Per-assignment statistics the census aggregates. All fields are physical
/// properties of the induced 128-word code, computed from sphere geometry
/// without building the 128x128 matrix.
struct AssignmentStats {
    bool valid = false;   // graph condition: no complementary parities across an edge
    bool dmin2 = false;   // valid and no equal parities across an edge
    std::uint32_t sum_distance = 0;
    std::uint32_t n1 = 0;
    std::uint32_t n2 = 0;
};

/// Precomputed pair-count tables the census evaluates assignments against.
/// Validity is judged against the edge set of the graph passed in (so tests
/// can probe mutated graphs); the distance bookkeeping tables always come
/// from the codebook's true sphere geometry.
class CensusGeometry {
public:
    CensusGeometry(const HammingCodebook& cb, const Distance3Graph& g);

    AssignmentStats evaluate(std::uint32_t packed) const;

    const HammingCodebook& codebook() const { return *cb_; }
    const Distance3Graph& graph() const { return *g_; }

    /// Constant message-part contribution to every sum distance.
    std::uint64_t message_sum() const { return message_sum_; }

    /// Packed codes of the full bipartition construction family, sorted.
    const std::vector<std::uint32_t>& construction_family() const { return family_; }

private:
    struct PairTerm {
        std::uint8_t i, k;
        std::uint16_t count;
    };

    const HammingCodebook* cb_;
    const Distance3Graph* g_;
    std::vector<std::pair<std::uint8_t, std::uint8_t>> validity_edges_;
    std::vector<PairTerm> msg1_pairs_;       // cross-sphere non-codeword pairs at message distance 1
    std::vector<PairTerm> msg2_pairs_;       // cross-sphere non-codeword pairs at message distance 2
    std::vector<PairTerm> cw_msg2_pairs_;    // codeword/non-codeword pairs at message distance 2
    std::uint32_t intra_sphere_n2_ = 0;      // same-sphere pairs, parity distance always 0
    std::uint64_t message_sum_ = 0;
    std::vector<std::uint32_t> family_;
};

/// Census results. Counts cover whatever the strategy examined; the
/// match flags compare attainer sets against the construction family.
struct CensusReport {
    std::uint64_t total_assignments_examined = 0;
    std::uint64_t valid_count = 0;
    std::uint64_t valid_dmin2_count = 0;
    std::uint64_t max_sum_value = 0;
    std::uint64_t max_sum_count = 0;
    bool max_sum_all_match_construction = false;
    std::uint64_t min_n2_over_valid_dmin2 = 0;
    bool min_n2_achievers_match_construction = false;

    friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

using AssignmentVisitor = std::function<void(const ParityAssignment&)>;

/// Visits every valid assignment exactly once in a deterministic order:
/// four shards by the parity of codeword 1, each traversed lexicographically
/// (backtracking) or in reflected Gray order (full sweep). With more than
/// one worker the visitor runs concurrently across shards.
CensusReport enumerate_valid(const CensusGeometry& geom, const SearchStrategy& strategy,
                             const AssignmentVisitor& visitor = nullptr);

CensusReport max_sum_census(const CensusGeometry& geom, const SearchStrategy& strategy = {});
CensusReport min_n2_census(const CensusGeometry& geom, const SearchStrategy& strategy = {});

struct CertifyOptions {
    SearchStrategy strategy{};
    std::uint64_t random_samples = 10000;
    std::uint64_t seed = 0xC0DEC0DE;
};

/// One certification line item: a claim, whether it held, and either the
/// witnessing counts or a concrete counterexample assignment.
struct CertificationItem {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string witness;  // 16-token assignment text, empty when pass
};

struct CertificationReport {
    CensusReport census;
    std::uint64_t message_sum = 0;
    std::vector<CertificationItem> items;
    bool all_pass = false;

    /// Line-oriented key=value rendering, stable across runs and worker counts.
    std::string to_text() const;
};

/// Certifies the validity characterization, the d_min condition, max-sum
/// uniqueness and the minimal-N2 property against a single census pass plus
/// brute-force equivalence sampling.
CertificationReport certify_theorems(const HammingCodebook& cb, const Distance3Graph& g,
                                     const CertifyOptions& opts = {});

}  // namespace sefcc
