#pragma once

#include <optional>
#include <vector>

#include "topoqec/fixtures.hpp"
#include "topoqec/matching.hpp"
#include "topoqec/noise.hpp"
#include "topoqec/surface_code.hpp"

namespace topoqec {

struct DecodeResult {
    MatchingGraph graph;
    std::vector<std::pair<std::size_t, std::size_t>> matching;
    Chain recovery;
    std::optional<ResidualClass> residual; // known only when the true error is
    bool success = false;

    void classify(const SurfaceCodeLayout& code, const Chain& true_error, char basis);
};

/// Builds the defect matching graph for one basis: complete over defects,
/// with one virtual boundary partner per defect on planar codes and
/// zero-weight virtual-virtual edges.
MatchingGraph build_matching_graph(const SurfaceCodeLayout& code, const Syndrome& syndrome,
                                   char basis);

/// Minimum-distance decoding of one 2D syndrome: MWPM over defect pairs,
/// deterministic row-then-column recovery paths.
DecodeResult decode_2d(const SurfaceCodeLayout& code, const Syndrome& syndrome, char basis);

/// Space-time decoding of differenced syndromes s_k(t) on a toric code.
/// Time-like matched segments are measurement corrections; the returned
/// recovery is the spatial projection applied to the final slice.
DecodeResult decode_3d(const SurfaceCodeLayout& code, const std::vector<BitVec>& s,
                       const NoiseModel& model);

/// Exact maximum-likelihood decoding by homology-class posterior, for codes
/// with at most 20 independent generators and at most 32 qubits.
class MlDecoder {
public:
    explicit MlDecoder(const SurfaceCodeLayout& code);

    struct Result {
        unsigned cls = 0;                // argmax class, lowest index on ties
        std::vector<double> posteriors;  // normalized, indexed by class bits
        Chain recovery;                  // reference recovery R(S) times L_cls
    };

    Result decode(const Syndrome& syndrome, double p) const;

    /// Reference recovery R(S): deterministic pairing of defects in index
    /// order, row-then-column paths.
    Chain reference_recovery(const Syndrome& syndrome) const;

private:
    const SurfaceCodeLayout& code_;
    std::vector<std::uint32_t> group_;    // all Z-stabilizer group elements
    std::vector<std::uint32_t> logicals_; // class representative masks
};

// --- concatenated codes and belief propagation ---

/// Binary view of one concatenation level for X-error decoding: checks are
/// the Z-generator supports, `logical` a logical X support, `stabilizers`
/// the X-generator supports (empty for the repetition code).
struct BlockCode {
    std::size_t n = 0;
    std::vector<BitVec> checks;
    std::vector<BitVec> stabilizers;
    BitVec logical;

    static BlockCode from_fixture(const CodeFixture& f);
};

struct ConcatenatedCode {
    BlockCode inner;
    unsigned levels = 1;

    std::size_t blocks_at_level(unsigned k) const; // number of level-k blocks
    std::size_t physical_qubits() const;
};

ConcatenatedCode make_concatenated(const CodeFixture& fixture, unsigned levels);

/// Syndromes of a physical X-error pattern at every level (the level-k
/// syndrome bits of each level-k block, concatenated in block order), plus
/// the top-level logical label of the error under the unique
/// logical/stabilizer/pure-error decomposition.
struct ConcatenatedSyndromes {
    std::vector<std::vector<int>> levels;
    int top_logical = 0;
};

ConcatenatedSyndromes concatenated_syndromes(const ConcatenatedCode& cc, const BitVec& error);

struct BpResult {
    int logical = 0;                  // argmax, ties to 0
    double posterior[2] = {0.0, 0.0}; // P(I | syndromes), P(L | syndromes)
};

/// Exact posterior of the top-level logical by leaf-to-root message passing
/// on the concatenation tree, for independent physical X errors of rate p.
BpResult bp_decode(const ConcatenatedCode& cc, const std::vector<std::vector<int>>& syndromes,
                   double p);

// --- concatenation analytics ---

struct ConcatAnalytics {
    double threshold = 0;              // 1 / C
    std::vector<double> level_error;   // p^(0..levels)
    std::optional<unsigned> levels_needed; // minimal l with p^(l) * M < 1
    double total_resources = 0;        // N^l * M (0 when unreachable)
};

/// Level recursion p^(l) = (C p)^(2^l) / C evaluated by repeated squaring,
/// with the minimal level count and total resources for a size-M computation.
ConcatAnalytics concat_analytics(double C, double N, double p, double M,
                                 unsigned max_levels = 60);

} // namespace topoqec
