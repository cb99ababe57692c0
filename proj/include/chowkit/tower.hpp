#pragma once

#include "chowkit/kclass.hpp"

#include <optional>

namespace chowkit {

// Direct sum of line bundles, one multidegree per summand, over a fixed ring.
struct SplitBundle {
    std::vector<Expo> summands;

    int rank() const { return static_cast<int>(summands.size()); }
    Expo det(std::size_t arity) const;
};

enum class StepKind { Base, ProjBundle, ZeroLocus };

struct Step {
    StepKind kind;
    std::vector<int> base_dims;  // Base
    SplitBundle bundle;          // ProjBundle / ZeroLocus (degrees over the ring before/at this step)
};

// A variety built as a tower: product of projective spaces, then split
// projective-bundle steps (subbundle convention: P(B) parametrizes lines in
// fibers of B, xi = c1(O(1)), relation sum_i c_i(B) xi^{e-i} = 0), then
// zero-locus steps which keep the ambient ring and record the normal bundle.
class Space {
public:
    static Space base(const std::vector<int>& dims);

    const RingPtr& ring() const { return ring_; }
    int dim() const { return dim_; }
    const KClass& tangent() const { return tangent_; }
    const Expo& canonical() const { return canonical_; }
    Expo anticanonical() const;
    const std::vector<Step>& steps() const { return steps_; }
    const std::vector<SplitBundle>& normal_bundles() const { return normal_; }
    const std::vector<std::string>& notes() const { return notes_; }
    bool has_zero_locus() const { return !normal_.empty(); }

    // c_top of the accumulated normal bundles (1 if none).
    ChowClass normal_top_class() const;

    // Integration over this space: ambient integral against c_top(N).
    Rational integrate_class(const ChowClass& ambient_class) const;

    // All components of -K strictly positive (positivity heuristic for Fano).
    bool fano_positivity() const;

private:
    std::vector<Step> steps_;
    RingPtr ring_;
    int dim_ = 0;
    KClass tangent_;
    Expo canonical_;
    std::vector<SplitBundle> normal_;
    std::vector<std::string> notes_;

    friend Space add_proj_bundle(const Space&, const SplitBundle&, const std::string&);
    friend Space cut_zero_locus(const Space&, const SplitBundle&);
};

Space build_base(const std::vector<int>& dims);
Space add_proj_bundle(const Space& s, const SplitBundle& b, const std::string& name = "");
Space cut_zero_locus(const Space& s, const SplitBundle& b);

// The production towers: X = P2xP2; PFdual = P_X(F^v) with F = O(2,0)+O(0,2);
// S = Z(O_xi(1)^3) in PFdual; PE = P_X(O^3) = X x P2;
// Y = Z(O(1,2,0)+O(1,0,2)) in P2xP2xP2 (W-factor first);
// T = Z(O_xi(1) boxtimes O_W(1)) in PFdual x P(W).
enum class PresetName { X, Y, S, T, PE, PFdual };
std::optional<PresetName> preset_from_string(const std::string& name);
Space preset(PresetName name);
Space preset(const std::string& name);

} // namespace chowkit
