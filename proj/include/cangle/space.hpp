#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "cangle/gauge.hpp"
#include "cangle/hermitian.hpp"
#include "cangle/vec.hpp"

namespace cangle {

// A finite-dimensional complex normed space with a pluggable norm. Instances
// are immutable after construction; all evaluation is const and pure.
class Space {
public:
    enum class Kind { l2, lp, linf, gram, gauge };

    static Space l2(std::size_t dim);
    static Space lp(std::size_t dim, double p);  // p >= 1
    static Space linf(std::size_t dim);
    static Space gram(HermitianForm h);
    static Space gauge(GeneratorSet g);

    double norm(const cvec& x) const;
    std::size_t dim() const noexcept { return dim_; }
    Kind kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }

    const HermitianForm* gram_form() const noexcept { return gram_ ? &*gram_ : nullptr; }
    const GeneratorSet* generators() const noexcept { return gens_ ? &*gens_ : nullptr; }

    // Rounding floor of a single norm evaluation for unit-scale input; zero
    // for the closed-form norms, the certificate gap bound for gauge norms.
    double norm_slack() const noexcept;

    std::string describe() const;

private:
    Space(Kind k, std::size_t dim) : kind_(k), dim_(dim) {}
    Kind kind_;
    std::size_t dim_;
    double p_ = 2.0;
    std::optional<HermitianForm> gram_;
    std::optional<GeneratorSet> gens_;
};

// Randomized audit of the norm axioms (absolute homogeneity, triangle
// inequality, definiteness). Returns the worst relative violation found.
double audit_norm_axioms(const Space& s, int trials, std::uint64_t seed);

}  // namespace cangle
