#pragma once

#include <stdexcept>
#include <string>

namespace hypertoric {

// Exit-code taxonomy used by the CLI: 0 ok, 2 validation, 3 non-generic,
// 4 infinite dimension, 5 property violation.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const { return "Error"; }
    virtual int exit_code() const { return 2; }
};

struct RankDeficient : Error {
    using Error::Error;
    const char* kind() const override { return "RankDeficient"; }
};

struct NotSaturated : Error {
    using Error::Error;
    const char* kind() const override { return "NotSaturated"; }
};

struct InvalidSequence : Error {
    using Error::Error;
    const char* kind() const override { return "InvalidSequence"; }
};

struct NoSolution : Error {
    using Error::Error;
    const char* kind() const override { return "NoSolution"; }
};

struct DegenerateHyperplane : Error {
    int index;  // 1-based hyperplane index
    explicit DegenerateHyperplane(int i)
        : Error("hyperplane " + std::to_string(i) + " contains the affine slice"), index(i) {}
    const char* kind() const override { return "DegenerateHyperplane"; }
};

struct NonGenericParameter : Error {
    using Error::Error;
    const char* kind() const override { return "NonGenericParameter"; }
    int exit_code() const override { return 3; }
};

struct ResourceLimit : Error {
    using Error::Error;
    const char* kind() const override { return "ResourceLimit"; }
};

struct DimensionInfinite : Error {
    unsigned src, dst;
    DimensionInfinite(unsigned a, unsigned b, const std::string& msg)
        : Error(msg), src(a), dst(b) {}
    const char* kind() const override { return "DimensionInfinite"; }
    int exit_code() const override { return 4; }
};

struct CompositionMismatch : Error {
    using Error::Error;
    const char* kind() const override { return "CompositionMismatch"; }
};

struct PresentationMismatch : Error {
    using Error::Error;
    const char* kind() const override { return "PresentationMismatch"; }
    int exit_code() const override { return 5; }
};

struct DimensionBoundExceeded : Error {
    using Error::Error;
    const char* kind() const override { return "DimensionBoundExceeded"; }
};

struct NonBasicAlgebra : Error {
    using Error::Error;
    const char* kind() const override { return "NonBasicAlgebra"; }
};

}  // namespace hypertoric
