#ifndef BVMS_ERRORS_HPP
#define BVMS_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bvms {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RationalParseError : Error {
    explicit RationalParseError(const std::string& text, const std::string& reason)
        : Error("cannot parse rational \"" + text + "\": " + reason), text(text) {}
    std::string text;
};

struct RationalOverflowError : Error {
    RationalOverflowError() : Error("rational arithmetic overflow (value outside 64-bit range)") {}
};

struct ShapeError : Error {
    using Error::Error;
};

struct AsymmetryError : Error {
    AsymmetryError(std::size_t i, std::size_t j, const std::string& a, const std::string& b)
        : Error("distance table is not symmetric at (" + a + ", " + b + ")"), i(i), j(j) {}
    std::size_t i, j;
};

struct IdentityError : Error {
    IdentityError(std::size_t i, std::size_t j, const std::string& what)
        : Error(what), i(i), j(j) {}
    std::size_t i, j;
};

struct NegativeDistanceError : Error {
    NegativeDistanceError(std::size_t i, std::size_t j, const std::string& a, const std::string& b)
        : Error("negative distance at (" + a + ", " + b + ")"), i(i), j(j) {}
    std::size_t i, j;
};

struct NonPositiveScaleError : Error {
    NonPositiveScaleError() : Error("scale factor must be strictly positive") {}
};

struct SizeError : Error {
    using Error::Error;
};

struct BudgetExceededError : Error {
    BudgetExceededError(std::uint64_t required, std::uint64_t budget)
        : Error("enumeration would visit about " + std::to_string(required) +
                " tuples, over the budget of " + std::to_string(budget)),
          required(required), budget(budget) {}
    std::uint64_t required, budget;
};

struct OrbitTooShortError : Error {
    OrbitTooShortError(std::size_t available, std::size_t needed)
        : Error("orbit has only " + std::to_string(available) +
                " points but the check needs " + std::to_string(needed)),
          available(available), needed(needed) {}
    std::size_t available, needed;
};

struct WindowTooShortError : Error {
    WindowTooShortError(std::size_t available, std::size_t needed)
        : Error("trace window has " + std::to_string(available) +
                " points but the check needs " + std::to_string(needed) +
                " and no cycle is recorded"),
          available(available), needed(needed) {}
    std::size_t available, needed;
};

struct JsonSchemaError : Error {
    JsonSchemaError(const std::string& location, const std::string& reason)
        : Error("invalid document at " + location + ": " + reason), location(location) {}
    std::string location;
};

struct UnknownLabelError : Error {
    explicit UnknownLabelError(const std::string& label)
        : Error("no point labelled \"" + label + "\""), label(label) {}
    std::string label;
};

}  // namespace bvms

#endif
