#pragma once

#include <compare>
#include <string>

namespace aua {

// Codomain of the benchmark metrics: a finite non-negative value,
// positive infinity, or undefined. Finite values order below infinity;
// undefined is incomparable and never silently coerced; value() throws
// unless the variant is finite.
class ExtendedReal {
public:
    ExtendedReal() = default; // undefined

    static ExtendedReal finite(double value); // throws InvalidInput on negative/non-finite
    static ExtendedReal infinity() noexcept;
    static ExtendedReal undefined() noexcept;

    bool is_finite() const noexcept { return variant_ == Variant::finite; }
    bool is_infinite() const noexcept { return variant_ == Variant::infinite; }
    bool is_undefined() const noexcept { return variant_ == Variant::undefined; }
    bool is_defined() const noexcept { return variant_ != Variant::undefined; }

    double value() const; // finite payload; throws InvalidInput otherwise

    // Extended-real addition: inf absorbs finite values, undefined
    // propagates through everything.
    ExtendedReal operator+(const ExtendedReal& other) const noexcept;

    // Partial order: finite values by payload, any finite < infinity,
    // anything involving undefined is unordered.
    std::partial_ordering operator<=>(const ExtendedReal& other) const noexcept;
    // NaN-style equality: undefined compares equal to nothing, itself included.
    bool operator==(const ExtendedReal& other) const noexcept;

private:
    enum class Variant { finite, infinite, undefined };

    Variant variant_ = Variant::undefined;
    double value_ = 0.0;
};

} // namespace aua
