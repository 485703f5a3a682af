#include "aua/extended_real.hpp"

#include "aua/errors.hpp"

#include <cmath>

namespace aua {

ExtendedReal ExtendedReal::finite(double value) {
    if (!std::isfinite(value)) {
        throw InvalidInput("finite() requires a finite value");
    }
    if (value < 0.0) {
        throw InvalidInput("finite() requires a non-negative value, got " +
                           std::to_string(value));
    }
    ExtendedReal r;
    r.variant_ = Variant::finite;
    r.value_ = value;
    return r;
}

ExtendedReal ExtendedReal::infinity() noexcept {
    ExtendedReal r;
    r.variant_ = Variant::infinite;
    return r;
}

ExtendedReal ExtendedReal::undefined() noexcept { return ExtendedReal{}; }

double ExtendedReal::value() const {
    if (variant_ != Variant::finite) {
        throw InvalidInput("value() called on a non-finite extended real");
    }
    return value_;
}

ExtendedReal ExtendedReal::operator+(const ExtendedReal& other) const noexcept {
    if (is_undefined() || other.is_undefined()) return undefined();
    if (is_infinite() || other.is_infinite()) return infinity();
    const double sum = value_ + other.value_;
    if (!std::isfinite(sum)) return infinity();
    ExtendedReal r;
    r.variant_ = Variant::finite;
    r.value_ = sum;
    return r;
}

std::partial_ordering ExtendedReal::operator<=>(const ExtendedReal& other) const noexcept {
    if (is_undefined() || other.is_undefined()) return std::partial_ordering::unordered;
    if (is_infinite() && other.is_infinite()) return std::partial_ordering::equivalent;
    if (is_infinite()) return std::partial_ordering::greater;
    if (other.is_infinite()) return std::partial_ordering::less;
    return value_ <=> other.value_;
}

bool ExtendedReal::operator==(const ExtendedReal& other) const noexcept {
    return (*this <=> other) == std::partial_ordering::equivalent;
}

} // namespace aua
