#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace fg {

/// A p-adic valuation: a finite non-negative integer or infinity.
/// Infinity arises exactly for the value 0; it absorbs under addition
/// and is maximal under comparison.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation finite(std::uint64_t v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }

    std::uint64_t value() const {
        if (infinite_)
            throw std::logic_error("Valuation::value on infinity");
        return v_;
    }

    /// Finite value capped at `cap`; infinity maps to `cap`.
    std::uint64_t value_or(std::uint64_t cap) const {
        return infinite_ || v_ > cap ? cap : v_;
    }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_)
            return infinity();
        return finite(v_ + o.v_);
    }
    Valuation& operator+=(const Valuation& o) { return *this = *this + o; }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_)
            return (a.infinite_ ? 1 : 0) <=> (b.infinite_ ? 1 : 0);
        return a.v_ <=> b.v_;
    }
    friend bool operator>=(const Valuation& a, std::uint64_t b) {
        return a.infinite_ || a.v_ >= b;
    }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.infinite_)
            return os << "inf";
        return os << v.v_;
    }

private:
    Valuation(bool inf, std::uint64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::uint64_t v_;
};

}  // namespace fg
