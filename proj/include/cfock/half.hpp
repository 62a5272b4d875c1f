#pragma once

// Half-integers stored by their doubled value. Fermion modes live in Z+1/2
// (odd doubled value); weights are sums of modes and may be integral.

#include <compare>
#include <cstdlib>
#include <string>

namespace cfock {

struct Half {
    int x2 = 0;  // the represented value is x2/2

    constexpr Half() = default;
    constexpr explicit Half(int doubled) : x2(doubled) {}

    static constexpr Half of_int(int n) { return Half(2 * n); }

    constexpr bool is_integer() const { return x2 % 2 == 0; }
    constexpr int as_int() const { return x2 / 2; }  // only valid when is_integer()

    constexpr Half operator-() const { return Half(-x2); }
    constexpr Half operator+(Half o) const { return Half(x2 + o.x2); }
    constexpr Half operator-(Half o) const { return Half(x2 - o.x2); }
    constexpr Half operator+(int n) const { return Half(x2 + 2 * n); }
    constexpr Half operator-(int n) const { return Half(x2 - 2 * n); }
    Half& operator+=(Half o) {
        x2 += o.x2;
        return *this;
    }

    constexpr auto operator<=>(const Half&) const = default;

    constexpr bool positive() const { return x2 > 0; }
    constexpr Half abs() const { return Half(x2 < 0 ? -x2 : x2); }
};

constexpr Half operator""_h2(unsigned long long doubled) { return Half(static_cast<int>(doubled)); }

inline std::string to_string(Half h) {
    if (h.is_integer()) return std::to_string(h.x2 / 2);
    return std::to_string(h.x2) + "/2";
}

}  // namespace cfock
