#pragma once

// Exact rational scalars. All coefficients in the library are cpp_rational;
// there is no floating-point path anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cfock {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const Scalar& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

// Parses "p", "-p" or "p/q" with q != 0. Anything else is rejected.
inline Scalar parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("bad rational: '" + text + "'"); };
    std::size_t pos = 0;
    auto read_int = [&]() -> BigInt {
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return neg ? BigInt(-v) : v;
    };
    BigInt num = read_int();
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int();
    }
    if (pos != text.size()) fail();
    if (den == 0) fail();
    return Scalar(num, den);
}

// Adds c to m[k], erasing the entry when it cancels to zero. The "no stored
// zero coefficients" invariant of every sparse vector in the library.
template <class Key>
void add_term(std::map<Key, Scalar>& m, const Key& k, const Scalar& c) {
    if (c == 0) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second == 0) m.erase(it);
}

template <class Key>
void axpy(std::map<Key, Scalar>& dest, const Scalar& a, const std::map<Key, Scalar>& src) {
    if (a == 0) return;
    for (const auto& [k, c] : src) add_term(dest, k, Scalar(a * c));
}

}  // namespace cfock
