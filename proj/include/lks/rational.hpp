#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lks {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(Int(num), Int(den));
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline long long to_ll(const Int& v) { return v.template convert_to<long long>(); }

// "n" or "n/d"; used in JSON artifacts so densities stay exact.
inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(Int(s));
        // decimal literal, e.g. 0.3
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        Int den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Int num = Int(ip) * den;
        Int frac = fp.empty() ? Int(0) : Int(fp);
        num += (s[0] == '-') ? -frac : frac;
        return Rat(num, den);
    }
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace lks
