#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altkg/errors.hpp"

namespace altkg {

/// A vector over {-1, 0, +1}.  Component i is the sign assigned to the i-th
/// position of some linear order on a vertex set.
struct SignVector {
    std::vector<std::int8_t> x;

    SignVector() = default;
    explicit SignVector(std::vector<std::int8_t> v) : x(std::move(v)) { validate(); }
    explicit SignVector(std::initializer_list<int> v) {
        x.reserve(v.size());
        for (int s : v) x.push_back(std::int8_t(s));
        validate();
    }

    int size() const { return int(x.size()); }

    void validate() const {
        for (auto s : x)
            if (s < -1 || s > 1)
                throw InputError("sign vector entries must be -1, 0 or +1");
    }

    SignVector negated() const {
        SignVector r = *this;
        for (auto& s : r.x) s = std::int8_t(-s);
        return r;
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < x.size(); ++i) {
            if (i) s += ',';
            s += (x[i] < 0 ? "-" : (x[i] > 0 ? "+" : "0"));
        }
        return s + ")";
    }
};

/// Length of the longest alternating subsequence of the nonzero entries.
/// Equals 1 + (number of adjacent sign changes in the nonzero subsequence);
/// the all-zero vector has value 0.
inline int alt(const SignVector& v) {
    int value = 0;
    int last = 0;
    for (auto s : v.x) {
        if (s == 0) continue;
        if (last == 0 || s != last) ++value;
        last = s;
    }
    return value;
}

} // namespace altkg
