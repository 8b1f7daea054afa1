#ifndef BVMS_TESTS_BRUTE_HPP
#define BVMS_TESTS_BRUTE_HPP

// Reference enumerator for the test suite. Deliberately written with a
// different mechanism than the library (combination masks plus
// std::next_permutation instead of an odometer) so the two can check each
// other; keep it dumb and obviously right, not fast.

#include <algorithm>
#include <optional>
#include <vector>

#include "bvms/space.hpp"

namespace brute {

struct Extremal {
    bvms::Rational ratio;  // max over all pairs and chains of d(x,y)/chain
    std::uint64_t chains = 0;
};

inline Extremal max_ratio(const bvms::FiniteSpace& space, int v) {
    const std::size_t n = space.size();
    Extremal out{bvms::Rational(0), 0};
    if (n < static_cast<std::size_t>(v) + 2) return out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::size_t> others;
            for (std::size_t t = 0; t < n; ++t)
                if (t != i && t != j) others.push_back(t);
            // Every v-subset, then every arrangement of it.
            std::vector<bool> pick(others.size(), false);
            std::fill(pick.end() - v, pick.end(), true);
            do {
                std::vector<std::size_t> subset;
                for (std::size_t t = 0; t < others.size(); ++t)
                    if (pick[t]) subset.push_back(others[t]);
                std::sort(subset.begin(), subset.end());
                do {
                    ++out.chains;
                    bvms::Rational sum = space.dist(i, subset.front());
                    for (std::size_t t = 0; t + 1 < subset.size(); ++t)
                        sum += space.dist(subset[t], subset[t + 1]);
                    sum += space.dist(subset.back(), j);
                    const bvms::Rational ratio = space.dist(i, j) / sum;
                    if (ratio > out.ratio) out.ratio = ratio;
                } while (std::next_permutation(subset.begin(), subset.end()));
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }
    return out;
}

inline bvms::Rational min_s(const bvms::FiniteSpace& space, int v) {
    const bvms::Rational one(1);
    const bvms::Rational r = max_ratio(space, v).ratio;
    return r > one ? r : one;
}

inline bool satisfies(const bvms::FiniteSpace& space, int v, const bvms::Rational& s) {
    const std::size_t n = space.size();
    if (n < static_cast<std::size_t>(v) + 2) return true;
    return !(max_ratio(space, v).ratio > s);
}

}  // namespace brute

#endif
