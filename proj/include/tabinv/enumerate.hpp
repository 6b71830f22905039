#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>

#include "tabinv/filling.hpp"

// Exhaustive deterministic generators for S(lambda,mu) and I^T(lambda,mu),
// and the brute-force inversion histogram they support.  The histogram is
// computed from inversion_pairs alone; it is the oracle every closed formula
// is checked against.  A serial reference kernel is kept alongside the
// OpenMP one.

namespace tabinv {

struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(int n, int cap)
        : std::runtime_error("enumeration cap exceeded: N=" + std::to_string(n) +
                             " > cap=" + std::to_string(cap) + " (use --force to override)") {}
};

inline constexpr int kDefaultCap = 10;

struct InversionHistogram {
    std::map<int, mpz_class> counts;

    mpz_class total() const;
    bool operator==(const InversionHistogram&) const = default;
};

// Every semistandard tableau of the given shape and content exactly once,
// lexicographic by row-major reading word.
void gen_semistandard(const Shape& shape, const Content& content,
                      const std::function<void(const Filling&)>& yield);
std::vector<Filling> gen_semistandard(const Shape& shape, const Content& content);
std::vector<Filling> gen_standard(const Shape& shape);

// All row-standard fillings obtained by permuting each column of T; every
// yield standardizes back to T.
void gen_inverted_with_standardization(const Filling& T,
                                       const std::function<void(const Filling&)>& yield);
std::vector<Filling> gen_inverted_with_standardization(const Filling& T);

// Serial reference kernel.
InversionHistogram histogram(const Shape& shape, const Content& content,
                             int cap = kDefaultCap, bool force = false);
// OpenMP kernel, partitioned by standardization; identical output.
InversionHistogram histogram_parallel(const Shape& shape, const Content& content,
                                      int cap = kDefaultCap, bool force = false);

}  // namespace tabinv
