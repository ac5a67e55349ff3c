#include "cevian/sampling.hpp"

namespace cevian {

std::uint64_t Sampler::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rational Sampler::rational(long long bound) {
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const long long num = static_cast<long long>(next() % span) - bound;
    const long long den = static_cast<long long>(next() % static_cast<std::uint64_t>(bound)) + 1;
    return {num, den};
}

GaussianRational Sampler::point(long long bound) {
    Rational re = rational(bound);
    Rational im = rational(bound);
    return {std::move(re), std::move(im)};
}

Triangle Sampler::triangle(long long bound, const Rational& min_area) {
    while (true) {
        GaussianRational p = point(bound);
        GaussianRational q = point(bound);
        GaussianRational r = point(bound);
        if (signed_area(p, q, r).abs() < min_area) continue;
        return {std::move(p), std::move(q), std::move(r)};
    }
}

}  // namespace cevian
