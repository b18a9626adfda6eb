#pragma once

// Extended-precision construction and evaluation helpers, internal to the
// library sources.  The map numerators are linear combinations of products of
// p and its derivatives; forming those products in working double precision
// leaves coefficient noise that evaluation near ill-conditioned points can
// amplify past 1e-9.  Building the coefficients in long double and rounding
// once keeps every published coefficient correctly rounded, and the extended
// Horner keeps evaluation noise at the same level.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cheby/poly.hpp"

namespace cheby::detail {

using LC = std::complex<long double>;

inline LC widen(Complex z) { return LC{z.real(), z.imag()}; }

inline std::vector<LC> lift(const Polynomial& p) {
    std::vector<LC> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(widen(c));
    return out;
}

inline std::vector<LC> conv(const std::vector<LC>& a, const std::vector<LC>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<LC> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// acc += s * z^shift * a
inline void add_scaled(std::vector<LC>& acc, LC s, const std::vector<LC>& a, int shift = 0) {
    const size_t need = a.size() + static_cast<size_t>(shift);
    if (acc.size() < need) acc.resize(need);
    for (size_t i = 0; i < a.size(); ++i) acc[i + static_cast<size_t>(shift)] += s * a[i];
}

/// Trim a trailing run of coefficients that are zero up to extended-precision
/// rounding junk (an exact cancellation of the leading terms leaves residue
/// ~eps_ld * scale, far below anything a double-precision input can
/// legitimately produce there).
inline void trim_ext(std::vector<LC>& a) {
    long double top = 0;
    for (const auto& c : a) top = std::max(top, std::abs(c));
    const long double junk = 32.0L * 5.42101086242752217e-20L * top;  // 32 * eps_ld * scale
    while (!a.empty() && std::abs(a.back()) <= junk) a.pop_back();
}

/// Round to double coefficients without any trimming beyond exact zeros.
inline Polynomial round_ext(const std::vector<LC>& a) {
    std::vector<Complex> out(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        out[i] = Complex{static_cast<double>(a[i].real()), static_cast<double>(a[i].imag())};
    return Polynomial{std::move(out)};
}

/// Round to double coefficients, junk-trimming the trailing run first.
inline Polynomial lower(std::vector<LC> a) {
    trim_ext(a);
    return round_ext(a);
}

/// Formal derivative.
inline std::vector<LC> derivative_ext(const std::vector<LC>& a) {
    if (a.size() <= 1) return {};
    std::vector<LC> out(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = static_cast<long double>(i) * a[i];
    return out;
}

/// Synthetic division by (z - root), dropping the remainder.
inline std::vector<LC> deflate_ext(const std::vector<LC>& a, LC root) {
    if (a.size() <= 1) return {};
    std::vector<LC> q(a.size() - 1);
    LC carry = a.back();
    for (size_t i = a.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = a[i] + root * carry;
    }
    return q;
}

/// Coefficients of a(alpha z + beta), by Horner in the affine argument.
inline std::vector<LC> compose_affine_ext(const std::vector<LC>& a, LC alpha, LC beta) {
    std::vector<LC> acc;
    for (size_t i = a.size(); i-- > 0;) {
        std::vector<LC> next(acc.size() + 1, LC{});
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j] * beta;
            next[j + 1] += acc[j] * alpha;
        }
        next[0] += a[i];
        acc = std::move(next);
    }
    return acc;
}

/// Extended Horner, ascending coefficient order; optionally accumulates the
/// companion scale sum_k |a_k| |z|^k.  Overloads for double and extended
/// coefficient vectors.
inline LC eval_extended(const std::vector<Complex>& coeffs, LC z, long double* scale = nullptr) {
    LC acc{};
    long double s = 0;
    const long double az = std::abs(z);
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * z + widen(coeffs[i]);
        if (scale) s = s * az + std::abs(coeffs[i]);
    }
    if (scale) *scale = s;
    return acc;
}

inline LC eval_extended(const std::vector<LC>& coeffs, LC z, long double* scale = nullptr) {
    LC acc{};
    long double s = 0;
    const long double az = std::abs(z);
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * z + coeffs[i];
        if (scale) s = s * az + std::abs(coeffs[i]);
    }
    if (scale) *scale = s;
    return acc;
}

/// Extended Horner of the reversed coefficient sequence (evaluates
/// sum_k a_{n-k} w^k, the reciprocal-chart companion of eval_extended).
inline LC eval_reversed_extended(const std::vector<Complex>& coeffs, LC w,
                                 long double* scale = nullptr) {
    LC acc{};
    long double s = 0;
    const long double aw = std::abs(w);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        acc = acc * w + widen(coeffs[i]);
        if (scale) s = s * aw + std::abs(coeffs[i]);
    }
    if (scale) *scale = s;
    return acc;
}

inline LC eval_reversed_extended(const std::vector<LC>& coeffs, LC w,
                                 long double* scale = nullptr) {
    LC acc{};
    long double s = 0;
    const long double aw = std::abs(w);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        acc = acc * w + coeffs[i];
        if (scale) s = s * aw + std::abs(coeffs[i]);
    }
    if (scale) *scale = s;
    return acc;
}

/// Multiplicity-corrected Newton polish of an approximate m-fold zero of f.
/// Wanders at most `cap` from z0; returns the iterate with the smallest |f|
/// seen inside that trust region (z0 itself when nothing beat it).
inline LC newton_snap_ext(const std::vector<LC>& fc, LC origin, int m, long double cap) {
    if (fc.size() <= 1 || m < 1) return origin;
    const std::vector<LC> dfc = derivative_ext(fc);
    LC z = origin;
    LC best = origin;
    long double best_mag = std::abs(eval_extended(fc, z));
    const long double lm = static_cast<long double>(m);
    for (int it = 0; it < 48; ++it) {
        const LC fv = eval_extended(fc, z);
        const LC dv = eval_extended(dfc, z);
        if (dv == LC{}) break;
        const LC step = lm * fv / dv;
        if (!std::isfinite(static_cast<double>(step.real())) ||
            !std::isfinite(static_cast<double>(step.imag())))
            break;
        z -= step;
        if (std::abs(z - origin) > cap) break;
        const long double mag = std::abs(eval_extended(fc, z));
        if (mag < best_mag) {
            best_mag = mag;
            best = z;
        }
        if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    return best;
}

inline Complex newton_snap(const Polynomial& f, Complex z0, int m, double cap) {
    LC best = newton_snap_ext(lift(f), widen(z0), m, static_cast<long double>(cap));
    return Complex{static_cast<double>(best.real()), static_cast<double>(best.imag())};
}

}  // namespace cheby::detail
