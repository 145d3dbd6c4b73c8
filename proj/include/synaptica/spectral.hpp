#ifndef SYNAPTICA_SPECTRAL_HPP
#define SYNAPTICA_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "synaptica/calculus.hpp"
#include "synaptica/core.hpp"

namespace synaptica {

/// Spectral lower and upper bounds: L = sup{lambda : lambda <= a},
/// U = inf{lambda : a <= lambda}. ||a|| = max{|L|,|U|}.
struct SpectralBounds {
    double lower;
    double upper;
};

inline SpectralBounds spectral_bounds(const Element& a) {
    const auto s = raw_spectrum(a);
    return {s.front(), s.back()};
}

/// p_lambda := 1 - ((a - lambda)+)°. Right-continuous: the eigenspace at
/// lambda itself is included.
inline Element resolution_at(const Element& a, double lambda) {
    const Element shifted = a - lambda;
    if (faults::active("spectral.resolution_eigen"))
        return unit_like(a) - carrier(shifted);
    return unit_like(a) - carrier(pos_part(shifted));
}

/// d_lambda := 1 - (a - lambda)°; lambda is an eigenvalue iff d_lambda != 0.
inline Element eigenprojection_at(const Element& a, double lambda) {
    return unit_like(a) - carrier(a - lambda);
}

/// Canonical form of a simple element: strictly ascending coefficients with
/// nonzero orthogonal projections summing to 1.
struct SimpleDecomposition {
    std::vector<double> coefficients; // strictly ascending
    std::vector<Element> projections; // nonzero, pairwise orthogonal, sum 1
};

inline SimpleDecomposition simple_decompose(const Element& a) {
    SimpleDecomposition out;
    if (a.is_matrix()) {
        for (const auto& c : spectral_clusters(a.as_matrix())) {
            out.coefficients.push_back(c.value);
            out.projections.push_back(Element::matrix(c.projection));
        }
    } else {
        const SetFn& f = a.as_setfn();
        std::vector<double> distinct = f.values;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()),
                       distinct.end());
        for (double v : distinct) {
            std::vector<double> ind(f.values.size(), 0.0);
            for (std::size_t x = 0; x < f.values.size(); ++x)
                if (f.values[x] == v) ind[x] = 1.0;
            out.coefficients.push_back(v);
            out.projections.push_back(Element::setfn(f.field, std::move(ind)));
        }
    }
    return out;
}

/// The spectrum: the set of points where lambda -> p_lambda is not locally
/// constant. In both finite models this is the clustered list of spectral
/// values.
inline std::vector<double> spectrum(const Element& a) {
    return simple_decompose(a).coefficients;
}

/// Spectral resolution of a: detected breakpoints with the projection and
/// eigenprojection families evaluated there. Below L the resolution is 0,
/// at or above U it is 1.
struct SpectralResolution {
    double lower;
    double upper;
    std::vector<double> breakpoints;
    std::vector<Element> projections_at;
    std::vector<Element> eigenprojections_at;
};

inline SpectralResolution spectral_resolution(const Element& a) {
    SpectralResolution r;
    const auto b = spectral_bounds(a);
    r.lower = b.lower;
    r.upper = b.upper;
    r.breakpoints = spectrum(a);
    for (double lambda : r.breakpoints) {
        r.projections_at.push_back(resolution_at(a, lambda));
        r.eigenprojections_at.push_back(eigenprojection_at(a, lambda));
    }
    return r;
}

/// Tagged Riemann-Stieltjes sum over a partition lambda_0 < L < lambda_1 <
/// ... < lambda_n = U with tags gamma_i in each cell. The reconstruction
/// error is certified by the mesh.
struct RiemannSum {
    Element approximation;
    double certified_error; // the mesh
    std::vector<Element> projections;
    std::vector<double> tags;
};

inline RiemannSum riemann_approx(const Element& a,
                                 const std::vector<double>& partition,
                                 const std::vector<double>& tags) {
    const auto b = spectral_bounds(a);
    if (partition.size() < 2)
        throw std::invalid_argument("riemann_approx: partition needs >= 2 points");
    if (tags.size() + 1 != partition.size())
        throw std::invalid_argument("riemann_approx: need one tag per cell");
    if (!(partition.front() < b.lower))
        throw std::invalid_argument("riemann_approx: lambda_0 must be strictly below L");
    if (std::abs(partition.back() - b.upper) > tol::eq(std::abs(b.upper)))
        throw std::invalid_argument("riemann_approx: lambda_n must equal U");
    for (std::size_t i = 1; i < partition.size(); ++i)
        if (!(partition[i - 1] < partition[i]))
            throw std::invalid_argument("riemann_approx: partition not ascending");
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] < partition[i] || tags[i] > partition[i + 1])
            throw std::invalid_argument("riemann_approx: tag outside its cell");

    RiemannSum out{zero_like(a), 0.0, {}, tags};
    Element prev = resolution_at(a, partition.front());
    for (std::size_t i = 1; i < partition.size(); ++i) {
        const Element cur = resolution_at(a, partition[i]);
        Element u = cur - prev;
        if (faults::active("spectral.riemann_cumulative")) u = cur;
        out.projections.push_back(u);
        out.approximation = out.approximation + tags[i - 1] * u;
        out.certified_error =
            std::max(out.certified_error, partition[i] - partition[i - 1]);
        prev = cur;
    }
    return out;
}

/// Ascending simple approximations a_1 <= a_2 <= ... <= a_n in CC(a) built
/// from left endpoints of dyadic refinements of [L, U], with
/// ||a - a_k|| <= (U - L)/2^k.
inline std::vector<Element> ascending_approx(const Element& a, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("ascending_approx: need at least one step");
    const auto b = spectral_bounds(a);
    const double span = b.upper - b.lower;
    std::vector<Element> out;
    if (span <= tol::eq(std::abs(b.upper))) {
        // a is (numerically) a scalar; every approximant is a itself.
        for (std::size_t k = 0; k < n; ++k) out.push_back(a);
        return out;
    }
    // The resolution p_lambda only jumps at spectral points, so the dyadic
    // left-endpoint sum collapses to a relabeling of the eigenprojections:
    // each spectral value gets the left endpoint of its dyadic cell.
    const auto dec = simple_decompose(a);
    for (std::size_t k = 1; k <= n; ++k) {
        const double cells =
            std::pow(2.0, static_cast<double>(std::min<std::size_t>(k, 40)));
        const double h = span / cells;
        Element approx = zero_like(a);
        for (std::size_t i = 0; i < dec.coefficients.size(); ++i) {
            // Cell convention (left, right]: a value exactly on a boundary
            // belongs to the cell it closes.
            const double steps = std::max(
                0.0, std::ceil((dec.coefficients[i] - b.lower) / h) - 1.0);
            // span*steps/cells instead of h*steps: exact when the spectrum
            // is dyadic, which keeps the chain monotone under exact order
            // comparison in the function model.
            const double left = b.lower + (span * steps) / cells;
            approx = approx + std::min(left, dec.coefficients[i]) * dec.projections[i];
        }
        out.push_back(approx);
    }
    return out;
}

/// bCa iff b commutes with every projection in the spectral resolution of a.
inline bool spectrally_commutes(const Element& b, const Element& a) {
    check_same_model(a, b);
    for (double lambda : spectrum(a))
        if (!commutes(b, resolution_at(a, lambda))) return false;
    return true;
}

} // namespace synaptica

#endif
