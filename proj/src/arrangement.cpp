#include "confmap/arrangement.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "confmap/error.hpp"

namespace confmap {

namespace {

constexpr Cx kI{0.0, 1.0};
constexpr std::size_t kSideSamples = 4096;

void require_count(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        std::ostringstream msg;
        msg << what << " needs at least " << min << " points, got " << n;
        throw ArrangementError(msg.str());
    }
}

bool on_side(std::span<const Cx> polygon, Cx p, Side side) {
    for (const Cx& q : polygon)
        if (std::abs(q - p) <= 1e-9) return false;
    const long w = std::lround(winding_number(polygon, p));
    return side == Side::interior ? w != 0 : w == 0;
}

}  // namespace

std::vector<Cx> collocation_points(const BoundaryCurve& curve, int N) {
    if (N < 4) throw ArrangementError("collocation_points requires N >= 4");
    std::vector<Cx> z(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) z[j - 1] = curve.param(static_cast<double>(j) / N);
    return z;
}

std::vector<Cx> amano_singular(std::span<const Cx> colloc, double r) {
    const std::size_t n = colloc.size();
    require_count(n, 3, "amano_singular");
    std::vector<Cx> zeta(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Cx next = colloc[(k + 1) % n];
        const Cx prev = colloc[(k + n - 1) % n];
        zeta[k] = colloc[k] - (kI * r / 2.0) * (next - prev);
    }
    return zeta;
}

std::vector<Cx> amano_moments(std::span<const Cx> singular) {
    const std::size_t n = singular.size();
    require_count(n, 3, "amano_moments");
    std::vector<Cx> moments(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Cx chord = singular[(k + 1) % n] - singular[(k + n - 1) % n];
        const double len = std::abs(chord);
        if (len == 0.0) {
            std::ostringstream msg;
            msg << "degenerate arrangement: neighbours of singular point " << k + 1 << " coincide";
            throw ArrangementError(msg.str());
        }
        moments[k] = -kI * chord / len;
    }
    return moments;
}

ArrangedSet arrange_component(const BoundaryCurve& curve, int N, double rtilde, Side side) {
    if (!(rtilde > 0.0)) throw ArrangementError("arrangement offset rtilde must be positive");
    ArrangedSet set;
    set.colloc = collocation_points(curve, N);
    const std::vector<Cx> polygon = curve.sample(kSideSamples);

    const double r = rtilde * N;
    set.singular = amano_singular(set.colloc, r);
    std::size_t good = 0;
    for (const Cx& z : set.singular) good += on_side(polygon, z, side) ? 1 : 0;
    if (2 * good < set.singular.size()) set.singular = amano_singular(set.colloc, -r);

    for (std::size_t k = 0; k < set.singular.size(); ++k) {
        if (!on_side(polygon, set.singular[k], side)) {
            std::ostringstream msg;
            msg << "singular point " << k + 1 << " at " << set.singular[k] << " is not on the "
                << (side == Side::exterior ? "exterior" : "interior") << " side of the boundary";
            throw ArrangementError(msg.str());
        }
    }
    set.moments = amano_moments(set.singular);
    return set;
}

std::vector<Cx> conformal_singular(const std::function<Cx(Cx)>& psi, double R, int N) {
    if (N < 1) throw ArrangementError("conformal_singular requires N >= 1");
    std::vector<Cx> zeta(static_cast<std::size_t>(N));
    for (int k = 1; k <= N; ++k)
        zeta[k - 1] = psi(R * std::polar(1.0, 2.0 * std::numbers::pi * k / N));
    return zeta;
}

}  // namespace confmap
