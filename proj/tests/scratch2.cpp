#include <cstdio>
#include "autforms/transforms.hpp"
using namespace autforms;
KirillovVector run_once(double wmax, double wstep, cx nu, const std::function<cx(double)>& bump) {
    KirillovVector mid;
    for (double lu = std::log(1e-6); lu < 0.0; lu += 0.02) mid.u_pos.push_back(std::exp(lu));
    for (double w = 1.0; w <= wmax; w += wstep) mid.u_pos.push_back(w * w);
    mid.u_neg = mid.u_pos;
    mid.v_pos.assign(mid.u_pos.size(), 0.0);
    mid.v_neg.assign(mid.u_neg.size(), 0.0);
    auto f = KirillovVector::make_grid(0.5, 8.0, 400);
    f.fill([&](double u) { return u > 0 ? bump(u) : cx(0.0); });
    return bessel_transform(f, {nu}, mid);
}
int main() {
    cx nu(0.0, 0.2);
    auto bump = [](double u) -> cx {
        if (u <= 1.0 || u >= 4.0) return 0.0;
        double t = (u - 1.0) / 3.0;
        return std::exp(-1.0 / (t * (1.0 - t)));
    };
    auto score = KirillovVector::make_grid(0.02, 30.0, 12);
    for (auto [wmax, wstep] : {std::pair{100.0, 0.016}, {150.0, 0.016}, {100.0, 0.008}, {150.0, 0.008}}) {
        auto once = run_once(wmax, wstep, nu, bump);
        auto twice = bessel_transform(once, {nu}, score);
        double worst = 0.0;
        for (std::size_t i = 0; i < score.u_pos.size(); ++i)
            worst = std::max(worst, std::abs(twice.v_pos[i] - bump(score.u_pos[i])));
        std::printf("wmax=%4.0f wstep=%.3f: worst abs err = %.3e\n", wmax, wstep, worst);
    }
    return 0;
}
