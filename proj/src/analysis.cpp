#include "imbalance/analysis.hpp"

namespace imbalance {

Analysis analyze(FunctionTable f, std::optional<FieldSpec> field) {
    Analysis a;
    a.f = std::move(f);
    a.ddt = DDTable(a.f);
    a.spectrum = spectrum(a.ddt);
    a.indicators = indicators(a.f, a.ddt, a.spectrum);
    a.t_f = t_f(a.ddt);
    a.apn = a.spectrum.delta <= 2;
    a.pn = is_pn(a.f, a.ddt);
    a.bijective = a.f.is_bijective();

    const std::size_t n = a.f.domain().order();
    const std::size_t m = a.f.codomain().order();
    if (n <= kMaxFourierEntries / m) {
        a.fourier = fourier(a.f);
        a.linearity = linearity(*a.fourier);
        a.nonlinearity_normalized = nonlinearity_normalized(*a.fourier, *a.linearity);
        if (a.binary()) {
            a.nonlinearity_classical = nonlinearity_classical(*a.fourier, *a.linearity);
            a.plateaued = plateaued_profile(*a.fourier);
        }
        a.fourth_moment = fourth_moment(*a.fourier);
    }
    if (field && field->group() == a.f.domain()) {
        a.power_exponent = power_exponent(*field, a.f);
        a.field = std::move(field);
    }
    return a;
}

}  // namespace imbalance
