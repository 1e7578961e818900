#pragma once

#include <optional>

#include "imbalance/ddt.hpp"
#include "imbalance/functable.hpp"
#include "imbalance/gfield.hpp"
#include "imbalance/indicators.hpp"
#include "imbalance/spectral.hpp"

namespace imbalance {

/// Everything the bound ledger and the reports read, computed once.
struct Analysis {
    FunctionTable f;
    DDTable ddt;
    DifferentialSpectrum spectrum;
    IndicatorReport indicators;
    std::size_t t_f = 0;
    bool apn = false;
    bool pn = false;
    bool bijective = false;

    /// Absent when the Fourier table is over its size cap.
    std::optional<FourierTable> fourier;
    std::optional<Linearity> linearity;
    std::optional<double> nonlinearity_normalized;
    std::optional<double> nonlinearity_classical;
    std::optional<FourthMoment> fourth_moment;
    std::optional<PlateauedProfile> plateaued;

    /// Set when the table is known to live on a field; power_exponent is then
    /// filled in when F is a monomial.
    std::optional<FieldSpec> field;
    std::optional<std::uint64_t> power_exponent;

    bool binary() const noexcept { return f.is_binary(); }
};

Analysis analyze(FunctionTable f, std::optional<FieldSpec> field = std::nullopt);

}  // namespace imbalance
