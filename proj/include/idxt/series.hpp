#pragma once

#include <string>

#include "idxt/types.hpp"

namespace idxt {

enum class SeriesStatus { converged, truncated, regularized };

inline std::string to_string(SeriesStatus s) {
    switch (s) {
        case SeriesStatus::converged: return "converged";
        case SeriesStatus::truncated: return "truncated";
        default: return "regularized";
    }
}

// Value of a summed series together with an honest absolute error estimate.
struct SeriesValue {
    cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long terms_used = 0;
    SeriesStatus status = SeriesStatus::converged;
};

} // namespace idxt
