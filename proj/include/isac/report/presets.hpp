#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "isac/link_budget.hpp"

namespace isac::report {

/// Names of the built-in parameter sets, in display order.
const std::vector<std::string_view>& preset_names();

/**
 * Built-in parameter set, or nullopt for an unknown name.
 *
 * config1..config4 are the SNR-analysis sets (G_P = 1), sub6/mmwave/subthz the
 * range-analysis bands (G_P = 1024 samples). All share G_UE = 4,
 * N_UE = N_BS = -174 dBm/Hz and a default transmit power of 30 dBm.
 */
std::optional<SystemParams> find_preset(std::string_view name);

}  // namespace isac::report
