// Copyright 2026 The ccq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Default unit system: energies in micro-eV, times in ps, capacitances in F,
// voltages in V, temperatures in K.
namespace ccq::units {

/// Reduced Planck constant, ueV * ps.
inline constexpr double hbar_ueV_ps = 658.2119569;

/// Boltzmann constant, ueV / K.
inline constexpr double kB_ueV_per_K = 86.17333;

/// Elementary charge, C.
inline constexpr double e_charge = 1.602176634e-19;

/// Conversion J -> ueV.
inline constexpr double joule_to_ueV = 1e6 / e_charge;

} // namespace ccq::units
