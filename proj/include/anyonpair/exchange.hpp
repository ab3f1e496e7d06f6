// Copyright 2026 The anyonpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>

namespace anyonpair {

using cplx = std::complex<double>;

/// Which difference-frequency half-line carries the +alpha*pi/2 phase.
/// `standard`: omega_- > 0 gets +alpha*pi/2 and omega_- < 0 gets -alpha*pi/2.
/// `swapped`: the mirror implementation, with the two sectors interchanged.
enum class SectorAssignment { standard, swapped };

inline double orientation(SectorAssignment sectors) { return sectors == SectorAssignment::standard ? 1.0 : -1.0; }

/// sign with sign(0) == 0.
inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Unnormalized member of the anyonic phase-matching family,
///   |omega/beta|^alpha * exp(i alpha (pi/2) sign(omega)) * exp(-omega^2 / (2 beta^2)),
/// with |0|^alpha := 0 for alpha > 0 and 1 for alpha == 0.
cplx anyon_pm_value(double alpha, double beta, double omega, SectorAssignment sectors = SectorAssignment::standard);

/// Throws ErrorKind::domain unless alpha is in [0, 1].
void require_alpha(double alpha);

}  // namespace anyonpair
