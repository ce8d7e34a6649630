// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Closed-form bounds on the t-relaxed chromatic number.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::MultipartiteInstance;

/// Every closed-form bound for one instance.
///
/// `r` counts parts with at least `2t` vertices and `sigma` is the number
/// of vertices in the remaining parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub r: usize,
    pub sigma: usize,
    /// `r + ceil(sigma / 2t)`
    pub lower_2t: usize,
    /// `r + ceil(sigma / (t + 1))`
    pub upper_2t: usize,
    /// `ceil((Δ + 1) / (t + 1))`
    pub upper_delta: usize,
    /// `ceil(χ / (t + 1))` with `χ = s`
    pub lower_chi: usize,
}

impl BoundsReport {
    pub fn lower(&self) -> usize {
        self.lower_2t.max(self.lower_chi)
    }

    pub fn upper(&self) -> usize {
        self.upper_2t.min(self.upper_delta)
    }
}

pub fn bounds_report(inst: &MultipartiteInstance) -> BoundsReport {
    let t = inst.t();
    let s = inst.num_parts();
    let r = inst.parts().iter().filter(|&&n| n >= 2 * t).count();
    let sigma: usize = inst.parts()[r..].iter().sum();
    let (lower_2t, upper_2t) = if t == 0 {
        // proper coloring: one color per part
        (s, s)
    } else {
        (r + sigma.div_ceil(2 * t), r + sigma.div_ceil(t + 1))
    };
    BoundsReport {
        r,
        sigma,
        lower_2t,
        upper_2t,
        upper_delta: (inst.max_degree() + 1).div_ceil(t + 1),
        lower_chi: inst.chromatic_number().div_ceil(t + 1),
    }
}

/// Largest possible color class that appears on exactly `r_parts >= 2`
/// parts: `t + floor(t / (r_parts - 1))`.
pub fn color_class_cap(r_parts: usize, t: usize) -> Result<usize> {
    if r_parts < 2 {
        return Err(Error::TooFewParts(r_parts));
    }
    Ok(t + t / (r_parts - 1))
}

/// `χ_1 = s - r₁ + ceil(r₁ / 2)` where `r₁` is the number of singleton
/// parts. The instance's own `t` is ignored.
pub fn chi_1_formula(inst: &MultipartiteInstance) -> usize {
    let singletons = inst.parts().iter().filter(|&&n| n == 1).count();
    inst.num_parts() - singletons + singletons.div_ceil(2)
}
