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

// Closed-form bounds, the class-size cap, the t = 1 formula and the two
// profiles that meet the bounds exactly.
//
//     cargo run --example bounds_and_formulas

use std::error::Error;

use trelax::{
    bounds_report, chi_1_formula, chi_t_exact, color_class_cap, gen_tightness, MultipartiteInstance,
    Tightness,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for t in 1..=3 {
        for (kind, r, s) in [(Tightness::G1, 2, 5), (Tightness::G2, 2, 4)] {
            let inst = gen_tightness(kind, r, s, t)?;
            let b = bounds_report(&inst);
            let chi = chi_t_exact(&inst)?.chi;
            println!(
                "{kind:?} {inst}: r={} sigma={} lower_2t={} upper_2t={} exact={chi}",
                b.r, b.sigma, b.lower_2t, b.upper_2t
            );
            match kind {
                Tightness::G1 => assert_eq!(chi, b.upper_2t),
                Tightness::G2 => assert_eq!(chi, b.lower_2t),
            }
        }
    }

    for r in 2..=5 {
        println!("a class on {r} parts holds at most {} vertices at t=7", color_class_cap(r, 7)?);
    }

    for parts in [vec![3, 2, 1, 1, 1], vec![1; 6], vec![5, 4]] {
        let inst = MultipartiteInstance::new(&parts, 1)?;
        println!("{inst}: chi_1 = {}", chi_1_formula(&inst));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
