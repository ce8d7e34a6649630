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

// Greedy against the exact oracle over every small part profile plus a
// batch of seeded random instances.
//
//     cargo run --release --example approximation_sweep

use std::error::Error;

use rayon::prelude::*;
use trelax::{chi_t_exact, gen_random, greedy_color_count, MultipartiteInstance, Profiles};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut suite = Vec::new();
    for t in 1..=6 {
        for parts in Profiles::new(4, 2 * t + 2).filter(|p| p.iter().sum::<usize>() <= 30) {
            suite.push(MultipartiteInstance::new(&parts, t)?);
        }
    }
    for seed in 0..200 {
        suite.push(gen_random(seed, 6, 8, 8)?);
    }
    let results: Vec<(usize, usize, usize)> = suite
        .par_iter()
        .map(|inst| {
            let chi = chi_t_exact(inst).map(|o| o.chi).unwrap_or(0);
            (inst.t(), greedy_color_count(inst), chi)
        })
        .collect();

    for t in 1..=8 {
        let rows: Vec<_> = results.iter().filter(|r| r.0 == t && r.2 > 0).collect();
        let worse = rows.iter().filter(|r| r.1 > r.2).count();
        let ratio = rows.iter().map(|r| r.1 as f64 / r.2 as f64).fold(1.0, f64::max);
        println!("t={t}: {:>5} instances, greedy suboptimal on {worse:>3}, max ratio {ratio:.3}", rows.len());
        assert!(ratio <= 2.0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
