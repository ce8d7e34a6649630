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

// Instances where greedy needs 4 colors but 3 suffice, for t = 7..=22.
//
//     cargo run --example counterexamples

use std::error::Error;

use trelax::{bounds_report, gen_counterexample, greedy_color_count, verify_coloring};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("{:>3} {:<28} {:>5} {:>6} {:>6}", "t", "instance", "lower", "exact", "greedy");
    for t in 7..=22 {
        let (inst, cert) = gen_counterexample(t)?;
        assert!(verify_coloring(&inst, &cert)?.is_valid());
        // every part is below 2t, so the lower 2t bound is ceil((5t-2)/2t) = 3
        let lower = bounds_report(&inst).lower_2t;
        let greedy = greedy_color_count(&inst);
        let parts = format!("{:?}", inst.parts());
        println!("{t:>3} {parts:<28} {lower:>5} {:>6} {greedy:>6}", cert.num_colors());
        assert_eq!((lower, cert.num_colors(), greedy), (3, 3, 4));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
