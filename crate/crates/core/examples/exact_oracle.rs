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

// The exact branch-and-bound oracle, including an explicit inconclusive
// result when the node budget is too small.
//
//     cargo run --example exact_oracle

use std::error::Error;

use trelax::{chi_t_exact, is_kt_colorable, Colorability, ExactSolver, MultipartiteInstance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inst = MultipartiteInstance::new(&[13, 8, 3, 3, 3, 3], 7)?;
    for k in 2..=3 {
        let d = is_kt_colorable(&inst, k)?;
        let verdict = match &d.outcome {
            Colorability::Colorable(_) => "yes",
            Colorability::NotColorable => "no",
            Colorability::Inconclusive => "unknown",
        };
        println!("{inst}: {k} colors? {verdict} ({} nodes)", d.nodes_explored);
    }
    let out = chi_t_exact(&inst)?;
    println!("chi_t = {} after {} nodes, witness:\n{}", out.chi, out.nodes_explored, out.witness);

    let hard = MultipartiteInstance::new(&[6, 6, 6, 5, 5], 4)?;
    match ExactSolver::new(10).chi_t_exact(&hard) {
        Ok(out) => println!("{hard}: chi_t = {}", out.chi),
        Err(e) => println!("{hard}: {e}"),
    }
    let out = ExactSolver::default().chi_t_exact(&hard)?;
    println!("{hard}: chi_t = {} with the default budget", out.chi);
    assert_eq!(out.chi, 5);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
