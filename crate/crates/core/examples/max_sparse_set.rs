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

// Maximum t-sparse sets: the per-`i` closed form and the overall maximum.
//
//     cargo run --example max_sparse_set

use std::error::Error;

use trelax::{beta_t, max_t_sparse, solve_lp, MultipartiteInstance};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let inst = MultipartiteInstance::new(&[6, 3, 3, 3, 3, 1], 7)?;
    println!("{inst}");
    for i in 2..=inst.num_parts().min(inst.t() + 1) {
        let sel = solve_lp(i, &inst)?;
        println!("  best over the {i} largest parts: {:?} (size {})", sel.picks(), sel.size());
    }
    let best = max_t_sparse(&inst);
    println!("  maximum: {:?}, beta_t = {}", best.picks(), best.size());
    assert_eq!(best.picks(), &[4, 3, 3, 0, 0, 0]);

    // a part with at least 2t vertices is a maximum t-sparse set by itself
    let big = MultipartiteInstance::new(&[20, 5], 7)?;
    println!("{big}: beta_t = {}", beta_t(&big));

    // and so can a smaller one when the others are tiny
    let lopsided = MultipartiteInstance::new(&[13, 1], 7)?;
    println!("{lopsided}: beta_t = {}", beta_t(&lopsided));
    assert_eq!(beta_t(&lopsided), 13);

    for t in 1..=4 {
        let kn = MultipartiteInstance::new(&[1; 10], t)?;
        println!("K_10, t={t}: beta_t = {}", beta_t(&kn));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
