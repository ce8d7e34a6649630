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

// Building an instance, checking a coloring and expanding it to
// per-vertex labels.
//
//     cargo run --example instance_basics

use std::error::Error;

use trelax::io::{parse_coloring, ColoringDoc};
use trelax::{expand_labels, verify_coloring, CountColoring, MultipartiteInstance, Verdict};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // parts may come in any order; they are kept sorted internally
    let inst = MultipartiteInstance::new(&[3, 8, 13, 3, 3, 3], 7)?;
    println!("{inst}: n = {}, max degree = {}", inst.num_vertices(), inst.max_degree());

    let g = CountColoring::new(vec![
        vec![13, 0, 0, 0, 0, 0],
        vec![0, 4, 3, 3, 0, 0],
        vec![0, 4, 0, 0, 3, 3],
    ])?;
    let verdict = verify_coloring(&inst, &g)?;
    println!("3-coloring:\n{g}verdict: {verdict:?}");
    assert!(verdict.is_valid());

    // one color on K(2,2) leaves every vertex with two same-colored neighbours
    let k22 = MultipartiteInstance::new(&[2, 2], 1)?;
    let single = CountColoring::new(vec![vec![2, 2]])?;
    if let Verdict::Invalid(violations) = verify_coloring(&k22, &single)? {
        for v in violations {
            println!("K(2,2): color {} on part {} exceeds t by {}", v.color + 1, v.part + 1, v.excess);
        }
    }

    let labels = expand_labels(&inst, &g)?;
    for (part, colors) in labels.iter().enumerate() {
        println!("part {} -> {colors:?}", part + 1);
    }

    let doc = serde_json::to_string(&ColoringDoc::of(&inst, &g))?;
    println!("as a coloring file: {doc}");
    let (again, col) = parse_coloring(&doc)?;
    assert_eq!(again, inst);
    assert_eq!(col, g);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
