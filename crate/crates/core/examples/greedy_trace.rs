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

// The greedy coloring and its extraction trace.
//
//     cargo run --example greedy_trace -- 13,8,3,3,3,3 7

use std::error::Error;

use trelax::{bounds_report, greedy_coloring, MultipartiteInstance};

fn show(inst: &MultipartiteInstance) -> usize {
    let g = greedy_coloring(inst);
    println!("{inst}: {} colors", g.num_colors());
    for (i, (sel, left)) in g.trace.iter().zip(g.residuals(inst)).enumerate() {
        println!("  color {}: {:?} (size {}) leaves {:?}", i + 1, sel.picks(), sel.size(), left);
    }
    let b = bounds_report(inst);
    println!("  bounds: {} <= chi_t <= {}", b.lower(), b.upper());
    g.num_colors()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let used = show(&MultipartiteInstance::new(&[13, 8, 3, 3, 3, 3], 7)?);
    assert_eq!(used, 4);
    show(&MultipartiteInstance::new(&[1; 10], 3)?);
    show(&MultipartiteInstance::new(&[6, 6, 6], 3)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [parts, t] = args.as_slice() {
        let parts: Vec<usize> = parts.split(',').map(str::parse).collect::<Result<_, _>>()?;
        show(&MultipartiteInstance::new(&parts, t.parse()?)?);
        return Ok(());
    }
    run_example()
}
