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

//! Greedy t-relaxed coloring: repeatedly color a maximum t-sparse set of the
//! still-uncolored vertices with a fresh color.

use crate::instance::{CountColoring, MultipartiteInstance, SparseSelection};
use crate::sparse::max_sparse_sorted;

/// Output of [`greedy_coloring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyColoring {
    pub coloring: CountColoring,
    /// The extracted selections in order, over the instance's sorted parts.
    /// Row `i` of `coloring` equals `trace[i]`.
    pub trace: Vec<SparseSelection>,
    /// Arithmetic steps spent inside the maximum-sparse-set routine.
    pub sparse_ops: u64,
}

impl GreedyColoring {
    pub fn num_colors(&self) -> usize {
        self.coloring.num_colors()
    }

    /// Part sizes left uncolored after each extraction, over sorted parts.
    pub fn residuals(&self, inst: &MultipartiteInstance) -> Vec<Vec<usize>> {
        let mut left = inst.parts().to_vec();
        self.trace
            .iter()
            .map(|sel| {
                for (n, x) in left.iter_mut().zip(sel.picks()) {
                    *n -= x;
                }
                left.clone()
            })
            .collect()
    }
}

pub fn greedy_coloring(inst: &MultipartiteInstance) -> GreedyColoring {
    let t = inst.t();
    let s = inst.num_parts();
    // (sorted part index, uncolored vertices), kept sorted non-increasing
    let mut residual: Vec<(usize, usize)> = inst.parts().iter().copied().enumerate().collect();
    let mut sizes = Vec::with_capacity(s);
    let mut trace = Vec::new();
    let mut sparse_ops = 0;
    while !residual.is_empty() {
        sizes.clear();
        sizes.extend(residual.iter().map(|&(_, n)| n));
        let picks = max_sparse_sorted(&sizes, t, &mut sparse_ops);
        let mut row = vec![0; s];
        for (slot, &x) in residual.iter_mut().zip(&picks) {
            row[slot.0] = x;
            slot.1 -= x;
        }
        trace.push(SparseSelection::new(row));
        residual.retain(|&(_, n)| n > 0);
        residual.sort_by_key(|e| std::cmp::Reverse(e.1));
    }
    let rows = trace.iter().map(|sel| sel.picks().to_vec()).collect();
    let coloring = CountColoring::new(rows).expect("greedy classes are non-empty");
    GreedyColoring {
        coloring,
        trace,
        sparse_ops,
    }
}

pub fn greedy_color_count(inst: &MultipartiteInstance) -> usize {
    greedy_coloring(inst).num_colors()
}
