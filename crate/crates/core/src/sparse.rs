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

//! Maximum t-sparse sets of complete multi-partite graphs.
//!
//! A t-sparse set that touches `i >= 2` parts has at most `t` vertices
//! outside its smallest touched part, so it meets at most `t + 1` parts and
//! the best one over `i` parts always uses the `i` largest. For each `i`
//! the restricted integer program has a closed-form optimum; the overall
//! maximum is the best of those and of the whole largest part.

use crate::error::{Error, Result};
use crate::instance::{MultipartiteInstance, SparseSelection};

/// Optimum of the restricted program over the `i` largest parts of `inst`.
///
/// The returned selection has exactly `i` entries, all positive and
/// non-increasing; its size is the optimal value `M_i`.
pub fn solve_lp(i: usize, inst: &MultipartiteInstance) -> Result<SparseSelection> {
    let max = inst.num_parts().min(inst.t() + 1);
    if i < 2 || i > max {
        return Err(Error::LpIndexOutOfRange { i, max });
    }
    let mut ops = 0;
    Ok(SparseSelection::new(solve_lp_sorted(
        i,
        inst.parts(),
        inst.t(),
        &mut ops,
    )))
}

/// Closed-form LP(i) on a slice sorted non-increasing. Caller guarantees
/// `2 <= i <= min(parts.len(), t + 1)`.
fn solve_lp_sorted(i: usize, parts: &[usize], t: usize, ops: &mut u64) -> Vec<usize> {
    let last = parts[i - 1];
    let per_part = t / (i - 1);
    let (floor_level, budget) = if last <= per_part {
        let head: usize = parts[..i - 1].iter().sum();
        *ops += (i - 1) as u64;
        (last, t.min(head))
    } else {
        (per_part, t)
    };
    let mut picks = Vec::with_capacity(i);
    let mut remaining = budget;
    // Fill the first i-1 parts greedily while reserving floor_level for each
    // slot still to come; this keeps the picks non-increasing.
    for (j, &n) in parts[..i - 1].iter().enumerate() {
        let reserved = (i - 2 - j) * floor_level;
        let x = n.min(remaining - reserved);
        picks.push(x);
        remaining -= x;
        *ops += 1;
    }
    debug_assert_eq!(remaining, 0);
    picks.push(floor_level);
    picks
}

/// Maximum t-sparse set over parts sorted non-increasing, adding the number
/// of arithmetic steps taken to `ops`. The selection has one entry per part.
pub(crate) fn max_sparse_sorted(parts: &[usize], t: usize, ops: &mut u64) -> Vec<usize> {
    let s = parts.len();
    let mut best = vec![0; s];
    best[0] = parts[0];
    *ops += 1;
    if parts[0] >= 2 * t {
        return best;
    }
    // The whole first part is always t-sparse and competes as i = 1.
    let mut best_size = parts[0];
    for i in 2..=s.min(t + 1) {
        let picks = solve_lp_sorted(i, parts, t, ops);
        let size: usize = picks.iter().sum();
        *ops += 1;
        if size > best_size {
            best_size = size;
            best[..i].copy_from_slice(&picks);
            best[i..].iter_mut().for_each(|x| *x = 0);
        }
    }
    best
}

/// A maximum t-sparse set of `inst`, indexed by the instance's sorted parts.
///
/// Ties between candidates are broken towards fewer touched parts.
pub fn max_t_sparse(inst: &MultipartiteInstance) -> SparseSelection {
    max_t_sparse_counted(inst).0
}

/// [`max_t_sparse`] together with the number of arithmetic steps it took.
pub fn max_t_sparse_counted(inst: &MultipartiteInstance) -> (SparseSelection, u64) {
    let mut ops = 0;
    let picks = max_sparse_sorted(inst.parts(), inst.t(), &mut ops);
    (SparseSelection::new(picks), ops)
}

/// `β_t`: the order of a largest t-sparse set.
pub fn beta_t(inst: &MultipartiteInstance) -> usize {
    max_t_sparse(inst).size()
}
