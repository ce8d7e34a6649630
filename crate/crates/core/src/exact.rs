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

//! Exact t-relaxed chromatic number for small instances.
//!
//! The search walks the parts in sorted order and, for each part, tries
//! every way of splitting its vertices among `k` colors. What a color class
//! can still accept depends only on its running total `T` and its smallest
//! positive entry `m`: once `T > t` it is closed, otherwise it accepts up
//! to `t + m - T` more vertices from any single part. Colors whose `(T, m)`
//! state coincide are interchangeable, so they receive non-increasing
//! amounts. Failed states are memoized per part, and a branch is cut when
//! the remaining vertices exceed the total capacity left in all classes.

use std::collections::HashSet;

use crate::bounds::bounds_report;
use crate::error::{Error, Result};
use crate::greedy::greedy_color_count;
use crate::instance::{CountColoring, MultipartiteInstance};
use crate::sparse::max_sparse_sorted;

/// Node budget used by [`is_kt_colorable`] and [`chi_t_exact`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Colorability {
    /// A witness using at most `k` colors (unused colors are dropped).
    Colorable(CountColoring),
    NotColorable,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub outcome: Colorability,
    pub nodes_explored: u64,
}

/// Result of a completed exact solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub chi: usize,
    /// A valid coloring with exactly `chi` colors, columns over sorted parts.
    pub witness: CountColoring,
    /// Search nodes over all values of `k` tried.
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactSolver {
    budget: u64,
}

impl Default for ExactSolver {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}

impl ExactSolver {
    pub fn new(budget: u64) -> Self {
        Self { budget }
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    /// Decides whether `inst` has a t-relaxed coloring with at most `k`
    /// colors.
    pub fn is_kt_colorable(&self, inst: &MultipartiteInstance, k: usize) -> Result<Decision> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        let mut search = Search::new(inst, k, self.budget);
        let outcome = search.run();
        Ok(Decision {
            outcome,
            nodes_explored: search.nodes,
        })
    }

    /// Smallest `k` for which [`Self::is_kt_colorable`] succeeds, searching
    /// upward from the best closed-form lower bound. The node budget is
    /// shared across all values of `k`.
    pub fn chi_t_exact(&self, inst: &MultipartiteInstance) -> Result<SolveOutcome> {
        let bounds = bounds_report(inst);
        let mut nodes = 0;
        let mut k = bounds.lower();
        loop {
            let mut search = Search::new(inst, k, self.budget - nodes);
            let outcome = search.run();
            nodes += search.nodes;
            match outcome {
                Colorability::Colorable(witness) => {
                    debug_assert_eq!(witness.num_colors(), k);
                    return Ok(SolveOutcome {
                        chi: k,
                        witness,
                        nodes_explored: nodes,
                    });
                }
                Colorability::NotColorable => k += 1,
                Colorability::Inconclusive => {
                    return Err(Error::Inconclusive {
                        budget: self.budget,
                        lower: k,
                        upper: bounds.upper().min(greedy_color_count(inst)),
                    })
                }
            }
        }
    }
}

pub fn is_kt_colorable(inst: &MultipartiteInstance, k: usize) -> Result<Decision> {
    ExactSolver::default().is_kt_colorable(inst, k)
}

pub fn chi_t_exact(inst: &MultipartiteInstance) -> Result<SolveOutcome> {
    ExactSolver::default().chi_t_exact(inst)
}

/// Per-color search state, packed for cheap hashing.
///
/// `EMPTY` and `CLOSED` are sentinels; an open class with total `T <= t`
/// and smallest entry `m` is stored as `T << 16 | m`.
type ClassState = u32;
const EMPTY: ClassState = 0;
const CLOSED: ClassState = u32::MAX;

fn open_state(total: usize, min: usize) -> ClassState {
    ((total as u32) << 16) | min as u32
}

fn unpack(state: ClassState) -> (usize, usize) {
    ((state >> 16) as usize, (state & 0xffff) as usize)
}

struct Search<'a> {
    parts: &'a [usize],
    t: usize,
    k: usize,
    suffix_sum: Vec<usize>,
    /// Largest class that can be built from parts `h..` alone.
    fresh_cap: Vec<usize>,
    states: Vec<ClassState>,
    rows: Vec<Vec<usize>>,
    failed: Vec<HashSet<Box<[ClassState]>>>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl<'a> Search<'a> {
    fn new(inst: &'a MultipartiteInstance, k: usize, budget: u64) -> Self {
        let parts = inst.parts();
        let s = parts.len();
        let t = inst.t();
        let mut suffix_sum = vec![0; s + 1];
        let mut fresh_cap = vec![0; s + 1];
        let mut ops = 0;
        for h in (0..s).rev() {
            suffix_sum[h] = suffix_sum[h + 1] + parts[h];
            fresh_cap[h] = max_sparse_sorted(&parts[h..], t, &mut ops).iter().sum();
        }
        Self {
            parts,
            t,
            k,
            suffix_sum,
            fresh_cap,
            states: vec![EMPTY; k],
            rows: vec![vec![0; s]; k],
            failed: vec![HashSet::new(); s],
            nodes: 0,
            budget,
            exhausted: false,
        }
    }

    fn run(&mut self) -> Colorability {
        // the packed state holds totals up to 2^16
        assert!(self.t < 1 << 15, "t too large for the exact search");
        if !self.capacity_suffices(0) {
            return Colorability::NotColorable;
        }
        if self.place_part(0) {
            let rows = self
                .rows
                .iter()
                .filter(|row| row.iter().any(|&x| x > 0))
                .cloned()
                .collect();
            Colorability::Colorable(CountColoring::new(rows).expect("non-empty rows"))
        } else if self.exhausted {
            Colorability::Inconclusive
        } else {
            Colorability::NotColorable
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// Room for more vertices in a class, given parts `h..` remain.
    fn capacity(&self, state: ClassState, h: usize) -> usize {
        match state {
            EMPTY => self.fresh_cap[h],
            CLOSED => 0,
            open => {
                let (total, min) = unpack(open);
                self.t + min - total
            }
        }
    }

    fn capacity_suffices(&self, h: usize) -> bool {
        let need = self.suffix_sum[h];
        let mut have = 0;
        for &state in &self.states {
            have += self.capacity(state, h);
            if have >= need {
                return true;
            }
        }
        have >= need
    }

    fn memo_key(&self) -> Box<[ClassState]> {
        let mut key = self.states.clone();
        key.sort_unstable();
        key.into_boxed_slice()
    }

    fn place_part(&mut self, h: usize) -> bool {
        if h == self.parts.len() {
            return true;
        }
        if !self.tick() {
            return false;
        }
        let key = self.memo_key();
        if self.failed[h].contains(&key) {
            return false;
        }
        // How much each color may take from this part, and which earlier
        // color (if any) shares its state.
        let n = self.parts[h];
        let mut limit = vec![0; self.k];
        let mut twin = vec![None; self.k];
        for c in 0..self.k {
            limit[c] = match self.states[c] {
                EMPTY => n,
                state => self.capacity(state, h).min(n),
            };
            twin[c] = (0..c).rev().find(|&d| self.states[d] == self.states[c]);
        }
        let mut room_after = vec![0; self.k + 1];
        for c in (0..self.k).rev() {
            room_after[c] = room_after[c + 1] + limit[c];
        }
        let saved = self.states.clone();
        let found = self.distribute(h, 0, n, &limit, &twin, &room_after, &saved);
        if !found && !self.exhausted {
            self.failed[h].insert(key);
        }
        found
    }

    #[allow(clippy::too_many_arguments)]
    fn distribute(
        &mut self,
        h: usize,
        c: usize,
        left: usize,
        limit: &[usize],
        twin: &[Option<usize>],
        room_after: &[usize],
        saved: &[ClassState],
    ) -> bool {
        if left == 0 {
            for d in c..self.k {
                self.rows[d][h] = 0;
            }
            if !self.capacity_suffices(h + 1) {
                return false;
            }
            return self.place_part(h + 1);
        }
        if c == self.k || room_after[c] < left || !self.tick() {
            return false;
        }
        let mut hi = limit[c].min(left);
        if let Some(d) = twin[c] {
            hi = hi.min(self.rows[d][h]);
        }
        let lo = left.saturating_sub(room_after[c + 1]);
        for y in (lo..=hi).rev() {
            self.rows[c][h] = y;
            self.states[c] = advance(saved[c], y, self.t);
            if self.distribute(h, c + 1, left - y, limit, twin, room_after, saved) {
                return true;
            }
            if self.exhausted {
                break;
            }
        }
        self.rows[c][h] = 0;
        self.states[c] = saved[c];
        false
    }
}

/// State of a class after it receives `y` vertices from one more part.
/// `y` must respect the class's capacity.
fn advance(state: ClassState, y: usize, t: usize) -> ClassState {
    if y == 0 {
        return state;
    }
    let (total, min) = match state {
        EMPTY => (y, y),
        CLOSED => unreachable!("closed classes take nothing"),
        open => {
            let (total, min) = unpack(open);
            (total + y, min.min(y))
        }
    };
    if total > t {
        CLOSED
    } else {
        open_state(total, min)
    }
}
