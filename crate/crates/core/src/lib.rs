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

//! t-relaxed (defective) colorings of complete multi-partite graphs.
//!
//! A coloring is t-relaxed when every vertex has at most `t` neighbours of
//! its own color. For `K(n_1, ..., n_s)` the whole graph is described by
//! its part sizes, so this crate works with part-size profiles and
//! color-by-part count matrices throughout:
//!
//! * [`sparse`]: maximum t-sparse sets in closed form,
//! * [`greedy`]: the greedy coloring built on them (at most twice optimal),
//! * [`bounds`]: closed-form lower and upper bounds,
//! * [`exact`]: a branch-and-bound oracle for small instances,
//! * [`gen`]: counterexample, tightness, random and exhaustive families.
//!
//! ```
//! use trelax::{greedy_color_count, chi_t_exact, MultipartiteInstance};
//!
//! let inst = MultipartiteInstance::new(&[13, 8, 3, 3, 3, 3], 7).unwrap();
//! assert_eq!(greedy_color_count(&inst), 4);
//! assert_eq!(chi_t_exact(&inst).unwrap().chi, 3);
//! ```

pub mod bounds;
pub mod cli;
pub mod error;
pub mod exact;
pub mod gen;
pub mod greedy;
pub mod instance;
pub mod io;
pub mod sparse;

pub use bounds::{bounds_report, chi_1_formula, color_class_cap, BoundsReport};
pub use error::{Error, Result};
pub use exact::{chi_t_exact, is_kt_colorable, Colorability, Decision, ExactSolver, SolveOutcome};
pub use gen::{
    gen_counterexample, gen_counterexample_even, gen_counterexample_odd, gen_random,
    gen_tightness, profile_at, Profiles, Tightness,
};
pub use greedy::{greedy_color_count, greedy_coloring, GreedyColoring};
pub use instance::{
    expand_labels, verify_coloring, CountColoring, MultipartiteInstance, SparseSelection, Verdict,
    Violation,
};
pub use sparse::{beta_t, max_t_sparse, solve_lp};
