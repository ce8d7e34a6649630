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

use thiserror::Error;

/// Errors raised by instance construction, coloring checks and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("instance has no parts")]
    EmptyInstance,
    #[error("part at index {index} has size {size}; every part needs at least one vertex")]
    InvalidPartSize { index: usize, size: i64 },
    #[error("relaxation parameter t must be non-negative, got {0}")]
    NegativeT(i64),
    #[error("instance has too many vertices")]
    Overflow,
    #[error("coloring has {found} columns but the instance has {expected} parts")]
    ColumnMismatch { expected: usize, found: usize },
    #[error("coloring row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("coloring has no colors")]
    NoColors,
    #[error("color {0} is not used by any vertex")]
    EmptyColor(usize),
    #[error("part {part} has {expected} vertices but the coloring assigns {found}")]
    ColumnSum {
        part: usize,
        expected: usize,
        found: usize,
    },
    #[error("LP index {i} is outside 2..={max}")]
    LpIndexOutOfRange { i: usize, max: usize },
    #[error("a color class over {0} parts has no finite cap; need at least 2 parts")]
    TooFewParts(usize),
    #[error("number of colors must be positive")]
    ZeroColors,
    #[error("{0}")]
    InvalidFamily(String),
    #[error("search budget of {budget} nodes exhausted; chi_t lies in [{lower}, {upper}]")]
    Inconclusive {
        budget: u64,
        lower: usize,
        upper: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
