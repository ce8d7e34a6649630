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

//! Complete multi-partite instances, count-matrix colorings and t-sparse
//! selections.
//!
//! A complete multi-partite graph `K(n_1, ..., n_s)` is determined by its
//! part sizes, and vertices inside one part are interchangeable. Everything
//! here therefore works at count granularity: a coloring is the matrix
//! `m[r][h]` of how many vertices of part `h` receive color `r`.

use std::fmt;

use crate::error::{Error, Result};

/// Part-size profile of a complete multi-partite graph plus the relaxation
/// parameter `t`.
///
/// Parts are kept sorted non-increasing. The position each sorted part had
/// in the caller's input is retained so colorings can be reported in the
/// original order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteInstance {
    parts: Vec<usize>,
    original: Vec<usize>,
    t: usize,
}

impl MultipartiteInstance {
    pub fn new(sizes: &[usize], t: usize) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if let Some(index) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::InvalidPartSize { index, size: 0 });
        }
        sizes
            .iter()
            .try_fold(0usize, |acc, &n| acc.checked_add(n))
            .ok_or(Error::Overflow)?;
        let mut original: Vec<usize> = (0..sizes.len()).collect();
        // stable: equal parts keep their input order
        original.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
        let parts = original.iter().map(|&j| sizes[j]).collect();
        Ok(Self { parts, original, t })
    }

    /// Builds an instance from signed values as they appear in files and on
    /// the command line, rejecting non-positive sizes and negative `t`.
    pub fn from_signed(sizes: &[i64], t: i64) -> Result<Self> {
        if t < 0 {
            return Err(Error::NegativeT(t));
        }
        if sizes.is_empty() {
            return Err(Error::EmptyInstance);
        }
        let mut unsigned = Vec::with_capacity(sizes.len());
        for (index, &size) in sizes.iter().enumerate() {
            if size < 1 {
                return Err(Error::InvalidPartSize { index, size });
            }
            unsigned.push(usize::try_from(size).map_err(|_| Error::Overflow)?);
        }
        Self::new(&unsigned, usize::try_from(t).map_err(|_| Error::Overflow)?)
    }

    /// Part sizes, sorted non-increasing.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Same parts, different relaxation parameter.
    pub fn with_t(&self, t: usize) -> Self {
        Self { t, ..self.clone() }
    }

    /// Number of parts `s`.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Δ = n - n_s`: a vertex of the smallest part sees everything else.
    pub fn max_degree(&self) -> usize {
        self.num_vertices() - self.parts[self.parts.len() - 1]
    }

    /// `ω = χ = s`.
    pub fn chromatic_number(&self) -> usize {
        self.parts.len()
    }

    pub fn clique_number(&self) -> usize {
        self.parts.len()
    }

    /// Position in the caller's input of sorted part `j`.
    pub fn original_index(&self, j: usize) -> usize {
        self.original[j]
    }

    /// Part sizes in the caller's original order.
    pub fn original_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.parts.len()];
        for (j, &orig) in self.original.iter().enumerate() {
            sizes[orig] = self.parts[j];
        }
        sizes
    }
}

impl fmt::Display for MultipartiteInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K(")?;
        for (j, n) in self.parts.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "), t={}", self.t)
    }
}

/// Returns `total - min positive entry` of a color class, or 0 for a class
/// that touches at most one part.
///
/// A vertex in part `h` has `total - m[h]` same-colored neighbours, and the
/// worst vertex is in the least-populated touched part.
pub fn class_defect(row: &[usize]) -> usize {
    let mut total = 0;
    let mut min = usize::MAX;
    for &x in row.iter().filter(|&&x| x > 0) {
        total += x;
        min = min.min(x);
    }
    if total == 0 {
        0
    } else {
        total - min
    }
}

/// Whether a per-part count vector describes a t-sparse vertex set.
pub fn is_t_sparse(row: &[usize], t: usize) -> bool {
    class_defect(row) <= t
}

/// A t-relaxed coloring stored as a color-by-part count matrix.
///
/// Columns follow the instance's sorted part order. Use
/// [`CountColoring::from_original_order`] and
/// [`CountColoring::to_original_order`] at I/O boundaries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountColoring {
    counts: Vec<Vec<usize>>,
}

impl CountColoring {
    /// Builds a coloring from rows indexed by color. Rows must be non-empty,
    /// of equal length, and every color must be used.
    pub fn new(counts: Vec<Vec<usize>>) -> Result<Self> {
        let width = counts.first().ok_or(Error::NoColors)?.len();
        for (row, entries) in counts.iter().enumerate() {
            if entries.len() != width {
                return Err(Error::RaggedRow {
                    row,
                    expected: width,
                    found: entries.len(),
                });
            }
            if entries.iter().all(|&x| x == 0) {
                return Err(Error::EmptyColor(row));
            }
        }
        Ok(Self { counts })
    }

    /// Builds a coloring whose columns follow the instance's original
    /// (unsorted) part order.
    pub fn from_original_order(inst: &MultipartiteInstance, rows: Vec<Vec<usize>>) -> Result<Self> {
        let col = Self::new(rows)?;
        if col.num_parts() != inst.num_parts() {
            return Err(Error::ColumnMismatch {
                expected: inst.num_parts(),
                found: col.num_parts(),
            });
        }
        let counts = col
            .counts
            .iter()
            .map(|row| (0..inst.num_parts()).map(|j| row[inst.original_index(j)]).collect())
            .collect();
        Ok(Self { counts })
    }

    /// Rows with columns permuted back into the instance's original order.
    pub fn to_original_order(&self, inst: &MultipartiteInstance) -> Vec<Vec<usize>> {
        self.counts
            .iter()
            .map(|row| {
                let mut out = vec![0; row.len()];
                for (j, &x) in row.iter().enumerate() {
                    out[inst.original_index(j)] = x;
                }
                out
            })
            .collect()
    }

    pub fn num_colors(&self) -> usize {
        self.counts.len()
    }

    pub fn num_parts(&self) -> usize {
        self.counts[0].len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn row(&self, color: usize) -> &[usize] {
        &self.counts[color]
    }

    pub fn count(&self, color: usize, part: usize) -> usize {
        self.counts[color][part]
    }

    pub fn class_size(&self, color: usize) -> usize {
        self.counts[color].iter().sum()
    }

    /// Re-aggregates a per-vertex labelling (1-based colors, grouped by
    /// original part) into a count matrix.
    pub fn from_labels(
        inst: &MultipartiteInstance,
        labels: &[Vec<usize>],
        num_colors: usize,
    ) -> Result<Self> {
        if labels.len() != inst.num_parts() {
            return Err(Error::ColumnMismatch {
                expected: inst.num_parts(),
                found: labels.len(),
            });
        }
        let mut rows = vec![vec![0; inst.num_parts()]; num_colors];
        for (orig, part) in labels.iter().enumerate() {
            for &color in part {
                if color == 0 || color > num_colors {
                    return Err(Error::ColumnMismatch {
                        expected: num_colors,
                        found: color,
                    });
                }
                rows[color - 1][orig] += 1;
            }
        }
        Self::from_original_order(inst, rows)
    }
}

impl fmt::Display for CountColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.counts.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "color {}: ({})", r + 1, cells.join(", "))?;
        }
        Ok(())
    }
}

/// A vertex of part `part` in class `color` has `excess` more same-colored
/// neighbours than allowed. Indices are 0-based over sorted parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub color: usize,
    pub part: usize,
    pub excess: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks a count-matrix coloring against an instance.
///
/// Structural problems (wrong width, column sums that don't match part
/// sizes) are errors; a well-formed coloring in which some vertex has more
/// than `t` same-colored neighbours yields [`Verdict::Invalid`].
pub fn verify_coloring(inst: &MultipartiteInstance, col: &CountColoring) -> Result<Verdict> {
    check_structure(inst, col)?;
    let t = inst.t();
    let mut violations = Vec::new();
    for (color, row) in col.rows().iter().enumerate() {
        let total: usize = row.iter().sum();
        for (part, &m) in row.iter().enumerate() {
            if m > 0 && total - m > t {
                violations.push(Violation {
                    color,
                    part,
                    excess: total - m - t,
                });
            }
        }
    }
    Ok(if violations.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Invalid(violations)
    })
}

fn check_structure(inst: &MultipartiteInstance, col: &CountColoring) -> Result<()> {
    if col.num_parts() != inst.num_parts() {
        return Err(Error::ColumnMismatch {
            expected: inst.num_parts(),
            found: col.num_parts(),
        });
    }
    for (part, &expected) in inst.parts().iter().enumerate() {
        let found: usize = col.rows().iter().map(|row| row[part]).sum();
        if found != expected {
            return Err(Error::ColumnSum {
                part,
                expected,
                found,
            });
        }
    }
    Ok(())
}

/// Per-vertex colors (1-based), grouped by part in the instance's original
/// order. Within a part, colors are handed out in ascending color index as
/// consecutive blocks.
pub fn expand_labels(inst: &MultipartiteInstance, col: &CountColoring) -> Result<Vec<Vec<usize>>> {
    check_structure(inst, col)?;
    let mut labels = vec![Vec::new(); inst.num_parts()];
    for (j, &n) in inst.parts().iter().enumerate() {
        let part = &mut labels[inst.original_index(j)];
        part.reserve(n);
        for (color, row) in col.rows().iter().enumerate() {
            part.extend(std::iter::repeat_n(color + 1, row[j]));
        }
    }
    Ok(labels)
}

/// Per-part pick counts of a t-sparse vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseSelection {
    picks: Vec<usize>,
    size: usize,
}

impl SparseSelection {
    pub fn new(picks: Vec<usize>) -> Self {
        let size = picks.iter().sum();
        Self { picks, size }
    }

    pub fn picks(&self) -> &[usize] {
        &self.picks
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts the selection touches.
    pub fn support(&self) -> usize {
        self.picks.iter().filter(|&&x| x > 0).count()
    }

    pub fn is_t_sparse(&self, t: usize) -> bool {
        is_t_sparse(&self.picks, t)
    }

    /// Checks both type invariants: `x_j <= n_j` and the t-sparse degree
    /// condition.
    pub fn is_valid_for(&self, parts: &[usize], t: usize) -> bool {
        self.picks.len() <= parts.len()
            && self.picks.iter().zip(parts).all(|(x, n)| x <= n)
            && self.is_t_sparse(t)
    }

    pub fn into_picks(self) -> Vec<usize> {
        self.picks
    }
}
