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

//! JSON documents for instances and colorings.
//!
//! An instance file is `{"t": 7, "parts": [13, 8, 3, 3, 3, 3]}`; parts may
//! be listed in any order. A coloring file adds `"colors"`, the count
//! matrix with one row per color and columns in the file's part order.
//! Unknown fields are ignored, so richer reports can be fed back in.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::instance::{CountColoring, MultipartiteInstance};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Instance(#[from] Error),
    #[error("color {color} has negative count {value}")]
    NegativeCount { color: usize, value: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDoc {
    pub t: i64,
    pub parts: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDoc {
    pub t: i64,
    pub parts: Vec<i64>,
    pub colors: Vec<Vec<i64>>,
}

impl InstanceDoc {
    pub fn of(inst: &MultipartiteInstance) -> Self {
        Self {
            t: inst.t() as i64,
            parts: inst.original_sizes().into_iter().map(|n| n as i64).collect(),
        }
    }

    pub fn to_instance(&self) -> Result<MultipartiteInstance, FormatError> {
        Ok(MultipartiteInstance::from_signed(&self.parts, self.t)?)
    }
}

impl ColoringDoc {
    /// Document for a coloring, with columns in the instance's original
    /// part order.
    pub fn of(inst: &MultipartiteInstance, col: &CountColoring) -> Self {
        let InstanceDoc { t, parts } = InstanceDoc::of(inst);
        let colors = col
            .to_original_order(inst)
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as i64).collect())
            .collect();
        Self { t, parts, colors }
    }

    pub fn to_coloring(&self) -> Result<(MultipartiteInstance, CountColoring), FormatError> {
        let inst = MultipartiteInstance::from_signed(&self.parts, self.t)?;
        let mut rows = Vec::with_capacity(self.colors.len());
        for (color, row) in self.colors.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for &value in row {
                let x = usize::try_from(value).map_err(|_| FormatError::NegativeCount {
                    color: color + 1,
                    value,
                })?;
                out.push(x);
            }
            rows.push(out);
        }
        let col = CountColoring::from_original_order(&inst, rows)?;
        Ok((inst, col))
    }
}

pub fn parse_instance(text: &str) -> Result<MultipartiteInstance, FormatError> {
    serde_json::from_str::<InstanceDoc>(text)?.to_instance()
}

pub fn parse_coloring(text: &str) -> Result<(MultipartiteInstance, CountColoring), FormatError> {
    serde_json::from_str::<ColoringDoc>(text)?.to_coloring()
}
