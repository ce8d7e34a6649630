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

//! Instance families: the greedy counterexamples for `t >= 7`, the profiles
//! attaining the `2t` bounds, seeded random instances and exhaustive
//! enumeration of small part profiles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{verify_coloring, CountColoring, MultipartiteInstance};

/// Odd-`t` counterexample `K(2t-1, t+1, (t-1)/2 x4)` with its 3-coloring.
pub fn gen_counterexample_odd(t: usize) -> Result<(MultipartiteInstance, CountColoring)> {
    if t < 7 || t.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!(
            "odd counterexample needs odd t >= 7, got {t}"
        )));
    }
    let h = (t - 1) / 2;
    let parts = [2 * t - 1, t + 1, h, h, h, h];
    let rows = vec![
        vec![2 * t - 1, 0, 0, 0, 0, 0],
        vec![0, h + 1, h, h, 0, 0],
        vec![0, h + 1, 0, 0, h, h],
    ];
    certified(&parts, t, rows)
}

/// Even-`t` counterexample `K(2t-1, t+1, t/2, t/2, t/2-1, t/2-1)` with a
/// 3-coloring built the same way as the odd case.
pub fn gen_counterexample_even(t: usize) -> Result<(MultipartiteInstance, CountColoring)> {
    if t < 8 || t % 2 == 1 {
        return Err(Error::InvalidFamily(format!(
            "even counterexample needs even t >= 8, got {t}"
        )));
    }
    let h = t / 2;
    let parts = [2 * t - 1, t + 1, h, h, h - 1, h - 1];
    let rows = vec![
        vec![2 * t - 1, 0, 0, 0, 0, 0],
        vec![0, h, h, h, 0, 0],
        vec![0, h + 1, 0, 0, h - 1, h - 1],
    ];
    certified(&parts, t, rows)
}

/// Whichever counterexample family matches the parity of `t`.
pub fn gen_counterexample(t: usize) -> Result<(MultipartiteInstance, CountColoring)> {
    if t % 2 == 1 {
        gen_counterexample_odd(t)
    } else {
        gen_counterexample_even(t)
    }
}

fn certified(
    parts: &[usize],
    t: usize,
    rows: Vec<Vec<usize>>,
) -> Result<(MultipartiteInstance, CountColoring)> {
    let inst = MultipartiteInstance::new(parts, t)?;
    let col = CountColoring::from_original_order(&inst, rows)?;
    if !verify_coloring(&inst, &col)?.is_valid() {
        return Err(Error::InvalidFamily(format!(
            "certificate for {inst} failed verification"
        )));
    }
    Ok((inst, col))
}

/// The two profiles that attain the `2t` bounds with equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tightness {
    /// `r` parts of size `2t + 1` and `s - r` singletons: meets the upper
    /// bound.
    G1,
    /// `r` parts of size `2t` and `s - r` parts of size `t`: meets the
    /// lower bound.
    G2,
}

pub fn gen_tightness(kind: Tightness, r: usize, s: usize, t: usize) -> Result<MultipartiteInstance> {
    if r == 0 || s < r || t == 0 {
        return Err(Error::InvalidFamily(format!(
            "tightness family needs 1 <= r <= s and t >= 1, got r={r} s={s} t={t}"
        )));
    }
    let (big, small) = match kind {
        Tightness::G1 => (2 * t + 1, 1),
        Tightness::G2 => (2 * t, t),
    };
    let mut parts = vec![big; r];
    parts.resize(s, small);
    MultipartiteInstance::new(&parts, t)
}

/// Reproducible random instance with `1..=s_max` parts of size `1..=n_max`
/// and `t` in `1..=t_max`.
pub fn gen_random(seed: u64, s_max: usize, n_max: usize, t_max: usize) -> Result<MultipartiteInstance> {
    if s_max == 0 || n_max == 0 || t_max == 0 {
        return Err(Error::InvalidFamily("random caps must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = rng.random_range(1..=s_max);
    let parts: Vec<usize> = (0..s).map(|_| rng.random_range(1..=n_max)).collect();
    let t = rng.random_range(1..=t_max);
    MultipartiteInstance::new(&parts, t)
}

/// All part profiles (non-increasing, `1..=s_max` parts, sizes
/// `1..=n_max`), shortest first.
#[derive(Debug, Clone)]
pub struct Profiles {
    s_max: usize,
    n_max: usize,
    current: Option<Vec<usize>>,
}

impl Profiles {
    pub fn new(s_max: usize, n_max: usize) -> Self {
        let current = (s_max > 0 && n_max > 0).then(|| vec![1]);
        Self {
            s_max,
            n_max,
            current,
        }
    }
}

impl Iterator for Profiles {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // bump the rightmost entry that can grow without breaking the order
        let bump = (0..next.len())
            .rev()
            .find(|&i| next[i] < self.n_max && (i == 0 || next[i] < next[i - 1]));
        match bump {
            Some(i) => {
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|x| *x = 1);
                self.current = Some(next);
            }
            None if next.len() < self.s_max => self.current = Some(vec![1; next.len() + 1]),
            None => {}
        }
        Some(out)
    }
}

/// The `index`-th profile of [`Profiles`], if it exists.
pub fn profile_at(index: usize, s_max: usize, n_max: usize) -> Option<Vec<usize>> {
    Profiles::new(s_max, n_max).nth(index)
}
