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

//! Independent brute-force oracles. Nothing here calls into the crate's
//! solvers; they only share the problem definition.

#![allow(dead_code)]

/// Same-colored neighbours of the worst vertex in a class: total minus the
/// smallest positive entry.
pub fn worst_degree(row: &[usize]) -> usize {
    let touched: Vec<usize> = row.iter().copied().filter(|&x| x > 0).collect();
    match touched.iter().min() {
        Some(&min) => touched.iter().sum::<usize>() - min,
        None => 0,
    }
}

/// Largest t-sparse pick vector, by depth-first enumeration of every
/// `0 <= x_j <= n_j`. Prunes only on infeasibility, which is monotone:
/// adding picks never lowers the worst degree.
pub fn brute_beta(parts: &[usize], t: usize) -> usize {
    fn go(parts: &[usize], t: usize, x: &mut Vec<usize>, best: &mut usize) {
        if worst_degree(x) > t {
            return;
        }
        if x.len() == parts.len() {
            *best = (*best).max(x.iter().sum());
            return;
        }
        for v in 0..=parts[x.len()] {
            x.push(v);
            go(parts, t, x, best);
            x.pop();
        }
    }
    let mut best = 0;
    go(parts, t, &mut Vec::new(), &mut best);
    best
}

/// Optimum of the restricted program over the first `i` parts: every part
/// gets at least one pick, by plain enumeration.
pub fn brute_lp(i: usize, parts: &[usize], t: usize) -> usize {
    fn go(parts: &[usize], t: usize, x: &mut Vec<usize>, best: &mut usize) {
        if worst_degree(x) > t {
            return;
        }
        if x.len() == parts.len() {
            *best = (*best).max(x.iter().sum());
            return;
        }
        for v in 1..=parts[x.len()] {
            x.push(v);
            go(parts, t, x, best);
            x.pop();
        }
    }
    let mut best = 0;
    go(&parts[..i], t, &mut Vec::new(), &mut best);
    best
}

/// Largest class that touches exactly `r >= 2` parts, with no limit on
/// part sizes (an entry above `t` is never feasible once two parts are
/// touched).
pub fn brute_class_cap(r: usize, t: usize) -> usize {
    let parts = vec![t; r];
    brute_lp(r, &parts, t)
}

/// Whether `parts` splits into `k` t-sparse classes, by trying every
/// composition of every part into `k` colors (no symmetry breaking). Only
/// infeasible partial classes are cut.
pub fn naive_colorable(parts: &[usize], t: usize, k: usize) -> bool {
    fn place(parts: &[usize], t: usize, h: usize, classes: &mut Vec<Vec<usize>>) -> bool {
        if h == parts.len() {
            return true;
        }
        split(parts, t, h, 0, parts[h], classes)
    }
    fn split(
        parts: &[usize],
        t: usize,
        h: usize,
        c: usize,
        left: usize,
        classes: &mut Vec<Vec<usize>>,
    ) -> bool {
        let k = classes.len();
        if c == k - 1 {
            classes[c].push(left);
            let ok = worst_degree(&classes[c]) <= t && place(parts, t, h + 1, classes);
            classes[c].pop();
            return ok;
        }
        for y in 0..=left {
            classes[c].push(y);
            let ok = worst_degree(&classes[c]) <= t && split(parts, t, h, c + 1, left - y, classes);
            classes[c].pop();
            if ok {
                return true;
            }
        }
        false
    }
    let mut classes = vec![Vec::new(); k];
    place(parts, t, 0, &mut classes)
}

pub fn naive_chi(parts: &[usize], t: usize) -> usize {
    (1..).find(|&k| naive_colorable(parts, t, k)).unwrap()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Every non-increasing profile with `1..=s_max` parts of size
/// `1..=n_max`, built recursively.
pub fn all_profiles(s_max: usize, n_max: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, s_max: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == s_max {
            return;
        }
        for n in 1..=cap {
            prefix.push(n);
            extend(prefix, s_max, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), s_max, n_max, &mut out);
    out
}
