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

//! The solvers checked against brute-force oracles, plus property tests
//! for the invariants of each module.

mod common;

use common::*;
use proptest::prelude::*;
use rayon::prelude::*;
use trelax::*;

fn inst(parts: &[usize], t: usize) -> MultipartiteInstance {
    MultipartiteInstance::new(parts, t).unwrap()
}

#[test]
fn lp_matches_enumeration() {
    assert_eq!(brute_lp(4, &[6, 3, 3, 3], 7), 9);
    assert_eq!(solve_lp(4, &inst(&[6, 3, 3, 3], 7)).unwrap().size(), 9);

    for t in 1..=6 {
        for parts in all_profiles(4, t + 3) {
            let k = inst(&parts, t);
            for i in 2..=parts.len().min(t + 1) {
                let sel = solve_lp(i, &k).unwrap();
                assert_eq!(sel.size(), brute_lp(i, &parts, t), "{parts:?} t={t} i={i}");
                assert!(sel.is_valid_for(&parts, t));
            }
        }
    }
}

#[test]
fn beta_spot_checks() {
    // single part beats the two-part program
    assert_eq!(brute_beta(&[13, 1], 7), 13);
    assert_eq!(beta_t(&inst(&[13, 1], 7)), 13);
    assert_eq!(brute_beta(&[4, 4, 4], 3), 6);
    assert_eq!(beta_t(&inst(&[4, 4, 4], 3)), 6);
}

#[test]
fn class_cap_matches_enumeration() {
    assert_eq!(brute_class_cap(8, 7), 8);
    for t in 1..=6 {
        // attained while r <= t + 1; beyond that no class touches r parts
        for r in 2..=(t + 1).min(6) {
            assert_eq!(color_class_cap(r, t).unwrap(), brute_class_cap(r, t), "r={r} t={t}");
        }
        assert_eq!(brute_class_cap(t + 2, t), 0);
    }
}

#[test]
fn exact_matches_naive_enumerator() {
    // all sorted profiles with s <= 4, n_j <= 6, t <= 4
    let cases: Vec<(Vec<usize>, usize)> = (0..=4)
        .flat_map(|t| all_profiles(4, 6).into_iter().map(move |p| (p, t)))
        .collect();
    let mismatches: Vec<_> = cases
        .par_iter()
        .filter_map(|(parts, t)| {
            let k = inst(parts, *t);
            let out = chi_t_exact(&k).unwrap();
            let naive = naive_chi(parts, *t);
            assert!(verify_coloring(&k, &out.witness).unwrap().is_valid());
            assert_eq!(out.witness.num_colors(), out.chi);
            (out.chi != naive).then(|| (parts.clone(), *t, out.chi, naive))
        })
        .collect();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn spot_values_from_naive_enumerator() {
    assert_eq!(naive_chi(&[3, 2, 1, 1, 1], 1), 4);
    assert_eq!(chi_1_formula(&inst(&[3, 2, 1, 1, 1], 1)), 4);
    assert_eq!(naive_chi(&[2, 2, 2], 3), 2);
    assert_eq!(greedy_color_count(&inst(&[2, 2, 2], 3)), 2);
    assert!(!naive_colorable(&[13, 8, 3, 3, 3, 3], 7, 2));
}

#[test]
fn greedy_gap_on_five_parts() {
    // Smallest-i tie-breaking takes (5, 2) first; the optimum pairs
    // (3, 2, 2) with (3, 2, 2).
    assert_eq!(naive_chi(&[6, 2, 2, 2, 2], 5), 2);
    assert_eq!(chi_t_exact(&inst(&[6, 2, 2, 2, 2], 5)).unwrap().chi, 2);
    assert_eq!(greedy_color_count(&inst(&[6, 2, 2, 2, 2], 5)), 3);
}

#[test]
fn profile_count_is_a_binomial() {
    for s in 1..=5 {
        for n in 1..=8 {
            let listed: Vec<_> = Profiles::new(s, n).collect();
            assert_eq!(listed.len(), binomial(s + n, s) - 1, "s={s} n={n}");
            let mut expected = all_profiles(s, n);
            let mut got = listed.clone();
            expected.sort();
            got.sort();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn random_generator_golden() {
    let k = gen_random(1, 4, 6, 4).unwrap();
    assert_eq!((k.original_sizes(), k.t()), (GOLDEN_SEED_1.0.to_vec(), GOLDEN_SEED_1.1));
}

const GOLDEN_SEED_1: (&[usize], usize) = (&[3, 6, 1], 1);

#[test]
fn exact_monotonicity() {
    for parts in all_profiles(3, 5) {
        let chis: Vec<usize> = (0..=4).map(|t| chi_t_exact(&inst(&parts, t)).unwrap().chi).collect();
        assert!(chis.windows(2).all(|w| w[0] >= w[1]), "{parts:?} {chis:?}");
        for extra in 1..=5 {
            let mut bigger = parts.clone();
            bigger.push(extra);
            for (t, &chi) in chis.iter().enumerate().take(4) {
                assert!(
                    chi_t_exact(&inst(&bigger, t)).unwrap().chi >= chi,
                    "{parts:?} + {extra} at t={t}"
                );
            }
        }
    }
}

fn profile() -> impl Strategy<Value = (Vec<usize>, usize)> {
    (prop::collection::vec(1usize..=12, 1..=6), 0usize..=8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn max_sparse_is_valid_and_maximum((parts, t) in profile()) {
        let k = inst(&parts, t);
        let sel = max_t_sparse(&k);
        prop_assert!(sel.is_valid_for(k.parts(), t));
        prop_assert_eq!(sel.size(), brute_beta(k.parts(), t));
        prop_assert!(sel.size() >= (t + 1).min(k.num_vertices()));
        if sel.support() >= 2 {
            prop_assert!(sel.size() <= t + t / (sel.support() - 1));
        }
    }

    #[test]
    fn greedy_is_valid_and_bounded((parts, t) in profile()) {
        let k = inst(&parts, t);
        let g = greedy_coloring(&k);
        prop_assert!(verify_coloring(&k, &g.coloring).unwrap().is_valid());
        let b = bounds_report(&k);
        prop_assert!(b.lower() <= g.num_colors());
        prop_assert!(g.num_colors() <= b.upper_2t);
        for (row, sel) in g.coloring.rows().iter().zip(&g.trace) {
            prop_assert_eq!(row.as_slice(), sel.picks());
        }
    }

    #[test]
    fn verify_accepts_exactly_sparse_rows(
        rows in prop::collection::vec(prop::collection::vec(0usize..=5, 3), 1..=4),
        t in 0usize..=6,
    ) {
        prop_assume!(rows.iter().all(|r| r.iter().any(|&x| x > 0)));
        let sizes: Vec<usize> = (0..3).map(|h| rows.iter().map(|r| r[h]).sum()).collect();
        prop_assume!(sizes.iter().all(|&n| n > 0));
        let k = MultipartiteInstance::new(&sizes, t).unwrap();
        let col = CountColoring::from_original_order(&k, rows.clone()).unwrap();
        let expected = rows.iter().all(|r| worst_degree(r) <= t);
        prop_assert_eq!(verify_coloring(&k, &col).unwrap().is_valid(), expected);
    }

    #[test]
    fn labels_round_trip(
        rows in prop::collection::vec(prop::collection::vec(0usize..=4, 4), 1..=4),
    ) {
        prop_assume!(rows.iter().all(|r| r.iter().any(|&x| x > 0)));
        let sizes: Vec<usize> = (0..4).map(|h| rows.iter().map(|r| r[h]).sum()).collect();
        prop_assume!(sizes.iter().all(|&n| n > 0));
        let k = MultipartiteInstance::new(&sizes, 2).unwrap();
        let col = CountColoring::from_original_order(&k, rows.clone()).unwrap();
        let labels = expand_labels(&k, &col).unwrap();
        for (part, &n) in labels.iter().zip(&sizes) {
            prop_assert_eq!(part.len(), n);
            prop_assert!(part.windows(2).all(|w| w[0] <= w[1]));
        }
        let back = CountColoring::from_labels(&k, &labels, rows.len()).unwrap();
        prop_assert_eq!(back.to_original_order(&k), rows);
    }

    #[test]
    fn part_order_does_not_matter(
        (parts, t) in (prop::collection::vec(1usize..=6, 1..=4), 0usize..=4),
        rotate in 0usize..4,
    ) {
        let mut shuffled = parts.clone();
        let len = shuffled.len();
        shuffled.rotate_left(rotate % len);
        shuffled.reverse();
        let a = inst(&parts, t);
        let b = inst(&shuffled, t);
        prop_assert_eq!(a.parts(), b.parts());
        prop_assert_eq!(beta_t(&a), beta_t(&b));
        prop_assert_eq!(greedy_color_count(&a), greedy_color_count(&b));
        prop_assert_eq!(chi_t_exact(&a).unwrap().chi, chi_t_exact(&b).unwrap().chi);
    }

    #[test]
    fn exact_is_deterministic((parts, t) in (prop::collection::vec(1usize..=7, 1..=5), 1usize..=5)) {
        let k = inst(&parts, t);
        prop_assert_eq!(chi_t_exact(&k), chi_t_exact(&k));
    }
}
