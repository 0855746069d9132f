//! Cross-checks between independent routes to the same objects.

use proptest::prelude::*;

use clutter_ci::classify::{classify_ideal, form_generators};
use clutter_ci::code::{code_parameters, min_distance};
use clutter_ci::mingens::{minimal_generator_count, minimal_generators};
use clutter_ci::poly::monomial_count;
use clutter_ci::projective::DEFAULT_POINT_BUDGET;
use clutter_ci::vanishing::{
    ideal_degree_slice, vanishing_ideal_by_slices, vanishing_ideal_with, Strategy as Sweep,
};
use clutter_ci::{
    buchberger, enumerate_set, hilbert_function, ideal_equal, vanishing_ideal, Elem, FieldSpec, Form, MonomialOrder,
    ParamSet, PointSet,
};

fn field(q: u32) -> FieldSpec {
    match q {
        4 => FieldSpec::new(2, 2).unwrap(),
        _ => FieldSpec::prime(q).unwrap(),
    }
}

/// Parameterizations with arbitrary exponents (not necessarily clutter type).
fn paramset(max_n: usize, max_s: usize) -> impl Strategy<Value = ParamSet> {
    (prop::sample::select(vec![2u32, 3, 4, 5]), 1..=max_n, 1..=max_s)
        .prop_flat_map(|(q, n, s)| {
            (
                Just(q),
                Just(n),
                prop::collection::vec(prop::collection::vec(0u32..q + 1, n), s),
            )
        })
        .prop_filter_map("duplicate monomials", |(q, n, mut mons)| {
            mons.sort();
            mons.dedup();
            ParamSet::new(field(q), n, mons).ok()
        })
}

/// Arbitrary small point sets, usually not closed under multiplication.
fn point_set(max_s: usize, max_pts: usize) -> impl Strategy<Value = PointSet> {
    (prop::sample::select(vec![2u32, 3, 5, 4]), 1..=max_s)
        .prop_flat_map(move |(q, s)| {
            (
                Just(q),
                Just(s),
                prop::collection::vec(prop::collection::vec(0u8..q as u8, s), 1..=max_pts),
            )
        })
        .prop_filter_map("only zero vectors", |(q, s, raw)| {
            let raw: Vec<Vec<Elem>> = raw
                .into_iter()
                .filter(|v| v.iter().any(|&c| c != 0))
                .map(|v| v.into_iter().map(Elem).collect())
                .collect();
            if raw.is_empty() {
                return None;
            }
            PointSet::from_raw(&field(q), s, raw).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn sweep_strategies_agree_with_slices(ps in paramset(5, 6)) {
        let x = enumerate_set(&ps, DEFAULT_POINT_BUDGET).unwrap();
        let fast = vanishing_ideal(&x).unwrap();
        let slow = vanishing_ideal_with(&x, Sweep::Elimination).unwrap();
        prop_assert_eq!(fast.gb(), slow.gb());
        prop_assert_eq!(fast.mu_per_degree(), slow.mu_per_degree());
        prop_assert!(ideal_equal(fast.generators(), slow.generators(), MonomialOrder::GRevLex).unwrap());
        if x.len() <= 9 && x.s() <= 4 {
            prop_assert_eq!(fast.gb(), &vanishing_ideal_by_slices(&x).unwrap());
        }
        // parameterized sets are monoids, hence binomial
        prop_assert!(x.monoid_closed());
        prop_assert!(fast.is_binomial_generated());
    }

    #[test]
    fn arbitrary_point_sets(x in point_set(4, 7)) {
        let vi = vanishing_ideal(&x).unwrap();
        prop_assert_eq!(vi.gb(), &vanishing_ideal_by_slices(&x).unwrap());
        prop_assert!(vi.gb().satisfies_buchberger_criterion());
        for g in vi.gb().elements() {
            for p in x.points() {
                prop_assert!(g.evaluate(p.coords()).is_zero());
            }
        }
        let n = x.len() as u32;
        let mut last = 0;
        for d in 0..=n + 2 {
            let h = hilbert_function(vi.gb(), d);
            prop_assert!(h >= last);
            last = h;
            if d + 1 >= n {
                prop_assert_eq!(h, n as u64);
            }
        }
        if x.monoid_closed() {
            prop_assert!(vi.is_binomial_generated());
        }
    }

    #[test]
    fn slice_sizes_match_ranks(x in point_set(4, 6), d in 1u32..4) {
        let vi = vanishing_ideal(&x).unwrap();
        let slice = ideal_degree_slice(&x, d);
        let h = hilbert_function(vi.gb(), d);
        prop_assert_eq!(slice.len() as u64 + h, monomial_count(x.s(), d));
        for f in &slice {
            prop_assert!(vi.contains(f));
        }
    }

    #[test]
    fn generator_counts_agree(ps in paramset(5, 6)) {
        let x = enumerate_set(&ps, DEFAULT_POINT_BUDGET).unwrap();
        let vi = vanishing_ideal(&x).unwrap();
        let (total, per) = minimal_generator_count(vi.generators(), MonomialOrder::GRevLex).unwrap();
        prop_assert_eq!(total, vi.mu_total());
        let by_rank = minimal_generators(vi.gb()).unwrap();
        prop_assert_eq!(&by_rank.per_degree, vi.mu_per_degree());
        prop_assert_eq!(per.iter().sum::<usize>(), total);
    }

    #[test]
    fn classification_ignores_monomial_order(ps in paramset(4, 4), seed in 0usize..24) {
        prop_assume!(ps.is_clutter_type());
        let s = ps.s();
        let mut perm: Vec<usize> = (0..s).collect();
        let mut k = seed;
        for i in (1..s).rev() {
            perm.swap(i, k % (i + 1));
            k /= i + 1;
        }
        let x = enumerate_set(&ps, DEFAULT_POINT_BUDGET).unwrap();
        let y = enumerate_set(&ps.permuted(&perm), DEFAULT_POINT_BUDGET).unwrap();
        let a = classify_ideal(&vanishing_ideal(&x).unwrap()).unwrap();
        let b = classify_ideal(&vanishing_ideal(&y).unwrap()).unwrap();
        prop_assert_eq!(a.form, b.form);
        prop_assert_eq!(a.r, b.r);
        prop_assert_eq!(a.mu_total, b.mu_total);
        if a.form != Form::NotCI {
            let vi = vanishing_ideal(&x).unwrap();
            let moved: Vec<_> = form_generators(a.form, x.field(), a.r)
                .unwrap()
                .iter()
                .map(|g| g.permute_vars(&a.permutation))
                .collect();
            prop_assert_eq!(&buchberger(&moved, MonomialOrder::GRevLex).unwrap(), vi.gb());
        }
    }

    #[test]
    fn code_dimension_and_distance(ps in paramset(3, 4)) {
        let x = enumerate_set(&ps, DEFAULT_POINT_BUDGET).unwrap();
        let vi = vanishing_ideal(&x).unwrap();
        let mut prev: Option<(usize, Option<usize>)> = None;
        for d in 1..=3 {
            let c = code_parameters(&x, &vi, d).unwrap();
            prop_assert_eq!(c.dimension as u64 + ideal_degree_slice(&x, d).len() as u64, monomial_count(x.s(), d));
            if let Some(dmin) = c.min_distance {
                prop_assert!(dmin >= 1 && dmin + c.dimension <= c.length + 1);
            }
            if let Some((k, _)) = prev {
                prop_assert!(k <= c.dimension);
            }
            prev = Some((c.dimension, c.min_distance));
        }
    }
}

#[test]
fn distance_of_repetition_and_parity_codes() {
    let k = FieldSpec::prime(2).unwrap();
    let one = Elem::ONE;
    let zero = Elem::ZERO;
    let repetition = vec![vec![one; 5]];
    assert_eq!(min_distance(&k, &repetition, 1000), Some(5));
    let parity: Vec<Vec<Elem>> = (0..3)
        .map(|i| {
            let mut r = vec![zero; 4];
            r[i] = one;
            r[3] = one;
            r
        })
        .collect();
    assert_eq!(min_distance(&k, &parity, 1000), Some(2));
    assert_eq!(min_distance(&k, &parity, 4), None);
    assert_eq!(min_distance(&k, &[], 1000), None);
}
