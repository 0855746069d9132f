//! Hilbert functions of quotients by monomial ideals.
//!
//! The Hilbert series of `S/M` is `N(t) / (1 - t)^s` for a polynomial
//! numerator `N`. The numerator is computed with the pivot recursion
//! `N(M) = N(M + (p)) + t^deg(p) N(M : p)` until the generators are pairwise
//! coprime, where `N = prod (1 - t^deg g)`.

use crate::groebner::GroebnerBasis;
use crate::poly::{binomial, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens[0].degree() == 0 {
        return vec![0];
    }
    let nvars = gens[0].nvars();
    // occurrence count per variable
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.0.iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let (var, &most) = count.iter().enumerate().max_by_key(|(i, c)| (**c, usize::MAX - i)).unwrap();
    if most <= 1 {
        return gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            poly_mul(&acc, &f)
        });
    }
    // exponents from generators that are not pure powers of the pivot
    // variable stay below any pure power in the ideal, so x^e is not in it
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|g| g.0[var] > 0 && g.degree() > g.0[var])
        .map(|g| g.0[var])
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pivot = Monomial::one(nvars);
    pivot.0[var] = e;

    let mut with_pivot = gens.clone();
    with_pivot.push(pivot.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&pivot))).collect();

    let mut n = numerator(with_pivot);
    poly_add_shifted(&mut n, &numerator(colon), e as usize);
    n
}

impl HilbertSeries {
    /// Hilbert series of `S / (gens)` for monomial generators in `nvars` variables.
    pub fn of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> Self {
        let mut numerator = numerator(gens.to_vec());
        while numerator.len() > 1 && numerator.last() == Some(&0) {
            numerator.pop();
        }
        HilbertSeries { nvars, numerator }
    }

    /// Hilbert series of `S / I` where `gb` is a Gröbner basis of `I`.
    pub fn of_basis(gb: &GroebnerBasis) -> Self {
        Self::of_monomial_ideal(gb.nvars(), &gb.leading_monomials())
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Dimension of the degree-`d` piece of the quotient.
    pub fn value(&self, d: u32) -> u64 {
        let s = self.nvars as u64;
        let total: i128 = self
            .numerator
            .iter()
            .enumerate()
            .take(d as usize + 1)
            .map(|(k, &c)| c as i128 * binomial(d as u64 - k as u64 + s - 1, s - 1) as i128)
            .sum();
        u64::try_from(total).expect("Hilbert function is nonnegative")
    }

    /// Whether the Hilbert function equals `c` in every degree `>= from`.
    /// Beyond the numerator degree the function is a polynomial of degree
    /// below `nvars`, so checking `nvars` consecutive values there settles it.
    pub fn constant_from(&self, from: u32, c: u64) -> bool {
        let top = from.max(self.numerator.len() as u32) + self.nvars as u32;
        (from..=top).all(|d| self.value(d) == c)
    }
}

/// `dim_K (S/I)_d` for the ideal with Gröbner basis `gb`.
pub fn hilbert_function(gb: &GroebnerBasis, d: u32) -> u64 {
    HilbertSeries::of_basis(gb).value(d)
}

/// Standard monomials of degree `d`: those divisible by no leading monomial.
pub fn standard_monomials(gb: &GroebnerBasis, d: u32) -> Vec<Monomial> {
    let lms = gb.leading_monomials();
    let mut layer = vec![Monomial::one(gb.nvars())];
    if lms.iter().any(|l| l.degree() == 0) {
        return Vec::new();
    }
    for _ in 0..d {
        let mut next: Vec<Monomial> = layer
            .iter()
            .flat_map(|m| (0..gb.nvars()).map(move |i| m.times_var(i)))
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect();
        next.sort_by(|a, b| gb.order().cmp(a, b));
        next.dedup();
        layer = next;
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::buchberger;
    use crate::poly::{monomials_of_degree, MonomialOrder, Polynomial};

    fn brute_force(nvars: usize, gens: &[Monomial], d: u32) -> u64 {
        monomials_of_degree(nvars, d)
            .iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as u64
    }

    #[test]
    fn trivial_ideals() {
        let hs = HilbertSeries::of_monomial_ideal(3, &[]);
        assert_eq!(hs.value(0), 1);
        assert_eq!(hs.value(2), 6);
        let unit = HilbertSeries::of_monomial_ideal(2, &[Monomial::one(2)]);
        assert_eq!(unit.value(0), 0);
        assert_eq!(unit.value(5), 0);
    }

    #[test]
    fn form_i_stabilizes_at_eight() {
        let k = FieldSpec::prime(3).unwrap();
        let gens: Vec<Polynomial> = ["t1*t2 - t3*t4", "t1*t3 - t2*t4", "t2*t3 - t1*t4"]
            .iter()
            .map(|s| Polynomial::parse(&k, 4, s).unwrap())
            .collect();
        let gb = buchberger(&gens, MonomialOrder::GRevLex).unwrap();
        assert_eq!(hilbert_function(&gb, 0), 1);
        assert_eq!(hilbert_function(&gb, 1), 4);
        assert_eq!(hilbert_function(&gb, 2), 7);
        for d in 3..12 {
            assert_eq!(hilbert_function(&gb, d), 8);
            assert_eq!(standard_monomials(&gb, d).len(), 8);
        }
        assert!(HilbertSeries::of_basis(&gb).constant_from(3, 8));
        assert!(!HilbertSeries::of_basis(&gb).constant_from(2, 8));
    }

    #[test]
    fn s3_form_stabilizes_at_four() {
        let k = FieldSpec::prime(3).unwrap();
        let gens: Vec<Polynomial> = ["t1*t2 - t2*t3", "t1*t3 - t2*t3"]
            .iter()
            .map(|s| Polynomial::parse(&k, 3, s).unwrap())
            .collect();
        let gb = buchberger(&gens, MonomialOrder::GRevLex).unwrap();
        for d in 2..10 {
            assert_eq!(hilbert_function(&gb, d), 4);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn numerator_matches_standard_monomial_count(
                gens in prop::collection::vec(prop::collection::vec(0u32..4, 4), 0..7),
                d in 0u32..7,
            ) {
                let gens: Vec<Monomial> = gens.into_iter().map(Monomial).collect();
                let hs = HilbertSeries::of_monomial_ideal(4, &gens);
                prop_assert_eq!(hs.value(d), brute_force(4, &gens, d));
            }
        }
    }
}
