//! Division with remainder, Buchberger's algorithm and reduced Gröbner bases.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Key whose lexicographic order on `Vec<i64>` agrees with the monomial order.
fn sort_key(order: MonomialOrder, m: &Monomial) -> Vec<i64> {
    match order {
        MonomialOrder::Lex => m.0.iter().map(|&e| e as i64).collect(),
        MonomialOrder::GRevLex => std::iter::once(m.degree() as i64)
            .chain(m.0.iter().rev().map(|&e| -(e as i64)))
            .collect(),
    }
}

/// Polynomial under reduction, kept sorted by the active order so the
/// leading term is always at the end of the map.
struct Work<'a> {
    field: &'a FieldSpec,
    order: MonomialOrder,
    terms: BTreeMap<Vec<i64>, (Monomial, Elem)>,
}

impl<'a> Work<'a> {
    fn new(f: &'a Polynomial, order: MonomialOrder) -> Self {
        let terms = f
            .terms()
            .map(|(m, c)| (sort_key(order, m), (m.clone(), c)))
            .collect();
        Work {
            field: f.field(),
            order,
            terms,
        }
    }

    fn add(&mut self, m: Monomial, c: Elem) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(sort_key(self.order, &m)) {
            Entry::Vacant(e) => {
                e.insert((m, c));
            }
            Entry::Occupied(mut e) => {
                let s = self.field.add(e.get().1, c);
                if s.is_zero() {
                    e.remove();
                } else {
                    e.get_mut().1 = s;
                }
            }
        }
    }

    fn pop_leading(&mut self) -> Option<(Monomial, Elem)> {
        self.terms.pop_last().map(|(_, t)| t)
    }
}

/// Remainder of `f` on division by `divisors`. At each step the leading term
/// of what is left is divided by the first divisor (in list order) whose
/// leading monomial divides it; otherwise it moves to the remainder.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> Polynomial {
    normal_form_skipping(f, divisors, None, order)
}

fn normal_form_skipping(
    f: &Polynomial,
    divisors: &[Polynomial],
    skip: Option<usize>,
    order: MonomialOrder,
) -> Polynomial {
    let k = f.field();
    let heads: Vec<Option<(Monomial, Elem)>> = divisors
        .iter()
        .enumerate()
        .map(|(i, g)| {
            if Some(i) == skip {
                None
            } else {
                g.leading_term(order).map(|(m, c)| (m.clone(), c))
            }
        })
        .collect();
    let mut work = Work::new(f, order);
    let mut rem = Polynomial::zero(k, f.nvars());
    while let Some((m, c)) = work.pop_leading() {
        match heads
            .iter()
            .position(|h| h.as_ref().is_some_and(|(h, _)| h.divides(&m)))
        {
            Some(j) => {
                let (lm, lc) = heads[j].as_ref().unwrap();
                let factor = k.div(c, *lc).expect("leading coefficient is nonzero");
                let shift = m.div(lm);
                for (gm, gc) in divisors[j].terms() {
                    if gm == lm {
                        continue;
                    }
                    work.add(gm.mul(&shift), k.neg(k.mul(factor, gc)));
                }
            }
            None => rem.add_term(m, c),
        }
    }
    rem
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let k = f.field();
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(k.inv(fc).unwrap(), &l.div(fm));
    let b = g.mul_term(k.inv(gc).unwrap(), &l.div(gm));
    a.sub(&b)
}

/// Reduced Gröbner basis: monic, auto-reduced, sorted by ascending leading
/// monomial. Unique for a given ideal and order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: FieldSpec,
    nvars: usize,
    elements: Vec<Polynomial>,
}

fn check_ring(gens: &[Polynomial]) -> Result<(FieldSpec, usize)> {
    let first = gens.first().ok_or(Error::Empty("generator list"))?;
    for g in gens {
        if g.field() != first.field() {
            return Err(Error::MixedFields);
        }
        if g.nvars() != first.nvars() {
            return Err(Error::DimensionMismatch {
                expected: first.nvars(),
                found: g.nvars(),
            });
        }
    }
    Ok((first.field().clone(), first.nvars()))
}

/// Buchberger's algorithm with the normal selection strategy (pair with the
/// smallest lcm first) and the coprime-leading-monomial criterion.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let (field, nvars) = check_ring(gens)?;
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    let push = |basis: &mut Vec<Polynomial>, pairs: &mut Vec<(usize, usize, Monomial)>, p: Polynomial| {
        let lm = p.leading_monomial(order).unwrap().clone();
        let j = basis.len();
        for (i, b) in basis.iter().enumerate() {
            pairs.push((i, j, b.leading_monomial(order).unwrap().lcm(&lm)));
        }
        basis.push(p);
    };
    for g in gens {
        let r = normal_form(g, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r.monic(order));
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].2, &pairs[b].2)
                    .then((pairs[a].0, pairs[a].1).cmp(&(pairs[b].0, pairs[b].1)))
            })
            .unwrap();
        let (i, j, _) = pairs.swap_remove(best);
        let (li, lj) = (
            basis[i].leading_monomial(order).unwrap(),
            basis[j].leading_monomial(order).unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, r.monic(order));
        }
    }
    Ok(GroebnerBasis::reduce_basis(field, nvars, order, basis))
}

impl GroebnerBasis {
    /// Minimalizes, auto-reduces, normalizes and sorts a set that is already a
    /// Gröbner basis. No S-pair completion is done here.
    pub fn reduce_basis(
        field: FieldSpec,
        nvars: usize,
        order: MonomialOrder,
        basis: Vec<Polynomial>,
    ) -> GroebnerBasis {
        let basis: Vec<Polynomial> = basis.into_iter().filter(|p| !p.is_zero()).collect();
        let lms: Vec<Monomial> = basis
            .iter()
            .map(|p| p.leading_monomial(order).unwrap().clone())
            .collect();
        let keep: Vec<usize> = (0..basis.len())
            .filter(|&i| {
                !lms.iter().enumerate().any(|(j, lj)| {
                    j != i && lj.divides(&lms[i]) && (lj != &lms[i] || j < i)
                })
            })
            .collect();
        let minimal: Vec<Polynomial> = keep.iter().map(|&i| basis[i].clone()).collect();
        let mut elements: Vec<Polynomial> = (0..minimal.len())
            .map(|i| normal_form_skipping(&minimal[i], &minimal, Some(i), order).monic(order))
            .collect();
        elements.sort_by(|a, b| {
            order.cmp(
                a.leading_monomial(order).unwrap(),
                b.leading_monomial(order).unwrap(),
            )
        });
        GroebnerBasis {
            order,
            field,
            nvars,
            elements,
        }
    }

    /// Wraps elements already known to form a reduced, monic basis; only
    /// sorts them.
    pub(crate) fn from_reduced(
        field: FieldSpec,
        nvars: usize,
        order: MonomialOrder,
        mut elements: Vec<Polynomial>,
    ) -> GroebnerBasis {
        elements.sort_by(|a, b| {
            order.cmp(
                a.leading_monomial(order).unwrap(),
                b.leading_monomial(order).unwrap(),
            )
        });
        GroebnerBasis {
            order,
            field,
            nvars,
            elements,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_monomial(self.order).unwrap().clone())
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Whether a monomial lies outside the initial ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self
            .elements
            .iter()
            .any(|g| g.leading_monomial(self.order).unwrap().divides(m))
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| {
                normal_form(&s_polynomial(&g[i], &g[j], self.order), g, self.order).is_zero()
            })
        })
    }

    pub fn is_binomial(&self) -> bool {
        self.elements.iter().all(|p| p.len() <= 2)
    }

    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|p| p.render(self.order)).collect()
    }
}

/// Whether two generator lists span the same ideal, decided by comparing
/// reduced Gröbner bases.
/// An empty list stands for the zero ideal.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => Ok(b.iter().all(|f| f.is_zero())),
        (_, true) => Ok(a.iter().all(|f| f.is_zero())),
        _ => Ok(buchberger(a, order)? == buchberger(b, order)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_all(k: &FieldSpec, n: usize, v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| Polynomial::parse(k, n, s).unwrap()).collect()
    }

    const FORM_I: [&str; 3] = ["t1*t2 - t3*t4", "t1*t3 - t2*t4", "t2*t3 - t1*t4"];

    #[test]
    fn form_i_basis_over_gf3() {
        let k = FieldSpec::prime(3).unwrap();
        let gb = buchberger(&parse_all(&k, 4, &FORM_I), MonomialOrder::GRevLex).unwrap();
        assert_eq!(
            gb.render(),
            vec![
                "t2*t3 - t1*t4",
                "t1*t3 - t2*t4",
                "t1*t2 - t3*t4",
                "t2^2*t4 - t3^2*t4",
                "t1^2*t4 - t3^2*t4",
                "t3^3*t4 - t3*t4^3",
            ]
        );
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.is_binomial());
    }

    #[test]
    fn s3_basis() {
        let k = FieldSpec::prime(3).unwrap();
        let gb = buchberger(
            &parse_all(&k, 3, &["t1*t2 - t2*t3", "t1*t3 - t2*t3"]),
            MonomialOrder::GRevLex,
        )
        .unwrap();
        assert_eq!(
            gb.render(),
            vec!["t1*t3 - t2*t3", "t1*t2 - t2*t3", "t2^2*t3 - t2*t3^2"]
        );
    }

    #[test]
    fn normal_form_membership() {
        let k = FieldSpec::prime(2).unwrap();
        let gb = buchberger(&parse_all(&k, 4, &FORM_I), MonomialOrder::GRevLex).unwrap();
        let h = Polynomial::parse(&k, 4, "t1*t2 - t1*t3").unwrap();
        assert!(!gb.contains(&h));
        assert!(gb.contains(&h.mul(&h)));
        for g in parse_all(&k, 4, &FORM_I) {
            assert!(gb.contains(&g));
        }
    }

    #[test]
    fn ideal_equality() {
        let k = FieldSpec::prime(5).unwrap();
        let a = parse_all(&k, 4, &FORM_I);
        let mut b: Vec<Polynomial> = a.iter().rev().map(|p| p.scale(Elem(3))).collect();
        b.push(a[0].add(&a[1]));
        assert!(ideal_equal(&a, &b, MonomialOrder::GRevLex).unwrap());
        let gb = buchberger(&a, MonomialOrder::GRevLex).unwrap();
        assert!(ideal_equal(&a, gb.elements(), MonomialOrder::GRevLex).unwrap());
        let c = parse_all(&k, 3, &["t1 - t2"]);
        let d = parse_all(&k, 3, &["t1 - t3"]);
        assert!(!ideal_equal(&c, &d, MonomialOrder::GRevLex).unwrap());
        assert!(buchberger(&[], MonomialOrder::GRevLex).is_err());
    }

    #[test]
    fn zero_ideal() {
        let k = FieldSpec::prime(3).unwrap();
        let gb = buchberger(&[Polynomial::zero(&k, 1)], MonomialOrder::GRevLex).unwrap();
        assert!(gb.is_empty());
        assert_eq!(gb.max_degree(), 0);
    }

    #[test]
    fn lex_basis_is_groebner() {
        let k = FieldSpec::prime(7).unwrap();
        let gens = parse_all(&k, 3, &["t1^2 - t2", "t1*t2 - t3"]);
        let gb = buchberger(&gens, MonomialOrder::Lex).unwrap();
        assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            assert!(gb.contains(g));
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn binomial_strategy(n: usize) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
            (1u32..=3).prop_flat_map(move |d| {
                let mono = move || {
                    prop::collection::vec(0u32..=d, n).prop_map(move |mut v| {
                        // force total degree d by dumping the remainder on the last variable
                        let mut s: u32 = 0;
                        for e in v.iter_mut() {
                            *e = (*e).min(d - s);
                            s += *e;
                        }
                        *v.last_mut().unwrap() += d - s;
                        v
                    })
                };
                (mono(), mono())
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn basis_is_groebner_and_normal_form_is_linear(
                gens in prop::collection::vec(binomial_strategy(3), 1..4),
                f in binomial_strategy(3),
                mult in binomial_strategy(3),
            ) {
                let k = FieldSpec::prime(3).unwrap();
                let polys: Vec<Polynomial> = gens
                    .into_iter()
                    .map(|(a, b)| Polynomial::binomial(&k, Monomial(a), Monomial(b)))
                    .collect();
                let gb = buchberger(&polys, MonomialOrder::GRevLex).unwrap();
                prop_assert!(gb.satisfies_buchberger_criterion());
                prop_assert!(gb.is_binomial());
                for p in &polys {
                    prop_assert!(gb.contains(p));
                }
                let f = Polynomial::binomial(&k, Monomial(f.0), Monomial(f.1));
                let m = Polynomial::binomial(&k, Monomial(mult.0), Monomial(mult.1));
                let in_ideal = m.mul(&polys[0]);
                prop_assert_eq!(gb.normal_form(&f.add(&in_ideal)), gb.normal_form(&f));
            }
        }
    }
}
