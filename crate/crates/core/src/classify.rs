//! Complete-intersection test and normal forms for clutter-type sets.
//!
//! A vanishing ideal I(X) in s variables has height s - 1, so it is a
//! complete intersection exactly when it has s - 1 minimal generators. For
//! clutter-type parameterizations this happens only for the four normal forms
//! below, up to relabeling the variables:
//!
//! * I   (s = 4, q odd): `t1*t2 - t3*t4, t1*t3 - t2*t4, t2*t3 - t1*t4`
//! * II  (s = 3): `t1*t2 - t2*t3, t1*t3 - t2*t3`
//! * III (s = 2): `t1^(r+1)*t2 - t1*t2^(r+1)` with `r | q - 1`
//! * IV  (s = 1): the zero ideal

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{divisors, FieldSpec};
use crate::groebner::{buchberger, ideal_equal, GroebnerBasis};
use crate::param::ParamSet;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::projective::{enumerate_set, DEFAULT_POINT_BUDGET};
use crate::vanishing::{pair, quadric_pairings, vanishing_ideal, VanishingIdeal};

const ORDER: MonomialOrder = MonomialOrder::GRevLex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    I,
    II,
    III,
    IV,
    NotCI,
}

impl Form {
    /// Number of variables of the normal form; `None` for `NotCI`.
    pub fn nvars(self) -> Option<usize> {
        match self {
            Form::I => Some(4),
            Form::II => Some(3),
            Form::III => Some(2),
            Form::IV => Some(1),
            Form::NotCI => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Form::I => "I",
            Form::II => "II",
            Form::III => "III",
            Form::IV => "IV",
            Form::NotCI => "none",
        }
    }

    pub fn from_name(name: &str) -> Option<Form> {
        [Form::I, Form::II, Form::III, Form::IV, Form::NotCI]
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub is_ci: bool,
    pub form: Form,
    /// `t_i` of the normal form corresponds to `t_{permutation[i]}` of I(X)
    /// (0-based). Identity when no form matched.
    pub permutation: Vec<usize>,
    /// The divisor of q - 1 for form III.
    pub r: Option<u64>,
    pub mu_total: usize,
    pub height: usize,
}

/// Whether I(X) is a complete intersection, with its minimal generator count.
pub fn is_complete_intersection(vi: &VanishingIdeal) -> (bool, usize) {
    let mu = vi.mu_total();
    (mu == vi.height(), mu)
}

fn parse_all(k: &FieldSpec, n: usize, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter()
        .map(|g| Polynomial::parse(k, n, g).expect("normal forms are well formed"))
        .collect()
}

/// Generators of a normal form over `k`. `r` is needed for form III.
pub fn form_generators(form: Form, k: &FieldSpec, r: Option<u64>) -> Result<Vec<Polynomial>> {
    Ok(match form {
        Form::I => parse_all(k, 4, &["t1*t2 - t3*t4", "t1*t3 - t2*t4", "t2*t3 - t1*t4"]),
        Form::II => parse_all(k, 3, &["t1*t2 - t2*t3", "t1*t3 - t2*t3"]),
        Form::III => {
            let r = r.ok_or_else(|| Error::Unsupported("form III needs r".into()))? as u32;
            vec![Polynomial::binomial(
                k,
                Monomial(vec![r + 1, 1]),
                Monomial(vec![1, r + 1]),
            )]
        }
        Form::IV => vec![Polynomial::zero(k, 1)],
        Form::NotCI => return Err(Error::Unsupported("no generators for NotCI".into())),
    })
}

/// All permutations of 0..n in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// First permutation (lexicographic) under which `gens` generate the ideal
/// with reduced basis `target`.
fn match_form(gens: &[Polynomial], target: &GroebnerBasis) -> Result<Option<Vec<usize>>> {
    for perm in permutations(target.nvars()) {
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.permute_vars(&perm)).collect();
        if &buchberger(&moved, ORDER)? == target {
            return Ok(Some(perm));
        }
    }
    Ok(None)
}

/// Matches an already computed vanishing ideal against the normal forms and
/// cross-checks the answer with the generator count.
pub fn classify_ideal(vi: &VanishingIdeal) -> Result<ClassificationResult> {
    let k = vi.source().field();
    let s = vi.source().s();
    let q = k.q() as u64;
    let (ci, mu_total) = is_complete_intersection(vi);
    let gb = vi.gb();
    let mut found: Option<(Form, Vec<usize>, Option<u64>)> = None;
    let candidates: Vec<(Form, Option<u64>)> = match s {
        1 => vec![(Form::IV, None)],
        2 => divisors(q - 1).into_iter().map(|r| (Form::III, Some(r))).collect(),
        3 => vec![(Form::II, None)],
        4 if q % 2 == 1 => vec![(Form::I, None)],
        _ => Vec::new(),
    };
    for (form, r) in candidates {
        if let Some(perm) = match_form(&form_generators(form, k, r)?, gb)? {
            found = Some((form, perm, r));
            break;
        }
    }
    let result = match found {
        Some((form, permutation, r)) => ClassificationResult {
            is_ci: true,
            form,
            permutation,
            r,
            mu_total,
            height: s - 1,
        },
        None => ClassificationResult {
            is_ci: false,
            form: Form::NotCI,
            permutation: (0..s).collect(),
            r: None,
            mu_total,
            height: s - 1,
        },
    };
    if result.is_ci != ci {
        return Err(Error::Defect(format!(
            "form search says {} but the ideal has {mu_total} minimal generators for height {}",
            result.form,
            s - 1
        )));
    }
    Ok(result)
}

/// Classification of a clutter-type parameterization.
pub fn classify(ps: &ParamSet) -> Result<ClassificationResult> {
    classify_with_budget(ps, DEFAULT_POINT_BUDGET)
}

pub fn classify_with_budget(ps: &ParamSet, budget: u64) -> Result<ClassificationResult> {
    ps.require_clutter_type()?;
    let x = enumerate_set(ps, budget)?;
    classify_ideal(&vanishing_ideal(&x)?)
}

/// An explicit clutter-type parameterization whose vanishing ideal has the
/// given normal form. Form III uses `y1^(q-1), y2^(q-1) * y3^k` with
/// `k = (q - 1) / r`, the least `k` with `o(beta^k) = r`.
pub fn realize_form(form: Form, field: &FieldSpec, r: Option<u64>) -> Result<ParamSet> {
    let q = field.q();
    let e = q - 1;
    let monomials = match form {
        Form::I => {
            if q % 2 == 0 {
                return Err(Error::Unsupported(format!("form I needs q odd, got q = {q}")));
            }
            let h = e / 2;
            vec![
                vec![e, h, h, e, e, e, e, 0],
                vec![h, h, e, e, e, e, 0, e],
                vec![h, e, h, e, e, 0, e, e],
                vec![e, e, e, e, 0, e, e, e],
            ]
        }
        Form::II => vec![vec![e, e, 0], vec![0, e, e], vec![e, 0, e]],
        Form::III => {
            let r = r.ok_or_else(|| Error::Unsupported("form III needs r".into()))?;
            if r == 0 || (e as u64) % r != 0 {
                return Err(Error::Unsupported(format!("r = {r} does not divide q - 1 = {e}")));
            }
            vec![vec![e, 0, 0], vec![0, e, (e as u64 / r) as u32]]
        }
        Form::IV => vec![vec![1]],
        Form::NotCI => return Err(Error::Unsupported("NotCI has no realization".into())),
    };
    let n = monomials[0].len();
    ParamSet::new(field.clone(), n, monomials)
}

/// Whether an ideal equal to form I could be the vanishing ideal of a
/// clutter parameterization. Each quadric `t_i t_j - t_k t_l` in the ideal
/// forces `v_i + v_j = v_k + v_l`; for form I these relations have rank 3, so
/// `v_1 = v_2 = v_3 = v_4`, which distinct monomials cannot satisfy.
pub fn clutter_realizability_check(gens: &[Polynomial], field: &FieldSpec) -> Result<bool> {
    if field.q() == 2 {
        return Err(Error::Unsupported("realizability check needs q != 2".into()));
    }
    let form_i = form_generators(Form::I, field, None)?;
    if gens.first().map(|g| g.nvars()) != Some(4) || !ideal_equal(gens, &form_i, ORDER)? {
        return Err(Error::Unsupported(
            "realizability check applies to the form I ideal".into(),
        ));
    }
    let gb = buchberger(gens, ORDER)?;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, j, a, b) in quadric_pairings(4) {
        if gb.contains(&Polynomial::binomial(field, pair(4, i, j), pair(4, a, b))) {
            let mut row = vec![0i64; 4];
            row[i] += 1;
            row[j] += 1;
            row[a] -= 1;
            row[b] -= 1;
            rows.push(row);
        }
    }
    // every row kills (1,1,1,1); rank 3 leaves only that direction
    Ok(integer_rank(rows) < 3)
}

/// Rank over Q by fraction-free elimination.
fn integer_rank(mut rows: Vec<Vec<i64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for i in rank + 1..rows.len() {
            let (a, b) = (rows[rank][c], rows[i][c]);
            for k in 0..cols {
                rows[i][k] = rows[i][k] * a - rows[rank][k] * b;
            }
        }
        rank += 1;
    }
    rank
}
