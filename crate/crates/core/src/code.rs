//! Parameters of the degree-d evaluation code C_X(d): the image of
//! S_d -> K^|X|, f -> (f(P_1), ..., f(P_|X|)) on canonical representatives.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::hilbert::standard_monomials;
use crate::linalg::Matrix;
use crate::projective::PointSet;
use crate::vanishing::VanishingIdeal;

/// Default limit on q^k, the number of coefficient vectors swept.
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeParameters {
    pub degree: u32,
    pub length: usize,
    pub dimension: usize,
    /// `None` when the codeword sweep would exceed the budget.
    pub min_distance: Option<usize>,
}

fn check(x: &PointSet, vi: &VanishingIdeal, d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::Unsupported("code degree must be at least 1".into()));
    }
    if vi.source() != x {
        return Err(Error::Unsupported("vanishing ideal belongs to a different point set".into()));
    }
    Ok(())
}

/// Evaluations of the standard monomials of degree `d`, one row each. These
/// rows are independent and span the code.
fn standard_rows(x: &PointSet, vi: &VanishingIdeal, d: u32) -> Vec<Vec<Elem>> {
    let k = x.field();
    standard_monomials(vi.gb(), d)
        .iter()
        .map(|m| x.points().iter().map(|p| m.evaluate(k, p.coords())).collect())
        .collect()
}

/// Row-reduced generator matrix, `dimension x length`.
pub fn generator_matrix(x: &PointSet, vi: &VanishingIdeal, d: u32) -> Result<Matrix> {
    check(x, vi, d)?;
    let rows = standard_rows(x, vi, d);
    Ok(Matrix::from_rows(x.field(), x.len(), rows)?.row_space_basis())
}

pub fn code_parameters(x: &PointSet, vi: &VanishingIdeal, d: u32) -> Result<CodeParameters> {
    code_parameters_with_budget(x, vi, d, DEFAULT_CODEWORD_BUDGET)
}

pub fn code_parameters_with_budget(
    x: &PointSet,
    vi: &VanishingIdeal,
    d: u32,
    budget: u64,
) -> Result<CodeParameters> {
    let g = generator_matrix(x, vi, d)?;
    let rows: Vec<Vec<Elem>> = (0..g.rows()).map(|r| g.row(r).to_vec()).collect();
    Ok(CodeParameters {
        degree: d,
        length: x.len(),
        dimension: rows.len(),
        min_distance: min_distance(x.field(), &rows, budget),
    })
}

/// Least weight of a nonzero combination of `rows`, sweeping q^k coefficient
/// vectors; `None` when q^k exceeds `budget` or there are no rows.
///
/// Only vectors whose first nonzero coefficient is 1 are visited, since
/// scaling preserves weight. The running codeword is updated in place as the
/// odometer advances.
pub fn min_distance(k: &FieldSpec, rows: &[Vec<Elem>], budget: u64) -> Option<usize> {
    let dim = rows.len();
    if dim == 0 {
        return None;
    }
    let q = k.q() as u64;
    if (dim as f64) * (q as f64).log2() > 63.0 || q.pow(dim as u32) > budget {
        return None;
    }
    let n = rows[0].len();
    let elems: Vec<Elem> = k.elements().collect();
    let mut best = n;
    for lead in 0..dim {
        let tail = &rows[lead + 1..];
        let mut word = rows[lead].clone();
        let mut digits = vec![0usize; tail.len()];
        loop {
            let w = word.iter().filter(|e| !e.is_zero()).count();
            best = best.min(w);
            // advance the odometer: word += (new - old) * row for each changed digit
            let mut pos = 0;
            loop {
                if pos == digits.len() {
                    break;
                }
                let old = elems[digits[pos]];
                digits[pos] = (digits[pos] + 1) % elems.len();
                let delta = k.sub(elems[digits[pos]], old);
                for (c, &r) in word.iter_mut().zip(&tail[pos]) {
                    *c = k.add(*c, k.mul(delta, r));
                }
                if digits[pos] != 0 {
                    break;
                }
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    Some(best)
}
