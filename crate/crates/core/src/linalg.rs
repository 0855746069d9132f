//! Dense matrices over GF(q) and Gaussian elimination.

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, cols: usize, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers reduced into the prime subfield.
    pub fn from_ints(field: &FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_int(x)).collect())
            .collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let k = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Elem::ZERO, |acc, (&a, &b)| k.add(acc, k.mul(a, b)))
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row-echelon form and its pivot columns. Pivots are taken left to
    /// right, each from the first row at or below the current one with a
    /// nonzero entry in that column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let k = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = k.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, k.mul(v, inv));
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = k.sub(m.get(i, j), k.mul(f, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// column order, with a 1 in that free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let k = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[free] = Elem::ONE;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = k.neg(r.get(row, free));
                }
                v
            })
            .collect()
    }

    /// Nonzero rows of the reduced row-echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut out = Matrix::zero(&self.field, pivots.len(), self.cols);
        out.data.copy_from_slice(&r.data[..pivots.len() * self.cols]);
        out
    }
}

/// Incremental row echelon form, used when vectors arrive one at a time and
/// the caller needs to know how each new vector depends on earlier ones.
pub(crate) struct Echelon {
    field: FieldSpec,
    /// (pivot column, normalized row, combination of inserted vectors giving that row)
    rows: Vec<(usize, Vec<Elem>, Vec<Elem>)>,
    inserted: usize,
}

pub(crate) enum Insert {
    /// Linearly independent of everything so far; assigned this index.
    Independent(#[allow(dead_code)] usize),
    /// Equal to the given combination of previously independent vectors.
    Dependent(Vec<Elem>),
}

impl Echelon {
    pub fn new(field: &FieldSpec) -> Self {
        Echelon {
            field: field.clone(),
            rows: Vec::new(),
            inserted: 0,
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.inserted
    }

    pub fn insert(&mut self, mut v: Vec<Elem>) -> Insert {
        let k = &self.field;
        let mut comb = vec![Elem::ZERO; self.inserted];
        for (pc, row, rc) in &self.rows {
            let c = v[*pc];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = k.sub(*x, k.mul(c, y));
            }
            for (x, &y) in comb.iter_mut().zip(rc) {
                *x = k.add(*x, k.mul(c, y));
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => Insert::Dependent(comb),
            Some(pc) => {
                let idx = self.inserted;
                let inv = k.inv(v[pc]).expect("nonzero pivot");
                for x in v.iter_mut() {
                    *x = k.mul(*x, inv);
                }
                let mut rc: Vec<Elem> = comb.iter().map(|&x| k.neg(k.mul(x, inv))).collect();
                rc.push(inv);
                for (_, _, other) in self.rows.iter_mut() {
                    other.push(Elem::ZERO);
                }
                self.rows.push((pc, v, rc));
                self.inserted += 1;
                Insert::Independent(idx)
            }
        }
    }
}
