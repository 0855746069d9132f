//! Monomial parameterizations y^{v_1}, ..., y^{v_s} and clutters.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Exponent vector of a monomial in y_1, ..., y_n.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    /// 0-based indices of the variables with positive exponent.
    pub fn support(&self) -> BTreeSet<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// The monomials defining a parameterized set, together with the field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamSet {
    field: FieldSpec,
    n: usize,
    monomials: Vec<ExponentVector>,
}

impl ParamSet {
    pub fn new(field: FieldSpec, n: usize, monomials: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty("variable list"));
        }
        if monomials.is_empty() {
            return Err(Error::Empty("monomial list"));
        }
        for v in &monomials {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        for i in 0..monomials.len() {
            for j in i + 1..monomials.len() {
                if monomials[i] == monomials[j] {
                    return Err(Error::DuplicateMonomial(i, j));
                }
            }
        }
        Ok(ParamSet {
            field,
            n,
            monomials: monomials.into_iter().map(ExponentVector).collect(),
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Number of parameter variables y_1, ..., y_n.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of monomials, i.e. the projective space is P^{s-1}.
    pub fn s(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    /// First pair `(i, j)`, `i != j`, with supp(v_i) contained in supp(v_j).
    pub fn clutter_violation(&self) -> Option<(usize, usize)> {
        let supports: Vec<BTreeSet<usize>> = self.monomials.iter().map(|v| v.support()).collect();
        for i in 0..supports.len() {
            for j in 0..supports.len() {
                if i != j && supports[i].is_subset(&supports[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_clutter_type(&self) -> bool {
        self.clutter_violation().is_none()
    }

    pub fn require_clutter_type(&self) -> Result<()> {
        match self.clutter_violation() {
            Some((i, j)) => Err(Error::NotClutterType(i, j)),
            None => Ok(()),
        }
    }

    /// Same monomials listed in a different order: monomial `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> ParamSet {
        let mut monomials = self.monomials.clone();
        for (i, &p) in perm.iter().enumerate() {
            monomials[p] = self.monomials[i].clone();
        }
        ParamSet {
            field: self.field.clone(),
            n: self.n,
            monomials,
        }
    }

    /// Whether every exponent is 0 or 1, as for characteristic vectors.
    pub fn is_squarefree(&self) -> bool {
        self.monomials.iter().all(|v| v.0.iter().all(|&e| e <= 1))
    }
}

/// A simple hypergraph on vertices 0..n: no edge contains another.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Clutter {
    n: usize,
    edges: Vec<BTreeSet<usize>>,
}

impl Clutter {
    /// Edges use 0-based vertex indices.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::Empty("edge list"));
        }
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            let mut set = BTreeSet::new();
            for v in e {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n });
                }
                set.insert(v);
            }
            sets.push(set);
        }
        for i in 0..sets.len() {
            for j in 0..sets.len() {
                if i != j && sets[i].is_subset(&sets[j]) {
                    return Err(Error::EdgeContainment(i, j));
                }
            }
        }
        Ok(Clutter { n, edges: sets })
    }

    /// Edges given with 1-based vertex labels.
    pub fn from_one_based(n: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(edges.len());
        for e in edges {
            let mut v = Vec::with_capacity(e.len());
            for &x in e {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
                v.push(x - 1);
            }
            zero_based.push(v);
        }
        Self::new(n, zero_based)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[BTreeSet<usize>] {
        &self.edges
    }

    /// 0/1 characteristic vectors of the edges.
    pub fn characteristic_vectors(&self) -> Vec<Vec<u32>> {
        self.edges
            .iter()
            .map(|e| (0..self.n).map(|i| u32::from(e.contains(&i))).collect())
            .collect()
    }

    /// The parameterization by the characteristic vectors of the edges.
    pub fn to_paramset(&self, field: &FieldSpec) -> Result<ParamSet> {
        ParamSet::new(field.clone(), self.n, self.characteristic_vectors())
    }
}
