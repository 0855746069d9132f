//! Minimal homogeneous generators of graded ideals by linear algebra in each
//! degree: mu_d = dim I_d - dim (S_1 * I_{d-1}).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::{Echelon, Insert};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalGenerators {
    /// `per_degree[d]` is the number of minimal generators of degree `d`.
    pub per_degree: Vec<usize>,
    pub generators: Vec<Polynomial>,
}

impl MinimalGenerators {
    pub fn total(&self) -> usize {
        self.per_degree.iter().sum()
    }
}

fn coordinates(p: &Polynomial, index: &HashMap<Monomial, usize>) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c;
    }
    v
}

/// Minimal generating set extracted from a reduced Gröbner basis of a
/// homogeneous ideal. Elements are kept degree by degree, in basis order,
/// whenever they are not already in the span of lower-degree multiples and
/// previously kept elements.
pub fn minimal_generators(gb: &GroebnerBasis) -> Result<MinimalGenerators> {
    let elements = gb.elements();
    if elements.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous);
    }
    let top = gb.max_degree();
    let mut per_degree = vec![0usize; top as usize + 1];
    let mut generators = Vec::new();
    for d in 1..=top {
        let here: Vec<&Polynomial> = elements.iter().filter(|g| g.degree() == Some(d)).collect();
        if here.is_empty() {
            continue;
        }
        let index: HashMap<Monomial, usize> = monomials_of_degree(gb.nvars(), d)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let mut ech = Echelon::new(gb.field());
        for g in elements.iter().filter(|g| g.degree().is_some_and(|e| e < d)) {
            let e = g.degree().unwrap();
            for w in monomials_of_degree(gb.nvars(), d - e) {
                ech.insert(coordinates(&g.mul_term(Elem::ONE, &w), &index));
            }
        }
        for g in here {
            if let Insert::Independent(_) = ech.insert(coordinates(g, &index)) {
                per_degree[d as usize] += 1;
                generators.push(g.clone());
            }
        }
    }
    Ok(MinimalGenerators {
        per_degree,
        generators,
    })
}

/// Number of minimal homogeneous generators of the ideal spanned by `gens`,
/// with the per-degree breakdown. An empty list is the zero ideal.
pub fn minimal_generator_count(gens: &[Polynomial], order: MonomialOrder) -> Result<(usize, Vec<usize>)> {
    if gens.iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous);
    }
    if gens.is_empty() {
        return Ok((0, vec![0]));
    }
    let mg = minimal_generators(&buchberger(gens, order)?)?;
    Ok((mg.total(), mg.per_degree))
}
