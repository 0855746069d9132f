//! Vanishing ideals I(X) of finite sets X in P^{s-1}.
//!
//! The reduced GRevLex Gröbner basis is built one degree at a time. In degree
//! `d` the candidates are the monomials `t_i * m` with `m` standard in degree
//! `d - 1` and not divisible by a known leading monomial. Candidates are taken
//! in increasing order and their evaluation vectors on X are reduced against
//! the vectors of the standard monomials found so far in that degree. An
//! independent vector makes the candidate standard; a dependency
//! `t^a = sum c_j t^{b_j}` on X yields the basis element `t^a - sum c_j t^{b_j}`,
//! already reduced.
//!
//! When X together with [0] is closed under componentwise multiplication,
//! I(X) is spanned in each degree by pure binomials and monomials, so distinct
//! nonzero evaluation vectors are linearly independent and the reduction is a
//! hash lookup. Otherwise full Gaussian elimination is used.
//!
//! The sweep stops at the first degree `d` where `d` has |X| standard
//! monomials and the Hilbert function of the monomial ideal spanned by the
//! leading monomials found so far is |X| in every degree `>= d`.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::hilbert::HilbertSeries;
use crate::linalg::{Echelon, Insert, Matrix};
use crate::mingens::minimal_generators;
use crate::param::ParamSet;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};
use crate::projective::PointSet;

const ORDER: MonomialOrder = MonomialOrder::GRevLex;

/// How dependencies between evaluation vectors are detected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Class hashing when X ∪ {[0]} is a monoid, elimination otherwise.
    #[default]
    Auto,
    /// Always Gaussian elimination.
    Elimination,
}

#[derive(Clone, Debug)]
pub struct VanishingIdeal {
    source: PointSet,
    gb: GroebnerBasis,
    generators: Vec<Polynomial>,
    mu: Vec<usize>,
    hilbert: Vec<u64>,
    monoid: bool,
}

/// Degree-`d` monomials in descending GRevLex order.
pub fn degree_monomials(s: usize, d: u32) -> Vec<Monomial> {
    let mut v = monomials_of_degree(s, d);
    v.sort_by(|a, b| ORDER.cmp(b, a));
    v
}

/// Values of every degree-`d` monomial (columns, descending GRevLex) at every
/// point (rows, canonical representatives).
pub fn evaluation_matrix(x: &PointSet, d: u32) -> Matrix {
    let k = x.field();
    let monos = degree_monomials(x.s(), d);
    let rows = x
        .points()
        .iter()
        .map(|p| monos.iter().map(|m| m.evaluate(k, p.coords())).collect())
        .collect();
    Matrix::from_rows(k, monos.len(), rows).expect("rows have one entry per monomial")
}

/// A basis of I(X)_d read off the kernel of the evaluation matrix.
pub fn ideal_degree_slice(x: &PointSet, d: u32) -> Vec<Polynomial> {
    let k = x.field();
    let monos = degree_monomials(x.s(), d);
    evaluation_matrix(x, d)
        .kernel_basis()
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(k, x.s(), monos.iter().cloned().zip(v))
                .expect("monomials have s variables")
        })
        .collect()
}

/// I(X) as the ideal spanned by the kernels of the evaluation maps in degrees
/// 1..=|X|, completed by Buchberger's algorithm. Cost grows like
/// C(s - 1 + |X|, |X|); meant for small sets and cross-checks.
pub fn vanishing_ideal_by_slices(x: &PointSet) -> Result<GroebnerBasis> {
    if x.is_empty() {
        return Err(Error::Empty("point set"));
    }
    let mut gens = vec![Polynomial::zero(x.field(), x.s())];
    for d in 1..=x.len() as u32 {
        gens.extend(ideal_degree_slice(x, d));
    }
    buchberger(&gens, ORDER)
}

enum Outcome {
    Standard,
    /// The candidate equals this combination of standard monomials on X.
    Relation(Vec<(usize, Elem)>),
}

enum Reducer {
    Classes(HashMap<Vec<Elem>, usize>),
    Elimination(Echelon),
}

impl Reducer {
    fn insert(&mut self, v: Vec<Elem>) -> Outcome {
        match self {
            Reducer::Classes(map) => {
                if v.iter().all(|x| x.is_zero()) {
                    return Outcome::Relation(Vec::new());
                }
                if let Some(&j) = map.get(&v) {
                    return Outcome::Relation(vec![(j, Elem::ONE)]);
                }
                let j = map.len();
                map.insert(v, j);
                Outcome::Standard
            }
            Reducer::Elimination(ech) => match ech.insert(v) {
                Insert::Independent(_) => Outcome::Standard,
                Insert::Dependent(comb) => Outcome::Relation(
                    comb.into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                ),
            },
        }
    }
}

/// Standard monomials of one degree with their evaluation vectors.
struct Layer {
    monos: Vec<Monomial>,
    vecs: Vec<Vec<Elem>>,
    /// vector -> index into `monos`; filled only on the hashing path
    classes: HashMap<Vec<Elem>, usize>,
}

fn hadamard(k: &FieldSpec, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| k.mul(x, y)).collect()
}

/// Evaluation vector of a monomial on the points.
fn eval_vec(k: &FieldSpec, var_vecs: &[Vec<Elem>], m: &Monomial, npts: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ONE; npts];
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            v = hadamard(k, &v, &var_vecs[i]);
        }
    }
    v
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.0[a] != a {
            self.0[a] = self.0[self.0[a]];
            a = self.0[a];
        }
        a
    }

    /// Returns whether two distinct classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Minimal generators in degree `d` for a binomial vanishing ideal, from the
/// evaluation classes of degrees `d - 1` and `d - 2`.
///
/// A degree-`d` monomial `u` is presented as `(i, class(u / t_i))` for each
/// `t_i | u`. Presentations of one monomial are linked through
/// `class(u / (t_i t_j))`, and two monomials sharing a presentation are
/// congruent modulo `S_1 I_{d-1}`. Presentations with a zero class join the
/// node Z. Hence `dim S_d / S_1 I_{d-1}` is the number of components avoiding
/// Z and `mu_d` is that number minus H(d).
struct ClassMu<'a> {
    k: &'a FieldSpec,
    var_vecs: &'a [Vec<Elem>],
    npts: usize,
}

impl ClassMu<'_> {
    fn lookup(&self, layer: &Layer, v: &[Elem]) -> Result<Option<usize>> {
        if v.iter().all(|x| x.is_zero()) {
            return Ok(None);
        }
        layer
            .classes
            .get(v)
            .copied()
            .map(Some)
            .ok_or_else(|| Error::Defect("evaluation vector outside the known classes".into()))
    }

    /// Indices (into `new_elems`) of the degree-`d` basis elements kept as
    /// minimal generators, and the expected count from the component formula.
    fn degree(
        &self,
        prev: &Layer,
        prev2: Option<&Layer>,
        hilbert_d: usize,
        new_elems: &[(Monomial, Option<Monomial>)],
    ) -> Result<(Vec<usize>, usize)> {
        let s = self.var_vecs.len();
        let h1 = prev.monos.len();
        let zero_node = s * h1;
        let node = |i: usize, c: Option<usize>| c.map_or(zero_node, |c| i * h1 + c);
        let mut uf = UnionFind::new(s * h1 + 1);
        if let Some(prev2) = prev2 {
            for w in &prev2.vecs {
                let classes = (0..s)
                    .map(|j| self.lookup(prev, &hadamard(self.k, &self.var_vecs[j], w)))
                    .collect::<Result<Vec<_>>>()?;
                for i in 0..s {
                    for j in i + 1..s {
                        uf.union(node(i, classes[j]), node(j, classes[i]));
                    }
                }
            }
        }
        let z = uf.find(zero_node);
        let mut roots = HashSet::new();
        for id in 0..s * h1 {
            let r = uf.find(id);
            if r != z {
                roots.insert(r);
            }
        }
        let expected = roots.len().checked_sub(hilbert_d).ok_or_else(|| {
            Error::Defect("fewer components than evaluation classes".into())
        })?;

        let node_of = |m: &Monomial| -> Result<usize> {
            let i = m.0.iter().position(|&e| e > 0).expect("positive degree");
            let mut w = m.clone();
            w.0[i] -= 1;
            let v = eval_vec(self.k, self.var_vecs, &w, self.npts);
            Ok(node(i, self.lookup(prev, &v)?))
        };
        let mut kept = Vec::new();
        for (idx, (lead, tail)) in new_elems.iter().enumerate() {
            let a = node_of(lead)?;
            let b = match tail {
                Some(t) => node_of(t)?,
                None => zero_node,
            };
            if uf.union(a, b) {
                kept.push(idx);
            }
        }
        Ok((kept, expected))
    }
}

/// I(X) with the default strategy.
pub fn vanishing_ideal(x: &PointSet) -> Result<VanishingIdeal> {
    vanishing_ideal_with(x, Strategy::Auto)
}

pub fn vanishing_ideal_with(x: &PointSet, strategy: Strategy) -> Result<VanishingIdeal> {
    if x.is_empty() {
        return Err(Error::Empty("point set"));
    }
    let k = x.field().clone();
    let s = x.s();
    let npts = x.len();
    let monoid = x.monoid_closed();
    let hashing = monoid && strategy == Strategy::Auto;
    let var_vecs: Vec<Vec<Elem>> = (0..s)
        .map(|i| x.points().iter().map(|p| p.coords()[i]).collect())
        .collect();
    let class_mu = ClassMu {
        k: &k,
        var_vecs: &var_vecs,
        npts,
    };

    let ones = vec![Elem::ONE; npts];
    let mut layers = vec![Layer {
        monos: vec![Monomial::one(s)],
        vecs: vec![ones.clone()],
        classes: HashMap::from([(ones, 0)]),
    }];
    let mut hilbert: Vec<u64> = vec![1];
    let mut elements: Vec<Polynomial> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut mu: Vec<usize> = vec![0];
    let mut generators: Vec<Polynomial> = Vec::new();
    let limit = 2 * npts as u32 + s as u32 + 2;

    let mut d: u32 = 0;
    loop {
        if hilbert[d as usize] == npts as u64
            && HilbertSeries::of_monomial_ideal(s, &lms).constant_from(d, npts as u64)
        {
            break;
        }
        d += 1;
        if d > limit {
            return Err(Error::Defect(format!(
                "no stable Hilbert function after degree {limit}"
            )));
        }
        let prev = layers.last().unwrap();
        let mut seen = HashSet::new();
        let mut cands: Vec<(Monomial, usize, usize)> = Vec::new();
        for (j, m) in prev.monos.iter().enumerate() {
            for i in 0..s {
                let c = m.times_var(i);
                if lms.iter().any(|l| l.divides(&c)) || !seen.insert(c.clone()) {
                    continue;
                }
                cands.push((c, j, i));
            }
        }
        cands.sort_by(|a, b| ORDER.cmp(&a.0, &b.0));

        let mut reducer = if hashing {
            Reducer::Classes(HashMap::new())
        } else {
            Reducer::Elimination(Echelon::new(&k))
        };
        let mut layer = Layer {
            monos: Vec::new(),
            vecs: Vec::new(),
            classes: HashMap::new(),
        };
        let mut new_elems: Vec<(Monomial, Option<Monomial>)> = Vec::new();
        for (m, j, i) in cands {
            let v = hadamard(&k, &prev.vecs[j], &var_vecs[i]);
            match reducer.insert(v.clone()) {
                Outcome::Standard => {
                    layer.monos.push(m);
                    layer.vecs.push(v);
                }
                Outcome::Relation(comb) => {
                    let mut g = Polynomial::monomial(&k, m.clone());
                    for &(idx, c) in &comb {
                        g.add_term(layer.monos[idx].clone(), k.neg(c));
                    }
                    new_elems.push((m.clone(), (comb.len() == 1).then(|| layer.monos[comb[0].0].clone())));
                    elements.push(g);
                    lms.push(m);
                }
            }
        }
        if layer.monos.len() > npts {
            return Err(Error::Defect(format!(
                "{} independent evaluations in degree {d} for {npts} points",
                layer.monos.len()
            )));
        }
        hilbert.push(layer.monos.len() as u64);
        if let Reducer::Classes(map) = reducer {
            layer.classes = map;
            let prev2 = (d >= 2).then(|| &layers[layers.len() - 2]);
            let (kept, expected) =
                class_mu.degree(layers.last().unwrap(), prev2, layer.monos.len(), &new_elems)?;
            if kept.len() != expected {
                return Err(Error::Defect(format!(
                    "degree {d}: {} generators kept but {expected} expected",
                    kept.len()
                )));
            }
            let first = elements.len() - new_elems.len();
            generators.extend(kept.iter().map(|&i| elements[first + i].clone()));
            mu.push(kept.len());
        }
        layers.push(layer);
        if layers.len() > 3 {
            layers.remove(0);
        }
    }

    let gb = GroebnerBasis::from_reduced(k.clone(), s, ORDER, elements);
    if !hashing {
        let mg = minimal_generators(&gb)?;
        mu = mg.per_degree;
        generators = mg.generators;
    }
    mu.resize(gb.max_degree() as usize + 1, 0);
    let hs = HilbertSeries::of_basis(&gb);
    for e in [npts as u32, npts as u32 + 1] {
        if hs.value(e) != npts as u64 {
            return Err(Error::Defect(format!(
                "Hilbert function is {} in degree {e}, expected {npts}",
                hs.value(e)
            )));
        }
    }
    Ok(VanishingIdeal {
        source: x.clone(),
        gb,
        generators,
        mu,
        hilbert,
        monoid,
    })
}

impl VanishingIdeal {
    pub fn source(&self) -> &PointSet {
        &self.source
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// A minimal homogeneous generating set, in increasing degree.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `mu_per_degree()[d]` is the number of minimal generators of degree `d`.
    pub fn mu_per_degree(&self) -> &[usize] {
        &self.mu
    }

    pub fn mu_total(&self) -> usize {
        self.mu.iter().sum()
    }

    /// Hilbert function of S/I(X) in degrees 0 up to the degree where it is
    /// certified constant.
    pub fn hilbert_table(&self) -> &[u64] {
        &self.hilbert
    }

    pub fn hilbert(&self, d: u32) -> u64 {
        match self.hilbert.get(d as usize) {
            Some(&h) => h,
            None => *self.hilbert.last().unwrap(),
        }
    }

    /// First degree where the Hilbert function reaches |X|.
    pub fn regularity_index(&self) -> u32 {
        self.hilbert
            .iter()
            .position(|&h| h == self.source.len() as u64)
            .unwrap() as u32
    }

    /// Height of I(X): s - 1 for a nonempty finite set.
    pub fn height(&self) -> usize {
        self.source.s() - 1
    }

    pub fn is_monoid(&self) -> bool {
        self.monoid
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.gb.contains(f)
    }

    /// Whether every element of the reduced basis has at most two terms.
    pub fn is_binomial_generated(&self) -> bool {
        self.gb.is_binomial()
    }
}

/// For a clutter parameterization: every quadric `t_i t_j - t_k t_l` (four
/// distinct indices) in I(X) must come from `v_i + v_j = v_k + v_l`.
pub fn check_quartic_constraint(ps: &ParamSet, vi: &VanishingIdeal) -> Result<bool> {
    if ps.field().q() == 2 {
        return Err(Error::Unsupported("the quadric constraint needs q != 2".into()));
    }
    if !ps.is_squarefree() || !ps.is_clutter_type() {
        return Err(Error::Unsupported(
            "the quadric constraint applies to clutter parameterizations".into(),
        ));
    }
    let s = ps.s();
    if vi.source().s() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            found: vi.source().s(),
        });
    }
    let v = ps.monomials();
    let k = ps.field();
    for (i, j, a, b) in quadric_pairings(s) {
        let f = Polynomial::binomial(k, pair(s, i, j), pair(s, a, b));
        if vi.contains(&f) {
            let lhs: Vec<u32> = v[i].0.iter().zip(&v[j].0).map(|(x, y)| x + y).collect();
            let rhs: Vec<u32> = v[a].0.iter().zip(&v[b].0).map(|(x, y)| x + y).collect();
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `t_i * t_j` in `s` variables.
pub(crate) fn pair(s: usize, i: usize, j: usize) -> Monomial {
    Monomial::var(s, i).mul(&Monomial::var(s, j))
}

/// All `(i, j, k, l)` with `i < j`, `k < l`, `i < k` and four distinct indices.
pub(crate) fn quadric_pairings(s: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            for a in i + 1..s {
                for b in a + 1..s {
                    if a != j && b != j {
                        out.push((i, j, a, b));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::projective::{enumerate_set, projective_torus, ProjectivePoint, DEFAULT_POINT_BUDGET};

    fn gf(p: u32, m: u32) -> FieldSpec {
        FieldSpec::new(p, m).unwrap()
    }

    fn parse_all(k: &FieldSpec, n: usize, v: &[&str]) -> Vec<Polynomial> {
        v.iter().map(|s| Polynomial::parse(k, n, s).unwrap()).collect()
    }

    fn set(ps: &ParamSet) -> PointSet {
        enumerate_set(ps, DEFAULT_POINT_BUDGET).unwrap()
    }

    fn triangle(q: u32) -> ParamSet {
        let e = q - 1;
        ParamSet::new(gf(q, 1), 3, vec![vec![e, e, 0], vec![0, e, e], vec![e, 0, e]]).unwrap()
    }

    #[test]
    fn evaluation_matrix_examples() {
        let k = gf(3, 1);
        let units = PointSet::new(&k, 3, (0..3).map(|i| ProjectivePoint::unit(3, i))).unwrap();
        let m = evaluation_matrix(&units, 1);
        // rows sorted [0:0:1], [0:1:0], [1:0:0]; columns t1, t2, t3
        assert_eq!(m.rank(), 3);
        let x = set(&triangle(3));
        assert_eq!(evaluation_matrix(&x, 1).rank(), 3);
        let e = evaluation_matrix(&x, 3);
        for (r, p) in x.points().iter().enumerate() {
            let expect = if p.coords()[0].is_zero() { Elem::ZERO } else { Elem::ONE };
            assert_eq!(e.get(r, 0), expect);
        }
    }

    #[test]
    fn slices_of_the_triangle_set() {
        let k = gf(3, 1);
        let x = set(&triangle(3));
        assert!(ideal_degree_slice(&x, 1).is_empty());
        let quad = ideal_degree_slice(&x, 2);
        assert_eq!(quad.len(), 2);
        for f in &quad {
            for p in x.points() {
                assert!(f.evaluate(p.coords()).is_zero());
            }
        }
        let expected = parse_all(&k, 3, &["t1*t2 - t2*t3", "t1*t3 - t2*t3"]);
        assert!(ideal_equal(&quad, &expected, ORDER).unwrap());
        let p1 = crate::projective::projective_space(2, &gf(2, 1)).unwrap();
        assert!(ideal_degree_slice(&p1, 1).is_empty());
    }

    #[test]
    fn triangle_vanishing_ideal() {
        let k = gf(3, 1);
        let vi = vanishing_ideal(&set(&triangle(3))).unwrap();
        assert!(vi.is_monoid());
        assert_eq!(
            vi.gb().render(),
            vec!["t1*t3 - t2*t3", "t1*t2 - t2*t3", "t2^2*t3 - t2*t3^2"]
        );
        assert_eq!(vi.mu_total(), 2);
        assert_eq!(vi.hilbert_table(), &[1, 3, 4, 4]);
        assert_eq!(vi.regularity_index(), 2);
        let expected = parse_all(&k, 3, &["t1*t2 - t2*t3", "t1*t3 - t2*t3"]);
        assert!(ideal_equal(vi.generators(), &expected, ORDER).unwrap());
    }

    #[test]
    fn s2_example_over_gf5() {
        let k = gf(5, 1);
        let ps = ParamSet::new(k.clone(), 3, vec![vec![4, 0, 0], vec![0, 4, 2]]).unwrap();
        let x = set(&ps);
        let vi = vanishing_ideal(&x).unwrap();
        assert_eq!(vi.gb().render(), vec!["t1^3*t2 - t1*t2^3"]);
        for p in x.points() {
            assert!(vi.gb().elements()[0].evaluate(p.coords()).is_zero());
        }
    }

    #[test]
    fn single_points_and_s1() {
        let k = gf(3, 1);
        let e1 = PointSet::new(&k, 3, [ProjectivePoint::unit(3, 0)]).unwrap();
        let vi = vanishing_ideal(&e1).unwrap();
        assert_eq!(vi.gb().render(), vec!["t3", "t2"]);
        assert!(vi.is_binomial_generated());
        let one = PointSet::new(&k, 1, [ProjectivePoint::ones(1)]).unwrap();
        let vi = vanishing_ideal(&one).unwrap();
        assert!(vi.gb().is_empty());
        assert_eq!(vi.mu_total(), 0);
        assert_eq!(vi.height(), 0);
        assert!(vanishing_ideal(&PointSet::new(&k, 2, []).unwrap()).is_err());
    }

    #[test]
    fn non_monoid_set_uses_elimination() {
        let k = gf(5, 1);
        let raw = vec![
            vec![Elem(1), Elem(1)],
            vec![Elem(1), Elem(2)],
            vec![Elem(1), Elem(0)],
        ];
        let x = PointSet::from_raw(&k, 2, raw).unwrap();
        assert!(!x.monoid_closed());
        let vi = vanishing_ideal(&x).unwrap();
        assert!(!vi.is_monoid());
        // three points on P^1: a single cubic t2 (t2 - t1)(t2 - 2 t1)
        assert_eq!(vi.gb().len(), 1);
        assert_eq!(vi.is_binomial_generated(), x.monoid_closed());
        assert_eq!(vi.gb(), &vanishing_ideal_by_slices(&x).unwrap());
    }

    #[test]
    fn torus_contains_power_differences() {
        for q in [2, 3, 4, 5] {
            let k = if q == 4 { gf(2, 2) } else { gf(q, 1) };
            for s in 1..=3 {
                let t = projective_torus(s, &k).unwrap();
                let vi = vanishing_ideal(&t).unwrap();
                for i in 0..s {
                    for j in 0..s {
                        let mut a = Monomial::one(s);
                        a.0[i] = q - 1;
                        let mut b = Monomial::one(s);
                        b.0[j] = q - 1;
                        assert!(vi.contains(&Polynomial::binomial(&k, a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn strategies_and_slices_agree() {
        let k = gf(3, 1);
        let sets = [
            set(&triangle(3)),
            projective_torus(3, &k).unwrap(),
            crate::projective::projective_space(3, &k).unwrap(),
            set(&ParamSet::new(k.clone(), 3, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap()),
        ];
        for x in &sets {
            let fast = vanishing_ideal(x).unwrap();
            let slow = vanishing_ideal_with(x, Strategy::Elimination).unwrap();
            assert_eq!(fast.gb(), slow.gb());
            assert_eq!(fast.mu_per_degree(), slow.mu_per_degree());
            assert_eq!(fast.hilbert_table(), slow.hilbert_table());
            assert!(fast.gb().satisfies_buchberger_criterion());
            if x.len() <= 8 {
                assert_eq!(fast.gb(), &vanishing_ideal_by_slices(x).unwrap());
            }
        }
    }

    #[test]
    fn quadric_constraint() {
        let k = gf(3, 1);
        let c4 = crate::param::Clutter::from_one_based(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
            .unwrap()
            .to_paramset(&k)
            .unwrap();
        let vi = vanishing_ideal(&set(&c4)).unwrap();
        assert!(check_quartic_constraint(&c4, &vi).unwrap());
        // t1*t3 - t2*t4: v1 + v3 = v2 + v4 = (1,1,1,1)
        assert!(vi.contains(&Polynomial::parse(&k, 4, "t1*t3 - t2*t4").unwrap()));
        let tri = crate::param::Clutter::from_one_based(3, &[vec![1, 2], vec![2, 3], vec![1, 3]])
            .unwrap()
            .to_paramset(&k)
            .unwrap();
        let vt = vanishing_ideal(&set(&tri)).unwrap();
        assert!(check_quartic_constraint(&tri, &vt).unwrap());
        let k2 = gf(2, 1);
        let tri2 = tri_over(&k2);
        let v2 = vanishing_ideal(&set(&tri2)).unwrap();
        assert!(matches!(check_quartic_constraint(&tri2, &v2), Err(Error::Unsupported(_))));
        assert_eq!(quadric_pairings(4).len(), 3);
        assert_eq!(quadric_pairings(5).len(), 15);
    }

    fn tri_over(k: &FieldSpec) -> ParamSet {
        crate::param::Clutter::from_one_based(3, &[vec![1, 2], vec![2, 3], vec![1, 3]])
            .unwrap()
            .to_paramset(k)
            .unwrap()
    }
}
