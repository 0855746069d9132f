//! Points of P^{s-1} over GF(q) and the parameterized set X.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::param::ParamSet;

/// Default cap on the number of parameter tuples visited by [`enumerate_set`].
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// A point of projective space whose first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjectivePoint(Vec<Elem>);

impl ProjectivePoint {
    /// Scales `raw` so its first nonzero coordinate becomes 1.
    pub fn canonicalize(field: &FieldSpec, mut raw: Vec<Elem>) -> Result<Self> {
        let lead = raw.iter().copied().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
        if lead != Elem::ONE {
            let inv = field.inv(lead)?;
            for x in raw.iter_mut() {
                *x = field.mul(*x, inv);
            }
        }
        Ok(ProjectivePoint(raw))
    }

    pub fn unit(s: usize, i: usize) -> Self {
        let mut v = vec![Elem::ZERO; s];
        v[i] = Elem::ONE;
        ProjectivePoint(v)
    }

    pub fn ones(s: usize) -> Self {
        ProjectivePoint(vec![Elem::ONE; s])
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Componentwise product; `None` when the product is the zero vector.
    pub fn product(&self, other: &ProjectivePoint, field: &FieldSpec) -> Option<ProjectivePoint> {
        let raw: Vec<Elem> = self.0.iter().zip(&other.0).map(|(&a, &b)| field.mul(a, b)).collect();
        ProjectivePoint::canonicalize(field, raw).ok()
    }

    /// `[c0:c1:...]` with field elements in their display form.
    pub fn render(&self, field: &FieldSpec) -> String {
        let parts: Vec<String> = self.0.iter().map(|&x| field.fmt_elem(x)).collect();
        format!("[{}]", parts.join(":"))
    }
}

/// A finite set of projective points, sorted and free of duplicates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    field: FieldSpec,
    s: usize,
    points: Vec<ProjectivePoint>,
}

impl PointSet {
    pub fn new(field: &FieldSpec, s: usize, points: impl IntoIterator<Item = ProjectivePoint>) -> Result<Self> {
        let mut points: Vec<ProjectivePoint> = points.into_iter().collect();
        for p in &points {
            if p.dim() != s {
                return Err(Error::DimensionMismatch {
                    expected: s,
                    found: p.dim(),
                });
            }
        }
        points.sort();
        points.dedup();
        Ok(PointSet {
            field: field.clone(),
            s,
            points,
        })
    }

    /// Canonicalizes each raw vector; zero vectors are an error.
    pub fn from_raw(field: &FieldSpec, s: usize, raw: Vec<Vec<Elem>>) -> Result<Self> {
        let pts = raw
            .into_iter()
            .map(|v| ProjectivePoint::canonicalize(field, v))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, s, pts)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &ProjectivePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Whether the set together with [0] is closed under componentwise
    /// multiplication.
    pub fn monoid_closed(&self) -> bool {
        let set: HashSet<&ProjectivePoint> = self.points.iter().collect();
        self.points.iter().enumerate().all(|(i, a)| {
            self.points[i..].iter().all(|b| match a.product(b, &self.field) {
                None => true,
                Some(c) => set.contains(&c),
            })
        })
    }

    pub fn intersect(&self, other: &PointSet) -> Result<PointSet> {
        if self.field != other.field {
            return Err(Error::MixedFields);
        }
        if self.s != other.s {
            return Err(Error::DimensionMismatch {
                expected: self.s,
                found: other.s,
            });
        }
        let pts = self.points.iter().filter(|p| other.contains(p)).cloned();
        PointSet::new(&self.field, self.s, pts)
    }

    pub fn render(&self) -> Vec<String> {
        self.points.iter().map(|p| p.render(&self.field)).collect()
    }
}

/// All points of P^{s-1} with every coordinate nonzero: (q-1)^{s-1} of them.
pub fn projective_torus(s: usize, field: &FieldSpec) -> Result<PointSet> {
    if s == 0 {
        return Err(Error::Empty("coordinate list"));
    }
    let nonzero: Vec<Elem> = field.elements().skip(1).collect();
    let mut pts = vec![vec![Elem::ONE]];
    for _ in 1..s {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                nonzero.iter().map(move |&x| {
                    let mut v = p.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    PointSet::new(field, s, pts.into_iter().map(ProjectivePoint))
}

/// All points of P^{s-1}.
pub fn projective_space(s: usize, field: &FieldSpec) -> Result<PointSet> {
    if s == 0 {
        return Err(Error::Empty("coordinate list"));
    }
    let mut pts = Vec::new();
    for lead in 0..s {
        let mut tails = vec![Vec::new()];
        for _ in lead + 1..s {
            tails = tails
                .into_iter()
                .flat_map(|t: Vec<Elem>| {
                    field.elements().map(move |x| {
                        let mut v = t.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        for t in tails {
            let mut v = vec![Elem::ZERO; lead];
            v.push(Elem::ONE);
            v.extend(t);
            pts.push(ProjectivePoint(v));
        }
    }
    PointSet::new(field, s, pts)
}

struct Powers {
    /// `table[x][e] = x^e` for e < q
    table: Vec<Vec<Elem>>,
    /// exponents of each monomial, reduced below q
    exps: Vec<Vec<usize>>,
}

/// Image of a contiguous block of parameter tuples. Tuple `index` is read as
/// base-q digits, y_1 least significant.
fn enumerate_block(ps: &ParamSet, powers: &Powers, start: u64, end: u64) -> HashSet<ProjectivePoint> {
    let k = ps.field();
    let q = k.q() as u64;
    let n = ps.n();
    let mut x = vec![0usize; n];
    let mut rest = start;
    for xi in x.iter_mut() {
        *xi = (rest % q) as usize;
        rest /= q;
    }
    let mut out = HashSet::new();
    let mut raw = vec![Elem::ZERO; ps.s()];
    for _ in start..end {
        for (slot, v) in raw.iter_mut().zip(&powers.exps) {
            let mut acc = Elem::ONE;
            for (j, &e) in v.iter().enumerate() {
                if e > 0 {
                    acc = k.mul(acc, powers.table[x[j]][e]);
                    if acc.is_zero() {
                        break;
                    }
                }
            }
            *slot = acc;
        }
        if let Ok(p) = ProjectivePoint::canonicalize(k, raw.clone()) {
            out.insert(p);
        }
        for xi in x.iter_mut() {
            *xi += 1;
            if *xi < q as usize {
                break;
            }
            *xi = 0;
        }
    }
    out
}

/// The set X of all well-defined points [(x^{v_1}, ..., x^{v_s})], x in K^n,
/// by exhaustive enumeration of the q^n parameter tuples.
pub fn enumerate_set(ps: &ParamSet, budget: u64) -> Result<PointSet> {
    let k = ps.field();
    let q = k.q() as u128;
    let total = q.checked_pow(ps.n() as u32).unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            what: "point enumeration",
            needed: total,
            budget: budget as u128,
        });
    }
    let total = total as u64;
    // x^e depends on e > 0 only through (e - 1) mod (q - 1)
    let qm1 = k.q() as u64 - 1;
    let reduced: Vec<Vec<usize>> = ps
        .monomials()
        .iter()
        .map(|v| {
            v.0.iter()
                .map(|&e| if e == 0 { 0 } else { ((e as u64 - 1) % qm1 + 1) as usize })
                .collect()
        })
        .collect();
    let powers: Vec<Vec<Elem>> = k
        .elements()
        .map(|x| (0..k.size()).map(|e| k.pow(x, e as u64)).collect())
        .collect();
    let powers = Powers {
        table: powers,
        exps: reduced,
    };

    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16) as u64;
    let found: HashSet<ProjectivePoint> = if total < 200_000 || threads == 1 {
        enumerate_block(ps, &powers, 0, total)
    } else {
        let chunk = total.div_ceil(threads);
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let (start, end) = (t * chunk, ((t + 1) * chunk).min(total));
                    let powers = &powers;
                    scope.spawn(move || enumerate_block(ps, powers, start, end))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("enumeration worker panicked"))
                .collect()
        })
    };
    PointSet::new(k, ps.s(), found)
}
