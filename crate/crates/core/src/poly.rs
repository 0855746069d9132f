//! Sparse polynomials in t_1, ..., t_s over GF(q).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

/// Exponent vector `a` of the monomial `t^a`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        Monomial(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v[i] += 1;
        Monomial(v)
    }

    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut v = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            v[perm[i]] = e;
        }
        Monomial(v)
    }

    /// Product of point coordinates raised to the exponents.
    pub fn evaluate(&self, field: &FieldSpec, point: &[Elem]) -> Elem {
        self.0
            .iter()
            .zip(point)
            .fold(Elem::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "t{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, in lex-descending order
/// (t_1^d first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn monomial_count(nvars: usize, d: u32) -> u64 {
    if nvars == 0 {
        return u64::from(d == 0);
    }
    binomial(nvars as u64 - 1 + d as u64, d as u64)
}

/// Monomial order with the convention t_1 > t_2 > ... > t_s.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher degree wins; on ties the monomial
    /// whose exponent difference has a negative rightmost nonzero entry wins.
    #[default]
    GRevLex,
    Lex,
}

impl MonomialOrder {
    /// Total comparison; both monomials must have the same length.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.0.len() != b.0.len() {
            return Err(Error::DimensionMismatch {
                expected: a.0.len(),
                found: b.0.len(),
            });
        }
        Ok(self.cmp(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GRevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

/// A polynomial is a finite map from monomials to nonzero coefficients.
/// The map is kept in storage order; ordered views take a [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(MonomialOrder::GRevLex))
    }
}

impl Polynomial {
    pub fn zero(field: &FieldSpec, nvars: usize) -> Self {
        Polynomial {
            field: field.clone(),
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(field: &FieldSpec, coeff: Elem, mono: Monomial) -> Self {
        let mut p = Self::zero(field, mono.nvars());
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn monomial(field: &FieldSpec, mono: Monomial) -> Self {
        Self::term(field, Elem::ONE, mono)
    }

    /// `t^a - t^b`.
    pub fn binomial(field: &FieldSpec, a: Monomial, b: Monomial) -> Self {
        let mut p = Self::monomial(field, a);
        p.add_term(b, field.neg(Elem::ONE));
        p
    }

    pub fn from_terms(
        field: &FieldSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Elem)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Elem {
        self.terms.get(m).copied().unwrap_or(Elem::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn add_term(&mut self, m: Monomial, c: Elem) {
        if c.is_zero() {
            return;
        }
        let k = &self.field;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = k.add(*e.get(), c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Terms in descending order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Elem)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, &c)| (m.clone(), c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, &c)| (m, c))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, &c) in &other.terms {
            r.add_term(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut r = self.clone();
        for (m, &c) in &other.terms {
            r.add_term(m.clone(), self.field.neg(c));
        }
        r
    }

    pub fn scale(&self, c: Elem) -> Polynomial {
        let mut r = Self::zero(&self.field, self.nvars);
        if c.is_zero() {
            return r;
        }
        r.terms = self
            .terms
            .iter()
            .map(|(m, &x)| (m.clone(), self.field.mul(x, c)))
            .collect();
        r
    }

    pub fn mul_term(&self, c: Elem, mono: &Monomial) -> Polynomial {
        let mut r = Self::zero(&self.field, self.nvars);
        if c.is_zero() {
            return r;
        }
        r.terms = self
            .terms
            .iter()
            .map(|(m, &x)| (m.mul(mono), self.field.mul(x, c)))
            .collect();
        r
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut r = Self::zero(&self.field, self.nvars);
        for (m, &c) in &other.terms {
            r = r.add(&self.mul_term(c, m));
        }
        r
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c).expect("nonzero coefficient")),
        }
    }

    pub fn evaluate(&self, point: &[Elem]) -> Elem {
        let k = &self.field;
        self.terms.iter().fold(Elem::ZERO, |acc, (m, &c)| {
            k.add(acc, k.mul(c, m.evaluate(k, point)))
        })
    }

    /// Relabels variables: t_i becomes t_{perm[i]}.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        let mut r = Self::zero(&self.field, self.nvars);
        for (m, &c) in &self.terms {
            r.add_term(m.permute(perm), c);
        }
        r
    }

    /// Text form with terms in descending order, e.g. `t1*t2 - t3*t4`.
    /// Coefficients in the prime subfield print as integers, those above p/2
    /// as negatives.
    pub fn render(&self, order: MonomialOrder) -> String {
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".to_string();
        }
        let k = &self.field;
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let prime = (c.0 as u32) < k.p();
            let (neg, mag) = if prime && c.0 as u32 * 2 > k.p() {
                (true, (k.p() - c.0 as u32).to_string())
            } else if prime {
                (false, c.0.to_string())
            } else {
                (false, format!("({})", k.fmt_elem(*c)))
            };
            let sep = match (i, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sep);
            let is_one = m.degree() == 0;
            match (mag.as_str(), is_one) {
                ("1", false) => out.push_str(&m.to_string()),
                (_, true) => out.push_str(&mag),
                (_, false) => {
                    out.push_str(&mag);
                    out.push('*');
                    out.push_str(&m.to_string());
                }
            }
        }
        out
    }

    /// Parses the text form produced by [`Polynomial::render`] for prime-field
    /// coefficients: terms like `2*t1^2*t3`, joined by `+` and `-`.
    pub fn parse(field: &FieldSpec, nvars: usize, text: &str) -> Result<Polynomial> {
        let bad = |msg: &str| Error::Malformed(format!("{msg} in polynomial {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty text"));
        }
        let mut p = Polynomial::zero(field, nvars);
        let mut pieces = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let mut coeff = sign;
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('t') {
                    let (idx, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| bad("bad variable"))?;
                    if idx == 0 || idx > nvars {
                        return Err(bad("variable index out of range"));
                    }
                    exps[idx - 1] += e;
                } else {
                    let c: i64 = factor.parse().map_err(|_| bad("bad coefficient"))?;
                    coeff *= c;
                }
            }
            p.add_term(Monomial(exps), field.from_int(coeff));
        }
        Ok(p)
    }
}
