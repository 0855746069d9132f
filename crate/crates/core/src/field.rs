//! Arithmetic in GF(q), q = p^m, with q at most 256.
//!
//! Elements are stored as the integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! built from their coefficient vector modulo a fixed monic irreducible
//! polynomial. That integer doubles as the canonical enumeration index, so
//! `0` is the zero element, `1` the identity and the natural order on
//! [`Elem`] is the coefficient-vector order.
//!
//! Addition, multiplication and inversion are table driven.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A raw field element. Only meaningful together with the [`FieldSpec`]
/// that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, low degree first; empty for prime fields.
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// An immutable description of GF(p^m). Cloning is cheap.
#[derive(Clone)]
pub struct FieldSpec {
    t: Arc<Tables>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.p == other.t.p && self.t.m == other.t.m)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.p, self.t.m)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `b` over GF(p), coefficients
/// low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * bc) % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn monic_of_degree(deg: u32, lower: u64, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    let mut x = lower;
    for _ in 0..deg {
        c.push((x % p as u64) as u32);
        x /= p as u64;
    }
    c.push(1);
    c
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for lower in 0..(p as u64).pow(d) {
            let g = monic_of_degree(d, lower, p);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// GF(p^m) with the lowest monic irreducible modulus, ranking candidates
    /// by their lower coefficients read as a base-p integer.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !(1..=4).contains(&m) {
            return Err(Error::DegreeOutOfRange(m));
        }
        let q = (p as u64).pow(m);
        if q > 256 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as u32;
        let modulus = if m == 1 {
            Vec::new()
        } else {
            (0..(p as u64).pow(m))
                .map(|lower| monic_of_degree(m, lower, p))
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(FieldSpec {
            t: Arc::new(Tables::build(p, m, q, modulus)),
        })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn m(&self) -> u32 {
        self.t.m
    }

    pub fn q(&self) -> u32 {
        self.t.q
    }

    pub fn size(&self) -> usize {
        self.t.q as usize
    }

    /// Coefficients of the monic modulus, constant term first. Empty when m = 1.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.add[a.index() * self.size() + b.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.mul[a.index() * self.size() + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.t.neg[a.index()])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Elem(self.t.inv[a.index()]))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `a^0 = 1` (including `0^0`).
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All q elements: zero first, then increasing coefficient-vector order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.t.q).map(|i| Elem(i as u8))
    }

    pub fn elem(&self, index: u32) -> Result<Elem> {
        if index < self.t.q {
            Ok(Elem(index as u8))
        } else {
            Err(Error::Malformed(format!(
                "element index {index} out of range for GF({})",
                self.t.q
            )))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.t.p as i64) as u8)
    }

    /// Element with the given coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.t.m as usize {
            return Err(Error::DimensionMismatch {
                expected: self.t.m as usize,
                found: coeffs.len(),
            });
        }
        let mut idx = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= self.t.p {
                return Err(Error::Malformed(format!(
                    "coefficient {c} not reduced modulo {}",
                    self.t.p
                )));
            }
            idx = idx * self.t.p + c;
        }
        Ok(Elem(idx as u8))
    }

    /// Coefficient vector of length m, constant term first.
    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let mut x = a.0 as u32;
        (0..self.t.m)
            .map(|_| {
                let c = x % self.t.p;
                x /= self.t.p;
                c
            })
            .collect()
    }

    /// Least element of multiplicative order q - 1. For GF(2) this is 1.
    pub fn primitive_element(&self) -> Elem {
        let target = self.t.q as u64 - 1;
        self.elements()
            .skip(1)
            .find(|&a| self.order_unchecked(a) == target)
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.order_unchecked(a))
    }

    fn order_unchecked(&self, a: Elem) -> u64 {
        let n = self.t.q as u64 - 1;
        divisors(n)
            .into_iter()
            .find(|&d| self.pow(a, d) == Elem::ONE)
            .unwrap_or(n)
    }

    pub fn fmt_elem(&self, a: Elem) -> String {
        if self.t.m == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &ci) in c.iter().enumerate().rev() {
            if ci == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            parts.push(match (ci, i) {
                (_, 0) => ci.to_string(),
                (1, _) => var,
                _ => format!("{ci}{var}"),
            });
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    pub fn element(&self, a: Elem) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: a,
        }
    }
}

/// Positive divisors in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

impl Tables {
    fn build(p: u32, m: u32, q: u32, modulus: Vec<u32>) -> Tables {
        let qs = q as usize;
        let to_coeffs = |mut x: u32| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let c = x % p;
                    x /= p;
                    c
                })
                .collect()
        };
        let from_coeffs = |c: &[u32]| -> u8 { c.iter().rev().fold(0u32, |acc, &ci| acc * p + ci) as u8 };
        let coeffs: Vec<Vec<u32>> = (0..q).map(to_coeffs).collect();
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let s: Vec<u32> = coeffs[a]
                    .iter()
                    .zip(&coeffs[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * qs + b] = from_coeffs(&s);
                let mut prod = vec![0u32; 2 * m as usize - 1];
                for (i, x) in coeffs[a].iter().enumerate() {
                    for (j, y) in coeffs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = if m == 1 {
                    prod
                } else {
                    poly_rem(&prod, &modulus, p)
                };
                r.resize(m as usize, 0);
                mul[a * qs + b] = from_coeffs(&r);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8)
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u8
                }
            })
            .collect();
        Tables {
            p,
            m,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        }
    }
}

/// A field element bundled with its field, for callers that want mixed-field
/// mistakes reported instead of silently computing garbage.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    pub field: FieldSpec,
    pub value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.fmt_elem(self.value))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.fmt_elem(self.value))
    }
}

impl FieldElement {
    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.element(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.element(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.field.element(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow(self.value, e))
    }

    pub fn order(&self) -> Result<u64> {
        self.field.element_order(self.value)
    }
}
