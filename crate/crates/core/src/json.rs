//! JSON input and output documents used by the command-line tool.
//!
//! Inputs:
//! * parameterization `{"p": 3, "m": 1, "n": 8, "monomials": [[2, 1, ...], ...]}`
//! * clutter `{"p": 3, "n": 4, "edges": [[1, 2], [2, 3]]}` with 1-based vertices
//! * generators `{"p": 3, "nvars": 4, "generators": ["t1*t2 - t3*t4", ...]}`,
//!   where a generator may also be `{"terms": [{"coeff": 1, "exp": [1, 1, 0, 0]}]}`
//!   and a coefficient may be an integer or a coefficient vector such as `[1, 1]`
//!   for `a + 1`.
//!
//! `m` defaults to 1. Unknown fields are rejected.

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::classify::ClassificationResult;
use crate::code::CodeParameters;
use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};
use crate::groebner::GroebnerBasis;
use crate::param::{Clutter, ParamSet};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::projective::PointSet;
use crate::vanishing::VanishingIdeal;

fn one() -> u32 {
    1
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ParamSetJson {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    pub n: usize,
    pub monomials: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClutterJson {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum SetInput {
    Params(ParamSetJson),
    Clutter(ClutterJson),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum CoeffJson {
    Int(i64),
    Vector(Vec<u32>),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: CoeffJson,
    pub exp: Vec<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
enum GeneratorInput {
    Text(String),
    Terms(PolynomialJson),
}

#[derive(Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct GeneratorsJson {
    p: u32,
    #[serde(default = "one")]
    m: u32,
    nvars: usize,
    generators: Vec<GeneratorInput>,
}

fn malformed(e: serde_json::Error) -> Error {
    Error::Malformed(e.to_string())
}

/// Reads a parameterization given either by monomials or by a clutter.
pub fn parse_paramset(text: &str) -> Result<ParamSet> {
    match serde_json::from_str::<SetInput>(text).map_err(|_| {
        Error::Malformed(
            "expected {\"p\", \"m\"?, \"n\", \"monomials\"} or {\"p\", \"m\"?, \"n\", \"edges\"}".into(),
        )
    })? {
        SetInput::Params(j) => ParamSet::new(FieldSpec::new(j.p, j.m)?, j.n, j.monomials),
        SetInput::Clutter(j) => {
            let k = FieldSpec::new(j.p, j.m)?;
            Clutter::from_one_based(j.n, &j.edges)?.to_paramset(&k)
        }
    }
}

impl ParamSetJson {
    pub fn from_paramset(ps: &ParamSet) -> Self {
        ParamSetJson {
            p: ps.field().p(),
            m: ps.field().m(),
            n: ps.n(),
            monomials: ps.monomials().iter().map(|v| v.0.clone()).collect(),
        }
    }
}

impl CoeffJson {
    fn to_elem(&self, k: &FieldSpec) -> Result<Elem> {
        match self {
            CoeffJson::Int(c) => Ok(k.from_int(*c)),
            CoeffJson::Vector(v) => k.from_coeffs(v),
        }
    }
}

impl PolynomialJson {
    pub fn to_polynomial(&self, k: &FieldSpec, nvars: usize) -> Result<Polynomial> {
        let mut p = Polynomial::zero(k, nvars);
        for t in &self.terms {
            if t.exp.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: t.exp.len(),
                });
            }
            p.add_term(Monomial(t.exp.clone()), t.coeff.to_elem(k)?);
        }
        Ok(p)
    }

    /// Terms in descending order; prime-field coefficients as integers,
    /// extension-field coefficients as coefficient vectors.
    pub fn from_polynomial(f: &Polynomial, order: MonomialOrder) -> Self {
        let k = f.field();
        let terms = f
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| TermJson {
                coeff: if k.m() == 1 {
                    CoeffJson::Int(c.0 as i64)
                } else {
                    CoeffJson::Vector(k.coeffs(c))
                },
                exp: m.0,
            })
            .collect();
        PolynomialJson { terms }
    }
}

/// Reads explicit generators.
pub fn parse_generators(text: &str) -> Result<Vec<Polynomial>> {
    let j: GeneratorsJson = serde_json::from_str(text).map_err(malformed)?;
    let k = FieldSpec::new(j.p, j.m)?;
    if j.generators.is_empty() {
        return Err(Error::Empty("generator list"));
    }
    j.generators
        .iter()
        .map(|g| match g {
            GeneratorInput::Text(s) => Polynomial::parse(&k, j.nvars, s),
            GeneratorInput::Terms(t) => t.to_polynomial(&k, j.nvars),
        })
        .collect()
}

/// Hilbert function values keyed by degree, in increasing degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable(pub Vec<u64>);

impl Serialize for HilbertTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (d, h) in self.0.iter().enumerate() {
            map.serialize_entry(&d.to_string(), h)?;
        }
        map.end()
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct EnumerateOutput {
    pub count: usize,
    pub points: Vec<String>,
}

impl EnumerateOutput {
    pub fn new(x: &PointSet) -> Self {
        EnumerateOutput {
            count: x.len(),
            points: x.render(),
        }
    }
}

fn render_all(v: &[Polynomial], order: MonomialOrder) -> Vec<String> {
    v.iter().map(|f| f.render(order)).collect()
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct IdealOutput {
    pub points: Vec<String>,
    pub generators: Vec<String>,
    pub reduced_gb: Vec<String>,
    pub hilbert: HilbertTable,
}

impl IdealOutput {
    /// `gb` is the reduced basis to report, normally `vi.gb()`.
    pub fn new(vi: &VanishingIdeal, gb: &GroebnerBasis) -> Self {
        IdealOutput {
            points: vi.source().render(),
            generators: render_all(vi.generators(), MonomialOrder::GRevLex),
            reduced_gb: gb.render(),
            hilbert: HilbertTable(vi.hilbert_table().to_vec()),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassificationOutput {
    pub is_ci: bool,
    pub form: String,
    /// 1-based: `t_i` of the normal form is `t_{permutation[i-1]}`.
    pub permutation: Vec<usize>,
    pub r: Option<u64>,
    pub mu_total: usize,
}

impl ClassificationOutput {
    pub fn new(c: &ClassificationResult) -> Self {
        ClassificationOutput {
            is_ci: c.is_ci,
            form: c.form.name().to_string(),
            permutation: c.permutation.iter().map(|i| i + 1).collect(),
            r: c.r,
            mu_total: c.mu_total,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CodeOutput {
    pub d: u32,
    pub n: usize,
    pub k: usize,
    pub dmin: Option<usize>,
}

impl CodeOutput {
    pub fn new(c: &CodeParameters) -> Self {
        CodeOutput {
            d: c.degree,
            n: c.length,
            k: c.dimension,
            dmin: c.min_distance,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckOutput {
    pub clutter_type: bool,
    pub monoid_closed: bool,
    pub binomial_generated: bool,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct GbOutput {
    pub order: String,
    pub reduced_gb: Vec<String>,
}

impl GbOutput {
    pub fn new(gb: &GroebnerBasis) -> Self {
        GbOutput {
            order: gb.order().name().to_string(),
            reduced_gb: gb.render(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paramset_and_clutter_inputs() {
        let ps = parse_paramset(r#"{"p": 3, "n": 3, "monomials": [[2,2,0],[0,2,2],[2,0,2]]}"#).unwrap();
        assert_eq!(ps.s(), 3);
        assert_eq!(ps.field().q(), 3);
        let c = parse_paramset(r#"{"p": 2, "m": 2, "n": 3, "edges": [[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(c.field().q(), 4);
        assert_eq!(c.monomials()[0].0, vec![1, 1, 0]);
        let round = ParamSetJson::from_paramset(&ps);
        assert_eq!(round.monomials[1], vec![0, 2, 2]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            parse_paramset(r#"{"p": 3, "n": 1, "monomials": [[1]], "extra": 1}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(parse_paramset("not json"), Err(Error::Malformed(_))));
        assert_eq!(
            parse_paramset(r#"{"p": 4, "n": 1, "monomials": [[1]]}"#).unwrap_err(),
            Error::NotPrime(4)
        );
        assert!(parse_paramset(r#"{"p": 3, "n": 2, "edges": [[1, 3]]}"#).is_err());
    }

    #[test]
    fn generators_in_both_notations() {
        let text = r#"{"p": 2, "m": 2, "nvars": 2, "generators": [
            "t1^2 + t2^2",
            {"terms": [{"coeff": [1, 1], "exp": [1, 0]}, {"coeff": 1, "exp": [0, 1]}]}
        ]}"#;
        let g = parse_generators(text).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[1].render(MonomialOrder::GRevLex), "(a+1)*t1 + t2");
        let back = PolynomialJson::from_polynomial(&g[1], MonomialOrder::GRevLex);
        assert_eq!(back.terms[0].coeff, CoeffJson::Vector(vec![1, 1]));
        assert!(parse_generators(r#"{"p": 3, "nvars": 2, "generators": []}"#).is_err());
    }

    #[test]
    fn hilbert_keys_stay_in_degree_order() {
        let t = HilbertTable((0..12).collect());
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"0":0,"1":1,"2":2"#));
        assert!(s.ends_with(r#""10":10,"11":11}"#));
    }
}
