//! Vanishing ideals of finite projective sets parameterized by monomials over
//! finite fields, complete-intersection classification and the associated
//! projective Reed-Muller-type codes.

pub mod classify;
pub mod code;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod json;
pub mod linalg;
pub mod mingens;
pub mod param;
pub mod poly;
pub mod projective;
pub mod vanishing;

pub use classify::{classify, is_complete_intersection, ClassificationResult, Form};
pub use code::{code_parameters, generator_matrix, CodeParameters};
pub use error::{Error, Result};
pub use field::{Elem, FieldElement, FieldSpec};
pub use groebner::{buchberger, ideal_equal, GroebnerBasis};
pub use hilbert::{hilbert_function, HilbertSeries};
pub use linalg::Matrix;
pub use param::{Clutter, ExponentVector, ParamSet};
pub use poly::{Monomial, MonomialOrder, Polynomial};
pub use projective::{enumerate_set, PointSet, ProjectivePoint};
pub use vanishing::{vanishing_ideal, VanishingIdeal};
