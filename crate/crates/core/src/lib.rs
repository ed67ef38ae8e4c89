//! Exact classification of finitely presented commutative algebras over `Q`
//! and `GF(p)`.
//!
//! Given `A = K[X_1..X_n]/<f_1..f_s>`, the crate decides whether `A` is
//! nette (`Omega_{A/K} = 0`), smooth or étale in the Jacobian sense, computes
//! its Noether dimension, and for zero-dimensional `A` builds the strictly
//! finite algebra, its trace discriminant and a certified decomposition into
//! monogenic separable factors.
//!
//! ```
//! use nette_core::{classify, parse_input, ClassifyOptions};
//!
//! let p = parse_input("field Q\nvars X, Y\nrelations:\n X^2 - 2\n Y^2 - 3\n").unwrap();
//! let r = classify(&p, ClassifyOptions::default()).unwrap();
//! assert!(r.nette && r.etale);
//! assert_eq!(r.decomposition.unwrap(), vec!["T^4 - 10*T^2 + 1".to_string()]);
//! ```

pub mod error;
pub mod field;
pub mod finalg;
pub mod groebner;
pub mod kaehler;
pub mod linalg;
pub mod multipoly;
pub mod parse;
pub mod pipeline;
pub mod unipoly;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use finalg::{AlgebraElement, FiniteAlgebra};
pub use groebner::{GroebnerBasis, GroebnerOptions};
pub use kaehler::AlgebraPresentation;
pub use multipoly::{Monomial, MonomialOrder, MultiPoly, PolyRing};
pub use parse::parse_input;
pub use pipeline::{classify, decompose_etale, ClassificationReport, ClassifyOptions, Section};
pub use unipoly::UniPoly;
