//! Exact computation of root systems of the irreducible finite real
//! reflection groups and of the fake degrees of their root orbits.
//!
//! ```
//! use fakedeg_core::{fakedeg_bfs, OrbitSelector, RootSystem, GroupType};
//!
//! let rs = RootSystem::new(GroupType::A(2)).unwrap();
//! let f = fakedeg_bfs(&rs, &OrbitSelector::All).unwrap();
//! assert_eq!(f.to_string(), "1 + 2*q + 2*q^2 + q^3");
//! ```

pub mod error;
pub mod fakedeg;
pub mod qpoly;
pub mod rootsys;
pub mod scalars;

pub use error::{Error, Result};
pub use fakedeg::{
    crosscheck, csp_check, default_types, fake_degree, fakedeg_bfs, fakedeg_quotient, table_row, verify_all,
    verify_many, ExpectedRow, OrbitSelector, Recipe, TableRow, VerificationReport, VerifyOptions,
};
pub use qpoly::IntPoly;
pub use rootsys::{CoxeterDatum, GroupType, OrbitLabel, RootSystem};
pub use scalars::{FieldSpec, Scalar};
