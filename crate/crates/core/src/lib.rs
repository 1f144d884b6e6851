pub mod beilinson;
pub mod bundles;
pub mod cech;
pub mod chow;
pub mod cohom_vec;
pub mod cohomology;
pub mod error;
pub mod flag;
pub mod les;
pub mod linalg;
pub mod report;
pub mod ulrich;
pub mod weylbott;

pub use bundles::{parse, BoxTerm, BundleExpr, Construction, FactorBundle};
pub use cohom_vec::{Cohom, CohomVector, FlagCohom, P2Cohom};
pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/expressions.md")]
    pub struct Expressions;
    #[doc = include_str!("../../../book/src/bott.md")]
    pub struct Bott;
    #[doc = include_str!("../../../book/src/ulrich.md")]
    pub struct Ulrich;
    #[doc = include_str!("../../../book/src/beilinson.md")]
    pub struct Beilinson;
    #[doc = include_str!("../../../book/src/flag.md")]
    pub struct Flag;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
