pub mod bkcalc;
pub mod branching;
pub mod cache;
pub mod eigencone;
pub mod error;
pub mod linalg;
pub mod rootdata;
pub mod schubert;
pub mod weyl;
