pub mod apartment;
pub mod commands;
pub mod compactification;
pub mod error;
pub mod matrix;
pub mod rational;
pub mod sampling;
pub mod plot;
pub mod polyhedral;
pub mod suites;
pub mod symplectic;
pub mod tableaux;
pub mod tropical;
pub mod valued_field;
pub mod weights_fans;
pub mod weyl;
