pub mod catalog;
pub mod cli;
pub mod density;
pub mod error;
pub mod quadrature;
pub mod solver;
pub mod specialfn;
