pub mod cli;
pub mod error;
pub mod grid;
pub mod models;
pub mod oracle;
pub mod similarity;
pub mod specfun;
