//! Command-line front end: medal-table ranking, grossone expression
//! evaluation, and lexicographic word comparison.

pub mod app;
pub mod input;
pub mod method;
pub mod render;

pub use app::run;
