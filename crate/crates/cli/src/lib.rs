pub mod parse;
pub mod report;
pub mod run;

pub use run::run;
