pub mod action;
pub mod cli;
pub mod fields;
pub mod groups;
pub mod scalars;
pub mod topology;
pub mod tqft;
