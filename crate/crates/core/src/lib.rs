pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod axioms;
pub mod diagram;
pub mod duality;
pub mod exactla;
pub mod fincat;
pub mod fixture;
pub mod groups;
pub mod rep;
pub mod tannaka;
pub mod verdict;
