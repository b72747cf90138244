pub mod constructions;
pub mod experiments;
pub mod ffield;
pub mod graph;
pub mod linalg;
pub mod ortho;
pub mod report;
pub mod theta;
