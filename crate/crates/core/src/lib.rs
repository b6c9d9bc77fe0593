pub mod generate;
pub mod graph;
pub mod graph6;
pub mod ham;
pub mod matchings;
pub mod metrics;
pub mod pipeline;
pub mod rational;
pub mod recognition;
